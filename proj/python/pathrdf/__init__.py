"""Path-expression query answering over RDF graphs.

Thin wrapper over the native module. The extension lives inside the
package in wheel installs and next to it in development builds.
"""

try:
    from ._pathrdf import (
        DialectError,
        QueryParseError,
        answer,
        closure,
        eval_path,
        rewrite,
    )
except ImportError:  # development build: extension on sys.path
    from _pathrdf import (
        DialectError,
        QueryParseError,
        answer,
        closure,
        eval_path,
        rewrite,
    )

__all__ = [
    "DialectError",
    "QueryParseError",
    "answer",
    "closure",
    "eval_path",
    "rewrite",
]
