import os

import pytest

import pathrdf

HERE = os.path.dirname(__file__)
DATA = os.path.join(HERE, "..", "data")


def load(name):
    with open(os.path.join(DATA, name)) as f:
        return f.read()


GENE_QUERY = """
SELECT ?x ?y ?z WHERE {
  ?x rn:inhibits ?y .
  ?x rn:promotes ?z .
  ?y rn:regulates ?z .
  ?x rdf:type rn:gene .
}
"""


def test_simple_answer():
    rows = pathrdf.answer(load("genes.nt"), GENE_QUERY)
    assert rows == [{"x": "dm:bcd", "y": "dm:tll", "z": "dm:Kr"}]


def test_rdfs_answers_agree_across_strategies():
    data = load("genes.nt") + load("genes_schema.nt")
    expected = [
        {"x": "dm:bcd", "y": "dm:cad", "z": "dm:kni"},
        {"x": "dm:bcd", "y": "dm:tll", "z": "dm:Kr"},
        {"x": "dm:hb", "y": "dm:kni", "z": "dm:Kr"},
    ]
    for mode in ("rdfs-closure", "rdfs-psparql", "rdfs-nsparql", "rdfs-cpsparql"):
        rows = pathrdf.answer(data, GENE_QUERY, mode)
        assert sorted(rows, key=sorted) == expected, mode


def test_closure_derives_subproperty_triple():
    closed = pathrdf.closure(load("genes.nt") + load("genes_schema.nt"))
    assert "dm:hb rn:regulates dm:kni ." in closed.splitlines()


def test_eval_path_plane_pairs():
    pairs = pathrdf.eval_path(load("travel.nt"), "(next::ex:plane)+")
    assert ("ex:Paris", "ex:Amman") in pairs
    assert len(pairs) == 6


def test_rewrite_and_dialect_error():
    out = pathrdf.rewrite("SELECT ?x WHERE { ?x rn:inhibits ?x . }", "nsparql-phi")
    assert "next::[(next::sp)*/self::rn:inhibits]" in out
    with pytest.raises(pathrdf.DialectError):
        pathrdf.rewrite("SELECT ?s WHERE { ?s ?p ?o . }", "nsparql-phi")


def test_parse_error():
    with pytest.raises(pathrdf.QueryParseError):
        pathrdf.answer("", "SELECT WHERE { }")
