#include <doctest.h>

#include "fixtures.hpp"
#include "pathrdf/oracle.hpp"
#include "pathrdf/path_eval.hpp"
#include "pathrdf/path_parser.hpp"
#include "pathrdf/rewrite.hpp"

using namespace pathrdf;

namespace {

std::set<TermPair> automaton_pairs(const Graph& g, const PathExprPtr& e) {
    PathEvaluator ev(g);
    return ev.eval_all_pairs(e);
}

}  // namespace

TEST_CASE("path parser round-trips its own serialization") {
    for (const char* text : {
             "next",
             "next^-1",
             "edge^-1",
             "node",
             "self",
             "next::sc",
             "(next::sc)+",
             "(next::sp)*/self::ex:transport",
             "next::[(next::sp)*/self::ex:transport]",
             "next::type/(next::sc)*|edge/(next::sp)*/next::dom/(next::sc)*",
             "next::[?x:{?x (next::sp)* ex:p}]",
             "next::]?p:TRUE[",
             "self::[?s:{?n next::ex:s ?s} FILTER(?s > 3)]",
             "a|b/c",
             "(a|b)/c",
             "!ex:p",
             "?r",
             "eps",
             "a+/b*",
         }) {
        PathExprPtr e = parse_path_any(text);
        PathExprPtr again = parse_path_any(to_string(e));
        CHECK(expr_equal(e, again));
    }
}

TEST_CASE("prefix inversion composes with the suffix form") {
    CHECK(expr_equal(parse_path_any("^next"), parse_path_any("next^-1")));
    CHECK(expr_equal(parse_path_any("^next^-1"), parse_path_any("next")));
    CHECK(expr_equal(parse_path_any("self^-1"), parse_path_any("self")));
}

TEST_CASE("dialect membership") {
    PathExprPtr atom = parse_path_any("(a|b)+");
    PathExprPtr nested = parse_path_any("next::[next::b]");
    PathExprPtr constrained = parse_path_any("next::[?x:{?x (next::sp)* ex:p}]");
    PathExprPtr open = parse_path_any("next::]?p:TRUE[");

    CHECK(in_dialect(atom, Dialect::Psparql));
    CHECK(!in_dialect(atom, Dialect::Nsparql));
    CHECK(in_dialect(nested, Dialect::Nsparql));
    CHECK(!in_dialect(nested, Dialect::Psparql));
    CHECK(in_dialect(constrained, Dialect::Cpsparql));
    CHECK(in_dialect(open, Dialect::Cpsparql));
    CHECK(!in_dialect(constrained, Dialect::Nsparql));
    CHECK_THROWS_AS(check_dialect(atom, Dialect::Nsparql), DialectError);

    // a two-triple body is full CPSPARQL, not the restricted fragment
    PathExprPtr full = parse_path_any("next::[?x:{?x next::a ?y . ?y next::b ?z}]");
    CHECK(!in_dialect(full, Dialect::Cpsparql));
    CHECK(in_dialect(full, Dialect::CpsparqlFull));
}

TEST_CASE("psparql mode reads axis names as plain atoms") {
    PathExprPtr e = parse_path("next", Dialect::Psparql);
    CHECK(e->kind == PathExpr::Kind::Atom);
    CHECK(e->term == Term::iri("next"));
}

TEST_CASE("plane reachability on the travel graph") {
    Graph t = testutil::travel();
    auto pairs = automaton_pairs(t, parse_path_any("(next::ex:plane)+"));
    std::set<TermPair> expected = {
        {Term::iri("ex:Madrid"), Term::iri("ex:Paris")},
        {Term::iri("ex:Madrid"), Term::iri("ex:Amman")},
        {Term::iri("ex:Madrid"), Term::iri("ex:Roma")},
        {Term::iri("ex:Paris"), Term::iri("ex:Amman")},
        {Term::iri("ex:Paris"), Term::iri("ex:Roma")},
        {Term::iri("ex:Roma"), Term::iri("ex:Amman")},
    };
    CHECK(pairs == expected);
}

TEST_CASE("subproperty closure of transport via self test") {
    Graph t = testutil::travel();
    PathEvaluator ev(t);
    std::set<Term> nodes = ev.satisfying_nodes(parse_path_any("(next::sp)*/self::ex:transport"));
    CHECK(nodes == std::set<Term>{Term::iri("ex:TGV"), Term::iri("ex:train"),
                                  Term::iri("ex:plane"), Term::iri("ex:transport")});
}

TEST_CASE("subproperties of regulates on the gene schema") {
    Graph g = testutil::genes_with_schema();
    PathEvaluator ev(g);
    std::set<Term> nodes = ev.satisfying_nodes(parse_path_any("(next::sp)*/self::rn:regulates"));
    CHECK(nodes == std::set<Term>{Term::iri("rn:inhibits"), Term::iri("rn:promotes"),
                                  Term::iri("rn:inhibits_translation"),
                                  Term::iri("rn:inhibits_transcription"),
                                  Term::iri("rn:regulates")});
}

TEST_CASE("star of an absent label is the identity on the vocabulary") {
    Graph t = testutil::travel();
    auto pairs = automaton_pairs(t, parse_path_any("(next::ex:zzz)*"));
    std::set<TermPair> expected;
    for (const Term& u : t.vocabulary()) expected.insert({u, u});
    CHECK(pairs == expected);
    CHECK(automaton_pairs(t, parse_path_any("eps")) == expected);
}

TEST_CASE("filter constraint keeps only large targets") {
    Graph g = parse_ntriples("ex:u ex:s 2 .\nex:v ex:s 4 .\n");
    auto e = parse_path_any("self::[?s:{?n next::ex:s ?s} FILTER(?s > 3)]");
    std::set<TermPair> expected = {{Term::iri("ex:v"), Term::iri("ex:v")}};
    CHECK(automaton_pairs(g, e) == expected);
    CHECK(naive_path_eval(g, e) == expected);
}

TEST_CASE("automaton agrees with the denotational oracle on fixtures") {
    for (const char* text : {
             "next",
             "next^-1",
             "edge",
             "edge^-1",
             "node",
             "node^-1",
             "self",
             "next::ex:plane/next::ex:plane",
             "(next::ex:plane|next::ex:TGV)+",
             "(next::[(next::sp)*/self::ex:transport])+",
             "next::[?x:{?x (next::sp)* ex:transport}]",
             "edge::ex:Paris",
             "next::ex:cityIn/next::ex:cityIn^-1",
         }) {
        PathExprPtr e = parse_path_any(text);
        Graph t = testutil::travel();
        CHECK_MESSAGE(automaton_pairs(t, e) == naive_path_eval(t, e), text);
        Graph g = testutil::genes_with_schema();
        CHECK_MESSAGE(automaton_pairs(g, e) == naive_path_eval(g, e), text);
    }
}

TEST_CASE("automaton agrees with the oracle on random graphs and expressions") {
    std::mt19937 rng(11);
    RandomGraphConfig gc;
    gc.nodes = 8;
    gc.edges = 16;
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(rng, gc);
        std::vector<Term> labels = g.predicates();
        if (labels.empty()) continue;
        PathExprPtr e = random_nested_expr(rng, 3, labels);
        CHECK_MESSAGE(automaton_pairs(g, e) == naive_path_eval(g, e), to_string(e));
    }
}

TEST_CASE("regular-expression laws hold on the travel graph") {
    Graph t = testutil::travel();
    PathExprPtr e = parse_path_any("next::ex:plane|next::ex:TGV");
    CHECK(automaton_pairs(t, PathExpr::alt(e, e)) == automaton_pairs(t, e));
    CHECK(automaton_pairs(t, PathExpr::star(PathExpr::star(e))) ==
          automaton_pairs(t, PathExpr::star(e)));
    CHECK(automaton_pairs(t, PathExpr::plus(e)) ==
          automaton_pairs(t, PathExpr::seq(e, PathExpr::star(e))));
    // inversion swaps the pairs
    auto fwd = automaton_pairs(t, parse_path_any("next::ex:plane"));
    auto bwd = automaton_pairs(t, parse_path_any("next^-1::ex:plane"));
    std::set<TermPair> swapped;
    for (const auto& [a, b] : fwd) swapped.insert({b, a});
    CHECK(bwd == swapped);
}

TEST_CASE("trans maps nested expressions to equivalent constrained ones") {
    SUBCASE("plain steps are untouched") {
        PathExprPtr e = parse_path_any("next::a");
        CHECK(expr_equal(trans(e), e));
    }
    SUBCASE("self-test nesting becomes a one-triple constraint") {
        PathExprPtr e = parse_path_any("(next::[(next::sp)*/self::ex:transport])+");
        PathExprPtr expected = parse_path_any("(next::[?x:{?x (next::sp)* ex:transport}])+");
        CHECK(expr_equal(trans(e), expected));
    }
    SUBCASE("general nesting introduces a local object variable") {
        PathExprPtr e = parse_path_any("next::[next::b]");
        CHECK(to_string(trans(e)) == "next::[?x:{?x next::b ?y}]");
    }
    SUBCASE("output lands in the restricted constraint fragment") {
        std::mt19937 rng(23);
        Graph t = testutil::travel();
        std::vector<Term> labels = t.predicates();
        for (int i = 0; i < 40; ++i) {
            PathExprPtr e = random_nested_expr(rng, 3, labels);
            PathExprPtr c = trans(e);
            CHECK(is_cpsparql(c));
            CHECK_MESSAGE(automaton_pairs(t, e) == automaton_pairs(t, c), to_string(e));
        }
    }
}
