#include <doctest.h>

#include <functional>

#include "fixtures.hpp"
#include "pathrdf/engine.hpp"
#include "pathrdf/oracle.hpp"
#include "pathrdf/query_parser.hpp"
#include "pathrdf/rewrite.hpp"

using namespace pathrdf;

namespace {

const char* kGeneQuery =
    "SELECT ?x ?y ?z WHERE { ?x rn:inhibits ?y . ?x rn:promotes ?z . "
    "?y rn:regulates ?z . ?x rdf:type rn:gene . }";

AnswerSet expected_rdfs_answers() {
    auto row = [](const char* x, const char* y, const char* z) {
        return Map{{"x", Term::iri(x)}, {"y", Term::iri(y)}, {"z", Term::iri(z)}};
    };
    return {row("dm:bcd", "dm:tll", "dm:Kr"), row("dm:hb", "dm:kni", "dm:Kr"),
            row("dm:bcd", "dm:cad", "dm:kni")};
}

}  // namespace

TEST_CASE("query parser round-trips through the serializer") {
    for (const char* text : {
             kGeneQuery,
             "SELECT ?x WHERE { ?x rn:p ?y . { ?x rn:q ?z . } UNION { ?x rn:r ?z . } }",
             "SELECT ?x ?n WHERE { ?x rn:p ?y . OPTIONAL { ?x rn:name ?n . } }",
             "SELECT ?x WHERE { ?x rn:p ?y . FILTER(?y > 3) }",
             "SELECT ?a ?b WHERE { ?a (next::ex:plane)+ ?b . }",
             "SELECT ?s ?p ?o WHERE { ?s ?p ?o . }",
         }) {
        Query q = parse_query(text);
        Query again = parse_query(to_string(q));
        CHECK(to_string(q) == to_string(again));
    }
}

TEST_CASE("query parser rejects malformed input") {
    CHECK_THROWS_AS(parse_query("SELECT WHERE { ?x rn:p ?y . }"), ParseError);
    CHECK_THROWS_AS(parse_query("SELECT ?x { ?x rn:p ?y . }"), ParseError);
    CHECK_THROWS_AS(parse_query("SELECT ?x WHERE { ?x rn:p ?y "), ParseError);
    CHECK_THROWS_AS(parse_query("SELECT ?x WHERE { \"lit\" rn:p ?y . }"), ParseError);
}

TEST_CASE("select variables must occur in the pattern") {
    Graph g = testutil::genes();
    CHECK_THROWS_AS(answer_query(parse_query("SELECT ?zz WHERE { ?x rn:p ?y . }"), g),
                    ParseError);
}

TEST_CASE("simple evaluation of the gene query") {
    Graph g = testutil::genes();
    AnswerSet a = answer_query(parse_query(kGeneQuery), g);
    REQUIRE(a.size() == 1);
    const Map& m = *a.begin();
    CHECK(m.at("x") == Term::iri("dm:bcd"));
    CHECK(m.at("y") == Term::iri("dm:tll"));
    CHECK(m.at("z") == Term::iri("dm:Kr"));
}

TEST_CASE("all rdfs strategies return the three documented answers") {
    Graph g = testutil::genes_with_schema();
    Query q = parse_query(kGeneQuery);
    for (EntailmentMode mode :
         {EntailmentMode::RdfsClosure, EntailmentMode::RdfsPsparql, EntailmentMode::RdfsNsparql,
          EntailmentMode::RdfsCpsparql}) {
        CHECK_MESSAGE(answers_with_mode(q, g, mode) == expected_rdfs_answers(),
                      to_string(mode));
    }
    // and the plain reading still finds only the explicit match
    CHECK(answers_with_mode(q, g, EntailmentMode::Simple).size() == 1);
}

TEST_CASE("type membership modulo the schema") {
    Graph g = testutil::genes_with_schema();
    Query q = parse_query("SELECT ?g WHERE { ?g rdf:type rn:gene . }");
    std::set<Term> expected = {Term::iri("dm:bcd"), Term::iri("dm:cad"), Term::iri("dm:hb"),
                               Term::iri("dm:kni"), Term::iri("dm:Kr"), Term::iri("dm:tll")};
    for (EntailmentMode mode :
         {EntailmentMode::RdfsClosure, EntailmentMode::RdfsPsparql, EntailmentMode::RdfsNsparql,
          EntailmentMode::RdfsCpsparql}) {
        std::set<Term> got;
        for (const Map& m : answers_with_mode(q, g, mode)) got.insert(*m.at("g"));
        CHECK_MESSAGE(got == expected, to_string(mode));
    }
}

TEST_CASE("compound patterns against the brute-force reference") {
    Graph g = testutil::genes();
    for (const char* text : {
             "SELECT ?x ?z ?w WHERE { ?x rn:promotes ?z . ?z rn:inhibits ?w . }",
             "SELECT ?x ?y WHERE { { ?x rn:inhibits ?y . } UNION { ?x rn:promotes ?y . } }",
             "SELECT ?x ?y ?w WHERE { ?x rn:promotes ?y . OPTIONAL { ?y rn:inhibits ?w . } }",
             "SELECT ?x ?y WHERE { ?x rn:regulates ?y . FILTER(bound(?x)) }",
             "SELECT ?x ?y WHERE { ?x ?p ?y . FILTER(?p = rn:regulates) }",
             "SELECT ?a ?b WHERE { ?a (rn:promotes|rn:inhibits)+ ?b . }",
         }) {
        Query q = parse_query(text);
        PathEvaluator ev(g);
        CHECK_MESSAGE(eval_pattern(ev, *q.where) == naive_pattern_eval(g, *q.where), text);
    }
}

TEST_CASE("the documented two-step pattern has three matches") {
    Graph g = testutil::genes();
    Query q = parse_query("SELECT ?x ?z ?w WHERE { ?x rn:promotes ?z . ?z rn:inhibits ?w . }");
    auto row = [](const char* x, const char* z, const char* w) {
        return Map{{"x", Term::iri(x)}, {"z", Term::iri(z)}, {"w", Term::iri(w)}};
    };
    AnswerSet expected = {row("dm:bcd", "dm:hb", "dm:kni"), row("dm:bcd", "dm:kni", "dm:Kr"),
                          row("dm:cad", "dm:kni", "dm:Kr")};
    CHECK(answer_query(q, g) == expected);
}

TEST_CASE("optional completes missing bindings with null") {
    Graph g = parse_ntriples("ex:a ex:p ex:b .\nex:b ex:q ex:c .\n");
    Query q = parse_query("SELECT ?x ?y ?w WHERE { ?x ex:p ?y . OPTIONAL { ?y ex:q ?w . } }");
    AnswerSet a = answer_query(q, g);
    REQUIRE(a.size() == 1);
    CHECK(a.begin()->at("w") == Term::iri("ex:c"));

    Graph g2 = parse_ntriples("ex:a ex:p ex:b .\n");
    AnswerSet a2 = answer_query(q, g2);
    REQUIRE(a2.size() == 1);
    CHECK(a2.begin()->at("w") == std::nullopt);
}

TEST_CASE("engine matches the reference on random graphs and queries") {
    std::mt19937 rng(31);
    RandomGraphConfig gc;
    gc.nodes = 6;
    gc.edges = 12;
    gc.properties = 3;
    gc.classes = 2;
    for (int i = 0; i < 25; ++i) {
        Graph g = random_graph(rng, gc);
        Query q = random_bgp_query(rng, g, 2);
        PathEvaluator ev(g);
        CHECK_MESSAGE(eval_pattern(ev, *q.where) == naive_pattern_eval(g, *q.where),
                      to_string(q));
    }
}

TEST_CASE("rewriting to regular-expression patterns") {
    Query q = parse_query(kGeneQuery);
    SUBCASE("tau splits ordinary predicates into an edge variable") {
        Query r = rewrite_query(q, RewriteMode::PsparqlTau);
        std::string text = to_string(r);
        CHECK(text.find("sp* rn:inhibits") != std::string::npos);
        CHECK(text.find("UNION") != std::string::npos);  // the type triple expands
        // answers are unchanged relative to the closure strategy
        Graph g = testutil::genes_with_schema();
        CHECK(answer_query(parse_query(to_string(r)), g) == expected_rdfs_answers());
    }
    SUBCASE("phi emits nested steps") {
        Query r = rewrite_query(q, RewriteMode::NsparqlPhi);
        CHECK(to_string(r).find("next::[(next::sp)*/self::rn:inhibits]") != std::string::npos);
    }
    SUBCASE("tau_cp emits constrained steps inside the restricted fragment") {
        Query r = rewrite_query(q, RewriteMode::CpsparqlTau);
        for (const TriplePattern& t : r.where->bgp) CHECK(is_cpsparql(t.pred));
    }
    SUBCASE("rewritten queries parse back") {
        for (RewriteMode mode :
             {RewriteMode::PsparqlTau, RewriteMode::NsparqlPhi, RewriteMode::CpsparqlTau}) {
            Query r = rewrite_query(q, mode);
            CHECK(to_string(parse_query(to_string(r))) == to_string(r));
        }
    }
}

TEST_CASE("variable predicates and the rewriting modes") {
    Query q = parse_query("SELECT ?s ?p ?o WHERE { ?s ?p ?o . }");
    CHECK_THROWS_AS(rewrite_query(q, RewriteMode::NsparqlPhi), DialectError);
    Query cp = rewrite_query(q, RewriteMode::CpsparqlTau);
    CHECK(to_string(cp).find("next::]?p:TRUE[") != std::string::npos);
    Query ps = rewrite_query(q, RewriteMode::PsparqlTau);
    CHECK(to_string(ps) == to_string(q));  // passes through untouched

    Graph g = testutil::genes();
    AnswerSet direct = answer_query(q, g);
    CHECK(answer_query(cp, g) == direct);
    CHECK(direct.size() == g.size());
}

TEST_CASE("rewriting preserves the operator skeleton") {
    Query q = parse_query(
        "SELECT ?x WHERE { ?x rn:p ?y . { ?x rn:q ?z . } UNION { ?x rn:r ?z . } "
        "OPTIONAL { ?z rn:s ?w . } FILTER(bound(?x)) }");
    std::function<std::string(const GraphPattern&)> skeleton =
        [&](const GraphPattern& p) -> std::string {
        switch (p.kind) {
            case GraphPattern::Kind::Bgp: return "B";
            case GraphPattern::Kind::And:
                return "(" + skeleton(*p.left) + "&" + skeleton(*p.right) + ")";
            case GraphPattern::Kind::Union:
                return "(" + skeleton(*p.left) + "|" + skeleton(*p.right) + ")";
            case GraphPattern::Kind::Opt:
                return "(" + skeleton(*p.left) + "?" + skeleton(*p.right) + ")";
            case GraphPattern::Kind::Filter: return skeleton(*p.left) + "F";
        }
        return "";
    };
    for (RewriteMode mode : {RewriteMode::NsparqlPhi, RewriteMode::CpsparqlTau}) {
        Query r = rewrite_query(q, mode);
        CHECK(skeleton(*r.where) == skeleton(*q.where));
    }
}

TEST_CASE("simple answers are contained in every rdfs strategy") {
    Graph g = testutil::genes_with_schema();
    Query q = parse_query(kGeneQuery);
    AnswerSet simple = answers_with_mode(q, g, EntailmentMode::Simple);
    for (EntailmentMode mode :
         {EntailmentMode::RdfsClosure, EntailmentMode::RdfsPsparql, EntailmentMode::RdfsNsparql,
          EntailmentMode::RdfsCpsparql}) {
        AnswerSet a = answers_with_mode(q, g, mode);
        for (const Map& m : simple) CHECK(a.count(m) == 1);
    }
}
