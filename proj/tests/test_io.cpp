#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modec/digraph.hpp"
#include "modec/errors.hpp"
#include "modec/io.hpp"
#include "support/oracles.hpp"

using namespace modec;

TEST_CASE("basic edge list parsing") {
    Digraph g = parse_edge_list("A B\nB C\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.label(0) == "A");
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
}

TEST_CASE("comments, blanks, declarations and carriage returns") {
    Digraph g = parse_edge_list("# header\n\nA B # trailing\nlonely\r\nA B\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.label(2) == "lonely");
}

TEST_CASE("ids follow first appearance") {
    Digraph g = parse_edge_list("X Y\nZ X\n");
    CHECK(g.label(0) == "X");
    CHECK(g.label(1) == "Y");
    CHECK(g.label(2) == "Z");
}

TEST_CASE("parse failures carry line numbers") {
    CHECK_THROWS_AS(parse_edge_list("A B C\n"), ParseError);
    try {
        parse_edge_list("A B\nQ Q\n");
        FAIL("expected SelfLoopError");
    } catch (const SelfLoopError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("Q") != std::string::npos);
    }
    try {
        parse_edge_list("ok ok2\na b c d\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("serialization golden") {
    Digraph g(3, {{2, 0}, {0, 1}}, {"A", "B", "C"});
    CHECK(serialize_edge_list(g) == "A\nB\nC\nA B\nC A\n");
}

TEST_CASE("round trip on random graphs") {
    testsupport::Rng rng(2001);
    for (int i = 0; i < 80; ++i) {
        Digraph g = testsupport::random_digraph(rng, 1 + i % 9, 0.3);
        CHECK(parse_edge_list(serialize_edge_list(g)) == g);
    }
    CHECK(parse_edge_list(serialize_edge_list(testsupport::g1())) == testsupport::g1());
}

TEST_CASE("dot export escapes and lists edges") {
    Digraph g(2, {{0, 1}}, {"a\"b", "c\\d"});
    std::string dot = to_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\\\"") != std::string::npos);
    CHECK(dot.find("\\\\") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}
