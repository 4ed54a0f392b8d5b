#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "modec/digraph.hpp"
#include "modec/errors.hpp"
#include "support/oracles.hpp"

using namespace modec;
using testsupport::Rng;

TEST_CASE("construction sorts, dedups and labels") {
    Digraph g(3, {{2, 0}, {0, 1}, {0, 1}, {0, 2}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(std::vector<VertexId>(g.successors(0).begin(), g.successors(0).end()) ==
          std::vector<VertexId>{1, 2});
    CHECK(g.label(2) == "2");
    CHECK(g.vertex_by_label("1") == VertexId{1});
    CHECK_FALSE(g.vertex_by_label("7").has_value());
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), Error);
    CHECK_THROWS_AS(Digraph(2, {{1, 1}}), SelfLoopError);
    CHECK_THROWS_AS(Digraph(2, {}, {"x", "x"}), Error);
    CHECK_THROWS_AS(Digraph(2, {}, {"x"}), Error);
}

TEST_CASE("accessors validate vertices") {
    Digraph g(2, {{0, 1}});
    CHECK_THROWS_AS(g.successors(2), UnknownVertexError);
    CHECK_THROWS_AS(g.label(9), UnknownVertexError);
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(1, 0));
}

TEST_CASE("equality covers edges and labels") {
    Digraph a(2, {{0, 1}}, {"x", "y"});
    Digraph b(2, {{0, 1}, {0, 1}}, {"x", "y"});
    Digraph c(2, {{0, 1}}, {"x", "z"});
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("inverse and undirected closure") {
    Digraph g(3, {{0, 1}, {2, 1}});
    Digraph inv = inverse(g);
    CHECK(inv.has_edge(1, 0));
    CHECK(inv.has_edge(1, 2));
    CHECK(inv.edge_count() == 2);

    Digraph u = undirected_closure(g);
    CHECK(u.edge_count() == 4);
    CHECK(is_undirected(u));
}

TEST_CASE("complements") {
    Digraph g(3, {{0, 1}});
    Digraph c = complement(g);
    CHECK(c.edge_count() == 5);
    CHECK_FALSE(c.has_edge(0, 1));
    CHECK(c.has_edge(1, 0));
    CHECK(complement(c) == g);

    Digraph uc = undirected_complement(g);
    CHECK(is_undirected(uc));
    CHECK(uc.edge_count() == 4);  // pairs {0,2} and {1,2}
    CHECK(uc.has_edge(0, 2));
    CHECK(uc.has_edge(2, 1));
}

TEST_CASE("transitive closure matches the matrix oracle") {
    Rng rng(1001);
    for (int i = 0; i < 120; ++i) {
        std::size_t n = 1 + static_cast<std::size_t>(i % 8);
        Digraph g = testsupport::random_digraph(rng, n, 0.1 + 0.1 * (i % 8));
        CHECK(transitive_closure(g) == testsupport::closure_oracle(g));
    }
}

TEST_CASE("transitive reduction is minimal and closure preserving") {
    Rng rng(1002);
    int checked = 0;
    for (int i = 0; i < 80; ++i) {
        Digraph g = testsupport::random_dag(rng, 2 + i % 6, 0.4);
        Digraph r = transitive_reduction(g);
        CHECK(transitive_closure(r) == transitive_closure(g));
        // dropping any kept edge must change the closure
        auto kept = r.edges();
        for (std::size_t drop = 0; drop < kept.size(); ++drop) {
            std::vector<Edge> fewer;
            for (std::size_t e = 0; e < kept.size(); ++e)
                if (e != drop) fewer.push_back(kept[e]);
            Digraph smaller(r.vertex_count(), fewer, r.labels());
            CHECK(transitive_closure(smaller) != transitive_closure(g));
            ++checked;
        }
    }
    CHECK(checked > 100);
    CHECK_THROWS_AS(transitive_reduction(Digraph(2, {{0, 1}, {1, 0}})), CyclicInputError);
}

TEST_CASE("predicates match oracles") {
    Rng rng(1003);
    for (int i = 0; i < 100; ++i) {
        Digraph g = testsupport::random_digraph(rng, 1 + i % 7, 0.3);
        CHECK(is_transitive(g) == testsupport::is_transitive_oracle(g));
        CHECK(is_acyclic(g) == testsupport::is_acyclic_oracle(g));
    }
    CHECK(is_oriented(Digraph(2, {{0, 1}})));
    CHECK_FALSE(is_oriented(Digraph(2, {{0, 1}, {1, 0}})));
    CHECK(is_undirected(Digraph(2, {{0, 1}, {1, 0}})));
    CHECK_FALSE(is_undirected(Digraph(2, {{0, 1}})));
}

TEST_CASE("scc contraction of a two-cycle") {
    Digraph g = testsupport::g4();  // A->B, A->C, B<->C
    auto [quotient, blocks] = scc_contract(g);
    CHECK(quotient.vertex_count() == 2);
    CHECK(quotient.edge_count() == 1);
    VertexId a = *quotient.vertex_by_label("A");
    VertexId bc = *quotient.vertex_by_label("B+C");
    CHECK(quotient.has_edge(a, bc));
    CHECK(blocks.blocks.size() == 2);
}

TEST_CASE("scc contraction properties on random graphs") {
    Rng rng(1004);
    for (int i = 0; i < 60; ++i) {
        Digraph g = testsupport::random_digraph(rng, 1 + i % 8, 0.35);
        auto [quotient, blocks] = scc_contract(g);
        CHECK(is_acyclic(quotient));
        auto reach = testsupport::reach_matrix(g);
        // two vertices share a block iff mutually reachable
        std::vector<std::size_t> block_of(g.vertex_count());
        for (std::size_t b = 0; b < blocks.blocks.size(); ++b)
            for (VertexId v : blocks.blocks[b]) block_of[v] = b;
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (u == v) continue;
                bool mutual = reach[u][v] && reach[v][u];
                CHECK(mutual == (block_of[u] == block_of[v]));
            }
    }
}

TEST_CASE("induced subgraph reindexes and keeps labels") {
    Digraph g = testsupport::g1();
    VertexId b = *g.vertex_by_label("B");
    VertexId c = *g.vertex_by_label("C");
    Digraph sub = induced_subgraph(g, {c, b});
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.label(0) == "B");
    CHECK(sub.label(1) == "C");
    CHECK(sub.has_edge(0, 1));
    CHECK(sub.has_edge(1, 0));
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition::over(3, {{0, 1}}), Error);           // not covering
    CHECK_THROWS_AS(Partition::over(3, {{0, 1}, {1, 2}}), Error);   // overlapping
    CHECK_THROWS_AS(Partition::over(2, {{0, 1, 2}}), Error);        // out of range
    CHECK(Partition::over(3, {{2}, {0, 1}}).blocks.size() == 2);
}
