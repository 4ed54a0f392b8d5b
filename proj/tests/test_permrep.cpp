#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "modec/digraph.hpp"
#include "modec/errors.hpp"
#include "modec/permrep.hpp"
#include "support/oracles.hpp"

using namespace modec;

namespace {

std::vector<VertexId> seq_by_labels(const Digraph& g, const std::string& labels) {
    std::vector<VertexId> out;
    for (char c : labels) out.push_back(*g.vertex_by_label(std::string(1, c)));
    return out;
}

/// A transitive orientation of the closed complement of the second example,
/// seeded with B->C.
EdgeOrientation seeded_orientation(const Digraph& g) {
    auto e = [&](const char* a, const char* b) {
        return Edge{*g.vertex_by_label(a), *g.vertex_by_label(b)};
    };
    EdgeOrientation o{{e("B", "C"), e("B", "D"), e("B", "F"), e("C", "D"), e("C", "F"),
                       e("E", "D"), e("E", "F")}};
    std::sort(o.edges.begin(), o.edges.end());
    return o;
}

}  // namespace

TEST_CASE("linear orders invert their sequences") {
    LinearOrder o = LinearOrder::of({2, 0, 1});
    CHECK(o.position[2] == 0);
    CHECK(o.position[0] == 1);
    CHECK(o.position[1] == 2);
    CHECK_THROWS_AS(LinearOrder::of({0, 0}), Error);
    CHECK_THROWS_AS(LinearOrder::of({0, 5}), Error);
}

TEST_CASE("linearization goldens for the second example") {
    Digraph g = testsupport::g2();
    Digraph gstar = transitive_closure(g);
    EdgeOrientation o = seeded_orientation(g);
    CHECK(linearize(gstar, o).sequence == seq_by_labels(g, "ABCEDF"));
    CHECK(linearize(gstar, inverse(o)).sequence == seq_by_labels(g, "ADFCBE"));
}

TEST_CASE("a total order linearizes to itself") {
    Digraph chain(3, {{0, 1}, {1, 2}, {0, 2}});
    LinearOrder o = linearize(chain, EdgeOrientation{});
    CHECK(o.sequence == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("linearization failures") {
    Digraph two(2, {});
    CHECK_THROWS_AS(linearize(two, EdgeOrientation{}), NotTotalError);
    Digraph one_edge(2, {{0, 1}});
    CHECK_THROWS_AS(linearize(one_edge, EdgeOrientation{{{1, 0}}}), CyclicInputError);
}

TEST_CASE("building rejects cyclic inputs") {
    CHECK_THROWS_AS(build_permrep(Digraph(2, {{0, 1}, {1, 0}})), CyclicInputError);
}

TEST_CASE("queries on the second example") {
    PermRep pr = build_permrep(testsupport::g2());
    Digraph g = testsupport::g2();
    auto id = [&](const char* l) { return *g.vertex_by_label(l); };
    CHECK(reachable(pr, id("A"), id("F")));
    CHECK_FALSE(reachable(pr, id("B"), id("D")));
    CHECK_FALSE(reachable(pr, id("D"), id("B")));
    CHECK_FALSE(reachable(pr, id("A"), id("A")));
    CHECK_THROWS_AS(reachable(pr, 0, 77), UnknownVertexError);
}

TEST_CASE("swapping the primary orientation swaps the two orders") {
    Digraph g = testsupport::g2();
    Digraph gstar = transitive_closure(g);
    EdgeOrientation o = seeded_orientation(g);
    CHECK(linearize(gstar, o).sequence == linearize(gstar, inverse(inverse(o))).sequence);
    CHECK(linearize(gstar, inverse(o)).sequence ==
          seq_by_labels(g, "ADFCBE"));  // the secondary order, used as primary
}

TEST_CASE("intersection identity against the reachability oracle") {
    testsupport::Rng rng(7001);
    int built = 0;
    for (int i = 0; i < 80 && built < 50; ++i) {
        Digraph g = testsupport::random_dag(rng, 1 + i % 9, 0.1 + 0.1 * (i % 8));
        PermRep pr;
        try {
            pr = build_permrep(g);
        } catch (const Error&) {
            continue;  // closed complement not orientable
        }
        ++built;
        auto reach = testsupport::reach_matrix(g);
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                if (u == v) continue;
                CHECK(reachable(pr, u, v) == static_cast<bool>(reach[u][v]));
                const bool both_ways = reachable(pr, u, v) && reachable(pr, v, u);
                CHECK_FALSE(both_ways);
            }
        // both orders are linear extensions of the closure
        for (const Edge& e : transitive_closure(g).edges()) {
            CHECK(pr.l1.position[e.src] < pr.l1.position[e.dst]);
            CHECK(pr.l2.position[e.src] < pr.l2.position[e.dst]);
        }
    }
    CHECK(built >= 40);
}

TEST_CASE("queries reduce to two rank comparisons") {
    PermRep pr = build_permrep(testsupport::g2());
    const std::size_t n = pr.labels.size();
    REQUIRE(pr.l1.sequence.size() == n);
    REQUIRE(pr.l1.position.size() == n);
    REQUIRE(pr.l2.position.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(pr.l1.position[pr.l1.sequence[i]] == i);
        CHECK(pr.l2.position[pr.l2.sequence[i]] == i);
    }
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
            if (u != v)
                CHECK(reachable(pr, u, v) == (pr.l1.position[u] < pr.l1.position[v] &&
                                              pr.l2.position[u] < pr.l2.position[v]));
}
