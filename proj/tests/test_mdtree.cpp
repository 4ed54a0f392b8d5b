#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "modec/digraph.hpp"
#include "modec/errors.hpp"
#include "modec/mdtree.hpp"
#include "modec/oracle.hpp"
#include "support/oracles.hpp"

using namespace modec;

namespace {

std::set<std::vector<VertexId>> node_sets(const MDTree& t) {
    std::set<std::vector<VertexId>> out;
    for (std::uint32_t i = 0; i < t.node_count(); ++i) out.insert(t.node(i).vertex_set);
    return out;
}

std::set<std::vector<VertexId>> to_set(const std::vector<ModuleSet>& mods) {
    return {mods.begin(), mods.end()};
}

}  // namespace

TEST_CASE("build validates shape") {
    std::vector<std::string> labels{"a", "b"};
    MDNode leaf0{NodeKind::Leaf, 0, {}, {}};
    MDNode leaf1{NodeKind::Leaf, 1, {}, {}};
    MDNode root{NodeKind::Series, 0, {1, 2}, {}};
    CHECK(MDTree::build({root, leaf0, leaf1}, 0, labels).leaf_count() == 2);

    MDNode lonely{NodeKind::Series, 0, {1}, {}};
    CHECK_THROWS_AS(MDTree::build({lonely, leaf0}, 0, labels), Error);
    MDNode out_of_range{NodeKind::Leaf, 9, {}, {}};
    CHECK_THROWS_AS(MDTree::build({out_of_range}, 0, {"a"}), Error);
    MDNode cyc{NodeKind::Series, 0, {0, 1}, {}};
    CHECK_THROWS_AS(MDTree::build({cyc, leaf0}, 0, labels), Error);
    MDNode dup{NodeKind::Series, 0, {1, 1}, {}};
    CHECK_THROWS_AS(MDTree::build({dup, leaf0}, 0, labels), Error);
}

TEST_CASE("build canonicalizes child order") {
    std::vector<std::string> labels{"a", "b", "c"};
    MDNode l0{NodeKind::Leaf, 0, {}, {}};
    MDNode l1{NodeKind::Leaf, 1, {}, {}};
    MDNode l2{NodeKind::Leaf, 2, {}, {}};
    MDTree a = MDTree::build({{NodeKind::Parallel, 0, {1, 2, 3}, {}}, l0, l1, l2}, 0, labels);
    MDTree b = MDTree::build({{NodeKind::Parallel, 0, {3, 1, 2}, {}}, l2, l0, l1}, 0, labels);
    CHECK(a == b);

    // ordered children keep their sequence instead
    MDTree c = MDTree::build({{NodeKind::Ordered, 0, {1, 2, 3}, {}}, l2, l0, l1}, 0, labels);
    CHECK(to_text(c) == "ordered[c < a < b]");
}

TEST_CASE("decomposition goldens for the worked examples") {
    CHECK(to_text(decompose_digraph(testsupport::g1())) ==
          "prime[ordered[A < D < G], series[B, C], parallel[E, F], H]");
    CHECK(to_text(decompose_undirected(undirected_closure(testsupport::g3()))) ==
          "series[parallel[series[A, C], D, E], B]");
    CHECK(to_text(decompose_digraph(testsupport::g4())) == "ordered[A < series[B, C]]");
}

TEST_CASE("structured serialization golden") {
    CHECK(to_structured(decompose_digraph(testsupport::g1())) ==
          "node 0 prime children 1 5 8 11\n"
          "node 1 ordered order 2 3 4\n"
          "node 2 leaf A\n"
          "node 3 leaf D\n"
          "node 4 leaf G\n"
          "node 5 series children 6 7\n"
          "node 6 leaf B\n"
          "node 7 leaf C\n"
          "node 8 parallel children 9 10\n"
          "node 9 leaf E\n"
          "node 10 leaf F\n"
          "node 11 leaf H\n"
          "root 0\n");
}

TEST_CASE("dot export smoke") {
    std::string dot = to_dot(decompose_digraph(testsupport::g4()));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("ordered") != std::string::npos);
    CHECK(dot.find("label=\"1\"") != std::string::npos);  // ordered edge rank
}

TEST_CASE("decomposition guards") {
    CHECK_THROWS_AS(decompose_digraph(Digraph(0, {})), Error);
    CHECK_THROWS_AS(decompose_undirected(Digraph(2, {{0, 1}})), NotUndirectedError);
    CHECK_THROWS_AS(decompose_transitive_dag(Digraph(2, {{0, 1}, {1, 0}})),
                    CyclicInputError);
    CHECK_THROWS_AS(decompose_transitive_dag(Digraph(3, {{0, 1}, {1, 2}})),
                    NotTransitiveError);
    MDTree single = decompose_digraph(Digraph(1, {}, {"solo"}));
    CHECK(single.node_count() == 1);
    CHECK(to_text(single) == "solo");
}

TEST_CASE("tree nodes are exactly the strong modules of the closure") {
    testsupport::Rng rng(4001);
    for (int i = 0; i < 50; ++i) {
        Digraph g = testsupport::random_digraph(rng, 1 + i % 7, 0.15 + 0.1 * (i % 8));
        MDTree t = decompose_digraph(g);
        Digraph closed = testsupport::closure_oracle(g);
        CHECK(node_sets(t) == to_set(testsupport::strong_modules_oracle(closed)));
    }
}

TEST_CASE("transitive dag and undirected closure trees coincide up to kind") {
    // same strong modules; ordered nodes of the dag appear as series nodes
    // of the undirected closure
    testsupport::Rng rng(4002);
    for (int i = 0; i < 40; ++i) {
        Digraph g = testsupport::random_transitive_dag(rng, 1 + i % 8, 0.4);
        MDTree dag_tree = decompose_transitive_dag(g);
        MDTree und_tree = decompose_undirected(undirected_closure(g));
        CHECK(node_sets(dag_tree) == node_sets(und_tree));
        std::map<std::vector<VertexId>, NodeKind> und_kind;
        for (std::uint32_t k = 0; k < und_tree.node_count(); ++k)
            und_kind[und_tree.node(k).vertex_set] = und_tree.node(k).kind;
        for (std::uint32_t k = 0; k < dag_tree.node_count(); ++k) {
            NodeKind mine = dag_tree.node(k).kind;
            NodeKind theirs = und_kind.at(dag_tree.node(k).vertex_set);
            if (mine == NodeKind::Ordered)
                CHECK(theirs == NodeKind::Series);
            else
                CHECK(theirs == mine);
        }
    }
}

TEST_CASE("child quotient of the root of the first example") {
    Digraph g = testsupport::g1();
    MDTree t = decompose_digraph(g);
    Digraph gs = transitive_closure(g);
    Digraph q = child_quotient(gs, t, 0);
    CHECK(q.vertex_count() == 4);
    auto strong = strong_modules(q);
    // the root is prime, so its child quotient has only trivial modules
    CHECK(strong.size() == q.vertex_count() + 1);
    CHECK(*q.vertex_by_label("A+D+G") < q.vertex_count());
}

TEST_CASE("compose splices repeated degenerate kinds") {
    Digraph two(2, {}, {"x", "y"});
    MDTree lx = MDTree::leaf(0, two.labels());
    MDTree ly = MDTree::leaf(1, two.labels());
    MDTree par = compose(NodeKind::Parallel, {lx, ly}, two.labels());
    CHECK(to_text(par) == "parallel[x, y]");

    Digraph three(3, {}, {"x", "y", "z"});
    MDTree wider =
        compose(NodeKind::Parallel,
                {MDTree::leaf(2, three.labels()),
                 compose(NodeKind::Parallel,
                         {MDTree::leaf(0, three.labels()), MDTree::leaf(1, three.labels())},
                         three.labels())},
                three.labels());
    CHECK(to_text(wider) == "parallel[x, y, z]");
}

TEST_CASE("substitute leaves grafts subtrees") {
    // ordered pair (a, b) with b replaced by a parallel pair over {b, c}
    std::vector<std::string> outer{"a", "b"};
    MDTree skeleton = compose(
        NodeKind::Ordered, {MDTree::leaf(0, outer), MDTree::leaf(1, outer)}, outer);
    std::vector<std::string> full{"a", "b", "c"};
    std::vector<MDTree> repl;
    repl.push_back(MDTree::leaf(0, full));
    repl.push_back(compose(NodeKind::Parallel,
                           {MDTree::leaf(1, full), MDTree::leaf(2, full)}, full));
    MDTree grafted = substitute_leaves(skeleton, repl, full);
    CHECK(to_text(grafted) == "ordered[a < parallel[b, c]]");
}

TEST_CASE("prune merges same-kind chains") {
    std::vector<std::string> labels{"a", "b", "c"};
    std::vector<MDNode> nodes(5);
    nodes[0] = {NodeKind::Series, 0, {1, 2}, {}};
    nodes[1] = {NodeKind::Series, 0, {3, 4}, {}};
    nodes[2] = {NodeKind::Leaf, 2, {}, {}};
    nodes[3] = {NodeKind::Leaf, 0, {}, {}};
    nodes[4] = {NodeKind::Leaf, 1, {}, {}};
    MDTree nested = MDTree::build(std::move(nodes), 0, labels);
    CHECK(to_text(prune(nested)) == "series[a, b, c]");
}
