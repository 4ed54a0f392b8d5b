import pytest

import modec

G1 = "A D\nB C\nC B\nD G\nE B\nE H\nF C\nF H\nG H\n"
G2 = "A B\nA C\nA D\nB E\nC E\nD F\n"
G5 = "A D\nA E\nB C\nB E\nD C\n"


def labelled(g, vertex_set):
    return {g.label(v) for v in vertex_set}


def test_parse_and_roundtrip():
    g = modec.parse_edge_list(G1)
    assert g.vertex_count() == 8
    assert g.edge_count() == 9
    assert modec.parse_edge_list(modec.serialize_edge_list(g)) == g


def test_decompose_structured():
    g = modec.parse_edge_list(G1)
    tree = modec.decompose_digraph(g)
    assert modec.to_structured(tree) == (
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
        "root 0\n"
    )
    assert tree == modec.decompose_via_reduction(g)


def test_strong_modules():
    g = modec.parse_edge_list(G1)
    closed = modec.transitive_closure(g)
    strong = modec.strong_modules(closed)
    nontrivial = [m for m in strong if 1 < len(m) < closed.vertex_count()]
    assert [labelled(closed, m) for m in nontrivial] == [
        {"A", "D", "G"},
        {"B", "C"},
        {"E", "F"},
    ]


def test_reduce_collapses_g2():
    kernel = modec.reduce(modec.parse_edge_list(G2))
    assert kernel.graph.vertex_count() == 1
    assert len(kernel.merge_log) == 5
    assert {step.rule for step in kernel.merge_log} == {"seq", "par"}


def test_orient_complement():
    result = modec.orient_complement(modec.parse_edge_list(G5))
    assert result["ok"]
    assert result["failure"] is None
    assert result["source"] == "direct"
    assert len(result["orientation"]) == 4


def test_permrep_queries():
    g = modec.parse_edge_list(G2)
    rep = modec.build_permrep(g)
    a = g.vertex_by_label("A")
    b = g.vertex_by_label("B")
    d = g.vertex_by_label("D")
    f = g.vertex_by_label("F")
    assert modec.reachable(rep, a, f)
    assert not modec.reachable(rep, b, d)
    assert not modec.reachable(rep, d, b)
    assert sorted(rep.l1) == sorted(rep.l2) == list(range(6))


def test_errors():
    assert issubclass(modec.ParseError, modec.Error)
    with pytest.raises(modec.ParseError, match="line 1"):
        modec.parse_edge_list("A B C\n")
    with pytest.raises(modec.CyclicInputError):
        modec.build_permrep(modec.parse_edge_list("A B\nB A\n"))
