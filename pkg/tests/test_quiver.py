import json
from itertools import combinations

import pytest

from klrc.cartan import DominantWeight, RootVector, hub
from klrc.maxweights import beta_of
from klrc.multiplicity import first_layer_roots
from klrc.quiver import (KIND_DOWN, KIND_DOWN_DOWN, KIND_DOWN_UP, KIND_UP,
                         KIND_UP_UP, MoveLabel, apply_move, arrow_test,
                         build_quiver, delta_vector, export, witness_sequence)


def W(*m):
    return DominantWeight(tuple(m))


def up(i):
    return MoveLabel(KIND_UP, i)


def down(i):
    return MoveLabel(KIND_DOWN, i)


def upup(i, j):
    return MoveLabel(KIND_UP_UP, i, j)


def downdown(i, j):
    return MoveLabel(KIND_DOWN_DOWN, i, j)


def downup(i, j):
    return MoveLabel(KIND_DOWN_UP, i, j)


def test_delta_vectors():
    assert delta_vector(down(2), 4).coeffs == (0, 1, 2, 2, 1)
    assert delta_vector(up(0), 4).coeffs == (1, 1, 0, 0, 0)
    assert delta_vector(downup(1, 3), 4).coeffs == (0, 1, 1, 1, 0)
    assert delta_vector(downup(3, 1), 4).coeffs == (1, 2, 1, 2, 1)
    assert delta_vector(upup(1, 3), 4).coeffs == (1, 2, 1, 1, 0)
    assert delta_vector(downdown(1, 3), 4).coeffs == (0, 1, 1, 2, 1)


def test_delta_vector_complements():
    """The complementary move recovers the null root."""
    delta = RootVector.null_root(4)
    assert delta_vector(up(1), 4) + delta_vector(down(3), 4) == delta
    assert delta_vector(upup(1, 3), 4) + delta_vector(downdown(2, 4), 4) == delta
    assert delta_vector(downup(1, 3), 4) + delta_vector(downup(4, 0), 4) == delta


def test_delta_vector_range_errors():
    with pytest.raises(ValueError):
        delta_vector(up(3), 4)
    with pytest.raises(ValueError):
        delta_vector(down(1), 4)
    with pytest.raises(ValueError):
        delta_vector(downup(2, 1), 4)  # i - 1 == j


def test_apply_move():
    assert apply_move(W(0, 0, 2, 0, 0), downup(2, 2)).m == (0, 1, 0, 1, 0)
    assert apply_move(W(0, 1, 1, 0, 0), up(1)).m == (0, 0, 1, 1, 0)
    with pytest.raises(ValueError):
        apply_move(W(2, 0, 0, 0, 0), down(2))


def test_arrow_test():
    root = W(0, 0, 2, 0, 0)
    source = beta_of(root, root)
    target = arrow_test(source, downup(2, 2))
    assert target is not None
    assert target.weight.m == (0, 1, 0, 1, 0)
    assert target.x.coeffs == (0, 0, 1, 0, 0)
    # a move toward the root never fires
    other = beta_of(root, W(0, 2, 0, 0, 0))
    assert arrow_test(other, upup(1, 1)) is None


# golden arrow sets of the two worked rank-4 level-two quivers
ARROWS_2L2 = {
    ((0, 0, 2, 0, 0), (0, 2, 0, 0, 0), downdown(2, 2)),
    ((0, 0, 2, 0, 0), (1, 0, 1, 0, 0), down(2)),
    ((0, 0, 2, 0, 0), (0, 1, 0, 1, 0), downup(2, 2)),
    ((0, 0, 2, 0, 0), (0, 0, 0, 2, 0), upup(2, 2)),
    ((0, 0, 2, 0, 0), (0, 0, 1, 0, 1), up(2)),
    ((0, 2, 0, 0, 0), (2, 0, 0, 0, 0), downdown(1, 1)),
    ((0, 2, 0, 0, 0), (1, 0, 1, 0, 0), downup(1, 1)),
    ((1, 0, 1, 0, 0), (2, 0, 0, 0, 0), down(2)),
    ((0, 1, 0, 1, 0), (1, 0, 1, 0, 0), downdown(1, 3)),
    ((0, 1, 0, 1, 0), (0, 2, 0, 0, 0), down(3)),
    ((0, 1, 0, 1, 0), (0, 0, 0, 2, 0), up(1)),
    ((0, 1, 0, 1, 0), (1, 0, 0, 0, 1), downup(1, 3)),
    ((0, 1, 0, 1, 0), (0, 0, 1, 0, 1), upup(1, 3)),
    ((1, 0, 0, 0, 1), (1, 0, 1, 0, 0), down(4)),
    ((1, 0, 0, 0, 1), (0, 0, 1, 0, 1), up(0)),
    ((0, 0, 0, 2, 0), (0, 0, 1, 0, 1), downup(3, 3)),
    ((0, 0, 0, 2, 0), (0, 0, 0, 0, 2), upup(3, 3)),
    ((0, 0, 1, 0, 1), (0, 0, 0, 0, 2), up(2)),
}

ARROWS_L1L2 = {
    ((0, 1, 1, 0, 0), (1, 1, 0, 0, 0), down(2)),
    ((0, 1, 1, 0, 0), (1, 0, 0, 1, 0), downup(1, 2)),
    ((0, 1, 1, 0, 0), (0, 0, 1, 1, 0), up(1)),
    ((0, 1, 1, 0, 0), (0, 1, 0, 0, 1), up(2)),
    ((1, 0, 0, 1, 0), (1, 1, 0, 0, 0), down(3)),
    ((1, 0, 0, 1, 0), (0, 0, 1, 1, 0), up(0)),
    ((1, 0, 0, 1, 0), (0, 1, 0, 0, 1), upup(0, 3)),
    ((0, 0, 1, 1, 0), (0, 1, 0, 0, 1), downup(2, 3)),
    ((0, 0, 1, 1, 0), (0, 0, 0, 1, 1), up(2)),
    ((0, 1, 0, 0, 1), (0, 0, 0, 1, 1), up(1)),
}


@pytest.mark.parametrize("root,expected", [
    ((0, 0, 2, 0, 0), ARROWS_2L2),
    ((0, 1, 1, 0, 0), ARROWS_L1L2),
])
def test_build_quiver_golden(root, expected):
    quiver = build_quiver(DominantWeight(root))
    got = {(a.source.m, a.target.m, a.label) for a in quiver.arrows}
    assert got == expected
    assert len(quiver.vertices) == len({*[a[0] for a in expected], *[a[1] for a in expected]})


def test_level_one_chain_from_zero():
    quiver = build_quiver(DominantWeight.fundamental(0, 4))
    arcs = {(a.source.m.index(1), a.target.m.index(1)) for a in quiver.arrows}
    assert arcs == {(0, 2), (2, 4)}


@pytest.mark.parametrize("ell", range(2, 7))
@pytest.mark.parametrize("s_parity", [0, 1])
def test_level_one_bifurcating_chains(ell, s_parity):
    """Level-one quivers: directed chains away from the source vertex."""
    top = 2 * ((ell - s_parity) // 2) + s_parity
    for s in range(s_parity, ell + 1, 2):
        quiver = build_quiver(DominantWeight.fundamental(s, ell))
        indices = {v.weight.m.index(1) for v in quiver.vertices}
        assert indices == set(range(s_parity, ell + 1, 2))
        arcs = {(a.source.m.index(1), a.target.m.index(1)) for a in quiver.arrows}
        expected = {(t, t - 2) for t in range(s_parity + 2, s + 1, 2)}
        expected |= {(t, t + 2) for t in range(s, top - 1, 2)}
        assert arcs == expected


def test_single_vertex_class():
    quiver = build_quiver(DominantWeight.fundamental(1, 2))
    assert len(quiver.vertices) == 1 and not quiver.arrows


def test_witness_sequences():
    assert witness_sequence(up(0), 4) == (0, 1)
    assert witness_sequence(downup(1, 3), 4) == (1, 2, 3)
    assert witness_sequence(upup(0, 0), 4) == (0,)
    assert witness_sequence(up(2), 4) == (2, 1, 0, 1, 3, 2)
    assert witness_sequence(down(2), 4) == (2, 3, 4, 3, 1, 2)
    for label in (up(1), down(3), upup(1, 3), downdown(1, 3), downup(3, 0), downup(1, 1)):
        word = witness_sequence(label, 4)
        counts = [0] * 5
        for i in word:
            counts[i] += 1
        assert tuple(counts) == delta_vector(label, 4).coeffs


def all_weights(k, ell):
    for bars in combinations(range(k + ell), ell):
        m, prev = [], -1
        for b in bars:
            m.append(b - prev - 1)
            prev = b
        m.append(k + ell - 1 - prev)
        yield DominantWeight(tuple(m))


def test_quiver_properties_small_ranks():
    """Reachability, orientation, witness inequalities, move involution,
    first-layer labels and sigma-equivariance over all classes with
    k <= 3 and ell <= 5."""
    arrows_checked = 0
    for ell in range(2, 6):
        layer = {r.coeffs for r in first_layer_roots(ell)}
        for k in range(1, 4):
            for weight in all_weights(k, ell):
                quiver = build_quiver(weight)
                assert not any(a.target.m == weight.m for a in quiver.arrows)
                adjacency: dict = {}
                for a in quiver.arrows:
                    adjacency.setdefault(a.source.m, []).append(a.target.m)
                seen, frontier = {weight.m}, [weight.m]
                while frontier:
                    nxt = []
                    for s in frontier:
                        for t in adjacency.get(s, []):
                            if t not in seen:
                                seen.add(t)
                                nxt.append(t)
                    frontier = nxt
                assert seen == {v.weight.m for v in quiver.vertices}
                for a in quiver.arrows:
                    arrows_checked += 1
                    assert a.delta.in_positive_cone() and a.delta.height > 0
                    assert a.delta.coeffs in layer
                    src, dst = quiver.vertex(a.source), quiver.vertex(a.target)
                    assert dst.x == src.x + a.delta
                    beta = src.x
                    for i in a.witness:
                        assert hub(weight, beta)[i] >= 1
                        beta = beta + RootVector.simple(i, ell)
                    assert beta == dst.x
                    assert apply_move(a.target, _inverse(a.label)) == a.source
                flipped = build_quiver(weight.sigma())
                assert ({(a.source.m, a.target.m) for a in flipped.arrows}
                        == {(a.source.m[::-1], a.target.m[::-1]) for a in quiver.arrows})
    assert arrows_checked > 200


def _inverse(label: MoveLabel) -> MoveLabel:
    if label.kind == KIND_UP:
        return down(label.i + 2)
    if label.kind == KIND_DOWN:
        return up(label.i - 2)
    if label.kind == KIND_UP_UP:
        return downdown(label.i + 1, label.j + 1)
    if label.kind == KIND_DOWN_DOWN:
        return upup(label.i - 1, label.j - 1)
    return downup(label.j + 1, label.i - 1)


def test_export_dot():
    quiver = build_quiver(DominantWeight.fundamental(0, 4))
    dot = export(quiver, "dot")
    assert dot.startswith("digraph")
    assert dot.count("->") == 2
    assert "Λ0" in dot and "Δ_{0^+}" in dot
    assert export(quiver, "dot") == dot  # deterministic


def test_export_json_round_trip():
    quiver = build_quiver(DominantWeight((0, 0, 2, 0, 0)))
    payload = json.loads(export(quiver, "json"))
    assert payload["ell"] == 4 and payload["level"] == 2
    assert len(payload["vertices"]) == 9 and len(payload["arrows"]) == 18
    ms = [tuple(v["m"]) for v in payload["vertices"]]
    assert ms == sorted(ms)
    for arrow in payload["arrows"]:
        src = payload["vertices"][arrow["src"]]
        dst = payload["vertices"][arrow["dst"]]
        assert [a + d for a, d in zip(src["X"], arrow["delta"])] == dst["X"]
        assert len(arrow["witness"]) == sum(arrow["delta"])
    assert json.loads(export(quiver, "json")) == payload


def test_export_tsv():
    quiver = build_quiver(DominantWeight((0, 1, 1, 0, 0)))
    lines = export(quiver, "tsv").strip().split("\n")
    assert lines[0].startswith("#")
    assert len(lines) == 1 + 10
    assert all(len(line.split("\t")) == 4 for line in lines[1:])


def test_export_unknown_format():
    quiver = build_quiver(DominantWeight.fundamental(1, 2))
    with pytest.raises(ValueError):
        export(quiver, "yaml")
