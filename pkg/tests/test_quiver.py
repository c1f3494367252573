from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quiverlat.quiver import (
    AugmentedQuiver,
    GradedQuiver,
    NodeGrading,
    QuiverError,
    SymQuiver,
    UnreducedQuiver,
    double_unreduced,
    drop_auxiliary,
    frame,
    link,
    link_graded,
    mirror,
    unlink,
    unlink_graded,
)
from quiverlat.tower import builtin_seed_4_1

REDUCED_4_1 = [
    [0, -1, -1, 0, 0],
    [-1, -2, -2, -1, 0],
    [-1, -2, -1, -1, 0],
    [0, -1, -1, 1, 1],
    [0, 0, 0, 1, 2],
]


@st.composite
def graded(draw, min_size=1, max_size=5):
    n = draw(st.integers(min_size, max_size))
    vals = st.integers(-4, 4)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = draw(vals)
    a = draw(st.lists(vals, min_size=n, max_size=n))
    q = draw(st.lists(vals, min_size=n, max_size=n))
    return GradedQuiver.build(m, a, q)


def is_symmetric(m: SymQuiver) -> bool:
    e = m.entries
    return all(e[i][j] == e[j][i] for i in range(len(e)) for j in range(len(e)))


def U(rows, f=0):
    n = len(rows) // 2
    return UnreducedQuiver(SymQuiver(rows), tuple(v for _ in range(n) for v in (1, -1)), (0,) * (2 * n), f)


def test_asymmetric_rejected():
    with pytest.raises(QuiverError, match=r"\(0,1\)"):
        SymQuiver(((0, 1), (2, 0)))


def test_negative_x_degree_rejected():
    with pytest.raises(QuiverError):
        NodeGrading(0, 0, -1)


def test_unreduced_pair_rule_enforced():
    with pytest.raises(QuiverError):
        UnreducedQuiver(SymQuiver(((0, 0), (0, 0))), (1, 1), (0, 0))


def test_mirror_examples():
    assert mirror(SymQuiver(((1,),))).entries == ((0,),)
    assert mirror(SymQuiver(((0, 1), (1, 0)))).entries == ((1, -1), (-1, 1))
    c = SymQuiver(REDUCED_4_1)
    assert mirror(mirror(c)) == c


def test_frame_examples():
    u = U([[1, 0], [0, 0]])
    assert frame(u, 1).matrix.entries == ((2, 1), (1, 1))
    assert frame(u, 0) == u
    assert frame(frame(u, 1), -1) == u


def test_double_single_node():
    g = GradedQuiver.build([[5]], [7], [-3])
    u = double_unreduced(g)
    assert u.matrix.entries == ((6, 5), (5, 5))
    assert u.a_bar == (8, 6) and u.q_bar == (-2, -2)


def test_double_displayed_pattern():
    u = double_unreduced(GradedQuiver.build([[0, 0], [0, 0]], [0, 0], [0, 0]))
    assert u.matrix.tolist() == [[1, 0, 1, 0], [0, 0, 1, 0], [1, 1, 1, 0], [0, 0, 0, 0]]


def test_double_4_1_last_row_pattern():
    g = drop_auxiliary(builtin_seed_4_1())
    u = double_unreduced(g)
    assert u.size == 10
    base = [[g.quiver[r // 2, s // 2] for s in range(10)] for r in range(10)]
    extra = [[u.matrix[r, s] - base[r][s] for s in range(10)] for r in range(10)]
    assert extra[9] == [0] * 10
    assert u.a_bar == (1, -1, -1, -3, 1, -1, 1, -1, 3, 1)


@given(graded())
def test_double_max_odd_rule(g):
    u = double_unreduced(g)
    for r in range(1, u.size + 1):
        for s in range(1, u.size + 1):
            expect = g.quiver[(r + 1) // 2 - 1, (s + 1) // 2 - 1] + (max(r, s) % 2)
            assert u.matrix[r - 1, s - 1] == expect
    assert is_symmetric(u.matrix)


def test_double_rejects_auxiliary():
    with pytest.raises(QuiverError):
        double_unreduced(builtin_seed_4_1().base)


def test_unlink_toy():
    g = GradedQuiver.build([[0, 1], [1, 0]], [0, 0], [0, 0])
    assert unlink_graded(g, 0, 1).quiver.tolist() == [[0, 0, 0], [0, 0, 0], [0, 0, 1]]


def test_unlink_4_1_aux_pair():
    new = unlink(builtin_seed_4_1(), 0, 2)
    assert new.size == 7
    assert new.base.quiver[0, 2] == 0
    assert new.base.quiver[6, 6] == 0
    g = new.base.gradings[6]
    assert g.a_deg == 0 and g.x_deg == 1


def test_link_toys():
    g = GradedQuiver.build([[0, 0], [0, 0]], [0, 0], [0, 0])
    assert link_graded(g, 0, 1).quiver.tolist() == [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
    h = GradedQuiver.build([[1, 1], [1, 1]], [0, 0], [0, 0])
    out = link_graded(h, 0, 1)
    assert out.quiver[2, 2] == 4 and out.size == 3 and is_symmetric(out.quiver)


@pytest.mark.parametrize("op", [unlink_graded, link_graded])
def test_invalid_indices(op):
    g = GradedQuiver.build([[0, 0], [0, 0]], [0, 0], [0, 0])
    with pytest.raises(QuiverError):
        op(g, 0, 2)
    with pytest.raises(QuiverError):
        op(g, 1, 1)


def _monomial(g: GradedQuiver, i: int) -> tuple[int, int, int]:
    gr = g.gradings[i]
    return gr.a_deg, gr.q_deg - g.quiver[i, i], gr.x_deg


@given(graded(min_size=2), st.data())
def test_unlink_link_structure(g, data):
    i = data.draw(st.integers(0, g.size - 1))
    j = data.draw(st.integers(0, g.size - 1).filter(lambda v: v != i))
    for op, delta, qoff in ((unlink_graded, -1, -1), (link_graded, 1, 0)):
        out = op(g, i, j)
        n = g.size
        assert out.size == n + 1 and is_symmetric(out.quiver)
        for r in range(n):
            for s in range(n):
                expect = g.quiver[r, s] + (delta if {r, s} == {i, j} else 0)
                assert out.quiver[r, s] == expect
        mi, mj, mn = _monomial(g, i), _monomial(g, j), _monomial(out, n)
        assert mn == (mi[0] + mj[0], mi[1] + mj[1] + qoff, mi[2] + mj[2])


@given(graded())
def test_mirror_and_frame_preserve_symmetry(g):
    u = double_unreduced(g)
    assert is_symmetric(mirror(g.quiver))
    assert is_symmetric(frame(u, 3).matrix)
    assert frame(frame(u, -2), 2) == u


def test_drop_auxiliary_4_1():
    g = drop_auxiliary(builtin_seed_4_1())
    assert g.quiver.tolist() == REDUCED_4_1
    assert g.a == (0, -2, 0, 0, 2) and g.q == (0, 0, -2, 2, 0)


def test_drop_auxiliary_toy():
    aug = AugmentedQuiver(GradedQuiver.build([[1, 0], [0, 3]], [0, 1], [0, 2], [0, 1]))
    g = drop_auxiliary(aug)
    assert g.size == 1 and g.quiver.tolist() == [[3]]


def test_drop_after_one_unlink():
    g = drop_auxiliary(unlink(builtin_seed_4_1(), 0, 3))
    assert g.size == 6 and set(g.x) == {1}


def test_drop_rejects_unlinked_pair_without_auxiliary():
    with pytest.raises(QuiverError):
        drop_auxiliary(unlink(builtin_seed_4_1(), 1, 2))


def test_augmented_needs_zero_x_on_node_0():
    with pytest.raises(QuiverError):
        AugmentedQuiver(GradedQuiver.build([[0]], [0], [0], [1]))
