import itertools
from collections import deque

import pytest

from diskcontact import bypass
from diskcontact.bypass import (
    BypassMove,
    attach,
    canonical_bypass,
    commuting_squares,
    enumerate_bypasses,
    m_invariant,
    obar,
    serre_rotate,
    triangle,
    validate_move,
    zero_region,
)
from diskcontact.divset import STAR, DividingSet, basic_of, enumerate_objects, validate
from diskcontact.errors import ComponentMismatch, InvalidMove, IsBasic
from diskcontact.homs import hom_nonzero

from conftest import pairs_up_to


def test_unique_bypass_on_ex_g1(ex_g1):
    moves = enumerate_bypasses(ex_g1)
    assert len(moves) == 1
    assert attach(ex_g1, moves[0]) == basic_of(2, 1, {0, 1})


def test_ex_g1_triangle(ex_g1):
    tri = triangle(ex_g1, enumerate_bypasses(ex_g1)[0])
    assert tri.g2 == basic_of(2, 1, {0, 1})
    assert tri.g3 == basic_of(2, 1, {0, 2})
    assert attach(tri.g3, tri.b3) == ex_g1


def test_canonical_bypass_examples(ex_g2, ex_g3, ex_g4):
    assert attach(ex_g2, canonical_bypass(ex_g2)) == DividingSet.make(
        4, 3, {STAR: (0, 1, 4), (1,): (2, 3)}
    )
    assert attach(ex_g3, canonical_bypass(ex_g3)) == DividingSet.make(
        4, 2, {STAR: (0, 1), (1,): (2,), (2,): (3, 4)}
    )
    tri = triangle(ex_g4, canonical_bypass(ex_g4))
    assert tri.g2 == DividingSet.make(4, 2, {STAR: (0, 1), (1,): (2, 3), (2,): (4,)})
    assert tri.g3 == DividingSet.make(4, 2, {STAR: (0, 4), (1,): (1,), (2,): (2, 3)})


def test_canonical_bypass_requires_nonbasic():
    with pytest.raises(IsBasic):
        canonical_bypass(basic_of(3, 1, {0, 2}))


def test_quiver_arrow_is_an_attach():
    g = basic_of(3, 1, {0, 1})
    g2 = basic_of(3, 1, {0, 2})
    hits = [mv for mv in enumerate_bypasses(g) if attach(g, mv) == g2]
    assert len(hits) == 1
    mv = hits[0]
    assert mv.uv == STAR and mv.left_labels == (1,)


def test_invalid_moves_rejected(ex_g4):
    with pytest.raises(InvalidMove):
        validate_move(BypassMove(ex_g4, (1,), (1,), 0, 1, 0))  # uv == ov
    with pytest.raises(InvalidMove):
        validate_move(BypassMove(ex_g4, (1, 1), (1,), 2, 1, 1))  # x out of range
    with pytest.raises(InvalidMove):
        validate_move(BypassMove(ex_g4, (1, 1), (1,), 0, 1, 1))  # entry == exit chord
    with pytest.raises(InvalidMove):
        # the gap chord of (1,1) does not border the based component's region
        validate_move(BypassMove(ex_g4, (1, 1), STAR, 0, 0, 0))


@pytest.mark.parametrize("n,e", pairs_up_to(4))
def test_attach_valid_and_tight(n, e):
    for g in enumerate_objects(n, e):
        for mv in enumerate_bypasses(g):
            out = attach(g, mv)
            assert validate(out).ok
            assert (out.n, out.e) == (n, e)
            assert out != g
            assert hom_nonzero(g, out)


@pytest.mark.parametrize("n,e", pairs_up_to(4))
def test_enumerate_bypasses_unique_no_duplicates(n, e):
    for g in enumerate_objects(n, e):
        moves = enumerate_bypasses(g)
        assert len(set(moves)) == len(moves)


@pytest.mark.parametrize("n,e", pairs_up_to(4))
def test_triangles_close_and_rotate_regions(n, e):
    for g in enumerate_objects(n, e):
        for mv in enumerate_bypasses(g):
            tri = triangle(g, mv)
            assert attach(tri.g1, tri.b1) == tri.g2
            assert attach(tri.g2, tri.b2) == tri.g3
            assert attach(tri.g3, tri.b3) == tri.g1
            zs = [zero_region(b) for b in (tri.b1, tri.b2, tri.b3)]
            assert zs[1] == (zs[0] + 1) % 6 + 1
            assert zs[2] == (zs[1] + 1) % 6 + 1


def test_zero_region_examples(ex_g4):
    # the (ex t1) starting bypass has label 0 beyond the target chord
    bt1 = BypassMove(ex_g4, (1, 1), (1,), 1, 1, 1)
    assert zero_region(bt1) == 4
    # canonical bypasses carry label 0 in the left part of uv
    for n, e in pairs_up_to(4):
        for g in enumerate_objects(n, e):
            if g.is_basic():
                continue
            g3, b3 = obar(g)
            assert 0 in b3.left_labels
            assert zero_region(b3) == 2


@pytest.mark.parametrize("n,e", pairs_up_to(5))
def test_obar_decreases_m(n, e):
    for g in enumerate_objects(n, e):
        if g.is_basic():
            continue
        tri = triangle(g, canonical_bypass(g))
        assert m_invariant(tri.g2) < m_invariant(g)
        assert m_invariant(tri.g3) < m_invariant(g)
        g3, b3 = obar(g)
        assert g3 == tri.g3 and attach(g3, b3) == g


@pytest.mark.parametrize("n,e", pairs_up_to(5))
def test_serre_rotation_order_and_sample(n, e):
    if (n, e) == (2, 1):
        assert serre_rotate(basic_of(2, 1, {0, 1})) == basic_of(2, 1, {0, 2})
    for g in enumerate_objects(n, e):
        cur = g
        for _ in range(n + 1):
            cur = serre_rotate(cur)
        assert cur == g


@pytest.mark.parametrize("n,e", pairs_up_to(4))
def test_reachability_of_nonzero_homs(n, e):
    objs = enumerate_objects(n, e)
    graph = {g: {attach(g, mv) for mv in enumerate_bypasses(g)} for g in objs}
    for g in objs:
        seen = {g}
        queue = deque([g])
        while queue:
            cur = queue.popleft()
            for t in graph[cur]:
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        for t in objs:
            if hom_nonzero(g, t):
                assert t in seen


@pytest.mark.parametrize("n,e", pairs_up_to(4))
def test_bypass_graph_connected(n, e):
    objs = enumerate_objects(n, e)
    und: dict = {g: set() for g in objs}
    for g in objs:
        for mv in enumerate_bypasses(g):
            t = attach(g, mv)
            und[g].add(t)
            und[t].add(g)
    seen = {objs[0]}
    queue = deque([objs[0]])
    while queue:
        cur = queue.popleft()
        for t in und[cur]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    assert len(seen) == len(objs)


def test_octahedron():
    objs = enumerate_objects(3, 1)
    assert len(objs) == 6
    und: dict = {g: set() for g in objs}
    for g in objs:
        for mv in enumerate_bypasses(g):
            t = attach(g, mv)
            und[g].add(t)
            und[t].add(g)
    assert all(len(v) == 4 for v in und.values())
    # the three antipodal pairs are the non-neighbors
    antipodes = {g: [t for t in objs if t != g and t not in und[g]] for g in objs}
    assert all(len(v) == 1 for v in antipodes.values())


@pytest.mark.parametrize("n,e", pairs_up_to(4))
def test_far_commutativity(n, e):
    for g in enumerate_objects(n, e):
        moves = enumerate_bypasses(g)
        for a, b in itertools.combinations(moves, 2):
            for sq in commuting_squares(a, b):
                if sq.after_a and sq.after_b:
                    assert attach(attach(g, a), sq.after_a) == attach(
                        attach(g, b), sq.after_b
                    )


def test_commuting_squares_mismatched_sources(ex_g1, ex_g4):
    with pytest.raises(ComponentMismatch):
        commuting_squares(
            enumerate_bypasses(ex_g1)[0], enumerate_bypasses(ex_g4)[0]
        )
