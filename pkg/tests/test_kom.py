import itertools

import pytest

from diskcontact import bypass, functor, kom
from diskcontact.divset import basic_of, basic_sets, enumerate_objects
from diskcontact.errors import NotBasic, ShapeMismatch
from diskcontact.homs import tight_basic
from diskcontact.kom import (
    ChainMap,
    Complex,
    ProjSummand,
    add_maps,
    complex_from_json,
    complex_to_json,
    compose,
    cone,
    equivalent,
    euler_vector,
    find_homotopy,
    hom_dim,
    hom_total,
    identity_map,
    is_homotopy_equivalence,
    is_nullhomotopic,
    projective,
    serre_resolution,
    serre_transform,
    shift,
    simplify,
    verify_complex,
    zero_map,
)

from conftest import pairs_up_to


def two_term():
    g1 = basic_of(2, 1, {0, 1})
    g2 = basic_of(2, 1, {0, 2})
    c = Complex((ProjSummand(g1, -1), ProjSummand(g2, 0)), frozenset({(0, 1)}))
    return g1, g2, c


def test_verify_complex():
    g1, g2, c = two_term()
    assert verify_complex(c)
    wrong_degree = Complex((ProjSummand(g1, 0), ProjSummand(g2, 0)), frozenset({(0, 1)}))
    assert not verify_complex(wrong_degree)
    backwards = Complex((ProjSummand(g2, -1), ProjSummand(g1, 0)), frozenset({(0, 1)}))
    assert not verify_complex(backwards)  # hom(g2, g1) = 0


def test_projective_requires_basic(ex_g1):
    with pytest.raises(NotBasic):
        projective(ex_g1)


def test_shift_involution():
    _, _, c = two_term()
    assert shift(shift(c, 1), -1) == c
    assert shift(c, 2).degrees() == (-3, -2)


def test_cone_of_identity_contractible():
    g1, _, _ = two_term()
    p = projective(g1)
    assert is_homotopy_equivalence(identity_map(p))
    assert find_homotopy(identity_map(cone(identity_map(p))), zero_map(cone(identity_map(p)), cone(identity_map(p)))) is not None


def test_hom_dim_projectives():
    for n, e in pairs_up_to(4):
        for g, g2 in itertools.product(basic_sets(n, e), repeat=2):
            want = 1 if tight_basic(g, g2) else 0
            assert hom_dim(projective(g), projective(g2), 0) == want


def test_compose_shapes():
    g1, g2, c = two_term()
    f = ChainMap(projective(g1), projective(g2), 0, frozenset({(0, 0)}))
    with pytest.raises(ShapeMismatch):
        compose(f, f)
    with pytest.raises(ShapeMismatch):
        cone(ChainMap(projective(g1), projective(g2), 1, frozenset()))


def test_composition_kills_dead_homs():
    # g(2) -> g(2,?) chains where the outer hom vanishes drop to zero
    g1 = basic_of(3, 1, {0, 1})
    g2 = basic_of(3, 1, {0, 2})
    g3 = basic_of(3, 1, {0, 3})
    f = ChainMap(projective(g1), projective(g2), 0, frozenset({(0, 0)}))
    g = ChainMap(projective(g2), projective(g3), 0, frozenset({(0, 0)}))
    assert compose(f, g).entries == {(0, 0)}  # tight chain survives
    h = ChainMap(projective(g3), projective(g1), 0, frozenset())
    assert compose(g, h).entries == frozenset()


def test_equivalent_reflexive_and_distinct_projectives():
    for g, g2 in itertools.combinations(basic_sets(4, 2), 2):
        assert equivalent(projective(g), projective(g))
        assert not equivalent(projective(g), projective(g2))


def test_equivalent_detects_contractible_pair(ex_g1):
    g1 = basic_of(2, 1, {0, 1})
    # P(g1) -> P(g1) with identity differential is contractible
    c = Complex((ProjSummand(g1, -1), ProjSummand(g1, 0)), frozenset({(0, 1)}))
    assert verify_complex(c)
    assert equivalent(c, Complex((), frozenset()))
    assert simplify(c) == Complex((), frozenset())


def test_simplify_preserves_homotopy_type(ex_g4):
    tri = bypass.triangle(ex_g4, bypass.canonical_bypass(ex_g4))
    f = functor.lift_morphism(tri.b1, 0)
    c = cone(f)
    s = simplify(c)
    assert verify_complex(s)
    assert equivalent(c, s)


def test_euler_vector_of_cone(ex_g3, ex_g4):
    for g in (ex_g3, ex_g4):
        for mv in bypass.enumerate_bypasses(g):
            f = functor.lift_morphism(mv, 0)
            ev = euler_vector(cone(f))
            want: dict = {}
            for gamma, v in euler_vector(f.dst).items():
                want[gamma] = want.get(gamma, 0) + v
            for gamma, v in euler_vector(shift(f.src, 0)).items():
                want[gamma] = want.get(gamma, 0) - v
            want = {k: v for k, v in want.items() if v}
            assert ev == want


def test_find_homotopy_trivial_cases(ex_g4):
    F = functor.build_F(ex_g4)
    d = ChainMap(F, F, 1, F.d)
    h = find_homotopy(d, d)
    assert h is not None and not h.entries
    assert is_nullhomotopic(zero_map(F, F))


def test_hom_total_end_example(ex_g4):
    F = functor.build_F(ex_g4)
    assert hom_dim(F, F, 0) == 1
    assert hom_total(F, F) == 1


def test_serre_resolution_branches():
    for n, e in pairs_up_to(5):
        for g in basic_sets(n, e):
            res = serre_resolution(g)
            assert verify_complex(res)
            sg = bypass.serre_rotate(g)
            if 1 in g.star:
                assert res == projective(sg)
            else:
                assert res.size == e + 1
                F = functor.build_F(sg)
                assert res.summands == F.summands and res.d == F.d
                assert sorted(res.degrees()) == list(range(-e, 1))


def test_serre_resolution_requires_basic(ex_g1):
    with pytest.raises(NotBasic):
        serre_resolution(ex_g1)


@pytest.mark.parametrize("n,e", pairs_up_to(3))
def test_serre_transform_commutes_with_functor(n, e):
    for g in enumerate_objects(n, e):
        sg = bypass.serre_rotate(g)
        c = functor.F_of_morphism(g, sg).k
        lhs = serre_transform(functor.build_F(g))
        assert verify_complex(lhs)
        assert equivalent(simplify(lhs), shift(functor.build_F(sg), c))
        if g.is_basic():
            assert c == 0


@pytest.mark.parametrize("n,e", pairs_up_to(4))
def test_calabi_yau_power(n, e):
    for g in basic_sets(n, e):
        c = projective(g)
        for _ in range(n + 1):
            c = simplify(serre_transform(c))
            assert verify_complex(c)
        assert equivalent(c, shift(projective(g), e * (n - e)))


def test_complex_json_roundtrip(ex_g4):
    F = functor.build_F(ex_g4)
    assert complex_from_json(complex_to_json(F)) == F


def test_hom_dim_shift_invariant(ex_g3, ex_g4):
    a, b = functor.build_F(ex_g3), functor.build_F(ex_g4)
    for k in range(-3, 4):
        assert hom_dim(a, b, k) == hom_dim(shift(a, 1), shift(b, 1), k)
        assert hom_dim(b, a, k) == hom_dim(shift(b, 1), shift(a, 1), k)


def test_map_space_differential_squares_to_zero(ex_g3, ex_g4):
    from diskcontact.kom import _differential_on_maps, map_basis
    import diskcontact.gf2 as gf2

    a, b = functor.build_F(ex_g3), functor.build_F(ex_g4)
    for k in range(-3, 3):
        b0 = map_basis(a, b, k)
        b1 = map_basis(a, b, k + 1)
        b2 = map_basis(a, b, k + 2)
        d0 = _differential_on_maps(a, b, k, b0, b1)
        d1 = _differential_on_maps(a, b, k + 1, b1, b2)
        pos = {p: t for t, p in enumerate(b2)}
        for col in d0:
            # push each D-image through D again: must vanish
            img = 0
            for t, p in enumerate(b1):
                if (col >> t) & 1:
                    img ^= d1[t]
            assert img == 0
    del gf2, pos
