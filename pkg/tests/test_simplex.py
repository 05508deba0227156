import random

import pytest

from xmod2 import fixtures
from xmod2.errors import IndexOutOfRange
from xmod2.maps import LinearMap, Policy
from xmod2.randgen import random_two_crossed
from xmod2.rings import PrimeField
from xmod2.simplex import (
    build_tower,
    check_simplicial_identities,
    simplicial_identity_list,
    with_face,
)

POL = Policy(samples=30, seed=5)


def f2_tower():
    return build_tower(fixtures.square_two_crossed(), POL)


def f2_elements(T):
    F2 = T.base
    R, E, L = F2.R, F2.E, F2.L
    return (
        R.basis_element("p"),
        E.basis_element("a"),
        E.basis_element("b"),
        L.basis_element(fixtures.BH),
    )


def test_bullet_action_values():
    T = f2_tower()
    p, a, b, bh = f2_elements(T)
    lam1, el = T.levels[1], T.el
    bullet = T.actions["bullet"]
    assert bullet(lam1.pair(p, a.algebra.zero()), el.pair(a, bh.algebra.zero())).is_zero()
    got = bullet(lam1.pair(p.algebra.zero(), a), el.pair(a, bh.algebra.zero()))
    assert got == el.pair(b, -bh)
    assert bullet(lam1.zero(), el.pair(a, bh)).is_zero()


def test_star_action_values():
    T = f2_tower()
    p, a, b, bh = f2_elements(T)
    star = T.actions["star"]
    assert star(T.el.pair(a, bh.algebra.zero()), bh).is_zero()
    assert star(T.el.pair(a.algebra.zero(), bh), bh).is_zero()


def test_one_action_values():
    T = f2_tower()
    p, a, b, bh = f2_elements(T)
    lam1 = T.levels[1]
    one = T.actions["one"]
    zE, zL = a.algebra.zero(), bh.algebra.zero()
    x = T.ell.pair(T.el.pair(a, zL), zL)
    assert one(lam1.pair(p.algebra.zero(), a), x) == T.ell.pair(T.el.pair(b, -bh), zL)
    assert one(lam1.pair(p, zE), T.ell.pair(T.el.pair(a, bh), bh)).is_zero()
    assert one(lam1.pair(p, a), T.ell.zero()).is_zero()


def test_two_action_values():
    T = f2_tower()
    p, a, b, bh = f2_elements(T)
    zE, zL = a.algebra.zero(), bh.algebra.zero()
    two = T.actions["two"]
    x = T.ell.pair(T.el.pair(a, zL), zL)
    assert two(T.el.pair(a, zL), x) == T.ell.pair(T.el.pair(b, zL), -bh)
    assert two(T.el.pair(zE, bh), x).is_zero()
    assert two(T.el.zero(), x).is_zero()


def test_dagger_action_reduces_to_one_and_two():
    T = f2_tower()
    p, a, b, bh = f2_elements(T)
    zE, zL = a.algebra.zero(), bh.algebra.zero()
    dag = T.actions["dagger"]
    x = T.ell.pair(T.el.pair(a, zL), zL)
    assert dag(T.simplex2(p, a, zE, zL), x) == T.ell.pair(T.el.pair(b, -bh), zL)
    assert dag(T.simplex2(p.algebra.zero(), zE, a, zL), x) == T.ell.pair(T.el.pair(b, zL), -bh)
    assert dag(T.levels[2].zero(), x).is_zero()


def test_sub_actions_certified():
    T = f2_tower()
    for name in ("one_e", "one_r", "two_e", "two_l", "bullet", "star", "one", "two", "dagger"):
        assert T.actions[name].certificate is not None, name
        assert T.actions[name].certificate.exhaustive


def test_tower_dims():
    T0 = build_tower(fixtures.zero_two_crossed(), POL)
    assert [alg.dim() for alg in T0.levels] == [1, 2, 4, 7]
    T2 = f2_tower()
    assert T2.levels[2].dim() == 1 + 2 + 2 + 1


def test_face_values():
    T = f2_tower()
    p, a, b, bh = f2_elements(T)
    lam1 = T.levels[1]
    u = T.simplex2(p, a, a, bh)
    assert T.face(2, 0, u) == lam1.pair(p, a)
    assert T.face(2, 1, u) == lam1.pair(p, 2 * a)
    assert T.face(2, 2, u) == lam1.pair(2 * p, a + b)  # (p + d1(a), a + d2(bh))
    v = T.simplex3(p, a, a, bh, b, bh, bh)
    assert T.face(3, 0, v) == T.simplex2(p, a, a, bh)
    assert T.face(3, 1, v) == T.simplex2(p, a, a + b, 2 * bh)
    assert T.face(3, 2, v) == T.simplex2(p, 2 * a, b, 2 * bh)
    assert T.face(3, 3, v) == T.simplex2(2 * p, a + b, b + b, bh)
    assert T.face(3, 0, T.levels[3].zero()).is_zero()
    with pytest.raises(IndexOutOfRange):
        T.face(2, 3, u)
    with pytest.raises(IndexOutOfRange):
        T.degeneracy(1, 2, lam1.zero())


def test_degeneracy_values():
    T = f2_tower()
    p, a, b, bh = f2_elements(T)
    lam1 = T.levels[1]
    zE, zL = a.algebra.zero(), bh.algebra.zero()
    assert T.degeneracy(1, 1, lam1.pair(p, a)) == T.simplex2(p, zE, a, zL)
    assert T.degeneracy(1, 0, lam1.pair(p, a)) == T.simplex2(p, a, zE, zL)
    u = T.simplex2(p, a, a, bh)
    assert T.degeneracy(2, 2, u) == T.simplex3(p, zE, a, zL, a, zL, bh)
    assert T.degeneracy(0, 0, p.algebra.zero()).is_zero()


def test_faces_and_degeneracies_are_morphisms():
    T = f2_tower()
    for (n, i), f in {**T.faces, **T.degeneracies}.items():
        assert f.multiplicative is not None and f.multiplicative.exhaustive, (n, i)


def test_identity_list_is_complete_standard_list():
    kinds = {}
    for kind, _, _ in simplicial_identity_list():
        kinds[kind] = kinds.get(kind, 0) + 1
    assert kinds == {"dd": 3 + 6, "ss": 1 + 3, "ds": 2 + 6 + 12}


def test_simplicial_identities_pass_exhaustively_on_fixtures():
    for name in ("F0", "F2"):
        T = build_tower(fixtures.fixture(name), POL)
        entries = check_simplicial_identities(T, POL)
        assert all(ok for _, ok, _ in entries), [e for e in entries if not e[1]]
    T3 = build_tower(fixtures.free_line_two_crossed(), POL)
    assert all(ok for _, ok, _ in check_simplicial_identities(T3, POL))


def test_face_degeneracy_identity_cases_exact():
    T = f2_tower()
    lam1 = T.levels[1]
    p, a, b, bh = f2_elements(T)
    for u in [lam1.pair(p, a), lam1.pair(2 * p, a + b)]:
        assert T.face(2, 0, T.degeneracy(1, 0, u)) == u
        assert T.face(2, 1, T.degeneracy(1, 0, u)) == u
        assert T.face(2, 1, T.degeneracy(1, 1, u)) == u
        assert T.face(2, 2, T.degeneracy(1, 1, u)) == u


def _mutant(T, n, i, fn):
    src = T.levels[n]
    tgt = T.levels[n - 1]
    return with_face(T, n, i, LinearMap(src, tgt, "function", fn=fn))


def test_single_term_face_mutations_detected():
    T = f2_tower()
    F2 = T.base
    lam1 = T.levels[1]

    def d22_drop_d2l(u):
        r, e, e2, l = T.split2(u)
        return lam1.pair(r + F2.d1(e), e2)

    def d22_drop_d1e(u):
        r, e, e2, l = T.split2(u)
        return lam1.pair(r, e2 + F2.d2(l))

    def d21_drop_e2(u):
        r, e, e2, l = T.split2(u)
        return lam1.pair(r, e)

    def d11_drop_d1e(u):
        r, e = lam1.split(u)
        return r

    def d31_drop_l2(u):
        r, e, e2, l, e3, l2, l3 = T.split3(u)
        return T.simplex2(r, e, e2 + e3, l)

    def d33_drop_d2l2(u):
        r, e, e2, l, e3, l2, l3 = T.split3(u)
        return T.simplex2(r + F2.d1(e), e2 + F2.d2(l), e3, l3)

    mutants = [
        (2, 2, d22_drop_d2l),
        (2, 2, d22_drop_d1e),
        (2, 1, d21_drop_e2),
        (1, 1, d11_drop_d1e),
        (3, 1, d31_drop_l2),
        (3, 3, d33_drop_d2l2),
    ]
    for n, i, fn in mutants:
        mutated = _mutant(T, n, i, fn)
        entries = check_simplicial_identities(mutated, POL)
        failing = [name for name, ok, _ in entries if not ok]
        assert failing, "mutation of d%d@%d escaped detection" % (i, n)
        # failures carry a printable witness
        for name, ok, witness in entries:
            if not ok:
                assert witness and "!=" in witness


def test_random_towers_satisfy_identities():
    F5 = PrimeField(5)
    rng = random.Random(23)
    for _ in range(8):
        A = random_two_crossed(F5, rng, max_dim=2, policy=POL)
        T = build_tower(A, POL)
        entries = check_simplicial_identities(T, POL)
        assert all(ok for _, ok, _ in entries)


def test_towers_are_per_module():
    from xmod2.errors import OwnerMismatch

    T2 = f2_tower()
    T3 = build_tower(fixtures.free_line_two_crossed(), POL)
    foreign = T3.levels[2].zero() + T3.simplex2(
        T3.base.R.monomial("x"), T3.base.E.zero(), T3.base.E.zero(), T3.base.L.zero()
    )
    with pytest.raises(OwnerMismatch):
        T2.face(2, 0, foreign)
