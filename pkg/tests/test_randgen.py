import random

from xmod2.maps import Policy
from xmod2.randgen import (
    random_finite_algebra,
    random_free_two_crossed,
    random_precrossed,
    random_two_crossed,
)
from xmod2.rings import PrimeField, QQ

F5 = PrimeField(5)
POL = Policy(samples=20, seed=0)


def test_random_finite_algebras_valid_and_bounded():
    rng = random.Random(0)
    for _ in range(20):
        A = random_finite_algebra(F5, rng, max_dim=2)
        assert 1 <= A.dim() <= 2
        # constructor certifies commutativity/associativity; spot-check anyway
        for u in A.basis_elements():
            for v in A.basis_elements():
                assert u * v == v * u


def test_random_precrossed_valid():
    rng = random.Random(1)
    for _ in range(10):
        P = random_precrossed(F5, rng, max_dim=2, policy=POL)
        assert P.certificates["XM1"].exhaustive


def test_random_two_crossed_valid_and_small():
    rng = random.Random(2)
    for _ in range(10):
        A = random_two_crossed(F5, rng, max_dim=2, policy=POL)
        assert A.certificates["2XM1"].exhaustive
        assert A.L.dim() <= 2 and A.E.dim() <= 2 and A.R.dim() <= 2


def test_random_generation_deterministic_given_seed():
    a1 = random_two_crossed(F5, random.Random(5), max_dim=2, policy=POL)
    a2 = random_two_crossed(F5, random.Random(5), max_dim=2, policy=POL)
    assert a1.E.labels == a2.E.labels
    for i in a1.E.basis_keys():
        for j in a1.E.basis_keys():
            l1 = a1.lift(a1.E.basis_element(i), a1.E.basis_element(j))
            l2 = a2.lift(a2.E.basis_element(i), a2.E.basis_element(j))
            assert l1.coeffs == l2.coeffs


def test_random_free_domain_shape():
    rng = random.Random(3)
    D = random_free_two_crossed(F5, rng, max_dim=2, policy=POL)
    assert D.free_basis == ("x",)
    assert D.E.dim() >= 1
    assert D.L is D.E
    # lifting is the multiplication, landing in L = E
    for i in D.E.basis_keys():
        for j in D.E.basis_keys():
            e, e2 = D.E.basis_element(i), D.E.basis_element(j)
            assert D.lift(e, e2) == e * e2


def test_square_family_gives_nonzero_liftings_sometimes():
    rng = random.Random(6)
    found = False
    for _ in range(20):
        A = random_two_crossed(F5, rng, max_dim=2, policy=POL)
        for i in A.E.basis_keys():
            for j in A.E.basis_keys():
                if not A.lift(A.E.basis_element(i), A.E.basis_element(j)).is_zero():
                    found = True
    assert found


def test_rational_generation_also_works():
    rng = random.Random(7)
    A = random_two_crossed(QQ, rng, max_dim=2, policy=POL)
    assert A.R.ring == QQ
