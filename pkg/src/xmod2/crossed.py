"""Pre-crossed, crossed, and 2-crossed modules of commutative algebras.

A 2-crossed module is a complex L -d2-> E -d1-> R with R-actions on E and
L (preserved by d1 and d2), and a Peiffer lifting {-,-}: E x E -> L subject
to the axioms 2XM1..2XM6.  The lifting axiom 2XM5 defines an action of E
on L, e >' l = {e (x) d2(l)}, and (d2: L -> E, >') is itself a crossed
module; that derived structure is certified along with the axioms.

Validation is exhaustive on finite bases; when R is free it runs on
generators plus sampled monomials and stamps the certificate.
"""

from .algebra import FiniteAlgebra, FreeAlgebra
from .errors import (
    AxiomViolation,
    BadShape,
    CompositeNonzero,
    EquivarianceViolation,
    LiftingViolation,
    NotAnIdeal,
    SquareViolation,
    XM1Violation,
    XM2Violation,
    XmodError,
)
from .maps import (
    DEFAULT_POLICY,
    EXHAUSTIVE,
    BilinearMap,
    TableAction,
    algebra_morphism,
    certify_action,
    law_tuples,
    morphisms_equal,
    sampled_certificate,
    zero_action,
)
from .rings import nullspace, solve_in_span


class PreCrossedModule:
    """An algebra map d: E -> R with an R-action on E satisfying XM1."""

    def __init__(self, E, R, d, act):
        self.E = E
        self.R = R
        self.d = d
        self.act = act
        self.certificates = {}

    @property
    def ring(self):
        return self.R.ring

    def compatible(self, other):
        return self.E.compatible(other.E) and self.R.compatible(other.R)

    def __repr__(self):
        return "%s<%r -> %r>" % (type(self).__name__, self.E, self.R)


class CrossedModule(PreCrossedModule):
    """A pre-crossed module also satisfying XM2 (Peiffer identity)."""


def _check_precrossed_shape(E, R, d, act):
    if not (d.source.compatible(E) and d.target.compatible(R)):
        raise BadShape("boundary map endpoints do not match (E, R)")
    if not (act.acting.compatible(R) and act.acted.compatible(E)):
        raise BadShape("action endpoints do not match (R, E)")


def make_precrossed(E, R, d, act, policy=DEFAULT_POLICY):
    _check_precrossed_shape(E, R, d, act)
    pcm = PreCrossedModule(E, R, d, act)
    rng = policy.rng()
    tuples, exhaustive = law_tuples([R, E], policy, rng)
    for r, e in tuples:
        lhs = d(act(r, e))
        rhs = r * d(e)
        if lhs != rhs:
            raise XM1Violation((r, e), lhs, rhs)
    pcm.certificates["XM1"] = EXHAUSTIVE if exhaustive else sampled_certificate(policy)
    return pcm


def make_crossed(E, R, d, act, policy=DEFAULT_POLICY):
    pcm = make_precrossed(E, R, d, act, policy)
    cm = CrossedModule(E, R, d, act)
    cm.certificates.update(pcm.certificates)
    rng = policy.rng()
    tuples, exhaustive = law_tuples([E, E], policy, rng)
    for e, e2 in tuples:
        lhs = act(d(e), e2)
        rhs = e * e2
        if lhs != rhs:
            raise XM2Violation((e, e2), lhs, rhs)
    cm.certificates["XM2"] = EXHAUSTIVE if exhaustive else sampled_certificate(policy)
    return cm


def ideal_inclusion_cm(R, ideal_labels, policy=DEFAULT_POLICY):
    """The crossed module E -> R of an ideal E of R, with inclusion and
    the multiplication action.  Raises NotAnIdeal when the span of the
    chosen labels is not closed under multiplication by R."""
    if not isinstance(R, FiniteAlgebra):
        raise BadShape("ideal inclusion needs a finite-dimensional ambient algebra")
    ideal_labels = tuple(ideal_labels)
    labelset = set(ideal_labels)
    unknown = [l for l in ideal_labels if l not in set(R.labels)]
    if unknown:
        raise BadShape("labels %r are not in the basis of %r" % (unknown, R))
    for r in R.labels:
        for e in ideal_labels:
            prod = R.key_mul(r, e)
            escaped = [k for k in prod.coeffs if k not in labelset]
            if escaped:
                raise NotAnIdeal((r, e), "product %s*%s leaves the span" % (r, e))
    from .algebra import make_finite_algebra

    table = {}
    for i in ideal_labels:
        for j in ideal_labels:
            row = {k: c for k, c in R.key_mul(i, j).coeffs.items()}
            if row:
                table[(i, j)] = row
    E = make_finite_algebra(ideal_labels, table, R.ring)
    d = algebra_morphism(E, R, images={l: R.basis_element(l) for l in ideal_labels}, policy=policy)
    act_table = {}
    for r in R.labels:
        act_table[r] = {e: E.element(dict(R.key_mul(r, e).coeffs)) for e in ideal_labels}
    from .maps import make_action

    act = make_action(R, E, act_table, policy)
    return make_crossed(E, R, d, act, policy)


class CrossedMorphism:
    """A map of crossed modules: algebra maps f1: E -> E', f0: R -> R'
    commuting with the boundaries and preserving the action."""

    def __init__(self, src, tgt, f0, f1):
        self.src = src
        self.tgt = tgt
        self.f0 = f0
        self.f1 = f1

    def equal(self, other):
        return (
            self.src.compatible(other.src)
            and self.tgt.compatible(other.tgt)
            and morphisms_equal(self.f0, other.f0)
            and morphisms_equal(self.f1, other.f1)
        )

    def __repr__(self):
        return "CrossedMorphism<%r -> %r>" % (self.src, self.tgt)


def make_cm_morphism(src, tgt, f0, f1, policy=DEFAULT_POLICY):
    if not (f0.source.compatible(src.R) and f0.target.compatible(tgt.R)):
        raise BadShape("f0 endpoints do not match")
    if not (f1.source.compatible(src.E) and f1.target.compatible(tgt.E)):
        raise BadShape("f1 endpoints do not match")
    rng = policy.rng()
    tuples, _ = law_tuples([src.E], policy, rng)
    for (e,) in tuples:
        lhs = f0(src.d(e))
        rhs = tgt.d(f1(e))
        if lhs != rhs:
            raise SquareViolation((e,), lhs, rhs)
    tuples, _ = law_tuples([src.R, src.E], policy, rng)
    for r, e in tuples:
        lhs = f1(src.act(r, e))
        rhs = tgt.act(f0(r), f1(e))
        if lhs != rhs:
            raise EquivarianceViolation((r, e), lhs, rhs)
    return CrossedMorphism(src, tgt, f0, f1)


def identity_cm_morphism(cm):
    from .maps import identity_map

    return CrossedMorphism(cm, cm, identity_map(cm.R), identity_map(cm.E))


# ---------------------------------------------------------------------------
# 2-crossed modules


class TwoCrossedModule:
    """The tuple (L, E, R, d2, d1, actions, Peiffer lifting).

    ``free_basis`` records the chosen free-algebra basis B of R when the
    structure is free up to order one; the homotopy groupoid operations
    require it and refuse to run without it.
    """

    def __init__(self, L, E, R, d2, d1, act_e, act_l, lift, free_basis=None):
        self.L = L
        self.E = E
        self.R = R
        self.d2 = d2
        self.d1 = d1
        self.act_e = act_e
        self.act_l = act_l
        self.lift = lift
        self.free_basis = tuple(free_basis) if free_basis is not None else None
        self.certificates = {}
        self._prime = None

    @property
    def ring(self):
        return self.R.ring

    @property
    def act_prime(self):
        """The derived action of E on L: e >' l = {e (x) d2(l)}."""
        if self._prime is None:
            table = {}
            for ek in self.E.basis_keys():
                e = self.E.basis_element(ek)
                row = {}
                for lk in self.L.basis_keys():
                    value = self.lift(e, self.d2(self.L.basis_element(lk)))
                    if not value.is_zero():
                        row[lk] = value
                table[ek] = row
            self._prime = TableAction(self.E, self.L, table)
        return self._prime

    def compatible(self, other):
        return (
            self.L.compatible(other.L)
            and self.E.compatible(other.E)
            and self.R.compatible(other.R)
        )

    def level_one(self):
        """The underlying pre-crossed module E -> R."""
        pcm = PreCrossedModule(self.E, self.R, self.d1, self.act_e)
        pcm.certificates["XM1"] = self.certificates.get("d1-equivariance")
        return pcm

    def __repr__(self):
        return "TwoCrossedModule<%r -> %r -> %r>" % (self.L, self.E, self.R)


def make_two_crossed(L, E, R, d2, d1, act_e, act_l, lift, free_basis=None, policy=DEFAULT_POLICY):
    """Build and certify a 2-crossed module.

    Checks, in order: d1 o d2 = 0; both boundaries preserve the R-actions;
    the lifting axioms 2XM1..2XM6; and that (d2: L -> E, >') is a crossed
    module for the derived action.  Witnessed failures raise AxiomViolation
    (with the axiom id) or the matching specific error.
    """
    if not (d2.source.compatible(L) and d2.target.compatible(E)):
        raise BadShape("d2 endpoints do not match (L, E)")
    if not (d1.source.compatible(E) and d1.target.compatible(R)):
        raise BadShape("d1 endpoints do not match (E, R)")
    if not (act_e.acting.compatible(R) and act_e.acted.compatible(E)):
        raise BadShape("R-action on E has wrong endpoints")
    if not (act_l.acting.compatible(R) and act_l.acted.compatible(L)):
        raise BadShape("R-action on L has wrong endpoints")
    if not (lift.left.compatible(E) and lift.right.compatible(E) and lift.target.compatible(L)):
        raise BadShape("Peiffer lifting has wrong endpoints")
    if free_basis is not None:
        if not isinstance(R, FreeAlgebra) or tuple(free_basis) != R.generators:
            raise BadShape("free basis %r does not present R" % (free_basis,))

    A = TwoCrossedModule(L, E, R, d2, d1, act_e, act_l, lift, free_basis)
    rng = policy.rng()
    certs = A.certificates

    for lk in L.basis_keys():
        l = L.basis_element(lk)
        value = d1(d2(l))
        if not value.is_zero():
            raise CompositeNonzero((l,), value, R.zero())
    certs["d1.d2=0"] = EXHAUSTIVE

    def run(name, algebras, check):
        tuples, exhaustive = law_tuples(algebras, policy, rng)
        for tup in tuples:
            check(*tup)
        certs[name] = EXHAUSTIVE if exhaustive else sampled_certificate(policy)

    def d2_equivariant(r, l):
        lhs = d2(act_l(r, l))
        rhs = act_e(r, d2(l))
        if lhs != rhs:
            raise EquivarianceViolation((r, l), lhs, rhs, msg="d2 does not preserve the action")

    def d1_equivariant(r, e):
        lhs = d1(act_e(r, e))
        rhs = r * d1(e)
        if lhs != rhs:
            raise XM1Violation((r, e), lhs, rhs)

    run("d2-equivariance", [R, L], d2_equivariant)
    run("d1-equivariance", [R, E], d1_equivariant)

    prime = A.act_prime

    def ax1(e, e2):
        lhs = d2(lift(e, e2))
        rhs = e * e2 - act_e(d1(e2), e)
        if lhs != rhs:
            raise AxiomViolation("2XM1", (e, e2), lhs, rhs)

    def ax2(l, l2):
        lhs = lift(d2(l), d2(l2))
        rhs = l * l2
        if lhs != rhs:
            raise AxiomViolation("2XM2", (l, l2), lhs, rhs)

    def ax3(e, e2, e3):
        lhs = lift(e, e2 * e3)
        rhs = lift(e * e2, e3) + act_l(d1(e3), lift(e, e2))
        if lhs != rhs:
            raise AxiomViolation("2XM3", (e, e2, e3), lhs, rhs)

    def ax4(l, e):
        lhs = lift(d2(l), e)
        rhs = prime(e, l) - act_l(d1(e), l)
        if lhs != rhs:
            raise AxiomViolation("2XM4", (l, e), lhs, rhs)

    def ax5(e, l):
        lhs = lift(e, d2(l))
        rhs = prime(e, l)
        if lhs != rhs:
            raise AxiomViolation("2XM5", (e, l), lhs, rhs)

    def ax6(r, e, e2):
        lhs = act_l(r, lift(e, e2))
        mid = lift(act_e(r, e), e2)
        rhs = lift(e, act_e(r, e2))
        if lhs != mid or lhs != rhs:
            raise AxiomViolation("2XM6", (r, e, e2), lhs, (mid, rhs))

    run("2XM1", [E, E], ax1)
    run("2XM2", [L, L], ax2)
    run("2XM3", [E, E, E], ax3)
    run("2XM4", [L, E], ax4)
    run("2XM5", [E, L], ax5)
    run("2XM6", [R, E, E], ax6)

    # derived crossed module (L -> E, >')
    certs["derived-action"] = certify_action(prime, policy)

    def derived_xm1(e, l):
        lhs = d2(prime(e, l))
        rhs = e * d2(l)
        if lhs != rhs:
            raise XM1Violation((e, l), lhs, rhs, msg="derived crossed module")

    def derived_xm2(l, l2):
        lhs = prime(d2(l), l2)
        rhs = l * l2
        if lhs != rhs:
            raise XM2Violation((l, l2), lhs, rhs, msg="derived crossed module")

    run("derived-XM1", [E, L], derived_xm1)
    run("derived-XM2", [L, L], derived_xm2)
    return A


def kernel_two_crossed(P, policy=DEFAULT_POLICY):
    """The 2-crossed module ker(d) -> E -> R of a finite pre-crossed module.

    The lifting is {e (x) e'} = ee' - d(e') > e, the form forced by 2XM1;
    the output is pushed through the full validator, which would flag a
    wrong lifting convention.
    """
    E, R, d, act = P.E, P.R, P.d, P.act
    if not (E.is_finite() and R.is_finite()):
        raise BadShape("kernel computation needs finite-dimensional E and R")
    ring = E.ring
    ekeys = E.basis_keys()
    rkeys = R.basis_keys()

    def e_coords(u):
        return [u.coeffs.get(k, ring.zero) for k in ekeys]

    rows = []
    images = [d(E.basis_element(k)) for k in ekeys]
    for rk in rkeys:
        rows.append([img.coeffs.get(rk, ring.zero) for img in images])
    kernel = nullspace(rows, len(ekeys), ring)

    labels = tuple("k%d" % i for i in range(len(kernel)))
    vectors = [E.element({k: v for k, v in zip(ekeys, vec)}) for vec in kernel]

    def in_kernel_coords(u, context):
        coeffs = solve_in_span(kernel, e_coords(u), ring)
        if coeffs is None:
            raise XmodError("%s left the kernel: %s" % (context, u))
        return {labels[i]: c for i, c in enumerate(coeffs) if not ring.is_zero(c)}

    from .algebra import make_finite_algebra

    table = {}
    for i, vi in enumerate(vectors):
        for j, vj in enumerate(vectors):
            row = in_kernel_coords(vi * vj, "kernel product")
            if row:
                table[(labels[i], labels[j])] = row
    L = make_finite_algebra(labels, table, ring)

    d2 = algebra_morphism(L, E, images={labels[i]: vectors[i] for i in range(len(labels))}, policy=policy)
    act_l_table = {}
    for rk in rkeys:
        r = R.basis_element(rk)
        act_l_table[rk] = {
            labels[i]: L.element(in_kernel_coords(act(r, vectors[i]), "acted kernel element"))
            for i in range(len(labels))
        }
    from .maps import make_action

    act_l = make_action(R, L, act_l_table, policy) if labels else zero_action(R, L)

    lift_table = {}
    for i in ekeys:
        ei = E.basis_element(i)
        for j in ekeys:
            ej = E.basis_element(j)
            value = ei * ej - act(d(ej), ei)
            coords = in_kernel_coords(value, "Peiffer lifting value")
            if coords:
                lift_table[(i, j)] = L.element(coords)
    lift = BilinearMap(E, E, L, lift_table)
    return make_two_crossed(L, E, R, d2, d1=d, act_e=act, act_l=act_l, lift=lift, policy=policy)


# ---------------------------------------------------------------------------
# 2-crossed morphisms


class TwoCrossedMorphism:
    def __init__(self, src, tgt, f0, f1, f2):
        self.src = src
        self.tgt = tgt
        self.f0 = f0
        self.f1 = f1
        self.f2 = f2

    def equal(self, other):
        return (
            self.src.compatible(other.src)
            and self.tgt.compatible(other.tgt)
            and morphisms_equal(self.f0, other.f0)
            and morphisms_equal(self.f1, other.f1)
            and morphisms_equal(self.f2, other.f2)
        )

    def __repr__(self):
        return "TwoCrossedMorphism<%r -> %r>" % (self.src, self.tgt)


def make_2cm_morphism(src, tgt, f0, f1, f2, policy=DEFAULT_POLICY):
    """Certify a 2-crossed module map: commuting squares, action
    equivariance for f1 and f2, and preservation of the liftings."""
    for f, dom, cod, name in (
        (f0, src.R, tgt.R, "f0"),
        (f1, src.E, tgt.E, "f1"),
        (f2, src.L, tgt.L, "f2"),
    ):
        if not (f.source.compatible(dom) and f.target.compatible(cod)):
            raise BadShape("%s endpoints do not match" % name)
    rng = policy.rng()

    tuples, _ = law_tuples([src.E], policy, rng)
    for (e,) in tuples:
        lhs = f0(src.d1(e))
        rhs = tgt.d1(f1(e))
        if lhs != rhs:
            raise SquareViolation((e,), lhs, rhs, msg="f0.d1 != d1'.f1")
    tuples, _ = law_tuples([src.L], policy, rng)
    for (l,) in tuples:
        lhs = f1(src.d2(l))
        rhs = tgt.d2(f2(l))
        if lhs != rhs:
            raise SquareViolation((l,), lhs, rhs, msg="f1.d2 != d2'.f2")

    tuples, _ = law_tuples([src.R, src.E], policy, rng)
    for r, e in tuples:
        lhs = f1(src.act_e(r, e))
        rhs = tgt.act_e(f0(r), f1(e))
        if lhs != rhs:
            raise EquivarianceViolation((r, e), lhs, rhs, msg="f1")
    tuples, _ = law_tuples([src.R, src.L], policy, rng)
    for r, l in tuples:
        lhs = f2(src.act_l(r, l))
        rhs = tgt.act_l(f0(r), f2(l))
        if lhs != rhs:
            raise EquivarianceViolation((r, l), lhs, rhs, msg="f2")

    tuples, _ = law_tuples([src.E, src.E], policy, rng)
    for e, e2 in tuples:
        lhs = f2(src.lift(e, e2))
        rhs = tgt.lift(f1(e), f1(e2))
        if lhs != rhs:
            raise LiftingViolation((e, e2), lhs, rhs)
    return TwoCrossedMorphism(src, tgt, f0, f1, f2)


def identity_2cm_morphism(A):
    from .maps import identity_map

    return TwoCrossedMorphism(A, A, identity_map(A.R), identity_map(A.E), identity_map(A.L))


def zero_2cm_morphism(A, B, policy=DEFAULT_POLICY):
    from .maps import zero_map

    return make_2cm_morphism(A, B, zero_map(A.R, B.R), zero_map(A.E, B.E), zero_map(A.L, B.L), policy)


def compose_2cm_morphisms(g, f, policy=DEFAULT_POLICY):
    """g after f; the composite is re-certified (closure check)."""
    from .maps import map_compose

    if not f.tgt.compatible(g.src):
        raise BadShape("non-composable 2-crossed morphisms")
    return make_2cm_morphism(
        f.src, g.tgt, map_compose(g.f0, f.f0), map_compose(g.f1, f.f1), map_compose(g.f2, f.f2), policy
    )
