"""Homotopy of 2-crossed module maps: quadratic derivations and their
groupoid over a domain that is free up to order one.

A quadratic f-derivation is a pair (s: R -> E', t: E -> L') subject to
three laws: s is an f0-derivation ("s-law"); t expands on products of E
with Peiffer-lifting cross terms ("t-product"); and t expands on acted
elements r > e ("t-action").  The target of the homotopy is

    g0 = f0 + d1' o s,   g1 = f1 + s o d1 + d2' o t,   g2 = f2 + t o d2.

Composition needs the recorded free basis B of R.  An f0-derivation is
the same thing as an algebra map r -> (f0(r), s(r)) into R' |x E', so a
set map B -> E' extends uniquely; s [+] s' extends (s + s')|B.  The
correction term w(r) is extracted from the algebra of 2-simplices: the
unique algebra map X with X(b) = (f0(b), s(b), s'(b), 0) has the form

    X(r) = (f0(r), s(r), s'(r) - d2'(w(r)), w(r)),

w vanishes on B, and (s [+] s')(r) = s(r) + s'(r) - d2'(w(r)).  Then
(t [+] t')(e) = t(e) + t'(e) + w(d1(e)).  Inverses extend -s|B over g0
with tbar = -t - w^(s, sbar) o d1.  Associativity of the t-component
rests on the w-change identity, which the tetrahedron map Z (extending
b -> (f0(b), s(b), s'(b), 0, s''(b), 0, 0) into the algebra of
3-simplices) proves and z_map re-verifies pointwise.

Everything here refuses to run without a recorded free basis
(FreeBasisRequired): without freeness the homotopy relation is not an
equivalence relation, and silently computing would be wrong.
"""

from .crossed import make_2cm_morphism
from .errors import (
    CompositionMismatch,
    FreeBasisRequired,
    QDLawViolation,
    XmodError,
)
from .maps import (
    DEFAULT_POLICY,
    EXHAUSTIVE,
    LinearMap,
    algebra_morphism,
    law_tuples,
    linear_map,
    maps_agree,
    sampled_certificate,
    _skeleton,
)
from .simplex import get_tower


def _require_free(A):
    if A.free_basis is None:
        raise FreeBasisRequired(
            "domain has no recorded free basis; concatenation and inversion "
            "of 2-crossed homotopies are only defined for domains free up to order one"
        )
    return A.free_basis


def _complete_s_images(A, B, images):
    """Split given s-data into generator images and declared monomial
    values; the latter are re-derived from the extension and must agree
    (the derivation law forces them)."""
    out = {}
    declared = {}
    for key, value in images.items():
        B.E.owns(value)
        if A.free_basis is not None and isinstance(key, tuple):
            declared[A.R.check_key(key)] = value
        else:
            out[key] = value
    if A.free_basis is not None:
        for b in A.free_basis:
            out.setdefault(b, B.E.zero())
    return out, declared


def _s_map(f, images, policy=DEFAULT_POLICY):
    """Realize s from its images: through phi = (f0, s): R -> R' |x E'
    when R is free, as a basis table otherwise."""
    A, B = f.src, f.tgt
    if A.R.is_finite():
        return linear_map(A.R, B.E, images)
    lam1 = get_tower(B, policy).levels[1]
    phi = algebra_morphism(
        A.R,
        lam1,
        images={b: lam1.pair(f.f0(A.R.basis_element((b,))), images[b]) for b in A.R.generators},
        policy=policy,
        note="phi",
    )

    def fn(r):
        return lam1.split(phi(r))[1]

    return LinearMap(A.R, B.E, "function", fn=fn, note="derivation")


class QuadraticDerivation:
    """A pair (s, t) over a 2-crossed morphism f, with certified laws."""

    def __init__(self, f, s_images, smap, t_images, tmap, certificates):
        self.f = f
        self.s_images = s_images
        self.s = smap
        self.t_images = t_images
        self.t = tmap
        self.certificates = certificates
        self._target = None

    @property
    def source(self):
        return self.f

    def target(self, policy=DEFAULT_POLICY):
        if self._target is None:
            self._target = _qd_target(self, policy)
        return self._target

    def equal(self, other):
        return (
            self.f.equal(other.f)
            and maps_agree(self.s, other.s, _skeleton(self.f.src.R))
            and maps_agree(self.t, other.t, self.f.src.E.basis_elements())
        )


def make_quadratic_derivation(f, s_images, t_images, policy=DEFAULT_POLICY):
    """Certify the three quadratic derivation laws for (s, t) over f.

    s is given on the free basis B (free domain) or the R-basis; t on the
    E-basis.  Failures raise QDLawViolation with the law id and witness.
    The two derived consequences on boundaries of L are spot-checked as
    transcription tripwires.
    """
    A, B = f.src, f.tgt
    s_images, declared = _complete_s_images(A, B, s_images)
    smap = _s_map(f, s_images, policy)
    for mono, value in declared.items():
        forced = smap(A.R.basis_element(mono))
        if forced != value:
            raise QDLawViolation("s-law", (A.R.basis_element(mono),), value, forced)
    t_norm = {}
    for key, value in t_images.items():
        B.L.owns(value)
        t_norm[A.E.check_key(key)] = value
    tmap = linear_map(A.E, B.L, t_norm)

    act_e, act_l, lift, prime = B.act_e, B.act_l, B.lift, B.act_prime
    d1p, d2p = B.d1, B.d2
    f0, f1, f2 = f.f0, f.f1, f.f2
    rng = policy.rng()
    certs = {}

    tuples, exhaustive = law_tuples([A.R, A.R], policy, rng)
    for r, r2 in tuples:
        lhs = smap(r * r2)
        rhs = act_e(f0(r), smap(r2)) + act_e(f0(r2), smap(r)) + smap(r) * smap(r2)
        if lhs != rhs:
            raise QDLawViolation("s-law", (r, r2), lhs, rhs)
    certs["s-law"] = EXHAUSTIVE if exhaustive else sampled_certificate(policy)

    def sd1(e):
        return smap(A.d1(e))

    for e in A.E.basis_elements():
        for e2 in A.E.basis_elements():
            lhs = tmap(e * e2)
            rhs = (
                lift(sd1(e), f1(e2))
                + lift(sd1(e2), f1(e))
                + prime(f1(e), tmap(e2))
                + prime(f1(e2), tmap(e))
                + prime(sd1(e), tmap(e2))
                + prime(sd1(e2), tmap(e))
                + tmap(e) * tmap(e2)
            )
            if lhs != rhs:
                raise QDLawViolation("t-product", (e, e2), lhs, rhs)
    certs["t-product"] = EXHAUSTIVE

    tuples, exhaustive = law_tuples([A.R], policy, rng)
    for (r,) in tuples:
        for e in A.E.basis_elements():
            lhs = tmap(A.act_e(r, e))
            rhs = (
                act_l(f0(r), tmap(e))
                + act_l(d1p(smap(r)), tmap(e))
                + lift(smap(r), f1(e))
                - lift(f1(e), smap(r))
                - lift(sd1(e), smap(r))
            )
            if lhs != rhs:
                raise QDLawViolation("t-action", (r, e), lhs, rhs)
    certs["t-action"] = EXHAUSTIVE if exhaustive else sampled_certificate(policy)

    # consequences of the laws on boundaries of L (sanity tripwires)
    for l in A.L.basis_elements():
        for l2 in A.L.basis_elements():
            lhs = tmap(A.d2(l) * A.d2(l2))
            td = tmap(A.d2(l))
            td2 = tmap(A.d2(l2))
            rhs = f2(l) * td2 + f2(l2) * td + td * td2
            if lhs != rhs:
                raise QDLawViolation("t-product-on-boundaries", (l, l2), lhs, rhs)
    tuples, _ = law_tuples([A.R], policy, rng)
    for (r,) in tuples:
        for l in A.L.basis_elements():
            lhs = tmap(A.act_e(r, A.d2(l)))
            td = tmap(A.d2(l))
            rhs = act_l(f0(r), td) + act_l(d1p(smap(r)), f2(l)) + act_l(d1p(smap(r)), td)
            if lhs != rhs:
                raise QDLawViolation("t-action-on-boundaries", (r, l), lhs, rhs)

    return QuadraticDerivation(f, s_images, smap, t_norm, tmap, certs)


def zero_quadratic(f, policy=DEFAULT_POLICY):
    return make_quadratic_derivation(f, {}, {}, policy)


class TCMHomotopy:
    """A quadratic derivation with its computed, certified target."""

    def __init__(self, qd, source, target):
        self.qd = qd
        self.source = source
        self.target = target

    @property
    def s(self):
        return self.qd.s

    @property
    def t(self):
        return self.qd.t

    @property
    def s_images(self):
        return self.qd.s_images


def _qd_target(qd, policy=DEFAULT_POLICY):
    f = qd.f
    A, B = f.src, f.tgt
    s, t = qd.s, qd.t
    g0 = algebra_morphism(A.R, B.R, fn=lambda r: f.f0(r) + B.d1(s(r)), policy=policy, note="g0")
    g1 = algebra_morphism(
        A.E, B.E, fn=lambda e: f.f1(e) + s(A.d1(e)) + B.d2(t(e)), policy=policy, note="g1"
    )
    g2 = algebra_morphism(A.L, B.L, fn=lambda l: f.f2(l) + t(A.d2(l)), policy=policy, note="g2")
    return make_2cm_morphism(A, B, g0, g1, g2, policy)


def apply_2cm_homotopy(qd, policy=DEFAULT_POLICY):
    """Compute the target morphism and certify it fully."""
    return TCMHomotopy(qd, qd.f, qd.target(policy))


def _as_qd(h):
    return h.qd if isinstance(h, TCMHomotopy) else h


def _check_composable(qd1, qd2, policy=DEFAULT_POLICY):
    if not qd1.target(policy).equal(qd2.f):
        raise CompositionMismatch(
            "target of the first homotopy differs from the base of the second"
        )


def extend_derivation(f, s_star, policy=DEFAULT_POLICY):
    """The unique f0-derivation extending a set map B -> E'.

    Realized by evaluating the algebra map r -> (f0(r), s(r)) into
    R' |x E' by substitution; the derivation law holds by construction.
    """
    A, B = f.src, f.tgt
    _require_free(A)
    images, _ = _complete_s_images(A, B, s_star)
    smap = _s_map(f, images, policy)
    smap.images = images
    return smap


def box_plus_s(h1, h2, policy=DEFAULT_POLICY):
    """s [+] s': the f0-derivation extending (s + s')|B."""
    qd1, qd2 = _as_qd(h1), _as_qd(h2)
    _check_composable(qd1, qd2, policy)
    _require_free(qd1.f.src)
    images = {b: qd1.s_images[b] + qd2.s_images[b] for b in qd1.f.src.free_basis}
    return extend_derivation(qd1.f, images, policy)


def _triangle_map(f, images1, images2, policy=DEFAULT_POLICY):
    """The unique algebra map R -> Lam2(B) with b -> (f0(b), s(b), s'(b), 0)."""
    A, B = f.src, f.tgt
    basis = _require_free(A)
    tower = get_tower(B, policy)
    zeta = {}
    for b in basis:
        zeta[b] = tower.simplex2(
            f.f0(A.R.basis_element((b,))), images1[b], images2[b], B.L.zero()
        )
    return tower, algebra_morphism(A.R, tower.levels[2], images=zeta, policy=policy, note="X")


def _x_components(f, images1, images2, r, policy=DEFAULT_POLICY):
    tower, X = _triangle_map(f, images1, images2, policy)
    return tower, tower.split2(X(r))


def x_map(h1, h2, r, policy=DEFAULT_POLICY):
    """X^(s,s')(r) in the algebra of 2-simplices of the target.

    The component form (f0(r), s(r), s'(r) - d2'(w(r)), w(r)) is
    cross-checked against the independently computed s(r) and
    (s [+] s')(r) through the faces d0 and d1."""
    qd1, qd2 = _as_qd(h1), _as_qd(h2)
    _check_composable(qd1, qd2, policy)
    f = qd1.f
    B = f.tgt
    tower, X = _triangle_map(f, qd1.s_images, qd2.s_images, policy)
    value = X(r)
    c0, c1, c2, c3 = tower.split2(value)
    if c0 != f.f0(r) or c1 != qd1.s(r):
        raise XmodError("triangle map components disagree with f0/s (transcription bug)")
    box = box_plus_s(qd1, qd2, policy)
    if box(r) != c1 + c2:
        raise XmodError("triangle map d1-face disagrees with s [+] s'")
    if box(r) != qd1.s(r) + qd2.s(r) - B.d2(c3):
        raise XmodError("w-correction identity fails (transcription bug)")
    return value


def w_map(h1, h2, r, policy=DEFAULT_POLICY):
    """w^(s,s')(r): the L'-component of X^(s,s')(r); vanishes on B."""
    qd1 = _as_qd(h1)
    tower = get_tower(qd1.f.tgt, policy)
    return tower.split2(x_map(h1, h2, r, policy))[3]


def box_plus_t(h1, h2, e, policy=DEFAULT_POLICY):
    """(t [+] t')(e) = t(e) + t'(e) + w^(s,s')(d1(e))."""
    qd1, qd2 = _as_qd(h1), _as_qd(h2)
    _check_composable(qd1, qd2, policy)
    A = qd1.f.src
    return qd1.t(e) + qd2.t(e) + w_map(qd1, qd2, A.d1(e), policy)


def concat_2cm(h1, h2, policy=DEFAULT_POLICY):
    """(s [+] s', t [+] t'): certified as a quadratic derivation from the
    source of the first to the target of the second."""
    qd1, qd2 = _as_qd(h1), _as_qd(h2)
    _check_composable(qd1, qd2, policy)
    A = qd1.f.src
    _require_free(A)
    s_images = {b: qd1.s_images[b] + qd2.s_images[b] for b in A.free_basis}
    t_images = {k: box_plus_t(qd1, qd2, A.E.basis_element(k), policy) for k in A.E.basis_keys()}
    qd = make_quadratic_derivation(qd1.f, s_images, t_images, policy)
    out = apply_2cm_homotopy(qd, policy)
    if not out.target.equal(qd2.target(policy)):
        raise XmodError("concatenation target mismatch (transcription bug)")
    return out


def invert_2cm(h, policy=DEFAULT_POLICY):
    """The groupoid inverse: sbar extends -s|B as a g0-derivation and
    tbar = -t - w^(s,sbar) o d1; both concatenations are the zero
    homotopy, exactly."""
    qd = _as_qd(h)
    A = qd.f.src
    _require_free(A)
    g = qd.target(policy)
    sbar_images = {b: -qd.s_images[b] for b in A.free_basis}
    tbar_images = {}
    for k in A.E.basis_keys():
        e = A.E.basis_element(k)
        w = _pair_w(qd.f, qd.s_images, sbar_images, A.d1(e), policy)
        tbar_images[k] = -qd.t(e) - w
    qdbar = make_quadratic_derivation(g, sbar_images, tbar_images, policy)
    out = apply_2cm_homotopy(qdbar, policy)
    if not out.target.equal(qd.f):
        raise XmodError("inverse does not recover the source map (transcription bug)")
    return out


def _pair_w(f, images1, images2, r, policy=DEFAULT_POLICY):
    """w for a raw pair of basis-image tables over the base f."""
    tower, comps = _x_components(f, images1, images2, r, policy)
    return comps[3]


def z_map(h1, h2, h3, r, policy=DEFAULT_POLICY):
    """Z(r) in the algebra of 3-simplices of the target, for a composable
    triple; extends b -> (f0(b), s(b), s'(b), 0, s''(b), 0, 0).

    Verifies the component form

        (f0, s, s' - d2'w^(s,s'), w^(s,s'),
         s'' - d2'w^(s[+]s',s''), w^(s[+]s',s'') - w^(s',s''), w^(s',s''))

    and that the d1-face is X^(s, s'[+]s'') (the back face of the
    tetrahedron)."""
    qd1, qd2, qd3 = _as_qd(h1), _as_qd(h2), _as_qd(h3)
    _check_composable(qd1, qd2, policy)
    _check_composable(qd2, qd3, policy)
    f = qd1.f
    A, B = f.src, f.tgt
    basis = _require_free(A)
    tower = get_tower(B, policy)
    lam = {}
    for b in basis:
        rb = A.R.basis_element((b,))
        lam[b] = tower.simplex3(
            f.f0(rb), qd1.s_images[b], qd2.s_images[b], B.L.zero(),
            qd3.s_images[b], B.L.zero(), B.L.zero(),
        )
    Z = algebra_morphism(A.R, tower.levels[3], images=lam, policy=policy, note="Z")
    value = Z(r)
    z = tower.split3(value)

    w12 = _pair_w(f, qd1.s_images, qd2.s_images, r, policy)
    w23 = _pair_w(qd2.f, qd2.s_images, qd3.s_images, r, policy)
    box12 = box_plus_s(qd1, qd2, policy)
    w12_3 = _pair_w(f, box12.images, qd3.s_images, r, policy)
    s2r, s3r = qd2.s(r), qd3.s(r)
    expected = (
        f.f0(r),
        qd1.s(r),
        s2r - B.d2(w12),
        w12,
        s3r - B.d2(w12_3),
        w12_3 - w23,
        w23,
    )
    for i, (got, want) in enumerate(zip(z, expected)):
        if got != want:
            raise XmodError("tetrahedron component %d disagrees (transcription bug)" % i)

    box23 = box_plus_s(qd2, qd3, policy)
    _, back = _x_components(f, qd1.s_images, box23.images, r, policy)
    if tower.split2(tower.face(3, 1, value)) != back:
        raise XmodError("d1 of the tetrahedron is not the back triangle (transcription bug)")
    return value


def check_w_change(h1, h2, h3, r, policy=DEFAULT_POLICY):
    """Exact check of w^(s,s')(r) + w^(s[+]s',s'')(r)
    = w^(s,s'[+]s'')(r) + w^(s',s'')(r); returns (ok, lhs, rhs)."""
    qd1, qd2, qd3 = _as_qd(h1), _as_qd(h2), _as_qd(h3)
    _check_composable(qd1, qd2, policy)
    _check_composable(qd2, qd3, policy)
    f = qd1.f
    w12 = _pair_w(f, qd1.s_images, qd2.s_images, r, policy)
    w23 = _pair_w(qd2.f, qd2.s_images, qd3.s_images, r, policy)
    box12 = box_plus_s(qd1, qd2, policy)
    box23 = box_plus_s(qd2, qd3, policy)
    w12_3 = _pair_w(f, box12.images, qd3.s_images, r, policy)
    w1_23 = _pair_w(f, qd1.s_images, box23.images, r, policy)
    lhs = w12 + w12_3
    rhs = w1_23 + w23
    return lhs == rhs, lhs, rhs


def tcm_groupoid_check(A, B, samples=25, seed=0, policy=DEFAULT_POLICY):
    """Sampled groupoid laws for HOM(A, B): identities, inverses,
    associativity of both components, w-change, and target bookkeeping.
    Returns report entries (name, ok, witness)."""
    import random as _random

    from .maps import random_element
    from .randgen import random_2cm_morphism, random_quadratic_derivation

    _require_free(A)
    rng = _random.Random(seed)
    entries = []

    def note(name, ok, witness=None):
        entries.append((name, ok, witness))

    ebasis = A.E.basis_elements()
    for i in range(samples):
        f = random_2cm_morphism(A, B, rng, policy=policy)
        h1 = apply_2cm_homotopy(random_quadratic_derivation(f, rng, policy=policy), policy)
        h2 = apply_2cm_homotopy(random_quadratic_derivation(h1.target, rng, policy=policy), policy)
        h3 = apply_2cm_homotopy(random_quadratic_derivation(h2.target, rng, policy=policy), policy)

        note("tcm/%02d/targets-valid" % i, True)  # construction certifies

        zf = apply_2cm_homotopy(zero_quadratic(f, policy), policy)
        note("tcm/%02d/reflexive-zero" % i, zf.target.equal(f))
        left = concat_2cm(zf, h1, policy)
        right = concat_2cm(h1, apply_2cm_homotopy(zero_quadratic(h1.target, policy), policy), policy)
        note("tcm/%02d/identity-left" % i, left.qd.equal(h1.qd))
        note("tcm/%02d/identity-right" % i, right.qd.equal(h1.qd))

        hinv = invert_2cm(h1, policy)
        note("tcm/%02d/symmetric" % i, hinv.target.equal(f))
        round1 = concat_2cm(h1, hinv, policy)
        round2 = concat_2cm(hinv, h1, policy)
        z1 = zero_quadratic(f, policy)
        z2 = zero_quadratic(h1.target, policy)
        note("tcm/%02d/inverse-right" % i, round1.qd.equal(z1))
        note("tcm/%02d/inverse-left" % i, round2.qd.equal(z2))

        c12 = concat_2cm(h1, h2, policy)
        c23 = concat_2cm(h2, h3, policy)
        assoc_l = concat_2cm(c12, h3, policy)
        assoc_r = concat_2cm(h1, c23, policy)
        note("tcm/%02d/s-associative" % i, assoc_l.qd.equal(assoc_r.qd))
        t_ok = all(
            box_plus_t(c12, h3, e, policy) == box_plus_t(h1, c23, e, policy) for e in ebasis
        )
        note("tcm/%02d/t-associative" % i, t_ok)
        note("tcm/%02d/transitive" % i, assoc_l.target.equal(h3.target))

        r = random_element(A.R, rng, policy.max_degree)
        ok, lhs, rhs = check_w_change(h1, h2, h3, r, policy)
        note("tcm/%02d/w-change" % i, ok, None if ok else "%s != %s" % (lhs, rhs))
    return entries
