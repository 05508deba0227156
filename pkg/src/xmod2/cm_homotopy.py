"""Homotopy of crossed module maps: derivations, inverses, concatenation.

For crossed module morphisms f, g: A -> A', a homotopy f => g is an
f0-derivation, a linear map s: R -> E' with

    s(rr') = f0(r) > s(r') + f0(r') > s(r) + s(r)s(r'),

and the target is g0 = f0 + d' o s, g1 = f1 + s o d.  No freeness is
needed here: the zero map is a homotopy f => f, -s inverts, and pointwise
addition concatenates, giving the groupoid of maps A -> A' and their
homotopies.
"""

from .errors import CompositionMismatch, DerivationLawViolation, XmodError
from .maps import (
    DEFAULT_POLICY,
    EXHAUSTIVE,
    algebra_morphism,
    law_tuples,
    linear_map,
    maps_agree,
    sampled_certificate,
    semidirect,
    _skeleton,
)

_LAMBDA1 = {}


def edge_algebra(cm):
    """R |x E of a crossed module (its algebra of 1-simplices)."""
    key = id(cm)
    hit = _LAMBDA1.get(key)
    if hit is None or hit[0] is not cm:
        hit = (cm, semidirect(cm.R, cm.E, cm.act))
        _LAMBDA1[key] = hit
    return hit[1]


class CMDerivation:
    """An f0-derivation s: R -> E' over a crossed module morphism f.

    ``images`` records s on the R-basis (finite R) or on the free
    generators (free R, where s is evaluated through the algebra map
    r -> (f0(r), s(r)) into R' |x E')."""

    def __init__(self, f, images, smap, certificate):
        self.f = f
        self.images = images
        self.smap = smap
        self.certificate = certificate
        self._target = None

    def __call__(self, r):
        return self.smap(r)

    @property
    def source(self):
        return self.f

    def target(self, policy=DEFAULT_POLICY):
        if self._target is None:
            self._target = _cm_target(self, policy)
        return self._target

    def equal(self, other):
        return self.f.equal(other.f) and maps_agree(self.smap, other.smap, _skeleton(self.f.src.R))


def _derivation_map(f, images):
    src, tgt = f.src, f.tgt
    if src.R.is_finite():
        return linear_map(src.R, tgt.E, images)
    lam1 = edge_algebra(tgt)
    phi = algebra_morphism(
        src.R,
        lam1,
        images={b: lam1.pair(f.f0(src.R.basis_element((b,))), images[b]) for b in src.R.generators},
    )
    def fn(r):
        return lam1.split(phi(r))[1]
    from .maps import LinearMap

    return LinearMap(src.R, tgt.E, "function", fn=fn, note="derivation")


def make_cm_derivation(f, images, policy=DEFAULT_POLICY):
    """Certify the derivation law for s given by basis/generator images."""
    src, tgt = f.src, f.tgt
    norm = {}
    for key, value in images.items():
        tgt.E.owns(value)
        norm[key] = value
    if not src.R.is_finite():
        for b in src.R.generators:
            norm.setdefault(b, tgt.E.zero())
    smap = _derivation_map(f, norm)
    rng = policy.rng()
    tuples, exhaustive = law_tuples([src.R, src.R], policy, rng)
    for r, r2 in tuples:
        lhs = smap(r * r2)
        rhs = tgt.act(f.f0(r), smap(r2)) + tgt.act(f.f0(r2), smap(r)) + smap(r) * smap(r2)
        if lhs != rhs:
            raise DerivationLawViolation((r, r2), lhs, rhs)
    cert = EXHAUSTIVE if exhaustive else sampled_certificate(policy)
    return CMDerivation(f, norm, smap, cert)


class CMHomotopy:
    """A derivation together with its computed, certified target."""

    def __init__(self, derivation, source, target):
        self.derivation = derivation
        self.source = source
        self.target = target


def _cm_target(d, policy=DEFAULT_POLICY):
    from .crossed import make_cm_morphism

    f, s = d.f, d.smap
    src, tgt = f.src, f.tgt
    g0 = algebra_morphism(src.R, tgt.R, fn=lambda r: f.f0(r) + tgt.d(s(r)), policy=policy, note="g0")
    g1 = algebra_morphism(src.E, tgt.E, fn=lambda e: f.f1(e) + s(src.d(e)), policy=policy, note="g1")
    return make_cm_morphism(src, tgt, g0, g1, policy)


def apply_cm_homotopy(d, policy=DEFAULT_POLICY):
    """Target of the homotopy: certified as a crossed module morphism."""
    return CMHomotopy(d, d.f, d.target(policy))


def invert_cm(d, policy=DEFAULT_POLICY):
    """The derivation -s over g, connecting g back to f."""
    g = d.target(policy)
    images = {k: -v for k, v in d.images.items()}
    inv = make_cm_derivation(g, images, policy)
    if not inv.target(policy).equal(d.f):
        raise XmodError("inverse derivation does not recover the source map")
    return inv


def concat_cm(d, d2, policy=DEFAULT_POLICY):
    """Pointwise sum s + s', connecting f to h; requires target(d) = source(d2)."""
    if not d.target(policy).equal(d2.f):
        raise CompositionMismatch("intermediate morphisms differ")
    images = dict(d.images)
    for k, v in d2.images.items():
        images[k] = images[k] + v if k in images else v
    out = make_cm_derivation(d.f, images, policy)
    if not out.target(policy).equal(d2.target(policy)):
        raise XmodError("concatenation target mismatch (transcription bug)")
    return out


def zero_cm_derivation(f, policy=DEFAULT_POLICY):
    return make_cm_derivation(f, {}, policy)


def cm_groupoid_check(A, B, samples=25, seed=0, policy=DEFAULT_POLICY):
    """Sample derivation chains A -> B and verify the groupoid laws exactly.

    Returns report entries (name, ok, witness).  Covers: validity of every
    homotopy target, left/right identity, both inverse laws, associativity
    of concatenation, and reflexivity/symmetry/transitivity of the
    homotopy relation on the sampled maps.
    """
    import random as _random

    from .randgen import random_cm_derivation, random_cm_morphism

    rng = _random.Random(seed)
    entries = []

    def note(name, ok, witness=None):
        entries.append((name, ok, witness))

    span = _skeleton(A.R)
    for i in range(samples):
        f = random_cm_morphism(A, B, rng)
        d1 = random_cm_derivation(f, rng)
        g = d1.target(policy)
        d2 = random_cm_derivation(g, rng)
        h = d2.target(policy)
        d3 = random_cm_derivation(h, rng)

        note("cm/%02d/target-valid" % i, True)  # construction certifies

        zf = zero_cm_derivation(f, policy)
        note("cm/%02d/reflexive-zero" % i, zf.target(policy).equal(f))
        left = concat_cm(zf, d1, policy)
        right = concat_cm(d1, zero_cm_derivation(g, policy), policy)
        note("cm/%02d/identity-left" % i, left.equal(d1))
        note("cm/%02d/identity-right" % i, right.equal(d1))

        inv = invert_cm(d1, policy)
        both = concat_cm(d1, inv, policy)
        note("cm/%02d/inverse-right" % i, all(both(r).is_zero() for r in span))
        both = concat_cm(inv, d1, policy)
        note("cm/%02d/inverse-left" % i, all(both(r).is_zero() for r in span))
        note("cm/%02d/symmetric" % i, inv.target(policy).equal(f))

        assoc_l = concat_cm(concat_cm(d1, d2, policy), d3, policy)
        assoc_r = concat_cm(d1, concat_cm(d2, d3, policy), policy)
        note("cm/%02d/associative" % i, assoc_l.equal(assoc_r))
        note("cm/%02d/transitive" % i, assoc_l.target(policy).equal(d3.target(policy)))
    return entries
