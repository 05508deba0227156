"""Linear maps, algebra morphisms, actions, bilinear maps, and validators.

Laws (A1/A2, multiplicativity, commutativity/associativity of a semidirect
product) are multilinear, so checking them on a spanning set is exact.  The
check policy is therefore:

* every algebra in sight finite-dimensional -> exhaustive on basis tuples;
* a free polynomial algebra involved -> generator-anchored tuples plus N
  random tuples of degree <= D, stamped into a certificate (D, N, seed).

For a table action of a free algebra, monomials act by iterated generator
action and A2 on generator pairs makes that well defined; A1 for monomials
then follows by induction, and is additionally covered by the sampled
tuples.
"""

import itertools
import random
from dataclasses import dataclass

from .algebra import FiniteAlgebra, FreeAlgebra, SemidirectAlgebra
from .errors import (
    A1Violation,
    A2Violation,
    BadShape,
    MorphismViolation,
    NonAssociative,
    NonCommutative,
)


@dataclass(frozen=True)
class Policy:
    """Degree bound and sample count for randomized pointwise checks."""

    samples: int = 100
    max_degree: int = 4
    seed: int = 0

    def rng(self):
        return random.Random(self.seed)


DEFAULT_POLICY = Policy()


@dataclass(frozen=True)
class Certificate:
    exhaustive: bool
    max_degree: int = None
    samples: int = None
    seed: int = None

    def merge(self, other):
        if other is None or (self.exhaustive and other.exhaustive):
            return self
        weaker = self if not self.exhaustive else other
        return weaker

    def to_json(self):
        if self.exhaustive:
            return {"exhaustive": True}
        return {
            "exhaustive": False,
            "max_degree": self.max_degree,
            "samples": self.samples,
            "seed": self.seed,
        }


EXHAUSTIVE = Certificate(True)


def sampled_certificate(policy):
    return Certificate(False, policy.max_degree, policy.samples, policy.seed)


def random_element(alg, rng, max_degree=4):
    if isinstance(alg, FiniteAlgebra):
        return alg.element({k: alg.ring.random(rng) for k in alg.labels})
    if isinstance(alg, FreeAlgebra):
        coeffs = {}
        for _ in range(rng.randint(1, 3)):
            deg = rng.randint(1, max(1, max_degree))
            key = tuple(sorted(rng.choice(alg.generators) for _ in range(deg)))
            coeffs[key] = alg.ring.random(rng)
        return alg.element(coeffs)
    if isinstance(alg, SemidirectAlgebra):
        return alg.pair(
            random_element(alg.left, rng, max_degree),
            random_element(alg.right, rng, max_degree),
        )
    raise BadShape("cannot sample %r" % (alg,))


def _skeleton(alg):
    """Basis elements (finite) or generator elements (free parts)."""
    if alg.is_finite():
        return alg.basis_elements()
    if isinstance(alg, FreeAlgebra):
        return alg.generator_elements()
    if isinstance(alg, SemidirectAlgebra):
        return [alg.embed_left(u) for u in _skeleton(alg.left)] + [
            alg.embed_right(u) for u in _skeleton(alg.right)
        ]
    raise BadShape("cannot span %r" % (alg,))


def law_tuples(algebras, policy=DEFAULT_POLICY, rng=None):
    """Tuples on which to test a multilinear law over the given algebras.

    Returns (tuples, exhaustive).  Exhaustive means the full cartesian
    product of bases was produced and the law check is a proof.
    """
    if all(a.is_finite() for a in algebras):
        tuples = list(itertools.product(*[a.basis_elements() for a in algebras]))
        return tuples, True
    rng = rng or policy.rng()
    tuples = list(itertools.product(*[_skeleton(a) for a in algebras]))
    for _ in range(policy.samples):
        tuples.append(tuple(random_element(a, rng, policy.max_degree) for a in algebras))
    return tuples, False


# ---------------------------------------------------------------------------
# Linear maps


class LinearMap:
    """A kappa-linear map between algebras.

    Evaluation rules:
      "table"        images of the (finite) source basis, extended linearly;
      "substitution" images of free generators, extended as an algebra map
                     (each monomial goes to the product of its images);
      "function"     pointwise-defined (e.g. sums/composites, the w-map).
    """

    def __init__(self, source, target, rule, images=None, fn=None, note=""):
        self.source = source
        self.target = target
        self.rule = rule
        self.images = images
        self.fn = fn
        self.note = note
        self.multiplicative = None  # Certificate once certified

    def __call__(self, u):
        self.source.owns(u)
        if self.rule == "function":
            out = self.fn(u)
            self.target.owns(out)
            return out
        out = self.target.zero()
        if self.rule == "table":
            for key, c in u.coeffs.items():
                img = self.images.get(key)
                if img is not None:
                    out = out + img.scale(c)
            return out
        # substitution: monomial g1...gk -> image(g1) * ... * image(gk)
        for key, c in u.coeffs.items():
            acc = self.images[key[0]]
            for g in key[1:]:
                acc = acc * self.images[g]
            out = out + acc.scale(c)
        return out

    def __repr__(self):
        tag = self.note or self.rule
        return "LinearMap<%r -> %r; %s>" % (self.source, self.target, tag)


def _check_images(source, target, images):
    out = {}
    for key, value in images.items():
        target.owns(value)
        out[key] = value
    return out


def linear_map(source, target, images):
    """Table-defined linear map on a finite source basis."""
    if not source.is_finite():
        raise BadShape("table linear map needs a finite source; use generator images")
    keys = set(source.basis_keys())
    for key in images:
        if key not in keys:
            raise BadShape("image given for unknown key %r" % (key,))
    return LinearMap(source, target, "table", images=_check_images(source, target, images))


def zero_map(source, target):
    return LinearMap(source, target, "function", fn=lambda u: target.zero(), note="zero")


def identity_map(alg):
    f = LinearMap(alg, alg, "function", fn=lambda u: u, note="identity")
    f.multiplicative = EXHAUSTIVE
    return f


def map_add(f, g):
    if f.source is not g.source and not f.source.compatible(g.source):
        raise BadShape("map sum with different sources")
    return LinearMap(f.source, f.target, "function", fn=lambda u: f(u) + g(u), note="sum")


def map_neg(f):
    return LinearMap(f.source, f.target, "function", fn=lambda u: -f(u), note="neg")


def map_compose(f, g):
    """f after g."""
    return LinearMap(g.source, f.target, "function", fn=lambda u: f(g(u)), note="composite")


def certify_multiplicative(f, policy=DEFAULT_POLICY, rng=None):
    tuples, exhaustive = law_tuples([f.source, f.source], policy, rng)
    for u, v in tuples:
        lhs = f(u * v)
        rhs = f(u) * f(v)
        if lhs != rhs:
            raise MorphismViolation((u, v), lhs, rhs)
    cert = EXHAUSTIVE if exhaustive else sampled_certificate(policy)
    f.multiplicative = cert
    return cert


def algebra_morphism(source, target, images=None, fn=None, policy=DEFAULT_POLICY, note=""):
    """Build a certified algebra morphism.

    Finite source: basis-image table, multiplicativity checked on all basis
    pairs.  Free source: generator images, multiplicative by construction
    (substitution).  Function rule: certified on law tuples.
    """
    if fn is not None:
        f = LinearMap(source, target, "function", fn=fn, note=note)
        certify_multiplicative(f, policy)
        return f
    if isinstance(source, FreeAlgebra):
        images = _check_images(source, target, images)
        missing = [g for g in source.generators if g not in images]
        if missing:
            raise BadShape("no image for generators %r" % (missing,))
        unknown = [g for g in images if g not in source.generators]
        if unknown:
            raise BadShape("image for unknown generators %r" % (unknown,))
        f = LinearMap(source, target, "substitution", images=images, note=note)
        f.multiplicative = EXHAUSTIVE  # by construction
        return f
    f = linear_map(source, target, images)
    f.note = note
    certify_multiplicative(f, policy)
    return f


def maps_agree(f, g, elements):
    return all(f(u) == g(u) for u in elements)


def morphisms_equal(f, g):
    """Componentwise equality of algebra maps: on the basis for a finite
    source, on generators for a free source (enough for algebra maps)."""
    if not (f.source.compatible(g.source) and f.target.compatible(g.target)):
        return False
    return maps_agree(f, g, _skeleton(f.source))


# ---------------------------------------------------------------------------
# Actions


class Action:
    """A bilinear map R x M -> M subject to A1 and A2."""

    def __init__(self, acting, acted):
        self.acting = acting
        self.acted = acted
        self.certificate = None

    def __call__(self, r, m):
        raise NotImplementedError

    def same(self, other):
        return self is other


class ZeroAction(Action):
    def __call__(self, r, m):
        self.acting.owns(r)
        self.acted.owns(m)
        return self.acted.zero()

    def same(self, other):
        return isinstance(other, ZeroAction) and other.acting.compatible(self.acting) and other.acted.compatible(self.acted)


class TableAction(Action):
    """Action given on the basis (finite acting algebra) or on generators
    (free acting algebra; monomials act by iterated generator action)."""

    def __init__(self, acting, acted, table):
        super().__init__(acting, acted)
        self.table = table  # actor label -> {acted key -> Element}

    def _act_label(self, label, m):
        row = self.table.get(label)
        if not row:
            return self.acted.zero()
        out = self.acted.zero()
        for key, c in m.coeffs.items():
            img = row.get(key)
            if img is not None:
                out = out + img.scale(c)
        return out

    def __call__(self, r, m):
        self.acting.owns(r)
        self.acted.owns(m)
        out = self.acted.zero()
        for key, c in r.coeffs.items():
            if isinstance(self.acting, FreeAlgebra):
                cur = m
                for g in key:
                    cur = self._act_label(g, cur)
            else:
                cur = self._act_label(key, m)
            out = out + cur.scale(c)
        return out

    def same(self, other):
        return (
            isinstance(other, TableAction)
            and other.acting.compatible(self.acting)
            and other.acted.compatible(self.acted)
            and _tables_equal(self.table, other.table)
        )


def _tables_equal(t1, t2):
    keys = set(t1) | set(t2)
    for k in keys:
        r1 = {kk: v for kk, v in t1.get(k, {}).items() if not v.is_zero()}
        r2 = {kk: v for kk, v in t2.get(k, {}).items() if not v.is_zero()}
        if set(r1) != set(r2):
            return False
        for kk in r1:
            if r1[kk] != r2[kk]:
                return False
    return True


class FunctionAction(Action):
    """Formula-defined action (the derived and simplex-level actions).

    ``origin`` is the structure the formula closes over; two formula
    actions count as the same action when they share the note and the
    origin object (identity), never merely by shape."""

    def __init__(self, acting, acted, fn, note="", origin=None):
        super().__init__(acting, acted)
        self.fn = fn
        self.note = note
        self.origin = origin

    def __call__(self, r, m):
        self.acting.owns(r)
        self.acted.owns(m)
        out = self.fn(r, m)
        self.acted.owns(out)
        return out

    def same(self, other):
        if self is other:
            return True
        return (
            isinstance(other, FunctionAction)
            and self.note == other.note
            and self.origin is not None
            and self.origin is other.origin
            and other.acting.compatible(self.acting)
            and other.acted.compatible(self.acted)
        )


def certify_action(action, policy=DEFAULT_POLICY, rng=None):
    """Certify A1 and A2; raises with a witness triple on failure.

    A1 and A2 are trilinear, so basis tuples prove them in the finite case;
    when the acting algebra is a semidirect product the split basis tuples
    are exactly the reduced conditions for actions of semidirect products.
    """
    rng = rng or policy.rng()
    R, M = action.acting, action.acted
    tuples, ex1 = law_tuples([R, M, M], policy, rng)
    for r, m1, m2 in tuples:
        lhs = action(r, m1 * m2)
        rhs = action(r, m1) * m2
        if lhs != rhs:
            raise A1Violation((r, m1, m2), lhs, rhs)
    tuples, ex2 = law_tuples([R, R, M], policy, rng)
    for r1, r2, m in tuples:
        lhs = action(r1 * r2, m)
        rhs = action(r1, action(r2, m))
        if lhs != rhs:
            raise A2Violation((r1, r2, m), lhs, rhs)
    cert = EXHAUSTIVE if (ex1 and ex2) else sampled_certificate(policy)
    action.certificate = cert
    return cert


def make_action(acting, acted, table, policy=DEFAULT_POLICY):
    """Build a table action and certify A1/A2.

    The table maps basis labels (finite acting algebra) or generator labels
    (free acting algebra) to maps {acted key -> element}.
    """
    if isinstance(acting, FreeAlgebra):
        actor_keys = set(acting.generators)
    elif isinstance(acting, FiniteAlgebra):
        actor_keys = set(acting.labels)
    else:
        raise BadShape("table action needs a finite or free acting algebra")
    norm = {}
    for label, row in table.items():
        if label not in actor_keys:
            raise BadShape("action table actor %r unknown" % (label,))
        out_row = {}
        for key, value in row.items():
            acted.owns(value)
            out_row[acted.check_key(key)] = value
        norm[label] = out_row
    action = TableAction(acting, acted, norm)
    certify_action(action, policy)
    return action


def zero_action(acting, acted):
    action = ZeroAction(acting, acted)
    action.certificate = EXHAUSTIVE
    return action


# ---------------------------------------------------------------------------
# Bilinear maps (Peiffer liftings)


class BilinearMap:
    def __init__(self, left, right, target, table):
        if not left.is_finite() or not right.is_finite():
            raise BadShape("bilinear table needs finite-dimensional arguments")
        self.left = left
        self.right = right
        self.target = target
        norm = {}
        for (k1, k2), value in table.items():
            target.owns(value)
            if not value.is_zero():
                norm[(left.check_key(k1), right.check_key(k2))] = value
        self.table = norm

    def __call__(self, u, v):
        self.left.owns(u)
        self.right.owns(v)
        ring = self.target.ring
        out = self.target.zero()
        for k1, c1 in u.coeffs.items():
            for k2, c2 in v.coeffs.items():
                img = self.table.get((k1, k2))
                if img is not None:
                    out = out + img.scale(ring.mul(c1, c2))
        return out

    def same(self, other):
        return (
            isinstance(other, BilinearMap)
            and other.left.compatible(self.left)
            and other.right.compatible(self.right)
            and other.target.compatible(self.target)
            and other.table == self.table
        )


def zero_bilinear(left, right, target):
    return BilinearMap(left, right, target, {})


# ---------------------------------------------------------------------------
# Semidirect products, certified


def certify_algebra(alg, policy=DEFAULT_POLICY, rng=None):
    """Commutativity on sampled pairs and associativity on sampled triples.

    A regression guard for product-formula transcription; exhaustive on
    finite algebras.
    """
    rng = rng or policy.rng()
    tuples, ex1 = law_tuples([alg, alg], policy, rng)
    for u, v in tuples:
        if u * v != v * u:
            raise NonCommutative((u, v), u * v, v * u)
    tuples, ex2 = law_tuples([alg, alg, alg], policy, rng)
    for u, v, w in tuples:
        if (u * v) * w != u * (v * w):
            raise NonAssociative((u, v, w), (u * v) * w, u * (v * w))
    return EXHAUSTIVE if (ex1 and ex2) else sampled_certificate(policy)


def semidirect(left, right, action, policy=DEFAULT_POLICY, certify=True):
    """R |x E with the convention (r,e)(r',e') = (rr', r>e' + r'>e + ee')."""
    alg = SemidirectAlgebra(left, right, action)  # raises ActionMismatch
    if certify:
        certify_algebra(alg, policy)
    return alg
