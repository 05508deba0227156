"""Commutative, possibly non-unital algebras over an exact field.

Three representations:

* ``FiniteAlgebra`` -- ordered basis plus a symmetric, associative table of
  structure constants (both certified at construction);
* ``FreeAlgebra`` -- the non-unital free commutative algebra on a generator
  set: polynomials with zero constant term, monomials stored as sorted
  label tuples;
* ``SemidirectAlgebra`` -- R (x) E as a module, with the product
  (r,e)(r',e') = (rr', r>e' + r'>e + ee') for a validated action >.

Elements are sparse scalar maps over basis labels / monomials / tagged
component keys, kept in canonical normal form, so equality is structural.
All values are immutable after construction and every operation is pure.
"""

from .errors import (
    ActionMismatch,
    BadShape,
    DuplicateGenerator,
    NonAssociative,
    NonCommutative,
    OwnerMismatch,
)


class Element:
    """A vector in an algebra: finite map from keys to nonzero scalars."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = coeffs  # normalized by Algebra.element

    def is_zero(self):
        return not self.coeffs

    def _check_owner(self, other):
        if not isinstance(other, Element):
            raise OwnerMismatch("expected an Element, got %r" % (other,))
        if self.algebra is not other.algebra and not self.algebra.compatible(other.algebra):
            raise OwnerMismatch("elements of %r and %r" % (self.algebra, other.algebra))

    def __add__(self, other):
        self._check_owner(other)
        ring = self.algebra.ring
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = ring.add(out.get(k, ring.zero), c)
            if ring.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
        return Element(self.algebra, out)

    def __neg__(self):
        ring = self.algebra.ring
        return Element(self.algebra, {k: ring.neg(c) for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        ring = self.algebra.ring
        scalar = ring.coerce(scalar)
        if ring.is_zero(scalar):
            return Element(self.algebra, {})
        return Element(self.algebra, {k: ring.mul(scalar, c) for k, c in self.coeffs.items()})

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_owner(other)
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __eq__(self, other):
        self._check_owner(other)
        return self.coeffs == other.coeffs

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __str__(self):
        return self.algebra.element_str(self)

    def __repr__(self):
        return "<%s>" % self.algebra.element_str(self)


class Algebra:
    ring = None

    # -- elements ----------------------------------------------------------

    def element(self, coeffs):
        """Normalize a key->scalar mapping into an Element (drops zeros)."""
        ring = self.ring
        out = {}
        for key, value in coeffs.items():
            key = self.check_key(key)
            value = ring.coerce(value)
            if key in out:
                value = ring.add(out[key], value)
            if ring.is_zero(value):
                out.pop(key, None)
            else:
                out[key] = value
        return Element(self, out)

    def zero(self):
        return Element(self, {})

    def basis_element(self, key):
        return Element(self, {self.check_key(key): self.ring.one})

    def check_key(self, key):
        raise NotImplementedError

    def owns(self, u):
        if not isinstance(u, Element):
            raise OwnerMismatch("expected an Element, got %r" % (u,))
        if u.algebra is not self and not self.compatible(u.algebra):
            raise OwnerMismatch("element %r does not live in %r" % (u, self))
        return u

    # -- multiplication ----------------------------------------------------

    def key_mul(self, k1, k2):
        raise NotImplementedError

    def multiply(self, u, v):
        ring = self.ring
        acc = {}
        for k1, c1 in u.coeffs.items():
            for k2, c2 in v.coeffs.items():
                c = ring.mul(c1, c2)
                for k, cv in self.key_mul(k1, k2).coeffs.items():
                    s = ring.add(acc.get(k, ring.zero), ring.mul(c, cv))
                    if ring.is_zero(s):
                        acc.pop(k, None)
                    else:
                        acc[k] = s
        return Element(self, acc)

    # -- shape -------------------------------------------------------------

    def dim(self):
        """Dimension over the ring, or None when infinite."""
        raise NotImplementedError

    def is_finite(self):
        return self.dim() is not None

    def basis_keys(self):
        """Keys of a module basis (finite algebras only)."""
        raise BadShape("%r has no finite basis" % (self,))

    def basis_elements(self):
        return [self.basis_element(k) for k in self.basis_keys()]

    def compatible(self, other):
        raise NotImplementedError

    def element_str(self, u):
        if not u.coeffs:
            return "0"
        parts = []
        for key in sorted(u.coeffs):
            c = u.coeffs[key]
            cs = self.ring.to_str(c)
            ks = self.key_str(key)
            if cs == "1":
                parts.append(ks)
            elif cs == "-1":
                parts.append("-" + ks)
            else:
                parts.append("%s*%s" % (cs, ks))
        return " + ".join(parts).replace("+ -", "- ")

    def key_str(self, key):
        return str(key)


class FiniteAlgebra(Algebra):
    """Finite-dimensional algebra given by structure constants."""

    def __init__(self, ring, labels, table):
        self.ring = ring
        self.labels = tuple(labels)
        self._labelset = set(self.labels)
        self._table = table  # (label, label) -> dict(label -> scalar), both orders present

    def check_key(self, key):
        if key not in self._labelset:
            raise BadShape("unknown basis label %r of %r" % (key, self))
        return key

    def key_mul(self, k1, k2):
        return Element(self, dict(self._table.get((k1, k2), {})))

    def dim(self):
        return len(self.labels)

    def basis_keys(self):
        return list(self.labels)

    def compatible(self, other):
        return (
            isinstance(other, FiniteAlgebra)
            and other.ring == self.ring
            and other.labels == self.labels
            and other._table == self._table
        )

    def __repr__(self):
        return "FiniteAlgebra<%s>" % ",".join(self.labels)


class FreeAlgebra(Algebra):
    """Non-unital free commutative algebra: constant-free polynomials."""

    def __init__(self, ring, generators):
        self.ring = ring
        self.generators = tuple(generators)
        self._genset = set(self.generators)

    def check_key(self, key):
        if not isinstance(key, tuple) or not key:
            raise BadShape("monomial key must be a nonempty tuple, got %r" % (key,))
        for g in key:
            if g not in self._genset:
                raise BadShape("unknown generator %r of %r" % (g, self))
        return tuple(sorted(key))

    def key_mul(self, k1, k2):
        return Element(self, {tuple(sorted(k1 + k2)): self.ring.one})

    def dim(self):
        return None

    def generator_elements(self):
        return [self.basis_element((g,)) for g in self.generators]

    def monomial(self, *labels):
        return self.basis_element(tuple(labels))

    def compatible(self, other):
        return (
            isinstance(other, FreeAlgebra)
            and other.ring == self.ring
            and other.generators == self.generators
        )

    def key_str(self, key):
        parts = []
        for g in sorted(set(key)):
            n = key.count(g)
            parts.append(g if n == 1 else "%s^%d" % (g, n))
        return "*".join(parts)

    def parse_monomial(self, text):
        key = []
        for factor in text.split("*"):
            factor = factor.strip()
            name, _, power = factor.partition("^")
            n = 1
            if power:
                try:
                    n = int(power)
                except ValueError:
                    raise BadShape("bad monomial %r" % text)
            if n < 1 or name not in self._genset:
                raise BadShape("bad monomial %r for %r" % (text, self))
            key.extend([name] * n)
        return self.check_key(tuple(key))

    def __repr__(self):
        return "FreeAlgebra<%s>" % ",".join(self.generators)


class SemidirectAlgebra(Algebra):
    """R ltimes E for a validated action of R on E.

    Keys are tagged: (0, key-of-R) for the acting part, (1, key-of-E)
    for the acted part.
    """

    def __init__(self, left, right, action):
        if left.ring != right.ring:
            raise ActionMismatch("semidirect parts over different rings")
        if not (action.acting.compatible(left) and action.acted.compatible(right)):
            raise ActionMismatch("action endpoints do not match the semidirect parts")
        self.ring = left.ring
        self.left = left
        self.right = right
        self.action = action
        self._mulcache = {}  # basis-key products recur heavily in law checks

    def check_key(self, key):
        if not (isinstance(key, tuple) and len(key) == 2 and key[0] in (0, 1)):
            raise BadShape("semidirect key must be (side, subkey), got %r" % (key,))
        side, sub = key
        part = self.left if side == 0 else self.right
        return (side, part.check_key(sub))

    def key_mul(self, k1, k2):
        cached = self._mulcache.get((k1, k2))
        if cached is not None:
            return cached
        s1, a = k1
        s2, b = k2
        if s1 == 0 and s2 == 0:
            out = self.embed_left(self.left.key_mul(a, b))
        elif s1 == 1 and s2 == 1:
            out = self.embed_right(self.right.key_mul(a, b))
        else:
            if s1 == 0:
                acted = self.action(self.left.basis_element(a), self.right.basis_element(b))
            else:
                acted = self.action(self.left.basis_element(b), self.right.basis_element(a))
            out = self.embed_right(acted)
        self._mulcache[(k1, k2)] = out
        return out

    def embed_left(self, u):
        self.left.owns(u)
        return Element(self, {(0, k): c for k, c in u.coeffs.items()})

    def embed_right(self, u):
        self.right.owns(u)
        return Element(self, {(1, k): c for k, c in u.coeffs.items()})

    def pair(self, u, v):
        return self.embed_left(u) + self.embed_right(v)

    def split(self, w):
        """Inverse of pair: the (left, right) components of an element."""
        self.owns(w)
        left = {}
        right = {}
        for (side, k), c in w.coeffs.items():
            (left if side == 0 else right)[k] = c
        return Element(self.left, left), Element(self.right, right)

    def __repr__(self):
        return "Semidirect<%r |x %r>" % (self.left, self.right)

    def dim(self):
        dl, dr = self.left.dim(), self.right.dim()
        if dl is None or dr is None:
            return None
        return dl + dr

    def basis_keys(self):
        return [(0, k) for k in self.left.basis_keys()] + [(1, k) for k in self.right.basis_keys()]

    def compatible(self, other):
        return (
            isinstance(other, SemidirectAlgebra)
            and other.left.compatible(self.left)
            and other.right.compatible(self.right)
            and self.action.same(other.action)
        )

    def element_str(self, u):
        l, r = self.split(u)
        return "(%s, %s)" % (self.left.element_str(l), self.right.element_str(r))


def make_finite_algebra(basis, constants, ring):
    """Build and certify a FiniteAlgebra.

    ``constants`` maps ordered label pairs to element mappings; omitted
    pairs multiply to zero.  Commutativity is checked on all ordered basis
    pairs and associativity on all basis triples, exhaustively.
    """
    labels = tuple(basis)
    if len(set(labels)) != len(labels):
        raise DuplicateGenerator("repeated basis label in %r" % (labels,))
    labelset = set(labels)
    table = {}
    for pair, value in constants.items():
        if not (isinstance(pair, tuple) and len(pair) == 2):
            raise BadShape("structure table key %r is not a label pair" % (pair,))
        i, j = pair
        if i not in labelset or j not in labelset:
            raise BadShape("structure table pair %r uses unknown labels" % (pair,))
        row = {}
        for k, c in value.items():
            if k not in labelset:
                raise BadShape("structure constant target %r unknown" % (k,))
            c = ring.coerce(c)
            if not ring.is_zero(c):
                row[k] = c
        table[(i, j)] = row
    for i in labels:
        for j in labels:
            if table.get((i, j), {}) != table.get((j, i), {}):
                raise NonCommutative((i, j), table.get((i, j), {}), table.get((j, i), {}))
    full = {}
    for i in labels:
        for j in labels:
            row = table.get((i, j), {})
            if row:
                full[(i, j)] = row
    alg = FiniteAlgebra(ring, labels, full)
    for i in labels:
        ei = alg.basis_element(i)
        for j in labels:
            ej = alg.basis_element(j)
            ij = alg.multiply(ei, ej)
            for k in labels:
                ek = alg.basis_element(k)
                lhs = alg.multiply(ij, ek)
                rhs = alg.multiply(ei, alg.multiply(ej, ek))
                if lhs != rhs:
                    raise NonAssociative((i, j, k), lhs, rhs)
    return alg


def make_free_algebra(generators, ring):
    gens = tuple(generators)
    if len(set(gens)) != len(gens):
        raise DuplicateGenerator("repeated generator in %r" % (gens,))
    return FreeAlgebra(ring, gens)


def zero_algebra(ring):
    """The zero algebra, as a finite algebra with empty basis."""
    return FiniteAlgebra(ring, (), {})


def split_pair(u):
    """Split an element of a semidirect algebra into its two components."""
    alg = u.algebra
    if not isinstance(alg, SemidirectAlgebra):
        raise OwnerMismatch("split_pair on non-semidirect element %r" % (u,))
    return alg.split(u)
