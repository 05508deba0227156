"""Simplex algebras of a 2-crossed module and their simplicial structure.

Over A = (L -d2-> E -d1-> R) the levels are the iterated semidirect
products

    Lam0 = R
    Lam1 = R |x E
    Lam2 = (R |x E) |x (E |x L)          via the action >.
    Lam3 = Lam2 |x ((E |x L) |x L)       via the action >t

together with the auxiliary actions >*, >1e, >1r, >1, >2e, >2l, >2 that
assemble >t.  Each auxiliary action is materialized as a first-class
Action and certified independently (A1/A2), so every construction lemma
is a unit-testable object.  Faces and degeneracies are certified algebra
morphisms; tuples are ordered (r, e, e', l) and (r, e, e', l, e'', l', l'')
and every face/degeneracy formula is transcribed against that order.
"""

from .errors import IndexOutOfRange
from .maps import (
    DEFAULT_POLICY,
    FunctionAction,
    algebra_morphism,
    certify_action,
    law_tuples,
    semidirect,
)


def action_bullet(A, lam1, el):
    """(r,e) >. (e',l) = (ee' + r>e', d1(e)>l + r>l - {e' (x) e})."""

    def fn(actor, actee):
        r, e = lam1.split(actor)
        e2, l = el.split(actee)
        first = e * e2 + A.act_e(r, e2)
        second = A.act_l(A.d1(e), l) + A.act_l(r, l) - A.lift(e2, e)
        return el.pair(first, second)

    return FunctionAction(lam1, el, fn, note="bullet", origin=A)


def action_star(A, el):
    """(e,l) >* l' = e >' l' + ll'."""

    def fn(actor, actee):
        e, l = el.split(actor)
        return A.act_prime(e, actee) + l * actee

    return FunctionAction(el, A.L, fn, note="star", origin=A)


def action_one_e(A, el, ell):
    """e >1e (e',l,l') = (ee', d1(e)>l - {e' (x) e}, d1(e)>l')."""

    def fn(e, actee):
        (e2, l), l2 = _split_ell(el, ell, actee)
        de = A.d1(e)
        return ell.pair(el.pair(e * e2, A.act_l(de, l) - A.lift(e2, e)), A.act_l(de, l2))

    return FunctionAction(A.E, ell, fn, note="one_e", origin=A)


def action_one_r(A, el, ell):
    """r >1r (e',l,l') = (r>e', r>l, r>l')."""

    def fn(r, actee):
        (e2, l), l2 = _split_ell(el, ell, actee)
        return ell.pair(el.pair(A.act_e(r, e2), A.act_l(r, l)), A.act_l(r, l2))

    return FunctionAction(A.R, ell, fn, note="one_r", origin=A)


def action_one(A, lam1, el, ell):
    """(r,e) >1 x = r >1r x + e >1e x."""
    one_e = action_one_e(A, el, ell)
    one_r = action_one_r(A, el, ell)

    def fn(actor, actee):
        r, e = lam1.split(actor)
        return one_r(r, actee) + one_e(e, actee)

    return FunctionAction(lam1, ell, fn, note="one", origin=A)


def action_two_e(A, el, ell):
    """e >2e (e',l,l') = (ee', e>'l, d1(e)>l' - {d2(l)+e' (x) e})."""

    def fn(e, actee):
        (e2, l), l2 = _split_ell(el, ell, actee)
        third = A.act_l(A.d1(e), l2) - A.lift(A.d2(l) + e2, e)
        return ell.pair(el.pair(e * e2, A.act_prime(e, l)), third)

    return FunctionAction(A.E, ell, fn, note="two_e", origin=A)


def action_two_l(A, el, ell):
    """k >2l (e',l,l') = (0, e'>'k + kl, -{d2(l)+e' (x) d2(k)})."""

    def fn(k, actee):
        (e2, l), _ = _split_ell(el, ell, actee)
        second = A.act_prime(e2, k) + k * l
        third = -A.lift(A.d2(l) + e2, A.d2(k))
        return ell.pair(el.pair(A.E.zero(), second), third)

    return FunctionAction(A.L, ell, fn, note="two_l", origin=A)


def action_two(A, el, ell):
    """(e,l'') >2 (e',l,l') =
    (ee', e>'l + e'>'l'' + l''l, d1(e)>l' - {d2(l)+e' (x) d2(l'')+e})."""
    two_e = action_two_e(A, el, ell)
    two_l = action_two_l(A, el, ell)

    def fn(actor, actee):
        e, l3 = el.split(actor)
        return two_e(e, actee) + two_l(l3, actee)

    return FunctionAction(el, ell, fn, note="two", origin=A)


def action_dagger(A, lam1, lam2, el, ell):
    """(r,e,0,0) >t = (r,e) >1 and (0,0,e,l'') >t = (e,l'') >2."""
    one = action_one(A, lam1, el, ell)
    two = action_two(A, el, ell)

    def fn(actor, actee):
        a, m = lam2.split(actor)
        return one(a, actee) + two(m, actee)

    return FunctionAction(lam2, ell, fn, note="dagger", origin=A)


def _split_ell(el, ell, u):
    pair, l2 = ell.split(u)
    return el.split(pair), l2


class SimplexTower:
    """Levels Lam0..Lam3 with certified faces, degeneracies, and actions.

    faces[(n, i)] : Lam_n -> Lam_{n-1};  degeneracies[(n, i)] : Lam_n -> Lam_{n+1}.
    """

    def __init__(self, base, levels, el, ell, faces, degeneracies, actions):
        self.base = base
        self.levels = levels
        self.el = el
        self.ell = ell
        self.faces = faces
        self.degeneracies = degeneracies
        self.actions = actions

    def face(self, n, i, u):
        if (n, i) not in self.faces:
            raise IndexOutOfRange("no face d%d at level %d" % (i, n))
        return self.faces[(n, i)](u)

    def degeneracy(self, n, i, u):
        if (n, i) not in self.degeneracies:
            raise IndexOutOfRange("no degeneracy s%d at level %d" % (i, n))
        return self.degeneracies[(n, i)](u)

    # tuple packing ---------------------------------------------------

    def simplex2(self, r, e, e2, l):
        lam1, lam2 = self.levels[1], self.levels[2]
        return lam2.pair(lam1.pair(r, e), self.el.pair(e2, l))

    def split2(self, u):
        a, m = self.levels[2].split(u)
        r, e = self.levels[1].split(a)
        e2, l = self.el.split(m)
        return r, e, e2, l

    def simplex3(self, r, e, e2, l, e3, l2, l3):
        lam3 = self.levels[3]
        return lam3.pair(self.simplex2(r, e, e2, l), self.ell.pair(self.el.pair(e3, l2), l3))

    def split3(self, u):
        q, m = self.levels[3].split(u)
        (e3, l2), l3 = _split_ell(self.el, self.ell, m)
        return self.split2(q) + (e3, l2, l3)

    def tuple_str(self, u):
        alg = u.algebra
        if alg.compatible(self.levels[2]):
            parts = self.split2(u)
        elif alg.compatible(self.levels[3]):
            parts = self.split3(u)
        elif alg.compatible(self.levels[1]):
            parts = self.levels[1].split(u)
        else:
            return str(u)
        return "(%s)" % ", ".join(str(p) for p in parts)


def build_tower(A, policy=DEFAULT_POLICY):
    """Construct Lam0..Lam3 over A with every action, multiplication,
    face and degeneracy certified."""
    R, E, L = A.R, A.E, A.L
    bd1, bd2 = A.d1, A.d2

    el = semidirect(E, L, A.act_prime, policy)
    lam1 = semidirect(R, E, A.act_e, policy)

    actions = {"prime": A.act_prime}
    bullet = action_bullet(A, lam1, el)
    certify_action(bullet, policy)
    actions["bullet"] = bullet
    lam2 = semidirect(lam1, el, bullet, policy)

    star = action_star(A, el)
    certify_action(star, policy)
    actions["star"] = star
    ell = semidirect(el, L, star, policy)

    for name, builder in (
        ("one_e", lambda: action_one_e(A, el, ell)),
        ("one_r", lambda: action_one_r(A, el, ell)),
        ("one", lambda: action_one(A, lam1, el, ell)),
        ("two_e", lambda: action_two_e(A, el, ell)),
        ("two_l", lambda: action_two_l(A, el, ell)),
        ("two", lambda: action_two(A, el, ell)),
    ):
        act = builder()
        certify_action(act, policy)
        actions[name] = act

    dagger = action_dagger(A, lam1, lam2, el, ell)
    certify_action(dagger, policy)
    actions["dagger"] = dagger
    lam3 = semidirect(lam2, ell, dagger, policy)

    levels = (R, lam1, lam2, lam3)
    tower = SimplexTower(A, levels, el, ell, {}, {}, actions)

    def face1_0(u):
        r, _ = lam1.split(u)
        return r

    def face1_1(u):
        r, e = lam1.split(u)
        return r + bd1(e)

    def face2(i):
        def fn(u):
            r, e, e2, l = tower.split2(u)
            if i == 0:
                return lam1.pair(r, e)
            if i == 1:
                return lam1.pair(r, e + e2)
            return lam1.pair(r + bd1(e), e2 + bd2(l))

        return fn

    def face3(i):
        def fn(u):
            r, e, e2, l, e3, l2, l3 = tower.split3(u)
            if i == 0:
                return tower.simplex2(r, e, e2, l)
            if i == 1:
                return tower.simplex2(r, e, e2 + e3, l + l2)
            if i == 2:
                return tower.simplex2(r, e + e2, e3, l2 + l3)
            return tower.simplex2(r + bd1(e), e2 + bd2(l), e3 + bd2(l2), l3)

        return fn

    faces = {
        (1, 0): algebra_morphism(lam1, R, fn=face1_0, policy=policy, note="d0@1"),
        (1, 1): algebra_morphism(lam1, R, fn=face1_1, policy=policy, note="d1@1"),
    }
    for i in range(3):
        faces[(2, i)] = algebra_morphism(lam2, lam1, fn=face2(i), policy=policy, note="d%d@2" % i)
    for i in range(4):
        faces[(3, i)] = algebra_morphism(lam3, lam2, fn=face3(i), policy=policy, note="d%d@3" % i)

    def degen0(u):
        return lam1.pair(u, E.zero())

    def degen1(i):
        def fn(u):
            r, e = lam1.split(u)
            if i == 0:
                return tower.simplex2(r, e, E.zero(), L.zero())
            return tower.simplex2(r, E.zero(), e, L.zero())

        return fn

    def degen2(i):
        def fn(u):
            r, e, e2, l = tower.split2(u)
            zE, zL = E.zero(), L.zero()
            if i == 0:
                return tower.simplex3(r, e, e2, l, zE, zL, zL)
            if i == 1:
                return tower.simplex3(r, e, zE, zL, e2, l, zL)
            return tower.simplex3(r, zE, e, zL, e2, zL, l)

        return fn

    degens = {(0, 0): algebra_morphism(R, lam1, fn=degen0, policy=policy, note="s0@0")}
    for i in range(2):
        degens[(1, i)] = algebra_morphism(lam1, lam2, fn=degen1(i), policy=policy, note="s%d@1" % i)
    for i in range(3):
        degens[(2, i)] = algebra_morphism(lam2, lam3, fn=degen2(i), policy=policy, note="s%d@2" % i)

    tower.faces.update(faces)
    tower.degeneracies.update(degens)
    return tower


_TOWERS = {}


def get_tower(A, policy=DEFAULT_POLICY):
    """Build (or reuse) the certified tower over A."""
    key = (id(A), policy)
    tower = _TOWERS.get(key)
    if tower is None or tower.base is not A:
        tower = build_tower(A, policy)
        _TOWERS[key] = tower
    return tower


def simplicial_identity_list():
    """The complete standard list at the constructed levels.

    Entries (kind, data, level) with kind in {"dd", "ds", "ss"}:
      dd: d_i d_j = d_{j-1} d_i  (i < j), applied to level `n`;
      ss: s_i s_j = s_{j+1} s_i  (i <= j), from level `n`;
      ds: d_i s_j with the usual three cases, from level `n`.
    """
    out = []
    for n, top in ((2, 2), (3, 3)):
        for j in range(top + 1):
            for i in range(j):
                out.append(("dd", (i, j), n))
    for n, top in ((0, 0), (1, 1)):
        for j in range(top + 1):
            for i in range(j + 1):
                out.append(("ss", (i, j), n))
    for n, sc, fc in ((0, 1, 2), (1, 2, 3), (2, 3, 4)):
        for j in range(sc):
            for i in range(fc):
                out.append(("ds", (i, j), n))
    return out


def check_simplicial_identities(T, policy=DEFAULT_POLICY, rng=None):
    """Verify every listed identity pointwise; returns report entries
    (name, ok, witness string or None)."""
    rng = rng or policy.rng()
    entries = []

    def probe(n):
        tuples, _ = law_tuples([T.levels[n]], policy, rng)
        return [u for (u,) in tuples]

    for kind, (i, j), n in simplicial_identity_list():
        if kind == "dd":
            name = "d%d.d%d=d%d.d%d@%d" % (i, j, j - 1, i, n)
            lhs = lambda u: T.face(n - 1, i, T.face(n, j, u))
            rhs = lambda u: T.face(n - 1, j - 1, T.face(n, i, u))
        elif kind == "ss":
            name = "s%d.s%d=s%d.s%d@%d" % (j + 1, i, i, j, n)
            lhs = lambda u: T.degeneracy(n + 1, j + 1, T.degeneracy(n, i, u))
            rhs = lambda u: T.degeneracy(n + 1, i, T.degeneracy(n, j, u))
        else:
            lhs = lambda u: T.face(n + 1, i, T.degeneracy(n, j, u))
            if i == j or i == j + 1:
                name = "d%d.s%d=id@%d" % (i, j, n)
                rhs = lambda u: u
            elif i < j:
                name = "d%d.s%d=s%d.d%d@%d" % (i, j, j - 1, i, n)
                rhs = lambda u: T.degeneracy(n - 1, j - 1, T.face(n, i, u))
            else:
                name = "d%d.s%d=s%d.d%d@%d" % (i, j, j, i - 1, n)
                rhs = lambda u: T.degeneracy(n - 1, j, T.face(n, i - 1, u))
        witness = None
        for u in probe(n):
            a, b = lhs(u), rhs(u)
            if a != b:
                witness = "at %s: %s != %s" % (u, a, b)
                break
        entries.append((name, witness is None, witness))
    return entries


def with_face(T, n, i, linmap):
    """A copy of the tower with one face replaced (mutation testing)."""
    faces = dict(T.faces)
    faces[(n, i)] = linmap
    return SimplexTower(T.base, T.levels, T.el, T.ell, faces, dict(T.degeneracies), T.actions)
