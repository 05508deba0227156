"""Random valid structures for property suites, seeded and deterministic.

Generation is constructive where a family is known to be valid, and
rejection sampling over small tables otherwise: every candidate goes
through the full validators, so nothing unvalidated ever escapes.  Each
generator takes an explicit rng; callers derive them from a seed.
"""

from .algebra import make_finite_algebra, make_free_algebra
from .crossed import (
    kernel_two_crossed,
    make_cm_morphism,
    make_precrossed,
    make_two_crossed,
    make_2cm_morphism,
    zero_2cm_morphism,
)
from .errors import LawViolation
from .maps import (
    DEFAULT_POLICY,
    BilinearMap,
    algebra_morphism,
    identity_map,
    make_action,
    zero_action,
)
from .cm_homotopy import make_cm_derivation


def random_scalar(ring, rng):
    return ring.random(rng)


def _random_element(alg, rng, density=0.6):
    coeffs = {}
    for k in alg.basis_keys():
        if rng.random() < density:
            coeffs[k] = ring_random(alg.ring, rng)
    return alg.element(coeffs)


def ring_random(ring, rng):
    return ring.random(rng)


def random_finite_algebra(ring, rng, max_dim=2):
    """A commutative associative algebra of dimension <= max_dim."""
    dim = rng.randint(1, max_dim)
    labels = ["u%d" % i for i in range(dim)]
    choice = rng.random()
    if choice < 0.25:
        return make_finite_algebra(labels, {}, ring)  # zero products
    if choice < 0.5:
        # truncated polynomial: u_i u_j = u_{i+j}, indices past the end die
        table = {}
        for i in range(dim):
            for j in range(dim):
                k = i + j + 1
                if k < dim:
                    table[(labels[i], labels[j])] = {labels[k]: 1}
        return make_finite_algebra(labels, table, ring)
    for _ in range(60):
        table = {}
        for i in range(dim):
            for j in range(i, dim):
                if rng.random() < 0.5:
                    continue
                row = {}
                for k in range(dim):
                    if rng.random() < 0.4:
                        row[labels[k]] = ring_random(ring, rng)
                if row:
                    table[(labels[i], labels[j])] = row
                    table[(labels[j], labels[i])] = row
        try:
            return make_finite_algebra(labels, table, ring)
        except LawViolation:
            continue
    return make_finite_algebra(labels, {}, ring)


def random_action(R, M, rng, attempts=40, policy=DEFAULT_POLICY):
    """A certified action of R on M; falls back to the zero action."""
    for _ in range(attempts):
        table = {}
        for r in R.basis_keys():
            row = {}
            for m in M.basis_keys():
                if rng.random() < 0.4:
                    row[m] = _random_element(M, rng, density=0.4)
            table[r] = {k: v for k, v in row.items() if not v.is_zero()}
        try:
            return make_action(R, M, table, policy)
        except LawViolation:
            continue
    return zero_action(R, M)


def random_precrossed(ring, rng, max_dim=2, policy=DEFAULT_POLICY):
    """A valid pre-crossed module with dim E, dim R <= max_dim."""
    if rng.random() < 0.5:
        return _square_family_precrossed(ring, rng)
    R = random_finite_algebra(ring, rng, max_dim)
    E = random_finite_algebra(ring, rng, max_dim)
    act = random_action(R, E, rng, policy=policy)
    for _ in range(80):
        images = {k: _random_element(R, rng, density=0.5) for k in E.basis_keys()}
        try:
            d = algebra_morphism(E, R, images=images, policy=policy)
            return make_precrossed(E, R, d, act, policy)
        except LawViolation:
            continue
    d = algebra_morphism(E, R, images={k: R.zero() for k in E.basis_keys()}, policy=policy)
    return make_precrossed(E, R, d, act, policy)


def _square_family_precrossed(ring, rng):
    """E = <a, b; a^2 = b> -> R = <p; p^2 = 0>, d(a) = c*p, p > a = v*b.

    XM1 holds for every (c, v), so the kernel construction yields a
    2-crossed module with Peiffer lifting {a (x) a} = (1 - v)*b: a cheap
    supply of targets with nonzero liftings and nonzero actions.
    """
    R = make_finite_algebra(["p"], {}, ring)
    E = make_finite_algebra(["a", "b"], {("a", "a"): {"b": 1}}, ring)
    v = ring_random(ring, rng)
    c = ring.one if rng.random() < 0.5 else ring_random(ring, rng)
    act_table = {"p": {"a": E.element({"b": v})}}
    act = make_action(R, E, act_table)
    d = algebra_morphism(E, R, images={"a": R.element({"p": c}), "b": R.zero()})
    return make_precrossed(E, R, d, act)


def random_two_crossed(ring, rng, max_dim=2, policy=DEFAULT_POLICY):
    """A valid 2-crossed module over the ring (via the kernel example)."""
    return kernel_two_crossed(random_precrossed(ring, rng, max_dim, policy), policy)


def random_free_two_crossed(ring, rng, max_dim=2, policy=DEFAULT_POLICY):
    """A free-up-to-order-one domain with E != 0.

    R = ring[x]+ with basis {x}; E is a random finite algebra; L = E with
    d2 the identity and the lifting the multiplication; d1 = 0 and the
    R-actions vanish (forced: over a free polynomial R and finite E, the
    boundary-equivariance law has no nonzero solutions).
    """
    R = make_free_algebra(["x"], ring)
    E = random_finite_algebra(ring, rng, max_dim)
    L = E
    lift_table = {}
    for i in E.basis_keys():
        for j in E.basis_keys():
            value = E.basis_element(i) * E.basis_element(j)
            if not value.is_zero():
                lift_table[(i, j)] = value
    return make_two_crossed(
        L, E, R,
        d2=identity_map(E),
        d1=algebra_morphism(E, R, images={k: R.zero() for k in E.basis_keys()}, policy=policy),
        act_e=zero_action(R, E),
        act_l=zero_action(R, L),
        lift=BilinearMap(E, E, L, lift_table),
        free_basis=["x"],
        policy=policy,
    )


# ---------------------------------------------------------------------------
# Random morphisms and derivations (rejection; zero maps as fallback)


def random_cm_morphism(A, B, rng, attempts=200, policy=DEFAULT_POLICY):
    for _ in range(attempts):
        try:
            f0 = algebra_morphism(
                A.R, B.R,
                images={k: _random_element(B.R, rng, density=0.5) for k in A.R.basis_keys()},
                policy=policy,
            )
            f1 = algebra_morphism(
                A.E, B.E,
                images={k: _random_element(B.E, rng, density=0.5) for k in A.E.basis_keys()},
                policy=policy,
            )
            return make_cm_morphism(A, B, f0, f1, policy)
        except LawViolation:
            continue
    f0 = algebra_morphism(A.R, B.R, images={k: B.R.zero() for k in A.R.basis_keys()}, policy=policy)
    f1 = algebra_morphism(A.E, B.E, images={k: B.E.zero() for k in A.E.basis_keys()}, policy=policy)
    return make_cm_morphism(A, B, f0, f1, policy)


def random_cm_derivation(f, rng, attempts=200, policy=DEFAULT_POLICY):
    for _ in range(attempts):
        images = {k: _random_element(f.tgt.E, rng, density=0.5) for k in f.src.R.basis_keys()}
        try:
            return make_cm_derivation(f, images, policy)
        except LawViolation:
            continue
    return make_cm_derivation(f, {}, policy)


def _morphism_images(source, target, rng, density):
    if source.is_finite():
        keys = source.basis_keys()
    else:
        keys = list(source.generators)
    return {k: _random_element(target, rng, density=density) for k in keys}


def random_2cm_morphism(A, B, rng, attempts=120, policy=DEFAULT_POLICY):
    for _ in range(attempts):
        try:
            f0 = algebra_morphism(A.R, B.R, images=_morphism_images(A.R, B.R, rng, 0.5), policy=policy)
            f1 = algebra_morphism(A.E, B.E, images=_morphism_images(A.E, B.E, rng, 0.5), policy=policy)
            f2 = algebra_morphism(A.L, B.L, images=_morphism_images(A.L, B.L, rng, 0.5), policy=policy)
            return make_2cm_morphism(A, B, f0, f1, f2, policy)
        except LawViolation:
            continue
    return zero_2cm_morphism(A, B, policy)


def random_quadratic_derivation(f, rng, attempts=80, policy=DEFAULT_POLICY):
    """A valid quadratic f-derivation; s is free on the basis B, t is
    found by rejection over small tables (the laws are the arbiter)."""
    from .tcm_homotopy import make_quadratic_derivation

    A, B = f.src, f.tgt
    s_images = {b: _random_element(B.E, rng, density=0.6) for b in (A.free_basis or [])}
    for trial in range(attempts):
        t_images = {k: _random_element(B.L, rng, density=0.5) for k in A.E.basis_keys()}
        try:
            return make_quadratic_derivation(f, s_images, t_images, policy)
        except LawViolation:
            continue
    for s_try in (s_images, {}):
        try:
            return make_quadratic_derivation(f, s_try, {}, policy)
        except LawViolation:
            continue
    return make_quadratic_derivation(f, {}, {}, policy)
