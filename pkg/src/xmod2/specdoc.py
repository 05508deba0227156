"""Ingestion of structure files: one JSON document naming everything.

Schema (all scalars are strings, e.g. "3/4" or "2 mod 5"; elements are
{key: scalar} maps where a key is a basis label or a monomial like
"x^2*y"; linear maps are {source-key: element}):

    {
      "ring": "Q" | {"prime": 5},
      "algebras": {
        NAME: {"type": "finite", "basis": [...], "products": {k: {k: elem}}}
            | {"type": "free", "generators": [...]}
            | {"type": "semidirect", "acting": NAME, "acted": NAME, "action": NAME}
      },
      "actions": {
        NAME: {"acting": NAME, "acted": NAME, "table": {k: {k: elem}}}
            | {"acting": NAME, "acted": NAME, "zero": true}
      },
      "precrossed":  {NAME: {"E": NAME, "R": NAME, "map": linmap, "action": NAME}},
      "crossed":     {NAME: {...same} | {"ideal": {"R": NAME, "labels": [...]}}},
      "two_crossed": {
        NAME: {"L": NAME, "E": NAME, "R": NAME, "d2": linmap, "d1": linmap,
               "action_e": NAME, "action_l": NAME,
               "lifting": {k: {k: elem}}, "free_basis": [...] | null}
            | {"kernel_of": NAME}
      },
      "maps": {
        NAME: {"kind": "crossed"|"two_crossed", "source": NAME, "target": NAME,
               "f0": linmap, "f1": linmap, "f2": linmap}      # or "identity": true
      },
      "derivations":            {NAME: {"base": NAME, "s": linmap}},
      "quadratic_derivations":  {NAME: {"base": NAME, "s": linmap, "t": linmap}}
    }

References resolve by name in dependency order; a dangling or cyclic
reference raises UnresolvedReference, a failed law raises
ValidationError(structure, cause) with the witness preserved.
"""

import json

from .algebra import FiniteAlgebra, FreeAlgebra, make_finite_algebra, make_free_algebra
from .cm_homotopy import make_cm_derivation
from .crossed import (
    ideal_inclusion_cm,
    kernel_two_crossed,
    make_cm_morphism,
    make_crossed,
    make_precrossed,
    make_two_crossed,
    make_2cm_morphism,
)
from .errors import (
    BadShape,
    ParseError,
    UnresolvedReference,
    ValidationError,
    XmodError,
)
from .maps import (
    DEFAULT_POLICY,
    BilinearMap,
    algebra_morphism,
    identity_map,
    make_action,
    semidirect,
    zero_action,
)
from .rings import ring_from_spec
from .tcm_homotopy import make_quadratic_derivation


class SpecDocument:
    def __init__(self, ring):
        self.ring = ring
        self.algebras = {}
        self.actions = {}
        self.precrossed = {}
        self.crossed = {}
        self.two_crossed = {}
        self.maps = {}
        self.derivations = {}
        self.quadratic = {}

    def module_named(self, name):
        """A crossed or 2-crossed module by name (for groupoid commands)."""
        if name in self.two_crossed:
            return self.two_crossed[name]
        if name in self.crossed:
            return self.crossed[name]
        raise UnresolvedReference(name, "module")


def _parse_key(alg, key):
    if isinstance(alg, FreeAlgebra):
        return alg.parse_monomial(key)
    try:
        return alg.check_key(key)
    except BadShape as exc:
        raise ParseError(str(exc))


def _parse_element(alg, data, where):
    if not isinstance(data, dict):
        raise ParseError("%s: element must be an object, got %r" % (where, data))
    coeffs = {}
    for key, scalar in data.items():
        coeffs[_parse_key(alg, key)] = alg.ring.parse(str(scalar))
    return alg.element(coeffs)


def _parse_linmap_images(source, target, data, where):
    images = {}
    for key, elem in (data or {}).items():
        if isinstance(source, FreeAlgebra):
            mono = source.parse_monomial(key)
            if len(mono) != 1:
                raise ParseError("%s: images only on generators, got %r" % (where, key))
            skey = mono[0]
        else:
            skey = _parse_key(source, key)
        images[skey] = _parse_element(target, elem, where)
    if isinstance(source, FiniteAlgebra):
        for label in source.labels:
            images.setdefault(label, target.zero())
    elif isinstance(source, FreeAlgebra):
        for g in source.generators:
            images.setdefault(g, target.zero())
    return images


class _Loader:
    def __init__(self, data, policy):
        if not isinstance(data, dict):
            raise ParseError("document root must be an object")
        self.data = data
        self.policy = policy
        self.doc = SpecDocument(ring_from_spec(data.get("ring", "Q")))
        self._building = set()

    def _section(self, section):
        block = self.data.get(section, {})
        if not isinstance(block, dict):
            raise ParseError("section %r must be an object" % section)
        return block

    def _resolve(self, section, name, builder, store):
        if name in store:
            return store[name]
        block = self._section(section)
        if name not in block:
            raise UnresolvedReference(name, section)
        tag = (section, name)
        if tag in self._building:
            raise UnresolvedReference(name, "cyclic " + section)
        self._building.add(tag)
        try:
            value = builder(name, block[name])
        except (XmodError, KeyError) as exc:
            if isinstance(exc, (ParseError, UnresolvedReference, ValidationError)):
                raise
            raise ValidationError("%s %r" % (section, name), exc)
        finally:
            self._building.discard(tag)
        store[name] = value
        return value

    # -- resolvers ---------------------------------------------------------

    def algebra(self, name):
        return self._resolve("algebras", name, self._build_algebra, self.doc.algebras)

    def _build_algebra(self, name, spec):
        kind = spec.get("type")
        if kind == "finite":
            constants = {}
            for k1, row in spec.get("products", {}).items():
                for k2, elem in row.items():
                    constants[(k1, k2)] = {
                        k: self.doc.ring.parse(str(c)) for k, c in elem.items()
                    }
            return make_finite_algebra(spec["basis"], constants, self.doc.ring)
        if kind == "free":
            return make_free_algebra(spec["generators"], self.doc.ring)
        if kind == "semidirect":
            left = self.algebra(spec["acting"])
            right = self.algebra(spec["acted"])
            action = self.action(spec["action"])
            return semidirect(left, right, action, self.policy)
        raise ParseError("algebra %r: unknown type %r" % (name, kind))

    def action(self, name):
        return self._resolve("actions", name, self._build_action, self.doc.actions)

    def _build_action(self, name, spec):
        acting = self.algebra(spec["acting"])
        acted = self.algebra(spec["acted"])
        if spec.get("zero"):
            return zero_action(acting, acted)
        table = {}
        for actor, row in spec.get("table", {}).items():
            if isinstance(acting, FreeAlgebra):
                mono = acting.parse_monomial(actor)
                if len(mono) != 1:
                    raise ParseError("action %r: table rows only on generators" % name)
                akey = mono[0]
            else:
                akey = _parse_key(acting, actor)
            table[akey] = {
                _parse_key(acted, k): _parse_element(acted, elem, "action %r" % name)
                for k, elem in row.items()
            }
        return make_action(acting, acted, table, self.policy)

    def precrossed_module(self, name):
        return self._resolve("precrossed", name, self._build_precrossed, self.doc.precrossed)

    def _build_precrossed(self, name, spec):
        E = self.algebra(spec["E"])
        R = self.algebra(spec["R"])
        act = self.action(spec["action"])
        d = algebra_morphism(
            E, R, images=_parse_linmap_images(E, R, spec.get("map"), name), policy=self.policy
        )
        return make_precrossed(E, R, d, act, self.policy)

    def crossed_module(self, name):
        return self._resolve("crossed", name, self._build_crossed, self.doc.crossed)

    def _build_crossed(self, name, spec):
        if "ideal" in spec:
            R = self.algebra(spec["ideal"]["R"])
            return ideal_inclusion_cm(R, spec["ideal"]["labels"], self.policy)
        E = self.algebra(spec["E"])
        R = self.algebra(spec["R"])
        act = self.action(spec["action"])
        d = algebra_morphism(
            E, R, images=_parse_linmap_images(E, R, spec.get("map"), name), policy=self.policy
        )
        return make_crossed(E, R, d, act, self.policy)

    def two_crossed_module(self, name):
        return self._resolve("two_crossed", name, self._build_two_crossed, self.doc.two_crossed)

    def _build_two_crossed(self, name, spec):
        if "kernel_of" in spec:
            return kernel_two_crossed(self.precrossed_module(spec["kernel_of"]), self.policy)
        L = self.algebra(spec["L"])
        E = self.algebra(spec["E"])
        R = self.algebra(spec["R"])
        d2 = algebra_morphism(
            L, E, images=_parse_linmap_images(L, E, spec.get("d2"), name), policy=self.policy
        )
        d1 = algebra_morphism(
            E, R, images=_parse_linmap_images(E, R, spec.get("d1"), name), policy=self.policy
        )
        table = {}
        for k1, row in spec.get("lifting", {}).items():
            for k2, elem in row.items():
                value = _parse_element(L, elem, "lifting of %r" % name)
                table[(_parse_key(E, k1), _parse_key(E, k2))] = value
        return make_two_crossed(
            L, E, R, d2, d1,
            act_e=self.action(spec["action_e"]),
            act_l=self.action(spec["action_l"]),
            lift=BilinearMap(E, E, L, table),
            free_basis=spec.get("free_basis"),
            policy=self.policy,
        )

    def module_map(self, name):
        return self._resolve("maps", name, self._build_map, self.doc.maps)

    def _build_map(self, name, spec):
        kind = spec.get("kind", "two_crossed")
        if kind == "crossed":
            src = self.crossed_module(spec["source"])
            tgt = self.crossed_module(spec["target"])
            if spec.get("identity"):
                if src is not tgt:
                    raise ParseError("map %r: identity needs source == target" % name)
                return make_cm_morphism(src, tgt, identity_map(src.R), identity_map(src.E), self.policy)
            f0 = algebra_morphism(
                src.R, tgt.R, images=_parse_linmap_images(src.R, tgt.R, spec.get("f0"), name), policy=self.policy
            )
            f1 = algebra_morphism(
                src.E, tgt.E, images=_parse_linmap_images(src.E, tgt.E, spec.get("f1"), name), policy=self.policy
            )
            return make_cm_morphism(src, tgt, f0, f1, self.policy)
        src = self.two_crossed_module(spec["source"])
        tgt = self.two_crossed_module(spec["target"])
        if spec.get("identity"):
            if src is not tgt:
                raise ParseError("map %r: identity needs source == target" % name)
            from .crossed import identity_2cm_morphism

            return identity_2cm_morphism(src)
        f0 = algebra_morphism(
            src.R, tgt.R, images=_parse_linmap_images(src.R, tgt.R, spec.get("f0"), name), policy=self.policy
        )
        f1 = algebra_morphism(
            src.E, tgt.E, images=_parse_linmap_images(src.E, tgt.E, spec.get("f1"), name), policy=self.policy
        )
        f2 = algebra_morphism(
            src.L, tgt.L, images=_parse_linmap_images(src.L, tgt.L, spec.get("f2"), name), policy=self.policy
        )
        return make_2cm_morphism(src, tgt, f0, f1, f2, self.policy)

    def derivation(self, name):
        return self._resolve("derivations", name, self._build_derivation, self.doc.derivations)

    def _build_derivation(self, name, spec):
        f = self.module_map(spec["base"])
        images = _parse_linmap_images(f.src.R, f.tgt.E, spec.get("s"), name)
        return make_cm_derivation(f, images, self.policy)

    def quadratic_derivation(self, name):
        return self._resolve(
            "quadratic_derivations", name, self._build_quadratic, self.doc.quadratic
        )

    def _build_quadratic(self, name, spec):
        f = self.module_map(spec["base"])
        s_images = _parse_linmap_images(f.src.R, f.tgt.E, spec.get("s"), name)
        t_images = _parse_linmap_images(f.src.E, f.tgt.L, spec.get("t"), name)
        return make_quadratic_derivation(f, s_images, t_images, self.policy)

    def load_all(self):
        for section, resolver in (
            ("algebras", self.algebra),
            ("actions", self.action),
            ("precrossed", self.precrossed_module),
            ("crossed", self.crossed_module),
            ("two_crossed", self.two_crossed_module),
            ("maps", self.module_map),
            ("derivations", self.derivation),
            ("quadratic_derivations", self.quadratic_derivation),
        ):
            for name in self._section(section):
                resolver(name)
        return self.doc


def load_spec(path_or_dict, policy=DEFAULT_POLICY):
    """Load and fully validate a structure document.

    Raises ParseError (syntax, with line/col for JSON errors),
    UnresolvedReference, or ValidationError (named structure, law,
    witness).  On success every named structure has been constructed and
    certified in dependency order.
    """
    if isinstance(path_or_dict, dict):
        data = path_or_dict
    else:
        try:
            with open(path_or_dict, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError:
            raise
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno)
    return _Loader(data, policy).load_all()
