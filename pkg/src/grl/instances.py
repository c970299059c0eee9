"""JSON instance files: parsing and emission.

An instance file describes one verification target.  All scalars are
strings (or integers), parsed exactly — no floats anywhere.

Top-level shapes, selected by "kind":

* graded algebra::

    {"kind": "graded_algebra", "name": "...",
     "field": "Q" | "F5" | {"kind":"Fp","p":5},
     "algebra": {"builtin": "matrix", "n": 2} |
                {"dim": d, "labels": [...],
                 "constants": [[i, j, k, "c"], ...],
                 "identity": ["...", ...]?, "split_map": [["..."]]?},
     "group": {"kind":"finite","name":"S3"} |
              {"kind":"finite","table":[[...]],"labels":[...]} |
              {"kind":"Zk","k":2} | {"kind":"Dinf"},
     "degrees": [<element literal> per basis index]}

* group ring: {"kind": "group_ring", "field": ..., "coeff": <algebra>,
   "group": <group>} — over any supported group.

* crossed product: {"kind": "crossed_product", "field": ..., "coeff": ...,
   "group": <finite group>, "action": {"<gen label>": [["a"...]],...},
   "cocycle": [[<g literal>, <h literal>, <coeff literal>], ...]}

Group element literals: finite groups use the label string (or index),
Z^k uses an integer array, the infinite dihedral group uses
{"n": int, "flip": bool}.  A coefficient literal is a scalar string
(meaning scalar times the algebra identity) or an array of scalar
strings (a dense coordinate vector).

Optional "elements": {"name": <element literal>} names distinguished
elements; a graded-algebra element literal is {"<basis label>": "scalar"},
a group-ring element literal is [{"g": <literal>, "coeff": <coeff literal>}].
"""
from __future__ import annotations

import json

from .coeff import (Algebra, AlgebraError, FieldError, make_algebra, matrix_algebra,
                    parse_field, product_algebra, truncated_polynomial_algebra,
                    group_algebra)
from .graded import GradedAlgebra, GradingError
from .groups import (DihedralElement, FiniteTableGroup, FreeAbelianGroup, GroupError,
                     InfiniteDihedralGroup, builtin_group)
from .group_ring import (CrossedProductError, GroupRing, GroupRingElement,
                         InfiniteGroupError, NotUnitalError, crossed_product,
                         group_ring)


class InstanceFormatError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Groups.


def parse_group(obj):
    if not isinstance(obj, dict):
        raise InstanceFormatError("group must be an object with a 'kind'")
    kind = obj.get("kind")
    if kind == "finite":
        if "name" in obj:
            try:
                return builtin_group(obj["name"])
            except GroupError as exc:
                raise InstanceFormatError(str(exc)) from exc
        if "table" in obj:
            try:
                return FiniteTableGroup(obj["table"],
                                        labels=tuple(obj["labels"]) if "labels" in obj else None,
                                        name=obj.get("group_name"))
            except GroupError as exc:
                raise InstanceFormatError(f"invalid group table: {exc}") from exc
        raise InstanceFormatError("finite group needs a 'name' or a 'table'")
    if kind == "Zk":
        k = int(obj.get("k", 1))
        if k < 1:
            raise InstanceFormatError("Zk rank must be at least 1")
        return FreeAbelianGroup(k)
    if kind == "Dinf":
        return InfiniteDihedralGroup()
    raise InstanceFormatError(f"unknown group kind {kind!r}")


def emit_group(group):
    if isinstance(group, FiniteTableGroup):
        if group.name:
            return {"kind": "finite", "name": group.name}
        return {"kind": "finite", "table": [list(r) for r in group.table],
                "labels": list(group.labels)}
    if isinstance(group, FreeAbelianGroup):
        return {"kind": "Zk", "k": group.rank}
    if isinstance(group, InfiniteDihedralGroup):
        return {"kind": "Dinf"}
    raise InstanceFormatError(f"cannot emit group {group!r}")


def parse_group_element(group, literal):
    try:
        if isinstance(group, FiniteTableGroup):
            if isinstance(literal, int):
                return group.normalize(literal)
            return group.index_of_label(str(literal))
        if isinstance(group, FreeAbelianGroup):
            if isinstance(literal, (list, tuple)):
                return group.normalize(tuple(int(x) for x in literal))
            if isinstance(literal, int) and group.rank == 1:
                return (literal,)
            raise InstanceFormatError(f"Z^{group.rank} element must be an integer array")
        if isinstance(group, InfiniteDihedralGroup):
            if isinstance(literal, dict):
                return DihedralElement(int(literal.get("n", 0)), bool(literal.get("flip", False)))
            raise InstanceFormatError('dihedral element must be {"n": int, "flip": bool}')
    except (GroupError, ValueError, TypeError) as exc:
        raise InstanceFormatError(f"bad group element literal {literal!r}: {exc}") from exc
    raise InstanceFormatError(f"no element literals for group {group!r}")


def emit_group_element(group, g):
    if isinstance(group, FiniteTableGroup):
        return group.describe(g)
    if isinstance(group, FreeAbelianGroup):
        return list(g)
    if isinstance(group, InfiniteDihedralGroup):
        return {"n": g.shift, "flip": g.flip}
    raise InstanceFormatError(f"cannot emit elements of {group!r}")


# ---------------------------------------------------------------------------
# Scalars, coefficient vectors, algebras.


def parse_scalar(field, text):
    try:
        return field.parse(str(text))
    except (ValueError, FieldError) as exc:
        raise InstanceFormatError(f"bad scalar {text!r}: {exc}") from exc


def parse_coeff_literal(alg: Algebra, literal):
    """Scalar string -> scalar * identity; array -> dense vector."""
    field = alg.field
    if isinstance(literal, (list, tuple)):
        if len(literal) != alg.dim:
            raise InstanceFormatError(
                f"coefficient vector has {len(literal)} entries, expected {alg.dim}")
        return tuple(parse_scalar(field, x) for x in literal)
    if alg.identity is None:
        raise InstanceFormatError("scalar coefficient shorthand needs a unital algebra")
    s = parse_scalar(field, literal)
    return tuple(field.mul(s, c) for c in alg.identity)


def parse_algebra(obj, field) -> Algebra:
    if not isinstance(obj, dict):
        raise InstanceFormatError("algebra must be an object")
    if "builtin" in obj:
        name = obj["builtin"]
        try:
            if name == "matrix":
                return matrix_algebra(field, int(obj.get("n", 2)))
            if name == "product":
                return product_algebra(field, int(obj.get("n", 2)))
            if name == "truncated_poly":
                return truncated_polynomial_algebra(field, int(obj.get("n", 2)))
            if name == "group_algebra":
                return group_algebra(field, parse_group(obj["group"]))
        except (AlgebraError, GroupError, ValueError) as exc:
            raise InstanceFormatError(f"bad builtin algebra: {exc}") from exc
        raise InstanceFormatError(f"unknown builtin algebra {name!r}")
    try:
        dim = int(obj["dim"])
    except (KeyError, ValueError) as exc:
        raise InstanceFormatError("algebra needs 'builtin' or 'dim'") from exc
    labels = tuple(obj.get("labels", (f"b{i}" for i in range(dim))))
    if len(labels) != dim:
        raise InstanceFormatError("one label per basis vector required")
    products = {}
    for row in obj.get("constants", ()):
        if not isinstance(row, (list, tuple)) or len(row) != 4:
            raise InstanceFormatError('constants rows must be [i, j, k, "c"]')
        i, j, k, c = row
        i, j, k = int(i), int(j), int(k)
        if not all(0 <= x < dim for x in (i, j, k)):
            raise InstanceFormatError(f"constants row {row!r} out of range")
        entry = products.setdefault((i, j), {})
        entry[k] = parse_scalar(field, c)
    identity = None
    if "identity" in obj:
        identity = tuple(parse_scalar(field, x) for x in obj["identity"])
        if len(identity) != dim:
            raise InstanceFormatError("identity vector has the wrong dimension")
    split_map = None
    if "split_map" in obj:
        split_map = [[parse_scalar(field, x) for x in row] for row in obj["split_map"]]
    try:
        return make_algebra(field, labels, products, identity=identity,
                            split_map=split_map)
    except AlgebraError as exc:
        raise InstanceFormatError(f"invalid algebra: {exc}") from exc


# ---------------------------------------------------------------------------
# Instances.


class Instance:
    """A parsed verification target.

    ``graded`` is always set (group rings over infinite groups excepted);
    ``ring`` is set for group rings and crossed products.  ``elements``
    holds named distinguished elements, already parsed.
    """

    def __init__(self, kind, name, graded=None, ring=None, elements=None):
        self.kind = kind
        self.name = name
        self.graded = graded
        self.ring = ring
        self.elements = elements or {}

    def __repr__(self):
        return f"Instance({self.name!r}, kind={self.kind!r})"


def parse_instance(obj) -> Instance:
    if not isinstance(obj, dict):
        raise InstanceFormatError("instance must be a JSON object")
    kind = obj.get("kind")
    name = obj.get("name", "unnamed")
    try:
        field = parse_field(obj.get("field", "Q"))
    except FieldError as exc:
        raise InstanceFormatError(f"invalid field: {exc}") from exc
    try:
        if kind == "graded_algebra":
            alg = parse_algebra(obj["algebra"], field)
            group = parse_group(obj["group"])
            raw_degrees = obj.get("degrees")
            if raw_degrees is None or len(raw_degrees) != alg.dim:
                raise InstanceFormatError("need one degree literal per basis vector")
            degrees = [parse_group_element(group, d) for d in raw_degrees]
            graded = GradedAlgebra(alg, group, degrees, name=name)
            elements = _parse_named_graded_elements(graded, obj.get("elements"))
            return Instance(kind, name, graded=graded, elements=elements)
        if kind == "group_ring":
            alg = parse_algebra(obj["coeff"], field)
            group = parse_group(obj["group"])
            ring = group_ring(alg, group, name=name)
            return _with_ring_elements(kind, name, ring, obj)
        if kind == "crossed_product":
            alg = parse_algebra(obj["coeff"], field)
            group = parse_group(obj["group"])
            if not isinstance(group, FiniteTableGroup):
                raise InstanceFormatError("crossed products require a finite group")
            action = {}
            for gen_label, matrix in (obj.get("action") or {}).items():
                g = parse_group_element(group, gen_label)
                action[g] = [[parse_scalar(field, x) for x in row] for row in matrix]
            cocycle = {}
            for row in obj.get("cocycle", ()):
                if not isinstance(row, (list, tuple)) or len(row) != 3:
                    raise InstanceFormatError("cocycle rows must be [g, h, coeff]")
                g = parse_group_element(group, row[0])
                h = parse_group_element(group, row[1])
                cocycle[(g, h)] = parse_coeff_literal(alg, row[2])
            ring = crossed_product(alg, group, action, cocycle, name=name)
            return _with_ring_elements(kind, name, ring, obj)
    except (GradingError, GroupError, AlgebraError, FieldError, NotUnitalError,
            InfiniteGroupError, CrossedProductError, KeyError) as exc:
        raise InstanceFormatError(f"invalid {kind} instance: {exc}") from exc
    raise InstanceFormatError(f"unknown instance kind {kind!r}")


def _parse_named_graded_elements(graded, mapping):
    out = {}
    for ename, literal in (mapping or {}).items():
        if not isinstance(literal, dict):
            raise InstanceFormatError(
                f"element {ename!r}: expected {{basis label: scalar}}")
        out[ename] = graded.element_from_labels(
            {k: str(v) for k, v in literal.items()})
    return out


def _with_ring_elements(kind, name, ring, obj) -> Instance:
    elements = {}
    for ename, literal in (obj.get("elements") or {}).items():
        if not isinstance(literal, (list, tuple)):
            raise InstanceFormatError(
                f"element {ename!r}: expected [{{'g': ..., 'coeff': ...}}]")
        terms = {}
        for term in literal:
            g = parse_group_element(ring.group, term["g"])
            terms[g] = parse_coeff_literal(ring.algebra, term["coeff"])
        elements[ename] = ring.element(terms)
    graded = None
    if isinstance(ring.group, FiniteTableGroup):
        graded = ring.as_graded_algebra()
    return Instance(kind, name, graded=graded, ring=ring, elements=elements)


def load_instance(path) -> Instance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"{path} is not valid JSON: {exc}") from exc
    return parse_instance(obj)


def emit_graded_element(v) -> dict:
    alg = v.ring.algebra
    return {alg.labels[k]: alg.field.format(c) for k, c in sorted(v.coords.items())}


def emit_ring_element(x: GroupRingElement):
    ring = x.ring
    out = []
    for g in sorted(x.terms, key=ring.group.sort_key):
        out.append({"g": emit_group_element(ring.group, g),
                    "coeff": [ring.algebra.field.format(c) for c in x.terms[g]]})
    return out
