"""Problem files: a JSON document holding a presented algebra, a poset and
generators for the ideals L(1..n)."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field

from .algebra import FreePresentation, PresentationError, from_free_presentation
from .expr import ExprError, element, normalize, parse_expression, render
from .field import FieldError, FieldSpec
from .ideals import ideal_from_generator
from .poset import Poset, PosetError

OPTION_DEFAULTS = {"seed": 0, "nilpotency_cap": None, "degree_cap": None, "emit": "text"}


class ProblemError(ValueError):
    """Malformed input; carries line/column when they are known."""

    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        super().__init__(where + message)


@dataclass
class ProblemFile:
    field: FieldSpec
    algebra: FreePresentation
    poset: Poset
    module_generators: dict  # vertex -> normalized term tuple
    options: dict = dc_field(default_factory=lambda: dict(OPTION_DEFAULTS))

    def __eq__(self, other):
        return (isinstance(other, ProblemFile) and self.field == other.field
                and self.algebra.generators == other.algebra.generators
                and self.algebra.relations == other.algebra.relations
                and self.algebra.commutative_sugar == other.algebra.commutative_sugar
                and self.algebra.nilpotency_cap == other.algebra.nilpotency_cap
                and self.poset == other.poset
                and self.module_generators == other.module_generators
                and self.options == other.options)

    @property
    def n(self):
        return self.poset.n

    def build(self):
        """Construct B and the family L(1..n)."""
        B = from_free_presentation(self.algebra)
        L = [ideal_from_generator(B, element(B, self.module_generators[i]))
             for i in range(1, self.n + 1)]
        return B, L


def _locate(text, needle):
    """1-based (line, column) of the JSON string literal `needle` in text."""
    lit = json.dumps(needle, ensure_ascii=False)
    pos = text.find(lit)
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col + 1  # column of the first character inside the quotes


def _at_key(text, key, message):
    """ProblemError pointing at the first occurrence of the object key `key`."""
    m = re.search(r'"%s"\s*:\s*' % re.escape(key), text)
    if m is None:
        return ProblemError(message)
    pos = m.end()
    line = text.count("\n", 0, pos) + 1
    return ProblemError(message, line, pos - (text.rfind("\n", 0, pos) + 1) + 1)


def _expr(text, s, gens, field, what):
    if not isinstance(s, str):
        raise ProblemError(f"{what} must be a string")
    try:
        terms = parse_expression(s, gens)
        return normalize(terms, field)
    except ExprError as exc:
        line, col = _locate(text, s)
        if line is not None and exc.column is not None:
            col = col + exc.column - 1
        raise ProblemError(f"{what}: {exc}", line, col) from None
    except FieldError as exc:
        line, col = _locate(text, s)
        raise ProblemError(f"{what}: {exc}", line, col) from None


def _require(d, key, kind, where):
    if not isinstance(d, dict) or key not in d:
        raise ProblemError(f"missing {where}{key!r}")
    v = d[key]
    if kind is not None and not isinstance(v, kind):
        raise ProblemError(f"{where}{key!r} has the wrong type")
    return v


def parse_field(spec) -> FieldSpec:
    if not isinstance(spec, dict) or "type" not in spec:
        raise ProblemError("field must be an object with a 'type'")
    try:
        if spec["type"] == "Q":
            return FieldSpec.rationals()
        if spec["type"] == "Fp":
            p = spec.get("p")
            if not isinstance(p, int) or isinstance(p, bool):
                raise ProblemError("prime field needs an integer 'p'")
            return FieldSpec.prime(p)
    except FieldError as exc:
        raise ProblemError(str(exc)) from None
    raise ProblemError(f"unknown field type {spec['type']!r}")


def parse_problem(text: str) -> ProblemFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ProblemError("top level must be an object")
    try:
        field = parse_field(_require(doc, "field", dict, ""))
    except ProblemError as exc:
        key = "p" if "prime" in str(exc) else "field"
        raise _at_key(text, key, str(exc)) from None
    alg = _require(doc, "algebra", dict, "")
    gens = _require(alg, "generators", list, "algebra.")
    for g in gens:
        if not isinstance(g, str) or not g.isidentifier():
            raise ProblemError(f"bad generator name {g!r}")
    if len(set(gens)) != len(gens):
        raise ProblemError("duplicate generator names")
    rel_src = _require(alg, "relations", list, "algebra.")
    relations = [_expr(text, r, gens, field, f"relation {k + 1}") for k, r in enumerate(rel_src)]
    sugar = alg.get("commutative", False)
    if not isinstance(sugar, bool):
        raise ProblemError("algebra.commutative must be true or false")

    pos = _require(doc, "poset", dict, "")
    n = _require(pos, "n", int, "poset.")
    covers = _require(pos, "covers", list, "poset.")
    try:
        for c in covers:
            if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, int) for x in c)):
                raise ProblemError(f"cover {c!r} must be a pair of integers")
        poset = Poset(n, [tuple(c) for c in covers])
    except (PosetError, ProblemError) as exc:
        raise _at_key(text, "covers", str(exc)) from None

    mods = _require(doc, "modules", dict, "")
    gens_of = {}
    for i in range(1, n + 1):
        if str(i) not in mods:
            raise _at_key(text, "modules", f"missing generator for vertex {i}")
        gens_of[i] = _expr(text, mods[str(i)], gens, field, f"module {i}")
        if not gens_of[i]:
            raise ProblemError(f"generator of vertex {i} is zero", *_locate(text, mods[str(i)]))
    extra = set(mods) - {str(i) for i in range(1, n + 1)}
    if extra:
        raise ProblemError(f"generators given for unknown vertices {sorted(extra)}")

    opts = dict(OPTION_DEFAULTS)
    raw_opts = doc.get("options", {})
    if not isinstance(raw_opts, dict):
        raise ProblemError("options must be an object")
    for k, v in raw_opts.items():
        if k not in OPTION_DEFAULTS:
            raise ProblemError(f"unknown option {k!r}")
        if k == "emit":
            if v not in ("text", "json"):
                raise ProblemError("emit must be 'text' or 'json'")
        elif v is not None and (not isinstance(v, int) or isinstance(v, bool) or v < 0):
            raise ProblemError(f"option {k!r} must be a nonnegative integer")
        opts[k] = v
    cap = opts["nilpotency_cap"] or max(2 * n, 4)
    pres = FreePresentation(field, list(gens), [list(r) for r in relations], sugar, cap)
    try:
        pres.validate()
    except PresentationError as exc:
        raise ProblemError(str(exc)) from None
    return ProblemFile(field, pres, poset, gens_of, opts)


def render_problem(pf: ProblemFile) -> str:
    gens = pf.algebra.generators
    doc = {
        "field": pf.field.to_json(),
        "algebra": {"generators": list(gens),
                    "relations": [render(tuple(r), gens, pf.field) for r in pf.algebra.relations]},
        "poset": {"n": pf.n, "covers": [list(c) for c in pf.poset.covers]},
        "modules": {str(i): render(pf.module_generators[i], gens, pf.field)
                    for i in range(1, pf.n + 1)},
    }
    if pf.algebra.commutative_sugar:
        doc["algebra"]["commutative"] = True
    opts = {k: v for k, v in pf.options.items() if v != OPTION_DEFAULTS[k]}
    if opts:
        doc["options"] = opts
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_problem(path) -> ProblemFile:
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())
