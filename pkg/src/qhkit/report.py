"""Command pipeline and report rendering.

A report is a plain dict built in a fixed key order, so the JSON and text
renderings are byte-stable for a given input and options.
"""
from __future__ import annotations

import hashlib
import json

from .algebra import NotNilpotent, radical_chain
from .duality import check_bgg, ringel_transfer, transfer_round_trip
from .endo import EndoError, build_endo, extract_quiver
from .field import FieldError
from .ideals import check_condition_ma, opposite_transport
from .paths import CapExceeded
from .problem import ProblemError, ProblemFile, parse_problem
from .qh import check_1qh
from .relations import RelationError, extract_relations

COMMANDS = ("check-ma", "endo", "check-1qh", "bgg", "ringel", "all")
STAGES = ("check_ma", "endo", "check_1qh", "bgg", "ringel")

EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class InputError(ValueError):
    pass


def format_element(B, v) -> str:
    f = B.field
    parts = []
    for c, lab in zip(v, B.labels):
        if not c:
            continue
        s = f.to_str(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        if lab == "1":
            body = s
        else:
            body = lab if s == "1" else f"{s}*{lab}"
        parts.append(("-" if neg else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class Pipeline:
    """Lazily computed stages for one problem."""

    def __init__(self, problem: ProblemFile, degree_cap=None):
        self.problem = problem
        self.degree_cap = degree_cap if degree_cap is not None else problem.options.get("degree_cap")
        self._cache = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def pair(self):
        return self._get("pair", self.problem.build)

    @property
    def B(self):
        return self.pair[0]

    @property
    def L(self):
        return self.pair[1]

    @property
    def poset(self):
        return self.problem.poset

    @property
    def ma(self):
        return self._get("ma", lambda: check_condition_ma(self.B, self.L, self.poset))

    @property
    def A(self):
        return self._get("A", lambda: build_endo(self.B, self.L, self.poset, self.ma.passed))

    @property
    def quiver(self):
        return self._get("quiver", lambda: extract_quiver(self.A, strict=False))

    @property
    def presentation(self):
        return self._get("bqp", lambda: extract_relations(self.A, self.quiver, self.degree_cap))

    # sections

    def algebra_section(self):
        B = self.B
        chain, index = radical_chain(B)
        return {"dim": B.dim, "basis": list(B.labels),
                "radical_chain": [s.dim for s in chain], "nilpotency_index": index}

    def check_ma_section(self):
        opp = opposite_transport(self.B, self.L, self.poset) if self.ma.passed else None
        return {"status": _status(self.ma.passed), "algebra": self.algebra_section(),
                "family_dims": [M.dim for M in self.L],
                **self.ma.to_dict(),
                "opposite_transport": None if opp is None else opp.passed}

    def endo_section(self):
        A, Q = self.A, self.quiver
        bqp = self.presentation
        n = A.n
        ok = bool(bqp.block_dims_match) and not Q.problems
        return {"status": _status(ok), "dim": A.dim, "radical_dim": sum(s.dim for s in A.radical.values()),
                "block_dims": [[A.dims[(j, k)] for k in range(1, n + 1)] for j in range(1, n + 1)],
                "arrows": [f"{a.source},{a.target}" for a in Q.arrows],
                "quiver_problems": Q.problems,
                "reading": "traversal", "degree_cap": bqp.degree_cap,
                "relations": bqp.relation_strings(),
                "block_dims_match": bqp.block_dims_match}

    def check_1qh_section(self):
        r = check_1qh(self.A, self.poset)
        return {"status": _status(r.passed), **r.to_dict()}

    def bgg_section(self):
        r = check_bgg(self.A, self.presentation, self.B, self.L, self.poset)
        ok = r.commutative and r.reversal_closed and r.m4_criterion
        return {"status": _status(ok), **r.to_dict()}

    def ringel_section(self):
        if not self.ma.passed:
            return {"status": "fail", "failed_at": "check_ma", "failed_checks": self.ma.failed()}
        B = self.B
        rt = ringel_transfer(B, self.L, self.poset)
        d = rt.to_dict()
        d["generators"] = [None if M.generator is None else format_element(B, M.generator)
                           for M in rt.transferred]
        out = {"status": _status(rt.yhat_member)}
        if not rt.yhat_member:
            out["failed_at"] = "yhat"
            out["socle_witness_dims"] = {str(i): s for i, s in rt.socle_witnesses.items() if s != 1}
        out.update(d)
        out["yhat_labels"] = "the opposite order is checked with i renamed n+1-i"
        out["round_trip"] = transfer_round_trip(B, self.L, self.poset, rt).to_dict() \
            if rt.yhat_member else None
        return out

    def section(self, stage):
        return getattr(self, stage + "_section")()


def _status(ok):
    return "pass" if ok else "fail"


def provenance(text: str, problem: ProblemFile | None, options: dict):
    return {"input_sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
            "field": None if problem is None else problem.field.name,
            "options": options}


def run_command(cmd: str, text: str, seed=None, degree_cap=None, emit=None):
    """Run one command on problem text; returns (report dict, exit code)."""
    if cmd not in COMMANDS:
        raise InputError(f"unknown command {cmd!r}")
    problem = None
    options = {"seed": seed, "degree_cap": degree_cap, "emit": emit}
    try:
        problem = parse_problem(text)
        opts = dict(problem.options)
        for k, v in (("seed", seed), ("degree_cap", degree_cap), ("emit", emit)):
            if v is not None:
                opts[k] = v
        options = opts
        pipe = Pipeline(problem, options["degree_cap"])
        sections = {}
        if cmd == "all":
            sections["check_ma"] = pipe.section("check_ma")
            if sections["check_ma"]["status"] != "pass":
                for st in STAGES[1:]:
                    sections[st] = {"status": "skipped", "reason": "check_ma failed"}
            else:
                for st in STAGES[1:]:
                    sections[st] = pipe.section(st)
            ok = all(s["status"] == "pass" for s in sections.values())
        else:
            st = cmd.replace("-", "_")
            sections[st] = pipe.section(st)
            ok = sections[st]["status"] == "pass"
        status, code = ("pass", EXIT_PASS) if ok else ("fail", EXIT_FAIL)
    except (ProblemError, FieldError) as exc:
        sections = {"error": {"message": str(exc), "line": getattr(exc, "line", None),
                              "column": getattr(exc, "column", None)}}
        status, code = "error", EXIT_ERROR
    except (NotNilpotent, CapExceeded, EndoError, RelationError) as exc:
        sections = {"error": {"message": str(exc), "kind": type(exc).__name__}}
        status, code = "error", EXIT_ERROR
    report = {"command": cmd, "status": status,
              "provenance": provenance(text, problem, options), **sections}
    return report, code


def render_json(report) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _scalar(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _lines(obj, indent=0):
    pad = "  " * indent
    out = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                out.append(f"{pad}{k}:")
                out.extend(_lines(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                out.append(f"{pad}-")
                out.extend(_lines(v, indent + 1))
            else:
                out.append(f"{pad}- {_inline(v)}")
    return out


def _flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)
    return False


def _inline(v):
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}" if not v else json.dumps(v)
    return _scalar(v)


def render_text(report) -> str:
    return "\n".join(_lines(report)) + "\n"
