from functools import lru_cache
from pathlib import Path

import pytest

from qhkit.endo import build_endo, extract_quiver
from qhkit.ideals import check_condition_ma
from qhkit.problem import load_problem
from qhkit.relations import extract_relations

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

GOOD = ["exampleB_L1", "exampleB_L2", "exampleB_L3_F13", "ex412_L1", "ex412_L2",
        "B4_nonsym", "B4_identity"]
BAD = ["bad_swapped", "bad_L1_not_B", "bad_mislabeled_min"]


def fixture_path(name):
    return FIXTURES / f"{name}.json"


class Case:
    """Everything computed for one fixture, built on first use."""

    def __init__(self, name):
        self.name = name
        self.problem = load_problem(fixture_path(name))
        self.B, self.L = self.problem.build()
        self.poset = self.problem.poset
        self._A = self._Q = self._bqp = self._ma = None

    @property
    def ma(self):
        if self._ma is None:
            self._ma = check_condition_ma(self.B, self.L, self.poset)
        return self._ma

    @property
    def A(self):
        if self._A is None:
            self._A = build_endo(self.B, self.L, self.poset, self.ma.passed)
        return self._A

    @property
    def quiver(self):
        if self._Q is None:
            self._Q = extract_quiver(self.A, strict=False)
        return self._Q

    @property
    def presentation(self):
        if self._bqp is None:
            self._bqp = extract_relations(self.A, self.quiver)
        return self._bqp


@lru_cache(maxsize=None)
def case(name) -> Case:
    return Case(name)


@pytest.fixture(params=GOOD)
def good(request):
    return case(request.param)


def down_size(poset, i):
    return len(poset.down(i))


def up_size(poset, i):
    return len(poset.up(i))


def elt(c: Case, text):
    """Element of c.B written in the fixture's generators."""
    from qhkit.expr import element, normalize, parse_expression
    gens = c.problem.algebra.generators
    return element(c.B, normalize(parse_expression(text, gens), c.B.field))


def span(c: Case, *texts):
    from qhkit.linalg import Subspace
    return Subspace.span(c.B.field, c.B.dim, [elt(c, t) for t in texts])
