"""Check records, suite results, and parameter specialization for random mode."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional

from .exactring import RatFn, SymbolTable
from .qdiffop import DiffOp, OpSpace

OPERATOR_IDENTITY = "operator-identity"
BASIS_AGREEMENT = "basis-agreement"
# scalar equalities are identities of multiplication operators
SCALAR_IDENTITY = OPERATOR_IDENTITY

RESIDUAL_LIMIT = 4000

SMALL_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def residual_text(obj) -> str:
    if obj is None:
        return "0"
    if isinstance(obj, bool):
        return "0" if obj else "nonzero"
    text = obj.text() if hasattr(obj, "text") else str(obj)
    if len(text) > RESIDUAL_LIMIT:
        text = text[:RESIDUAL_LIMIT] + f"... ({len(text)} chars)"
    return text


@dataclass
class Check:
    desc: str
    passed: bool
    tier: str = OPERATOR_IDENTITY
    residual: str = "0"
    millis: int = 0

    def as_dict(self):
        return {"desc": self.desc, "pass": self.passed, "tier": self.tier,
                "residual_text": self.residual, "millis": self.millis}


@dataclass
class SuiteResult:
    name: str
    checks: List[Check] = field(default_factory=list)
    constants: Dict[str, str] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, desc: str, passed: bool, residual=None, tier: str = OPERATOR_IDENTITY, millis: int = 0) -> Check:
        c = Check(desc, bool(passed), tier, "0" if passed else residual_text(residual), millis)
        self.checks.append(c)
        return c

    def zero_check(self, desc: str, residual, tier: str = OPERATOR_IDENTITY, started: Optional[float] = None) -> Check:
        """Record a check that passes iff ``residual`` is the zero object."""
        ok = residual.is_zero() if hasattr(residual, "is_zero") else not residual
        c = Check(desc, bool(ok), tier, residual_text(residual), _elapsed(started))
        self.checks.append(c)
        return c

    def timed(self):
        return time.perf_counter()

    def as_dict(self):
        return {"name": self.name, "checks": [c.as_dict() for c in self.checks],
                "constants": dict(self.constants)}


def _elapsed(started: Optional[float]) -> int:
    if started is None:
        return 0
    return int(round((time.perf_counter() - started) * 1000))


class Timer:
    """Context manager measuring one check in milliseconds."""

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.millis = int(round((time.perf_counter() - self.start) * 1000))
        return False


# ---------------------------------------------------------------------------
# random-evaluation mode
# ---------------------------------------------------------------------------

def random_values(symbols, seed: int) -> Dict[str, int]:
    """Distinct small primes for ``symbols`` drawn deterministically from ``seed``."""
    symbols = list(symbols)
    rng = random.Random(seed)
    primes = rng.sample(SMALL_PRIMES, len(symbols))
    return dict(zip(symbols, primes))


class Specializer:
    """Maps operators from a symbolic space to one where all parameters are constants.

    Only the distinguished variables remain symbolic; ``q^(1/2)`` becomes the
    constant ``values[qh]``.
    """

    def __init__(self, space: OpSpace, values: Mapping[str, object]):
        self.source = space
        self.values = dict(values)
        table = SymbolTable(space.variables)
        for s in space.table.symbols:
            if s not in space.variables and s not in self.values:
                raise KeyError(f"no value for parameter {s}")
        self.target = OpSpace(table, space.variables, qh=self.values[space.qh_symbol])

    def scalar(self, c: RatFn) -> RatFn:
        mapping = {s: v for s, v in self.values.items() if s in self.source.table}
        return c.substitute(mapping, self.target.table)

    def op(self, op: DiffOp) -> DiffOp:
        return op.map_coefficients(self.scalar, self.target)
