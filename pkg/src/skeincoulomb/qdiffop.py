"""q-difference-reflection operators with rational-function coefficients.

An operator is a finite sum ``sum c_g * g`` where ``g`` is a monomial
substitution of the distinguished variables: each variable ``v`` is sent to
``q^(k/2) * v^eps``.  Shifts are stored in half-units of ``q`` so that both
``q``-shifts and ``q^2``-shifts are integral.

Operators act on the left: ``(c g)(f) = c * f(g(X))``.  Products follow
``(c1 g1)(c2 g2) = c1 * g1(c2) * (g1 o g2)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .errors import DegenerateScalar, QuadraticRelationFails, TableMismatch
from .exactring import (
    GaussQ,
    LaurentPoly,
    MonomialMap,
    RatFn,
    SymbolTable,
    as_ratfn,
    cpow,
)


class Subst:
    """Monomial substitution ``v -> q^(k_v/2) v^(eps_v)`` per distinguished variable."""

    __slots__ = ("parts", "_hash")

    def __init__(self, parts: Sequence[Tuple[int, int]]):
        parts = tuple((int(e), int(k)) for e, k in parts)
        for e, _ in parts:
            if e not in (1, -1):
                raise ValueError("substitution sign must be +1 or -1")
        self.parts = parts
        self._hash = hash(parts)

    @classmethod
    def identity(cls, nvars: int = 1) -> "Subst":
        return cls(((1, 0),) * nvars)

    def is_identity(self) -> bool:
        return all(e == 1 and k == 0 for e, k in self.parts)

    def compose(self, other: "Subst") -> "Subst":
        """``self o other``: apply ``other`` first, then ``self``, on functions."""
        return Subst(tuple((e1 * e2, k2 + e2 * k1)
                           for (e1, k1), (e2, k2) in zip(self.parts, other.parts)))

    def inverse(self) -> "Subst":
        return Subst(tuple((e, -e * k) for e, k in self.parts))

    def __eq__(self, other):
        return isinstance(other, Subst) and self.parts == other.parts

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return self._hash

    def text(self) -> str:
        return ";".join(f"({e:+d},{k})" for e, k in self.parts)

    def __repr__(self):
        return f"Subst({self.text()})"


class OpSpace:
    """Where operators live: a symbol table, the distinguished variables, and ``q^(1/2)``.

    ``qh`` is either the name of the symbol standing for ``q^(1/2)`` or, in a
    specialized space, a nonzero exact constant.
    """

    def __init__(self, table: SymbolTable, variables: Sequence[str], qh="qh"):
        self.table = table
        self.variables = tuple(variables)
        for v in self.variables:
            table.index(v)
        if isinstance(qh, str):
            table.index(qh)
            self.qh_symbol = qh
            self.qh_value = None
        else:
            if qh == 0:
                raise DegenerateScalar("q^(1/2) cannot be zero")
            self.qh_symbol = None
            self.qh_value = qh
        self._maps: Dict[Subst, MonomialMap] = {}

    def __eq__(self, other):
        return (self is other) or (
            isinstance(other, OpSpace)
            and self.table == other.table
            and self.variables == other.variables
            and self.qh_symbol == other.qh_symbol
            and self.qh_value == other.qh_value
        )

    def __hash__(self):
        return hash((self.table, self.variables, self.qh_symbol))

    def __repr__(self):
        qh = self.qh_symbol if self.qh_symbol else self.qh_value
        return f"OpSpace({list(self.table.symbols)}, vars={list(self.variables)}, qh={qh})"

    # scalars
    def scalar(self, x) -> RatFn:
        return as_ratfn(x, self.table)

    def gen(self, name: str) -> RatFn:
        return self.table.gen(name)

    def qh(self, power: int = 1) -> RatFn:
        """``q^(power/2)`` as a scalar."""
        if self.qh_symbol is not None:
            return RatFn(LaurentPoly.symbol(self.table, self.qh_symbol, power))
        return self.table.const(cpow(self.qh_value, power))

    def q(self, power: int = 1) -> RatFn:
        return self.qh(2 * power)

    def monomial_map(self, g: Subst) -> MonomialMap:
        m = self._maps.get(g)
        if m is None:
            imgs = {}
            unit = self.table.unit
            for v, (e, k) in zip(self.variables, g.parts):
                if e == 1 and k == 0:
                    continue
                if self.qh_symbol is not None:
                    imgs[v] = (1, e * unit(v) + k * unit(self.qh_symbol))
                else:
                    imgs[v] = (cpow(self.qh_value, k), e * unit(v))
            m = MonomialMap(self.table, self.table, imgs)
            self._maps[g] = m
        return m

    def act(self, g: Subst, f: RatFn) -> RatFn:
        """``f`` with the substitution ``g`` applied to its distinguished variables."""
        if g.is_identity():
            return f
        return f.map_monomials(self.monomial_map(g))

    # operator constructors
    def identity_subst(self) -> Subst:
        return Subst.identity(len(self.variables))

    def op(self, terms) -> "DiffOp":
        return DiffOp(self, terms)

    def mult(self, c) -> "DiffOp":
        """Multiplication by a scalar or rational function."""
        return DiffOp(self, {self.identity_subst(): self.scalar(c)})

    def one(self) -> "DiffOp":
        return self.mult(1)

    def zero(self) -> "DiffOp":
        return DiffOp(self, {})

    def shift(self, *parts, coeff=1) -> "DiffOp":
        """The operator ``coeff * g`` with ``g`` given by ``(eps, k)`` pairs."""
        if len(parts) == 1 and isinstance(parts[0], Subst):
            g = parts[0]
        else:
            g = Subst(parts)
        return DiffOp(self, {g: self.scalar(coeff)})

    def sigma(self) -> "DiffOp":
        return self.shift((-1, 0))

    def tau(self, power: int = 1) -> "DiffOp":
        return self.shift((1, 4 * power))

    def varpi(self, power: int = 1) -> "DiffOp":
        return self.shift((1, 2 * power))


def _coerce_space(a: OpSpace, b: OpSpace):
    if a is not b and a != b:
        raise TableMismatch(f"operators live in different spaces: {a!r} vs {b!r}")


class DiffOp:
    """Immutable operator ``sum_g c_g * g`` in canonical form (no zero coefficients)."""

    __slots__ = ("space", "terms")

    def __init__(self, space: OpSpace, terms=None):
        self.space = space
        clean: Dict[Subst, RatFn] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for g, c in items:
                if not isinstance(g, Subst):
                    g = Subst(g)
                c = space.scalar(c)
                if g in clean:
                    c = clean[g] + c
                if c.is_zero():
                    clean.pop(g, None)
                else:
                    clean[g] = c
        self.terms = clean

    @classmethod
    def _raw(cls, space, terms):
        o = cls.__new__(cls)
        o.space = space
        o.terms = terms
        return o

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_sigma_free(self) -> bool:
        return all(e == 1 for g in self.terms for e, _ in g.parts)

    def is_multiplication(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.space.identity_subst() in self.terms)

    def multiplier(self) -> RatFn:
        """The coefficient of the identity substitution."""
        return self.terms.get(self.space.identity_subst(), self.space.table.zero())

    def coeff(self, *parts) -> RatFn:
        g = parts[0] if len(parts) == 1 and isinstance(parts[0], Subst) else Subst(parts)
        return self.terms.get(g, self.space.table.zero())

    def substs(self):
        return sorted(self.terms)

    def max_shift(self) -> int:
        return max((abs(k) for g in self.terms for _, k in g.parts), default=0)

    # -- arithmetic ---------------------------------------------------------
    def _other(self, other) -> Optional["DiffOp"]:
        if isinstance(other, DiffOp):
            _coerce_space(self.space, other.space)
            return other
        if isinstance(other, (RatFn, LaurentPoly, int, Fraction, GaussQ)):
            return self.space.mult(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for g, c in o.terms.items():
            if g in t:
                v = t[g] + c
                if v.is_zero():
                    del t[g]
                else:
                    t[g] = v
            else:
                t[g] = c
        return DiffOp._raw(self.space, t)

    __radd__ = __add__

    def __neg__(self):
        return DiffOp._raw(self.space, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "DiffOp":
        """Left multiplication by a scalar: ``c * self``."""
        c = self.space.scalar(c)
        if c.is_zero():
            return self.space.zero()
        return DiffOp._raw(self.space, {g: c * v for g, v in self.terms.items()})

    def compose(self, other: "DiffOp") -> "DiffOp":
        """``self o other`` (``other`` acts first)."""
        _coerce_space(self.space, other.space)
        sp = self.space
        t: Dict[Subst, RatFn] = {}
        for g1, c1 in self.terms.items():
            for g2, c2 in other.terms.items():
                g = g1.compose(g2)
                c = c1 * sp.act(g1, c2)
                if g in t:
                    t[g] = t[g] + c
                else:
                    t[g] = c
        return DiffOp._raw(sp, {g: c for g, c in t.items() if not c.is_zero()})

    def __mul__(self, other):
        if isinstance(other, DiffOp):
            return self.compose(other)
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.compose(o)

    def __rmul__(self, other):
        if isinstance(other, DiffOp):
            return other.compose(self)
        if self._other(other) is None:
            return NotImplemented
        return self.scale(other)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        r = self.space.one()
        base = self
        while e:
            if e & 1:
                r = r * base
            e >>= 1
            if e:
                base = base * base
        return r

    def inverse(self) -> "DiffOp":
        """Inverse of a single-term operator ``c g``: ``g^-1(c^-1) g^-1``."""
        if len(self.terms) != 1:
            raise ValueError("only single-term operators have a closed-form inverse here; use invert_hecke")
        (g, c), = self.terms.items()
        gi = g.inverse()
        return DiffOp._raw(self.space, {gi: self.space.act(gi, c.inverse())})

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return op_eq(self, o)

    __hash__ = None

    # -- action -------------------------------------------------------------
    def apply(self, f) -> RatFn:
        f = self.space.scalar(f)
        total = self.space.table.zero()
        for g, c in self.terms.items():
            total = total + c * self.space.act(g, f)
        return total

    def __call__(self, f) -> RatFn:
        return self.apply(f)

    # -- transformations ----------------------------------------------------
    def fold(self) -> "DiffOp":
        return fold_symmetric(self)

    def map_coefficients(self, fn, space: Optional[OpSpace] = None) -> "DiffOp":
        sp = space or self.space
        out: Dict[Subst, RatFn] = {}
        for g, c in self.terms.items():
            v = fn(c)
            if g in out:
                v = out[g] + v
            if v.is_zero():
                out.pop(g, None)
            else:
                out[g] = v
        return DiffOp._raw(sp, out)

    def substitute_parameters(self, mapping: Mapping, space: Optional[OpSpace] = None) -> "DiffOp":
        """Apply a parameter substitution to every coefficient.

        The distinguished variables must not be mapped; ``q^(1/2)`` may be
        mapped only when moving to a space where it is a constant.
        """
        for v in self.space.variables:
            if v in mapping:
                raise ValueError(f"distinguished variable {v} cannot be substituted here")
        sp = space or self.space
        return self.map_coefficients(lambda c: c.substitute(mapping, sp.table), sp)

    # -- text ---------------------------------------------------------------
    def text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"[{self.terms[g].text()}] ⊗ {g.text()}" for g in sorted(self.terms)
        )

    __str__ = text

    def __repr__(self):
        return f"DiffOp({self.text()})"


# ---------------------------------------------------------------------------

def op_arith(lhs: DiffOp, rhs, kind: str) -> DiffOp:
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "compose":
        return lhs.compose(rhs)
    if kind == "scale":
        return lhs.scale(rhs)
    raise ValueError(f"unknown operator arithmetic kind {kind!r}")


def op_apply(op: DiffOp, f) -> RatFn:
    return op.apply(f)


def op_eq(lhs: DiffOp, rhs: DiffOp) -> bool:
    _coerce_space(lhs.space, rhs.space)
    keys = set(lhs.terms) | set(rhs.terms)
    zero = lhs.space.table.zero()
    for g in keys:
        a = lhs.terms.get(g, zero)
        b = rhs.terms.get(g, zero)
        if not a == b:
            return False
    return True


def fold_symmetric(op: DiffOp) -> DiffOp:
    """Replace each reflecting term ``c (-1, k)`` by ``c (+1, -k)``.

    On functions with ``f(X) = f(1/X)`` both agree, since
    ``f(q^(k/2) / X) = f(q^(-k/2) X)``.
    """
    if len(op.space.variables) != 1:
        raise ValueError("fold_symmetric needs a single distinguished variable")
    out: Dict[Subst, RatFn] = {}
    for g, c in op.terms.items():
        (e, k), = g.parts
        h = g if e == 1 else Subst(((1, -k),))
        v = out[h] + c if h in out else c
        if v.is_zero():
            out.pop(h, None)
        else:
            out[h] = v
    return DiffOp._raw(op.space, out)


def invert_hecke(op: DiffOp, u, v) -> DiffOp:
    """Inverse of ``op`` from ``(op - u)(op + v) = 0``: ``(op - (u - v)) / (u v)``."""
    sp = op.space
    u = sp.scalar(u)
    v = sp.scalar(v)
    if not ((op - u) * (op + v)).is_zero():
        raise QuadraticRelationFails("(op - u)(op + v) is not the zero operator")
    return (op - (u - v)).scale((u * v).inverse())


def symmetric_basis(space: OpSpace, n: int) -> RatFn:
    """``X^n + X^-n`` in the single distinguished variable."""
    (v,) = space.variables
    x = space.gen(v)
    return x ** n + x ** (-n)


def agree_on_basis(a: DiffOp, b: DiffOp, depth: int) -> bool:
    """Whether ``a`` and ``b`` agree on ``X^n + X^-n`` for ``0 <= n <= depth``."""
    for n in range(depth + 1):
        f = symmetric_basis(a.space, n)
        if not a.apply(f) == b.apply(f):
            return False
    return True
