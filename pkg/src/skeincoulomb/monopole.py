"""Framed quivers, the localized quantum torus, and dressed minuscule monopole operators.

Elements of the quantum torus are operators in the variables ``w_{i,r}``:
the monomial ``prod D_{i,r}^nu`` is the substitution ``w_{i,r} -> q^(2 nu) w_{i,r}``
(a half-shift of ``4 nu``), so ``D w = q^2 w D`` holds by construction and
coefficients always sit to the left of the D's.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    DressingNotSymmetric,
    IndexOutOfRange,
    NotInvariant,
    UnmappedParameter,
)
from .exactring import LaurentPoly, RatFn, SymbolTable, as_ratfn
from .qdiffop import DiffOp, OpSpace, Subst


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    dst: str
    symbol: str


@dataclass
class Quiver:
    gauge: Dict[str, int]
    framing: Dict[str, int]
    arrows: List[Arrow]
    name: str = "quiver"

    def __post_init__(self):
        ids = list(self.gauge) + list(self.framing)
        if len(set(ids)) != len(ids):
            raise ValueError("node ids must be distinct")
        for a in self.arrows:
            if a.src not in ids or a.dst not in ids:
                raise ValueError(f"arrow {a.name} uses an unknown node")
            if a.dst in self.framing:
                raise ValueError(f"arrow {a.name} ends at a framing node")
        for d in list(self.gauge.values()) + list(self.framing.values()):
            if d < 1:
                raise ValueError("node dimensions must be positive")

    @classmethod
    def from_json(cls, text: str, name: str = "quiver") -> "Quiver":
        data = json.loads(text)
        gauge = {str(n["id"]): int(n["dim"]) for n in data["gauge"]}
        framing = {str(n["id"]): int(n["dim"]) for n in data.get("framing", [])}
        arrows = []
        for j, a in enumerate(data.get("arrows", [])):
            aname = str(a.get("name", f"a{j + 1}"))
            arrows.append(Arrow(aname, str(a["src"]), str(a["dst"]), str(a.get("symbol", "z" + aname))))
        return cls(gauge, framing, arrows, name)

    # symbols
    def w_symbol(self, i: str, r: int) -> str:
        if len(self.gauge) == 1:
            return f"w{r}"
        return f"w{i}_{r}"

    def z_symbol(self, k: str, l: int) -> str:
        return f"z{k}{l}"

    def w_symbols(self) -> List[str]:
        return [self.w_symbol(i, r) for i, d in self.gauge.items() for r in range(1, d + 1)]

    def parameter_symbols(self) -> List[str]:
        out = ["qh"]
        for k, c in self.framing.items():
            out += [self.z_symbol(k, l) for l in range(1, c + 1)]
        out += [a.symbol for a in self.arrows]
        return out


def s04_quiver() -> Quiver:
    """Two framing nodes of dimension 2, each with one arrow into a gauge node of dimension 2."""
    return Quiver({"g": 2}, {"1": 2, "2": 2},
                  [Arrow("a", "1", "g", "za"), Arrow("b", "2", "g", "zb")], "s04")


def jordan_quiver() -> Quiver:
    """One gauge node of dimension 2 with a loop."""
    return Quiver({"g": 2}, {}, [Arrow("a", "g", "g", "z")], "jordan")


BUILTIN_QUIVERS = {"s04": s04_quiver, "jordan": jordan_quiver}


# dictionaries to the DAHA-side parameters
S04_DICTIONARY = ("z11 -> t4", "z12 -> t4^-1", "z21 -> t1", "z22 -> t1^-1", "za -> t3", "zb -> t2")


def s04_parameter_map(ctx) -> Dict[str, RatFn]:
    t1, t4 = ctx.p("t1"), ctx.p("t4")
    return {"qh": ctx.qh(), "z11": t4, "z12": t4 ** -1, "z21": t1, "z22": t1 ** -1,
            "za": ctx.p("t3"), "zb": ctx.p("t2")}


def jordan_parameter_map(ctx) -> Dict[str, RatFn]:
    return {"qh": ctx.qh(), "z": ctx.q(-1) * ctx.p("th") ** 2}


class Torus:
    """The localized quantum torus of a quiver, possibly with parameters fixed to constants."""

    def __init__(self, quiver: Quiver, values: Optional[Mapping[str, object]] = None, loop_in_Q: bool = True):
        self.quiver = quiver
        self.loop_in_Q = loop_in_Q
        params = quiver.parameter_symbols()
        wsyms = quiver.w_symbols()
        self.values = dict(values) if values else None
        if self.values is None:
            table = SymbolTable(params + wsyms)
            self.space = OpSpace(table, wsyms, qh="qh")
            self.params = {p: table.gen(p) for p in params if p != "qh"}
        else:
            missing = [p for p in params if p not in self.values]
            if missing:
                raise UnmappedParameter(f"no value for {missing}")
            table = SymbolTable(wsyms)
            self.space = OpSpace(table, wsyms, qh=self.values["qh"])
            self.params = {p: as_ratfn(self.values[p], table) for p in params if p != "qh"}
        self.table = self.space.table
        self._index = {s: j for j, s in enumerate(wsyms)}

    # building blocks
    def q(self, power: int = 1) -> RatFn:
        return self.space.q(power)

    def w(self, i: str, r: int) -> RatFn:
        return self.table.gen(self.quiver.w_symbol(i, r))

    def z(self, symbol: str) -> RatFn:
        return self.params[symbol]

    def D(self, i: str, r: int, power: int = 1) -> DiffOp:
        parts = [(1, 0)] * len(self.space.variables)
        parts[self._index[self.quiver.w_symbol(i, r)]] = (1, 4 * power)
        return self.space.shift(*parts)

    def mult(self, c) -> DiffOp:
        return self.space.mult(c)

    def _check_node(self, i: str, n: int):
        if i not in self.quiver.gauge:
            raise IndexOutOfRange(f"no gauge node {i!r}")
        if not 1 <= n <= self.quiver.gauge[i]:
            raise IndexOutOfRange(f"n={n} outside 1..{self.quiver.gauge[i]}")

    def _dressing_image(self, f, n: int, vals: Sequence[RatFn]) -> RatFn:
        if isinstance(f, int):
            return as_ratfn(f, self.table)
        f = RatFn(f) if isinstance(f, LaurentPoly) else f
        names = dressing_variables(n)
        if set(f.table.symbols) != set(names):
            raise DressingNotSymmetric(f"dressing must be over the variables {names}")
        _require_symmetric(f, names)
        return f.substitute(dict(zip(names, vals)), self.table)

    def E(self, i: str, n: int, f=1) -> DiffOp:
        """The dressed monopole operator E_{i,n}[f]."""
        self._check_node(i, n)
        d = self.quiver.gauge[i]
        total = self.space.zero()
        for I in combinations(range(1, d + 1), n):
            fv = self._dressing_image(f, n, [self.w(i, r) for r in I])
            if fv.is_zero():
                continue
            c = fv * self._P(i, I)
            D = self.space.one()
            for r in I:
                D = D * self.D(i, r)
            total = total + self.mult(c) * D
        return total

    def F(self, i: str, n: int, f=1) -> DiffOp:
        """The dressed monopole operator F_{i,n}[f]."""
        self._check_node(i, n)
        d = self.quiver.gauge[i]
        q = self.q()
        total = self.space.zero()
        for I in combinations(range(1, d + 1), n):
            fv = self._dressing_image(f, n, [q ** -2 * self.w(i, r) for r in I])
            if fv.is_zero():
                continue
            frame = self.table.one()
            for a in self.quiver.arrows:
                if a.dst == i and a.src in self.quiver.framing:
                    for r in I:
                        for l in range(1, self.quiver.framing[a.src] + 1):
                            zl = self.z(self.quiver.z_symbol(a.src, l))
                            frame = frame * (1 - q * zl * self.z(a.symbol) * self.w(i, r) ** -1)
            c = fv * frame * self._Q(i, I)
            D = self.space.one()
            for r in I:
                D = D * self.D(i, r, -1)
            total = total + self.mult(c) * D
        return total

    def _complement(self, i: str, I) -> List[int]:
        return [s for s in range(1, self.quiver.gauge[i] + 1) if s not in I]

    def _P(self, i: str, I) -> RatFn:
        q = self.q()
        num = self.table.one()
        for a in self.quiver.arrows:
            if a.src != i or a.dst not in self.quiver.gauge:
                continue
            j = a.dst
            ss = self._complement(i, I) if j == i else range(1, self.quiver.gauge[j] + 1)
            for r in I:
                for s in ss:
                    num = num * (1 - q * self.z(a.symbol) * self.w(i, r) * self.w(j, s) ** -1)
        den = self.table.one()
        for r in I:
            for s in self._complement(i, I):
                den = den * (1 - self.w(i, s) * self.w(i, r) ** -1)
        return num / den

    def _Q(self, i: str, I) -> RatFn:
        q = self.q()
        num = self.table.one()
        for a in self.quiver.arrows:
            if a.dst != i or a.src not in self.quiver.gauge:
                continue
            j = a.src
            if j == i and not self.loop_in_Q:
                continue
            ss = self._complement(i, I) if j == i else range(1, self.quiver.gauge[j] + 1)
            for r in I:
                for s in ss:
                    num = num * (1 - q * self.z(a.symbol) * self.w(j, s) * self.w(i, r) ** -1)
        den = self.table.one()
        for r in I:
            for s in self._complement(i, I):
                den = den * (1 - self.w(i, r) * self.w(i, s) ** -1)
        return num / den

    def sym_power_sum(self, i: str, m: int) -> DiffOp:
        """Multiplication by ``sum_r w_{i,r}^m``."""
        return self.mult(sum((self.w(i, r) ** m for r in range(1, self.quiver.gauge[i] + 1)), self.table.zero()))


def dressing_variables(n: int) -> Tuple[str, ...]:
    return ("x",) if n == 1 else tuple(f"x{j}" for j in range(1, n + 1))


def dressing_table(n: int) -> SymbolTable:
    return SymbolTable(dressing_variables(n))


def x_power(m: int) -> RatFn:
    """The one-variable dressing ``x^m``."""
    return dressing_table(1).gen("x") ** m


def _require_symmetric(f: RatFn, names):
    for a, b in zip(names, names[1:]):
        if not f.substitute({a: f.table.gen(b), b: f.table.gen(a)}) == f:
            raise DressingNotSymmetric("dressing is not symmetric")


def monopole_E(torus: Torus, i: str, n: int, f=1) -> DiffOp:
    return torus.E(i, n, f)


def monopole_F(torus: Torus, i: str, n: int, f=1) -> DiffOp:
    return torus.F(i, n, f)


# ---------------------------------------------------------------------------
# grading, Weyl symmetry, quotient embedding
# ---------------------------------------------------------------------------

def d_degrees(torus: Torus, g: Subst) -> Tuple[int, ...]:
    """Total D-degree per gauge node of the D-monomial ``g``."""
    out = []
    pos = 0
    for i, d in torus.quiver.gauge.items():
        out.append(sum(k // 4 for _, k in g.parts[pos:pos + d]))
        pos += d
    return tuple(out)


def grading(torus: Torus, elem: DiffOp):
    return {d_degrees(torus, g) for g in elem.terms}


def weyl_image(torus: Torus, elem: DiffOp, i: str, r: int, s: int) -> DiffOp:
    d = torus.quiver.gauge.get(i)
    if d is None or not (1 <= r <= d and 1 <= s <= d) or r == s:
        raise IndexOutOfRange(f"bad transposition ({r},{s}) at node {i!r}")
    wr, ws = torus.quiver.w_symbol(i, r), torus.quiver.w_symbol(i, s)
    jr, js = torus._index[wr], torus._index[ws]
    swap = {wr: torus.table.gen(ws), ws: torus.table.gen(wr)}
    out = {}
    for g, c in elem.terms.items():
        parts = list(g.parts)
        parts[jr], parts[js] = parts[js], parts[jr]
        out[Subst(parts)] = c.substitute(swap)
    return DiffOp(torus.space, out)


class QuotientEmbedding:
    """``w1 -> X, w2 -> X^-1, D1 D2^-1 -> q^-4 X^-4 varpi^2`` plus a parameter dictionary."""

    def __init__(self, torus: Torus, ctx, parameter_map: Mapping[str, RatFn]):
        if list(torus.quiver.gauge.values()) != [2]:
            raise ValueError("the quotient embedding is defined for one gauge node of dimension 2")
        self.torus = torus
        self.ctx = ctx
        self.space = ctx.space
        X = ctx.X
        w1, w2 = torus.space.variables
        mapping = {w1: X, w2: X ** -1}
        for p in torus.quiver.parameter_symbols():
            if p in torus.table:
                if p not in parameter_map:
                    raise UnmappedParameter(f"parameter {p!r} has no image")
                mapping[p] = parameter_map[p]
        self.mapping = mapping
        self.step = self.space.mult(ctx.q(-4) * X ** -4) * self.space.varpi(2)
        self._powers = {0: self.space.one(), 1: self.step}

    def power(self, k: int) -> DiffOp:
        p = self._powers.get(k)
        if p is None:
            if k < 0:
                p = self.power(-k).inverse() if k == -1 else self.power(-1) * self.power(k + 1)
            else:
                p = self.power(k - 1) * self.step
            self._powers[k] = p
        return p

    def scalar(self, c: RatFn) -> RatFn:
        return c.substitute(self.mapping, self.space.table)

    def __call__(self, elem: DiffOp) -> DiffOp:
        out = self.space.zero()
        for g, c in elem.terms.items():
            (e1, k1), (e2, k2) = g.parts
            if k1 + k2 != 0:
                raise NotInvariant("element has nonzero D-degree")
            nu = k1 // 4
            out = out + self.space.mult(self.scalar(c)) * self.power(nu)
        return out


def embed_quotient(torus: Torus, elem: DiffOp, ctx, parameter_map) -> DiffOp:
    return QuotientEmbedding(torus, ctx, parameter_map)(elem)


def torus_for(quiver_name: str, ctx, loop_in_Q: bool = True) -> Torus:
    """A torus matching ``ctx``: symbolic, or with parameters fixed by the DAHA-side values."""
    quiver = BUILTIN_QUIVERS[quiver_name]()
    if ctx.mode == "symbolic":
        return Torus(quiver, loop_in_Q=loop_in_Q)
    pm = s04_parameter_map(ctx) if quiver_name == "s04" else jordan_parameter_map(ctx)
    values = {k: v.constant_value() for k, v in pm.items()}
    return Torus(quiver, values, loop_in_Q=loop_in_Q)


def parameter_map_for(quiver_name: str, ctx) -> Dict[str, RatFn]:
    return s04_parameter_map(ctx) if quiver_name == "s04" else jordan_parameter_map(ctx)


def pullback_symmetric(f: RatFn, ctx, torus: Torus, parameter_map: Mapping[str, RatFn]) -> RatFn:
    """The symmetric polynomial in ``w1, w2`` whose quotient image is ``f(X)``.

    ``f`` must be a symmetric Laurent polynomial in ``X``; its parameters are
    pulled back through the monomial entries of ``parameter_map``.
    """
    p = f.to_laurent()
    if p is None:
        raise NotInvariant("not a Laurent polynomial")
    table = p.table
    jx = table.index("X")
    ux = table.unit("X")
    by_power: Dict[int, Dict[int, object]] = {}
    for key, c in p.terms.items():
        e = table.digit(key, jx)
        by_power.setdefault(e, {})[key - e * ux] = c
    back = {}
    for name, img in parameter_map.items():
        if name == "qh" or not img.is_monomial():
            continue
        (key, c), = img.num.terms.items()
        exps = table.unpack(key)
        nz = [(table.symbols[j], e) for j, e in enumerate(exps) if e]
        if len(nz) == 1 and c == 1 and nz[0][1] == 1:
            back[nz[0][0]] = torus.z(name)
    if "qh" in table:
        back["qh"] = torus.space.qh()
    w1, w2 = (torus.table.gen(v) for v in torus.space.variables)
    out = torus.table.zero()
    for e, terms in by_power.items():
        if by_power.get(-e) != terms:
            raise NotInvariant("not symmetric in X")
        if e < 0:
            continue
        c = RatFn(LaurentPoly(table, terms))
        missing = c.symbols_used() - set(back)
        if missing:
            raise UnmappedParameter(f"cannot pull back {sorted(missing)}")
        cw = c.substitute(back, torus.table)
        out = out + (cw if e == 0 else cw * (w1 ** e + w2 ** e))
    return out


# ---------------------------------------------------------------------------
# identity ledger
# ---------------------------------------------------------------------------

def torus_relation_residuals(torus: Torus):
    """``D_{i,r} w_{j,s} - q^{2 delta} w_{j,s} D_{i,r}`` for every index pair."""
    out = []
    q = torus.q()
    for i, d in torus.quiver.gauge.items():
        for r in range(1, d + 1):
            for j, dj in torus.quiver.gauge.items():
                for s in range(1, dj + 1):
                    D, w = torus.D(i, r), torus.mult(torus.w(j, s))
                    k = 2 if (i, r) == (j, s) else 0
                    out.append((f"D[{i},{r}] w[{j},{s}] = q^{k} w D", D * w - (w * D).scale(q ** k)))
    return out


def commutation_ledger(torus: Torus, ms=range(-3, 4), node: str = "g"):
    """``[E1[x^m], p_{+-1}] = (q^{+-2} - 1) E1[x^{m+-1}]`` and the F analogue."""
    q = torus.q()
    out = []
    for m in ms:
        E, F = torus.E(node, 1, x_power(m)), torus.F(node, 1, x_power(m))
        for s in (1, -1):
            p = torus.sym_power_sum(node, s)
            sign = "+" if s > 0 else "-"
            out.append((f"[E1[x^{m}], w1^{s}+w2^{s}] = (q^{sign}2-1) E1[x^{m + s}]",
                        E * p - p * E - torus.E(node, 1, x_power(m + s)).scale(q ** (2 * s) - 1)))
            out.append((f"[F1[x^{m}], w1^{s}+w2^{s}] = (1-q^{sign}2) F1[x^{m + s}]",
                        F * p - p * F - torus.F(node, 1, x_power(m + s)).scale(1 - q ** (2 * s))))
    return out


def ft_ledger(torus: Torus, ms=range(0, 4), ns=range(0, 4), node: str = "g"):
    """``[E1[x^m], F1[x^n]] = (q - q^-1) h`` with ``h`` a symmetric Laurent polynomial.

    Yields ``(desc, residual, h)``; the residual is the non-multiplication part,
    or the antisymmetric part of ``h`` when the commutator is a multiplication.
    """
    q = torus.q()
    w1, w2 = torus.space.variables
    swap = {w1: torus.table.gen(w2), w2: torus.table.gen(w1)}
    out = []
    for m in ms:
        for n in ns:
            c = torus.E(node, 1, x_power(m)) * torus.F(node, 1, x_power(n))
            c = c - torus.F(node, 1, x_power(n)) * torus.E(node, 1, x_power(m))
            desc = f"[E1[x^{m}], F1[x^{n}]] = (q-q^-1) h, h symmetric"
            if not c.is_multiplication():
                rest = DiffOp(torus.space, {g: v for g, v in c.terms.items() if not g.is_identity()})
                out.append((desc, rest, None))
                continue
            h = c.multiplier() / (q - q ** -1)
            bad = h - h.substitute(swap)
            if bad.is_zero() and h.to_laurent() is None:
                bad = h
            out.append((desc, bad, h))
    return out


def dressing_ledger(torus: Torus, emb: QuotientEmbedding, ms=range(0, 4), ns=range(0, 4), node: str = "g"):
    """Both change-of-dressing identities, checked after the quotient."""
    q = torus.q()
    E = lambda m: torus.E(node, 1, x_power(m))
    F = lambda n: torus.F(node, 1, x_power(n))
    out = []
    for m in ms:
        for n in ns:
            pm = torus.sym_power_sum(node, m)
            r1 = E(m) * F(n) - pm * E(0) * F(n) + E(-m) * F(n)
            out.append((f"E1[x^{m}]F1[x^{n}] = p_{m} E1[1]F1[x^{n}] - E1[x^{-m}]F1[x^{n}]", emb(r1)))
            r2 = F(n) * E(m) - F(n + 1) * E(m - 1) - (F(n - 1) * E(m - 1)).scale(q ** -2) + (F(n) * E(m - 2)).scale(q ** -2)
            out.append((f"F1[x^{n}]E1[x^{m}] rewrites through F1[x^{n + 1}], F1[x^{n - 1}]", emb(r2)))
    return out


def jordan_ledger(torus: Torus, emb: QuotientEmbedding, ms=range(-2, 3), ns=range(-2, 3), node: str = "g"):
    """``E1[x^m] F1[x^n] = q^(-2(m+n)) F1[x^-m] E1[x^-n]`` after the quotient."""
    q = torus.q()
    out = []
    for m in ms:
        for n in ns:
            lhs = torus.E(node, 1, x_power(m)) * torus.F(node, 1, x_power(n))
            rhs = (torus.F(node, 1, x_power(-m)) * torus.E(node, 1, x_power(-n))).scale(q ** (-2 * (m + n)))
            out.append((f"E1[x^{m}]F1[x^{n}] = q^{-2 * (m + n)} F1[x^{-m}]E1[x^{-n}]", emb(lhs - rhs)))
    return out
