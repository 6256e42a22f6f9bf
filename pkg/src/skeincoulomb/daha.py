"""Polynomial representations of the rank-one DAHAs of type (C1v, C1) and A1.

Both representations are assembled from the reflection ``sigma`` and the
shifts ``tau`` (X -> q^2 X) and ``varpi`` (X -> q X).  Every constructor takes
a :class:`Context` so the same code runs symbolically or with parameters
specialized to small primes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .checks import random_values
from .errors import (
    AmbiguityUnresolved,
    BraidRelationFails,
    ClosedFormMismatch,
    QuadraticRelationFails,
)
from .exactring import RatFn, SymbolTable
from .qdiffop import DiffOp, OpSpace, Subst, fold_symmetric, invert_hecke

CC_PARAMETERS = ("qh", "t1", "t2", "t3", "t4")
A1_PARAMETERS = ("qh", "th")


@dataclass
class Context:
    """An operator space plus the values of the named parameters inside it."""

    space: OpSpace
    params: Dict[str, RatFn]
    mode: str = "symbolic"
    values: Optional[Dict[str, int]] = None

    def p(self, name: str) -> RatFn:
        return self.params[name]

    @property
    def X(self) -> RatFn:
        return self.space.gen("X")

    def q(self, power: int = 1) -> RatFn:
        return self.space.q(power)

    def qh(self, power: int = 1) -> RatFn:
        return self.space.qh(power)

    def with_params(self, **params) -> "Context":
        d = dict(self.params)
        d.update(params)
        return Context(self.space, d, self.mode, self.values)


def make_context(parameters, mode: str = "symbolic", seed: int = 0) -> Context:
    """Context over ``parameters`` (first must be ``qh``) and the variable ``X``."""
    parameters = tuple(parameters)
    if mode == "symbolic":
        table = SymbolTable(parameters + ("X",))
        space = OpSpace(table, ["X"], qh="qh")
        params = {p: table.gen(p) for p in parameters if p != "qh"}
        return Context(space, params, mode)
    if mode == "random":
        values = random_values(parameters, seed)
        table = SymbolTable(("X",))
        space = OpSpace(table, ["X"], qh=values["qh"])
        params = {p: table.const(values[p]) for p in parameters if p != "qh"}
        return Context(space, params, mode, values)
    raise ValueError(f"unknown mode {mode!r}")


def cc_context(mode: str = "symbolic", seed: int = 0) -> Context:
    return make_context(CC_PARAMETERS, mode, seed)


def a1_context(mode: str = "symbolic", seed: int = 0) -> Context:
    return make_context(A1_PARAMETERS, mode, seed)


def reflect(ctx: Context, f: RatFn) -> RatFn:
    """``f(X^-1)``."""
    return ctx.space.act(Subst(((-1, 0),)), f)


def is_symmetric_laurent(ctx: Context, f: RatFn) -> bool:
    return f.to_laurent() is not None and reflect(ctx, f) == f


# ---------------------------------------------------------------------------
# type (C1v, C1)
# ---------------------------------------------------------------------------

@dataclass
class CCRep:
    ctx: Context
    T1: DiffOp
    T2: DiffOp
    T3: DiffOp
    T4: DiffOp
    T2inv: DiffOp
    T3inv: DiffOp
    e: DiffOp

    def Tinv(self, i: int) -> DiffOp:
        if i == 2:
            return self.T2inv
        if i == 3:
            return self.T3inv
        if i == 4:
            return self.T3 * self.ctx.space.mult(self.ctx.X)
        if i == 1:
            return self.ctx.space.mult(self.ctx.X ** -1) * self.T2.scale(self.ctx.q())
        raise IndexError(i)


def cc_T3(ctx: Context) -> DiffOp:
    sp = ctx.space
    X, t3, t4 = ctx.X, ctx.p("t3"), ctx.p("t4")
    c = t3 ** -1 * (1 - t3 * t4 * X) * (1 + t3 / t4 * X) * (1 - X ** 2) ** -1
    return sp.mult(t3) + sp.mult(c) * (sp.sigma() - 1)


def cc_T2(ctx: Context) -> DiffOp:
    sp = ctx.space
    X, t1, t2, q = ctx.X, ctx.p("t1"), ctx.p("t2"), ctx.q()
    Xi = X ** -1
    den = 1 - q ** 2 * X ** -2
    c = t2 ** -1 * (1 - q * t1 * t2 * Xi) * (1 + q * t2 / t1 * Xi) / den
    sigma_tau = sp.sigma() * sp.tau()
    return sp.mult(t2) + sp.mult(c) * (sigma_tau - 1)


def build_cc_rep(ctx: Optional[Context] = None, verify: bool = True) -> CCRep:
    """Operators for T1..T4 and the idempotent, with their defining relations verified."""
    ctx = ctx or cc_context()
    sp = ctx.space
    t = {i: ctx.p(f"t{i}") for i in range(1, 5)}
    T3 = cc_T3(ctx)
    T2 = cc_T2(ctx)
    T3inv = invert_hecke(T3, t[3], t[3] ** -1)
    T2inv = invert_hecke(T2, t[2], t[2] ** -1)
    T4 = sp.mult(ctx.X ** -1) * T3inv
    T1 = (T2inv * sp.mult(ctx.X)).scale(ctx.q(-1))
    e = (T3 + t[3] ** -1).scale((t[3] + t[3] ** -1) ** -1)
    rep = CCRep(ctx, T1, T2, T3, T4, T2inv, T3inv, e)
    if verify:
        for i, T in ((1, T1), (2, T2), (3, T3), (4, T4)):
            if not ((T - t[i]) * (T + t[i] ** -1)).is_zero():
                raise QuadraticRelationFails(f"T{i} fails its quadratic relation")
        if not (T4 * T3 * T2 * T1 - sp.mult(ctx.q(-1))).is_zero():
            raise BraidRelationFails("T4 T3 T2 T1 differs from q^-1")
        if not (e * e - e).is_zero():
            raise QuadraticRelationFails("e is not idempotent")
    return rep


def cc_raw_spherical(rep: CCRep) -> Dict[str, DiffOp]:
    """The spherical elements x, y, z built literally from the T's (not folded)."""
    T, Ti, e = {1: rep.T1, 2: rep.T2, 3: rep.T3, 4: rep.T4}, rep.Tinv, rep.e
    x = (T[4] * T[3] + Ti(3) * Ti(4)) * e
    y = (T[3] * T[2] + Ti(2) * Ti(3)) * e
    z = (T[3] * T[1] + Ti(1) * Ti(3)) * e
    return {"x": x, "y": y, "z": z}


def cc_U(ctx: Context) -> RatFn:
    X, q = ctx.X, ctx.q()
    t1, t2, t3, t4 = (ctx.p(f"t{i}") for i in range(1, 5))
    num = (t2 * t3) ** -1 * (1 - t3 * t4 * X) * (1 + t3 / t4 * X) * (1 - q * t1 * t2 * X) * (1 + q * t2 / t1 * X)
    return num * (1 - X ** 2) ** -1 * (1 - q ** 2 * X ** 2) ** -1


def shift_part(ctx: Context, a: RatFn, b: RatFn, step: int = 4) -> DiffOp:
    """``a (g - 1) + b (g^-1 - 1)`` where ``g`` shifts by ``step`` half-units."""
    sp = ctx.space
    g = sp.shift((1, step))
    gi = sp.shift((1, -step))
    return sp.mult(a) * (g - 1) + sp.mult(b) * (gi - 1)


def cc_closed_forms(ctx: Context, fy: RatFn, fz: RatFn, U: Optional[RatFn] = None) -> Dict[str, DiffOp]:
    """The printed sigma-free forms of x, y, z with the given constant terms."""
    sp = ctx.space
    X, q = ctx.X, ctx.q()
    U = cc_U(ctx) if U is None else U
    Ur = reflect(ctx, U)
    x = sp.mult(X + X ** -1)
    y = shift_part(ctx, U, Ur) + sp.mult(fy)
    z = shift_part(ctx, q * X * U, q * X ** -1 * Ur) + sp.mult(fz)
    return {"x": x, "y": y, "z": z}


@dataclass
class SphericalTriple:
    x: DiffOp
    y: DiffOp
    z: DiffOp
    provenance: str
    constants: Dict[str, RatFn] = field(default_factory=dict)
    raw: Optional[Dict[str, DiffOp]] = None

    def as_dict(self):
        return {"x": self.x, "y": self.y, "z": self.z}


def spherical_cc(rep: CCRep) -> SphericalTriple:
    """Fold the raw spherical operators and certify the printed closed forms."""
    ctx = rep.ctx
    raw = cc_raw_spherical(rep)
    folded = {k: fold_symmetric(v) for k, v in raw.items()}
    fy = folded["y"].apply(1)
    fz = folded["z"].apply(1)
    for name, f in (("f_y", fy), ("f_z", fz)):
        if not is_symmetric_laurent(ctx, f):
            raise ClosedFormMismatch(f"{name} is not a symmetric Laurent polynomial")
    closed = cc_closed_forms(ctx, fy, fz)
    for k in ("x", "y", "z"):
        if not (folded[k] - closed[k]).is_zero():
            raise ClosedFormMismatch(f"folded {k} differs from its closed form")
    return SphericalTriple(closed["x"], closed["y"], closed["z"], "raw-folded",
                           {"f_y": fy, "f_z": fz}, raw)


# ---------------------------------------------------------------------------
# type A1
# ---------------------------------------------------------------------------

A1_T_READINGS = ("multiplication-tail", "sigma-minus-one-tail")
A1_Y_ORDERS = ("sigma.varpi.T", "T.varpi.sigma")


@dataclass
class A1Rep:
    ctx: Context
    T: DiffOp
    Tinv: DiffOp
    X: DiffOp
    Y: DiffOp
    Yinv: DiffOp
    e: DiffOp
    reading: str
    y_order: str
    log: List[str] = field(default_factory=list)


def a1_T(ctx: Context, reading: str) -> DiffOp:
    sp = ctx.space
    th, X = ctx.p("th"), ctx.X
    c = (th - th ** -1) * (X ** 2 - 1) ** -1
    if reading == "multiplication-tail":
        return sp.sigma().scale(th) + sp.mult(c)
    if reading == "sigma-minus-one-tail":
        return sp.sigma().scale(th) + sp.mult(c) * (sp.sigma() - 1)
    raise ValueError(reading)


def _a1_candidate(ctx: Context, reading: str, order: str):
    sp = ctx.space
    th = ctx.p("th")
    T = a1_T(ctx, reading)
    failures = []
    if not ((T - th) * (T + th ** -1)).is_zero():
        failures.append("quadratic")
        return None, failures
    Tinv = invert_hecke(T, th, th ** -1)
    Xop = sp.mult(ctx.X)
    Xinv = sp.mult(ctx.X ** -1)
    s, w = sp.sigma(), sp.varpi()
    if order == "sigma.varpi.T":
        Y = s * w * T
        Yinv = Tinv * w.inverse() * s
    else:
        Y = T * w * s
        Yinv = s * w.inverse() * Tinv
    if not (T * Xop * T - Xinv).is_zero():
        failures.append("TXT=X^-1")
    if not (T * Yinv * T - Y).is_zero():
        failures.append("TY^-1T=Y")
    if not (Yinv * Xinv * Y * Xop * T * T - sp.mult(ctx.q(-1))).is_zero():
        failures.append("Y^-1X^-1YXT^2=q^-1")
    return (T, Tinv, Xop, Y, Yinv), failures


def build_a1_rep(ctx: Optional[Context] = None) -> A1Rep:
    """Construct both readings of the printed T and both orders of Y; keep the one that works."""
    ctx = ctx or a1_context()
    th = ctx.p("th")
    log = []
    passing = []
    for reading in A1_T_READINGS:
        for order in A1_Y_ORDERS:
            ops, failures = _a1_candidate(ctx, reading, order)
            status = "pass" if not failures else "fail: " + ", ".join(failures)
            log.append(f"T reading {reading}, Y order {order}: {status}")
            if not failures:
                passing.append((reading, order, ops))
    readings = {r for r, _, _ in passing}
    if len(readings) != 1:
        raise AmbiguityUnresolved("; ".join(log))
    # prefer the literal left-to-right order when both orders pass
    passing.sort(key=lambda item: A1_Y_ORDERS.index(item[1]))
    reading, order, (T, Tinv, Xop, Y, Yinv) = passing[0]
    e = (T + th ** -1).scale((th + th ** -1) ** -1)
    if not (e * e - e).is_zero():
        raise QuadraticRelationFails("e is not idempotent")
    return A1Rep(ctx, T, Tinv, Xop, Y, Yinv, e, reading, order, log)


def a1_raw_spherical(rep: A1Rep) -> Dict[str, DiffOp]:
    ctx = rep.ctx
    X, Xi = rep.X, ctx.space.mult(ctx.X ** -1)
    x = (X + Xi) * rep.e
    y = (rep.Y + rep.Yinv) * rep.e
    z = (rep.Y * X).scale(ctx.qh()) + (Xi * rep.Yinv).scale(ctx.qh(-1))
    z = z * rep.e
    return {"x": x, "y": y, "z": z}


def a1_V(ctx: Context) -> RatFn:
    X, th = ctx.X, ctx.p("th")
    return (th * X - th ** -1 * X ** -1) / (X - X ** -1)


def a1_closed_forms(ctx: Context) -> Dict[str, DiffOp]:
    sp = ctx.space
    X = ctx.X
    V = a1_V(ctx)
    Vr = reflect(ctx, V)
    w, wi = sp.varpi(), sp.varpi(-1)
    x = sp.mult(X + X ** -1)
    y = sp.mult(V) * w + sp.mult(Vr) * wi
    z = sp.mult(ctx.qh(-1) * X ** -1 * V) * w + sp.mult(ctx.qh(-1) * X * Vr) * wi
    return {"x": x, "y": y, "z": z}


def spherical_a1(rep: A1Rep) -> SphericalTriple:
    raw = a1_raw_spherical(rep)
    folded = {k: fold_symmetric(v) for k, v in raw.items()}
    closed = a1_closed_forms(rep.ctx)
    for k in ("x", "y", "z"):
        if not (folded[k] - closed[k]).is_zero():
            raise ClosedFormMismatch(f"folded {k} differs from its closed form")
    return SphericalTriple(closed["x"], closed["y"], closed["z"], "raw-folded", {}, raw)
