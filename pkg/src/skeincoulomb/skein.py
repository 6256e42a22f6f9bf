"""Relative skein algebras of S03, S04, S11: presentations, operator images, curve families."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Tuple

from .daha import (
    Context,
    a1_closed_forms,
    a1_context,
    build_a1_rep,
    build_cc_rep,
    cc_context,
    cc_U,
    reflect,
    shift_part,
    spherical_a1,
    spherical_cc,
)
from .errors import ClosedFormMismatch, RangeError
from .exactring import I, RatFn
from .presentation import (
    Presentation,
    RepMap,
    skein_s03_presentation,
    skein_s04_presentation,
    skein_s11_presentation,
)
from .qdiffop import DiffOp

SURFACES = ("S03", "S04", "S11")


@dataclass
class SkeinSurface:
    surface: str
    presentation: Presentation
    boundary: Tuple[str, ...]


def build_skein(surface: str) -> SkeinSurface:
    if surface == "S04":
        return SkeinSurface(surface, skein_s04_presentation(), ("l1", "l2", "l3", "l4"))
    if surface == "S11":
        return SkeinSurface(surface, skein_s11_presentation(), ("l",))
    if surface == "S03":
        return SkeinSurface(surface, skein_s03_presentation(), ("l1", "l2", "l3"))
    raise ValueError(f"unknown surface {surface!r}")


@dataclass
class SkeinRep:
    surface: str
    ctx: Context
    repmap: RepMap
    constants: Dict[str, RatFn] = field(default_factory=dict)

    def image(self, g: str) -> DiffOp:
        return self.repmap.images[g]

    @property
    def A(self) -> RatFn:
        return self.repmap.translation["A"]


def s04_context(mode: str = "symbolic", seed: int = 0) -> Tuple[Context, Context]:
    """The plain CC context and the rescaled one whose spherical operators represent S04.

    The rescaling ``t1 -> i t1, t2 -> -i t2, t3 -> -i q t3, t4 -> i t4`` turns the
    boundary dictionary ``l_j -> i t_j, l3 -> i q^-1 t3`` into ``l1 -> -t1, l2 -> t2,
    l3 -> t3, l4 -> -t4``.
    """
    ctx = cc_context(mode, seed)
    q = ctx.q()
    t1, t2, t3, t4 = (ctx.p(f"t{i}") for i in range(1, 5))
    return ctx, ctx.with_params(t1=I * t1, t2=-I * t2, t3=-I * q * t3, t4=I * t4)


def s04_printed_U(ctx: Context) -> RatFn:
    """The U(X) printed alongside the S04 representation."""
    X, q = ctx.X, ctx.q()
    t1, t2, t3, t4 = (ctx.p(f"t{i}") for i in range(1, 5))
    num = (t2 * t3) ** -1 * (1 - q * t3 * t4 * X) * (1 - q * t3 / t4 * X) * (1 - q * t1 * t2 * X) * (1 - q * t2 / t1 * X)
    return num * (1 - X ** 2) ** -1 * (1 - q ** 2 * X ** 2) ** -1


def s04_U(ctx: Context, rescaled: Context) -> RatFn:
    """The tau-coefficient of the beta image: the CC ``U`` under the rescaling."""
    return cc_U(rescaled)


def rep_skein(surface: str, mode: str = "symbolic", seed: int = 0) -> SkeinRep:
    if surface == "S04":
        ctx, resc = s04_context(mode, seed)
        st = spherical_cc(build_cc_rep(resc))
        t1, t2, t3, t4 = (ctx.p(f"t{i}") for i in range(1, 5))
        translation = {"A": ctx.qh(-1), "l1": -t1, "l2": t2, "l3": t3, "l4": -t4}
        images = {"alpha": st.x, "beta": st.y, "gamma": st.z}
        rm = RepMap(ctx.space, images, translation)
        U = s04_U(ctx, resc)
        # certify the sigma-free shape with the rescaled U
        X, q = ctx.X, ctx.q()
        expect_b = shift_part(ctx, U, reflect(ctx, U)) + ctx.space.mult(st.constants["f_y"])
        expect_c = shift_part(ctx, q * X * U, q * X ** -1 * reflect(ctx, U)) + ctx.space.mult(st.constants["f_z"])
        if not (expect_b - st.y).is_zero() or not (expect_c - st.z).is_zero():
            raise ClosedFormMismatch("S04 images do not have the U(X)-form")
        consts = {"U": U, "f_y": st.constants["f_y"], "f_z": st.constants["f_z"]}
        return SkeinRep(surface, ctx, rm, consts)
    if surface == "S11":
        ctx = a1_context(mode, seed)
        st = spherical_a1(build_a1_rep(ctx))
        closed = a1_closed_forms(ctx)
        images = {"alpha": closed["x"], "beta": closed["y"], "gamma": closed["z"]}
        for g, k in (("alpha", "x"), ("beta", "y"), ("gamma", "z")):
            if not (images[g] - getattr(st, k)).is_zero():
                raise ClosedFormMismatch(f"S11 image of {g} differs from the closed form")
        translation = {"A": ctx.qh(-1), "l": ctx.q(-1) * ctx.p("th") ** 2}
        return SkeinRep(surface, ctx, RepMap(ctx.space, images, translation))
    raise ValueError(f"no operator representation for surface {surface!r}")


# ---------------------------------------------------------------------------
# curve families
# ---------------------------------------------------------------------------

@dataclass
class GammaFamily:
    surface: str
    images: Dict[int, DiffOp]
    constants: Dict[str, RatFn] = field(default_factory=dict)


def gamma_family(rep: SkeinRep, N: int) -> GammaFamily:
    """Images of the curves gamma_n for ``-N <= n <= N``."""
    if N < 1:
        raise RangeError("gamma range must be at least 1")
    A = rep.A
    alpha = rep.image("alpha")
    g = {0: rep.image("beta"), 1: rep.image("gamma")}
    consts: Dict[str, RatFn] = {}
    if rep.surface == "S11":
        for m in range(1, N):
            g[m + 1] = (alpha * g[m]).scale(A) - g[m - 1].scale(A ** 2)
        for m in range(0, -N, -1):
            g[m - 1] = (alpha * g[m]).scale(A ** -1) - g[m + 1].scale(A ** -2)
    elif rep.surface == "S04":
        k_up = (A ** -2 - A ** 2) ** -1
        c = A ** 2 - A ** -2
        for m in range(1, N):
            g[m + 1] = (g[m] * alpha - alpha * g[m] - g[m - 1].scale(c)).scale(k_up)
        for m in range(0, -N, -1):
            g[m - 1] = (g[m] * alpha - alpha * g[m] + g[m + 1].scale(c)).scale(c ** -1)
    else:
        raise ValueError(f"no curve family for {rep.surface!r}")
    return GammaFamily(rep.surface, dict(sorted(g.items())), consts)


def s11_gamma_closed_form(ctx: Context, n: int) -> DiffOp:
    from .daha import a1_V

    sp = ctx.space
    X = ctx.X
    V = a1_V(ctx)
    Vr = reflect(ctx, V)
    c = ctx.qh(-n)
    return sp.mult(c * X ** -n * V) * sp.varpi() + sp.mult(c * X ** n * Vr) * sp.varpi(-1)


def s04_gamma_decompose(rep: SkeinRep, op: DiffOp, n: int):
    """Split ``op`` as ``q^n X^n U (tau - 1) + q^n X^-n U(X^-1) (tau^-1 - 1) + f``.

    Returns ``(shape_ok, f)``: whether the tau-coefficients have the expected
    form, and the remaining multiplication part.
    """
    ctx = rep.ctx
    X, q = ctx.X, ctx.q()
    U = rep.constants["U"]
    a = q ** n * X ** n * U
    b = q ** n * X ** -n * reflect(ctx, U)
    rest = op - shift_part(ctx, a, b)
    return rest.is_multiplication(), rest.multiplier()


def s04_forward_constants(rep: SkeinRep, fam: GammaFamily):
    """``alpha gamma_m - A^2 gamma_{m+1} - A^-2 gamma_{m-1}`` for each interior m."""
    A = rep.A
    alpha = rep.image("alpha")
    out = {}
    idx = sorted(fam.images)
    for m in idx[1:-1]:
        out[m] = alpha * fam.images[m] - fam.images[m + 1].scale(A ** 2) - fam.images[m - 1].scale(A ** -2)
    return out


def is_parameter_scalar(ctx: Context, op: DiffOp) -> bool:
    """Multiplication by something free of X."""
    if not op.is_multiplication():
        return False
    return "X" not in op.multiplier().symbols_used()


def z2_invariant_images(rep: SkeinRep) -> Dict[str, DiffOp]:
    if rep.surface != "S11":
        raise ValueError("the Z2-invariant generators are defined for S11")
    a, b, c = rep.image("alpha"), rep.image("beta"), rep.image("gamma")
    return {"alpha": a, "beta^2": b * b, "gamma*beta": c * b, "gamma^2": c * c}


def s03_collapse():
    """S03: every generator is a boundary scalar; returns ``{delta_i: -(l_i + 1/l_i)}``."""
    return dict(skein_s03_presentation().central)
