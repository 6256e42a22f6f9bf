"""Independent sympy oracles.

These rebuild the rank-one DAHA operators as plain functions acting on sympy
expressions, with no use of the package's operator algebra or its rational
function arithmetic.  Package values are compared to them by converting to
sympy or by evaluating both sides at rational points.
"""

from fractions import Fraction

import sympy as sp

from skeincoulomb.exactring import GaussQ

X = sp.Symbol("X")
qh = sp.Symbol("qh")
th = sp.Symbol("th")
t1, t2, t3, t4 = sp.symbols("t1 t2 t3 t4")
q = qh ** 2

_NAMES = {"X": X, "qh": qh, "th": th, "t1": t1, "t2": t2, "t3": t3, "t4": t4}


def coeff_to_sympy(c):
    if isinstance(c, GaussQ):
        return coeff_to_sympy(c.re) + sp.I * coeff_to_sympy(c.im)
    if isinstance(c, Fraction):
        return sp.Rational(c.numerator, c.denominator)
    return sp.Integer(c)


def poly_to_sympy(p):
    out = sp.Integer(0)
    syms = [_NAMES.get(s) or sp.Symbol(s) for s in p.table.symbols]
    for key, c in p.terms.items():
        term = coeff_to_sympy(c)
        for s, e in zip(syms, p.table.unpack(key)):
            term *= s ** e
        out += term
    return out


def to_sympy(r):
    """A package RatFn as a sympy expression."""
    out = poly_to_sympy(r.numerator)
    for atom, e in r.atoms().items():
        out /= poly_to_sympy(atom) ** e
    return out


def same(a, b) -> bool:
    return sp.simplify(sp.together(a - b)) == 0


# ---------------------------------------------------------------------------
# substitutions on functions of X
# ---------------------------------------------------------------------------

def sigma(f):
    return f.subs(X, 1 / X)


def tau(f, k=1):
    return f.subs(X, q ** (2 * k) * X)


def varpi(f, k=1):
    return f.subs(X, q ** k * X)


# ---------------------------------------------------------------------------
# type (C1v, C1)
# ---------------------------------------------------------------------------

def _c3():
    return (1 - t3 * t4 * X) * (1 + t3 / t4 * X) / (t3 * (1 - X ** 2))


def _c2():
    Xi = 1 / X
    return (1 - q * t1 * t2 * Xi) * (1 + q * t2 / t1 * Xi) / (t2 * (1 - q ** 2 * X ** -2))


def cc_T3(f):
    return t3 * f + _c3() * (sigma(f) - f)


def cc_T2(f):
    return t2 * f + _c2() * (f.subs(X, q ** 2 / X) - f)


def cc_T3inv(f):
    return cc_T3(f) - (t3 - 1 / t3) * f


def cc_T2inv(f):
    return cc_T2(f) - (t2 - 1 / t2) * f


def cc_T4(f):
    return cc_T3inv(f) / X


def cc_T4inv(f):
    return cc_T3(X * f)


def cc_T1(f):
    return cc_T2inv(X * f) / q


def cc_T1inv(f):
    return q * cc_T2(f) / X


def cc_e(f):
    return (cc_T3(f) + f / t3) / (t3 + 1 / t3)


def cc_y(f):
    g = cc_e(f)
    return cc_T3(cc_T2(g)) + cc_T2inv(cc_T3inv(g))


def cc_z(f):
    g = cc_e(f)
    return cc_T3(cc_T1(g)) + cc_T1inv(cc_T3inv(g))


def cc_U():
    num = (1 - t3 * t4 * X) * (1 + t3 / t4 * X) * (1 - q * t1 * t2 * X) * (1 + q * t2 / t1 * X)
    return num / (t2 * t3 * (1 - X ** 2) * (1 - q ** 2 * X ** 2))


def cc_y_closed(f, fy):
    U = cc_U()
    return U * (tau(f) - f) + sigma(U) * (tau(f, -1) - f) + fy * f


def cc_fy():
    return sp.factor(sp.cancel(cc_y(sp.Integer(1))))


def cc_fz():
    return sp.factor(sp.cancel(cc_z(sp.Integer(1))))


# ---------------------------------------------------------------------------
# type A1
# ---------------------------------------------------------------------------

def a1_T(f):
    c = (th - 1 / th) / (X ** 2 - 1)
    return th * sigma(f) + c * (sigma(f) - f)


def a1_Tinv(f):
    return a1_T(f) - (th - 1 / th) * f


def a1_Y(f):
    return sigma(varpi(a1_T(f)))


def a1_Yinv(f):
    return a1_Tinv(varpi(sigma(f), -1))


def a1_e(f):
    return sp.cancel((a1_T(f) + f / th) / (th + 1 / th))


def a1_x(f):
    return (X + 1 / X) * a1_e(f)


def a1_y(f):
    g = a1_e(f)
    return a1_Y(g) + a1_Yinv(g)


def a1_z(f):
    g = a1_e(f)
    return qh * a1_Y(X * g) + a1_Yinv(g) / (qh * X)


def a1_V():
    return (th * X - X ** -1 / th) / (X - 1 / X)


def a1_y_closed(f):
    V = a1_V()
    return V * varpi(f) + sigma(V) * varpi(f, -1)


def a1_z_closed(f):
    V = a1_V()
    return (V / X * varpi(f) + X * sigma(V) * varpi(f, -1)) / qh


def a1_quartic_lhs(f):
    """``q x^2 + q^-1 y^2 + q z^2 - q^(1/2) x y z`` applied to a symmetric ``f``."""
    c = sp.cancel
    return (q * a1_x(c(a1_x(f))) + a1_y(c(a1_y(f))) / q + q * a1_z(c(a1_z(f)))
            - qh * a1_x(c(a1_y(c(a1_z(f))))))


def sym_basis(n):
    return X ** n + X ** -n
