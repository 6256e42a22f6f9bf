import pytest

from skeincoulomb.daha import a1_V, is_symmetric_laurent, reflect
from skeincoulomb.errors import RangeError
from skeincoulomb.skein import (
    build_skein,
    gamma_family,
    is_parameter_scalar,
    rep_skein,
    s03_collapse,
    s04_forward_constants,
    s04_gamma_decompose,
    s04_printed_U,
    s11_gamma_closed_form,
    z2_invariant_images,
)
from skeincoulomb.qdiffop import symmetric_basis

import oracles


@pytest.fixture(scope="module")
def s11():
    rep = rep_skein("S11")
    return rep, gamma_family(rep, 5)


@pytest.fixture(scope="module")
def s04():
    rep = rep_skein("S04")
    return rep, gamma_family(rep, 5)


def test_builders():
    assert build_skein("S04").boundary == ("l1", "l2", "l3", "l4")
    assert build_skein("S11").presentation.generators == ("alpha", "beta", "gamma")
    with pytest.raises(ValueError):
        build_skein("S22")
    with pytest.raises(ValueError):
        rep_skein("S03")


def test_s03_collapse():
    d = s03_collapse()
    assert sorted(d) == ["delta1", "delta2", "delta3"]
    l1 = d["delta1"].table.gen("l1")
    assert d["delta1"] == -(l1 + l1 ** -1)


def test_s11_gamma_image(s11):
    rep, _ = s11
    ctx = rep.ctx
    sp, X = ctx.space, ctx.X
    V = a1_V(ctx)
    expect = sp.mult(ctx.qh(-1) * X ** -1 * V) * sp.varpi() + sp.mult(ctx.qh(-1) * X * reflect(ctx, V)) * sp.varpi(-1)
    assert rep.image("gamma") == expect


def test_s11_gamma_two(s11):
    rep, fam = s11
    ctx = rep.ctx
    sp, X = ctx.space, ctx.X
    V = a1_V(ctx)
    expect = sp.mult(ctx.q(-1) * X ** -2 * V) * sp.varpi() + sp.mult(ctx.q(-1) * X ** 2 * reflect(ctx, V)) * sp.varpi(-1)
    assert fam.images[2] == expect


def test_s11_family_closed_form(s11):
    rep, fam = s11
    for n in range(-5, 6):
        assert fam.images[n] == s11_gamma_closed_form(rep.ctx, n)


def test_s04_base_cases(s04):
    rep, fam = s04
    assert fam.images[0] == rep.image("beta")
    assert fam.images[1] == rep.image("gamma")


def test_s04_U_erratum(s04):
    """The beta image carries -q^-1 times the printed U in its tau-coefficient."""
    rep, _ = s04
    ctx = rep.ctx
    assert rep.image("beta").coeff((1, 4)) == -ctx.q(-1) * s04_printed_U(ctx)
    assert not rep.image("beta").coeff((1, 4)) == s04_printed_U(ctx)


def test_s04_decomposition(s04):
    rep, fam = s04
    for n in range(-5, 6):
        ok, f = s04_gamma_decompose(rep, fam.images[n], n)
        assert ok and is_symmetric_laurent(rep.ctx, f)
    ok, f = s04_gamma_decompose(rep, fam.images[0], 0)
    assert f == rep.constants["f_y"]
    ok, f = s04_gamma_decompose(rep, fam.images[1], 1)
    assert f == rep.constants["f_z"]


def test_s04_wrong_shift_detected(s04):
    rep, fam = s04
    ok, _ = s04_gamma_decompose(rep, fam.images[2], 1)
    assert not ok


def test_s04_forward_constants(s04):
    rep, fam = s04
    consts = s04_forward_constants(rep, fam)
    assert set(consts) == set(range(-4, 5))
    assert all(is_parameter_scalar(rep.ctx, c) for c in consts.values())
    t = {i: rep.ctx.p(f"t{i}") for i in range(1, 5)}
    s = {i: t[i] + t[i] ** -1 for i in t}
    assert consts[0].multiplier() == -s[1] * s[3] - s[2] * s[4]
    assert consts[1].multiplier() == s[1] * s[4] + s[2] * s[3]


def test_gamma_range_error(s11):
    with pytest.raises(RangeError):
        gamma_family(s11[0], 0)


def test_beta_squared_at_t_one(s11):
    rep, _ = s11
    b2 = z2_invariant_images(rep)["beta^2"].substitute_parameters({"th": 1})
    w = rep.ctx.space.varpi()
    assert b2 == w * w + w.inverse() * w.inverse() + rep.ctx.space.one().scale(2)


def test_gamma_beta_against_oracle(s11):
    rep, _ = s11
    gb = z2_invariant_images(rep)["gamma*beta"]
    for n in (1, 2):
        got = oracles.to_sympy(gb.apply(symmetric_basis(rep.ctx.space, n)))
        want = oracles.a1_z_closed(oracles.a1_y_closed(oracles.sym_basis(n)))
        assert oracles.same(got, want)


def test_z2_images_only_for_s11(s04):
    with pytest.raises(ValueError):
        z2_invariant_images(s04[0])


def test_random_mode_matches_symbolic_shape():
    rep = rep_skein("S04", "random", 42)
    fam = gamma_family(rep, 2)
    for n in range(-2, 3):
        ok, f = s04_gamma_decompose(rep, fam.images[n], n)
        assert ok and is_symmetric_laurent(rep.ctx, f)
