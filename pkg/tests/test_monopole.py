import json
import random

import pytest

from skeincoulomb.daha import a1_context, cc_context
from skeincoulomb.errors import DressingNotSymmetric, IndexOutOfRange, NotInvariant, UnmappedParameter
from skeincoulomb.exactring import random_ratfn
from skeincoulomb.monopole import (
    Quiver,
    QuotientEmbedding,
    Torus,
    commutation_ledger,
    dressing_table,
    ft_ledger,
    grading,
    jordan_ledger,
    jordan_parameter_map,
    jordan_quiver,
    parameter_map_for,
    pullback_symmetric,
    s04_quiver,
    torus_for,
    torus_relation_residuals,
    weyl_image,
    x_power,
)
from skeincoulomb.qdiffop import Subst
from skeincoulomb.skein import rep_skein, z2_invariant_images


@pytest.fixture(scope="module")
def jordan():
    return Torus(jordan_quiver())


@pytest.fixture(scope="module")
def s04():
    return Torus(s04_quiver())


@pytest.fixture(scope="module")
def jordan_emb():
    ctx = a1_context()
    T = torus_for("jordan", ctx)
    return T, QuotientEmbedding(T, ctx, jordan_parameter_map(ctx))


def test_torus_relation(jordan):
    assert all(r.is_zero() for _, r in torus_relation_residuals(jordan))


def test_jordan_E1(jordan):
    T = jordan
    q, z = T.q(), T.z("z")
    w1, w2 = T.w("g", 1), T.w("g", 2)
    expect = (T.mult((1 - q * z * w1 / w2) / (1 - w2 / w1)) * T.D("g", 1)
              + T.mult((1 - q * z * w2 / w1) / (1 - w1 / w2)) * T.D("g", 2))
    assert T.E("g", 1) == expect


def test_jordan_F1(jordan):
    T = jordan
    q, z = T.q(), T.z("z")
    w1, w2 = T.w("g", 1), T.w("g", 2)
    expect = (T.mult((1 - q * z * w2 / w1) / (1 - w1 / w2)) * T.D("g", 1, -1)
              + T.mult((1 - q * z * w1 / w2) / (1 - w2 / w1)) * T.D("g", 2, -1))
    assert T.F("g", 1) == expect


def test_zero_dressing(jordan):
    assert jordan.E("g", 1, 0).is_zero()
    assert jordan.F("g", 1, 0).is_zero()


def test_s04_E2_single_term(s04):
    E2 = s04.E("g", 2)
    assert list(E2.substs()) == [Subst(((1, 4), (1, 4)))]
    assert E2 == s04.D("g", 1) * s04.D("g", 2)


def test_s04_F1_framing_factors(s04):
    T = s04
    q = T.q()
    w1, w2 = T.w("g", 1), T.w("g", 2)
    za, zb = T.z("za"), T.z("zb")
    frame = 1
    for z in ("z11", "z12"):
        frame = frame * (1 - q * T.z(z) * za / w1)
    for z in ("z21", "z22"):
        frame = frame * (1 - q * T.z(z) * zb / w1)
    assert T.F("g", 1).coeff((1, -4), (1, 0)) == frame / (1 - w1 / w2)


def test_dressing_errors(jordan):
    x1 = dressing_table(2).gen("x1")
    with pytest.raises(DressingNotSymmetric):
        jordan.E("g", 2, x1)
    with pytest.raises(IndexOutOfRange):
        jordan.E("g", 3)
    with pytest.raises(IndexOutOfRange):
        jordan.F("h", 1)
    sym = x1 + dressing_table(2).gen("x2")
    assert jordan.E("g", 2, sym) == jordan.mult(jordan.w("g", 1) + jordan.w("g", 2)) * jordan.E("g", 2)


def test_grading(jordan):
    T = jordan
    assert grading(T, T.E("g", 1)) == {(1,)}
    assert grading(T, T.F("g", 1, x_power(1)) * T.E("g", 1)) == {(0,)}
    assert grading(T, T.sym_power_sum("g", 1)) == {(0,)}


def test_grading_additive(s04):
    T = s04
    gens = [T.E("g", 1), T.F("g", 1), T.E("g", 2), T.F("g", 2),
            T.sym_power_sum("g", 1)]
    for a in gens:
        for b in gens:
            prod = a * b
            if prod.is_zero():
                continue
            (da,), (db,) = grading(T, a), grading(T, b)
            assert grading(T, prod) == {(da[0] + db[0],)}


def test_weyl_invariance(s04, jordan):
    for T in (s04, jordan):
        for m in range(-2, 3):
            for elem in (T.E("g", 1, x_power(m)), T.F("g", 1, x_power(m))):
                assert weyl_image(T, elem, "g", 1, 2) == elem
        assert weyl_image(T, T.E("g", 2), "g", 1, 2) == T.E("g", 2)
    with pytest.raises(IndexOutOfRange):
        weyl_image(jordan, jordan.E("g", 1), "g", 1, 1)


def test_weyl_detects_asymmetry(jordan):
    D1 = jordan.D("g", 1)
    assert weyl_image(jordan, D1, "g", 1, 2) == jordan.D("g", 2)


def test_embedding_examples(jordan_emb):
    T, emb = jordan_emb
    ctx = emb.ctx
    X = ctx.X
    sp = ctx.space
    assert emb(T.sym_power_sum("g", 1)) == sp.mult(X + X ** -1)
    assert emb(T.D("g", 1) * T.D("g", 2, -1)) == sp.mult(ctx.q(-4) * X ** -4) * sp.varpi(2)
    with pytest.raises(NotInvariant):
        emb(T.D("g", 1))


def test_embedding_needs_parameters():
    ctx = a1_context()
    with pytest.raises(UnmappedParameter):
        QuotientEmbedding(Torus(jordan_quiver()), ctx, {"qh": ctx.qh()})


def test_beta_squared_embedding(jordan_emb):
    T, emb = jordan_emb
    rep = rep_skein("S11")
    want = z2_invariant_images(rep)["beta^2"]
    got = emb((T.F("g", 1) * T.E("g", 1)).scale(T.q() * T.z("z") ** -1))
    assert got == want


def test_commutation_ledger(s04):
    assert all(r.is_zero() for _, r in commutation_ledger(s04, range(-1, 2)))


def test_ft_ledger(s04):
    rows = ft_ledger(s04, range(0, 2), range(0, 2))
    assert all(r.is_zero() and h is not None for _, r, h in rows)


def test_jordan_identity_after_quotient(jordan_emb):
    T, emb = jordan_emb
    assert all(r.is_zero() for _, r in jordan_ledger(T, emb, range(-1, 2), range(-1, 2)))


def test_loop_outside_Q_breaks_jordan_identity():
    ctx = a1_context()
    T = torus_for("jordan", ctx, loop_in_Q=False)
    emb = QuotientEmbedding(T, ctx, jordan_parameter_map(ctx))
    assert not all(r.is_zero() for _, r in jordan_ledger(T, emb, range(0, 2), range(0, 2)))


def test_jordan_identity_fails_before_quotient(jordan):
    q = jordan.q()
    lhs = jordan.E("g", 1, x_power(1)) * jordan.F("g", 1)
    rhs = (jordan.F("g", 1, x_power(-1)) * jordan.E("g", 1)).scale(q ** -2)
    assert not (lhs - rhs).is_zero()


def test_pullback_symmetric():
    ctx = cc_context()
    T = torus_for("s04", ctx)
    pm = parameter_map_for("s04", ctx)
    emb = QuotientEmbedding(T, ctx, pm)
    X = ctx.X
    f = ctx.p("t3") * (X ** 2 + X ** -2) + ctx.p("t1") + ctx.p("t1") ** -1
    g = pullback_symmetric(f, ctx, T, pm)
    assert emb(T.mult(g)) == ctx.space.mult(f)
    with pytest.raises(NotInvariant):
        pullback_symmetric(X, ctx, T, pm)


def _random_invariant(T, rng):
    out = T.space.zero()
    w1, w2 = T.w("g", 1), T.w("g", 2)
    for k in rng.sample([-2, -1, 0, 1, 2], 2):
        c = random_ratfn(T.table, rng, terms=2, max_exp=2, laurent=True)
        if rng.random() < 0.5:
            c = c / (1 - w2 / w1)
        out = out + T.mult(c) * T.D("g", 1, k) * T.D("g", 2, -k)
    return out


def test_embedding_homomorphism_random_pairs():
    """emb(a b) = emb(a) emb(b) on 200 random D-degree-zero pairs."""
    ctx = a1_context("random", 7)
    T = torus_for("jordan", ctx)
    emb = QuotientEmbedding(T, ctx, jordan_parameter_map(ctx))
    rng = random.Random(2024)
    failures = 0
    for _ in range(200):
        a, b = _random_invariant(T, rng), _random_invariant(T, rng)
        failures += not (emb(a * b) == emb(a) * emb(b))
        failures += not (emb(a + b) == emb(a) + emb(b))
    assert failures == 0


def test_quiver_json():
    text = json.dumps({
        "gauge": [{"id": "g", "dim": 2}],
        "framing": [{"id": "1", "dim": 2}, {"id": "2", "dim": 2}],
        "arrows": [{"src": "1", "dst": "g", "symbol": "za"}, {"src": "2", "dst": "g", "symbol": "zb"}],
    })
    Q = Quiver.from_json(text, "s04")
    assert Q.parameter_symbols() == s04_quiver().parameter_symbols()
    assert Torus(Q).E("g", 1) == Torus(s04_quiver()).E("g", 1)
    loop = Quiver.from_json(json.dumps({"gauge": [{"id": "g", "dim": 2}], "arrows": [{"src": "g", "dst": "g"}]}))
    assert loop.arrows[0].symbol == "za1"
    with pytest.raises(ValueError):
        Quiver.from_json(json.dumps({"gauge": [{"id": "g", "dim": 2}], "framing": [{"id": "f", "dim": 1}],
                                     "arrows": [{"src": "g", "dst": "f"}]}))


def test_random_torus_needs_values():
    with pytest.raises(UnmappedParameter):
        Torus(jordan_quiver(), {"qh": 3})
