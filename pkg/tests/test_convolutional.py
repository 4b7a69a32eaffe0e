import random

import pytest

from skewcyclic import (
    ConvCode,
    PolyMatrix,
    generator_matrix,
    membership,
    skew_from_vector,
    strong_equivalence,
    unit_product,
    vector_from_skew,
)
from skewcyclic.errors import (
    LengthMismatch,
    NotReduced,
    NotRightInvertible,
    RankDeficient,
    ZeroPolynomial,
)
from skewcyclic.fields import Poly
from skewcyclic.skew import SkewPoly

GOLDEN_G = [
    ["1+z^2", "z+z^2", "1+z", "1+z", "1+z^2", "z", "z^2"],
    ["z", "1+z+z^2", "0", "1+z+z^2", "1+z^2", "1+z^2", "z"],
    ["z^2", "z+z^2", "1+z^2", "0", "1+z", "1+z+z^2", "1+z"],
]


def test_vector_map_golden(sig43):
    ctx = sig43.context
    f = SkewPoly(sig43, (ctx.idempotent(2), ctx.idempotent(3)))
    vec = vector_from_skew(f)
    assert [p.to_str("z") for p in vec] == ["1+z", "a^2+a*z", "a+a^2*z"]
    assert skew_from_vector(sig43, vec) == f


def test_maps_mutually_inverse_random(sig43, sig27):
    rng = random.Random(41)
    for sig in (sig43, sig27):
        ctx = sig.context
        for _ in range(10000):
            vec = tuple(
                Poly(ctx.field, [rng.randrange(ctx.field.q) for _ in range(3)])
                for _ in range(ctx.n)
            )
            assert vector_from_skew(skew_from_vector(sig, vec)) == vec
            coeffs = [
                ctx.from_codes([rng.randrange(ctx.field.q) for _ in range(ctx.n)])
                for _ in range(rng.randrange(1, 4))
            ]
            f = SkewPoly(sig, coeffs)
            assert skew_from_vector(sig, vector_from_skew(f)) == f


def test_map_is_left_module_morphism(sig27, poly_g):
    # multiplying the skew side by z shifts every vector entry by z
    vec = vector_from_skew(SkewPoly.z_power(sig27, 1) * poly_g)
    base = vector_from_skew(poly_g)
    z = Poly.x(sig27.context.field)
    assert vec == tuple(z * p for p in base)


def test_cyclic_shift_becomes_x(sig27):
    ctx = sig27.context
    rng = random.Random(43)
    v = [Poly(ctx.field, (rng.randrange(2),)) for _ in range(7)]
    f = skew_from_vector(sig27, v)
    shifted = [v[-1]] + v[:-1]
    assert skew_from_vector(sig27, shifted) == SkewPoly.constant(sig27, ctx.x) * f


def test_map_length_mismatch(sig27):
    with pytest.raises(LengthMismatch):
        skew_from_vector(sig27, [Poly.one(sig27.context.field)] * 3)


def test_generator_matrix_golden(sig27, poly_g):
    G = generator_matrix(poly_g)
    assert G.to_strings() == GOLDEN_G
    assert G.complexity() == 6
    assert G.is_right_invertible()
    assert G.is_minimal()
    assert G.forney_indices() == (2, 2, 2)


def test_generator_matrix_block_code(sig27):
    ctx = sig27.context
    g = SkewPoly.constant(sig27, ctx.idempotent(2))
    G = generator_matrix(g)
    assert G.shape == (3, 7)
    assert G.max_degree() == 0
    assert G.complexity() == 0
    code = ConvCode.from_reduced(g)
    assert code.params == (7, 3, 0)


def test_generator_matrix_rejects(sig27, poly_v):
    with pytest.raises(ZeroPolynomial):
        generator_matrix(SkewPoly.zero(sig27))
    with pytest.raises(NotReduced):
        generator_matrix(poly_v)


def test_code_parameter_formulas(sig27, sig43, sig45, sig87):
    """Rank and complexity from the reduced generator's component degrees."""
    rng = random.Random(47)
    for sig in (sig43, sig45, sig27, sig87):
        ctx = sig.context
        cycle_reps = [min(c) for c in sig.cycles]
        for _ in range(6):
            picks = [l for l in cycle_reps if rng.random() < 0.6] or [cycle_reps[0]]
            g = SkewPoly.zero(sig)
            degs = {}
            for l in picks:
                d = rng.randrange(0, 3) if sig.l_order(l) > 1 else 0
                degs[l] = d
                u = unit_product(sig, l, _unit_scalars(ctx, rng, d))
                g = g + u.component(l)
            assert g.is_reduced()
            code = ConvCode.from_reduced(g)
            assert code.k == sum(ctx.kappas[l - 1] for l in picks)
            assert code.delta == sum(ctx.kappas[l - 1] * degs[l] for l in picks)
            want_forney = sorted(
                f for l in picks for f in [degs[l]] * ctx.kappas[l - 1]
            )
            assert list(code.forney) == want_forney


def _unit_scalars(ctx, rng, d):
    out = []
    while len(out) < d:
        a = ctx.from_codes([rng.randrange(ctx.field.q) for _ in range(ctx.n)])
        if ctx.is_unit(a):
            out.append(a)
    return out


def test_complexity_examples(F4, ctx43, sig43):
    G3 = generator_matrix(
        unit_product(sig43, 2, [ctx43.one, ctx43.scalar(F4.gen), ctx43.scalar(F4.gen ** 2)]).component(2)
    )
    assert G3.complexity() == 3
    const = PolyMatrix.identity(F4, 2)
    assert const.complexity() == 0
    with pytest.raises(RankDeficient):
        PolyMatrix(F4, [[Poly.zero(F4), Poly.zero(F4)]]).complexity()


def test_right_invertibility_examples(F2):
    one, z, zero = Poly.one(F2), Poly.x(F2), Poly.zero(F2)
    G = PolyMatrix(F2, [[one + z, z]])
    assert G.is_right_invertible()
    gt = G.right_inverse()
    assert (G * gt).to_strings() == [["1"]]
    bad = PolyMatrix(F2, [[z, zero]])
    assert not bad.is_right_invertible()
    with pytest.raises(NotRightInvertible):
        bad.right_inverse()


def test_parity_check_examples(F2, sig27, poly_g):
    one, z, zero = Poly.one(F2), Poly.x(F2), Poly.zero(F2)
    G = PolyMatrix(F2, [[one, zero]])
    H = G.parity_check()
    assert (G * H).is_zero()
    assert H.shape == (2, 1)
    G2 = PolyMatrix(F2, [[one + z, z]])
    H2 = G2.parity_check()
    assert (G2 * H2).is_zero()
    assert H2.rank() == 1
    Gg = generator_matrix(poly_g)
    Hg = Gg.parity_check()
    assert Hg.shape == (7, 4)
    assert (Gg * Hg).is_zero()
    assert Hg.rank() == 4
    # unimodular-completion quality: the parity matrix has constant minor gcd
    assert Hg.transpose().is_right_invertible()


def test_smith_form_random(F4):
    rng = random.Random(53)
    for _ in range(25):
        k = rng.randrange(1, 4)
        n = rng.randrange(k, 5)
        M = PolyMatrix(
            F4,
            [
                [
                    Poly(F4, [rng.randrange(4) for _ in range(rng.randrange(1, 4))])
                    for _ in range(n)
                ]
                for _ in range(k)
            ],
        )
        L, S, R, Li, Ri = M.smith_form()
        assert L * S * R == M
        assert (L * Li) == PolyMatrix.identity(F4, k)
        assert (Ri * R) == PolyMatrix.identity(F4, n)
        assert L.det().degree == 0 and R.det().degree == 0
        # diagonal divisibility
        for i in range(min(k, n) - 1):
            a, b = S[i, i], S[i + 1, i + 1]
            if not a.is_zero() and not b.is_zero():
                assert (b % a).is_zero()


def test_right_inverse_and_parity_over_f8(sig87, ctx87):
    alpha = ctx87.field.gen
    e = ctx87.idempotent
    g1 = SkewPoly(sig87, (e(1), e(2), e(1) * ctx87.scalar(alpha)))
    g2 = SkewPoly(
        sig87, (e(3), e(4) * ctx87.scalar(alpha), e(5) * ctx87.scalar(alpha ** 2))
    )
    G = generator_matrix(g1 + g2)
    gt = G.right_inverse()
    assert (G * gt) == PolyMatrix.identity(G.field, 2)
    H = G.parity_check()
    assert H.shape == (7, 5) and (G * H).is_zero()


def test_membership_examples(sig27, poly_g):
    G = generator_matrix(poly_g)
    gt = G.right_inverse()
    u = membership(G, G.row(0), gt)
    assert u is not None and [p.to_str("z") for p in u] == ["1", "0", "0"]
    w1 = [Poly.one(G.field)] + [Poly.zero(G.field)] * 6
    assert membership(G, w1, gt) is None


def test_sigma_cyclicity_of_generated_codes(sig27, sig43, poly_g):
    for sig, g in ((sig27, poly_g), (sig43, None)):
        ctx = sig.context
        if g is None:
            g = unit_product(sig, 2, [ctx.one]).component(2)
        G = generator_matrix(g)
        gt = G.right_inverse()
        x = SkewPoly.constant(sig, ctx.x)
        z = SkewPoly.z_power(sig, 1)
        for i in range(G.nrows):
            row = skew_from_vector(sig, G.row(i))
            assert membership(G, vector_from_skew(x * row), gt) is not None
            assert membership(G, vector_from_skew(z * row), gt) is not None


def test_strong_equivalence_witnesses(sig43, ctx43):
    G = generator_matrix(unit_product(sig43, 2, [ctx43.one]).component(2))
    perm = [2, 0, 1]
    GP = PolyMatrix(G.field, [[row[p] for p in perm] for row in G.entries])
    res = strong_equivalence(G, GP)
    assert res is not None
    P, D = res
    # im G == im (GP P D): verified by definition inside; sanity re-check
    BD = PolyMatrix(G.field, [[row[j] for j in range(3)] for row in (GP * P * D).entries])
    assert membership(G, BD.row(0)) is not None
    assert strong_equivalence(G, G) is not None


def test_strong_equivalence_negative(sig43, ctx43, F4):
    G = generator_matrix(unit_product(sig43, 2, [ctx43.one]).component(2))
    one, z, zero = Poly.one(F4), Poly.x(F4), Poly.zero(F4)
    other = PolyMatrix(F4, [[one, z, z]])
    # distances differ (3 vs 6), so the codes cannot be strongly equivalent
    assert strong_equivalence(G, other) is None


def test_convcode_requires_right_invertible(F2):
    z, zero = Poly.x(F2), Poly.zero(F2)
    with pytest.raises(NotRightInvertible):
        ConvCode.from_generator(PolyMatrix(F2, [[z, zero]]))
