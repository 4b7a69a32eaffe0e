"""Shared heavy property checks used by module tests and the acceptance gate."""

import itertools

from skewcyclic.fields import Poly


def all_element_codes(ctx):
    return list(itertools.product(range(ctx.field.q), repeat=ctx.n))


def psi_isomorphism_exhaustive(ctx):
    """CRT map is a bijective ring homomorphism, verified on all pairs.

    Tuned inner loop so q^n = 4096 stays in a few seconds.
    """
    field = ctx.field
    q, n = field.q, ctx.n
    mul, add = field._mul, field._add
    codes_list = all_element_codes(ctx)
    degs = [int(pi.degree) for pi in ctx.factors]

    def norm(codes, deg):
        c = list(codes) + [0] * (deg - len(codes))
        return tuple(c[:deg])

    image = {}
    for codes in codes_list:
        a = ctx.from_codes(codes)
        v = ctx.crt_forward(a)
        assert ctx.crt_backward(v) == a, "backward(forward(a)) != a"
        image[codes] = tuple(
            norm(p.codes, d) for p, d in zip(v.parts, degs)
        )
    assert len(set(image.values())) == len(codes_list), "psi is not injective"

    part_tables = []
    for pi, deg in zip(ctx.factors, degs):
        residues = list(itertools.product(range(q), repeat=deg))
        tbl = {}
        for ra in residues:
            pa = Poly(field, ra)
            for rb in residues:
                prod = (pa * Poly(field, rb)) % pi
                tbl[(ra, rb)] = norm(prod.codes, deg)
        part_tables.append(tbl)

    for ai, acodes in enumerate(codes_list):
        ia = image[acodes]
        for bcodes in codes_list[ai:]:
            out = [0] * n
            for i, x in enumerate(acodes):
                if x:
                    row = mul[x]
                    for j, y in enumerate(bcodes):
                        if y:
                            t = i + j
                            if t >= n:
                                t -= n
                            out[t] = add[out[t]][row[y]]
            ib = image[bcodes]
            want = tuple(t[(pa, pb)] for t, pa, pb in zip(part_tables, ia, ib))
            assert image[tuple(out)] == want, "psi(ab) != psi(a)psi(b)"


def unit_test_agrees_with_exhaustive_search(ctx):
    """is_unit matches a literal scan for a multiplicative inverse."""
    field = ctx.field
    q, n = field.q, ctx.n
    mul, add = field._mul, field._add
    one_codes = ctx.one.codes
    all_codes = all_element_codes(ctx)
    units = 0
    for acodes in all_codes:
        found = False
        for bcodes in all_codes:
            t0 = 0
            for i, x in enumerate(acodes):
                if x:
                    y = bcodes[-i % n]
                    if y:
                        t0 = add[t0][mul[x][y]]
            if t0 != 1:
                continue
            out = [0] * n
            for i, x in enumerate(acodes):
                if x:
                    row = mul[x]
                    for j, y in enumerate(bcodes):
                        if y:
                            t = i + j
                            if t >= n:
                                t -= n
                            out[t] = add[out[t]][row[y]]
            if tuple(out) == one_codes:
                found = True
                break
        assert found == ctx.is_unit(ctx.from_codes(acodes))
        units += found
    want = 1
    for kappa in ctx.kappas:
        want *= q ** kappa - 1
    assert units == want


def identity_units_constant(ctx, degree_cap, restrict_to_unit_constant=False):
    """With the identity twist, every unit of the polynomial ring is constant."""
    from skewcyclic import identity_automorphism
    from skewcyclic.skew import SkewPoly

    ide = identity_automorphism(ctx)
    elems = [ctx.from_codes(c) for c in all_element_codes(ctx)]
    if restrict_to_unit_constant:
        heads = [a for a in elems if ctx.is_unit(a)]
        units = 0
        for f0 in heads:
            for f1 in elems:
                f = SkewPoly(ide, (f0, f1))
                if f.is_unit():
                    units += 1
                    assert f.degree <= 0
        assert units == len(heads)
    else:
        units = 0
        for coeffs in itertools.product(elems, repeat=degree_cap + 1):
            f = SkewPoly(ide, coeffs)
            if f.is_unit():
                units += 1
                assert f.degree <= 0
        assert units > 0
