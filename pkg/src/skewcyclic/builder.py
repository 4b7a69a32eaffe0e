"""High-level code constructions on top of the skew-polynomial machinery.

Minimal codes come from single components of units; sums over components
in disjoint permutation cycles stay direct and add their parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .automorphisms import Automorphism
from .convolutional import ConvCode
from .errors import (
    BadParameters,
    ComponentMismatch,
    FixedIdempotent,
    NotAUnit,
    NonUnitScalar,
    OverlappingCycles,
)
from .ring import RingElement
from .skew import SkewPoly, unit_product


@dataclass(frozen=True)
class MinimalCodeRecipe:
    """One minimal code: component l, target Forney index d, unit scalars."""

    sigma: Automorphism
    l: int
    d: int
    scalars: tuple = dc_field(default=())

    def __post_init__(self):
        if self.d < 0:
            raise BadParameters("Forney index must be >= 0")
        if self.d > 0 and self.sigma.l_order(self.l) == 1:
            raise FixedIdempotent(
                f"sigma fixes eps_{self.l}: positive complexity is impossible there"
            )
        scalars = self.scalars or default_scalars(self.sigma.context, self.d)
        scalars = tuple(
            s if isinstance(s, RingElement) else self.sigma.context.scalar(s)
            for s in scalars
        )
        if len(scalars) != self.d:
            raise BadParameters(f"need exactly {self.d} scalars")
        for s in scalars:
            if not self.sigma.context.is_unit(s):
                raise NonUnitScalar(f"scalar {s} is not a unit of A")
        object.__setattr__(self, "scalars", scalars)


def default_scalars(ctx, d: int):
    """Cyclically repeating powers 1, a, a^2, ... of the field generator."""
    gen = ctx.field.gen
    period = max(ctx.field.q - 1, 1)
    return tuple(ctx.scalar(gen ** (i % period)) for i in range(d))


def build_minimal_code(recipe: MinimalCodeRecipe) -> ConvCode:
    """Minimal code with support {l} and all Forney indices equal to d.

    Generator polynomial: eps_l * u_{a_1}(1) * ... * u_{a_d}(d).
    """
    sigma = recipe.sigma
    ctx = sigma.context
    u = unit_product(sigma, recipe.l, recipe.scalars)
    g = u.component(recipe.l)
    code = ConvCode.from_reduced(g)
    kappa = ctx.kappas[recipe.l - 1]
    assert code.params == (ctx.n, kappa, recipe.d * kappa)
    assert code.forney == (recipe.d,) * kappa
    return code


def direct_complement(g: SkewPoly, u: SkewPoly) -> SkewPoly:
    """g' = sum of the components of u outside the support of g.

    Requires u to be a unit agreeing with g on g's support; then
    g + g' = u and the ideals of g and g' intersect trivially.
    """
    if not u.is_unit():
        raise NotAUnit("the completing polynomial must be a unit")
    support = g.support()
    for l in support:
        if u.component(l) != g.component(l):
            raise ComponentMismatch(f"u and g differ in component {l}")
    ctx = g.context
    out = SkewPoly.zero(g.sigma)
    for l in range(1, ctx.r + 1):
        if l not in support:
            out = out + u.component(l)
    return out


def idempotent_generator(g: SkewPoly, u: SkewPoly) -> SkewPoly:
    """e = u^{-1} g; idempotent, generating the same left ideal as g."""
    if not u.is_unit():
        raise NotAUnit("the completing polynomial must be a unit")
    support = g.support()
    for l in support:
        if u.component(l) != g.component(l):
            raise ComponentMismatch(f"u and g differ in component {l}")
    e = u.unit_inverse() * g
    assert e * e == e
    return e


def orthogonal_sum(codes) -> ConvCode:
    """Direct sum of minimal codes whose supports sit in disjoint cycles."""
    codes = list(codes)
    assert codes, "need at least one code"
    if len(codes) == 1:
        return codes[0]
    sigma = codes[0].reduced_generator.sigma
    supports = []
    for c in codes:
        assert c.reduced_generator is not None, "codes must carry their generators"
        assert len(c.support) == 1, "summands must be minimal (singleton support)"
        supports.append(c.support[0])
    for i, li in enumerate(supports):
        for lj in supports[i + 1 :]:
            if sigma.same_cycle(li, lj):
                raise OverlappingCycles(
                    f"components {li} and {lj} share a cycle of the permutation"
                )
    g = SkewPoly.zero(sigma)
    for c in codes:
        g = g + c.reduced_generator
    combined = ConvCode.from_reduced(g)
    assert combined.delta == sum(c.delta for c in codes)
    want = tuple(sorted(f for c in codes for f in c.forney))
    assert combined.forney == want
    return combined


def build_unit_for_profile(sigma: Automorphism, targets) -> SkewPoly:
    """Unit w with deg_z w^(l_i) = d_i for the given (l_i, d_i) targets.

    Unused components are filled from the unit 1.  Targets must live in
    pairwise disjoint cycles, with nontrivial cycles wherever d_i > 0.
    """
    ctx = sigma.context
    targets = [(int(l), int(d)) for l, d in targets]
    for i, (li, _) in enumerate(targets):
        for lj, _ in targets[i + 1 :]:
            if sigma.same_cycle(li, lj):
                raise OverlappingCycles(
                    f"components {li} and {lj} share a cycle of the permutation"
                )
    for l, d in targets:
        if d > 0 and sigma.l_order(l) == 1:
            raise FixedIdempotent(f"sigma fixes eps_{l}")
    covered = set()
    w = SkewPoly.zero(sigma)
    for l, d in targets:
        u = unit_product(sigma, l, default_scalars(ctx, d))
        for j in range(1, ctx.r + 1):
            if sigma.same_cycle(j, l):
                covered.add(j)
                w = w + u.component(j)
    for j in range(1, ctx.r + 1):
        if j not in covered:
            w = w + SkewPoly.constant(sigma, ctx.idempotent(j))
    assert w.is_unit()
    for l, d in targets:
        comp = w.component(l)
        assert comp and comp.degree == d
    return w


def degree_profile_feasible(o: int, profile):
    """Necessary conditions on component degrees along one cycle of length o.

    Positions are 1-based along the cycle; returns (ok, reason).
    """
    profile = [int(d) for d in profile]
    c = len(profile)
    if not 1 <= c <= o:
        raise BadParameters(f"need 1 <= len(profile) <= {o}")
    marks = [(i + d) % o for i, d in enumerate(profile, start=1)]
    if len(set(marks)) != c:
        return False, "leading coefficients collide: positions not distinct mod o"
    if c == o and len(set(profile)) == 1:
        return False, "full-cycle support with equal degrees cannot extend to a unit"
    return True, "passes both necessary conditions"
