"""Polynomial matrices over F[z] and the bridge to skew polynomials.

Covers generator matrices of convolutional codes: complexity (max degree
of the k-minors), right invertibility via the minor gcd, minimality and
row degrees, Smith-form based right inverses and parity checks, and the
module isomorphism between F[z]^n and the skew-polynomial ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .errors import (
    LengthMismatch,
    NotMinimal,
    NotReduced,
    NotRightInvertible,
    RankDeficient,
    SearchSpaceTooLarge,
    ZeroPolynomial,
)
from .fields import NEG_INF, FieldSpec, Poly, poly_gcd
from .ring import RingElement
from .skew import SkewPoly


class PolyMatrix:
    """Rectangular matrix of polynomials in z over a fixed field."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries):
        rows = tuple(tuple(e for e in row) for row in entries)
        assert rows, "matrix needs at least one row"
        width = len(rows[0])
        for row in rows:
            assert len(row) == width, "ragged matrix"
            for e in row:
                assert isinstance(e, Poly) and e.field == field
        self.field = field
        self.entries = rows

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, field, k):
        one, zero = Poly.one(field), Poly.zero(field)
        return cls(field, [[one if i == j else zero for j in range(k)] for i in range(k)])

    @classmethod
    def from_rows(cls, field, rows):
        return cls(field, rows)

    @classmethod
    def constant(cls, field, codes):
        return cls(field, [[Poly(field, (c,)) for c in row] for row in codes])

    # -- basics ---------------------------------------------------------------

    @property
    def nrows(self):
        return len(self.entries)

    @property
    def ncols(self):
        return len(self.entries[0])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def row(self, i):
        return self.entries[i]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(self.entries)

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        assert self.ncols == other.nrows, "shape mismatch"
        zero = Poly.zero(self.field)
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for t in range(self.ncols):
                    acc = acc + self.entries[i][t] * other.entries[t][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.field, out)

    def __add__(self, other):
        assert self.shape == other.shape
        return PolyMatrix(
            self.field,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other):
        assert self.shape == other.shape
        return PolyMatrix(
            self.field,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def transpose(self):
        return PolyMatrix(self.field, list(zip(*self.entries)))

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def submatrix(self, rows, cols):
        return PolyMatrix(
            self.field, [[self.entries[i][j] for j in cols] for i in rows]
        )

    def max_degree(self):
        degs = [e.degree for row in self.entries for e in row if not e.is_zero()]
        return int(max(degs)) if degs else NEG_INF

    def row_degrees(self):
        out = []
        for row in self.entries:
            degs = [e.degree for e in row if not e.is_zero()]
            out.append(int(max(degs)) if degs else NEG_INF)
        return tuple(out)

    # -- determinants and rank ------------------------------------------------

    def det(self) -> Poly:
        """Fraction-free (Bareiss) determinant; exact over F[z]."""
        assert self.nrows == self.ncols, "determinant of a non-square matrix"
        return linalg.poly_det(self.field, self.entries)

    def rank(self) -> int:
        """Rank over the rational function field F(z)."""
        field = self.field
        a = [list(row) for row in self.entries]
        m, n = self.nrows, self.ncols
        r = 0
        for c in range(n):
            piv = None
            for i in range(r, m):
                if not a[i][c].is_zero():
                    piv = i
                    break
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            for i in range(r + 1, m):
                if not a[i][c].is_zero():
                    # cross-multiply to clear; scales rows but keeps rank
                    fi, fr = a[i][c], a[r][c]
                    a[i] = [x * fr - a[r][j] * fi for j, x in enumerate(a[i])]
            r += 1
            if r == m:
                break
        return r

    def k_minors(self):
        """All maximal (k x k) minors, k = nrows; requires nrows <= ncols."""
        k = self.nrows
        assert k <= self.ncols
        rows = range(k)
        return [
            self.submatrix(rows, cols).det()
            for cols in itertools.combinations(range(self.ncols), k)
        ]

    def complexity(self) -> int:
        """Max degree over the k-minors (the code's total memory)."""
        if self.rank() != self.nrows:
            raise RankDeficient("complexity needs full row rank")
        best = NEG_INF
        for m in self.k_minors():
            if not m.is_zero() and m.degree > best:
                best = m.degree
        return int(best)

    def is_minimal(self) -> bool:
        return self.complexity() == sum(self.row_degrees())

    def forney_indices(self):
        """Row degrees of a minimal generator matrix, as a sorted tuple."""
        if not self.is_minimal():
            raise NotMinimal("row-degree sum exceeds the complexity")
        return tuple(sorted(self.row_degrees()))

    def is_right_invertible(self) -> bool:
        """Constant nonzero gcd of the maximal minors."""
        if self.nrows > self.ncols or self.rank() != self.nrows:
            return False
        g = None
        for m in self.k_minors():
            if m.is_zero():
                continue
            g = m if g is None else poly_gcd(g, m)
            if g.degree == 0:
                return True
        return g is not None and g.degree == 0

    # -- Smith form and consequences -------------------------------------------

    def smith_form(self):
        """(L, S, R, Linv, Rinv) with self = L*S*R, L and R unimodular, S
        diagonal with each diagonal entry dividing the next."""
        field = self.field
        m, n = self.nrows, self.ncols
        S = [list(row) for row in self.entries]
        L = PolyMatrix.identity(field, m).entries
        Li = PolyMatrix.identity(field, m).entries
        R = PolyMatrix.identity(field, n).entries
        Ri = PolyMatrix.identity(field, n).entries
        L, Li, R, Ri = (
            [list(r) for r in L],
            [list(r) for r in Li],
            [list(r) for r in R],
            [list(r) for r in Ri],
        )

        def row_swap(i, j):
            S[i], S[j] = S[j], S[i]
            Li[i], Li[j] = Li[j], Li[i]
            for t in range(m):
                L[t][i], L[t][j] = L[t][j], L[t][i]

        def col_swap(i, j):
            for t in range(m):
                S[t][i], S[t][j] = S[t][j], S[t][i]
            for t in range(n):
                R[i][t], R[j][t] = R[j][t], R[i][t]
            for t in range(n):
                Ri[t][i], Ri[t][j] = Ri[t][j], Ri[t][i]

        def row_addmul(dst, src, q: Poly):
            # S[dst] += q*S[src]; compensate L by subtracting, Li by adding
            S[dst] = [a + q * b for a, b in zip(S[dst], S[src])]
            Li[dst] = [a + q * b for a, b in zip(Li[dst], Li[src])]
            for t in range(m):
                L[t][src] = L[t][src] - q * L[t][dst]

        def col_addmul(dst, src, q: Poly):
            for t in range(m):
                S[t][dst] = S[t][dst] + S[t][src] * q
            for t in range(n):
                Ri[t][dst] = Ri[t][dst] + Ri[t][src] * q
            R[src] = [a - q * b for a, b in zip(R[src], R[dst])]

        def row_scale(i, c_code):
            inv = field.inv_c(c_code)
            S[i] = [e.scale(c_code) for e in S[i]]
            Li[i] = [e.scale(c_code) for e in Li[i]]
            for t in range(m):
                L[t][i] = L[t][i].scale(inv)

        rank_pos = 0
        while True:
            # find the lowest-degree nonzero entry in the remaining block
            best = None
            for i in range(rank_pos, m):
                for j in range(rank_pos, n):
                    e = S[i][j]
                    if not e.is_zero() and (best is None or e.degree < best[2]):
                        best = (i, j, e.degree)
            if best is None:
                break
            bi, bj, _ = best
            if bi != rank_pos:
                row_swap(rank_pos, bi)
            if bj != rank_pos:
                col_swap(rank_pos, bj)
            # clear the pivot row and column; restart if a remainder pops up
            dirty = False
            for i in range(rank_pos + 1, m):
                if S[i][rank_pos].is_zero():
                    continue
                q, r = divmod(S[i][rank_pos], S[rank_pos][rank_pos])
                row_addmul(i, rank_pos, -q)
                if not r.is_zero():
                    dirty = True
            for j in range(rank_pos + 1, n):
                if S[rank_pos][j].is_zero():
                    continue
                q, r = divmod(S[rank_pos][j], S[rank_pos][rank_pos])
                col_addmul(j, rank_pos, -q)
                if not r.is_zero():
                    dirty = True
            if dirty:
                continue
            # pivot divides its row and column; check the rest of the block
            piv = S[rank_pos][rank_pos]
            offender = None
            for i in range(rank_pos + 1, m):
                for j in range(rank_pos + 1, n):
                    if not (S[i][j] % piv).is_zero():
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is not None:
                row_addmul(rank_pos, offender, Poly.one(field))
                continue
            row_scale(rank_pos, field.inv_c(piv.lc()))
            rank_pos += 1
            if rank_pos == min(m, n):
                break
        to_m = lambda rows: PolyMatrix(field, rows)
        return to_m(L), to_m(S), to_m(R), to_m(Li), to_m(Ri)

    def right_inverse(self) -> "PolyMatrix":
        """Gtilde with self * Gtilde = I, via the Smith form."""
        if not self.is_right_invertible():
            raise NotRightInvertible("minor gcd is not a nonzero constant")
        k, n = self.shape
        L, S, R, Li, Ri = self.smith_form()
        for i in range(k):
            assert S[i, i].degree == 0, "invariant factors must be constant"
        # self = L [I 0] R after absorbing the unit diagonal into L
        D = PolyMatrix(
            self.field,
            [
                [
                    (S[i, j] if i == j else Poly.zero(self.field))
                    for j in range(k)
                ]
                for i in range(k)
            ],
        )
        Dinv = PolyMatrix(
            self.field,
            [
                [
                    (
                        Poly(self.field, (self.field.inv_c(S[i, i].lc()),))
                        if i == j
                        else Poly.zero(self.field)
                    )
                    for j in range(k)
                ]
                for i in range(k)
            ],
        )
        first_cols = PolyMatrix(
            self.field, [[Ri[i, j] for j in range(k)] for i in range(n)]
        )
        gt = first_cols * Dinv * Li
        assert (self * gt) == PolyMatrix.identity(self.field, k)
        return gt

    def parity_check(self) -> "PolyMatrix":
        """H (n x (n-k)) with self * H = 0, from a unimodular completion."""
        if not self.is_right_invertible():
            raise NotRightInvertible("minor gcd is not a nonzero constant")
        k, n = self.shape
        _, S, _, _, Ri = self.smith_form()
        H = PolyMatrix(
            self.field, [[Ri[i, j] for j in range(k, n)] for i in range(n)]
        )
        zero = PolyMatrix(
            self.field,
            [[Poly.zero(self.field)] * (n - k) for _ in range(k)],
        )
        assert (self * H) == zero
        return H

    def to_strings(self):
        return [[e.to_str("z") for e in row] for row in self.entries]

    def __str__(self):
        rows = self.to_strings()
        width = max(len(s) for row in rows for s in row)
        return "\n".join(
            "[" + "  ".join(s.rjust(width) for s in row) + "]" for row in rows
        )

    def __repr__(self):
        return f"PolyMatrix {self.nrows}x{self.ncols} over GF({self.field.q})"


def membership(G: PolyMatrix, w, right_inv: PolyMatrix | None = None):
    """Message u with u*G = w, or None; w is a sequence of n polynomials."""
    if right_inv is None:
        right_inv = G.right_inverse()
    wm = PolyMatrix(G.field, [list(w)])
    u = wm * right_inv
    return tuple(u.entries[0]) if (u * G) == wm else None


# -- bridge between F[z]^n and the skew ring ----------------------------------


def skew_from_vector(sigma, polys) -> SkewPoly:
    """Coefficient-wise lift of a length-n polynomial vector into the skew ring."""
    ctx = sigma.context
    polys = list(polys)
    if len(polys) != ctx.n:
        raise LengthMismatch(f"expected {ctx.n} entries, got {len(polys)}")
    depth = 0
    for p in polys:
        if not p.is_zero():
            depth = max(depth, int(p.degree) + 1)
    coeffs = []
    for j in range(depth):
        coeffs.append(
            RingElement(
                ctx,
                tuple(
                    (p.codes[j] if j < len(p.codes) else 0) for p in polys
                ),
            )
        )
    return SkewPoly(sigma, coeffs)


def vector_from_skew(f: SkewPoly):
    """Inverse of skew_from_vector: n polynomials in z."""
    ctx = f.context
    cols = []
    for i in range(ctx.n):
        cols.append(Poly(ctx.field, [c.codes[i] for c in f.coeffs]))
    return tuple(cols)


def generator_matrix(g: SkewPoly) -> PolyMatrix:
    """Minimal generator matrix of the module generated by a reduced g.

    Block for each support component l (in increasing order): rows are the
    vectors of x^i * g^(l) for i = 0..deg(pi_l)-1.
    """
    ctx = g.context
    if not g:
        raise ZeroPolynomial("zero polynomial generates the zero module")
    if not g.is_reduced():
        raise NotReduced("generator matrix formula needs a reduced polynomial")
    xs = SkewPoly.constant(g.sigma, ctx.x)
    rows = []
    for l in g.support():
        comp = g.component(l)
        cur = comp
        for _ in range(ctx.kappas[l - 1]):
            rows.append(vector_from_skew(cur))
            cur = xs * cur
    return PolyMatrix(ctx.field, rows)


@dataclass(frozen=True)
class ConvCode:
    """A convolutional code with its minimal generator matrix and parameters."""

    generator: PolyMatrix
    n: int
    k: int
    delta: int
    forney: tuple
    support: tuple | None = None
    reduced_generator: SkewPoly | None = None

    @classmethod
    def from_generator(cls, G: PolyMatrix, support=None, reduced=None):
        if not G.is_right_invertible():
            raise NotRightInvertible("generator matrix must be right invertible")
        delta = G.complexity()
        forney = G.forney_indices()
        return cls(
            generator=G,
            n=G.ncols,
            k=G.nrows,
            delta=delta,
            forney=forney,
            support=tuple(support) if support is not None else None,
            reduced_generator=reduced,
        )

    @classmethod
    def from_reduced(cls, g: SkewPoly):
        G = generator_matrix(g)
        return cls.from_generator(G, support=g.support(), reduced=g)

    @property
    def params(self):
        return (self.n, self.k, self.delta)


def strong_equivalence(
    G: PolyMatrix,
    Gp: PolyMatrix,
    max_n: int = 8,
    max_q: int = 9,
):
    """Search for (P, D) with im G = im(Gp * P * D); None if inequivalent.

    P runs over all n! column permutations.  For each P the diagonal D is
    not enumerated directly: membership of the rows of Gp*P*D in im G is
    linear in the diagonal entries, so candidates come from a nullspace
    over F and only those with all entries nonzero are verified both ways.
    """
    field = G.field
    if G.shape != Gp.shape:
        return None
    k, n = G.shape
    if n > max_n or field.q > max_q:
        raise SearchSpaceTooLarge(f"n <= {max_n} and q <= {max_q} required")
    if not (G.is_right_invertible() and Gp.is_right_invertible()):
        raise NotRightInvertible("both matrices must be right invertible")
    gt = G.right_inverse()
    # Q = I - Gtilde*G annihilates exactly im G (row vectors w with w*Q = 0)
    Q = PolyMatrix.identity(field, n) - (gt * G)
    one = Poly.one(field)
    zero = Poly.zero(field)
    for perm in itertools.permutations(range(n)):
        B = PolyMatrix(field, [[row[p] for p in perm] for row in Gp.entries])
        # rows of B*diag(d) lie in im G: for all r, c: sum_j B[r][j] Q[j][c] d_j = 0
        eqs = []
        for r in range(k):
            coeffs = []
            for j in range(n):
                acc = zero
                if not B.entries[r][j].is_zero():
                    acc = B.entries[r][j]
                coeffs.append(acc)
            for c in range(n):
                poly_coeffs = [coeffs[j] * Q.entries[j][c] for j in range(n)]
                depth = 0
                for p in poly_coeffs:
                    if not p.is_zero():
                        depth = max(depth, int(p.degree) + 1)
                for t in range(depth):
                    eqs.append(
                        [
                            (p.codes[t] if t < len(p.codes) else 0)
                            for p in poly_coeffs
                        ]
                    )
        basis = linalg.nullspace(field, eqs) if eqs else []
        if eqs and not basis:
            continue
        if not eqs:
            basis = [
                [1 if i == j else 0 for j in range(n)] for i in range(n)
            ]
        if len(basis) > 14:
            raise SearchSpaceTooLarge("nullspace too large to enumerate")
        found = _nonvanishing_combination(field, basis)
        if found is None:
            continue
        D = PolyMatrix(
            field,
            [
                [Poly(field, (found[i],)) if i == j else zero for j in range(n)]
                for i in range(n)
            ],
        )
        BD = B * D
        if not BD.is_right_invertible():
            continue
        bd_inv = BD.right_inverse()
        ok = all(
            membership(G, BD.row(r), gt) is not None for r in range(k)
        ) and all(
            membership(BD, G.row(r), bd_inv) is not None for r in range(k)
        )
        if ok:
            P = PolyMatrix(
                field,
                [
                    [one if perm[j] == i else zero for j in range(n)]
                    for i in range(n)
                ],
            )
            return P, D
    return None


def _nonvanishing_combination(field, basis):
    """A vector in the span of basis with every coordinate nonzero, or None."""
    n = len(basis[0])
    for combo in itertools.product(range(field.q), repeat=len(basis)):
        if not any(combo):
            continue
        v = [0] * n
        for c, b in zip(combo, basis):
            if c:
                v = [field.add_c(x, field.mul_c(c, y)) for x, y in zip(v, b)]
        if all(v):
            return v
    return None
