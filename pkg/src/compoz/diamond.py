"""Diamond products, composed products of polynomials, and factor reports.

A diamond product on the conjugates of two fixed roots is described either
by a bivariate coefficient matrix (PhiPoly, in the monomial basis X^i Y^j
or the linearized basis X^(q^i) Y^(q^j)) or by an explicit table of values
on orbit representatives.  Binding a spec to a concrete pair of roots in a
common extension produces the full m x n value grid, from which composed
products and their factorizations are read off.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .ff import (
    DEFAULT_SEED,
    ContextMismatchError,
    Embedding,
    FieldElement,
    Polynomial,
    degree_over_base,
    extension_field,
    find_root,
    is_irreducible,
    minimal_polynomial,
    poly_to_text,
)
from .orbits import orbit_reps

MONOMIAL = "monomial"
LINEARIZED = "linearized"

SCHEMA = "compoz/1"


@dataclass(frozen=True)
class PhiPoly:
    """Bivariate polynomial over the base field as an m x n coefficient grid.

    rows[i][j] is the coefficient of X^i Y^j (monomial basis) or of
    X^(q^i) Y^(q^j) (linearized basis).  Rows read as polynomials in Y are
    the chi_i, columns read as polynomials in X are the psi_j.
    """

    ctx: object
    rows: tuple
    basis: str = MONOMIAL

    @classmethod
    def build(cls, ctx, rows, basis=MONOMIAL):
        if basis not in (MONOMIAL, LINEARIZED):
            raise ValueError(f"unknown basis {basis!r}")
        coerced = tuple(tuple(ctx._coerce(c) for c in row) for row in rows)
        if not coerced or not coerced[0]:
            raise ValueError("coefficient matrix must be non-empty")
        width = len(coerced[0])
        if any(len(r) != width for r in coerced):
            raise ValueError("ragged coefficient matrix")
        return cls(ctx=ctx, rows=coerced, basis=basis)

    @classmethod
    def random(cls, ctx, m, n, rng, basis=MONOMIAL):
        rows = tuple(
            tuple(ctx._random_raw(rng) for _ in range(n)) for _ in range(m)
        )
        return cls.build(ctx, rows, basis)

    @property
    def m(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.rows[0])

    def row_poly(self, i):
        """chi_i as a univariate polynomial (monomial basis only)."""
        if self.basis != MONOMIAL:
            raise ValueError("row_poly reads the monomial basis")
        return Polynomial(self.ctx, self.rows[i])

    def col_poly(self, j):
        """psi_j as a univariate polynomial (monomial basis only)."""
        if self.basis != MONOMIAL:
            raise ValueError("col_poly reads the monomial basis")
        return Polynomial(self.ctx, tuple(r[j] for r in self.rows))

    def matrix(self):
        return self.rows

    def evaluate(self, x, y):
        """Evaluate at two elements of a common extension of the base field."""
        ext = x.ctx
        if y.ctx != ext:
            raise ContextMismatchError("arguments must share a context")
        if ext.lower is None or ext.lower != self.ctx:
            raise ContextMismatchError("arguments must lie in an extension of the base")
        zl = self.ctx._zero_raw
        if self.basis == MONOMIAL:
            ypow = [ext._one_raw]
            for _ in range(1, self.n):
                ypow.append(ext._mul(ypow[-1], y.raw))
            acc = ext._zero_raw
            for i in range(self.m - 1, -1, -1):
                acc = ext._mul(acc, x.raw)
                row = self.rows[i]
                for j, c in enumerate(row):
                    if c != zl:
                        acc = ext._add(acc, ext._scalar_mul(c, ypow[j]))
            return FieldElement._wrap(ext, acc)
        xc = [x.raw]
        for _ in range(1, self.m):
            xc.append(ext._frob(xc[-1], 1))
        yc = [y.raw]
        for _ in range(1, self.n):
            yc.append(ext._frob(yc[-1], 1))
        acc = ext._zero_raw
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if c != zl:
                    acc = ext._add(acc, ext._scalar_mul(c, ext._mul(xc[i], yc[j])))
        return FieldElement._wrap(ext, acc)

    def to_text(self):
        head = f"{self.ctx.order} {self.m} {self.n} {self.basis}"
        lines = [head]
        from .ff import _raw_to_text

        for row in self.rows:
            lines.append(" ".join(_raw_to_text(self.ctx, c, 1) for c in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, ctx, text):
        lines = [ln.strip() for ln in text.replace(";", "\n").splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty phi description")
        head = lines[0].split()
        if len(head) != 4:
            raise ValueError("phi header must be 'q m n basis'")
        q, m, n, basis = int(head[0]), int(head[1]), int(head[2]), head[3]
        if q != ctx.order:
            raise ValueError(f"phi header field order {q} does not match {ctx.order}")
        if len(lines) - 1 != m:
            raise ValueError(f"expected {m} coefficient rows, got {len(lines) - 1}")
        from .ff import _raw_from_text

        rows = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != n:
                raise ValueError(f"expected {n} entries per row, got {len(parts)}")
            rows.append(tuple(_raw_from_text(ctx, p, 1) for p in parts))
        return cls.build(ctx, rows, basis)


@dataclass(frozen=True)
class SeparatedRep:
    """phi written as sum of rank-many separated products u_s(X) v_s(Y)."""

    rank: int
    us: tuple
    vs: tuple


def rank_decomposition(phi):
    """Rank factorization of the coefficient matrix into independent u, v lists.

    For a linearized phi the returned polynomials are coefficient vectors of
    q-powers rather than ordinary polynomials; their reconstruction identity
    is the same either way.
    """
    ctx = phi.ctx
    r, left, right = linalg.rank_factorization(ctx, phi.rows)
    us = tuple(Polynomial(ctx, tuple(row[s] for row in left)) for s in range(r))
    vs = tuple(Polynomial(ctx, right[s]) for s in range(r))
    rebuilt = [
        [ctx._zero_raw for _ in range(phi.n)] for _ in range(phi.m)
    ]
    for u, v in zip(us, vs):
        for i in range(phi.m):
            ui = u.coefficient(i).raw
            if ui == ctx._zero_raw:
                continue
            for j in range(phi.n):
                vj = v.coefficient(j).raw
                if vj != ctx._zero_raw:
                    rebuilt[i][j] = ctx._add(rebuilt[i][j], ctx._mul(ui, vj))
    if tuple(tuple(row) for row in rebuilt) != phi.rows:
        raise RuntimeError("rank factorization failed to reconstruct the matrix")
    return SeparatedRep(rank=r, us=us, vs=vs)


class RootPair:
    """Roots of f and g fixed in a common extension, with conjugate tables."""

    __slots__ = ("base", "f", "g", "m", "n", "ctx", "alpha", "beta", "alphas", "betas")

    def __init__(self, f, g, ctx, alpha, beta):
        self.base = f.ctx
        self.f = f
        self.g = g
        self.m = f.degree
        self.n = g.degree
        self.ctx = ctx
        self.alpha = alpha
        self.beta = beta
        alphas = [alpha.raw]
        for _ in range(1, self.m):
            alphas.append(ctx._frob(alphas[-1], 1))
        betas = [beta.raw]
        for _ in range(1, self.n):
            betas.append(ctx._frob(betas[-1], 1))
        self.alphas = tuple(alphas)
        self.betas = tuple(betas)

    @classmethod
    def build(cls, f, g, *, ctx=None, seed=DEFAULT_SEED):
        if f.ctx != g.ctx:
            raise ContextMismatchError("f and g must share a coefficient field")
        for poly, name in ((f, "f"), (g, "g")):
            if poly.degree is None or poly.degree < 1 or not poly.is_monic:
                raise ValueError(f"{name} must be monic of degree >= 1")
            if not is_irreducible(poly):
                raise ValueError(f"{name} is reducible")
        m, n = f.degree, g.degree
        L = m // math.gcd(m, n) * n
        if ctx is None:
            ctx = extension_field(f.ctx, L, seed=seed)
        if ctx.lower is None or ctx.lower != f.ctx or ctx.degree % L != 0:
            raise ValueError("supplied context cannot host the roots")
        alpha = find_root(f, ctx, seed=seed)
        beta = find_root(g, ctx, seed=seed)
        return cls(f, g, ctx, alpha, beta)

    @classmethod
    def from_elements(cls, alpha, beta):
        """Use two explicit elements of a common extension as the roots."""
        if alpha.ctx != beta.ctx:
            raise ContextMismatchError("roots must live in one context")
        return cls(minimal_polynomial(alpha), minimal_polynomial(beta),
                   alpha.ctx, alpha, beta)


@dataclass(frozen=True)
class DiamondSpec:
    """Either a PhiPoly or a table of values on orbit representatives (0, j)."""

    kind: str
    phi: PhiPoly = None
    m: int = None
    n: int = None
    values: tuple = None

    @classmethod
    def from_phi(cls, phi):
        return cls(kind="phi", phi=phi, m=phi.m, n=phi.n)

    @classmethod
    def from_table(cls, m, n, values):
        values = tuple(values)
        g = math.gcd(m, n)
        if len(values) != g:
            raise ValueError(f"need gcd(m, n) = {g} table values, got {len(values)}")
        ctx = values[0].ctx
        for v in values:
            if not isinstance(v, FieldElement) or v.ctx != ctx:
                raise ContextMismatchError("table values must share one context")
        L = m // g * n
        if ctx.lower is None or ctx.degree % L != 0:
            raise ValueError("table values must lie in a field containing GF(q^lcm)")
        return cls(kind="table", m=m, n=n, values=values)

    def bind(self, pair):
        return BoundDiamond(self, pair)


class BoundDiamond:
    """A diamond spec evaluated on the full conjugate grid of a root pair."""

    __slots__ = ("spec", "pair", "vals", "_composed")

    def __init__(self, spec, pair):
        m, n = pair.m, pair.n
        if spec.kind == "table" and (spec.m != m or spec.n != n):
            raise ValueError(
                f"table shape {spec.m} x {spec.n} does not match degrees {m} x {n}"
            )
        self.spec = spec
        self.pair = pair
        self._composed = None
        ctx = pair.ctx
        if spec.kind == "phi":
            self.vals = self._phi_grid(spec.phi, pair)
        else:
            for v in spec.values:
                if v.ctx != ctx:
                    raise ContextMismatchError("table values are not in the root context")
            grid = [[None] * n for _ in range(m)]
            L = m // math.gcd(m, n) * n
            for j0, v in enumerate(spec.values):
                raw = v.raw
                for t in range(L):
                    grid[t % m][(j0 + t) % n] = raw
                    raw = ctx._frob(raw, 1)
            self.vals = tuple(tuple(row) for row in grid)

    @staticmethod
    def _phi_grid(phi, pair):
        # phi may have any shape; only the grid follows the pair degrees
        ctx = pair.ctx
        m, n = pair.m, pair.n
        pm, pn = phi.m, phi.n
        zl = phi.ctx._zero_raw
        rows = phi.rows
        grid = [[None] * n for _ in range(m)]
        if phi.basis == MONOMIAL:
            for j, yraw in enumerate(pair.betas):
                ypow = [ctx._one_raw]
                for _ in range(1, pn):
                    ypow.append(ctx._mul(ypow[-1], yraw))
                chi_vals = []
                for i in range(pm):
                    acc = ctx._zero_raw
                    for b, c in enumerate(rows[i]):
                        if c != zl:
                            acc = ctx._add(acc, ctx._scalar_mul(c, ypow[b]))
                    chi_vals.append(acc)
                for i, xraw in enumerate(pair.alphas):
                    acc = ctx._zero_raw
                    for a in range(pm - 1, -1, -1):
                        acc = ctx._mul(acc, xraw)
                        acc = ctx._add(acc, chi_vals[a])
                    grid[i][j] = acc
        else:
            prods = [
                [ctx._mul(a, b) for b in pair.betas] for a in pair.alphas
            ]
            for i in range(m):
                for j in range(n):
                    acc = ctx._zero_raw
                    for a in range(pm):
                        row = rows[a]
                        pa = prods[(i + a) % m]
                        for b in range(pn):
                            c = row[b]
                            if c != zl:
                                acc = ctx._add(acc, ctx._scalar_mul(c, pa[(j + b) % n]))
                    grid[i][j] = acc
        return tuple(tuple(r) for r in grid)

    def value(self, i, j):
        """alpha^(q^i) diamond beta^(q^j)."""
        return FieldElement._wrap(
            self.pair.ctx, self.vals[i % self.pair.m][j % self.pair.n]
        )

    def composed(self):
        """Expand the product of (X - value) over the grid, projected to the base."""
        if self._composed is None:
            ctx = self.pair.ctx
            poly = Polynomial.one(ctx)
            x = Polynomial.x(ctx)
            for row in self.vals:
                for v in row:
                    poly = poly * (x - FieldElement._wrap(ctx, v))
            try:
                from .ff import project_poly_to_base

                self._composed = project_poly_to_base(poly)
            except ValueError as exc:
                raise RuntimeError(
                    "composed product has a coefficient outside the base field"
                ) from exc
        return self._composed


def composed_product(f, g, spec, *, pair=None, seed=DEFAULT_SEED):
    """The polynomial whose roots are all diamond values of roots of f and g.

    Monic of degree deg(f) * deg(g) with coefficients in the base field; the
    result does not depend on which roots the binding step picked.
    """
    if pair is None:
        pair = RootPair.build(f, g, seed=seed)
    return spec.bind(pair).composed()


@dataclass(frozen=True)
class FactorEntry:
    orbit: int
    degree: int
    multiplicity: int
    min_poly: Polynomial


@dataclass(frozen=True)
class FactorReport:
    """Structure of f diamond g over the base field, one entry per orbit."""

    q: int
    m: int
    n: int
    gcd: int
    lcm: int
    entries: tuple
    product: Polynomial
    cc_holds: bool
    all_factors_max_degree: bool
    distinct_factor_count: int

    def to_doc(self):
        factors = sorted(
            self.entries,
            key=lambda e: (e.degree, tuple(e.min_poly.ctx._to_int(c) for c in e.min_poly.coeffs)),
        )
        return {
            "schema": SCHEMA,
            "kind": "factor-report",
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "gcd": self.gcd,
            "lcm": self.lcm,
            "cc_holds": self.cc_holds,
            "all_factors_max_degree": self.all_factors_max_degree,
            "distinct_factor_count": self.distinct_factor_count,
            "product": poly_to_text(self.product),
            "factors": [
                {
                    "orbit": e.orbit,
                    "degree": e.degree,
                    "multiplicity": e.multiplicity,
                    "min_poly": poly_to_text(e.min_poly),
                }
                for e in factors
            ],
        }


def factor_report(f, g, spec, *, pair=None, seed=DEFAULT_SEED):
    """Per-orbit factors of f diamond g with degrees and multiplicities.

    Entry j describes the minimal polynomial of the value at (0, j); its
    multiplicity is lcm(m, n) / degree.  The reconstruction identity against
    the expanded product is checked and a mismatch is a hard error.
    """
    if pair is None:
        pair = RootPair.build(f, g, seed=seed)
    bd = spec.bind(pair)
    m, n = pair.m, pair.n
    g_ = math.gcd(m, n)
    L = m // g_ * n
    entries = []
    for j in range(g_):
        gamma = bd.value(0, j)
        r = degree_over_base(gamma)
        entries.append(
            FactorEntry(
                orbit=j,
                degree=r,
                multiplicity=L // r,
                min_poly=minimal_polynomial(gamma),
            )
        )
    product = Polynomial.one(pair.base)
    for e in entries:
        product = product * e.min_poly**e.multiplicity
    if product != bd.composed():
        raise RuntimeError("factor report does not reconstruct the composed product")
    cc = all(
        math.lcm(e.degree, m) == L and math.lcm(e.degree, n) == L for e in entries
    )
    return FactorReport(
        q=pair.base.order,
        m=m,
        n=n,
        gcd=g_,
        lcm=L,
        entries=tuple(entries),
        product=product,
        cc_holds=cc,
        all_factors_max_degree=all(e.degree == L for e in entries),
        distinct_factor_count=len({e.min_poly for e in entries}),
    )


def intermediate_factorization(f, g, spec, k, l, *, pair=None, seed=DEFAULT_SEED):
    """Factor f diamond g over GF(q^(k*l)) for k | m and l | n, gcd(m, n) = 1.

    Returns the k*l factors of degree m*n/(k*l); their product is the
    composed product with coefficients embedded upward.  When the diamond
    satisfies conjugate cancellation the factors are irreducible and their
    coefficients generate GF(q^(k*l)).
    """
    if pair is None:
        pair = RootPair.build(f, g, seed=seed)
    m, n = pair.m, pair.n
    if math.gcd(m, n) != 1:
        raise ValueError("intermediate factorization needs coprime degrees")
    if k < 1 or m % k != 0:
        raise ValueError(f"{k} does not divide {m}")
    if l < 1 or n % l != 0:
        raise ValueError(f"{l} does not divide {n}")
    bd = spec.bind(pair)
    if k * l == 1:
        return [bd.composed()]
    base = pair.base
    ctx_kl = extension_field(base, k * l, seed=seed)
    emb = _cached_embedding(ctx_kl, pair.ctx, seed)
    ctx = pair.ctx
    x = Polynomial.x(ctx)
    factors = []
    for mu in range(k):
        for nu in range(l):
            poly = Polynomial.one(ctx)
            for i in range(m // k):
                for j in range(n // l):
                    poly = poly * (x - bd.value(k * i + mu, l * j + nu))
            try:
                factors.append(emb.project_poly(poly))
            except ValueError as exc:
                raise RuntimeError(
                    "intermediate factor has a coefficient outside GF(q^(k*l))"
                ) from exc
    return factors


@lru_cache(maxsize=128)
def _cached_embedding(small, big, seed):
    # contexts compare structurally, so rebuilt-but-identical towers hit
    return Embedding.find(small, big, seed=seed)


def orbit_value_table(bd):
    """The values at the orbit representatives (0, j), j < gcd(m, n)."""
    g_ = math.gcd(bd.pair.m, bd.pair.n)
    return tuple(bd.value(0, j) for j in range(g_))


def table_spec_from_phi(phi, pair):
    """Rebuild a phi diamond as an explicit value table on representatives."""
    bd = DiamondSpec.from_phi(phi).bind(pair)
    reps = orbit_reps(pair.m, pair.n)
    return DiamondSpec.from_table(
        pair.m, pair.n, [bd.value(*rep) for rep in reps.representatives]
    )
