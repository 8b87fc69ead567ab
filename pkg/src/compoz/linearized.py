"""Normal elements and bilinear (q-linearized) diamond products.

A bilinear phi has the shape sum c_ij X^(q^i) Y^(q^j); its cancellation
behaviour on pairs of normal elements is read off the coefficient matrix
with nothing but entry comparisons, and normality of phi(alpha, beta) is
governed by the staircase polynomial e with e_k = c_(k mod m, k mod n).

The staircase sum starts at k = 0.  The product case phi = XY forces this:
its staircase must be the constant 1 (alpha*beta is normal for normal
inputs), which only the k = 0 term can supply.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import linalg
from .diamond import LINEARIZED, PhiPoly
from .ff import (
    DEFAULT_SEED,
    ContextMismatchError,
    Embedding,
    FieldElement,
    Polynomial,
    degree_over_base,
    distinct_prime_factors,
    extension_field,
)


@dataclass(frozen=True)
class QPolynomial:
    """A q-polynomial sum c_i X^(q^i); coeffs[i] is the coefficient of X^(q^i)."""

    ctx: object
    coeffs: tuple

    @classmethod
    def build(cls, ctx, coeffs):
        raws = [ctx._coerce(c) for c in coeffs]
        while raws and raws[-1] == ctx._zero_raw:
            raws.pop()
        return cls(ctx=ctx, coeffs=tuple(raws))

    @property
    def q_degree(self):
        """Largest i with a nonzero coefficient, or None for zero."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self):
        return not self.coeffs

    def evaluate(self, x):
        """Evaluate at an element of an extension of the coefficient field."""
        ext = x.ctx
        if ext.lower is None or ext.lower != self.ctx:
            raise ContextMismatchError("argument must lie in an extension of the base")
        zl = self.ctx._zero_raw
        acc = ext._zero_raw
        cur = x.raw
        for i, c in enumerate(self.coeffs):
            if i:
                cur = ext._frob(cur, 1)
            if c != zl:
                acc = ext._add(acc, ext._scalar_mul(c, cur))
        return FieldElement._wrap(ext, acc)


def row_qpolys(phi):
    """The chi_i of a linearized phi as q-polynomials in Y."""
    if phi.basis != LINEARIZED:
        raise ValueError("expected a linearized-basis phi")
    return tuple(QPolynomial.build(phi.ctx, row) for row in phi.rows)


def col_qpolys(phi):
    """The psi_j of a linearized phi as q-polynomials in X."""
    if phi.basis != LINEARIZED:
        raise ValueError("expected a linearized-basis phi")
    return tuple(
        QPolynomial.build(phi.ctx, [r[j] for r in phi.rows]) for j in range(phi.n)
    )


# -- normality ----------------------------------------------------------------


def is_normal(gamma):
    """Whether the context-degree many conjugates of gamma are independent.

    Elements of degree below the context degree repeat a conjugate and are
    never normal.
    """
    ctx = gamma.ctx
    if ctx.lower is None:
        raise ValueError("normality is relative to an extension field")
    m = ctx.degree
    rows = []
    raw = gamma.raw
    for _ in range(m):
        rows.append(raw)
        raw = ctx._frob(raw, 1)
    return linalg.mat_rank(ctx.lower, tuple(rows)) == m


def _normal_in_own_subfield(gamma, r):
    # gamma generates a degree-r subfield; its r conjugates must be independent
    ctx = gamma.ctx
    rows = []
    raw = gamma.raw
    for _ in range(r):
        rows.append(raw)
        raw = ctx._frob(raw, 1)
    return linalg.mat_rank(ctx.lower, tuple(rows)) == r


def random_normal_element(ctx, *, rng=None, seed=DEFAULT_SEED):
    """Seeded rejection sampling from the normal elements of the context."""
    if ctx.lower is None:
        raise ValueError("normality is relative to an extension field")
    if rng is None:
        rng = random.Random(seed)
    while True:
        a = ctx.random_element(rng)
        if is_normal(a):
            return a


def embed_pair(alpha, beta, *, ctx=None, seed=DEFAULT_SEED):
    """Embed elements of two extensions of one base into a common field.

    Returns the pair of images; the shared context has degree
    lcm(deg(alpha ctx), deg(beta ctx)) unless one is supplied.
    """
    am, bn = alpha.ctx, beta.ctx
    if am.lower is None or bn.lower is None or am.lower != bn.lower:
        raise ContextMismatchError("need elements of two extensions of one base field")
    L = math.lcm(am.degree, bn.degree)
    if ctx is None:
        ctx = extension_field(am.lower, L, seed=seed)
    if ctx.degree % L != 0 or ctx.lower != am.lower:
        raise ValueError("supplied context cannot host both elements")
    ea = Embedding.find(am, ctx, seed=seed)
    eb = Embedding.find(bn, ctx, seed=seed)
    return ea(alpha), eb(beta)


# -- cancellation for bilinear products ---------------------------------------


def bilinear_cc_test(phi):
    """Cancellation of a linearized phi on all pairs of normal elements.

    In normal bases the q-power map is the cyclic coordinate shift, so the
    matrix condition degenerates to shift-invariance checks on the
    coefficient grid: the test holds iff no row shift by m/p and no column
    shift by n/p fixes the matrix.  Only entry comparisons are used.
    """
    if phi.basis != LINEARIZED:
        raise ValueError("expected a linearized-basis phi")
    m, n = phi.m, phi.n
    if math.gcd(m, n) != 1:
        raise ValueError("bilinear cancellation test needs coprime degrees")
    C = phi.rows
    for p in distinct_prime_factors(m):
        d = m // p
        if all(C[(i - d) % m][j] == C[i][j] for i in range(m) for j in range(n)):
            return False
    for p in distinct_prime_factors(n):
        d = n // p
        if all(C[i][(j - d) % n] == C[i][j] for i in range(m) for j in range(n)):
            return False
    return True


def linearized_degree_criterion(psi, m):
    """Sufficient: a q-polynomial of degree below q^(m - m1) maps every
    normal element of GF(q^m) to a generator of GF(q^m).

    m1 is the largest proper divisor of m.  False is inconclusive.
    """
    if m < 2:
        raise ValueError("criterion needs m > 1")
    d = psi.q_degree
    if d is None:
        return False
    m1 = m // distinct_prime_factors(m)[0]
    return d < m - m1


# -- staircase polynomials -----------------------------------------------------


@dataclass(frozen=True)
class StaircasePoly:
    """Diagonal read-out of a linearized coefficient grid.

    poly has coefficient c_(k mod m, k mod n) at X^k for k = 0 .. mn-1.
    """

    poly: Polynomial
    m: int
    n: int

    @property
    def terms(self):
        return tuple(
            (k, FieldElement._wrap(self.poly.ctx, c))
            for k, c in enumerate(self.poly.coeffs)
            if c != self.poly.ctx._zero_raw
        )

    @property
    def binomial_exponents(self):
        """(s, t) when the staircase has exactly two terms, else None."""
        t = self.terms
        return (t[0][0], t[1][0]) if len(t) == 2 else None


def staircase(phi):
    """The staircase polynomial of a linearized phi with coprime dimensions."""
    if phi.basis != LINEARIZED:
        raise ValueError("staircase polynomials read the linearized basis")
    m, n = phi.m, phi.n
    if math.gcd(m, n) != 1:
        raise ValueError("staircase needs coprime dimensions")
    coeffs = [phi.rows[k % m][k % n] for k in range(m * n)]
    return StaircasePoly(poly=Polynomial(phi.ctx, coeffs), m=m, n=n)


def staircase_normal_test(phi, alpha, beta):
    """Whether phi(alpha, beta) is normal, via gcd(e, X^(mn) - 1) = 1.

    alpha and beta must be normal elements of the degree-m and degree-n
    subfields, presented inside a common extension of degree m*n.
    """
    st = staircase(phi)
    m, n = st.m, st.n
    _check_normal_pair(alpha, beta, m, n)
    base = phi.ctx
    xmn = Polynomial(base, [-1] + [0] * (m * n - 1) + [1])
    g = st.poly.gcd(xmn)
    return g.degree == 0


def _check_normal_pair(alpha, beta, m, n):
    if alpha.ctx != beta.ctx:
        raise ContextMismatchError("the pair must live in one context")
    if degree_over_base(alpha) != m or degree_over_base(beta) != n:
        raise ValueError("pair degrees do not match the matrix dimensions")
    if not _normal_in_own_subfield(alpha, m):
        raise ValueError("first argument is not normal in its subfield")
    if not _normal_in_own_subfield(beta, n):
        raise ValueError("second argument is not normal in its subfield")


def evaluate_bilinear(phi, alpha, beta):
    """phi(alpha, beta) for a pair embedded in a common extension."""
    return phi.evaluate(alpha, beta)


# -- twisted binomial products --------------------------------------------------


@dataclass(frozen=True)
class TwistedParams:
    """Parameters of the binomial product alpha^(q^k) beta +- alpha beta^(q^l).

    d is the shift constant of the companion additive family alpha+beta+d.
    """

    q: int
    m: int
    n: int
    k: int
    l: int
    sign: str = "+"
    d: int = 0

    def __post_init__(self):
        if self.sign not in ("+", "-"):
            raise ValueError("sign must be '+' or '-'")
        if math.gcd(self.m, self.n) != 1:
            raise ValueError("m and n must be coprime")
        if not (0 <= self.k < self.m and 0 <= self.l < self.n):
            raise ValueError("twists must satisfy 0 <= k < m and 0 <= l < n")


def twisted_product_phi(ctx, params):
    """The coefficient grid of the twisted binomial as a linearized PhiPoly."""
    m, n = params.m, params.n
    rows = [[0] * n for _ in range(m)]
    rows[params.k][0] += 1
    rows[0][params.l] += 1 if params.sign == "+" else -1
    return PhiPoly.build(ctx, rows, LINEARIZED)


def _nu2(x):
    if x == 0:
        return math.inf
    v = 0
    while x % 2 == 0:
        x //= 2
        v += 1
    return v


def twisted_normal_predicate(params):
    """Closed form for normality of the twisted value on normal pairs.

    The minus family is never normal.  The plus family is normal iff q is
    odd and either both m and n are odd, or the even one of them has its
    2-adic valuation bounded by that of its twist exponent.  No field
    arithmetic is involved.
    """
    if params.sign == "-":
        return False
    if params.q % 2 == 0:
        return False
    m, n = params.m, params.n
    if m % 2 == 1 and n % 2 == 1:
        return True
    if m % 2 == 0:
        return _nu2(m) <= _nu2(params.k)
    return _nu2(n) <= _nu2(params.l)


def shifted_sum_is_normal(alpha, beta, d=0):
    """is_normal(alpha + beta + d) for normal alpha, beta of coprime degrees.

    Returns the plain truth value; the shifted sum is in fact never normal,
    which the property suite asserts over its whole grid.
    """
    ctx = alpha.ctx
    m = degree_over_base(alpha)
    n = degree_over_base(beta)
    if m < 2 or n < 2 or math.gcd(m, n) != 1:
        raise ValueError("need coprime degrees above 1")
    _check_normal_pair(alpha, beta, m, n)
    if ctx.degree != m * n:
        raise ValueError("ambient context must have degree m*n")
    if isinstance(d, FieldElement):
        if d.ctx != ctx.lower:
            raise ContextMismatchError("shift constant must come from the base field")
        shift = ctx.from_base(d)
    else:
        shift = ctx.element(d)
    return is_normal(alpha + beta + shift)
