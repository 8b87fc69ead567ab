"""Conjugate-cancellation checks.

Four routes decide whether a diamond product cancels conjugate shifts on a
pair of roots: exhausting the value grid (cc_direct), reading subfield
degrees of the values (cc_oracle), verifying that the coefficient
polynomials of a phi generate both extensions (cc_by_coefficient_polys),
and a Frobenius-matrix formulation (matrix_cc_test).  All four agree; the
matrix and coefficient routes require coprime degrees.

A failing verdict carries a literal witness: the smallest exponent k such
that shifting one argument by the q^k-Frobenius leaves the diamond value
fixed without fixing the argument.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from . import linalg
from .diamond import MONOMIAL, PhiPoly
from .ff import (
    DEFAULT_SEED,
    Polynomial,
    degree_over_base,
    distinct_prime_factors,
    is_irreducible,
)

ROUTE_DIRECT = "direct"
ROUTE_ORACLE = "oracle"
ROUTE_COEFFS = "coeffs"
ROUTE_MATRIX = "matrix"


@dataclass(frozen=True)
class CcWitness:
    k: int
    side: str
    orbit: int


@dataclass(frozen=True)
class CcVerdict:
    holds: bool
    route: str
    witness: CcWitness = None

    def to_doc(self):
        doc = {"holds": self.holds, "route": self.route}
        if self.witness is not None:
            doc["witness"] = {
                "k": self.witness.k,
                "side": self.witness.side,
                "orbit": self.witness.orbit,
            }
        return doc


@dataclass(frozen=True)
class FrobeniusMatrix:
    """Matrix of x -> x^q in a power basis (1, a, ..) or a normal basis."""

    ctx: object
    size: int
    basis: str
    entries: tuple


def petr_berlekamp_matrix(f):
    """Matrix of the q-power map in the basis 1, alpha, ..., alpha^(m-1).

    Column j holds the coordinates of (alpha^j)^q where alpha is a root of
    the monic irreducible f.
    """
    m = f.degree
    if m is None or m < 1 or not f.is_monic:
        raise ValueError("expected a monic polynomial of degree >= 1")
    if not is_irreducible(f):
        raise ValueError("polynomial is reducible")
    K = f.ctx
    xq = Polynomial.x(K).pow_mod(K.order, f)
    cols = []
    cur = Polynomial.one(K)
    for j in range(m):
        if j:
            cur = (cur * xq) % f
        cols.append([cur.coefficient(i).raw for i in range(m)])
    entries = tuple(tuple(cols[j][i] for j in range(m)) for i in range(m))
    return FrobeniusMatrix(ctx=K, size=m, basis="power", entries=entries)


def normal_basis_shift_matrix(ctx, m):
    """The q-power map in a normal basis: the cyclic shift permutation."""
    z, o = ctx._zero_raw, ctx._one_raw
    entries = tuple(
        tuple(o if i == (j + 1) % m else z for j in range(m)) for i in range(m)
    )
    return FrobeniusMatrix(ctx=ctx, size=m, basis="normal", entries=entries)


# -- direct and degree-based routes -----------------------------------------


def cc_direct(bd):
    """Exhaustive check of the cancellation implications on the value grid.

    Tests every representative pair (0, j) against every shift k that is a
    multiple of gcd(m, n) in [0, lcm(m, n)); conjugating the equations moves
    any violating pair onto a representative, so this covers the whole grid.
    """
    m, n = bd.pair.m, bd.pair.n
    g = math.gcd(m, n)
    L = m // g * n
    vals = bd.vals
    for k in range(0, L, g):
        for j in range(g):
            ref = vals[0][j]
            if k % m and vals[k % m][j] == ref:
                return CcVerdict(False, ROUTE_DIRECT, CcWitness(k, "alpha", j))
            if k % n and vals[0][(j + k) % n] == ref:
                return CcVerdict(False, ROUTE_DIRECT, CcWitness(k, "beta", j))
    return CcVerdict(True, ROUTE_DIRECT)


def cc_oracle(bd):
    """Decide cancellation from the subfield degrees of the orbit values.

    Holds iff every value at (0, j) generates a field of degree r_j with
    lcm(m, r_j) = lcm(n, r_j) = lcm(m, n).
    """
    m, n = bd.pair.m, bd.pair.n
    g = math.gcd(m, n)
    L = m // g * n
    for j in range(g):
        r = degree_over_base(bd.value(0, j))
        ln, lm = math.lcm(n, r), math.lcm(m, r)
        if ln != L:
            return CcVerdict(False, ROUTE_ORACLE, CcWitness(ln, "alpha", j))
        if lm != L:
            return CcVerdict(False, ROUTE_ORACLE, CcWitness(lm, "beta", j))
    return CcVerdict(True, ROUTE_ORACLE)


# -- coefficient-polynomial route --------------------------------------------


@lru_cache(maxsize=256)
def _frobenius_points(f):
    """x^(q^(m/p)) mod f for each prime p | m; reused across calls on one f."""
    m = f.degree
    if m is None or m < 1 or not f.is_monic:
        raise ValueError("expected a monic polynomial of degree >= 1")
    if not is_irreducible(f):
        raise ValueError("polynomial is reducible")
    q = f.ctx.order
    x = Polynomial.x(f.ctx)
    return tuple(
        (p, x.pow_mod(q ** (m // p), f)) for p in distinct_prime_factors(m)
    )


def _surviving_primes(f, polys):
    """Primes p | m for which every u has u(alpha) inside GF(q^(m/p))."""
    m = f.degree
    points = _frobenius_points(f)
    for u in polys:
        d = u.degree
        if d is not None and d >= m:
            raise ValueError("coefficient polynomials must have degree < deg f")
    remaining = list(points)
    for u in polys:
        u_can = u % f
        still = []
        for p, pt in remaining:
            acc = Polynomial(f.ctx)
            for i in range(len(u.coeffs) - 1, -1, -1):
                acc = (acc * pt + u.coefficient(i)) % f
            if acc == u_can:
                still.append((p, pt))
        remaining = still
        if not remaining:
            break
    return tuple(p for p, _ in remaining)


def verify_extension_degree(f, polys):
    """Whether the values u(alpha), u in polys, generate all of GF(q^m).

    Exactly the subfield sieve: alpha is a root of the monic irreducible f,
    and the values generate GF(q^m) iff for every prime p | m some u(alpha)
    moves under the q^(m/p)-power map.  Evaluations use Horner in
    GF(q)[X]/(f); the per-f Frobenius powers are cached, and the sieve exits
    as soon as every prime is ruled out.  On average only the first couple
    of polynomials are touched.
    """
    return not _surviving_primes(f, polys)


def cc_by_coefficient_polys(f, g, phi):
    """Cancellation via the row/column polynomials of a monomial-basis phi."""
    if phi.basis != MONOMIAL:
        raise ValueError("coefficient-polynomial route needs the monomial basis")
    m, n = f.degree, g.degree
    if (phi.m, phi.n) != (m, n):
        raise ValueError("phi shape does not match the degrees of f and g")
    if math.gcd(m, n) != 1:
        raise ValueError("coefficient-polynomial route needs coprime degrees")
    surviving_a = _surviving_primes(f, [phi.col_poly(j) for j in range(n)])
    if surviving_a:
        return CcVerdict(
            False, ROUTE_COEFFS, CcWitness(m // surviving_a[0], "alpha", 0)
        )
    surviving_b = _surviving_primes(g, [phi.row_poly(i) for i in range(m)])
    if surviving_b:
        return CcVerdict(
            False, ROUTE_COEFFS, CcWitness(n // surviving_b[0], "beta", 0)
        )
    return CcVerdict(True, ROUTE_COEFFS)


def sample_cc_phi_matrices(f, g, count, *, rng=None, seed=DEFAULT_SEED):
    """Rejection-sample phi matrices whose products cancel conjugates.

    Draws uniform m x n coefficient matrices and keeps those passing the
    extension-degree check on both sides.  The Frobenius powers for f and g
    are computed once and shared by all candidates.
    """
    m, n = f.degree, g.degree
    if math.gcd(m, n) != 1:
        raise ValueError("sampling needs coprime degrees")
    if rng is None:
        rng = random.Random(seed)
    base = f.ctx
    out = []
    while len(out) < count:
        phi = PhiPoly.random(base, m, n, rng)
        if verify_extension_degree(f, [phi.col_poly(j) for j in range(n)]) and \
                verify_extension_degree(g, [phi.row_poly(i) for i in range(m)]):
            out.append(phi)
    return out


# -- matrix route -------------------------------------------------------------


def matrix_cc_test(f, g, phi):
    """Cancellation via Frobenius matrices in the power bases of f and g.

    Holds iff (A^(m/p) - I) C is nonzero for every prime p | m and
    (B^(n/p) - I) C^T is nonzero for every prime p | n.
    """
    if phi.basis != MONOMIAL:
        raise ValueError("matrix route needs the monomial basis")
    m, n = f.degree, g.degree
    if (phi.m, phi.n) != (m, n):
        raise ValueError("phi shape does not match the degrees of f and g")
    if math.gcd(m, n) != 1:
        raise ValueError("matrix route needs coprime degrees")
    K = f.ctx
    C = phi.rows
    A = petr_berlekamp_matrix(f).entries
    for p in distinct_prime_factors(m):
        D = linalg.mat_sub(K, linalg.mat_pow(K, A, m // p), linalg.identity(K, m))
        if linalg.mat_is_zero(K, linalg.mat_mul(K, D, C)):
            return CcVerdict(False, ROUTE_MATRIX, CcWitness(m // p, "alpha", 0))
    B = petr_berlekamp_matrix(g).entries
    Ct = linalg.transpose(C)
    for p in distinct_prime_factors(n):
        D = linalg.mat_sub(K, linalg.mat_pow(K, B, n // p), linalg.identity(K, n))
        if linalg.mat_is_zero(K, linalg.mat_mul(K, D, Ct)):
            return CcVerdict(False, ROUTE_MATRIX, CcWitness(n // p, "beta", 0))
    return CcVerdict(True, ROUTE_MATRIX)


# -- sufficient criteria ------------------------------------------------------


def rank_criterion(phi):
    """Sufficient: rank(C) above max(m/m1, n/n1) forces cancellation everywhere.

    m1, n1 are the smallest prime divisors.  A False answer is inconclusive.
    """
    m, n = phi.m, phi.n
    if m < 2 or n < 2 or math.gcd(m, n) != 1:
        raise ValueError("rank criterion needs coprime m, n > 1")
    m1 = distinct_prime_factors(m)[0]
    n1 = distinct_prime_factors(n)[0]
    return linalg.mat_rank(phi.ctx, phi.rows) > max(m // m1, n // n1)


def degree_criterion(phi):
    """Sufficient: one nonconstant chi_i of degree below n1 and one
    nonconstant psi_j of degree below m1 force cancellation everywhere.

    Constants are excluded because a constant value generates nothing; a
    False answer is inconclusive.
    """
    if phi.basis != MONOMIAL:
        raise ValueError("degree criterion reads the monomial basis")
    m, n = phi.m, phi.n
    if m < 2 or n < 2 or math.gcd(m, n) != 1:
        raise ValueError("degree criterion needs coprime m, n > 1")
    m1 = distinct_prime_factors(m)[0]
    n1 = distinct_prime_factors(n)[0]
    good_chi = any(
        (d := phi.row_poly(i).degree) is not None and 1 <= d < n1 for i in range(m)
    )
    good_psi = any(
        (d := phi.col_poly(j).degree) is not None and 1 <= d < m1 for j in range(n)
    )
    return good_chi and good_psi
