"""Arithmetic for finite-field towers and dense univariate polynomials.

A FieldContext describes either a prime field GF(p) or an extension of a
lower context by a monic irreducible modulus.  Towers are limited to two
extension levels above GF(p), i.e. GF(p) -> GF(p^e) -> GF((p^e)^m).
Requesting an extension of a level-two context flattens it first (see
FieldContext.flatten).

Raw value representation (internal):

  * prime level: int in [0, p)
  * extension level: tuple of lower-level raw values, fixed length = degree

Public code works with the FieldElement and Polynomial wrappers; the raw
layer keeps the inner loops allocation-light.  Polynomial coefficients are
stored ascending with trailing zeros stripped.  The zero polynomial has
degree None, never -1.

Elements never coerce across contexts silently.  Moving a value between a
field and one of its extensions goes through FieldContext.from_base /
to_base, and between two extensions of the same base through Embedding.

Text formats (also used by the CLI):

  * polynomial: comma-separated coordinates ascending, "2,1,0,1" is
    2 + X + X^3 over GF(3)
  * extension coordinates inside a coefficient: '/'-separated, with ':'
    one level further down ("1/0/2/0", "1:0/0:2")
  * field spec: "p" or "p^e:modulus", e.g. "2^2:1,1,1" for GF(4)
"""

from __future__ import annotations

import random
from functools import lru_cache

from .linalg import LinearSolver

DEFAULT_SEED = 0

# Exhaustive root scan below this field size, gcd-based splitting above.
_ROOT_SCAN_LIMIT = 1 << 16

_COORD_SEPS = ("/", ":")


class ContextMismatchError(ValueError):
    """Mixing elements or polynomials that belong to different contexts."""


def _is_prime(n):
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for s in small:
        if n % s == 0:
            return n == s
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def distinct_prime_factors(n):
    """Distinct prime divisors of n >= 1, ascending, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Raw polynomial helpers.  Coefficients are raw values of a context K, lists
# or tuples in ascending order with no trailing zeros ("stripped").


def _pstrip(K, cs):
    z = K._zero_raw
    n = len(cs)
    while n and cs[n - 1] == z:
        n -= 1
    return tuple(cs[:n])


def _padd(K, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = K._add
    for i, c in enumerate(b):
        out[i] = add(out[i], c)
    return _pstrip(K, out)


def _psub(K, a, b):
    out = list(a)
    z = K._zero_raw
    while len(out) < len(b):
        out.append(z)
    sub = K._sub
    for i, c in enumerate(b):
        out[i] = sub(out[i], c)
    return _pstrip(K, out)


def _pscale(K, c, a):
    if c == K._zero_raw:
        return ()
    mul = K._mul
    return tuple(mul(c, x) for x in a)


def _pmul(K, a, b):
    if not a or not b:
        return ()
    if K.lower is None:
        p = K.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return tuple(v % p for v in out)
    z = K._zero_raw
    out = [z] * (len(a) + len(b) - 1)
    add, mul = K._add, K._mul
    for i, ai in enumerate(a):
        if ai != z:
            for j, bj in enumerate(b):
                if bj != z:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return tuple(out)


def _pdivmod(K, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return (), tuple(a)
    if K.lower is None:
        p = K.p
        lead = b[-1]
        inv = 1 if lead == 1 else pow(lead, p - 2, p)
        r = list(a)
        q = [0] * (da - db + 1)
        for k in range(da - db, -1, -1):
            c = r[k + db] * inv % p
            if c:
                q[k] = c
                for i in range(db):
                    bi = b[i]
                    if bi:
                        r[k + i] = (r[k + i] - c * bi) % p
            r[k + db] = 0
        return _pstrip(K, q), _pstrip(K, r[:db])
    z = K._zero_raw
    lead = b[-1]
    inv = K._one_raw if lead == K._one_raw else K._inv(lead)
    r = list(a)
    q = [z] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = K._mul(r[k + db], inv)
        if c != z:
            q[k] = c
            for i in range(db):
                bi = b[i]
                if bi != z:
                    r[k + i] = K._sub(r[k + i], K._mul(c, bi))
        r[k + db] = z
    return _pstrip(K, q), _pstrip(K, r[:db])


def _pmod(K, a, b):
    return _pdivmod(K, a, b)[1]


def _pgcd(K, a, b):
    a, b = tuple(a), tuple(b)
    while b:
        a, b = b, _pmod(K, a, b)
    if a and a[-1] != K._one_raw:
        a = _pscale(K, K._inv(a[-1]), a)
    return a


def _pinvmod(K, a, mod):
    """Inverse of a modulo mod (mod monic), via extended Euclid."""
    r0, r1 = tuple(mod), _pstrip(K, a)
    s0, s1 = (), (K._one_raw,)
    while r1:
        q, r = _pdivmod(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(K, s0, _pmul(K, q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    return _pscale(K, K._inv(r0[0]), s0)


def _ppowmod(K, base, e, mod):
    result = (K._one_raw,)
    b = _pmod(K, base, mod)
    while e:
        if e & 1:
            result = _pmod(K, _pmul(K, result, b), mod)
        e >>= 1
        if e:
            b = _pmod(K, _pmul(K, b, b), mod)
    return result


def _peval(K, f, x):
    acc = K._zero_raw
    add, mul = K._add, K._mul
    for c in reversed(f):
        acc = add(mul(acc, x), c)
    return acc


# ---------------------------------------------------------------------------


class FieldContext:
    """A prime field GF(p) or an extension of a lower context.

    Instances are immutable and hashable; equality is structural.  Use
    prime_field() and FieldContext.extension() to build them.
    """

    __slots__ = (
        "p",
        "lower",
        "modulus",
        "degree",
        "order",
        "subfield_order",
        "depth",
        "_mod_body",
        "_zero_raw",
        "_one_raw",
        "_hash",
        "_frob_table",
        "_flat",
    )

    def __init__(self, p, lower=None, modulus=None):
        self.p = p
        self.lower = lower
        self.modulus = modulus
        if lower is None:
            self.degree = 1
            self.order = p
            self.subfield_order = p
            self.depth = 0
            self._mod_body = None
            self._zero_raw = 0
            self._one_raw = 1 % p
        else:
            d = len(modulus) - 1
            self.degree = d
            self.order = lower.order ** d
            self.subfield_order = lower.order
            self.depth = lower.depth + 1
            self._mod_body = modulus[:-1]
            self._zero_raw = (lower._zero_raw,) * d
            one = [lower._zero_raw] * d
            one[0] = lower._one_raw
            self._one_raw = tuple(one)
        self._hash = hash((p, modulus, lower))
        self._frob_table = None
        self._flat = None

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldContext):
            return NotImplemented
        return (
            self.p == other.p
            and self.modulus == other.modulus
            and self.lower == other.lower
        )

    def __hash__(self):
        return self._hash

    def describe(self):
        if self.lower is None:
            return f"GF({self.p})"
        return f"GF({self.lower.order}^{self.degree})"

    def __repr__(self):
        return f"<FieldContext {self.describe()}>"

    def spec_string(self):
        """Field spec for this context ("p" or "p^e:modulus"); depth <= 1."""
        if self.lower is None:
            return str(self.p)
        if self.depth == 1:
            return f"{self.p}^{self.degree}:{self.modulus_poly()}"
        raise ValueError("no spec string for a two-level tower")

    # -- raw arithmetic ------------------------------------------------------

    def _coerce(self, v):
        if isinstance(v, FieldElement):
            if v.ctx is self or v.ctx == self:
                return v.raw
            raise ContextMismatchError(
                f"element of {v.ctx.describe()} used in {self.describe()}"
            )
        if isinstance(v, int):
            if self.lower is None:
                return v % self.p
            c0 = self.lower._coerce(v)
            out = [self.lower._zero_raw] * self.degree
            out[0] = c0
            return tuple(out)
        if self.lower is not None and isinstance(v, (tuple, list)):
            if len(v) != self.degree:
                raise ValueError(
                    f"expected {self.degree} coordinates, got {len(v)}"
                )
            return tuple(self.lower._coerce(c) for c in v)
        raise TypeError(f"cannot interpret {v!r} as an element of {self.describe()}")

    def _add(self, a, b):
        lo = self.lower
        if lo is None:
            return (a + b) % self.p
        if lo.lower is None:
            p = lo.p
            return tuple((x + y) % p for x, y in zip(a, b))
        return tuple(lo._add(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        lo = self.lower
        if lo is None:
            return -a % self.p
        if lo.lower is None:
            p = lo.p
            return tuple(-x % p for x in a)
        return tuple(lo._neg(x) for x in a)

    def _sub(self, a, b):
        lo = self.lower
        if lo is None:
            return (a - b) % self.p
        if lo.lower is None:
            p = lo.p
            return tuple((x - y) % p for x, y in zip(a, b))
        return tuple(lo._sub(x, y) for x, y in zip(a, b))

    def _mul(self, a, b):
        lo = self.lower
        if lo is None:
            return a * b % self.p
        d = self.degree
        if d == 1:
            return (lo._mul(a[0], b[0]),)
        body = self._mod_body
        if lo.lower is None:
            p = lo.p
            t = [0] * (2 * d - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        if bj:
                            t[i + j] += ai * bj
            for k in range(2 * d - 2, d - 1, -1):
                c = t[k] % p
                if c:
                    nk = k - d
                    for i, mi in enumerate(body):
                        if mi:
                            t[nk + i] -= c * mi
            return tuple(v % p for v in t[:d])
        z = lo._zero_raw
        t = [z] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai != z:
                for j, bj in enumerate(b):
                    if bj != z:
                        t[i + j] = lo._add(t[i + j], lo._mul(ai, bj))
        for k in range(2 * d - 2, d - 1, -1):
            c = t[k]
            if c != z:
                nk = k - d
                for i, mi in enumerate(body):
                    if mi != z:
                        t[nk + i] = lo._sub(t[nk + i], lo._mul(c, mi))
        return tuple(t[:d])

    def _scalar_mul(self, c, a):
        """Multiply by a scalar from the next-lower level."""
        lo = self.lower
        if lo is None:
            return a * c % self.p
        if lo.lower is None:
            p = lo.p
            return tuple(x * c % p for x in a)
        return tuple(lo._mul(c, x) for x in a)

    def _inv(self, a):
        if self.lower is None:
            if a == 0:
                raise ZeroDivisionError("division by zero")
            return pow(a, self.p - 2, self.p)
        s = _pstrip(self.lower, a)
        if not s:
            raise ZeroDivisionError("division by zero")
        inv = _pinvmod(self.lower, s, self.modulus)
        return self._pad(inv)

    def _pow(self, a, e):
        if self.lower is None:
            if e < 0:
                a = self._inv(a)
                e = -e
            return pow(a, e, self.p)
        if e < 0:
            a = self._inv(a)
            e = -e
        result = self._one_raw
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            e >>= 1
            if e:
                base = self._mul(base, base)
        return result

    def _frob_basis(self):
        # (x^i)^q for i < degree; coefficients are fixed by x -> x^q because
        # they live in the field of order q
        if self._frob_table is None:
            d = self.degree
            xq = self._pow(self._gen_raw(), self.subfield_order)
            tbl = [self._one_raw]
            for _ in range(1, d):
                tbl.append(self._mul(tbl[-1], xq))
            self._frob_table = tuple(tbl)
        return self._frob_table

    def _frob(self, a, k=1):
        if self.lower is None:
            return a
        d = self.degree
        k %= d
        if k == 0:
            return a
        tbl = self._frob_basis()
        z = self._zero_raw
        zl = self.lower._zero_raw
        for _ in range(k):
            acc = z
            for i, c in enumerate(a):
                if c != zl:
                    acc = self._add(acc, self._scalar_mul(c, tbl[i]))
            a = acc
        return a

    def _pad(self, cs):
        if self.lower is None:
            raise ValueError("prime contexts have no coordinate vectors")
        z = self.lower._zero_raw
        return tuple(cs) + (z,) * (self.degree - len(cs))

    def _gen_raw(self):
        if self.lower is None:
            raise ValueError("prime contexts have no generator")
        if self.degree == 1:
            return (self.lower._neg(self.modulus[0]),)
        out = [self.lower._zero_raw] * self.degree
        out[1] = self.lower._one_raw
        return tuple(out)

    def _from_base_raw(self, c):
        out = [self.lower._zero_raw] * self.degree
        out[0] = c
        return tuple(out)

    def _to_base_raw(self, a):
        z = self.lower._zero_raw
        for c in a[1:]:
            if c != z:
                raise ValueError("element does not lie in the base field")
        return a[0]

    def _nth(self, i):
        if self.lower is None:
            return i % self.p
        q = self.lower.order
        coords = []
        for _ in range(self.degree):
            coords.append(self.lower._nth(i % q))
            i //= q
        return tuple(coords)

    def _to_int(self, a):
        if self.lower is None:
            return a
        q = self.lower.order
        v = 0
        for c in reversed(a):
            v = v * q + self.lower._to_int(c)
        return v

    def _random_raw(self, rng):
        return self._nth(rng.randrange(self.order))

    # -- public surface ------------------------------------------------------

    @property
    def zero(self):
        return FieldElement._wrap(self, self._zero_raw)

    @property
    def one(self):
        return FieldElement._wrap(self, self._one_raw)

    def element(self, v):
        return FieldElement(self, v)

    def nth_element(self, i):
        if not 0 <= i < self.order:
            raise ValueError("element index out of range")
        return FieldElement._wrap(self, self._nth(i))

    def all_elements(self):
        """All field elements in the canonical coordinate-counting order."""
        for i in range(self.order):
            yield FieldElement._wrap(self, self._nth(i))

    def random_element(self, rng):
        return FieldElement._wrap(self, self._random_raw(rng))

    def generator(self):
        """The residue of X in GF(q)[X]/(modulus); a root of the modulus."""
        return FieldElement._wrap(self, self._gen_raw())

    def modulus_poly(self):
        if self.lower is None:
            return None
        return Polynomial._wrap(self.lower, self.modulus)

    def from_base(self, a):
        if self.lower is None:
            raise ValueError("prime contexts have no base field")
        if not isinstance(a, FieldElement):
            return FieldElement._wrap(self, self._coerce(a))
        if a.ctx != self.lower:
            raise ContextMismatchError("element is not in the base field")
        return FieldElement._wrap(self, self._from_base_raw(a.raw))

    def to_base(self, a):
        if not isinstance(a, FieldElement) or a.ctx != self:
            raise ContextMismatchError("element does not belong to this context")
        return FieldElement._wrap(self.lower, self._to_base_raw(a.raw))

    def extension(self, modulus, *, check=True):
        """Extend by a monic irreducible modulus over this field.

        A level-two context is flattened to a fresh single extension of
        GF(p) before extending, so the result is again at most two levels
        deep.  Note that flattening changes the Frobenius base field of the
        result to GF(p^(e*m)).
        """
        f = modulus if isinstance(modulus, Polynomial) else Polynomial(self, modulus)
        if f.ctx != self:
            raise ContextMismatchError("modulus is not over this field")
        d = f.degree
        if d is None or d < 1:
            raise ValueError("modulus must have degree >= 1")
        if not f.is_monic:
            raise ValueError("modulus must be monic")
        if check and d > 1 and not is_irreducible(f):
            raise ValueError("modulus is reducible")
        if self.depth >= 2:
            flat, to_flat, _ = self.flatten()
            g = f.map_coefficients(to_flat, ctx=flat)
            return flat.extension(g, check=False)
        return FieldContext(self.p, lower=self, modulus=f.coeffs)

    def flatten(self):
        """Rebuild a level-two field as one extension of GF(p).

        Returns (flat_ctx, to_flat, from_flat) where the two maps are
        mutually inverse field isomorphisms on FieldElement values.
        """
        if self.depth < 2:
            raise ValueError("only two-level towers can be flattened")
        if self._flat is None:
            p = self.p
            em = self.degree * self.lower.degree
            prime = prime_field(p)

            def p_degree(raw):
                r, b = 1, self._pow(raw, p)
                while b != raw:
                    b = self._pow(b, p)
                    r += 1
                return r

            gen = None
            for i in range(2, self.order):
                cand = self._nth(i)
                if p_degree(cand) == em:
                    gen = cand
                    break
            conjs = []
            b = gen
            for _ in range(em):
                conjs.append(b)
                b = self._pow(b, p)
            poly = (self._one_raw,)
            for c in conjs:
                poly = _pmul(self, poly, (self._neg(c), self._one_raw))

            def flat_vec(raw):
                out = []
                for c in raw:
                    out.extend(c)
                return tuple(out)

            def prime_const(raw):
                v = flat_vec(raw)
                if any(v[1:]):
                    raise RuntimeError("flattening produced a non-prime coefficient")
                return v[0]

            flat = prime.extension(
                Polynomial(prime, [prime_const(c) for c in poly]), check=False
            )
            pows = [self._one_raw]
            for _ in range(1, em):
                pows.append(self._mul(pows[-1], gen))
            solver = LinearSolver(prime, [flat_vec(w) for w in pows])
            self._flat = (flat, pows, solver, flat_vec)
        flat, pows, solver, flat_vec = self._flat

        def to_flat(a):
            coords = solver.solve(flat_vec(a.raw if isinstance(a, FieldElement) else a))
            if coords is None:
                raise RuntimeError("flattening solve failed")
            return FieldElement._wrap(flat, tuple(coords))

        def from_flat(a):
            acc = self._zero_raw
            for c, w in zip(a.raw, pows):
                if c:
                    acc = self._add(acc, self._mul(self._coerce(c), w))
            return FieldElement._wrap(self, acc)

        return flat, to_flat, from_flat


class FieldElement:
    """A value in a FieldContext.  Immutable and hashable."""

    __slots__ = ("ctx", "raw")

    def __init__(self, ctx, value):
        self.ctx = ctx
        self.raw = ctx._coerce(value)

    @classmethod
    def _wrap(cls, ctx, raw):
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.raw = raw
        return obj

    def _same(self, other):
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise ContextMismatchError(
                f"cannot combine {self.ctx.describe()} with {other.ctx.describe()}"
            )

    def __add__(self, other):
        ctx = self.ctx
        if isinstance(other, FieldElement):
            self._same(other)
            return FieldElement._wrap(ctx, ctx._add(self.raw, other.raw))
        if isinstance(other, int):
            return FieldElement._wrap(ctx, ctx._add(self.raw, ctx._coerce(other)))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        ctx = self.ctx
        if isinstance(other, FieldElement):
            self._same(other)
            return FieldElement._wrap(ctx, ctx._sub(self.raw, other.raw))
        if isinstance(other, int):
            return FieldElement._wrap(ctx, ctx._sub(self.raw, ctx._coerce(other)))
        return NotImplemented

    def __rsub__(self, other):
        ctx = self.ctx
        if isinstance(other, int):
            return FieldElement._wrap(ctx, ctx._sub(ctx._coerce(other), self.raw))
        return NotImplemented

    def __mul__(self, other):
        ctx = self.ctx
        if isinstance(other, FieldElement):
            self._same(other)
            return FieldElement._wrap(ctx, ctx._mul(self.raw, other.raw))
        if isinstance(other, int):
            return FieldElement._wrap(ctx, ctx._mul(self.raw, ctx._coerce(other)))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        ctx = self.ctx
        if isinstance(other, FieldElement):
            self._same(other)
            return FieldElement._wrap(ctx, ctx._mul(self.raw, ctx._inv(other.raw)))
        if isinstance(other, int):
            return FieldElement._wrap(
                ctx, ctx._mul(self.raw, ctx._inv(ctx._coerce(other)))
            )
        return NotImplemented

    def __rtruediv__(self, other):
        ctx = self.ctx
        if isinstance(other, int):
            return FieldElement._wrap(
                ctx, ctx._mul(ctx._coerce(other), ctx._inv(self.raw))
            )
        return NotImplemented

    def __neg__(self):
        return FieldElement._wrap(self.ctx, self.ctx._neg(self.raw))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        return FieldElement._wrap(self.ctx, self.ctx._pow(self.raw, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self.ctx._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.raw))

    def __bool__(self):
        return self.raw != self.ctx._zero_raw

    @property
    def is_zero(self):
        return self.raw == self.ctx._zero_raw

    def frobenius(self, k=1):
        """a^(q^k) where q is the order of the next-lower level."""
        return FieldElement._wrap(self.ctx, self.ctx._frob(self.raw, k))

    def to_int(self):
        """Canonical integer index of this element (coordinate counting)."""
        return self.ctx._to_int(self.raw)

    def coords(self):
        if self.ctx.lower is None:
            raise ValueError("prime-field elements have no coordinate vector")
        return tuple(FieldElement._wrap(self.ctx.lower, c) for c in self.raw)

    def __str__(self):
        return element_to_text(self)

    def __repr__(self):
        return f"FieldElement({self.ctx.describe()}, '{element_to_text(self)}')"


class Polynomial:
    """Dense univariate polynomial over a FieldContext."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs=()):
        self.ctx = ctx
        self.coeffs = _pstrip(ctx, [ctx._coerce(c) for c in coeffs])

    @classmethod
    def _wrap(cls, ctx, coeffs):
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = coeffs
        return obj

    @classmethod
    def x(cls, ctx):
        return cls._wrap(ctx, (ctx._zero_raw, ctx._one_raw))

    @classmethod
    def one(cls, ctx):
        return cls._wrap(ctx, (ctx._one_raw,))

    @classmethod
    def constant(cls, ctx, c):
        return cls._wrap(ctx, _pstrip(ctx, [ctx._coerce(c)]))

    @classmethod
    def from_roots(cls, ctx, roots):
        out = (ctx._one_raw,)
        for r in roots:
            raw = ctx._coerce(r)
            out = _pmul(ctx, out, (ctx._neg(raw), ctx._one_raw))
        return cls._wrap(ctx, out)

    @property
    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx._one_raw

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElement._wrap(self.ctx, self.coeffs[-1])

    def coefficient(self, i):
        if 0 <= i < len(self.coeffs):
            return FieldElement._wrap(self.ctx, self.coeffs[i])
        return FieldElement._wrap(self.ctx, self.ctx._zero_raw)

    def coefficients(self):
        return tuple(FieldElement._wrap(self.ctx, c) for c in self.coeffs)

    def _same(self, other):
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise ContextMismatchError("polynomials from different contexts")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._same(other)
            return other
        if isinstance(other, (FieldElement, int)):
            return Polynomial.constant(self.ctx, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Polynomial._wrap(self.ctx, _padd(self.ctx, self.coeffs, o.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Polynomial._wrap(self.ctx, _psub(self.ctx, self.coeffs, o.coeffs))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Polynomial._wrap(self.ctx, _psub(self.ctx, o.coeffs, self.coeffs))

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Polynomial._wrap(self.ctx, _pmul(self.ctx, self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __neg__(self):
        ctx = self.ctx
        return Polynomial._wrap(ctx, tuple(ctx._neg(c) for c in self.coeffs))

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Polynomial.one(self.ctx)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        q, r = _pdivmod(self.ctx, self.coeffs, o.coeffs)
        return Polynomial._wrap(self.ctx, q), Polynomial._wrap(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def monic(self):
        if not self.coeffs:
            return self
        if self.is_monic:
            return self
        inv = self.ctx._inv(self.coeffs[-1])
        return Polynomial._wrap(self.ctx, _pscale(self.ctx, inv, self.coeffs))

    def gcd(self, other):
        self._same(other)
        return Polynomial._wrap(self.ctx, _pgcd(self.ctx, self.coeffs, other.coeffs))

    def pow_mod(self, e, modulus):
        self._same(modulus)
        if e < 0:
            raise ValueError("negative exponents are not supported")
        if modulus.is_zero:
            raise ZeroDivisionError("zero modulus")
        return Polynomial._wrap(
            self.ctx, _ppowmod(self.ctx, self.coeffs, e, modulus.coeffs)
        )

    def evaluate(self, x):
        if not isinstance(x, FieldElement) or x.ctx != self.ctx:
            raise ContextMismatchError("evaluation point must be in the same context")
        return FieldElement._wrap(self.ctx, _peval(self.ctx, self.coeffs, x.raw))

    def map_coefficients(self, fn, ctx=None):
        """Apply fn to every coefficient (as FieldElement); ctx names the target."""
        images = [fn(FieldElement._wrap(self.ctx, c)) for c in self.coeffs]
        if ctx is None:
            ctx = images[0].ctx if images else self.ctx
        return Polynomial(ctx, images)

    def __str__(self):
        return poly_to_text(self)

    def __repr__(self):
        return f"Polynomial({self.ctx.describe()}, '{poly_to_text(self)}')"


# ---------------------------------------------------------------------------
# Context constructors.


@lru_cache(maxsize=None)
def prime_field(p):
    """The prime field GF(p)."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    return FieldContext(p)


def extension_field(base, degree, *, rng=None, seed=DEFAULT_SEED):
    """Extension of the given degree with a seeded random irreducible modulus."""
    return base.extension(random_irreducible(base, degree, rng=rng, seed=seed), check=False)


# ---------------------------------------------------------------------------
# Free functions on elements and polynomials.


def frobenius(a, k=1):
    """a^(q^k) where q is the order of the coefficient field below a."""
    return a.frobenius(k)


def degree_over_base(a):
    """Smallest r with a^(q^r) = a; the degree of GF(q)(a) over GF(q)."""
    ctx = a.ctx
    if ctx.lower is None:
        return 1
    r = 1
    b = ctx._frob(a.raw, 1)
    while b != a.raw:
        b = ctx._frob(b, 1)
        r += 1
    return r


def minimal_polynomial(a):
    """Monic minimal polynomial of a over the next-lower field."""
    ctx = a.ctx
    if ctx.lower is None:
        return Polynomial._wrap(ctx, (ctx._neg(a.raw), ctx._one_raw))
    base = ctx.lower
    conjs = [a.raw]
    b = ctx._frob(a.raw, 1)
    while b != a.raw:
        conjs.append(b)
        b = ctx._frob(b, 1)
    poly = (ctx._one_raw,)
    for c in conjs:
        poly = _pmul(ctx, poly, (ctx._neg(c), ctx._one_raw))
    return Polynomial._wrap(base, tuple(ctx._to_base_raw(c) for c in poly))


def is_irreducible(f):
    """Rabin test: f | X^(Q^n) - X and gcd(X^(Q^(n/t)) - X, f) = 1 for primes t | n."""
    if not isinstance(f, Polynomial):
        raise TypeError("expected a Polynomial")
    n = f.degree
    if n is None or n < 1:
        raise ValueError("irreducibility is defined for degree >= 1")
    if not f.is_monic:
        raise ValueError("irreducibility test requires a monic polynomial")
    if n == 1:
        return True
    K = f.ctx
    Q = K.order
    fc = f.coeffs
    xq = _ppowmod(K, (K._zero_raw, K._one_raw), Q**n, fc)
    if _pstrip(K, _psub(K, xq, (K._zero_raw, K._one_raw))):
        return False
    for t in distinct_prime_factors(n):
        w = _ppowmod(K, (K._zero_raw, K._one_raw), Q ** (n // t), fc)
        g = _pgcd(K, _psub(K, w, (K._zero_raw, K._one_raw)), fc)
        if len(g) != 1:
            return False
    return True


def random_irreducible(ctx, degree, *, rng=None, seed=DEFAULT_SEED):
    """Seeded rejection sampling of a monic irreducible of the given degree."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if rng is None:
        rng = random.Random(seed)
    one = ctx._one_raw
    while True:
        coeffs = [ctx._random_raw(rng) for _ in range(degree)] + [one]
        f = Polynomial._wrap(ctx, tuple(coeffs))
        if degree == 1 or is_irreducible(f):
            return f


def evaluate_in_extension(f, x):
    """Evaluate f, defined over the base of x's context, at x."""
    ext = x.ctx
    if ext.lower is None or ext.lower != f.ctx:
        raise ContextMismatchError("point must lie in an extension of the coefficient field")
    acc = ext._zero_raw
    zl = f.ctx._zero_raw
    for c in reversed(f.coeffs):
        acc = ext._mul(acc, x.raw)
        if c != zl:
            acc = ext._add(acc, ext._from_base_raw(c))
    return FieldElement._wrap(ext, acc)


def embed_poly_from_base(f, ext):
    """Reinterpret a polynomial over the base field as one over the extension."""
    if ext.lower is None or ext.lower != f.ctx:
        raise ContextMismatchError("not an extension of the coefficient field")
    return Polynomial._wrap(ext, tuple(ext._from_base_raw(c) for c in f.coeffs))


def project_poly_to_base(f):
    """Inverse of embed_poly_from_base; fails if any coefficient is not in the base."""
    ext = f.ctx
    if ext.lower is None:
        raise ValueError("polynomial is already over a bottom-level field")
    return Polynomial._wrap(ext.lower, tuple(ext._to_base_raw(c) for c in f.coeffs))


def find_root(f, ext, *, seed=DEFAULT_SEED):
    """One root of f in the extension field ext.

    f must be monic irreducible over ext's base field with degree dividing
    ext's degree.  Small fields are scanned in canonical order; larger ones
    use seeded gcd-based splitting.  Deterministic for a fixed seed.
    """
    base = f.ctx
    if ext.lower is None or ext.lower != base:
        raise ContextMismatchError("target is not an extension of the coefficient field")
    m = f.degree
    if m is None or m < 1 or not f.is_monic:
        raise ValueError("expected a monic polynomial of degree >= 1")
    if ext.degree % m != 0:
        raise ValueError(f"degree {m} does not divide extension degree {ext.degree}")
    if not is_irreducible(f):
        raise ValueError("polynomial is reducible")
    if m == 1:
        return ext.from_base(FieldElement._wrap(base, base._neg(f.coeffs[0])))
    if ext.order <= _ROOT_SCAN_LIMIT:
        fc = f.coeffs
        z = ext._zero_raw
        zl = base._zero_raw
        for i in range(ext.order):
            cand = ext._nth(i)
            acc = z
            for c in reversed(fc):
                acc = ext._mul(acc, cand)
                if c != zl:
                    acc = ext._add(acc, ext._from_base_raw(c))
            if acc == z:
                return FieldElement._wrap(ext, cand)
        raise RuntimeError("no root found; irreducibility bookkeeping is broken")
    rng = random.Random(seed)
    Q = ext.order
    h = embed_poly_from_base(f, ext)
    one = Polynomial.one(ext)
    while h.degree > 1:
        u = Polynomial(ext, [ext.random_element(rng) for _ in range(h.degree)])
        if u.is_zero:
            continue
        if Q % 2:
            w = u.pow_mod((Q - 1) // 2, h) - one
        else:
            w = u % h
            s = w
            for _ in range(Q.bit_length() - 2):
                s = (s * s) % h
                w = w + s
        g = h.gcd(w)
        d = g.degree
        if d is not None and 0 < d < h.degree:
            h = g
    return -h.coefficient(0)


class Embedding:
    """Embedding of one extension of a base field into a larger one.

    Determined by the image of the small field's generator, which must be a
    root of the small modulus inside the big field.  project() inverts the
    map and raises ValueError on elements outside the image.
    """

    __slots__ = ("small", "big", "root", "_pows", "_solver")

    def __init__(self, small, big, root):
        if small.lower is None or big.lower is None or small.lower != big.lower:
            raise ContextMismatchError("embeddings need two extensions of one base field")
        if big.degree % small.degree != 0:
            raise ValueError("small degree does not divide big degree")
        if not isinstance(root, FieldElement) or root.ctx != big:
            raise ContextMismatchError("root must be an element of the big field")
        if not evaluate_in_extension(small.modulus_poly(), root).is_zero:
            raise ValueError("root does not satisfy the subfield modulus")
        self.small = small
        self.big = big
        self.root = root
        pows = [big._one_raw]
        for _ in range(1, small.degree):
            pows.append(big._mul(pows[-1], root.raw))
        self._pows = tuple(pows)
        self._solver = LinearSolver(small.lower, self._pows)

    @classmethod
    def find(cls, small, big, *, seed=DEFAULT_SEED):
        root = find_root(small.modulus_poly(), big, seed=seed)
        return cls(small, big, root)

    def __call__(self, a):
        if not isinstance(a, FieldElement) or a.ctx != self.small:
            raise ContextMismatchError("element is not in the small field")
        big = self.big
        zl = self.small.lower._zero_raw
        acc = big._zero_raw
        for c, w in zip(a.raw, self._pows):
            if c != zl:
                acc = big._add(acc, big._scalar_mul(c, w))
        return FieldElement._wrap(big, acc)

    def project(self, b):
        if not isinstance(b, FieldElement) or b.ctx != self.big:
            raise ContextMismatchError("element is not in the big field")
        coords = self._solver.solve(b.raw)
        if coords is None:
            raise ValueError("element is not in the embedded subfield")
        return FieldElement._wrap(self.small, tuple(coords))

    def map_poly(self, f):
        if f.ctx != self.small:
            raise ContextMismatchError("polynomial is not over the small field")
        return Polynomial._wrap(self.big, tuple(self(FieldElement._wrap(self.small, c)).raw for c in f.coeffs))

    def project_poly(self, f):
        if f.ctx != self.big:
            raise ContextMismatchError("polynomial is not over the big field")
        return Polynomial._wrap(
            self.small,
            tuple(self.project(FieldElement._wrap(self.big, c)).raw for c in f.coeffs),
        )


def conjugate_factor_over_subfield(f, k, *, seed=DEFAULT_SEED):
    """Factor a monic irreducible f of degree m over the subfield of degree k | m.

    Returns [h, h^(sigma), ..., h^(sigma^(k-1))] over GF(q^k), where sigma
    raises coefficients to the q-th power.  The product of the factors is f
    with coefficients embedded into GF(q^k).
    """
    base = f.ctx
    m = f.degree
    if m is None or m < 1 or not f.is_monic:
        raise ValueError("expected a monic polynomial of degree >= 1")
    if k < 1 or m % k != 0:
        raise ValueError(f"{k} does not divide the degree {m}")
    if not is_irreducible(f):
        raise ValueError("polynomial is reducible")
    if k == 1:
        return [f]
    ctx_m = base.extension(f, check=False)
    alpha = ctx_m.generator()
    sub = extension_field(base, k, seed=seed)
    emb = Embedding.find(sub, ctx_m, seed=seed)
    d = m // k
    roots = [alpha.frobenius(k * i) for i in range(d)]
    f0 = emb.project_poly(Polynomial.from_roots(ctx_m, roots))
    return [f0.map_coefficients(lambda c, mu=mu: c.frobenius(mu)) for mu in range(k)]


# ---------------------------------------------------------------------------
# Text formats.


def element_to_text(a, _level=0):
    ctx = a.ctx if isinstance(a, FieldElement) else None
    if ctx is None:
        raise TypeError("expected a FieldElement")
    return _raw_to_text(ctx, a.raw, _level)


def _raw_to_text(ctx, raw, level):
    if ctx.lower is None:
        return str(raw)
    if level >= len(_COORD_SEPS):
        raise ValueError("tower too deep for the text format")
    sep = _COORD_SEPS[level]
    return sep.join(_raw_to_text(ctx.lower, c, level + 1) for c in raw)


def element_from_text(ctx, s, _level=0):
    return FieldElement._wrap(ctx, _raw_from_text(ctx, s.strip(), _level))


def _raw_from_text(ctx, s, level):
    if ctx.lower is None:
        try:
            v = int(s)
        except ValueError:
            raise ValueError(f"bad coordinate {s!r}") from None
        if not 0 <= v < ctx.p:
            raise ValueError(f"coordinate {s!r} out of range for GF({ctx.p})")
        return v
    if level >= len(_COORD_SEPS):
        raise ValueError("tower too deep for the text format")
    parts = s.split(_COORD_SEPS[level])
    if len(parts) != ctx.degree:
        raise ValueError(f"expected {ctx.degree} coordinates, got {len(parts)}")
    return tuple(_raw_from_text(ctx.lower, part, level + 1) for part in parts)


def poly_to_text(f):
    if f.is_zero:
        return "0"
    return ",".join(_raw_to_text(f.ctx, c, 0) for c in f.coeffs)


def poly_from_text(ctx, s):
    s = s.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Polynomial._wrap(ctx, ())
    return Polynomial._wrap(
        ctx, _pstrip(ctx, [_raw_from_text(ctx, part, 0) for part in s.split(",")])
    )


def parse_field_spec(s):
    """Parse "p" or "p^e:modulus" into a FieldContext."""
    s = s.strip()
    if "^" not in s:
        try:
            p = int(s)
        except ValueError:
            raise ValueError(f"bad field spec {s!r}") from None
        return prime_field(p)
    head, _, mod_text = s.partition(":")
    p_text, _, e_text = head.partition("^")
    try:
        p, e = int(p_text), int(e_text)
    except ValueError:
        raise ValueError(f"bad field spec {s!r}") from None
    if not mod_text:
        raise ValueError("extension field specs need a modulus, \"p^e:modulus\"")
    base = prime_field(p)
    modulus = poly_from_text(base, mod_text)
    if modulus.degree != e:
        raise ValueError(f"modulus degree {modulus.degree} does not match e={e}")
    return base.extension(modulus)
