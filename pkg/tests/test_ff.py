import random

import pytest
from hypothesis import given, strategies as st

import compoz as cz
from compoz.ff import ContextMismatchError, evaluate_in_extension


def _contexts():
    F2 = cz.prime_field(2)
    F3 = cz.prime_field(3)
    gf8 = F2.extension(cz.poly_from_text(F2, "1,1,0,1"))
    gf9 = F3.extension(cz.poly_from_text(F3, "1,0,1"))
    gf4 = F2.extension(cz.poly_from_text(F2, "1,1,1"))
    tower = cz.extension_field(gf4, 3, seed=0)
    return [F3, gf8, gf9, tower]


@given(st.data())
def test_field_axioms(data):
    ctx = data.draw(st.sampled_from(_contexts()))
    idx = st.integers(min_value=0, max_value=ctx.order - 1)
    a = ctx.nth_element(data.draw(idx))
    b = ctx.nth_element(data.draw(idx))
    c = ctx.nth_element(data.draw(idx))
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ctx.zero
    if not a.is_zero:
        assert a * (ctx.one / a) == ctx.one
        assert (a / a) == ctx.one


@given(st.data())
def test_frobenius_power_order(data):
    ctx = data.draw(st.sampled_from(_contexts()))
    a = ctx.nth_element(data.draw(st.integers(0, ctx.order - 1)))
    q = ctx.subfield_order
    assert a ** (q**ctx.degree) == a
    assert a.frobenius(0) == a
    assert a.frobenius(ctx.degree) == a
    assert a.frobenius(1) == a**q


@given(st.data())
def test_frobenius_composes(data):
    ctx = data.draw(st.sampled_from(_contexts()))
    a = ctx.nth_element(data.draw(st.integers(0, ctx.order - 1)))
    i = data.draw(st.integers(-3, 8))
    j = data.draw(st.integers(-3, 8))
    assert a.frobenius(i).frobenius(j) == a.frobenius(i + j)


def test_mod3_sum(F3):
    assert F3.element(2) + F3.element(2) == F3.element(1)


def test_frobenius_on_quadratic_generator(F2):
    ctx = F2.extension(cz.poly_from_text(F2, "1,1,1"))
    alpha = ctx.generator()
    assert alpha.frobenius(1) == alpha + 1


def test_division_by_zero(F3):
    with pytest.raises(ZeroDivisionError):
        F3.one / F3.zero


def test_context_mismatch(F2, F3):
    with pytest.raises(ContextMismatchError):
        F2.one + F3.one
    gf4 = F2.extension(cz.poly_from_text(F2, "1,1,1"))
    with pytest.raises(ContextMismatchError):
        gf4.one + F2.one  # base elements need an explicit from_base


def test_from_base_to_base_round_trip(F3):
    gf9 = F3.extension(cz.poly_from_text(F3, "1,0,1"))
    for v in range(3):
        lifted = gf9.from_base(F3.element(v))
        assert gf9.to_base(lifted) == F3.element(v)
    with pytest.raises(ValueError):
        gf9.to_base(gf9.generator())


# -- irreducibility ------------------------------------------------------------


def test_irreducible_known_cases(F2, F3):
    assert cz.is_irreducible(cz.poly_from_text(F2, "1,1,1"))
    assert not cz.is_irreducible(cz.poly_from_text(F2, "1,0,1"))  # (X+1)^2
    assert cz.is_irreducible(cz.poly_from_text(F3, "2,0,1,0,1"))


def test_irreducible_requires_monic(F3):
    with pytest.raises(ValueError):
        cz.is_irreducible(cz.poly_from_text(F3, "1,2"))
    with pytest.raises(ValueError):
        cz.is_irreducible(cz.Polynomial(F3, [1]))


@given(st.data())
def test_irreducible_agrees_with_trial_division(data):
    # monic polynomials with q^deg up to 2^14
    ctx = data.draw(st.sampled_from([cz.prime_field(2), cz.prime_field(3)]))
    deg = data.draw(st.integers(2, 14 if ctx.p == 2 else 8))
    idx = data.draw(st.integers(0, ctx.order**deg - 1))
    coeffs = []
    v = idx
    for _ in range(deg):
        coeffs.append(v % ctx.order)
        v //= ctx.order
    f = cz.Polynomial(ctx, coeffs + [1])
    factors = cz.naive_factor(f)
    brute = len(factors) == 1 and factors[0][1] == 1
    assert cz.is_irreducible(f) == brute


def test_random_irreducible_contract(F2):
    f = cz.random_irreducible(F2, 6, seed=3)
    assert f.degree == 6 and f.is_monic and cz.is_irreducible(f)
    assert f == cz.random_irreducible(F2, 6, seed=3)
    g = cz.random_irreducible(F2, 1, seed=0)
    assert g.degree == 1


# -- roots, minimal polynomials, degrees ----------------------------------------


def test_find_root_linear(F3):
    ctx = cz.extension_field(F3, 4, seed=0)
    f = cz.poly_from_text(F3, "1,1")  # X + 1
    r = cz.find_root(f, ctx)
    assert r == ctx.from_base(F3.element(2))


def test_find_root_scan(F2):
    ctx = cz.extension_field(F2, 6, seed=0)
    f = cz.poly_from_text(F2, "1,1,1")
    rho = cz.find_root(f, ctx)
    assert (rho * rho + rho + 1).is_zero
    conjugates = {rho, rho.frobenius(1)}
    assert len(conjugates) == 2


def test_find_root_split_path(F3):
    # GF(3^12) is past the scan limit, so this exercises the gcd splitting
    ctx = cz.extension_field(F3, 12, seed=0)
    assert ctx.order > 1 << 16
    f = cz.poly_from_text(F3, "2,0,1,0,1")
    rho = cz.find_root(f, ctx)
    assert evaluate_in_extension(f, rho).is_zero
    assert rho == cz.find_root(f, ctx)  # deterministic
    roots = {rho.frobenius(k) for k in range(4)}
    assert len(roots) == 4


def test_find_root_split_path_even_characteristic(F2):
    # GF(2^20) is past the scan limit; splitting uses the trace map there
    ctx = cz.extension_field(F2, 20, seed=0)
    assert ctx.order > 1 << 16
    f = cz.random_irreducible(F2, 4, seed=1)
    rho = cz.find_root(f, ctx)
    assert evaluate_in_extension(f, rho).is_zero
    assert rho == cz.find_root(f, ctx)


def test_find_root_divisibility_error(F2):
    ctx = cz.extension_field(F2, 4, seed=0)
    f = cz.poly_from_text(F2, "1,1,0,1")
    with pytest.raises(ValueError):
        cz.find_root(f, ctx)


def test_minimal_polynomial_round_trip(F2):
    f = cz.poly_from_text(F2, "1,1,0,1")
    ctx = cz.extension_field(F2, 6, seed=1)
    rho = cz.find_root(f, ctx)
    assert cz.minimal_polynomial(rho) == f
    assert evaluate_in_extension(cz.minimal_polynomial(rho), rho).is_zero


def test_minimal_polynomial_base_element(F3):
    gf9 = cz.extension_field(F3, 2, seed=0)
    a = gf9.from_base(F3.element(2))
    assert cz.minimal_polynomial(a) == cz.poly_from_text(F3, "1,1")
    assert cz.degree_over_base(a) == 1


@given(st.data())
def test_degree_divides_extension(data):
    ctx = cz.extension_field(cz.prime_field(2), 6, seed=0)
    a = ctx.nth_element(data.draw(st.integers(0, ctx.order - 1)))
    r = cz.degree_over_base(a)
    assert ctx.degree % r == 0
    assert cz.minimal_polynomial(a).degree == r
    assert cz.degree_over_base(a.frobenius(1)) == r


def test_degree_of_zero(F3):
    gf9 = cz.extension_field(F3, 2, seed=0)
    assert cz.degree_over_base(gf9.zero) == 1


def test_degree_of_cubic_generator(F2):
    ctx = F2.extension(cz.poly_from_text(F2, "1,1,0,1"))
    assert cz.degree_over_base(ctx.generator()) == 3


# -- subfield conjugate factorization --------------------------------------------


def test_conjugate_factor_trivial(F3, worked):
    assert cz.conjugate_factor_over_subfield(worked.f, 1) == [worked.f]


def test_conjugate_factor_full_split(F2):
    f = cz.poly_from_text(F2, "1,1,0,1")
    parts = cz.conjugate_factor_over_subfield(f, 3)
    assert len(parts) == 3 and all(h.degree == 1 for h in parts)


def test_conjugate_factor_quadratic_split(worked):
    parts = cz.conjugate_factor_over_subfield(worked.f, 2)
    assert len(parts) == 2
    sub = parts[0].ctx
    assert sub.degree == 2
    assert all(h.degree == 2 and cz.is_irreducible(h) for h in parts)
    product = parts[0] * parts[1]
    embedded = cz.Polynomial(sub, [c.to_int() for c in worked.f.coefficients()])
    assert product == embedded
    # the two factors are coefficient-wise Frobenius images of each other
    twisted = parts[0].map_coefficients(lambda c: c.frobenius(1))
    assert twisted == parts[1]


def test_conjugate_factor_rejects_bad_k(worked):
    with pytest.raises(ValueError):
        cz.conjugate_factor_over_subfield(worked.f, 3)


# -- embeddings and flattening ----------------------------------------------------


def test_embedding_round_trip(F3):
    small = cz.extension_field(F3, 2, seed=0)
    big = cz.extension_field(F3, 6, seed=1)
    emb = cz.Embedding.find(small, big)
    rng = random.Random(0)
    for _ in range(20):
        a = small.random_element(rng)
        b = small.random_element(rng)
        assert emb.project(emb(a)) == a
        assert emb(a * b) == emb(a) * emb(b)
        assert emb(a + b) == emb(a) + emb(b)
    outside = cz.random_normal_element(big, seed=0)
    if cz.degree_over_base(outside) == 6:
        with pytest.raises(ValueError):
            emb.project(outside)


def test_flatten_is_isomorphism(F2):
    gf4 = F2.extension(cz.poly_from_text(F2, "1,1,1"))
    tower = cz.extension_field(gf4, 3, seed=0)
    flat, to_flat, from_flat = tower.flatten()
    assert flat.order == tower.order and flat.depth == 1
    rng = random.Random(1)
    for _ in range(15):
        a = tower.random_element(rng)
        b = tower.random_element(rng)
        assert to_flat(a * b) == to_flat(a) * to_flat(b)
        assert to_flat(a + b) == to_flat(a) + to_flat(b)
        assert from_flat(to_flat(a)) == a
    ext = tower.extension(cz.random_irreducible(tower, 2, seed=2))
    assert ext.order == tower.order**2 and ext.depth == 2


# -- zero polynomial and text formats ----------------------------------------------


def test_zero_polynomial_degree_sentinel(F3):
    z = cz.Polynomial(F3, [0, 0])
    assert z.degree is None and z.is_zero
    assert cz.poly_to_text(z) == "0"


def test_poly_text_example(F3):
    f = cz.poly_from_text(F3, "2,1,0,1")
    assert f.degree == 3
    assert f.coefficient(0) == F3.element(2)
    assert cz.poly_to_text(f) == "2,1,0,1"


@given(st.data())
def test_poly_text_round_trip(data):
    ctx = data.draw(st.sampled_from(_contexts()))
    deg = data.draw(st.integers(0, 5))
    coeffs = [
        ctx.nth_element(data.draw(st.integers(0, ctx.order - 1)))
        for _ in range(deg + 1)
    ]
    f = cz.Polynomial(ctx, coeffs)
    assert cz.poly_from_text(ctx, cz.poly_to_text(f)) == f


def test_element_text_round_trip(F2):
    gf4 = F2.extension(cz.poly_from_text(F2, "1,1,1"))
    tower = cz.extension_field(gf4, 3, seed=0)
    for i in (0, 1, 17, 63):
        a = tower.nth_element(i)
        assert cz.element_from_text(tower, cz.element_to_text(a)) == a


def test_parse_field_spec():
    assert cz.parse_field_spec("3").order == 3
    gf4 = cz.parse_field_spec("2^2:1,1,1")
    assert gf4.order == 4 and gf4.degree == 2
    assert gf4.spec_string() == "2^2:1,1,1"
    with pytest.raises(ValueError):
        cz.parse_field_spec("4")
    with pytest.raises(ValueError):
        cz.parse_field_spec("2^2:1,1,1,1")
    with pytest.raises(ValueError):
        cz.parse_field_spec("2^3")


def test_polynomial_divmod_gcd(F3):
    f = cz.poly_from_text(F3, "2,0,1,0,1")
    g = cz.poly_from_text(F3, "1,2,0,1")
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree
    assert f.gcd(g).degree == 0
    h = f * g
    assert h.gcd(f) == f
