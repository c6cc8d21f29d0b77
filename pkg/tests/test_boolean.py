import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetalab.boolean import (
    BooleanPolynomial,
    abar,
    b3_space,
    bar_of_class,
    bbar,
    bp_mul,
    coinvariants,
    contraction,
    johnson_mu_reference,
    monomial_basis,
    sp2_action,
)
from thetalab.errors import (
    DegreeOverflow,
    GeneratorNotInStabilizer,
    NotSymplecticMod2,
)
from thetalab.symplectic import stabilizer_generators_mod2


def _bar_recursive(v, g):
    """Expand bar(sum of basis classes) one basis vector at a time using
    bar(x+y) = bar(x) + bar(y) + x.y."""
    support = [k for k in range(2 * g) if v[k] % 2]
    out = BooleanPolynomial.zero(g)
    acc = [0] * (2 * g)
    for k in support:
        pairing = 0
        for j in range(2 * g):
            if acc[j]:
                if abs(j - k) == g:
                    pairing ^= 1
        out = out + BooleanPolynomial.variable(k, g)
        if pairing:
            out = out + BooleanPolynomial.one(g)
        acc[k] ^= 1
    return out


def test_bar_of_class_examples():
    g = 3
    assert bar_of_class([1, 0, 0, 0, 0, 0]) == abar(1, g)
    assert bar_of_class([1, 0, 0, 1, 0, 0]) == abar(1, g) + bbar(1, g) + BooleanPolynomial.one(g)
    assert bar_of_class([1, 1, 0, 0, 0, 0]) == abar(1, g) + abar(2, g)


def test_bar_closed_form_exhaustive_g2():
    g = 2
    for v in range(16):
        vec = [(v >> k) & 1 for k in range(4)]
        assert bar_of_class(vec) == _bar_recursive(vec, g)


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 5), st.data())
def test_bar_closed_form_random(g, data):
    vec = data.draw(st.lists(st.integers(0, 1), min_size=2 * g, max_size=2 * g))
    assert bar_of_class(vec) == _bar_recursive(vec, g)


def test_bp_mul_square_free():
    g = 3
    assert bp_mul(abar(1, g), abar(1, g)) == abar(1, g)
    prod = bp_mul(abar(1, g), bbar(1, g))
    assert prod.degree == 2
    alpha = BooleanPolynomial.zero(g)
    for i in range(1, g + 1):
        alpha = alpha + bp_mul(abar(i, g), bbar(i, g))
    out = bp_mul(alpha, abar(g, g))
    expected = bp_mul(abar(g, g), bbar(g, g))
    for i in range(1, g):
        expected = expected + bp_mul(bp_mul(abar(i, g), bbar(i, g)), abar(g, g))
    assert out == expected


def test_bp_mul_degree_overflow():
    g = 3
    cubic = bp_mul(bp_mul(abar(1, g), abar(2, g)), abar(3, g))
    with pytest.raises(DegreeOverflow):
        bp_mul(cubic, bbar(1, g))


def test_sp2_action_worked_examples():
    g = 3
    e = np.eye(2 * g, dtype=np.int64)
    e1 = e.copy()
    e1[0, g] = 1  # B_1 -> B_1 + A_1
    lhs = sp2_action(e1, bp_mul(bbar(1, g), abar(g, g)))
    rhs = bp_mul(bbar(1, g) + abar(1, g) + BooleanPolynomial.one(g), abar(g, g))
    assert lhs == rhs
    e2 = e.copy()
    e2[g, 0] = 1  # A_1 -> A_1 + B_1
    lhs = sp2_action(e2, bp_mul(abar(1, g), abar(g, g)))
    rhs = bp_mul(abar(1, g) + bbar(1, g) + BooleanPolynomial.one(g), abar(g, g))
    assert lhs == rhs


def test_sp2_action_rejects_non_symplectic():
    g = 2
    bad = np.eye(4, dtype=np.int64)
    bad[0, 1] = 1
    with pytest.raises(NotSymplecticMod2):
        sp2_action(bad, abar(1, g))


def test_sp2_action_is_group_action():
    g = 3
    rng = np.random.default_rng(5)
    gens = stabilizer_generators_mod2(g)
    masks = monomial_basis(g)
    for _ in range(20):
        s = gens[int(rng.integers(len(gens)))]
        t = gens[int(rng.integers(len(gens)))]
        st_ = (s @ t) % 2
        p = BooleanPolynomial(g, (masks[int(rng.integers(len(masks)))],))
        assert sp2_action(st_, p) == sp2_action(s, sp2_action(t, p))


def test_sp2_action_preserves_degree_filtration():
    g = 3
    gens = stabilizer_generators_mod2(g)
    for m in monomial_basis(g):
        p = BooleanPolynomial(g, (m,))
        d = p.degree
        for s in gens[:6]:
            assert sp2_action(s, p).degree <= d


@pytest.mark.parametrize(
    "g,r,dim", [(3, 1, 42), (4, 1, 93), (5, 1, 176)]
)
def test_ambient_dimensions(g, r, dim):
    assert b3_space(g, r).ambient_dimension == dim


def test_r0_quotient_dimension():
    space = b3_space(4, 0)
    assert space.dimension == 93 - space.span.rank
    assert space.span.rank > 0


def test_trivial_coinvariants_full_dimension():
    g = 3
    space = b3_space(g, 1)
    dim, reps, proj = coinvariants(space, [np.eye(2 * g, dtype=np.int64)])
    assert dim == space.ambient_dimension


def test_coinvariants_rejects_off_stabilizer():
    g = 3
    off = np.eye(2 * g, dtype=np.int64)
    # transvection about A_g moves B_g
    from thetalab.symplectic import off_stabilizer_generator_mod2

    with pytest.raises(GeneratorNotInStabilizer):
        coinvariants(b3_space(g, 1), [off_stabilizer_generator_mod2(g)])


@pytest.mark.parametrize("g,r,dim", [(4, 1, 1), (4, 0, 0), (5, 1, 1), (5, 0, 1)])
def test_coinvariant_dimensions(g, r, dim):
    space = b3_space(g, r)
    d, reps, proj = coinvariants(space, stabilizer_generators_mod2(g))
    assert d == dim
    mono = bp_mul(bp_mul(abar(1, g), bbar(1, g)), abar(g, g))
    if dim == 1:
        assert proj(mono)
        assert proj(johnson_mu_reference(g)) == proj(mono)
    else:
        assert not proj(mono)


def test_contraction_values():
    g = 4
    assert contraction(bp_mul(bp_mul(abar(1, g), bbar(1, g)), abar(g, g))) == 1
    assert contraction(bp_mul(bp_mul(abar(1, g), abar(2, g)), abar(3, g))) == 0
    assert contraction(BooleanPolynomial.one(g)) == 0
    assert contraction(johnson_mu_reference(g)) == 1


def test_contraction_invariance_g3():
    g = 3
    gens = stabilizer_generators_mod2(g)
    for m in monomial_basis(g):
        if bin(m).count("1") != 3:
            continue
        v = BooleanPolynomial(g, (m,))
        for s in gens:
            assert contraction(sp2_action(s, v)) == contraction(v)


def test_contraction_vanishes_on_quotient_g5():
    # the r=0 quotient relations must be invisible to the contraction at odd
    # genus, otherwise the induced map would be ill-defined
    g = 5
    alpha = BooleanPolynomial.zero(g)
    for i in range(1, g + 1):
        alpha = alpha + bp_mul(abar(i, g), bbar(i, g))
    for k in range(2 * g):
        assert contraction(bp_mul(alpha, BooleanPolynomial.variable(k, g))) == 0


def test_johnson_mu_reference_form():
    g = 4
    x = bp_mul(abar(1, g), bbar(1, g))
    assert johnson_mu_reference(g) == bp_mul(x, abar(g, g)) + x
