import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetalab.errors import NotAChain
from thetalab.homology import (
    HomologyClass,
    a_class,
    b_class,
    chain_shadow,
    curve_class,
    intersection,
    transvection,
    verify_factorizations,
)
from thetalab.symplectic import igusa_generator, validate_symplectic


def test_intersection_normalization():
    g = 3
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            assert intersection(a_class(i, g), b_class(j, g)) == (1 if i == j else 0)
            assert intersection(a_class(i, g), a_class(j, g)) == 0
            assert intersection(b_class(i, g), b_class(j, g)) == 0
    assert intersection(b_class(1, g), a_class(1, g)) == -1


def test_curve_classes():
    g = 3
    assert curve_class("C", 2, None, g).coords == a_class(2, g).coords
    assert curve_class("C'", 1, None, g).coords == b_class(1, g).coords
    assert curve_class("C''", 3, 1, g).coords == (a_class(3, g) + b_class(1, g)).coords


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4), st.integers(-2, 2))
def test_transvection_symplectic(coords, k):
    x = HomologyClass(coords)
    mat = transvection(x, k)
    validate_symplectic(mat.entries)
    # orientation of the core curve does not matter
    assert transvection(-x, k) == mat


def test_transvection_fixes_core():
    g = 2
    x = a_class(1, g) + b_class(2, g)
    mat = transvection(x, 3)
    assert tuple(mat.apply(x.coords)) == x.coords


def test_squared_twist_is_beta_gg():
    for g in (2, 3):
        assert transvection(a_class(g, g), 2) == igusa_generator("beta", g, g, g)


@pytest.mark.parametrize("g", [2, 3, 4])
def test_factorizations(g):
    report = verify_factorizations(g)
    assert all(report.values()), report


def test_chain_shadow_holds():
    g = 2
    rep = chain_shadow(a_class(1, g), b_class(1, g), a_class(1, g) + a_class(2, g))
    assert rep.holds
    assert rep.boundary is not None


def test_chain_shadow_rejects_non_chain():
    g = 2
    with pytest.raises(NotAChain):
        chain_shadow(a_class(1, g), a_class(2, g), b_class(1, g))


def test_chain_shadow_transported():
    g = 3
    rng = np.random.default_rng(11)
    from thetalab.sampling import random_word, sp_generators

    gens = sp_generators(g)
    base = (a_class(1, g), b_class(1, g), a_class(1, g) + a_class(2, g))
    for _ in range(10):
        w = random_word(gens, rng, 1, 8)
        triple = [HomologyClass(w.apply(x.coords)) for x in base]
        assert chain_shadow(*triple).holds
