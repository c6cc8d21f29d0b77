import numpy as np
import pytest

from thetalab.errors import (
    IndexOutOfRange,
    NotSiegel,
    NotSymplectic,
    OddDimension,
)
from thetalab.symplectic import (
    Characteristic,
    RootOfUnity,
    SiegelPoint,
    SymplecticMatrix,
    all_igusa_generators,
    char_apply,
    fixes_bg_mod2,
    igusa_generator,
    in_gamma_p2,
    in_level,
    is_symplectic_mod2,
    j_matrix,
    orbit_index,
    psi,
    siegel_apply,
    stabilizer_generators_mod2,
)


def test_j_matrix_blocks():
    J = j_matrix(2)
    assert np.array_equal(J[:2, 2:].astype(int), np.eye(2, dtype=int))
    assert np.array_equal(J[2:, :2].astype(int), -np.eye(2, dtype=int))


def test_identity_and_product():
    g = 3
    one = SymplecticMatrix.identity(g)
    for mat in all_igusa_generators(g):
        assert mat @ mat.inverse() == one
        assert (mat.inverse() @ mat) == one
        assert mat.transpose().transpose() == mat


def test_non_symplectic_rejected():
    bad = np.eye(4, dtype=object)
    bad[0, 1] = 1
    with pytest.raises(NotSymplectic):
        SymplecticMatrix(bad)
    with pytest.raises(OddDimension):
        SymplecticMatrix(np.eye(3, dtype=object))


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_igusa_generators_level2(g):
    count = 0
    for mat in all_igusa_generators(g):
        count += 1
        assert in_level(mat, 2)
        assert np.array_equal(
            mat.mod(2).astype(np.int64), np.eye(2 * g, dtype=np.int64)
        )
    # alpha: g^2, beta and gamma: g(g+1)/2 each
    assert count == g * g + g * (g + 1)


def test_igusa_generator_index_checks():
    with pytest.raises(IndexOutOfRange):
        igusa_generator("alpha", 0, 1, 2)
    with pytest.raises(IndexOutOfRange):
        igusa_generator("beta", 2, 1, 2)  # needs i <= j
    with pytest.raises(IndexOutOfRange):
        igusa_generator("nope", 1, 1, 2)


def test_psi_values():
    for g in (2, 3, 4):
        beta_gg = igusa_generator("beta", g, g, g)
        assert psi(beta_gg) == 1
        assert psi(beta_gg @ beta_gg) == 0
        assert in_gamma_p2(beta_gg)


def test_psi_additivity_small():
    g = 2
    rng = np.random.default_rng(3)
    gens = all_igusa_generators(g)
    words = []
    for _ in range(30):
        w = SymplecticMatrix.identity(g)
        for _ in range(int(rng.integers(1, 8))):
            w = w @ gens[int(rng.integers(len(gens)))]
        words.append(w)
    for a in words[:10]:
        for b in words[10:20]:
            c = a @ b
            lhs = int(c.entries[g - 1, 2 * g - 1])
            rhs = int(a.entries[g - 1, 2 * g - 1]) + int(b.entries[g - 1, 2 * g - 1])
            assert (lhs - rhs) % 4 == 0


def test_char_apply_worked_example():
    g = 2
    m = Characteristic((0, 0, 0, 1))
    out = char_apply(igusa_generator("gamma", g, g, g), m)
    assert out.entries == (0, 0, 0, 3)


def test_characteristic_parity():
    assert Characteristic((0, 0, 0, 1)).is_even()
    assert not Characteristic((0, 1, 0, 1)).is_even()
    assert Characteristic((1, 1, 1, 1)).parity() == 0


def test_siegel_point_validation():
    with pytest.raises(NotSiegel):
        SiegelPoint(np.array([[1.0 + 1j, 2.0], [0.0, 1j]]))
    with pytest.raises(NotSiegel):
        SiegelPoint(np.array([[1.0 - 1j]]))
    tau = SiegelPoint(np.array([[0.5 + 1j]]))
    assert tau.lambda_min == pytest.approx(1.0)


def test_siegel_apply_translation():
    g = 2
    tau = SiegelPoint(1j * np.eye(g))
    moved = siegel_apply(igusa_generator("gamma", g, g, g), tau)
    diff = moved.entries - tau.entries
    assert diff[g - 1, g - 1] == pytest.approx(2.0)


def test_root_of_unity_arithmetic():
    i = RootOfUnity(2)
    assert (i * i).k == 4
    assert (i / i).k == 0
    assert (i**3).k == 6
    assert i.order() == 4
    assert RootOfUnity(1).order() == 8
    assert RootOfUnity(0).value == pytest.approx(1.0)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_stabilizer_generators_fix_bg(g):
    for mat in stabilizer_generators_mod2(g):
        assert is_symplectic_mod2(mat)
        assert fixes_bg_mod2(mat)


@pytest.mark.parametrize("g,size", [(1, 3), (2, 15), (3, 63)])
def test_orbit_index(g, size):
    cert = orbit_index(g)
    assert cert.orbit_size == size
    assert cert.stabilizer_fixes_class
