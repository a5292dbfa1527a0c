import warnings

import numpy as np
import pytest

from xxzchaos.errors import DegenerateChainError, SizeLimitError
from xxzchaos.hamiltonian import (
    IDENTITY_2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    ChainParams,
    Variant,
    build_boson,
    build_spin,
    total_magnetization,
)
from xxzchaos.reporting import read_operator_csv, write_operator_csv

EQUIVALENCE_GRID = [
    (num_sites, mu, variant)
    for num_sites in range(2, 7)
    for mu in (0.0, 1.0, 1.5)
    for variant in (Variant.NN, Variant.NNN)
    if not (variant is Variant.NNN and num_sites < 3)
]


def test_two_site_nn_matches_hand_expansion():
    h = build_spin(ChainParams(num_sites=2, mu=1.0), Variant.NN)
    want = np.array(
        [
            [0.5, 0, 0, 0],
            [0, -0.5, 1, 0],
            [0, 1, -0.5, 0],
            [0, 0, 0, 0.5],
        ]
    )
    assert np.allclose(h, want, atol=1e-15)


def test_three_site_nnn_is_single_bond():
    # the only NNN bond couples sites 0 and 2; site 1 is an identity factor
    h = build_spin(ChainParams(num_sites=3, mu=1.5), Variant.NNN)
    bond = 0.5 * (
        np.kron(SIGMA_X, np.kron(IDENTITY_2, SIGMA_X))
        + np.kron(SIGMA_Y, np.kron(IDENTITY_2, SIGMA_Y))
        + 1.5 * np.kron(SIGMA_Z, np.kron(IDENTITY_2, SIGMA_Z))
    )
    assert np.allclose(h, bond, atol=1e-15)


def test_coupled_at_zero_lambda_equals_nn():
    params = ChainParams(num_sites=4, mu=1.5, lam=0.0)
    assert np.array_equal(
        build_spin(params, Variant.COUPLED), build_spin(params, Variant.NN)
    )


def test_linearity_in_lambda():
    params = ChainParams(num_sites=5, mu=1.5, lam=2.5)
    coupled = build_spin(params, Variant.COUPLED)
    nn = build_spin(params, Variant.NN)
    nnn = build_spin(params, Variant.NNN)
    assert np.array_equal(coupled, nn + 2.5 * nnn)


def test_exchange_scales_everything():
    base = build_spin(ChainParams(num_sites=3, mu=1.5), Variant.NN)
    doubled = build_spin(ChainParams(num_sites=3, mu=1.5, exchange=2.0), Variant.NN)
    assert np.allclose(doubled, 2.0 * base, atol=1e-15)


class TestBosonAction:
    def test_hopping_and_diagonal_on_single_occupation(self):
        # |01> means occupations n1=0, n0=1, i.e. basis index 1
        h = build_boson(ChainParams(num_sites=2, mu=1.5), Variant.NN)
        assert h[2, 1] == pytest.approx(1.0)  # hops to |10> with amplitude J
        assert h[1, 1] == pytest.approx(-0.75)  # (mu/2) * (2n0-1)(2n1-1) = -mu/2

    def test_empty_occupation_is_diagonal_only(self):
        h = build_boson(ChainParams(num_sites=2, mu=1.5), Variant.NN)
        column = h[:, 0]
        assert column[0] == pytest.approx(0.75)  # (-1)(-1) diagonal factor
        assert np.all(column[1:] == 0)


@pytest.mark.parametrize("num_sites,mu,variant", EQUIVALENCE_GRID)
def test_spin_boson_equivalence(num_sites, mu, variant):
    params = ChainParams(num_sites=num_sites, mu=mu)
    spin = build_spin(params, variant)
    boson = build_boson(params, variant)
    assert np.max(np.abs(spin - boson)) < 1e-12


@pytest.mark.parametrize("builder", [build_spin, build_boson])
def test_nnn_on_two_sites_is_degenerate(builder):
    with pytest.raises(DegenerateChainError):
        builder(ChainParams(num_sites=2, mu=1.0), Variant.NNN)
    with pytest.raises(DegenerateChainError):
        builder(ChainParams(num_sites=2, mu=1.0, lam=1.0), Variant.COUPLED)


@pytest.mark.parametrize("variant", list(Variant))
@pytest.mark.parametrize("mu", [0.0, 1.5])
def test_hermitian_and_traceless(variant, mu):
    h = build_spin(ChainParams(num_sites=4, mu=mu, lam=1.0), variant)
    assert np.max(np.abs(h - h.conj().T)) < 1e-12
    assert abs(np.trace(h)) < 1e-10


@pytest.mark.parametrize("variant", list(Variant))
def test_magnetization_conservation(variant):
    h = build_spin(ChainParams(num_sites=6, mu=1.5, lam=1.0), variant)
    m = total_magnetization(6)
    assert np.linalg.norm(h @ m - m @ h) < 1e-10


class TestTotalMagnetization:
    def test_single_site(self):
        assert np.array_equal(total_magnetization(1), np.diag([-1.0, 1.0]))

    def test_two_sites(self):
        assert np.array_equal(total_magnetization(2), np.diag([-2.0, 0.0, 0.0, 2.0]))

    def test_popcount_rule(self):
        diag = np.diag(total_magnetization(5)).real
        for n in range(32):
            assert diag[n] == 2 * bin(n).count("1") - 5

    def test_rejects_empty_chain(self):
        with pytest.raises(ValueError):
            total_magnetization(0)


class TestChainParams:
    def test_rejects_short_chain(self):
        with pytest.raises(ValueError):
            ChainParams(num_sites=1, mu=1.0)

    def test_rejects_oversized_chain(self):
        with pytest.raises(SizeLimitError):
            ChainParams(num_sites=15, mu=1.0)

    def test_warns_on_large_chain(self):
        with pytest.warns(UserWarning):
            ChainParams(num_sites=11, mu=1.0)

    def test_rejects_negative_lambda(self):
        with pytest.raises(ValueError):
            ChainParams(num_sites=4, mu=1.0, lam=-0.5)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            ChainParams(num_sites=4, mu=np.inf)


def test_operator_csv_round_trip(tmp_path):
    h = build_spin(ChainParams(num_sites=3, mu=1.5, lam=0.7), Variant.COUPLED)
    path = tmp_path / "h.csv"
    write_operator_csv(path, h)
    back = read_operator_csv(path, h.shape[0])
    assert np.array_equal(back, np.where(np.abs(h) > 1e-14, h, 0))
    header = path.read_text().splitlines()[0]
    assert header == "row,col,re,im"


def test_operator_csv_drops_tiny_entries(tmp_path):
    h = np.array([[1e-16, 1.0], [1.0, 0.0]], dtype=complex)
    path = tmp_path / "tiny.csv"
    write_operator_csv(path, h)
    lines = path.read_text().splitlines()
    assert len(lines) == 3  # header + two entries; the 1e-16 is dropped
