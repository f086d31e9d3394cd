import math

import numpy as np
import pytest

import rankrange as rr


def test_paper_example_power_inequality():
    a = rr.paper_example()
    r_a, _ = rr.k_rank_radii(a, 2, 2048)
    r_a2, _ = rr.k_rank_radii(a @ a, 2, 2048)
    assert r_a < 1.0 < r_a2


def test_hermitian_segment():
    out = rr.compute_range(np.diag([1.0, 2, 3, 4, 5]), k=2, grid=1024)
    assert out["kind"] == "segment"
    assert out["r_k"] == pytest.approx(4.0, abs=1e-9)
    assert out["r_tilde_k"] == pytest.approx(2.0, abs=1e-9)
    assert rr.membership(np.diag([1.0, 2, 3, 4, 5]), 2, 3.0)


def test_empty_range_raises():
    assert rr.compute_range(rr.jordan_block(2), k=2)["kind"] == "empty"
    with pytest.raises(rr.EmptinessError):
        rr.k_rank_radii(rr.jordan_block(2), 2)


def test_eigensolver_matches_numpy():
    rng = np.random.default_rng(0)
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    h = (g + g.conj().T) / 2
    values, vectors = rr.eig_hermitian_desc(h)
    assert np.allclose(values, np.sort(np.linalg.eigvalsh(h))[::-1], atol=1e-12)
    assert np.allclose(vectors.conj().T @ vectors, np.eye(4), atol=1e-12)
    assert rr.spectral_norm(g) == pytest.approx(np.linalg.norm(g, 2), rel=1e-12)
    assert rr.support_value(rr.jordan_block(3), 1, 0.3) == pytest.approx(math.sqrt(2) / 2)


def test_trace_and_bounds():
    a = np.diag([1.0, 2, 3, 4, 5]).astype(complex)
    e = np.eye(5)
    family = [e[:, [0, 1, 2, 3]], e[:, [1, 2, 3, 4]]]
    t = rr.intersection_trace(a, 2, family, grid=512)
    assert t["q"] == pytest.approx([4.0, 4.0], abs=1e-9)
    assert t["t"] == pytest.approx([1.0, 2.0], abs=1e-9)
    b = rr.proposition_bounds(a, 2, family, grid=512)
    assert b["outer_bound_holds"] and b["inner_bound_holds"]

    fam = rr.sample_family(5, 4, 3, seed=1)
    assert len(fam) == 3
    assert np.allclose(fam[0].conj().T @ fam[0], np.eye(4), atol=1e-10)


def test_witness_round_trip():
    a = rr.paper_example()
    found = rr.find_witness(a, 2, 0.1 + 0.1j)
    assert found["found"]
    n = found["N"]
    assert np.linalg.norm(n.conj().T @ a @ n - (0.1 + 0.1j) * np.eye(2)) <= 1e-9
    assert rr.verify_witness(a, n, 0.1 + 0.1j, 1e-9)
    with pytest.raises(rr.StructureError):
        rr.verify_witness(a, 2 * n, 0.1 + 0.1j, 1e-9)


def test_bad_input():
    with pytest.raises(rr.DimensionError):
        rr.compute_range(np.zeros((2, 3)), k=1)
    with pytest.raises(rr.ParameterError):
        rr.compute_range(np.eye(3), k=4)
