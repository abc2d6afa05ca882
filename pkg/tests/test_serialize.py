import json

import numpy as np
import pytest

from wwk import serialize
from wwk.errors import InputError
from wwk.interferometer import DetectorPair, random_pair
from wwk.presets import fock_basis, two_qubit
from wwk.readout import canonical_basis, phase_sweep, standard_basis


def test_pair_round_trip(tmp_path, rng):
    pair = random_pair(rng, 5)
    path = tmp_path / "s.json"
    path.write_text(serialize.dump_json(serialize.pair_to_dict(pair)))
    back = serialize.load_pair(path)
    assert np.allclose(back.chi_a, pair.chi_a, atol=1e-16)
    assert np.allclose(back.chi_b, pair.chi_b, atol=1e-16)


def test_loader_renormalizes_small_drift():
    obj = {"dim": 2, "chi_a": [[1.0 + 5e-7, 0.0], [0.0, 0.0]], "chi_b": [[0.0, 0.0], [0.0, 1.0]]}
    pair = serialize.pair_from_dict(obj)
    assert np.linalg.norm(pair.chi_a) == pytest.approx(1.0, abs=1e-15)
    assert pair.chi_b[1] == 1j


@pytest.mark.parametrize(
    "obj",
    [
        {"dim": 2, "chi_a": [[1.0, 0.0], [0.1, 0.0]], "chi_b": [[1.0, 0.0], [0.0, 0.0]]},
        {"dim": 3, "chi_a": [[1.0, 0.0], [0.0, 0.0]], "chi_b": [[1.0, 0.0], [0.0, 0.0]]},
        {"dim": 2, "chi_a": [[1.0], [0.0, 0.0]], "chi_b": [[1.0, 0.0], [0.0, 0.0]]},
        {"dim": 2, "chi_a": [[1.0, 0.0], [0.0, 0.0]]},
        [1, 2, 3],
    ],
)
def test_loader_rejects(obj):
    with pytest.raises(InputError):
        serialize.pair_from_dict(obj)


def test_malformed_and_missing_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError):
        serialize.load_pair(bad)
    with pytest.raises(InputError):
        serialize.load_pair(tmp_path / "missing.json")


def test_basis_round_trip(tmp_path):
    pair = two_qubit(0.6, 0.8)
    E = canonical_basis(pair)
    path = tmp_path / "b.json"
    path.write_text(serialize.dump_json(serialize.basis_to_dict(E)))
    back = serialize.load_basis(path)
    assert back.labels == E.labels
    assert np.allclose(back.vectors, E.vectors, atol=1e-16)


def test_num_format():
    assert serialize.num(0.1) == "0.10000000000000001"
    assert serialize.num(1.0) == "1"
    assert serialize.num(float("nan")) == "nan"
    assert serialize.json_num(float("nan")) is None


def test_sweep_csv_layout():
    pair = two_qubit(0.6, 0.8)
    text = serialize.sweep_csv(phase_sweep(pair, fock_basis(pair), 4))
    lines = text.split("\n")
    assert lines[0] == "delta_over_pi,P,K,p_0,p_1,p_2,p_3"
    assert len(lines) == 6 and lines[-1] == ""
    assert "\r" not in text
    row = lines[3].split(",")
    assert float(row[0]) == 1.0 and float(row[2]) == pytest.approx(1.0, abs=1e-12)


def test_sweep_json_nan_is_null():
    v = np.array([1.0, 0.0, 0.0])
    sw = phase_sweep(DetectorPair(v, v), standard_basis(3), 4)
    obj = json.loads(serialize.sweep_json(sw))
    assert obj["K"][2] is None
    assert obj["K"][0] == pytest.approx(0.0)
