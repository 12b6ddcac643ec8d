import json
import shutil

import pytest
from hypothesis import given, settings, strategies as st

from cifano import certify
from cifano.certify import (Certificate, canonical, dumps, make_certificate, read_certificate,
                            verify_certificate, write_certificate)
from cifano.errors import VerificationError
from cifano.invariants import Parameters

P314 = Parameters(3, 1, (4,))


def test_same_certificate_same_bytes(tmp_path):
    cert = make_certificate("rigidity", P314, 1009, 42)
    a = write_certificate(cert, tmp_path / "a.fanocert.json").read_bytes()
    b = write_certificate(cert, tmp_path / "b.fanocert.json").read_bytes()
    assert a == b
    again = make_certificate("rigidity", P314, 1009, 42)
    again.wall_time_ms = cert.wall_time_ms
    assert dumps(again) == dumps(cert)


def test_floats_rejected():
    cert = Certificate(P314, 7, 0, "rigidity", {"rank": 0.5})
    with pytest.raises(TypeError):
        dumps(cert)


def test_big_integers_become_strings():
    assert canonical({"x": 2**60, "y": 5}) == {"x": str(2**60), "y": 5}


def test_committed_fixture_replays(fixtures_dir):
    path = fixtures_dir / "certs" / "rigidity-m3k1d4-p1009-s42.fanocert.json"
    res = verify_certificate(path)
    assert res.valid and res.mismatches == []


def test_tampered_rank_detected(fixtures_dir, tmp_path):
    src = fixtures_dir / "certs" / "rigidity-m3k1d4-p1009-s42.fanocert.json"
    data = json.loads(src.read_text())
    data["payload"]["rank"] = 3
    path = tmp_path / "bad.fanocert.json"
    path.write_text(json.dumps(data))
    res = verify_certificate(path)
    assert not res.valid
    assert res.mismatches == ["payload.rank"]


def test_other_seed_detected(fixtures_dir, tmp_path):
    src = fixtures_dir / "certs" / "rigidity-m3k1d4-p1009-s42.fanocert.json"
    data = json.loads(src.read_text())
    data["seed"] = 43
    path = tmp_path / "moved.fanocert.json"
    path.write_text(json.dumps(data))
    res = verify_certificate(path)
    assert not res.valid
    assert len(res.mismatches) > 10
    assert all(m.startswith("payload.sample") for m in res.mismatches)


def test_unknown_schema_and_garbage(tmp_path, fixtures_dir):
    data = json.loads((fixtures_dir / "certs" / "invariants-m3k1d4-p0-s0.fanocert.json").read_text())
    data["schema_version"] = "99"
    path = tmp_path / "v99.fanocert.json"
    path.write_text(json.dumps(data))
    with pytest.raises(VerificationError, match="schema_version"):
        verify_certificate(path)
    junk = tmp_path / "junk.fanocert.json"
    junk.write_text("{not json")
    with pytest.raises(VerificationError):
        verify_certificate(junk)


def test_write_error_has_path(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    cert = make_certificate("invariants", P314, 0, 0)
    with pytest.raises(OSError, match="file"):
        write_certificate(cert, blocker / "sub" / "x.fanocert.json")


def test_large_tables_are_digested(monkeypatch):
    monkeypatch.setattr(certify, "COEFFICIENT_CAP", 10)
    payload = certify.run_experiment("rigidity", P314, 1009, 42)
    sample = payload["sample"]
    assert set(sample) == {"attempt", "digest", "digest_alg", "entries"}
    assert sample["digest_alg"] == "sha256" and sample["entries"] == 30
    again = certify.run_experiment("rigidity", P314, 1009, 42)
    assert again["sample"]["digest"] == sample["digest"]
    other = certify.run_experiment("rigidity", P314, 1009, 43)
    assert other["sample"]["digest"] != sample["digest"]


json_leaf = st.one_of(st.integers(-2**70, 2**70), st.text(max_size=8), st.booleans(), st.none())
json_tree = st.recursive(json_leaf, lambda children: st.one_of(
    st.lists(children, max_size=4), st.dictionaries(st.text(max_size=6), children, max_size=4)),
    max_leaves=20)


@settings(max_examples=100, deadline=None)
@given(json_tree, st.integers(0, 2**40), st.sampled_from(certify.KINDS))
def test_round_trip(payload, seed, kind):
    cert = Certificate(P314, 1009, seed, kind, {"data": payload}, {"trials": 3}, wall_time_ms=7)
    parsed = Certificate.from_json(json.loads(dumps(cert)))
    assert canonical(parsed) == canonical(cert)
    assert dumps(parsed) == dumps(cert)


def test_read_back(tmp_path):
    cert = make_certificate("singular", Parameters(4, 2, (3,)), 101, 3, {"primes": [101, 211]})
    path = write_certificate(cert, tmp_path / "s.fanocert.json")
    back = read_certificate(path)
    assert back.kind == "singular" and back.options == {"primes": [101, 211]}
    assert verify_certificate(path).valid
