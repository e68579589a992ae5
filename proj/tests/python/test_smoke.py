"""Smoke tests for the Python bindings."""

import json
import os
import subprocess

import pytest

import isr1


def test_decide_worked_example():
    d = isr1.decide("5,12;0,0")
    assert d.status == "isr1"
    assert d.witness is not None
    assert d.witness.Y.rows() == [[-4, -10], [2, 5]]
    assert d.witness.sign == 1
    assert d.witness.verify(samples=25)


def test_decide_rejections():
    d = isr1.decide([[12, 5], [0, 0]])
    assert d.status == "not_isr1"
    assert d.reason == "clean_criterion_fails"
    assert d.terminal_pair == (12, 5)

    assert isr1.decide("4,2;0,0").reason == "content_not_one"
    assert isr1.decide("1,2;3,4").status == "not_sr1"
    assert isr1.decide("1,0;0,1").status == "unit"


def test_clean_decomposition():
    e, u = isr1.clean_decompose(isr1.Mat2(5, 12, 0, 0))
    assert e.rows() == [[-4, -10], [2, 5]]
    assert u.rows() == [[9, 22], [-2, -5]]
    assert u.det() == -1
    with pytest.raises(ValueError):
        isr1.clean_decompose(isr1.Mat2(12, 5, 0, 0))


def test_bezout_surface():
    fam = isr1.ext_gcd(8, 13)
    assert fam.g == 1
    assert 8 * fam.x0 + 13 * fam.z0 == 1
    assert set(isr1.minimal_pairs(8, 13)) == {(5, -3), (-8, 5)}
    assert isr1.divisibility_isr1(8, 13)
    assert not isr1.divisibility_isr1(13, 18)
    sols = isr1.solve_shifted_product(13, -5, 18, 12)
    assert sols.solutions == [] and not sols.any()
    with pytest.raises(ValueError):
        isr1.minimal_pairs(4, 6)


def test_euclidean_criterion():
    accepted, terminal, steps = isr1.euclidean_criterion(5, 12)
    assert accepted and terminal == (5, 2) and steps == ["shift(2)"]
    accepted, terminal, _ = isr1.euclidean_criterion(12, 5)
    assert not accepted and terminal == (12, 5)


def test_arbitrary_precision_round_trip():
    big = 10**40 + 7
    m = isr1.Mat2(big, 0, 0, big)
    assert m.det() == big * big
    assert m.trace() == 2 * big
    d = isr1.decide(m)
    assert d.status == "not_sr1"
    assert d.det == big * big
    parsed = json.loads(d.to_json())
    assert int(parsed["det"]) == big * big


def test_matrix_algebra():
    a = isr1.Mat2.parse("2,1;0,0")
    assert (a * a).rows() == [[4, 2], [0, 0]]
    assert a.adjugate().rows() == [[0, -1], [0, 2]]
    assert a.content() == 1
    assert (a * a).content() == 2
    assert isr1.decide(a).status == "isr1"
    assert isr1.decide(a * a).status == "not_isr1"


def test_oracle_reports():
    rep = isr1.oracle_full(2)
    assert rep["counts"]["idempotents"] == 8
    assert rep["violations"] == []
    assert all(c["holds"] or c["informational"] for c in rep["claims"])

    targeted = isr1.oracle_targeted(12, [[[2, 0], [0, 0]]])
    row = targeted["targets"][0]
    assert row["clean"] and row["strongly_clean"] and row["left_isr1"]

    ok, failing = isr1.is_left_isr1_mod(12, [[2, 0], [0, 0]])
    assert ok and failing is None

    idems = isr1.enumerate_idempotents(3)
    assert len(idems) == 14


def test_cli_round_trip():
    cli = os.environ.get("ISR1_CLI")
    if not cli:
        pytest.skip("ISR1_CLI not set")
    out = subprocess.run([cli, "decide", "5,12;0,0", "--format", "json"],
                         capture_output=True, text=True, check=True)
    payload = json.loads(out.stdout)
    assert payload["status"] == "isr1"
    assert payload["unitizer_Y"] == [[-4, -10], [2, 5]]
    # fixed seed: byte-identical transcripts
    r1 = subprocess.run([cli, "witness", "2,1;0,0", "--samples", "5"],
                        capture_output=True, text=True, check=True)
    r2 = subprocess.run([cli, "witness", "2,1;0,0", "--samples", "5"],
                        capture_output=True, text=True, check=True)
    assert r1.stdout == r2.stdout
    env = dict(os.environ, ISR1_SEED="99")
    r3 = subprocess.run([cli, "witness", "2,1;0,0", "--samples", "5"],
                        capture_output=True, text=True, check=True, env=env)
    assert "seed:       99" in r3.stdout
