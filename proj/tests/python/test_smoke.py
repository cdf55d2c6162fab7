import json
import math
import os
from pathlib import Path

import pytest

import explicit_lab as el

DATA = Path(os.environ.get("EXPLICIT_LAB_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture(scope="module")
def primes():
    return el.sieve(1_000_000)


@pytest.fixture(scope="module")
def zeros():
    return el.load_zeros(str(DATA / "zeros_10k.txt"))


def test_sieve_basics(primes):
    small = el.sieve(30)
    assert small.prime_powers() == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
    assert small.lambda_(8) == pytest.approx(math.log(2))
    assert small.lambda_(6) == 0.0
    assert len(primes) == 78734
    assert primes.psi(1e6) == pytest.approx(999586.597495633, abs=1e-6)
    with pytest.raises(el.CapacityError):
        el.sieve(1)


def test_alpha_is_odd(primes):
    for x in (0.3, 2.0, 7.5):
        assert el.alpha(-x, primes) == -el.alpha(x, primes)


def test_special_values():
    assert abs(el.log_gamma(5.0) - math.log(24.0)) < 1e-14
    value, err = el.zeta(2.0)
    assert abs(value - math.pi**2 / 6) < 1e-10
    assert err >= 0.0
    assert el.theta(-17.3) == -el.theta(17.3)
    assert abs(el.rs_z(14.134725141734694)) < 1e-8


def test_zero_table(zeros):
    assert len(zeros) == 10_000
    three = el.ingest_zeros_text("14.134725141\n21.022039639\n25.010857580\n")
    assert len(three) == 3
    assert el.ingest_zeros_text(el.serialize_zeros(three)) == three
    with pytest.raises(el.OrderError):
        el.ingest_zeros_text("21.0\n14.1\n")
    with pytest.raises(el.ParseError):
        el.ingest_zeros_text("14.1\nabc\n")
    report = el.counting_check(zeros, 100)
    assert report["pass"] is True
    assert report["max_deviation"] <= 3.0


def test_find_zeros_matches_table(zeros):
    found = el.find_zeros(10.0, 30.0)
    assert len(found) == 3
    for a, b in zip(found, zeros.ordinates[:3]):
        assert abs(a - b) < 1e-6


def test_test_functions():
    fn = el.parse_test_function("gausspair:beta=0.25,x0=0.6931")
    assert fn.spec() == "gausspair:x0=0.6931,beta=0.25"
    assert fn.parity == "even"
    value, _ = el.fourier_quadrature(el.hermite_combo([1.0]), 0.4)
    assert abs(value - el.hermite_fn(0, 0.4)) < 1e-8
    with pytest.raises(el.DomainError):
        el.dilated_gaussian(0.0)


def test_poisson_comb():
    comb = el.dirac_comb(50)
    fn = el.dilated_gaussian(1.0)
    t = el.pair(comb, fn, "time")["total"]
    f = el.pair(comb, fn, "freq")["total"]
    assert abs(t - f) < 1e-10


def test_verify_pair_and_negative_control(zeros, primes):
    fn = el.gaussian_pair(math.log(2.0), 0.25)
    ok = el.verify_pair(fn, zeros, primes, 1e-6)
    assert ok["pass"] is True
    assert abs(ok["residual"]) <= ok["budget"]
    bad = el.verify_pair(fn, zeros.without(0), primes, 1e-6)
    assert bad["pass"] is False


def test_probe_and_poles(primes):
    r = el.probe(1.0, primes)
    assert r["mismatch"] < 1e-8
    assert abs(el.probe_closed_form(1.0) - math.pi / math.sqrt(2.0)) < 1e-14
    poles = el.pole_cancellation(0.1, 256)
    assert poles["pass"] is True
    with pytest.raises(el.DomainError):
        el.probe(0.5, primes)


def test_cli_in_process():
    code, out, err = el.run_cli(["--no-meta", "theta", "--t", "20"])
    assert code == 0, err
    row = json.loads(out.splitlines()[0])
    assert row["command"] == "theta"
    code, _, err = el.run_cli(["--bogus"])
    assert code == 2
    assert "error" in err
