import pytest

from splitg2.lie.characteristic import (
    DEFAULT_PRIMES,
    UNKNOWNS,
    CharacteristicReport,
    characteristic_sweep,
    leibniz_divisors,
)


@pytest.fixture(scope="module")
def divisors():
    return leibniz_divisors()


def test_divisors_over_q(divisors):
    # Der(O_s) has dimension 14 over Q
    assert UNKNOWNS - len(divisors) == 14
    assert all(b % a == 0 for a, b in zip(divisors, divisors[1:]))
    assert all(d > 0 for d in divisors)


@pytest.mark.parametrize("p", [5, 7])
def test_sweep_agrees_for_large_primes(divisors, p: int):
    (report,) = characteristic_sweep([p], divisors=divisors)
    assert report.prime == p
    assert report.agree
    assert report.nullspace_dim == 14


@pytest.mark.parametrize("p", [2, 3])
def test_sweep_agrees_for_small_primes(divisors, p: int):
    (report,) = characteristic_sweep([p], divisors=divisors)
    assert report.agree
    assert report.nullspace_dim >= 14


def test_report_to_dict():
    report = CharacteristicReport(prime=3, smith_rank=48, nullspace_dim=17)
    assert not report.agree
    assert report.to_dict() == {
        "prime": 3,
        "smith_rank": 48,
        "dim_from_smith": 16,
        "nullspace_dim": 17,
        "agree": False,
    }


def test_default_primes():
    assert DEFAULT_PRIMES == (2, 3, 5, 7, 11, 101)
