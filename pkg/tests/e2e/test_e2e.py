import json
import subprocess
import sys

import pytest

from splitg2.algebra.fields import RATIONALS, prime_field
from splitg2.lie.characteristic import DEFAULT_PRIMES, characteristic_sweep
from splitg2.lie.dergen import solve_derivations
from splitg2.lie.liestruct import structure_table
from splitg2.lie.verification import run_verification

"""
End to end tests for the whole pipeline.
By default this test suite won't run, you need to explicitly run it with the following command:
    pytest -m e2e

They solve the Leibniz system over every default prime and run the
installed console entry point in a subprocess.
"""


@pytest.mark.e2e
class Teste2e:
    """
    The sweep and the table tests solve from scratch instead of reading the shared cache.
    """

    @pytest.fixture(scope="class")
    def sweep(self):
        return {r.prime: r for r in characteristic_sweep(DEFAULT_PRIMES, max_workers=4)}

    def test_sweep_agrees_everywhere(self, sweep):
        assert sorted(sweep) == sorted(DEFAULT_PRIMES)
        assert all(r.agree for r in sweep.values())

    @pytest.mark.parametrize("p", [5, 7, 11, 101])
    def test_dimension_for_large_primes(self, sweep, p):
        assert sweep[p].nullspace_dim == 14

    @pytest.mark.parametrize("p", [2, 3])
    def test_small_characteristics_are_reported(self, sweep, p):
        assert sweep[p].nullspace_dim >= 14

    @pytest.mark.parametrize("label", ["q", "fp:5", "fp:7", "fp:11", "fp:101"])
    def test_fresh_table_verifies(self, label):
        field = RATIONALS if label == "q" else prime_field(int(label.split(":")[1]))
        space = solve_derivations(field, max_workers=4)
        table = structure_table(space, max_workers=4)
        assert table.cell(1, 2) in ("-2x14", f"{field.canon(-2)}x14")
        assert run_verification(field).ok

    def test_console_entry_point(self):
        result = subprocess.run(
            [sys.executable, "-m", "splitg2", "table", "--format", "json"],
            capture_output=True,
            text=True,
            check=False,
        )
        assert result.returncode == 0, result.stderr
        data = json.loads(result.stdout)
        assert data["brackets"][0] == {"i": 1, "j": 2, "terms": [{"k": 14, "c": "-2"}]}

    def test_console_verify(self):
        result = subprocess.run(
            [sys.executable, "-m", "splitg2", "verify"],
            capture_output=True,
            text=True,
            check=False,
        )
        assert result.returncode == 0, result.stderr
        assert result.stdout.endswith("5/5 checks passed\n")
