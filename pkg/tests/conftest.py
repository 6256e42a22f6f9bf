import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from skeincoulomb.theoremsuite import RunConfig, run_suites  # noqa: E402


def verdicts(results):
    return {(s.name, c.desc): c.passed for s in results for c in s.checks}


@pytest.fixture(scope="session")
def symbolic_results():
    return run_suites(RunConfig(mode="symbolic", timing=False))


@pytest.fixture(scope="session")
def random_results():
    return run_suites(RunConfig(mode="random", seed=42, timing=False))
