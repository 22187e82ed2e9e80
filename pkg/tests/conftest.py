import os

import pytest

from enthymeme_judge import AArg, LogicConfig, wf, wset
from enthymeme_judge.measures import Context

ATOMS = ("h", "w", "r", "p", "l", "x")

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@pytest.fixture(scope="session")
def ctx():
    return Context(atoms=ATOMS, config=LogicConfig(max_atoms=8, max_premises=8))


@pytest.fixture(scope="session")
def running():
    """The weather enthymeme and its three candidate decodings, plus the
    fourth decoding used by the inference-measure examples."""
    E = AArg(wset(wf("w", "0.7"), wf("r", "0.7"), wf("p", "0.8"), wf("l", "0.9")),
             wf("h", "0.7"))
    D1 = AArg(wset(wf("r", "0.7"), wf("!r | h", "0.8")), wf("h", "0.7"))
    D2 = AArg(wset(wf("p", "0.8"), wf("l", "0.9"), wf("!p | !l | h", "0.9")),
              wf("h", "0.7"))
    D3 = AArg(wset(wf("!r", "0.7"), wf("w", "0.7"), wf("!w | h", "0.8")),
              wf("h", "0.7"))
    D4 = AArg(wset(wf("r", "0.7"), wf("!r | h", "0.8")), wf("r & h & x", "0.7"))
    return {"E": E, "D1": D1, "D2": D2, "D3": D3, "D4": D4}


@pytest.fixture(scope="session")
def problem_file():
    return os.path.join(DATA_DIR, "running_example.json")
