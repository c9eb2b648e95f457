from pathlib import Path

import pytest

import latticekit as lk
from latticekit import catalog

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def case_n1_spec():
    return lk.load_spec(FIXTURES / "case_n1.json")


@pytest.fixture(scope="session")
def case_n2_spec():
    return lk.load_spec(FIXTURES / "case_n2.json")


@pytest.fixture(scope="session")
def case_n1(case_n1_spec):
    return lk.reconstruct(case_n1_spec)


@pytest.fixture(scope="session")
def case_n2(case_n2_spec):
    return lk.reconstruct(case_n2_spec)


@pytest.fixture(scope="session")
def pentagon():
    return catalog.pentagon()


@pytest.fixture(scope="session")
def diamond():
    return catalog.diamond()


@pytest.fixture(scope="session")
def b3():
    return catalog.boolean_lattice(3)


@pytest.fixture(scope="session")
def d12():
    return catalog.divisor_lattice(12)


def length_three_lattices():
    """J(P) over the five 3-element posets: all distributive of length 3."""
    return {
        name: lk.ideals_lattice(p).lattice
        for name, p in catalog.three_element_posets().items()
    }


def distributive_fixture_lattices(case_n1, case_n2):
    """Every bundled distributive lattice, by name."""
    import latticekit.freedist as fd

    out = {f"B{k}": catalog.boolean_lattice(k) for k in range(1, 5)}
    out["D12"] = catalog.divisor_lattice(12)
    for name, l in length_three_lattices().items():
        out[f"len3_{name}"] = l
    for k in (2, 3):
        out[f"free{k}_restricted"] = fd.generate_lattice(k)
        out[f"free{k}_extended"] = fd.generate_lattice(k, extended=True)
    out["case_n2"] = case_n2.lattice
    out["case_n1"] = case_n1.lattice
    return out
