import random

import pytest

import latticekit as lk
import latticekit.freedist as fd
from latticekit import catalog

from conftest import distributive_fixture_lattices


class TestModularity:
    def test_pentagon(self, pentagon):
        rep = lk.is_modular(pentagon)
        assert not rep.modular
        assert rep.pentagon == ("0", "a", "c", "b", "1")
        assert rep.violation is not None
        assert all(rep.criteria[k] is False for k in rep.criteria)

    def test_diamond(self, diamond):
        rep = lk.is_modular(diamond)
        assert rep.modular and rep.pentagon is None

    def test_case_n1(self, case_n1):
        assert lk.is_modular(case_n1.lattice).modular

    def test_criteria_agree_on_fixtures(self, case_n1, case_n2, pentagon, diamond):
        lattices = list(distributive_fixture_lattices(case_n1, case_n2).values())
        lattices += [pentagon, diamond]
        for l in lattices:
            rep = lk.is_modular(l)
            assert len(set(rep.criteria.values())) == 1


class TestDistributivity:
    def test_diamond(self, diamond):
        rep = lk.is_distributive(diamond)
        assert not rep.distributive
        assert rep.diamond == ("0", "a", "b", "c", "1")

    def test_divisor(self, d12):
        assert lk.is_distributive(d12).distributive

    def test_extended_free3(self):
        assert lk.is_distributive(fd.generate_lattice(3, extended=True)).distributive

    def test_implies_modular(self, pentagon, diamond, b3, d12):
        for l in (pentagon, diamond, b3, d12):
            if lk.is_distributive(l).distributive:
                assert lk.is_modular(l).modular


class TestSemimodularity:
    def test_boolean(self, b3):
        assert lk.is_upper_semimodular(b3).ok

    def test_pentagon_not_graded(self, pentagon):
        rep = lk.is_upper_semimodular(pentagon)
        assert not rep.ok and not rep.graded
        assert rep.chain_witness is not None

    def test_diamond(self, diamond):
        assert lk.is_upper_semimodular(diamond).ok

    def test_matches_modularity_both_ways(self, case_n1, case_n2):
        for l in distributive_fixture_lattices(case_n1, case_n2).values():
            both = (
                lk.is_upper_semimodular(l).ok
                and lk.is_upper_semimodular(l.dual).ok
            )
            assert both == lk.is_modular(l).modular


class TestIntervalClasses:
    def test_boolean_has_n_classes(self):
        for n in range(1, 5):
            l = catalog.boolean_lattice(n)
            assert lk.interval_classes(l).count == n

    def test_divisor_classes_exact(self, d12):
        part = lk.interval_classes(d12)
        assert part.count == 3
        # hand-derived from the perspectivity rule; the two index-2 steps
        # stay in separate classes even though the modules are isomorphic
        classes = {frozenset(c) for c in part.classes}
        assert classes == {
            frozenset({("1", "2"), ("3", "6")}),
            frozenset({("2", "4"), ("6", "12")}),
            frozenset({("1", "3"), ("2", "6"), ("4", "12")}),
        }

    def test_chain_singletons(self):
        l = lk.as_lattice(catalog.chain_poset(4))
        part = lk.interval_classes(l)
        assert part.count == 4
        assert all(len(c) == 1 for c in part.classes)

    def test_requires_modular(self, pentagon):
        with pytest.raises(lk.NotModular):
            lk.interval_classes(pentagon)
        assert lk.interval_classes(pentagon, allow_nonmodular=True).count == 3

    def test_every_edge_in_one_class(self, case_n1):
        part = lk.interval_classes(case_n1.lattice)
        counted = sum(len(c) for c in part.classes)
        assert counted == len(part.edges)
        assert set(part.class_of) == set(part.edges)

    def test_classes_live_on_single_degree_steps(self, case_n1, case_n2):
        for l in distributive_fixture_lattices(case_n1, case_n2).values():
            degree = lk.grade(l).degree
            for cls in lk.interval_classes(l).classes:
                for a, b in cls:
                    assert degree[b] - degree[a] == 1

    def test_distributive_class_count_is_irreducible_count(self, case_n1, case_n2):
        for l in distributive_fixture_lattices(case_n1, case_n2).values():
            assert lk.interval_classes(l).count == len(lk.join_irreducibles(l).names)


class TestChainMultiplicities:
    def test_boolean_chain(self, b3):
        part = lk.interval_classes(b3)
        chain = ["{}", "{1}", "{1,2}", "{1,2,3}"]
        counts = lk.chain_multiplicities(b3, chain, part)
        assert sorted(counts.values()) == [1, 1, 1]

    def test_uniserial(self):
        l = lk.as_lattice(catalog.chain_poset(3))
        counts = lk.chain_multiplicities(l, ["0", "c1", "c2", "1"])
        assert sorted(counts.values()) == [1, 1, 1]

    def test_extended_free3_eight_classes(self):
        l = fd.generate_lattice(3, extended=True)
        part = lk.interval_classes(l)
        assert part.count == 8
        chain = lk.maximal_chains(l)[0]
        counts = lk.chain_multiplicities(l, chain, part)
        assert sorted(counts.values()) == [1] * 8

    def test_not_maximal(self, b3):
        with pytest.raises(lk.NotMaximalChain):
            lk.chain_multiplicities(b3, ["{}", "{1,2}", "{1,2,3}"])
        with pytest.raises(lk.NotMaximalChain):
            lk.chain_multiplicities(b3, ["{1}", "{1,2}", "{1,2,3}"])


class TestJordanHolder:
    def test_boolean(self, b3):
        rep = lk.verify_jordan_holder(b3, exhaustive=True)
        assert rep.ok and sorted(rep.multiplicities.values()) == [1, 1, 1]

    def test_divisor(self, d12):
        rep = lk.verify_jordan_holder(d12, exhaustive=True)
        assert rep.ok and sorted(rep.multiplicities.values()) == [1, 1, 1]

    def test_case_n1_all_ones(self, case_n1):
        rep = lk.verify_jordan_holder(case_n1.lattice, exhaustive=True)
        assert rep.ok
        assert sorted(rep.multiplicities.values()) == [1] * 6

    def test_pentagon_pathology(self, pentagon):
        rep = lk.verify_jordan_holder(pentagon, allow_nonmodular=True)
        assert not rep.ok
        short, long = sorted(rep.witness, key=len)
        assert short == ["0", "a", "1"]
        assert long == ["0", "c", "b", "1"]
        part = rep.partition
        v1 = lk.chain_multiplicities(pentagon, short, part)
        v2 = lk.chain_multiplicities(pentagon, long, part)
        assert v1 != v2

    def test_chain_cap(self, b3):
        with pytest.raises(lk.ChainCapExceeded):
            lk.maximal_chains(b3, cap=2)
        with pytest.raises(lk.ChainCapExceeded):
            lk.verify_jordan_holder(b3, exhaustive=True, chain_cap=2)


class TestMultiplicityFree:
    def test_boolean(self):
        for n in range(1, 5):
            assert lk.is_multiplicity_free(catalog.boolean_lattice(n))

    def test_grid(self):
        assert lk.is_multiplicity_free(catalog.boolean_lattice(2))

    def test_divisor_lattice_is_but_module_is_not(self, d12):
        # the subgroup lattice of Z/12 is multiplicity free as a lattice,
        # even though the module repeats a simple factor
        assert lk.is_multiplicity_free(d12)

    def test_chain_with_repeated_class(self):
        # a 2-element chain stacked twice has two classes, each once; but
        # gluing opposite edges of a square gives multiplicity 2
        l = lk.as_lattice(catalog.chain_poset(2))
        assert lk.is_multiplicity_free(l)
        b2 = catalog.boolean_lattice(2)
        assert lk.is_multiplicity_free(b2)


class TestRandomAgreement:
    def test_two_hundred_random_lattices(self):
        rng = random.Random(422)
        for _ in range(200):
            l = catalog.random_lattice(rng)
            mod = lk.is_modular(l)
            dist = lk.is_distributive(l)
            assert len(set(mod.criteria.values())) == 1
            assert len(set(dist.criteria.values())) == 1
            if dist.distributive:
                assert mod.modular
