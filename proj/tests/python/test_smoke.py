from fractions import Fraction

import pytest

import spinsurf


def test_arf():
    assert spinsurf.arf(1, "11") == 1
    assert spinsurf.arf_gauss(2, "1111") == 0
    assert spinsurf.count_zeros(2, "1111") == 10
    assert spinsurf.count_by_arf(3) == (36, 28)
    assert len(spinsurf.enumerate_forms(2)) == 16


def test_bernoulli_and_divisibility():
    assert spinsurf.bernoulli(6) == Fraction(691, 2730)
    assert spinsurf.von_staudt_den(6) == 32760
    assert spinsurf.divisor_oriented(3) == 120
    spin = spinsurf.divisor_spin(3)
    assert spin["divisor"] == 1920
    assert spin["maximality"] == "lower_bound_only"


def test_characteristic_classes():
    assert spinsurf.kappa("proj", 2) == "2*c1^2 - 8*c2"
    assert spinsurf.kappa("hp", 4) == "32*u^2"
    assert spinsurf.lambda_kappa_difference(4) == "0"
    assert spinsurf.torus_lambda(2) == "-3*u^2"
    assert spinsurf.riemann_roch_dim(4, 2) == 9


def test_seifert():
    assert spinsurf.homology_sphere_value([(2, -1), (3, 1), (5, 1)]) == 1
    assert spinsurf.multiplicity_solve(6, 28, 2, [1, 3, 5], True) == [10, 8, 10]
    ex2 = spinsurf.icosahedral_example(2)
    assert ex2["value"] == Fraction(1, 2) and ex2["order"] == 2
    ex1 = spinsurf.icosahedral_example(1)
    assert ex1["general_formula"] and ex1["value"] == Fraction(1, 3)
    assert spinsurf.regular_representation_increment() == Fraction(2, 3)


def test_group():
    assert spinsurf.group_order() == 120
    assert spinsurf.verify_perfect()
    assert spinsurf.element_order_census()[2] == 1


def test_einvariant_document():
    doc = {"pairs": [[2, -1], [3, 1], [5, 1]], "N": 2, "center": "trivial",
           "profiles": [{"fiber": 1, "s_values": ["0", "1"]},
                        {"fiber": 2, "s_values": ["0", "0"]},
                        {"fiber": 3, "s_values": ["0", "0"]}]}
    assert spinsurf.einvariant(doc)["e_invariant"] == "1/4"


def test_errors():
    with pytest.raises(spinsurf.DomainError, match="NonCoprimePair"):
        spinsurf.homology_sphere_value([(4, 2)])
    with pytest.raises(spinsurf.DomainError, match="DimensionMismatch"):
        spinsurf.arf(2, "1")
    code, _, err = spinsurf.run_cli(["arf", "--g", "1"])
    assert code == 2
