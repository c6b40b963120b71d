from fractions import Fraction

import pytest

from commcount.chars import ClassFunction, build_table, decompose
from commcount.counts import brute_f_n, brute_t_n, count_f_n
from commcount.cyclo import Cyclo, parse_cyclo
from commcount.distributions import (
    BoundsReport,
    GroupDistribution,
    bounds_report,
    convolve,
    convolve_power,
    distribution_from_counts,
    first_saturating_k,
    l1_to_uniform,
    p_n,
    point_mass,
    q3,
    uniform,
)
from commcount.groups import conjugacy_classes, make_group
from commcount.realcmp import compare


@pytest.fixture(scope="module")
def a5():
    G = make_group("alternating:5")
    return G, count_f_n(G, 2), count_f_n(G, 3)


def test_a5_probabilities(a5):
    G, f2, f3 = a5
    assert p_n(f2, 0) == Fraction(1, 12)
    assert p_n(f3, 0) == Fraction(11, 1800)
    double = conjugacy_classes(G).reps[1]
    assert p_n(f2, double) == Fraction(32, 3600)


def test_a5_q3(a5):
    G, _, f3 = a5
    d = q3(f3)
    assert d.at(0) == Fraction(11, 20)
    assert sum(d.mass) == 1
    # coefficient form (1/60)(1, 8/5, 8/5, 21/10, 14/5) in the character basis
    T = build_table(G)
    part = conjugacy_classes(G)
    as_fn = ClassFunction(
        G, tuple(Cyclo.rational(d.at(rep)) for rep in part.reps)
    )
    sixtieth = Fraction(1, 60)
    assert decompose(as_fn, T) == (
        sixtieth,
        sixtieth * Fraction(8, 5),
        sixtieth * Fraction(8, 5),
        sixtieth * Fraction(21, 10),
        sixtieth * Fraction(14, 5),
    )


def test_q3_requires_f3_counts():
    G = make_group("symmetric:3")
    with pytest.raises(ValueError, match="f_3"):
        q3(brute_f_n(G, 2))
    with pytest.raises(ValueError, match="f_3"):
        q3(brute_t_n(G, 3))


def test_distribution_validation():
    G = make_group("cyclic:2")
    with pytest.raises(ValueError, match="sum"):
        GroupDistribution(G, (Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(ValueError, match="non-negative"):
        GroupDistribution(G, (Fraction(3, 2), Fraction(-1, 2)))
    with pytest.raises(ValueError, match="one mass"):
        GroupDistribution(G, (Fraction(1),))


def test_convolution_identities():
    G = make_group("symmetric:3")
    d = q3(brute_f_n(G, 3))
    assert convolve(d, point_mass(G)) == d
    assert convolve(point_mass(G), d) == d
    assert convolve(uniform(G), d) == uniform(G)
    assert convolve(d, uniform(G)) == uniform(G)
    assert convolve_power(d, 0) == point_mass(G)
    assert convolve_power(d, 2) == convolve(d, d)

    other = make_group("symmetric:4")
    with pytest.raises(ValueError, match="different group"):
        convolve(d, uniform(other))


def test_l1_distance():
    G = make_group("alternating:5")
    assert l1_to_uniform(uniform(G)) == 0
    assert l1_to_uniform(point_mass(G)) == Fraction(2 * 59, 60)


def test_a5_l1_sequence_non_increasing(a5):
    G, _, f3 = a5
    d = q3(f3)
    distances = []
    power = d
    for _ in range(10):
        distances.append(l1_to_uniform(power))
        power = convolve(power, d)
    assert all(a >= b for a, b in zip(distances, distances[1:]))


def test_support_saturation(a5):
    G, _, f3 = a5
    # every element of this group is a commutator, so Q_3 already has
    # full support
    assert first_saturating_k(q3(f3)) == 1

    S3 = make_group("symmetric:3")
    # f_3 lives on even permutations only; convolution never escapes
    assert first_saturating_k(q3(brute_f_n(S3, 3)), k_max=5) is None


def test_p3_values_are_not_a_distribution(a5):
    G, _, f3 = a5
    total = sum(p_n(f3, g) for g in range(G.order))
    assert total == Fraction(2400, 60**3)
    assert total != 1


def test_d8_attains_gustafson_equality():
    G = make_group("dihedral:4")
    report = bounds_report(G)
    assert report.p2_1 == Fraction(5, 8)
    gustafson = next(r for r in report.records if r.name == "gustafson")
    assert gustafson.holds
    assert report.all_hold


def test_abelian_report_is_trivial():
    report = bounds_report(make_group("cyclic:6"))
    assert report.records == ()
    assert report.p2_1 == 1
    assert report.all_hold


@pytest.mark.parametrize(
    "spec",
    ["alternating:5", "symmetric:4", "dihedral:4", "dihedral:5", "dihedral:6",
     "dihedral:7", "quaternion", "alternating:4"],
)
def test_bounds_hold(spec):
    G = make_group(spec)
    report = bounds_report(G)
    assert report.records and report.all_hold
    assert report.failures() == []
    # every record's sides re-parse and re-verify exactly
    for rec in report.records:
        assert (compare(parse_cyclo(rec.lhs), parse_cyclo(rec.rhs)) <= 0) == rec.holds


def test_a5_report_values(a5):
    G, f2, f3 = a5
    report = bounds_report(G, f2, f3)
    assert report.alpha == Fraction(1, 60)
    assert report.p3_1 == Fraction(11, 1800)
    prop_i = next(r for r in report.records if r.name == "prop-i")
    assert prop_i.lhs == "11/1800"
    assert isinstance(report, BoundsReport)


def test_class_constant_masses():
    G = make_group("symmetric:4")
    d = distribution_from_counts(brute_f_n(G, 3))
    part = conjugacy_classes(G)
    for cls in part.classes:
        assert len({d.at(g) for g in cls}) == 1
