import json

import pytest

from commcount.chars import (
    CharacterTable,
    TableProviderError,
    TableValidationError,
    build_table,
    class_function_from_element_values,
    conjugation_character,
    decompose,
    inner_product,
    partitions_of,
    reconstruct,
    rimhook_character,
    table_from_document,
    table_to_document,
    validate_table,
)
from commcount.cyclo import Cyclo, cyclo_root, parse_cyclo
from commcount.groups import conjugacy_classes, make_group


def test_cyclic_table():
    G = make_group("cyclic:6")
    T = build_table(G)
    assert T.validated
    assert T.degrees == (1,) * 6
    assert T.provenance == "cyclic-closed-form"
    # chi_j(a^r) = zeta_6^(jr); abelian, so class index == element index
    for j in range(6):
        for r in range(6):
            assert T.irreducibles[j].values[r] == cyclo_root(6, j * r)
    assert T.labels[0] == "chi0"


def test_dihedral_table_odd():
    G = make_group("dihedral:5")
    T = build_table(G)
    assert T.validated
    assert T.degrees == (1, 1, 2, 2)
    assert T.labels == ("chi1", "chi2", "psi1", "psi2")
    part = conjugacy_classes(G)
    refl = part.class_of[5]
    assert T.irreducibles[1].values[refl] == -1
    # psi_1 at the class of a: zeta + zeta^-1 = 2cos(72deg)
    psi1_a = T.irreducibles[2].values[part.class_of[1]]
    assert psi1_a == cyclo_root(5, 1) + cyclo_root(5, 4)
    assert abs(psi1_a.approx().real - 0.6180339887) < 1e-9
    psi2_a = T.irreducibles[3].values[part.class_of[1]]
    assert psi2_a == cyclo_root(5, 2) + cyclo_root(5, 3)


def test_dihedral_table_even():
    G = make_group("dihedral:4")
    T = build_table(G)
    assert T.validated
    assert T.degrees == (1, 1, 1, 1, 2)
    part = conjugacy_classes(G)
    # classes: 1, a, a^2, b-type, ab-type
    psi = T.irreducibles[4]
    assert [v.to_rational() for v in psi.values] == [2, 0, -2, 0, 0]
    chi3 = T.irreducibles[2]
    assert [v.to_rational() for v in chi3.values] == [1, -1, 1, 1, -1]
    chi4 = T.irreducibles[3]
    assert [v.to_rational() for v in chi4.values] == [1, -1, 1, -1, 1]

    T12 = build_table(make_group("dihedral:6"))
    assert T12.degrees == (1, 1, 1, 1, 2, 2)


def test_dihedral_table_sampled_identity_path():
    # order 40 > 24, so the product identity runs on seeded sampled pairs
    T = build_table(make_group("dihedral:20"))
    assert T.validated
    assert len(T) == 13
    assert sorted(T.degrees) == [1, 1, 1, 1] + [2] * 9


def test_symmetric_tables():
    T3 = build_table(make_group("symmetric:3"))
    assert T3.validated
    assert T3.degrees == (1, 1, 2)
    assert T3.labels == ("(1,1,1)", "(3)", "(2,1)")
    # the degree-2 character vanishes on transpositions
    part = conjugacy_classes(T3.group)
    std = T3.irreducibles[2]
    vals = {
        T3.group.element_orders()[rep]: std.values[i].to_rational()
        for i, rep in enumerate(part.reps)
    }
    assert vals == {1: 2, 2: 0, 3: -1}

    T4 = build_table(make_group("symmetric:4"))
    assert T4.validated
    assert T4.degrees == (1, 1, 2, 3, 3)

    T5 = build_table(make_group("symmetric:5"))
    assert T5.validated
    assert T5.degrees == (1, 1, 4, 4, 5, 5, 6)


def test_rimhook_classical_identities():
    # trivial, sign and standard characters have textbook closed forms
    for n in range(2, 8):
        for mu in partitions_of(n):
            assert rimhook_character((n,), mu) == 1
            assert rimhook_character((1,) * n, mu) == (-1) ** (n - len(mu))
            fixed = sum(1 for p in mu if p == 1)
            assert rimhook_character((n - 1, 1), mu) == fixed - 1


def test_partitions_of():
    assert partitions_of(4) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    assert len(partitions_of(7)) == 15


def test_bundled_a5():
    G = make_group("alternating:5")
    T = build_table(G)
    assert T.validated
    assert T.provenance == "bundled:a5"
    assert T.degrees == (1, 3, 3, 4, 5)
    golden = parse_cyclo("-E(5)^2-E(5)^3")
    assert T.irreducibles[1].values[3] == golden
    assert abs(golden.approx().real - 1.6180339887) < 1e-9


def test_bundled_a4_and_q8():
    T = build_table(make_group("alternating:4"))
    assert T.validated and T.degrees == (1, 1, 1, 3)
    omega = T.irreducibles[1].values[2]
    assert omega in (cyclo_root(3, 1), cyclo_root(3, 2))

    Q = build_table(make_group("quaternion"))
    assert Q.validated and Q.provenance == "bundled:q8"
    assert Q.degrees == (1, 1, 1, 1, 2)
    assert Q.irreducibles[4].values[4] == -2


def test_auto_provider_errors():
    with pytest.raises(TableProviderError, match="file:"):
        build_table(make_group("perm:(1 2 3),(4 5 6)"))
    with pytest.raises(TableProviderError, match="unknown"):
        build_table(make_group("cyclic:3"), "nonsense")


def test_cyclic_provider_generalizes():
    # alternating:3 is cyclic of order 3; a cyclic permutation group gets a
    # table even though its elements are not indexed by exponent
    A3 = build_table(make_group("alternating:3"))
    assert A3.degrees == (1, 1, 1)
    P = make_group("perm:(1 2 3 4 5 6)")
    T = build_table(P)
    assert T.provenance == "cyclic-closed-form"
    assert T.degrees == (1,) * 6
    assert T.validated


def test_tensor_table():
    G = make_group("product:cyclic:2,alternating:5")
    T = build_table(G)
    assert T.validated
    assert T.provenance == "product-tensor"
    assert T.degrees == (1, 3, 3, 4, 5, 1, 3, 3, 4, 5)
    assert T.labels[1] == "chi0*chi2"


def test_conjugation_character():
    G = make_group("alternating:5")
    theta = conjugation_character(G)
    assert [v.to_rational() for v in theta.values] == [60, 4, 3, 5, 5]
    # multiplicity of the trivial character is the class count
    for spec in ("alternating:5", "symmetric:4", "dihedral:5"):
        H = make_group(spec)
        th = conjugation_character(H)
        T = build_table(H)
        mults = decompose(th, T)
        triv = next(
            i for i, chi in enumerate(T.irreducibles)
            if all(v == 1 for v in chi.values)
        )
        assert mults[triv] == len(conjugacy_classes(H))
        assert all(m.denominator == 1 and m >= 0 for m in mults)
        assert reconstruct(T, mults) == th


def test_inner_product_and_errors():
    T = build_table(make_group("symmetric:3"))
    assert inner_product(T.irreducibles[2], T.irreducibles[2]) == 1
    assert inner_product(T.irreducibles[0], T.irreducibles[1]).is_zero()
    other = conjugation_character(make_group("cyclic:2"))
    with pytest.raises(ValueError, match="different groups"):
        inner_product(T.irreducibles[0], other)


def test_class_function_constancy_check():
    G = make_group("symmetric:3")
    vals = [1] * 6
    vals[3] = 7  # a transposition, but not all of them
    with pytest.raises(ValueError, match="not constant"):
        class_function_from_element_values(G, vals)
    cf = class_function_from_element_values(G, [1] * 6)
    assert cf.at(4) == 1


def test_document_roundtrip(tmp_path):
    G = make_group("dihedral:5")
    T = build_table(G)
    doc = table_to_document(T)
    T2 = table_from_document(G, doc, "file:mem")
    assert all(a == b for a, b in zip(T2.irreducibles, T.irreducibles))

    path = tmp_path / "c3.json"
    path.write_text(json.dumps(table_to_document(build_table(make_group("cyclic:3")))))
    T3 = build_table(make_group("cyclic:3"), f"file:{path}")
    assert T3.validated
    assert T3.provenance == f"file:{path}"


def test_document_alignment_errors():
    G4 = make_group("alternating:4")
    doc = table_to_document(build_table(make_group("alternating:5")))
    with pytest.raises(ValueError, match="order 60"):
        table_from_document(G4, doc, "file:mem")

    G5 = make_group("alternating:5")
    bad = table_to_document(build_table(G5))
    bad["class_sizes"] = [1, 20, 15, 12, 12]
    with pytest.raises(ValueError, match="class 1"):
        table_from_document(G5, bad, "file:mem")

    bad2 = table_to_document(build_table(G5))
    bad2["class_rep_orders"] = [1, 2, 3, 5, 10]
    with pytest.raises(ValueError, match="class_rep_orders"):
        table_from_document(G5, bad2, "file:mem")


def test_validation_catches_corruption(tmp_path):
    G = make_group("alternating:5")
    doc = table_to_document(build_table(G))
    doc["irreducibles"][4][1] = "2"  # chi5 at the involution class: 1 -> 2
    T = table_from_document(G, doc, "file:mem")
    report = validate_table(T)
    assert not report.passed
    assert not T.validated
    names = [c.name for c in report.failures()]
    assert "row-orthogonality" in names
    row_check = next(c for c in report.checks if c.name == "row-orthogonality")
    assert "4" in row_check.detail

    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(TableValidationError) as exc:
        build_table(G, f"file:{path}")
    assert exc.value.report.failures()


def test_validation_catches_wrong_degree():
    G = make_group("quaternion")
    doc = table_to_document(build_table(G))
    doc["irreducibles"][4][0] = "3"
    T = table_from_document(G, doc, "file:mem")
    report = validate_table(T)
    names = [c.name for c in report.failures()]
    assert "degree-square-sum" in names
