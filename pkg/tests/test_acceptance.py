"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Every check is zero-tolerance; the fixtures include the full group list
(cyclic 2..8, dihedral 8, S3, Q8, elementary abelian 9, Heisenberg 27).
Criterion 11 runs the CLI verifier twice and compares raw bytes.
"""

from __future__ import annotations

from plesken.cli import main
from plesken.verify import (
    CRITERIA,
    _rng_for,
    criterion_abelian_scaling,
    criterion_cocycle_degeneracy,
    criterion_d8_linear_equivalence,
    criterion_heisenberg_fixture,
    criterion_one_one,
    criterion_plesken_construction,
    criterion_roundtrip_onto,
    criterion_section_independence,
    criterion_twist_roundtrip,
    criterion_whitehead_q8,
)

SEED = 7


def _run(cid, name, func, fixture_set):
    outcome = func(fixture_set, _rng_for(SEED, cid))
    status = "PASS" if outcome["passed"] else "FAIL"
    print(f"{status} criterion {cid}: {name}")
    assert outcome["passed"], outcome["details"]
    return outcome


def test_criterion_01_plesken_construction(fixture_set):
    outcome = _run(1, "plesken-construction", criterion_plesken_construction,
                   fixture_set)
    groups = {entry["group"]: entry for entry in outcome["details"]["groups"]}
    assert set(groups) == {"C2", "C3", "C4", "C5", "C6", "C7", "C8",
                           "D8", "S3", "Q8", "E9", "Heis27"}
    assert groups["Heis27"]["dim"] == 13
    assert groups["E9"]["dim"] == 4


def test_criterion_02_whitehead_q8(fixture_set):
    _run(2, "whitehead-q8", criterion_whitehead_q8, fixture_set)


def test_criterion_03_abelian_h2_scaling(fixture_set):
    _run(3, "abelian-h2-scaling", criterion_abelian_scaling, fixture_set)


def test_criterion_04_cocycle_extension_roundtrip(fixture_set):
    _run(4, "cocycle-extension-roundtrip", criterion_roundtrip_onto, fixture_set)


def test_criterion_05_extension_equivalence(fixture_set):
    outcome = _run(5, "extension-equivalence", criterion_one_one, fixture_set)
    assert outcome["details"]["equivalent_pairs"] == 25 * len(fixture_set.algebras)
    assert outcome["details"]["inequivalent_pairs"] > 0


def test_criterion_06_section_independence(fixture_set):
    _run(6, "section-independence", criterion_section_independence, fixture_set)


def test_criterion_07_cocycle_degeneracy(fixture_set):
    outcome = _run(7, "cocycle-degeneracy", criterion_cocycle_degeneracy,
                   fixture_set)
    assert outcome["details"]["trials"] == 200


def test_criterion_08_d8_linear_equivalence(fixture_set):
    outcome = _run(8, "d8-linear-equivalence", criterion_d8_linear_equivalence,
                   fixture_set)
    assert outcome["details"]["perturbations"] == 12


def test_criterion_09_twist_roundtrip(fixture_set):
    _run(9, "twist-roundtrip", criterion_twist_roundtrip, fixture_set)


def test_criterion_10_heisenberg_fixture(fixture_set):
    _run(10, "heisenberg-fixture", criterion_heisenberg_fixture, fixture_set)


def test_criterion_11_cli_determinism(capsys):
    argv = ["verify", "all", "--max-group-order", "24", "--seed", "7", "--json"]
    code1 = main(list(argv))
    out1 = capsys.readouterr().out
    code2 = main(list(argv))
    out2 = capsys.readouterr().out
    assert code1 == code2 == 0
    assert out1.encode("utf-8") == out2.encode("utf-8")
    print("PASS criterion 11: cli-determinism")


def test_criteria_registry_is_complete():
    assert [cid for cid, _, _ in CRITERIA] == list(range(1, 11))
