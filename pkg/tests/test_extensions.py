from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest

from plesken import errors, linalg
from plesken.cohomology import (
    BilinearForm,
    LinearFunctional,
    are_cohomologous,
    coboundary,
    z2_basis,
)
from plesken.extensions import (
    CentralExtension,
    cocycle_from_extension,
    equivalence_map,
    extension_from_cocycle,
    extension_from_json,
    extension_to_json,
    find_section,
    is_split,
    verify_central_extension,
    verify_equivalence_map,
)
from plesken.liealg import from_structure_constants, verify_lie_axioms
from plesken.scalars import ONE, ZERO, Scalar

S = Scalar


def xy_form(c=1):
    return BilinearForm.from_entries(2, {(0, 1): S(c)})


@pytest.fixture()
def heis_ext():
    """Hand-built Heisenberg total over the abelian plane (not via a cocycle)."""
    total = from_structure_constants(3, {(0, 1): [0, 0, 1]}, labels=("X", "Y", "Z"))
    base = from_structure_constants(2, {}, labels=("X", "Y"))
    return CentralExtension(
        total=total, base=base,
        injection_f=(ZERO, ZERO, ONE),
        projection_g=((ONE, ZERO, ZERO), (ZERO, ONE, ZERO)),
        section_s=None)


def test_build_from_zero_cocycle_is_direct_sum(abelian2):
    ext = extension_from_cocycle(abelian2, BilinearForm.zero(2))
    assert ext.total.brackets == {}
    assert verify_central_extension(ext) == []
    assert is_split(ext).split


def test_build_heis3_from_cocycle(abelian2, heis3):
    ext = extension_from_cocycle(abelian2, xy_form())
    # total has exactly the Heisenberg structure constants
    assert ext.total.brackets == heis3.brackets
    assert verify_lie_axioms(ext.total) == []
    assert verify_central_extension(ext) == []


def test_build_rejects_non_cocycle():
    algebra = from_structure_constants(4, {(0, 1): [0, 0, 1, 0]})
    bad = BilinearForm.from_entries(4, {(2, 3): ONE})
    with pytest.raises(errors.NotACocycle):
        extension_from_cocycle(algebra, bad)


def test_q8_extensions_all_split(q8_algebra):
    z2 = z2_basis(q8_algebra)
    for row in z2.basis:
        alpha = BilinearForm.from_flat(3, row)
        ext = extension_from_cocycle(q8_algebra, alpha)
        assert is_split(ext).split


def test_find_section_canonical(abelian2):
    ext = extension_from_cocycle(abelian2, xy_form())
    section = find_section(ext)
    assert linalg.freeze_matrix(section) == ext.section_s
    assert section == [[ONE, ZERO], [ZERO, ONE], [ZERO, ZERO]]


def test_find_section_heis_fixture(heis_ext):
    section = find_section(heis_ext)
    # forget-Z projection: s(X) = X, s(Y) = Y
    assert section == [[ONE, ZERO], [ZERO, ONE], [ZERO, ZERO]]
    gs = linalg.mat_mul(heis_ext.projection_g, section)
    assert linalg.mat_eq(gs, linalg.identity_matrix(2))


def test_cocycle_roundtrip_exact(abelian2):
    alpha = BilinearForm.from_entries(2, {(0, 1): S(Fraction(7, 3))})
    ext = extension_from_cocycle(abelian2, alpha)
    assert cocycle_from_extension(ext, ext.section_s) == alpha


def test_cocycle_of_direct_sum_is_zero(abelian2):
    ext = extension_from_cocycle(abelian2, BilinearForm.zero(2))
    extracted = cocycle_from_extension(ext, find_section(ext))
    assert extracted.is_zero()


def test_cocycle_under_changed_section(abelian2):
    alpha = xy_form()
    ext = extension_from_cocycle(abelian2, alpha)
    canonical = find_section(ext)
    tau = LinearFunctional.of([2, -3])
    shifted = [[canonical[r][j] + tau.vector[j] * ext.injection_f[r]
                for j in range(2)] for r in range(3)]
    beta = cocycle_from_extension(ext, shifted)
    sigma = are_cohomologous(abelian2, alpha, beta)
    assert sigma is not None
    assert alpha.sub(beta) == coboundary(abelian2, sigma)


def test_cocycle_rejects_non_section(abelian2):
    ext = extension_from_cocycle(abelian2, xy_form())
    bad = [[ONE, ONE], [ZERO, ONE], [ZERO, ZERO]]
    bad[0][0] = S(2)
    with pytest.raises(errors.NoSection):
        cocycle_from_extension(ext, bad)


def test_split_direct_sum_witness(abelian2):
    ext = extension_from_cocycle(abelian2, BilinearForm.zero(2))
    result = is_split(ext)
    assert result.split
    assert result.section == ((ONE, ZERO), (ZERO, ONE), (ZERO, ZERO))


def test_heis_extension_not_split(heis_ext):
    assert verify_central_extension(heis_ext) == []
    assert not is_split(heis_ext).split


def test_split_iff_cocycle_trivial(abelian2):
    rng = random.Random(41)
    z2 = z2_basis(abelian2)
    for _ in range(10):
        flat = [ZERO] * z2.ambient_dim
        for row in z2.basis:
            c = S(rng.randint(-4, 4))
            if c:
                flat = [a + c * b for a, b in zip(flat, row)]
        alpha = BilinearForm.from_flat(2, flat)
        ext = extension_from_cocycle(abelian2, alpha)
        split = is_split(ext).split
        trivial = are_cohomologous(abelian2, alpha,
                                   BilinearForm.zero(2)) is not None
        assert split == trivial


def test_split_witness_is_homomorphic_section(abelian2):
    ext = extension_from_cocycle(abelian2, xy_form())
    assert not is_split(ext).split
    ext2 = extension_from_cocycle(abelian2, BilinearForm.zero(2))
    witness = is_split(ext2).section
    gs = linalg.mat_mul(ext2.projection_g, [list(r) for r in witness])
    assert linalg.mat_eq(gs, linalg.identity_matrix(2))


def test_equivalence_self(abelian2):
    ext = extension_from_cocycle(abelian2, xy_form())
    phi = equivalence_map(ext, ext)
    assert linalg.mat_eq(phi, linalg.identity_matrix(3))
    assert verify_equivalence_map(ext, ext, phi) == []


def test_equivalence_cohomologous_pair(abelian2):
    alpha = xy_form()
    sigma = LinearFunctional.of([5, Fraction(-1, 2)])
    beta = alpha.add(coboundary(abelian2, sigma))
    ext1 = extension_from_cocycle(abelian2, alpha)
    ext2 = extension_from_cocycle(abelian2, beta)
    phi = equivalence_map(ext1, ext2)
    assert phi is not None
    assert verify_equivalence_map(ext1, ext2, phi) == []


def test_equivalence_rejects_different_classes(abelian2):
    ext1 = extension_from_cocycle(abelian2, xy_form())
    ext2 = extension_from_cocycle(abelian2, BilinearForm.zero(2))
    assert equivalence_map(ext1, ext2) is None


def test_equivalence_base_mismatch(abelian2, heis3):
    ext1 = extension_from_cocycle(abelian2, xy_form())
    ext2 = extension_from_cocycle(heis3, BilinearForm.zero(3))
    with pytest.raises(errors.BaseMismatch):
        equivalence_map(ext1, ext2)


def test_verify_map_detects_wrong_identity(abelian2):
    ext1 = extension_from_cocycle(abelian2, xy_form())
    ext2 = extension_from_cocycle(abelian2, BilinearForm.zero(2))
    failures = verify_equivalence_map(ext1, ext2, linalg.identity_matrix(3))
    assert any("homomorphism" in f for f in failures)


def test_verify_map_detects_scaled_identity(abelian2):
    ext = extension_from_cocycle(abelian2, BilinearForm.zero(2))
    phi = [[S(2) if i == j else ZERO for j in range(3)] for i in range(3)]
    failures = verify_equivalence_map(ext, ext, phi)
    assert any("injection" in f for f in failures)


def test_section_independence_sweep(abelian2):
    rng = random.Random(59)
    ext = extension_from_cocycle(abelian2, xy_form())
    canonical = find_section(ext)
    cocycles = []
    for _ in range(8):
        tau = [S(Fraction(rng.randint(-6, 6), rng.randint(1, 3))) for _ in range(2)]
        section = [[canonical[r][j] + tau[j] * ext.injection_f[r]
                    for j in range(2)] for r in range(3)]
        cocycles.append(cocycle_from_extension(ext, section))
    for i in range(len(cocycles)):
        for j in range(i + 1, len(cocycles)):
            assert are_cohomologous(abelian2, cocycles[i], cocycles[j]) is not None


def test_extension_json_roundtrip(abelian2):
    ext = extension_from_cocycle(abelian2, xy_form())
    doc = extension_to_json(ext)
    text = json.dumps(doc, sort_keys=True)
    back = extension_from_json(json.loads(text))
    assert json.dumps(extension_to_json(back), sort_keys=True) == text
    assert back.total.brackets == ext.total.brackets


def test_extension_json_rejects_broken_document(abelian2):
    ext = extension_from_cocycle(abelian2, xy_form())
    doc = extension_to_json(ext)
    doc["f"] = ["1", "0", "0"]  # not central, breaks exactness too
    with pytest.raises(errors.DefectNotInKernel):
        extension_from_json(doc)
