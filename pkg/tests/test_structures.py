"""Axiom checks for Hom-algebras, Hom-coalgebras, Hom-Hopf algebras,
and Hom-comodule algebras on the built-in instances."""

import pytest

from homhopf.catalog import (cyclic_group_hopf, entry, matrix_coalgebra,
                             names, sweedler_hopf, twisted_cyclic3)
from homhopf.errors import NotAutomorphism
from homhopf.linalg import LinearMap
from homhopf.structures import (check_comodule_algebra, check_hom_algebra,
                                check_hom_coalgebra, check_hom_hopf,
                                regular_comodule_algebra, twist)


@pytest.mark.parametrize("name", names())
def test_catalog_entry_passes_all_structural_checks(name):
    rep = entry(name).validate()
    assert rep.ok, rep.pretty()


def test_sweedler_is_noncommutative_and_noncocommutative():
    H = sweedler_hopf()
    g = H.space.basis_vector(1)
    x = H.space.basis_vector(2)
    assert H.mul(g, x) != H.mul(x, g)


def test_twisted_cyclic3_has_nontrivial_alpha():
    H = twisted_cyclic3()
    assert not H.algebra.alpha.is_identity()
    assert check_hom_hopf(H).ok


def test_twist_rejects_non_automorphism():
    H = cyclic_group_hopf(2)
    bad = LinearMap.from_rows(H.space, H.space, [[1, 1], [0, 1]])
    with pytest.raises(NotAutomorphism):
        twist(H, bad)


def test_corrupted_antipode_fails_exactly_one_check():
    from dataclasses import replace
    H = cyclic_group_hopf(2)
    rows = [list(r) for r in H.antipode.matrix]
    rows[0][1] += 1
    bad = replace(H, antipode=LinearMap.from_rows(H.space, H.space, rows))
    rep = check_hom_hopf(bad)
    assert len(rep.failures) == 1
    assert rep.failures[0].witness is not None


def test_matrix_coalgebra_axioms():
    C = matrix_coalgebra(2)
    assert check_hom_coalgebra(C).ok


def test_regular_comodule_algebra_checks():
    for hopf in (cyclic_group_hopf(3), sweedler_hopf(), twisted_cyclic3()):
        CA = regular_comodule_algebra(hopf)
        assert check_comodule_algebra(CA).ok


def test_broken_coaction_is_reported_with_witness():
    H = cyclic_group_hopf(2)
    CA = regular_comodule_algebra(H)
    from dataclasses import replace
    rows = [list(r) for r in CA.coaction.matrix]
    rows[0][1] += 1
    bad = replace(CA, coaction=LinearMap(CA.space,
                                         CA.coaction.codomain, tuple(
                                             tuple(r) for r in rows)))
    rep = check_comodule_algebra(bad)
    assert not rep.ok
    assert any(f.witness is not None for f in rep.failures)


def test_hom_algebra_checker_sees_broken_associativity():
    H = twisted_cyclic3()
    from dataclasses import replace
    rows = [list(r) for r in H.algebra.mult.matrix]
    rows[0][4] += 1
    bad = replace(H.algebra, mult=LinearMap(H.algebra.mult.domain,
                                            H.space,
                                            tuple(tuple(r) for r in rows)))
    assert not check_hom_algebra(bad).ok
