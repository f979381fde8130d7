"""Coinvariants, balanced tensors, the canonical Galois map, and the
affineness criterion."""

import pytest

from homhopf.catalog import entry, names
from homhopf.errors import StructureDoesNotDescend
from homhopf.galois import (balanced_tensor_AA, beta_evaluation,
                            canonical_psi, coinvariants, cor58_check,
                            free_module, galois_xi, induction, prop51_check,
                            quantum_trace_left, regular_induced,
                            thm56_adjunction, thm56_check, thm57_check,
                            xi_source_module)
from homhopf.integrals import QuantumIntegral, find_quantum_integral
from homhopf.linalg import rank, swap_map, tensor_space
from homhopf.modules import check_rel_hopf, is_morphism, regular_rel_hopf

HOPF_ENTRIES = [n for n in names()
                if entry(n).kind == "hopf"
                and entry(n).hopf.antipode_inv is not None]


@pytest.mark.parametrize("name", names())
def test_coinvariant_dimension_matches_expected(name):
    e = entry(name)
    if "coinvariant_dim" not in e.expected:
        pytest.skip("no expectation recorded")
    B = coinvariants(e.comodule_algebra)
    assert B.dim == e.expected["coinvariant_dim"]
    # B contains the unit and is closed under multiplication
    assert B.subspace.contains(e.comodule_algebra.algebra.unit)


@pytest.mark.parametrize("name", names())
def test_galois_classification_matches_expected(name):
    e = entry(name)
    if "galois" not in e.expected:
        pytest.skip("no expectation recorded")
    CA = e.comodule_algebra
    B = coinvariants(CA)
    bt, aa_mod = balanced_tensor_AA(CA, B)
    assert check_rel_hopf(aa_mod).ok
    gal = canonical_psi(CA, bt)
    assert gal.classification == e.expected["galois"]
    # independent elimination order agrees on the rank
    assert gal.psi.transpose_rank_oracle() == gal.rank


def test_galois_ranks_on_the_classical_instances():
    for name, want in (("kC2", 4), ("sweedler-H4", 16)):
        CA = entry(name).comodule_algebra
        B = coinvariants(CA)
        bt, _ = balanced_tensor_AA(CA, B)
        gal = canonical_psi(CA, bt)
        assert gal.bijective and gal.rank == want


def test_trivial_coaction_is_not_surjective():
    CA = entry("trivial-k-over-kC2").comodule_algebra
    B = coinvariants(CA)
    bt, _ = balanced_tensor_AA(CA, B)
    assert bt.dim == 1
    gal = canonical_psi(CA, bt)
    assert not gal.surjective


@pytest.mark.parametrize("name", HOPF_ENTRIES)
def test_balanced_square_dimension_over_scalar_coinvariants(name):
    CA = entry(name).comodule_algebra
    B = coinvariants(CA)
    bt, _ = balanced_tensor_AA(CA, B)
    if B.dim == 1:
        assert bt.dim == CA.algebra.dim ** 2


@pytest.mark.parametrize("name", HOPF_ENTRIES)
def test_xi_is_psi_after_flip_and_kills_relations(name):
    CA = entry(name).comodule_algebra
    from homhopf.galois import galois_psi_ambient
    A = CA.algebra
    xi = galois_xi(CA)
    psi_t = galois_psi_ambient(CA)
    tau = swap_map(A.space, A.space)
    assert xi.same_matrix(psi_t @ tau)
    B = coinvariants(CA)
    bt, _ = balanced_tensor_AA(CA, B)
    for rel in bt.relations:
        assert all(c == 0 for c in psi_t.apply(rel))


@pytest.mark.parametrize("name", HOPF_ENTRIES)
def test_xi_is_a_relative_morphism(name):
    CA = entry(name).comodule_algebra
    assert is_morphism(galois_xi(CA), xi_source_module(CA),
                       regular_induced(CA))


@pytest.mark.parametrize("name", HOPF_ENTRIES)
def test_induction_of_the_free_module_recovers_A(name):
    CA = entry(name).comodule_algebra
    B = coinvariants(CA)
    bt, ind = induction(free_module(B, 1), B)
    assert check_rel_hopf(ind).ok
    assert ind.dim == CA.algebra.dim * B.dim
    bt2, ind2 = induction(free_module(B, 2), B)
    assert ind2.dim == 2 * ind.dim


@pytest.mark.parametrize("name", HOPF_ENTRIES)
def test_thm56_adjunction_unit(name):
    rep = thm56_check(entry(name).comodule_algebra)
    assert rep.ok, rep.pretty()


@pytest.mark.parametrize("name", HOPF_ENTRIES)
def test_prop51_retractions_and_traces(name):
    CA = entry(name).comodule_algebra
    gamma = find_quantum_integral(CA, require_total=True)
    if not isinstance(gamma, QuantumIntegral):
        pytest.skip("no total quantum integral")
    rep = prop51_check(CA, gamma)
    assert rep.ok, rep.pretty()


@pytest.mark.parametrize("name", HOPF_ENTRIES)
def test_thm57_affineness(name):
    e = entry(name)
    rep = thm57_check(e.comodule_algebra)
    assert rep.ok, rep.pretty()
    if e.expected.get("total_quantum_integral") and \
            e.expected.get("galois") == "bijective":
        assert rep.certificates["equivalence"] is True
    if e.expected.get("galois") == "neither":
        assert rep.certificates["equivalence"] is None


def test_thm57_beta_evaluation_on_induced_module():
    CA = entry("kC2").comodule_algebra
    B = coinvariants(CA)
    M = regular_induced(CA)
    bt, beta_m = beta_evaluation(M, B)
    assert rank(beta_m) == M.dim == bt.dim


@pytest.mark.parametrize("name", ["kC2", "kC3-twisted", "sweedler-H4"])
def test_cor58_regular_coaction(name):
    rep = cor58_check(entry(name).hopf)
    assert rep.ok, rep.pretty()


def test_quantum_trace_fixes_the_unit():
    CA = entry("kC3").comodule_algebra
    gamma = find_quantum_integral(CA, require_total=True)
    tl = quantum_trace_left(CA, gamma)
    assert tl.apply(CA.algebra.unit) == CA.algebra.unit
