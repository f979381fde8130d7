"""Coinvariants, quantum traces, balanced tensor products, the canonical
Galois map, and the adjunction machinery behind the affineness criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import StructureDoesNotDescend
from .integrals import QuantumIntegral, find_quantum_integral
from .linalg import (LinearMap, QuotientSpace, Space, Subspace, Vector,
                     kernel_basis, quotient_by, rank, span, swap_map,
                     tensor_space, tensor_vec, unrank, vec_add, vec_is_zero,
                     vec_scale)
from .modules import (HomModule, RelHopfModule, induce_G, is_morphism,
                      regular_rel_hopf)
from .report import Report
from .structures import ComoduleAlgebra, HomAlgebra, HomHopfAlgebra


# ---------------------------------------------------------------------------
# Coinvariants
# ---------------------------------------------------------------------------

def coinvariant_subspace(space: Space, mu_inv: LinearMap,
                         coaction: LinearMap, H: HomHopfAlgebra) -> Subspace:
    """Exact kernel of rho(m) - mu^{-1}(m) (x) 1_H."""
    insert_unit = LinearMap.from_function(
        space, tensor_space(space, H.space),
        lambda i: tensor_vec(mu_inv.apply(space.basis_vector(i)), H.unit))
    return span(space, kernel_basis(coaction - insert_unit))


@dataclass(frozen=True)
class CoinvariantAlgebra:
    """B = A^{coH} with its induced multiplication, unit, and automorphism."""

    of: ComoduleAlgebra
    subspace: Subspace
    algebra: HomAlgebra      # structure on subspace coordinates
    embed: LinearMap         # B -> A

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def element(self, j: int) -> Vector:
        """The j-th basis vector of B as an element of A."""
        return self.subspace.basis[j]


def coinvariants(CA: ComoduleAlgebra) -> CoinvariantAlgebra:
    """B = {a : rho(a) = beta^{-1}(a) (x) 1_H} as a Hom-subalgebra of A."""
    A = CA.algebra
    sub = coinvariant_subspace(A.space, A.alpha_inv, CA.coaction, CA.hopf)
    if sub.dim == 0:
        raise ValueError("coinvariants are zero; B must contain 1_A")
    bspace = Space(tuple(f"b{i}" for i in range(sub.dim)))
    unit_coords = sub.coords(A.unit)
    if unit_coords is None:
        raise ValueError("1_A is not coinvariant; coaction is not unital")

    def mult_img(k: int) -> Vector:
        i, j = unrank((sub.dim, sub.dim), k)
        coords = sub.coords(A.mul(sub.basis[i], sub.basis[j]))
        if coords is None:
            raise ValueError("coinvariants are not closed under multiplication")
        return coords

    mult = LinearMap.from_function(tensor_space(bspace, bspace), bspace,
                                   mult_img)

    def alpha_img(i: int) -> Vector:
        coords = sub.coords(A.a(sub.basis[i]))
        if coords is None:
            raise ValueError("coinvariants are not beta-stable")
        return coords

    beta_b = LinearMap.from_function(bspace, bspace, alpha_img)
    algebra = HomAlgebra(bspace, mult, unit_coords, beta_b, beta_b.inverse())
    embed = LinearMap.from_columns(bspace, A.space, list(sub.basis))
    return CoinvariantAlgebra(CA, sub, algebra, embed)


def coinvariant_module(M: RelHopfModule,
                       B: CoinvariantAlgebra) -> tuple[HomModule, Subspace]:
    """M^{coH} as a right B-Hom-module, in subspace coordinates."""
    sub = coinvariant_subspace(M.space, M.mu_inv, M.coaction, M.over.hopf)
    if sub.dim == 0:
        raise ValueError("zero coinvariants are not representable as a module")
    cspace = Space(tuple(f"c{i}" for i in range(sub.dim)))

    def act_img(k: int) -> Vector:
        i, j = unrank((sub.dim, B.dim), k)
        coords = sub.coords(M.act(sub.basis[i], B.element(j)))
        if coords is None:
            raise ValueError("coinvariants are not closed under the B-action")
        return coords

    action = LinearMap.from_function(
        tensor_space(cspace, B.algebra.space), cspace, act_img)

    def mu_img(i: int) -> Vector:
        coords = sub.coords(M.mu.apply(sub.basis[i]))
        if coords is None:
            raise ValueError("coinvariants are not mu-stable")
        return coords

    mu = LinearMap.from_function(cspace, cspace, mu_img)
    return HomModule(cspace, mu, mu.inverse(), action, B.algebra), sub


# ---------------------------------------------------------------------------
# Quantum traces
# ---------------------------------------------------------------------------

def quantum_trace_left(CA: ComoduleAlgebra, gamma: QuantumIntegral) -> LinearMap:
    """t^l(a) = a0 gamma(a1)(1_H); B-valued, restricting to the identity on B."""
    A, H = CA.algebra, CA.hopf

    def img(i: int) -> Vector:
        out = A.space.zero()
        for c, a0, a1 in CA.rho(A.space.basis_vector(i)):
            out = vec_add(out, vec_scale(c, A.mul(
                A.space.basis_vector(a0),
                gamma.value(H.space.basis_vector(a1), H.unit))))
        return out

    return LinearMap.from_function(A.space, A.space, img)


def quantum_trace_right(CA: ComoduleAlgebra, gamma: QuantumIntegral) -> LinearMap:
    """t^r(a) = gamma(1_H)(S^{-1}(alpha^2(a1))) beta(a0)."""
    A, H = CA.algebra, CA.hopf

    def img(i: int) -> Vector:
        out = A.space.zero()
        for c, a0, a1 in CA.rho(A.space.basis_vector(i)):
            ga = gamma.value(H.unit,
                             H.s_inv(H.a(H.a(H.space.basis_vector(a1)))))
            out = vec_add(out, vec_scale(
                c, A.mul(ga, A.a(A.space.basis_vector(a0)))))
        return out

    return LinearMap.from_function(A.space, A.space, img)


def prop51_maps(CA: ComoduleAlgebra,
                gamma: QuantumIntegral) -> tuple[LinearMap, LinearMap]:
    """lam(a (x) h) = a0 gamma(a1)(h) and
    Lam(a (x) h) = lam(1_A (x) alpha^{-1}(h) S^{-1}(a1)) beta(a0),
    both maps A (x) H -> A."""
    A, H = CA.algebra, CA.hopf
    ah = tensor_space(A.space, H.space)
    eh = H.space.basis_vector

    def lam_img(k: int) -> Vector:
        ai, hj = unrank((A.dim, H.dim), k)
        out = A.space.zero()
        for c, a0, a1 in CA.rho(A.space.basis_vector(ai)):
            out = vec_add(out, vec_scale(c, A.mul(
                A.space.basis_vector(a0), gamma.value(eh(a1), eh(hj)))))
        return out

    lam = LinearMap.from_function(ah, A.space, lam_img)

    def big_img(k: int) -> Vector:
        ai, hj = unrank((A.dim, H.dim), k)
        out = A.space.zero()
        for c, a0, a1 in CA.rho(A.space.basis_vector(ai)):
            inner = lam.apply(tensor_vec(
                A.unit, H.mul(H.a_inv(eh(hj)), H.s_inv(eh(a1)))))
            out = vec_add(out, vec_scale(
                c, A.mul(inner, A.a(A.space.basis_vector(a0)))))
        return out

    big = LinearMap.from_function(ah, A.space, big_img)
    return lam, big


# ---------------------------------------------------------------------------
# Balanced tensor products
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BalancedTensor:
    """A quotient of left (x) right by the Hom-twisted balancing relations
    (m.b) (x) n - mu(m) (x) (b . nu^{-1}(n)), b running over a basis of B."""

    left: Space
    right: Space
    quotient: QuotientSpace

    @property
    def ambient(self) -> Space:
        return self.quotient.ambient

    @property
    def relations(self) -> tuple[Vector, ...]:
        return self.quotient.relations.basis

    @property
    def space(self) -> Space:
        return self.quotient.quotient

    @property
    def dim(self) -> int:
        return self.quotient.dim


def balanced_tensor(left: Space, right: Space, B: CoinvariantAlgebra,
                    act_right, mu_left: LinearMap,
                    act_left, mu_right_inv: LinearMap) -> BalancedTensor:
    """Build left (x)_B right.  act_right(m_vec, b_vec) is the right B-action
    on the left factor; act_left(b_vec, n_vec) the left B-action on the right
    factor; b_vec runs over the chosen basis of B inside A."""
    relations = []
    for i in range(left.dim):
        m = left.basis_vector(i)
        for bj in range(B.dim):
            b = B.element(bj)
            for j in range(right.dim):
                n = right.basis_vector(j)
                rel = vec_add(
                    tensor_vec(act_right(m, b), n),
                    vec_scale(-1, tensor_vec(
                        mu_left.apply(m),
                        act_left(b, mu_right_inv.apply(n)))))
                if not vec_is_zero(rel):
                    relations.append(rel)
    return BalancedTensor(left, right,
                          quotient_by(tensor_space(left, right), relations))


def descend_linear(f: LinearMap, bt: BalancedTensor, what: str) -> LinearMap:
    """Descend f: ambient -> Z through the quotient after verifying that f
    kills every balancing relation."""
    for r in bt.relations:
        if not vec_is_zero(f.apply(r)):
            raise StructureDoesNotDescend(
                f"{what} does not vanish on a balancing relation")
    return f @ bt.quotient.section


def descend_endo(f: LinearMap, bt: BalancedTensor, what: str) -> LinearMap:
    """Descend f: ambient -> ambient to an endomorphism of the quotient."""
    return descend_linear(bt.quotient.projection @ f, bt, what)


def descend_coaction(f: LinearMap, bt: BalancedTensor, hspace: Space,
                     what: str) -> LinearMap:
    """Descend f: ambient -> ambient (x) H to quotient -> quotient (x) H."""
    g = bt.quotient.projection.tensor(LinearMap.identity(hspace)) @ f
    return descend_linear(g, bt, what)


def descend_action(f: LinearMap, bt: BalancedTensor, aspace: Space,
                   what: str) -> LinearMap:
    """Descend f: ambient (x) A -> ambient to quotient (x) A -> quotient."""
    g = bt.quotient.projection @ f
    for r in bt.relations:
        for j in range(aspace.dim):
            if not vec_is_zero(g.apply(tensor_vec(r, aspace.basis_vector(j)))):
                raise StructureDoesNotDescend(
                    f"{what} does not vanish on a balancing relation")
    return g @ bt.quotient.section.tensor(LinearMap.identity(aspace))


# ---------------------------------------------------------------------------
# A (x)_B A and the canonical Galois map
# ---------------------------------------------------------------------------

def balanced_tensor_AA(CA: ComoduleAlgebra,
                       B: Optional[CoinvariantAlgebra] = None
                       ) -> tuple[BalancedTensor, RelHopfModule]:
    """A (x)_B A with action (a (x) b).a' = beta(a) (x) b beta^{-1}(a') and
    coaction (beta^{-1}(a) (x) b0) (x) alpha(b1); descent is verified."""
    A, H = CA.algebra, CA.hopf
    if B is None:
        B = coinvariants(CA)
    bt = balanced_tensor(A.space, A.space, B,
                         act_right=A.mul, mu_left=A.alpha,
                         act_left=A.mul, mu_right_inv=A.alpha_inv)
    amb = bt.ambient
    da = A.dim
    ea = A.space.basis_vector

    def act_img(k: int) -> Vector:
        ai, bi, ci = unrank((da, da, da), k)
        return tensor_vec(A.a(ea(ai)), A.mul(ea(bi), A.a_inv(ea(ci))))

    amb_action = LinearMap.from_function(tensor_space(amb, A.space), amb,
                                         act_img)

    def coact_img(k: int) -> Vector:
        ai, bi = unrank((da, da), k)
        out = tensor_space(amb, H.space).zero()
        for c, b0, b1 in CA.rho(ea(bi)):
            out = vec_add(out, vec_scale(c, tensor_vec(
                tensor_vec(A.a_inv(ea(ai)), ea(b0)),
                H.a(H.space.basis_vector(b1)))))
        return out

    amb_coaction = LinearMap.from_function(amb, tensor_space(amb, H.space),
                                           coact_img)
    action = descend_action(amb_action, bt, A.space,
                            "the A-action on the balanced tensor square")
    coaction = descend_coaction(amb_coaction, bt, H.space,
                                "the coaction on the balanced tensor square")
    mu = descend_endo(A.alpha.tensor(A.alpha), bt,
                      "the automorphism of the balanced tensor square")
    module = RelHopfModule(bt.space, mu, mu.inverse(), action, coaction, CA)
    return bt, module


def galois_psi_ambient(CA: ComoduleAlgebra) -> LinearMap:
    """psi~(a (x) b) = beta^{-1}(a) b0 (x) alpha(b1) on A (x) A."""
    A, H = CA.algebra, CA.hopf
    ea = A.space.basis_vector

    def img(k: int) -> Vector:
        ai, bi = unrank((A.dim, A.dim), k)
        out = tensor_space(A.space, H.space).zero()
        for c, b0, b1 in CA.rho(ea(bi)):
            out = vec_add(out, vec_scale(c, tensor_vec(
                A.mul(A.a_inv(ea(ai)), ea(b0)),
                H.a(H.space.basis_vector(b1)))))
        return out

    return LinearMap.from_function(tensor_space(A.space, A.space),
                                   tensor_space(A.space, H.space), img)


@dataclass(frozen=True)
class GaloisMap:
    """The canonical map psi: A (x)_B A -> A (x) H with its classification."""

    psi: LinearMap
    classification: str      # "bijective" | "surjective-only" | "neither"
    rank: int

    @property
    def bijective(self) -> bool:
        return self.classification == "bijective"

    @property
    def surjective(self) -> bool:
        return self.classification in ("bijective", "surjective-only")


def canonical_psi(CA: ComoduleAlgebra, bt: BalancedTensor) -> GaloisMap:
    """Descend psi~ to the balanced tensor square and classify it by exact
    rank computation."""
    psi = descend_linear(galois_psi_ambient(CA), bt,
                         "the canonical Galois map")
    r = rank(psi)
    full = psi.codomain.dim
    if r == full and r == bt.dim:
        cls = "bijective"
    elif r == full:
        cls = "surjective-only"
    else:
        cls = "neither"
    return GaloisMap(psi, cls, r)


def galois_xi(CA: ComoduleAlgebra) -> LinearMap:
    """xi(a (x) b) = beta^{-1}(b) a0 (x) alpha(a1), i.e. psi~ after swapping
    the tensor factors; defined on all of A (x) A (no quotient)."""
    return galois_psi_ambient(CA) @ swap_map(CA.algebra.space,
                                             CA.algebra.space)


def xi_source_module(CA: ComoduleAlgebra) -> RelHopfModule:
    """A (x) A with action (a (x) b).a' = a beta^{-1}(a') (x) beta(b) and
    coaction (a0 (x) beta^{-1}(b)) (x) alpha(a1)."""
    A, H = CA.algebra, CA.hopf
    amb = tensor_space(A.space, A.space)
    da = A.dim
    ea = A.space.basis_vector

    def act_img(k: int) -> Vector:
        ai, bi, ci = unrank((da, da, da), k)
        return tensor_vec(A.mul(ea(ai), A.a_inv(ea(ci))), A.a(ea(bi)))

    action = LinearMap.from_function(tensor_space(amb, A.space), amb, act_img)

    def coact_img(k: int) -> Vector:
        ai, bi = unrank((da, da), k)
        out = tensor_space(amb, H.space).zero()
        for c, a0, a1 in CA.rho(ea(ai)):
            out = vec_add(out, vec_scale(c, tensor_vec(
                tensor_vec(ea(a0), A.a_inv(ea(bi))),
                H.a(H.space.basis_vector(a1)))))
        return out

    coaction = LinearMap.from_function(amb, tensor_space(amb, H.space),
                                       coact_img)
    mu = A.alpha.tensor(A.alpha)
    return RelHopfModule(amb, mu, mu.inverse(), action, coaction, CA)


# ---------------------------------------------------------------------------
# Induction A (x)_B N and the adjunction of the structure theorem
# ---------------------------------------------------------------------------

def induction(N: HomModule, B: CoinvariantAlgebra
              ) -> tuple[BalancedTensor, RelHopfModule]:
    """A (x)_B N with action (a (x) n).a' = a beta^{-1}(a') (x) nu(n) and
    coaction (a0 (x) nu^{-1}(n)) (x) alpha(a1)."""
    CA = B.of
    A, H = CA.algebra, CA.hopf

    def act_left(bj: int, n: Vector) -> Vector:
        # the left B-action on the right B-module N is n.b read backwards
        return N.act(n, B.algebra.basis_vector(bj))

    relations = []
    for i in range(A.dim):
        m = A.space.basis_vector(i)
        for bj in range(B.dim):
            b = B.element(bj)
            for j in range(N.dim):
                n = N.space.basis_vector(j)
                rel = vec_add(
                    tensor_vec(A.mul(m, b), n),
                    vec_scale(-1, tensor_vec(
                        A.a(m), act_left(bj, N.mu_inv.apply(n)))))
                if not vec_is_zero(rel):
                    relations.append(rel)
    bt = BalancedTensor(A.space, N.space,
                        quotient_by(tensor_space(A.space, N.space), relations))
    amb = bt.ambient
    da, dn = A.dim, N.dim
    ea, en = A.space.basis_vector, N.space.basis_vector

    def act_img(k: int) -> Vector:
        ai, ni, ci = unrank((da, dn, da), k)
        return tensor_vec(A.mul(ea(ai), A.a_inv(ea(ci))), N.mu.apply(en(ni)))

    amb_action = LinearMap.from_function(tensor_space(amb, A.space), amb,
                                         act_img)

    def coact_img(k: int) -> Vector:
        ai, ni = unrank((da, dn), k)
        out = tensor_space(amb, H.space).zero()
        for c, a0, a1 in CA.rho(ea(ai)):
            out = vec_add(out, vec_scale(c, tensor_vec(
                tensor_vec(ea(a0), N.mu_inv.apply(en(ni))),
                H.a(H.space.basis_vector(a1)))))
        return out

    amb_coaction = LinearMap.from_function(amb, tensor_space(amb, H.space),
                                           coact_img)
    action = descend_action(amb_action, bt, A.space,
                            "the A-action on the induced module")
    coaction = descend_coaction(amb_coaction, bt, H.space,
                                "the coaction on the induced module")
    mu = descend_endo(A.alpha.tensor(N.mu), bt,
                      "the automorphism of the induced module")
    module = RelHopfModule(bt.space, mu, mu.inverse(), action, coaction, CA)
    return bt, module


@dataclass(frozen=True)
class AdjunctionPair:
    """eta_N: N -> (A (x)_B N)^{coH} and theta_N back, with the verdict."""

    eta: LinearMap
    theta: LinearMap
    is_iso: bool
    induced: RelHopfModule
    coinv: HomModule


def thm56_adjunction(N: HomModule, B: CoinvariantAlgebra,
                     gamma: QuantumIntegral) -> AdjunctionPair:
    """eta_N(n) = 1_A (x)_B n into the coinvariants of A (x)_B N, and
    theta_N(sum a_i (x)_B n_i) = sum t^l(a_i) . n_i; checks both composites
    are identities."""
    CA = B.of
    A = CA.algebra
    bt, ind = induction(N, B)
    coinv_mod, sub = coinvariant_module(ind, B)
    tl = quantum_trace_left(CA, gamma)

    def eta_img(i: int) -> Vector:
        q = bt.quotient.projection.apply(
            tensor_vec(A.unit, N.space.basis_vector(i)))
        coords = sub.coords(q)
        if coords is None:
            raise ValueError("1_A (x) n is not coinvariant in A (x)_B N")
        return coords

    eta = LinearMap.from_function(N.space, coinv_mod.space, eta_img)

    def theta_img(i: int) -> Vector:
        amb = bt.quotient.section.apply(sub.basis[i])
        out = N.space.zero()
        for k, c in enumerate(amb):
            if c == 0:
                continue
            ai, ni = unrank((A.dim, N.dim), k)
            tcoords = B.subspace.coords(tl.apply(A.space.basis_vector(ai)))
            if tcoords is None:
                raise ValueError("the left quantum trace does not land in B")
            out = vec_add(out, vec_scale(c, N.act(
                N.space.basis_vector(ni), tcoords)))
        return out

    theta = LinearMap.from_function(coinv_mod.space, N.space, theta_img)
    is_iso = (theta @ eta).is_identity() and (eta @ theta).is_identity()
    return AdjunctionPair(eta, theta, is_iso, ind, coinv_mod)


def beta_evaluation(M: RelHopfModule, B: CoinvariantAlgebra
                    ) -> tuple[BalancedTensor, LinearMap]:
    """beta_M: M^{coH} (x)_B A -> M, m (x)_B a -> m.a, with descent checked."""
    CA = B.of
    A = CA.algebra
    coinv_mod, sub = coinvariant_module(M, B)

    def act_right(c: Vector, b: Vector) -> Vector:
        out = coinv_mod.space.zero()
        for i, ci in enumerate(c):
            if ci == 0:
                continue
            coords = sub.coords(M.act(sub.basis[i], b))
            if coords is None:
                raise ValueError("coinvariants are not closed under B")
            out = vec_add(out, vec_scale(ci, coords))
        return out

    bt = balanced_tensor(coinv_mod.space, A.space, B,
                         act_right=act_right, mu_left=coinv_mod.mu,
                         act_left=A.mul, mu_right_inv=A.alpha_inv)

    def amb_img(k: int) -> Vector:
        ci, ai = unrank((coinv_mod.dim, A.dim), k)
        return M.act(sub.basis[ci], A.space.basis_vector(ai))

    amb = LinearMap.from_function(bt.ambient, M.space, amb_img)
    beta_m = descend_linear(amb, bt,
                            "the evaluation of coinvariants against A")
    return bt, beta_m


# ---------------------------------------------------------------------------
# Theorem-level drivers
# ---------------------------------------------------------------------------

def free_module(B: CoinvariantAlgebra, copies: int) -> HomModule:
    """The free right B-module B^copies with componentwise structure."""
    balg = B.algebra
    labels = tuple(f"e{c}.{lab}" for c in range(copies)
                   for lab in balg.space.labels)
    space = Space(labels)
    d = balg.dim

    def place(c: int, vec: Vector) -> Vector:
        vals = list(space.zero())
        for t, coeff in enumerate(vec):
            vals[c * d + t] = coeff
        return tuple(vals)

    def act_img(k: int) -> Vector:
        i, j = unrank((space.dim, d), k)
        c, bi = divmod(i, d)
        return place(c, balg.mul(balg.basis_vector(bi), balg.basis_vector(j)))

    action = LinearMap.from_function(tensor_space(space, balg.space), space,
                                     act_img)

    def mu_img(i: int) -> Vector:
        c, bi = divmod(i, d)
        return place(c, balg.a(balg.basis_vector(bi)))

    mu = LinearMap.from_function(space, space, mu_img)
    return HomModule(space, mu, mu.inverse(), action, balg)


def regular_induced(CA: ComoduleAlgebra) -> RelHopfModule:
    """A (x) H with the standard induced structures."""
    return induce_G(regular_rel_hopf(CA).as_module(), CA)


def thm57_check(CA: ComoduleAlgebra,
                test_modules: Optional[list[RelHopfModule]] = None,
                test_b_modules: Optional[list[HomModule]] = None) -> Report:
    """Verify the affineness criterion: when a total quantum integral exists
    and the canonical Galois map is surjective, induction and taking
    coinvariants are inverse equivalences on the supplied test objects."""
    rep = Report("affineness criterion")
    gamma = find_quantum_integral(CA, require_total=True)
    has_integral = isinstance(gamma, QuantumIntegral)
    rep.record("hypothesis: a total quantum integral exists", True,
               detail="feasible" if has_integral else "infeasible")
    rep.certificates["total_quantum_integral"] = has_integral

    B = coinvariants(CA)
    rep.certificates["coinvariant_dim"] = B.dim
    bt, aa_mod = balanced_tensor_AA(CA, B)
    from .modules import check_rel_hopf
    rep.record("the balanced tensor square is a relative Hopf module",
               check_rel_hopf(aa_mod).ok)
    gal = canonical_psi(CA, bt)
    rep.certificates["galois"] = gal.classification
    rep.record("hypothesis: the canonical Galois map is surjective", True,
               detail=gal.classification)

    # The flipped Galois map is a morphism of relative Hopf modules from
    # A (x) A with the twisted structures to the induced module A (x) H,
    # and is onto exactly when psi is.
    xi = galois_xi(CA)
    rep.record("xi respects the action and coaction",
               is_morphism(xi, xi_source_module(CA), regular_induced(CA)))
    if gal.surjective:
        rep.record("xi is surjective", rank(xi) == xi.codomain.dim)

    if not (has_integral and gal.surjective):
        rep.skip("conclusion: adjunction units are isomorphisms",
                 "hypotheses not satisfied")
        rep.skip("conclusion: evaluation counits are isomorphisms",
                 "hypotheses not satisfied")
        rep.certificates["equivalence"] = None
        return rep

    if test_b_modules is None:
        test_b_modules = [free_module(B, 1), free_module(B, 2)]
    for idx, N in enumerate(test_b_modules):
        pair = thm56_adjunction(N, B, gamma)
        rep.record(f"unit of adjunction is an isomorphism (module {idx})",
                   pair.is_iso)

    if test_modules is None:
        test_modules = [regular_rel_hopf(CA)]
    for idx, M in enumerate(test_modules):
        btm, beta_m = beta_evaluation(M, B)
        ok = rank(beta_m) == M.dim and btm.dim == M.dim
        rep.record(f"evaluation counit is an isomorphism (module {idx})", ok,
                   detail=f"rank {rank(beta_m)}, source dim {btm.dim}, "
                          f"target dim {M.dim}")
    rep.certificates["equivalence"] = rep.ok
    return rep


def cor58_check(H: HomHopfAlgebra,
                test_modules: Optional[list[RelHopfModule]] = None) -> Report:
    """Specialize the affineness criterion to A = H coacting on itself."""
    from .structures import regular_comodule_algebra
    rep = thm57_check(regular_comodule_algebra(H), test_modules)
    out = Report("affineness criterion for the regular coaction")
    out.results.extend(rep.results)
    out.certificates.update(rep.certificates)
    return out


def prop51_check(CA: ComoduleAlgebra, gamma: QuantumIntegral) -> Report:
    """Certify the retraction maps lam and Lam built from a total quantum
    integral, and the quantum trace projections onto the coinvariants."""
    rep = Report("quantum-integral retractions and trace projections")
    A, H = CA.algebra, CA.hopf
    lam, big = prop51_maps(CA, gamma)
    idh = LinearMap.identity(H.space)
    # lam retracts the beta-twisted coaction: lam(beta^{-1}(a0) (x) a1) = a;
    # the untwisted composite lam . rho is only the identity when beta = id
    rep.record("lam . (beta^{-1} x id) . rho_A = id_A",
               (lam @ A.alpha_inv.tensor(idh) @ CA.coaction).is_identity())
    rep.record("Lam . rho_A = id_A", (big @ CA.coaction).is_identity())

    # colinearity of lam in its twisted form:
    # lam(beta^{-1}(a) (x) h1) (x) alpha(h2) = rho_A(lam(a (x) h))
    ah = tensor_space(A.space, H.space)

    def colin_lhs(k: int) -> Vector:
        ai, hj = unrank((A.dim, H.dim), k)
        out = ah.zero()
        for c, h1, h2 in H.sweedler(H.space.basis_vector(hj)):
            out = vec_add(out, vec_scale(c, tensor_vec(
                lam.apply(tensor_vec(A.a_inv(A.space.basis_vector(ai)),
                                     H.space.basis_vector(h1))),
                H.a(H.space.basis_vector(h2)))))
        return out

    rep.record("lam(beta^{-1}(a) (x) h1) (x) alpha(h2) = rho_A(lam(a (x) h))",
               LinearMap.from_function(ah, ah, colin_lhs).same_matrix(
                   CA.coaction @ lam))
    rep.record("Lam is a relative-category morphism G(A) -> A",
               is_morphism(big, regular_induced(CA), regular_rel_hopf(CA)))

    B = coinvariants(CA)
    for tag, tr in (("t^l", quantum_trace_left(CA, gamma)),
                    ("t^r", quantum_trace_right(CA, gamma))):
        in_b = all(B.subspace.coords(tr.column(j)) is not None
                   for j in range(A.dim))
        rep.record(f"{tag} lands in the coinvariants", in_b)
        fixes_b = all(tr.apply(b) == b for b in B.subspace.basis)
        rep.record(f"{tag} restricts to the identity on B", fixes_b)
        rep.record(f"{tag} is idempotent", (tr @ tr).same_matrix(tr))
    tl = quantum_trace_left(CA, gamma)
    linear = all(tl.apply(A.mul(b, A.space.basis_vector(j)))
                 == A.mul(b, tl.apply(A.space.basis_vector(j)))
                 for b in B.subspace.basis for j in range(A.dim))
    rep.record("t^l is left B-linear", linear)
    tr = quantum_trace_right(CA, gamma)
    rlinear = all(tr.apply(A.mul(A.space.basis_vector(j), b))
                  == A.mul(tr.apply(A.space.basis_vector(j)), b)
                  for b in B.subspace.basis for j in range(A.dim))
    rep.record("t^r is right B-linear", rlinear)
    return rep


def thm56_check(CA: ComoduleAlgebra,
                test_b_modules: Optional[list[HomModule]] = None) -> Report:
    """When a total quantum integral exists, the unit of the induction /
    coinvariants adjunction is an isomorphism on the supplied B-modules."""
    from .modules import is_alinear, is_intertwining
    rep = Report("adjunction unit is an isomorphism")
    gamma = find_quantum_integral(CA, require_total=True)
    feasible = isinstance(gamma, QuantumIntegral)
    rep.record("hypothesis: a total quantum integral exists", True,
               detail="feasible" if feasible else "infeasible")
    rep.certificates["total_quantum_integral"] = feasible
    if not feasible:
        rep.skip("conclusion: unit and inverse on each test module",
                 "hypothesis not satisfied")
        return rep
    B = coinvariants(CA)
    if test_b_modules is None:
        test_b_modules = [free_module(B, 1), free_module(B, 2)]
    for idx, N in enumerate(test_b_modules):
        pair = thm56_adjunction(N, B, gamma)
        rep.record(f"theta . eta = id and eta . theta = id (module {idx})",
                   pair.is_iso)
        rep.record(f"eta is B-linear (module {idx})",
                   is_alinear(pair.eta, N, pair.coinv)
                   and is_intertwining(pair.eta, N, pair.coinv))
        rep.record(f"theta is B-linear (module {idx})",
                   is_alinear(pair.theta, pair.coinv, N)
                   and is_intertwining(pair.theta, pair.coinv, N))
    return rep
