"""Right Hom-modules, Hom-comodules and relative Hom-Hopf modules, the
induced structures M (x) H and A (x) N, the adjunction unit/counit, and
the comparison isomorphism between the two module structures on A (x) H.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (LinearMap, Space, Vector, bilinear, components,
                     rank_index, tensor_space, tensor_vec, unrank, vec_add,
                     vec_scale)
from .report import Report
from .structures import (ComoduleAlgebra, HomAlgebra, HomHopfAlgebra,
                         check_comodule_axioms)
from .verify import check_identity


@dataclass(frozen=True)
class HomModule:
    """A right (A, beta)-Hom-module (M, mu)."""

    space: Space
    mu: LinearMap
    mu_inv: LinearMap
    action: LinearMap        # M (x) A -> M
    over: HomAlgebra

    @staticmethod
    def build(space: Space, mu: LinearMap, action: LinearMap,
              over: HomAlgebra) -> "HomModule":
        return HomModule(space, mu, mu.inverse(), action, over)

    def act(self, m: Vector, a: Vector) -> Vector:
        return bilinear(self.action, m, a)

    @property
    def dim(self) -> int:
        return self.space.dim


@dataclass(frozen=True)
class HomComodule:
    """A right (H, alpha)-Hom-comodule (N, nu)."""

    space: Space
    mu: LinearMap
    mu_inv: LinearMap
    coaction: LinearMap      # N -> N (x) H
    over: HomHopfAlgebra

    @staticmethod
    def build(space: Space, mu: LinearMap, coaction: LinearMap,
              over: HomHopfAlgebra) -> "HomComodule":
        return HomComodule(space, mu, mu.inverse(), coaction, over)

    def rho(self, x: Vector):
        for (i, j), c in components(self.coaction.apply(x),
                                    (self.space.dim, self.over.dim)):
            yield c, i, j

    @property
    def dim(self) -> int:
        return self.space.dim


@dataclass(frozen=True)
class RelHopfModule:
    """Simultaneously a right A-module and right H-comodule over the pair
    (H, A), with the compatibility rho(m.a) = m0.a0 (x) m1 a1."""

    space: Space
    mu: LinearMap
    mu_inv: LinearMap
    action: LinearMap        # M (x) A -> M
    coaction: LinearMap      # M -> M (x) H
    over: ComoduleAlgebra

    @staticmethod
    def build(space: Space, mu: LinearMap, action: LinearMap,
              coaction: LinearMap, over: ComoduleAlgebra) -> "RelHopfModule":
        return RelHopfModule(space, mu, mu.inverse(), action, coaction, over)

    def act(self, m: Vector, a: Vector) -> Vector:
        return bilinear(self.action, m, a)

    def rho(self, x: Vector):
        for (i, j), c in components(self.coaction.apply(x),
                                    (self.space.dim, self.over.hopf.dim)):
            yield c, i, j

    def as_module(self) -> HomModule:
        return HomModule(self.space, self.mu, self.mu_inv, self.action,
                         self.over.algebra)

    def as_comodule(self) -> HomComodule:
        return HomComodule(self.space, self.mu, self.mu_inv, self.coaction,
                           self.over.hopf)

    @property
    def dim(self) -> int:
        return self.space.dim


# ---------------------------------------------------------------------------
# Axiom checkers
# ---------------------------------------------------------------------------

def check_hom_module(M: HomModule) -> Report:
    rep = Report(f"Hom-module axioms on dim {M.dim}")
    A = M.over
    sp, asp = M.space, A.space
    e, ea = sp.basis_vector, asp.basis_vector

    rep.record("mu invertible", (M.mu @ M.mu_inv).is_identity())
    check_identity(rep, "Hom-associativity: (m.a).alpha(b) = mu(m).(ab)",
                   [sp, asp, asp], sp,
                   lambda i, j, k: M.act(M.act(e(i), ea(j)), A.a(ea(k))),
                   lambda i, j, k: M.act(M.mu.apply(e(i)), A.mul(ea(j), ea(k))))
    check_identity(rep, "unit law: m.1 = mu(m)", [sp], sp,
                   lambda i: M.act(e(i), A.unit),
                   lambda i: M.mu.apply(e(i)))
    check_identity(rep, "action intertwines: mu(m.a) = mu(m).alpha(a)",
                   [sp, asp], sp,
                   lambda i, j: M.mu.apply(M.act(e(i), ea(j))),
                   lambda i, j: M.act(M.mu.apply(e(i)), A.a(ea(j))))
    return rep


def check_hom_comodule(N: HomComodule) -> Report:
    rep = Report(f"Hom-comodule axioms on dim {N.dim}")
    rep.record("mu invertible", (N.mu @ N.mu_inv).is_identity())
    check_comodule_axioms(rep, "", N.space, N.mu, N.mu_inv, N.coaction, N.over)
    return rep


def check_rel_hopf(M: RelHopfModule) -> Report:
    """Module axioms + comodule axioms + the compatibility condition."""
    rep = Report(f"relative Hom-Hopf module axioms on dim {M.dim}")
    rep.extend(check_hom_module(M.as_module()), prefix="module: ")
    rep.extend(check_hom_comodule(M.as_comodule()), prefix="comodule: ")

    CA = M.over
    H = CA.hopf
    sp, asp = M.space, CA.space
    e, ea = sp.basis_vector, asp.basis_vector
    mh = tensor_space(sp, H.space)

    def lhs(i, j):
        return M.coaction.apply(M.act(e(i), ea(j)))

    def rhs(i, j):
        out = mh.zero()
        for c1, m0, m1 in M.rho(e(i)):
            for c2, a0, a1 in CA.rho(ea(j)):
                out = vec_add(out, vec_scale(
                    c1 * c2, tensor_vec(M.act(sp.basis_vector(m0), ea(a0)),
                                        H.mul(H.space.basis_vector(m1),
                                              H.space.basis_vector(a1)))))
        return out

    check_identity(rep, "compatibility: rho(m.a) = m0.a0 (x) m1 a1",
                   [sp, asp], mh, lhs, rhs)
    return rep


# ---------------------------------------------------------------------------
# Induced structures
# ---------------------------------------------------------------------------

def regular_rel_hopf(CA: ComoduleAlgebra) -> RelHopfModule:
    """A itself with the regular action and its coaction."""
    return RelHopfModule(CA.space, CA.algebra.alpha, CA.algebra.alpha_inv,
                         CA.algebra.mult, CA.coaction, CA)


def induce_G(M: HomModule, CA: ComoduleAlgebra) -> RelHopfModule:
    """G(M) = M (x) H with (m (x) h).a = m.a0 (x) h a1 and
    rho(m (x) h) = (mu^{-1}(m) (x) h1) (x) alpha(h2)."""
    H = CA.hopf
    if M.over is not CA.algebra and M.over.mult.matrix != CA.algebra.mult.matrix:
        raise ValueError("module must live over the comodule algebra's algebra")
    sp = tensor_space(M.space, H.space)
    dm, dh, da = M.dim, H.dim, CA.dim
    eh = H.space.basis_vector

    def act_img(k: int) -> Vector:
        mi, hj, ak = unrank((dm, dh, da), k)
        out = sp.zero()
        for c, a0, a1 in CA.rho(CA.space.basis_vector(ak)):
            out = vec_add(out, vec_scale(c, tensor_vec(
                M.act(M.space.basis_vector(mi), CA.space.basis_vector(a0)),
                H.mul(eh(hj), eh(a1)))))
        return out

    action = LinearMap.from_function(tensor_space(sp, CA.space), sp, act_img)

    def coact_img(k: int) -> Vector:
        mi, hj = unrank((dm, dh), k)
        out = tensor_space(sp, H.space).zero()
        for c, h1, h2 in H.sweedler(eh(hj)):
            out = vec_add(out, vec_scale(c, tensor_vec(
                tensor_vec(M.mu_inv.apply(M.space.basis_vector(mi)), eh(h1)),
                H.a(eh(h2)))))
        return out

    coaction = LinearMap.from_function(sp, tensor_space(sp, H.space), coact_img)
    mu = M.mu.tensor(H.algebra.alpha)
    return RelHopfModule(sp, mu, M.mu_inv.tensor(H.algebra.alpha_inv),
                         action, coaction, CA)


def induce_Gtilde(N: HomComodule, CA: ComoduleAlgebra) -> RelHopfModule:
    """Gtilde(N) = A (x) N with (a (x) n).b = a beta^{-1}(b) (x) nu(n) and
    rho(a (x) n) = (a0 (x) n0) (x) n1 a1.

    The beta^{-1}/nu twists on the action come from reassociating
    (a (x) n) (x) b through the Hom-associator before acting on the left
    leg, and the coaction multiplies the H-outputs in the order n1 a1;
    with either twist dropped, or with the product taken as a1 n1, the
    compatibility axiom rho((a (x) n).b) = ((a (x) n)0 . b0) (x)
    (a (x) n)1 b1 fails already for four-dimensional noncommutative H.
    """
    H = CA.hopf
    A = CA.algebra
    sp = tensor_space(A.space, N.space)
    da, dn = A.dim, N.dim
    ea, en = A.space.basis_vector, N.space.basis_vector

    def act_img(k: int) -> Vector:
        ai, nj, bk = unrank((da, dn, da), k)
        return tensor_vec(A.mul(ea(ai), A.a_inv(ea(bk))),
                          N.mu.apply(en(nj)))

    action = LinearMap.from_function(tensor_space(sp, A.space), sp, act_img)

    def coact_img(k: int) -> Vector:
        ai, nj = unrank((da, dn), k)
        out = tensor_space(sp, H.space).zero()
        for c1, a0, a1 in CA.rho(ea(ai)):
            for c2, n0, n1 in N.rho(en(nj)):
                out = vec_add(out, vec_scale(c1 * c2, tensor_vec(
                    tensor_vec(ea(a0), en(n0)),
                    H.mul(H.space.basis_vector(n1), H.space.basis_vector(a1)))))
        return out

    coaction = LinearMap.from_function(sp, tensor_space(sp, H.space), coact_img)
    mu = A.alpha.tensor(N.mu)
    return RelHopfModule(sp, mu, A.alpha_inv.tensor(N.mu_inv),
                         action, coaction, CA)


def regular_comodule(H: HomHopfAlgebra) -> HomComodule:
    """H as a right comodule over itself via its comultiplication."""
    return HomComodule(H.space, H.coalgebra.gamma, H.coalgebra.gamma_inv,
                       H.coalgebra.comult, H)


# ---------------------------------------------------------------------------
# Adjunction unit / counit and morphism predicates
# ---------------------------------------------------------------------------

def adjunction_unit(M: RelHopfModule) -> LinearMap:
    """eta_M = rho_M : M -> G(F(M))."""
    return M.coaction


def adjunction_counit(N: HomModule, H: HomHopfAlgebra) -> LinearMap:
    """delta_N : N (x) H -> N, n (x) h -> eps(h) nu(n).

    The nu-twist makes delta_N right A-linear and closes both triangle
    identities exactly; the untwisted variant only closes them up to nu.
    """
    sp = tensor_space(N.space, H.space)

    def img(k: int) -> Vector:
        ni, hj = unrank((N.dim, H.dim), k)
        return vec_scale(H.eps(H.space.basis_vector(hj)),
                         N.mu.apply(N.space.basis_vector(ni)))

    return LinearMap.from_function(sp, N.space, img)


def is_colinear(f: LinearMap, M, N) -> bool:
    """rho_N . f = (f x id_H) . rho_M, entry-exactly."""
    H = N.over.hopf if isinstance(N, RelHopfModule) else N.over
    idh = LinearMap.identity(H.space)
    return (N.coaction @ f).same_matrix(f.tensor(idh) @ M.coaction)


def is_alinear(f: LinearMap, M, N) -> bool:
    """f . action_M = action_N . (f x id_A)."""
    A = M.over.algebra if isinstance(M, RelHopfModule) else M.over
    ida = LinearMap.identity(A.space)
    return (f @ M.action).same_matrix(N.action @ f.tensor(ida))


def is_intertwining(f: LinearMap, M, N) -> bool:
    """nu . f = f . mu (objects of the Hom-category are pairs (M, mu))."""
    return (N.mu @ f).same_matrix(f @ M.mu)


def is_morphism(f: LinearMap, M: RelHopfModule, N: RelHopfModule) -> bool:
    return (is_intertwining(f, M, N) and is_alinear(f, M, N)
            and is_colinear(f, M, N))


def triangle_identities_hold(M: RelHopfModule, N: HomModule,
                             CA: ComoduleAlgebra) -> bool:
    """G(delta_N) . eta_{G(N)} = id and delta_{F(M)} . F(eta_M) = id."""
    H = CA.hopf
    GN = induce_G(N, CA)
    delta_N = adjunction_counit(N, H)
    g_delta = delta_N.tensor(LinearMap.identity(H.space))
    first = (g_delta @ GN.coaction).is_identity()
    delta_FM = adjunction_counit(M.as_module(), H)
    second = (delta_FM @ M.coaction).is_identity()
    return first and second


# ---------------------------------------------------------------------------
# Proposition: G(A) and Gtilde(H) are isomorphic on A (x) H
# ---------------------------------------------------------------------------

def prop31_u(CA: ComoduleAlgebra) -> LinearMap:
    """u(a (x) h) = beta(a0) (x) alpha(h) a1, a morphism Gtilde(H) -> G(A).

    The alpha on the middle leg is forced once alpha is not the identity:
    the variants with h or alpha^{-1}(h) in its place are still bijective
    but fail colinearity for the Gtilde(H) coaction on a twisted group
    algebra with nontrivial alpha.
    """
    A, H = CA.algebra, CA.hopf
    sp = tensor_space(A.space, H.space)
    eh = H.space.basis_vector

    def img(k: int) -> Vector:
        ai, hj = unrank((A.dim, H.dim), k)
        out = sp.zero()
        for c, a0, a1 in CA.rho(A.space.basis_vector(ai)):
            out = vec_add(out, vec_scale(c, tensor_vec(
                A.a(A.space.basis_vector(a0)),
                H.mul(H.a(eh(hj)), eh(a1)))))
        return out

    return LinearMap.from_function(sp, sp, img)


def prop31_v(CA: ComoduleAlgebra) -> LinearMap:
    """v(a (x) h) = beta(a0) (x) alpha(h) S^{-1}(a1), the two-sided inverse
    of u and a morphism G(A) -> Gtilde(H).

    The inverse antipode is what makes u and v mutually inverse for every
    Hopf algebra with bijective antipode; a variant with S in place of
    S^{-1} only inverts u when the coproduct is cocommutative, since it
    relies on S(c2) c1 = eps(c) 1.
    """
    A, H = CA.algebra, CA.hopf
    H.require_bijective_antipode()
    sp = tensor_space(A.space, H.space)
    eh = H.space.basis_vector

    def img(k: int) -> Vector:
        ai, hj = unrank((A.dim, H.dim), k)
        out = sp.zero()
        for c, a0, a1 in CA.rho(A.space.basis_vector(ai)):
            out = vec_add(out, vec_scale(c, tensor_vec(
                A.a(A.space.basis_vector(a0)),
                H.mul(H.a(eh(hj)), H.s_inv(eh(a1))))))
        return out

    return LinearMap.from_function(sp, sp, img)


def prop31_check(CA: ComoduleAlgebra) -> Report:
    """Certify that u and v are mutually inverse morphisms between the two
    induced module structures on A (x) H: u : Gtilde(H) -> G(A) and
    v : G(A) -> Gtilde(H)."""
    rep = Report("comparison isomorphism G(A) ~ Gtilde(H)")
    GA = induce_G(regular_rel_hopf(CA).as_module(), CA)
    GtH = induce_Gtilde(regular_comodule(CA.hopf), CA)
    rep.extend(check_rel_hopf(GA), "G(A)")
    rep.extend(check_rel_hopf(GtH), "Gtilde(H)")
    u = prop31_u(CA)
    v = prop31_v(CA)
    rep.record("u . v = id", (u @ v).is_identity())
    rep.record("v . u = id", (v @ u).is_identity())
    rep.record("u is a morphism Gtilde(H) -> G(A)", is_morphism(u, GtH, GA))
    rep.record("v is a morphism G(A) -> Gtilde(H)", is_morphism(v, GA, GtH))
    return rep
