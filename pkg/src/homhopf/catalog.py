"""Built-in catalog of small exactly-presented instances.

Every entry is validated against its structural axioms the first time it is
requested, and carries a table of expected results that the test-suite
recomputes on every run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import ParametersNotCoinvariant, UnknownEntry
from .linalg import (SCALAR_SPACE, LinearMap, Space, Vector, frac, space,
                     tensor_space, tensor_vec, unrank, vec_add, vec_scale)
from .modules import (RelHopfModule, check_rel_hopf, induce_G, prop31_check,
                      regular_rel_hopf)
from .report import Report
from .structures import (ComoduleAlgebra, HomAlgebra, HomCoalgebra,
                         HomHopfAlgebra, check_comodule_algebra,
                         check_hom_coalgebra, check_hom_hopf,
                         regular_comodule_algebra, twist)
from .verify import check_identity


# ---------------------------------------------------------------------------
# Building blocks
# ---------------------------------------------------------------------------

def cyclic_group_hopf(n: int) -> HomHopfAlgebra:
    """The group algebra of the cyclic group of order n with identity
    twisting maps."""
    labels = tuple("1" if i == 0 else ("g" if i == 1 else f"g{i}")
                   for i in range(n))
    sp = Space(labels)
    e = sp.basis_vector

    mult = LinearMap.from_function(
        tensor_space(sp, sp), sp,
        lambda k: e(sum(unrank((n, n), k)) % n))
    comult = LinearMap.from_function(
        sp, tensor_space(sp, sp), lambda i: tensor_vec(e(i), e(i)))
    counit = LinearMap.from_function(sp, SCALAR_SPACE,
                                     lambda i: (Fraction(1),))
    antipode = LinearMap.from_function(sp, sp, lambda i: e((-i) % n))
    ident = LinearMap.identity(sp)
    algebra = HomAlgebra(sp, mult, e(0), ident, ident)
    coalgebra = HomCoalgebra(sp, comult, counit, ident, ident)
    return HomHopfAlgebra.build(algebra, coalgebra, antipode)


def sweedler_hopf() -> HomHopfAlgebra:
    """The four-dimensional Hopf algebra with basis (1, g, x, gx), where
    g^2 = 1, x^2 = 0, xg = -gx, with identity twisting maps."""
    sp = space("1", "g", "x", "gx")
    e = sp.basis_vector
    one, g, x, gx = e(0), e(1), e(2), e(3)

    prod = {
        (0, 0): one, (0, 1): g, (0, 2): x, (0, 3): gx,
        (1, 0): g, (1, 1): one, (1, 2): gx, (1, 3): x,
        (2, 0): x, (2, 1): vec_scale(-1, gx), (2, 2): sp.zero(),
        (2, 3): sp.zero(),
        (3, 0): gx, (3, 1): vec_scale(-1, x), (3, 2): sp.zero(),
        (3, 3): sp.zero(),
    }
    mult = LinearMap.from_function(
        tensor_space(sp, sp), sp, lambda k: prod[unrank((4, 4), k)])

    big = tensor_space(sp, sp)
    cop = {
        0: tensor_vec(one, one),
        1: tensor_vec(g, g),
        2: vec_add(tensor_vec(x, one), tensor_vec(g, x)),
        3: vec_add(tensor_vec(gx, g), tensor_vec(one, gx)),
    }
    comult = LinearMap.from_function(sp, big, lambda i: cop[i])
    counit = LinearMap.from_function(
        sp, SCALAR_SPACE, lambda i: (Fraction(1 if i < 2 else 0),))
    s_img = {0: one, 1: g, 2: vec_scale(-1, gx), 3: x}
    antipode = LinearMap.from_function(sp, sp, lambda i: s_img[i])
    ident = LinearMap.identity(sp)
    algebra = HomAlgebra(sp, mult, one, ident, ident)
    coalgebra = HomCoalgebra(sp, comult, counit, ident, ident)
    return HomHopfAlgebra.build(algebra, coalgebra, antipode)


def twisted_cyclic3() -> HomHopfAlgebra:
    """kC3 twisted along the group automorphism g -> g^2."""
    H = cyclic_group_hopf(3)
    sp = H.space
    aut = LinearMap.from_function(
        sp, sp, lambda i: sp.basis_vector((2 * i) % 3))
    return twist(H, aut)


def trivial_comodule_algebra(H: HomHopfAlgebra) -> ComoduleAlgebra:
    """A = k with the trivial coaction 1 -> 1 (x) 1_H."""
    sp = space("1")
    ident = LinearMap.identity(sp)
    mult = LinearMap.from_function(tensor_space(sp, sp), sp,
                                   lambda k: sp.basis_vector(0))
    algebra = HomAlgebra(sp, mult, sp.basis_vector(0), ident, ident)
    coaction = LinearMap.from_function(
        sp, tensor_space(sp, H.space),
        lambda i: tensor_vec(sp.basis_vector(0), H.unit))
    return ComoduleAlgebra(algebra, H, coaction)


def matrix_coalgebra(n: int) -> HomCoalgebra:
    """The comatrix coalgebra with basis c_ij, Delta(c_ij) = sum_u
    c_iu (x) c_uj, eps(c_ij) = delta_ij, identity twisting."""
    labels = tuple(f"c{i}{j}" for i in range(n) for j in range(n))
    sp = Space(labels)
    e = sp.basis_vector

    def comult_img(k: int) -> Vector:
        i, j = unrank((n, n), k)
        out = tensor_space(sp, sp).zero()
        for u in range(n):
            out = vec_add(out, tensor_vec(e(i * n + u), e(u * n + j)))
        return out

    comult = LinearMap.from_function(sp, tensor_space(sp, sp), comult_img)
    counit = LinearMap.from_function(
        sp, SCALAR_SPACE,
        lambda k: (Fraction(1 if k // n == k % n else 0),))
    ident = LinearMap.identity(sp)
    return HomCoalgebra(sp, comult, counit, ident, ident)


def matrix_datum(n: int) -> ComoduleAlgebra:
    """The comatrix coalgebra coacting trivially on A = k.

    The multiplication attached to the coalgebra is the matrix-unit product
    c_ij c_kl = delta_jk c_il; only products against 1_H = sum_u c_uu are
    ever used by the integral equations, and those reduce to the unit law.
    No bialgebra or antipode claims are made for this datum, so only the
    coalgebra and the integral equations are checked for it.
    """
    C = matrix_coalgebra(n)
    sp = C.space
    e = sp.basis_vector

    def mult_img(k: int) -> Vector:
        a, b = unrank((n * n, n * n), k)
        i, j = divmod(a, n)
        r, s = divmod(b, n)
        return e(i * n + s) if j == r else sp.zero()

    mult = LinearMap.from_function(tensor_space(sp, sp), sp, mult_img)
    unit = sp.zero()
    for u in range(n):
        unit = vec_add(unit, e(u * n + u))
    ident = LinearMap.identity(sp)
    algebra = HomAlgebra(sp, mult, unit, ident, ident)
    antipode = LinearMap.zero(sp, sp)
    H = HomHopfAlgebra(algebra, C, antipode, None)
    return trivial_comodule_algebra(H)


# ---------------------------------------------------------------------------
# The two parameterised integral families
# ---------------------------------------------------------------------------

def matrix_family_gamma(CA: ComoduleAlgebra,
                        mu: list[list[Fraction]]) -> LinearMap:
    """gamma(c_ij)(c_rs) = delta_is beta(mu_rj) for the comatrix datum;
    mu is an n x n parameter matrix with entries in B = A^{coH}."""
    H = CA.hopf
    A = CA.algebra
    n = int(round(H.dim ** 0.5))
    _require_coinvariant_params(
        CA, [frac(mu[r][c]) for r in range(n) for c in range(n)])

    def img(k: int) -> Vector:
        a, b = unrank((H.dim, H.dim), k)
        i, j = divmod(a, n)
        r, s = divmod(b, n)
        if i != s:
            return A.space.zero()
        return A.a(vec_scale(frac(mu[r][j]), A.unit))

    return LinearMap.from_function(tensor_space(H.space, H.space),
                                   A.space, img)


def group_family_gamma(CA: ComoduleAlgebra,
                       mu: dict[int, Fraction]) -> LinearMap:
    """gamma(x)(y) = delta_xy beta(mu_x) on a group-algebra H acting on the
    trivial A = k; mu maps group-element index to a coinvariant scalar."""
    H = CA.hopf
    A = CA.algebra
    _require_coinvariant_params(CA, [frac(mu[i]) for i in range(H.dim)])

    def img(k: int) -> Vector:
        x, y = unrank((H.dim, H.dim), k)
        if x != y:
            return A.space.zero()
        return A.a(vec_scale(frac(mu[x]), A.unit))

    return LinearMap.from_function(tensor_space(H.space, H.space),
                                   A.space, img)


def _require_coinvariant_params(CA: ComoduleAlgebra, values) -> None:
    from .galois import coinvariant_subspace
    sub = coinvariant_subspace(CA.algebra.space, CA.algebra.alpha_inv,
                               CA.coaction, CA.hopf)
    for v in values:
        elem = vec_scale(frac(v), CA.algebra.unit)
        if not sub.contains(elem):
            raise ParametersNotCoinvariant(
                f"parameter {v} scales 1_A outside the coinvariants")


def example_family_verify(CA: ComoduleAlgebra, gamma_map: LinearMap,
                          expect_total: bool) -> Report:
    """Check the two integral equations for an explicit parameterised gamma
    and confirm that totality matches the trace criterion."""
    from .integrals import _beta_compat_residual, _eq41_residual, is_total
    from .linalg import vec_is_zero
    rep = Report("parameterised quantum integral family")
    rep.record("the integral equation holds",
               vec_is_zero(_eq41_residual(CA, gamma_map)))
    rep.record("gamma intertwines the twisting maps",
               vec_is_zero(_beta_compat_residual(CA, gamma_map)))
    rep.record("totality matches the trace criterion",
               is_total(CA, gamma_map) == expect_total,
               detail=f"expected total={expect_total}")
    return rep


# ---------------------------------------------------------------------------
# Catalog entries
# ---------------------------------------------------------------------------

@dataclass
class CatalogEntry:
    name: str
    kind: str                       # "hopf" or "coalgebra-datum"
    description: str
    comodule_algebra: ComoduleAlgebra
    modules: dict[str, RelHopfModule] = field(default_factory=dict)
    expected: dict[str, object] = field(default_factory=dict)

    @property
    def hopf(self) -> HomHopfAlgebra:
        return self.comodule_algebra.hopf

    def validate(self) -> Report:
        """Run the structural checks appropriate for this entry's kind."""
        rep = Report(f"catalog entry {self.name}")
        if self.kind == "hopf":
            rep.extend(check_hom_hopf(self.hopf), "hopf: ")
            rep.extend(check_comodule_algebra(self.comodule_algebra),
                       "comodule algebra: ")
            rep.extend(prop31_check(self.comodule_algebra), "comparison: ")
        else:
            rep.extend(check_hom_coalgebra(self.hopf.coalgebra),
                       "coalgebra: ")
        for name, mod in self.modules.items():
            rep.extend(check_rel_hopf(mod), f"module {name}: ")
        return rep


def _hopf_entry(name: str, description: str, H: HomHopfAlgebra,
                expected: dict) -> CatalogEntry:
    CA = regular_comodule_algebra(H)
    A_mod = regular_rel_hopf(CA)
    modules = {"A": A_mod, "G(A)": induce_G(A_mod.as_module(), CA)}
    return CatalogEntry(name, "hopf", description, CA, modules, expected)


def _trivial_entry(name: str, description: str, H: HomHopfAlgebra,
                   expected: dict) -> CatalogEntry:
    CA = trivial_comodule_algebra(H)
    A_mod = regular_rel_hopf(CA)
    modules = {"A": A_mod, "G(A)": induce_G(A_mod.as_module(), CA)}
    return CatalogEntry(name, "hopf", description, CA, modules, expected)


def _build_entries() -> dict[str, Callable[[], CatalogEntry]]:
    return {
        "kC2": lambda: _hopf_entry(
            "kC2", "group algebra of the cyclic group of order 2, "
            "coacting on itself", cyclic_group_hopf(2),
            {"total_integral": True, "total_integral_kernel_dim": 1,
             "total_quantum_integral": True, "galois": "bijective",
             "coinvariant_dim": 1}),
        "kC3": lambda: _hopf_entry(
            "kC3", "group algebra of the cyclic group of order 3, "
            "coacting on itself", cyclic_group_hopf(3),
            {"total_integral": True, "total_integral_kernel_dim": 2,
             "total_quantum_integral": True, "galois": "bijective",
             "coinvariant_dim": 1}),
        "kC3-twisted": lambda: _hopf_entry(
            "kC3-twisted", "kC3 twisted along the automorphism g -> g^2",
            twisted_cyclic3(),
            {"total_integral": True, "total_integral_kernel_dim": 1,
             "total_quantum_integral": True, "galois": "bijective",
             "coinvariant_dim": 1}),
        "sweedler-H4": lambda: _hopf_entry(
            "sweedler-H4", "the four-dimensional Hopf algebra coacting on "
            "itself", sweedler_hopf(),
            {"total_integral": True, "total_integral_kernel_dim": 3,
             "total_quantum_integral": True, "galois": "bijective",
             "coinvariant_dim": 1}),
        "trivial-k-over-kC2": lambda: _trivial_entry(
            "trivial-k-over-kC2", "A = k with the trivial coaction of kC2",
            cyclic_group_hopf(2),
            {"total_integral": True, "total_integral_kernel_dim": 0,
             "total_quantum_integral": True, "galois": "neither",
             "coinvariant_dim": 1}),
        "trivial-k-over-H4": lambda: _trivial_entry(
            "trivial-k-over-H4", "A = k with the trivial coaction of the "
            "four-dimensional Hopf algebra", sweedler_hopf(),
            {"total_integral": False, "total_quantum_integral": False,
             "galois": "neither", "coinvariant_dim": 1}),
        "kG-C2-datum": lambda: _trivial_entry(
            "kG-C2-datum", "A = k under kC2 with the diagonal parameterised "
            "integral family gamma(x)(y) = delta_xy mu_x",
            cyclic_group_hopf(2),
            {"total_integral": True, "family": "group",
             "family_total_iff": "all mu_x equal 1"}),
        "matrix-datum-2": lambda: CatalogEntry(
            "matrix-datum-2", "coalgebra-datum",
            "the 2 x 2 comatrix coalgebra coacting trivially on k, with "
            "the family gamma(c_ij)(c_rs) = delta_is mu_rj",
            matrix_datum(2), {},
            {"family": "matrix", "family_total_iff": "trace of mu equals 1"}),
    }


_BUILDERS = _build_entries()
_CACHE: dict[str, CatalogEntry] = {}


def names() -> list[str]:
    return sorted(_BUILDERS)


def entry(name: str) -> CatalogEntry:
    """Fetch a validated catalog entry by name."""
    if name not in _BUILDERS:
        raise UnknownEntry(f"unknown catalog entry {name!r}; "
                           f"known: {', '.join(names())}")
    if name not in _CACHE:
        ent = _BUILDERS[name]()
        rep = ent.validate()
        if not rep.ok:
            raise AssertionError(
                f"catalog entry {name} fails its structural checks:\n"
                + rep.pretty())
        _CACHE[name] = ent
    return _CACHE[name]


# ---------------------------------------------------------------------------
# Parameterised-example drivers
# ---------------------------------------------------------------------------

GROUP_FAMILY_CHOICES = [
    {0: Fraction(1), 1: Fraction(1)},
    {0: Fraction(1), 1: Fraction(0)},
    {0: Fraction(0), 1: Fraction(0)},
    {0: Fraction(2), 1: Fraction(1)},
    {0: Fraction(1), 1: Fraction(-1)},
]

MATRIX_FAMILY_CHOICES = [
    [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(0)]],
    [[Fraction(1, 2), Fraction(3)], [Fraction(-7), Fraction(1, 2)]],
    [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]],
    [[Fraction(0), Fraction(5)], [Fraction(2), Fraction(0)]],
    [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(-1)]],
]


def example_group_family(mu: dict[int, Fraction]) -> Report:
    """Verify the diagonal family over the order-2 group algebra; total
    exactly when every mu_x is 1."""
    CA = entry("kG-C2-datum").comodule_algebra
    gamma = group_family_gamma(CA, mu)
    expect_total = all(frac(v) == 1 for v in mu.values())
    return example_family_verify(CA, gamma, expect_total)


def example_matrix_family(mu: list[list[Fraction]]) -> Report:
    """Verify the comatrix family; total exactly when the trace of mu is 1."""
    CA = entry("matrix-datum-2").comodule_algebra
    gamma = matrix_family_gamma(CA, mu)
    expect_total = sum(frac(mu[u][u]) for u in range(2)) == 1
    return example_family_verify(CA, gamma, expect_total)
