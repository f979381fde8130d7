"""Exact rational linear algebra over finite-dimensional spaces.

Everything downstream (algebra structure maps, coactions, integrals,
Galois maps) is a matrix of Fractions over a fixed basis.  All
arithmetic is exact; there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Coerce ints/strings/Fractions to an exact rational."""
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# Spaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Space:
    """A finite-dimensional vector space with a distinguished labelled basis."""

    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) < 1:
            raise ValueError("a Space needs at least one basis label")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be pairwise distinct")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def basis_vector(self, i: int) -> Vector:
        return tuple(ONE if j == i else ZERO for j in range(self.dim))

    def basis(self) -> Iterator[Vector]:
        for i in range(self.dim):
            yield self.basis_vector(i)

    def zero(self) -> Vector:
        return (ZERO,) * self.dim

    def __repr__(self):
        return f"Space({list(self.labels)})"


def space(*labels: str) -> Space:
    return Space(tuple(labels))


SCALAR_SPACE = space("k")


def tensor_space(*spaces: Space) -> Space:
    """Tensor product space, row-major (left factor slowest)."""
    labels = [""]
    for sp in spaces:
        labels = [a + ("⊗" if a else "") + b for a in labels for b in sp.labels]
    return Space(tuple(labels))


# ---------------------------------------------------------------------------
# Vector helpers
# ---------------------------------------------------------------------------

def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))

def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))

def vec_scale(c: Fraction, x: Vector) -> Vector:
    return tuple(c * a for a in x)

def vec_is_zero(x: Vector) -> bool:
    return all(a == 0 for a in x)

def tensor_vec(x: Vector, y: Vector) -> Vector:
    """Kronecker product with the global row-major convention."""
    return tuple(a * b for a in x for b in y)

def unrank(dims: Sequence[int], k: int) -> tuple[int, ...]:
    """Split a composite (row-major) basis index into per-factor indices."""
    out = []
    for d in reversed(dims):
        out.append(k % d)
        k //= d
    return tuple(reversed(out))

def rank_index(dims: Sequence[int], idxs: Sequence[int]) -> int:
    k = 0
    for d, i in zip(dims, idxs):
        k = k * d + i
    return k


# ---------------------------------------------------------------------------
# Linear maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearMap:
    """A linear map in fixed bases, stored as a codomain.dim x domain.dim matrix."""

    domain: Space
    codomain: Space
    matrix: tuple[Vector, ...]   # rows

    def __post_init__(self):
        if len(self.matrix) != self.codomain.dim:
            raise ValueError("matrix row count does not match codomain dim")
        if any(len(row) != self.domain.dim for row in self.matrix):
            raise ValueError("matrix column count does not match domain dim")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_rows(domain: Space, codomain: Space, rows) -> "LinearMap":
        return LinearMap(domain, codomain,
                         tuple(tuple(frac(x) for x in row) for row in rows))

    @staticmethod
    def from_columns(domain: Space, codomain: Space, cols: Sequence[Vector]) -> "LinearMap":
        rows = tuple(tuple(cols[j][i] for j in range(domain.dim))
                     for i in range(codomain.dim))
        return LinearMap(domain, codomain, rows)

    @staticmethod
    def from_function(domain: Space, codomain: Space,
                      fn: Callable[[int], Vector]) -> "LinearMap":
        """Build a map from its values on domain basis vectors."""
        return LinearMap.from_columns(domain, codomain,
                                      [fn(j) for j in range(domain.dim)])

    @staticmethod
    def identity(sp: Space) -> "LinearMap":
        return LinearMap(sp, sp, tuple(sp.basis_vector(i) for i in range(sp.dim)))

    @staticmethod
    def zero(domain: Space, codomain: Space) -> "LinearMap":
        return LinearMap(domain, codomain, tuple((ZERO,) * domain.dim
                                                 for _ in range(codomain.dim)))

    # -- evaluation ---------------------------------------------------------

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.matrix)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.domain.dim:
            raise ValueError("vector length does not match domain dim")
        out = list(self.codomain.zero())
        for j, c in enumerate(v):
            if c == 0:
                continue
            for i, row in enumerate(self.matrix):
                if row[j] != 0:
                    out[i] += c * row[j]
        return tuple(out)

    def __call__(self, v: Vector) -> Vector:
        return self.apply(v)

    # -- algebra of maps ----------------------------------------------------

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """Composition self after other."""
        if other.codomain.dim != self.domain.dim:
            raise ValueError("maps are not composable")
        cols = [self.apply(other.column(j)) for j in range(other.domain.dim)]
        return LinearMap.from_columns(other.domain, self.codomain, cols)

    def tensor(self, other: "LinearMap") -> "LinearMap":
        """Tensor product f (x) g with row-major basis ordering."""
        dom = tensor_space(self.domain, other.domain)
        cod = tensor_space(self.codomain, other.codomain)
        rows = tuple(tensor_vec(r1, r2) for r1 in self.matrix for r2 in other.matrix)
        return LinearMap(dom, cod, rows)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.domain, self.codomain,
                         tuple(vec_add(a, b) for a, b in zip(self.matrix, other.matrix)))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.domain, self.codomain,
                         tuple(vec_sub(a, b) for a, b in zip(self.matrix, other.matrix)))

    def scale(self, c) -> "LinearMap":
        c = frac(c)
        return LinearMap(self.domain, self.codomain,
                         tuple(vec_scale(c, row) for row in self.matrix))

    def same_matrix(self, other: "LinearMap") -> bool:
        return self.matrix == other.matrix

    def is_identity(self) -> bool:
        if self.domain.dim != self.codomain.dim:
            return False
        return self.matrix == tuple(self.codomain.basis_vector(i)
                                    for i in range(self.codomain.dim))

    def is_zero(self) -> bool:
        return all(vec_is_zero(row) for row in self.matrix)

    def inverse(self) -> "LinearMap":
        """Exact inverse; raises ValueError if the map is not invertible."""
        n = self.domain.dim
        if self.codomain.dim != n:
            raise ValueError("only square maps can be inverted")
        aug = [list(self.matrix[i]) + list(self.domain.basis_vector(i)) for i in range(n)]
        rows, pivots = _rref(aug, 2 * n)
        if pivots != list(range(n)):
            raise ValueError("map is not invertible")
        inv_rows = tuple(tuple(rows[i][n:]) for i in range(n))
        return LinearMap(self.codomain, self.domain, inv_rows)

    def transpose_rank_oracle(self) -> int:
        """Rank via an independent elimination order (reversed columns)."""
        return _rank_rows([list(row) for row in self.matrix],
                          self.domain.dim,
                          col_order=list(range(self.domain.dim - 1, -1, -1)))

    def __repr__(self):
        return f"LinearMap({self.domain.dim}->{self.codomain.dim})"


# ---------------------------------------------------------------------------
# Elimination, rank, affine solving
# ---------------------------------------------------------------------------

def _rref(rows: list[list[Fraction]], ncols: int,
          col_order: Optional[Sequence[int]] = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns).

    Columns are scanned in col_order (default leftmost-first); within a
    column the topmost available row is the pivot, so the output is
    deterministic.
    """
    if col_order is None:
        col_order = range(ncols)
    pivots: list[int] = []
    r = 0
    for c in col_order:
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _rank_rows(rows: list[list[Fraction]], ncols: int,
               col_order: Optional[Sequence[int]] = None) -> int:
    if not rows:
        return 0
    _, pivots = _rref(rows, ncols, col_order)
    return len(pivots)


def rank(f: LinearMap) -> int:
    """Exact rank by Gaussian elimination with leftmost pivots."""
    return _rank_rows([list(row) for row in f.matrix], f.domain.dim)


def rank_of_vectors(vectors: Iterable[Vector], dim: int) -> int:
    return _rank_rows([list(v) for v in vectors], dim)


@dataclass(frozen=True)
class AffineSolution:
    """A certified solution of coeff . x = rhs together with ker(coeff)."""

    particular: Vector
    kernel: tuple[Vector, ...]


@dataclass(frozen=True)
class Infeasible:
    """Rank certificate for an unsolvable affine system."""

    system_rank: int
    augmented_rank: int


def solve_affine(coeff: LinearMap, rhs: Vector) -> AffineSolution | Infeasible:
    """Solve coeff . x = rhs exactly.

    Returns a particular solution (free variables set to zero) plus a
    kernel basis, or an Infeasible certificate with
    augmented_rank = system_rank + 1.
    """
    m, n = coeff.codomain.dim, coeff.domain.dim
    if len(rhs) != m:
        raise ValueError("rhs length does not match codomain dim")
    aug = [list(coeff.matrix[i]) + [rhs[i]] for i in range(m)]
    rows, pivots = _rref(aug, n + 1)
    if n in pivots:
        return Infeasible(system_rank=len(pivots) - 1, augmented_rank=len(pivots))
    pivot_cols = pivots
    free_cols = [c for c in range(n) if c not in pivot_cols]
    particular = [ZERO] * n
    for r, c in enumerate(pivot_cols):
        particular[c] = rows[r][n]
    kernel = []
    for fc in free_cols:
        v = [ZERO] * n
        v[fc] = ONE
        for r, c in enumerate(pivot_cols):
            v[c] = -rows[r][fc]
        kernel.append(tuple(v))
    return AffineSolution(tuple(particular), tuple(kernel))


def kernel_basis(f: LinearMap) -> tuple[Vector, ...]:
    sol = solve_affine(f, f.codomain.zero())
    assert isinstance(sol, AffineSolution)
    return sol.kernel


# ---------------------------------------------------------------------------
# Subspaces and quotient spaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of an ambient space, given by a linearly independent basis."""

    ambient: Space
    basis: tuple[Vector, ...]

    def __post_init__(self):
        if self.basis and rank_of_vectors(self.basis, self.ambient.dim) != len(self.basis):
            raise ValueError("subspace basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, v: Vector) -> Optional[Vector]:
        """Coordinates of v in the subspace basis, or None if v is outside."""
        if not self.basis:
            return () if vec_is_zero(v) else None
        dom = Space(tuple(f"s{i}" for i in range(len(self.basis))))
        emb = LinearMap.from_columns(dom, self.ambient, list(self.basis))
        sol = solve_affine(emb, v)
        return sol.particular if isinstance(sol, AffineSolution) else None

    def contains(self, v: Vector) -> bool:
        return self.coords(v) is not None

    def embed(self, coords: Vector) -> Vector:
        out = self.ambient.zero()
        for c, b in zip(coords, self.basis):
            out = vec_add(out, vec_scale(c, b))
        return out


def span(ambient: Space, vectors: Iterable[Vector]) -> Subspace:
    """Canonical (RREF) basis of the span of the given vectors."""
    rows, pivots = _rref([list(v) for v in vectors], ambient.dim)
    basis = tuple(tuple(rows[i]) for i in range(len(pivots)))
    return Subspace(ambient, basis)


@dataclass(frozen=True)
class QuotientSpace:
    """ambient / span(relations), with an explicit projection and section."""

    ambient: Space
    relations: Subspace
    quotient: Space
    projection: LinearMap   # ambient -> quotient
    section: LinearMap      # quotient -> ambient

    @property
    def dim(self) -> int:
        return self.quotient.dim


def quotient_by(ambient: Space, relations: Iterable[Vector]) -> QuotientSpace:
    """Quotient of ambient by the span of the relation vectors.

    The section sends quotient basis vectors to the free-coordinate unit
    vectors of the ambient space; projection reduces modulo the RREF of
    the relations, so projection . section = id and
    ker(projection) = span(relations).
    """
    rel = span(ambient, relations)
    n = ambient.dim
    rows, pivots = _rref([list(v) for v in rel.basis], n)
    free_cols = [c for c in range(n) if c not in pivots]
    qlabels = tuple(f"[{ambient.labels[c]}]" for c in free_cols)
    if not free_cols:
        raise ValueError("relations span the whole space; zero quotient unsupported")
    qspace = Space(qlabels)
    proj_cols = []
    for j in range(n):
        if j in pivots:
            r = pivots.index(j)
            col = tuple(-rows[r][fc] for fc in free_cols)
        else:
            fi = free_cols.index(j)
            col = tuple(ONE if i == fi else ZERO for i in range(len(free_cols)))
        proj_cols.append(col)
    projection = LinearMap.from_columns(ambient, qspace, proj_cols)
    section = LinearMap.from_columns(
        qspace, ambient, [ambient.basis_vector(fc) for fc in free_cols])
    return QuotientSpace(ambient, rel, qspace, projection, section)


def swap_map(left: Space, right: Space) -> LinearMap:
    """The flip x (x) y -> y (x) x."""
    dom = tensor_space(left, right)
    cod = tensor_space(right, left)

    def image(k: int) -> Vector:
        i, j = unrank((left.dim, right.dim), k)
        return cod.basis_vector(rank_index((right.dim, left.dim), (j, i)))

    return LinearMap.from_function(dom, cod, image)


def bilinear(f: LinearMap, x: Vector, y: Vector) -> Vector:
    """Evaluate f: X (x) Y -> Z on a pair of vectors, skipping zero entries."""
    dy = len(y)
    out = list(f.codomain.zero())
    for i, a in enumerate(x):
        if a == 0:
            continue
        base = i * dy
        for j, b in enumerate(y):
            if b == 0:
                continue
            c = a * b
            col = f.column(base + j)
            for k, v in enumerate(col):
                if v != 0:
                    out[k] += c * v
    return tuple(out)


def components(v: Vector, dims: Sequence[int]):
    """Yield ((i1, ..., ir), coeff) for the nonzero entries of a tensor vector."""
    for k, c in enumerate(v):
        if c != 0:
            yield unrank(dims, k), c


def map_equal(f: LinearMap, g: LinearMap) -> bool:
    """Entry-exact equality of matrices (spaces compared by dimension)."""
    return (f.domain.dim == g.domain.dim and f.codomain.dim == g.codomain.dim
            and f.matrix == g.matrix)
