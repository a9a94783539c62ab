"""Finite groups as multiplication tables, explicit matrix representations,
character sums, intertwiner bases, and grading by a central copy of the dual
grading group.

Numerical conventions: matrix identities are enforced to ``1e-9``, character
sums are rounded to integers with residual at most ``1e-6``; both are
configurable per call.  Composite tensor indices are always row-major,
``(i, j) -> i * d2 + j``, matching ``numpy.kron``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .abgroup import FinAbGroup, GroupElt
from .errors import ConsistencyError, GradingError, RepresentationError, StructuralError

MATRIX_TOL = 1e-9
INTEGER_TOL = 1e-6
INTERTWINER_TOL = 1e-8


class FiniteGroup:
    """A finite group given by its multiplication table over indices 0..order-1."""

    def __init__(self, table, element_names=None):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise StructuralError(f"multiplication table must be square, got {table.shape}")
        n = table.shape[0]
        if n == 0 or table.min() < 0 or table.max() >= n:
            raise StructuralError("table entries must be element indices in range")
        self.table = table
        self.table.setflags(write=False)
        self.order = n
        self.element_names = (
            tuple(element_names) if element_names is not None else tuple(range(n))
        )
        if len(self.element_names) != n:
            raise StructuralError("element_names length does not match order")

        identities = [
            e
            for e in range(n)
            if np.array_equal(table[e], np.arange(n)) and np.array_equal(table[:, e], np.arange(n))
        ]
        if len(identities) != 1:
            raise StructuralError("table has no (or no unique) identity element")
        self.identity = identities[0]

        inv = np.full(n, -1, dtype=np.int64)
        for a in range(n):
            hits = np.flatnonzero(table[a] == self.identity)
            if len(hits) != 1 or table[hits[0], a] != self.identity:
                raise StructuralError(f"element {a} has no two-sided inverse")
            inv[a] = hits[0]
        self.inverse = inv
        self.inverse.setflags(write=False)

        for a in range(n):  # (ab)c == a(bc) for all b, c at once
            if not np.array_equal(table[table[a]], table[a][table]):
                raise StructuralError(f"table is not associative at element {a}")

    @classmethod
    def from_permutations(cls, generators) -> FiniteGroup:
        """Generate a permutation group by closure; elements sorted lexicographically."""
        gens = [tuple(int(x) for x in g) for g in generators]
        if not gens:
            raise StructuralError("at least one permutation generator is required")
        width = len(gens[0])
        if any(len(g) != width or sorted(g) != list(range(width)) for g in gens):
            raise StructuralError("generators must be permutations of 0..k-1 of equal length")
        identity = tuple(range(width))
        elements = {identity}
        frontier = [identity]
        while frontier:
            new = []
            for p in frontier:
                for g in gens:
                    q = tuple(p[g[i]] for i in range(width))
                    if q not in elements:
                        elements.add(q)
                        new.append(q)
            frontier = new
        ordered = sorted(elements)
        index = {p: i for i, p in enumerate(ordered)}
        n = len(ordered)
        table = np.empty((n, n), dtype=np.int64)
        for i, p in enumerate(ordered):
            for j, q in enumerate(ordered):
                table[i, j] = index[tuple(p[q[k]] for k in range(width))]
        return cls(table, element_names=ordered)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Classes as sorted index tuples, ordered by smallest member."""
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for a in range(self.order):
            if seen[a]:
                continue
            orbit = {int(self.table[self.table[g, a], self.inverse[g]]) for g in range(self.order)}
            for x in orbit:
                seen[x] = True
            classes.append(tuple(sorted(orbit)))
        return tuple(classes)

    @cached_property
    def class_of(self) -> np.ndarray:
        out = np.empty(self.order, dtype=np.int64)
        for c, members in enumerate(self.conjugacy_classes):
            for x in members:
                out[x] = c
        out.setflags(write=False)
        return out

    @cached_property
    def class_sizes(self) -> np.ndarray:
        sizes = np.array([len(c) for c in self.conjugacy_classes], dtype=np.int64)
        sizes.setflags(write=False)
        return sizes

    @cached_property
    def center(self) -> tuple[int, ...]:
        return tuple(
            a
            for a in range(self.order)
            if np.array_equal(self.table[a], self.table[:, a])
        )

    @property
    def num_classes(self) -> int:
        return len(self.conjugacy_classes)


@dataclass(frozen=True, eq=False)
class MatrixRep:
    """One complex d x d matrix per group element, indexed like the group."""

    group: FiniteGroup
    matrices: np.ndarray

    def __post_init__(self):
        mats = np.ascontiguousarray(np.asarray(self.matrices, dtype=np.complex128))
        if mats.ndim != 3 or mats.shape[0] != self.group.order or mats.shape[1] != mats.shape[2]:
            raise StructuralError(f"expected (order, d, d) matrices, got {mats.shape}")
        mats.setflags(write=False)
        object.__setattr__(self, "matrices", mats)

    @property
    def dim(self) -> int:
        return self.matrices.shape[1]

    def __call__(self, g: int) -> np.ndarray:
        return self.matrices[g]


def rep_from_generators(group: FiniteGroup, generator_indices, generator_matrices) -> MatrixRep:
    """Extend matrices on generators to the whole group by shortest-word products."""
    gens = [int(g) for g in generator_indices]
    gen_mats = [np.asarray(m, dtype=np.complex128) for m in generator_matrices]
    if len(gens) != len(gen_mats) or not gens:
        raise StructuralError("need one matrix per generator index")
    d = gen_mats[0].shape[0]
    if any(m.shape != (d, d) for m in gen_mats):
        raise StructuralError("generator matrices must share one square shape")
    mats = np.full((group.order, d, d), np.nan, dtype=np.complex128)
    mats[group.identity] = np.eye(d)
    known = {group.identity}
    frontier = [group.identity]
    while frontier:
        new = []
        for a in frontier:
            for g, mg in zip(gens, gen_mats):
                b = group.mul(a, g)
                if b not in known:
                    mats[b] = mats[a] @ mg
                    known.add(b)
                    new.append(b)
        frontier = new
    if len(known) != group.order:
        raise StructuralError("generator indices do not generate the group")
    return MatrixRep(group, mats)


def validate_irrep(
    rep: MatrixRep, *, matrix_tol: float = MATRIX_TOL
) -> np.ndarray:
    """Check the homomorphism property on all pairs and irreducibility.

    Returns the character as a per-conjugacy-class complex vector.  Unitarity
    is checked but only warned on.
    """
    group, mats = rep.group, rep.matrices
    if not np.array_equal(mats[group.identity], np.eye(rep.dim)):
        raise RepresentationError("identity element is not represented by the identity matrix")
    for a in range(group.order):
        prod = np.einsum("ij,njk->nik", mats[a], mats)
        err = np.abs(prod - mats[group.table[a]]).max()
        if err > matrix_tol:
            raise RepresentationError(
                f"not a homomorphism: |rho(a)rho(b) - rho(ab)| = {err:.2e} at a={a}"
            )

    traces = np.einsum("nii->n", mats)
    chars = np.empty(group.num_classes, dtype=np.complex128)
    for c, members in enumerate(group.conjugacy_classes):
        vals = traces[list(members)]
        if np.abs(vals - vals[0]).max() > matrix_tol:
            raise RepresentationError(f"character not constant on conjugacy class {c}")
        chars[c] = vals[0]

    norm = float(np.sum(group.class_sizes * np.abs(chars) ** 2).real) / group.order
    if abs(norm - 1.0) > matrix_tol:
        raise RepresentationError(f"<chi, chi> = {norm:.6f}, representation is not irreducible")

    unit_err = max(
        float(np.abs(m @ m.conj().T - np.eye(rep.dim)).max()) for m in mats
    )
    if unit_err > 1e-6:
        warnings.warn(f"representation is not unitary (deviation {unit_err:.2e})")
    return chars


def hom_dim(
    group: FiniteGroup,
    chi1: np.ndarray,
    chi2: np.ndarray,
    chi3: np.ndarray,
    *,
    integer_tol: float = INTEGER_TOL,
) -> int:
    """``dim hom(M1 (x) M2, M3) = (1/|G|) sum_g chi1(g) chi2(g) conj(chi3(g))``."""
    chi1, chi2, chi3 = (np.asarray(c, dtype=np.complex128) for c in (chi1, chi2, chi3))
    if not chi1.shape == chi2.shape == chi3.shape == (group.num_classes,):
        raise StructuralError("characters must be per-class vectors on the same group")
    val = complex(np.sum(group.class_sizes * chi1 * chi2 * np.conj(chi3))) / group.order
    rounded = round(val.real)
    if abs(val.real - rounded) > integer_tol or abs(val.imag) > integer_tol or rounded < 0:
        raise ConsistencyError(f"character sum {val} is not a nonnegative integer")
    return int(rounded)


def tensor_rep(m1: MatrixRep, m2: MatrixRep) -> MatrixRep:
    """Elementwise Kronecker product; composite index (i, j) -> i * d2 + j."""
    if m1.group is not m2.group:
        raise StructuralError("tensor factors must share one group")
    n, d1, d2 = m1.group.order, m1.dim, m2.dim
    mats = np.einsum("nij,nkl->nikjl", m1.matrices, m2.matrices).reshape(n, d1 * d2, d1 * d2)
    return MatrixRep(m1.group, mats)


def dual_rep(m: MatrixRep) -> MatrixRep:
    """Dual (contragredient) representation ``g -> rho(g^{-1})^T``."""
    mats = m.matrices[m.group.inverse].transpose(0, 2, 1)
    return MatrixRep(m.group, mats)


def intertwiner_basis(
    m1: MatrixRep,
    m2: MatrixRep,
    m3: MatrixRep,
    *,
    tol: float = INTERTWINER_TOL,
    expected: int | None = None,
) -> list[np.ndarray]:
    """Basis of ``hom(M1 (x) M2, M3)`` via the group-averaging projector.

    The projector ``P(T) = (1/|G|) sum_g rho3(g) T (rho1 (x) rho2)(g^{-1})``
    acts on d3 x (d1 d2) matrices; its fixed space is the intertwiner space.
    The rank must equal the character-sum dimension exactly.
    """
    if not (m1.group is m2.group is m3.group):
        raise StructuralError("all three representations must share one group")
    group = m1.group
    prod = tensor_rep(m1, m2)
    d_in, d_out = prod.dim, m3.dim

    # row-major vec: vec(A T B) = (A kron B^T) vec(T)
    proj = np.zeros((d_out * d_in, d_out * d_in), dtype=np.complex128)
    for g in range(group.order):
        proj += np.kron(m3.matrices[g], prod.matrices[group.inv(g)].T)
    proj /= group.order

    idem_err = float(np.abs(proj @ proj - proj).max())
    if idem_err > tol:
        raise ConsistencyError(f"averaging projector not idempotent: {idem_err:.2e}")

    if expected is None:
        chi1 = validate_irrep(m1)
        chi2 = validate_irrep(m2)
        chi3 = validate_irrep(m3)
        expected = hom_dim(group, chi1, chi2, chi3)

    u, sing, _ = np.linalg.svd(proj)
    rank = int(np.sum(sing > 0.5))
    if rank != expected:
        raise ConsistencyError(
            f"projector rank {rank} does not match character dimension {expected}"
        )
    basis = []
    for i in range(rank):
        t = u[:, i].reshape(d_out, d_in)
        err = max(
            float(np.abs(m3.matrices[g] @ t - t @ prod.matrices[g]).max())
            for g in range(group.order)
        )
        if err > tol:
            raise ConsistencyError(f"projector output is not an intertwiner: {err:.2e}")
        basis.append(t)
    return basis


@dataclass(frozen=True)
class CentralEmbedding:
    """Images in G of the dual generators of the grading group's dual.

    ``images[i]`` is the group-element index representing the i-th standard
    dual generator; each image must be central with order dividing the
    corresponding invariant factor, so the map extends to a homomorphism.
    """

    grading: FinAbGroup
    images: tuple[int, ...]

    def validate(self, group: FiniteGroup) -> None:
        if len(self.images) != self.grading.rank:
            raise StructuralError(
                f"{len(self.images)} embedding images for rank {self.grading.rank}"
            )
        center = set(group.center)
        for img, n in zip(self.images, self.grading.factors):
            if not 0 <= img < group.order:
                raise StructuralError(f"embedding image {img} is not an element index")
            if img not in center:
                raise StructuralError(f"embedding image {img} is not central")
            if n % group.element_order(img) != 0:
                raise StructuralError(
                    f"embedding image {img} has order {group.element_order(img)}, "
                    f"which does not divide the invariant factor {n}"
                )


def grade_of(
    rep: MatrixRep,
    embedding: CentralEmbedding,
    *,
    matrix_tol: float = MATRIX_TOL,
) -> GroupElt:
    """The unique grade by which the central dual copy acts on an irreducible.

    Searches the grading group for the alpha with
    ``rho(iota(chi)) = chi(alpha) * I`` for every dual generator ``chi``.
    """
    grading = embedding.grading
    eye = np.eye(rep.dim)
    matches = []
    for alpha in grading.elements():
        ok = True
        for chi, img in zip(grading.dual_generators(), embedding.images):
            scalar = grading.pairing(chi, alpha).to_complex()
            if np.abs(rep.matrices[img] - scalar * eye).max() > matrix_tol:
                ok = False
                break
        if ok:
            matches.append(alpha)
    if len(matches) != 1:
        raise GradingError(
            f"central embedding acts with {len(matches)} candidate grades; expected exactly 1"
        )
    return matches[0]


@dataclass(frozen=True, eq=False)
class GradedIrrep:
    """An irreducible matrix representation with its grade and character."""

    label: str
    rep: MatrixRep
    grade: GroupElt
    character: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return self.rep.dim

    def __str__(self) -> str:
        return self.label
