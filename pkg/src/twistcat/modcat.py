"""The braided ribbon category of graded representations twisted by a cocycle.

Tensor words are flattened to a single row-major index space, so rebracketing
is the identity and associators are pure scalars times the identity matrix.
Structure morphisms:

    associator   F(a1, a2, a3)^{-1} * I
    braiding     Omega(a1, a2)^{-1} * flip
    evaluation   F(a, -a, a)^{-1} * <., .>        (on M* (x) M)
    coevaluation sum_i e_i (x) e_i'               (into M (x) M*)
    twist        Omega(a, a)^{-1}

The coherence suite checks pentagon, triangle, both hexagons, the snake
identities, balancing and twist-duality as honest matrix equations, and
doubles every scalar identity as exact exponent arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .abgroup import GroupElt
from .cocycle import AbelianCocycle, AxiomCheck, CoherenceReport, validate_cocycle
from .errors import CocycleError, StructuralError
from .grouprep import (
    CentralEmbedding,
    FiniteGroup,
    GradedIrrep,
    MatrixRep,
    dual_rep,
    grade_of,
    hom_dim,
    intertwiner_basis,
    validate_irrep,
)
from .unitscalar import UnitScalar

MAX_WORD_DIM = 4096


@dataclass(frozen=True, eq=False)
class StructureMorphism:
    """A structure map as an explicit matrix between flattened tensor words."""

    matrix: np.ndarray
    source: tuple[str, ...]
    target: tuple[str, ...]


def flip_matrix(d1: int, d2: int) -> np.ndarray:
    """Permutation matrix sending coordinate (i, j) of V1 (x) V2 to (j, i)."""
    cols = np.arange(d1 * d2)
    rows = (cols % d2) * d1 + cols // d2
    out = np.zeros((d1 * d2, d1 * d2))
    out[rows, cols] = 1.0
    return out


class TwistedCategory:
    """A finite group with a complete graded irrep catalog and a cocycle.

    Validates everything eagerly: the cocycle axioms, irreducibility and the
    homomorphism property of every catalog member, centrality of the grading
    embedding, the declared grades, and (for complete catalogs) the
    sum-of-squares identity ``sum dim^2 = |G|``.
    """

    def __init__(
        self,
        group: FiniteGroup,
        cocycle: AbelianCocycle,
        embedding: CentralEmbedding,
        irreps: dict[str, MatrixRep],
        *,
        complete: bool = True,
        matrix_tol: float = 1e-9,
        validate: bool = True,
    ):
        if embedding.grading != cocycle.group:
            raise StructuralError("embedding and cocycle must share the grading group")
        embedding.validate(group)
        if validate:
            cocycle_report = validate_cocycle(cocycle)
            if not cocycle_report.passed:
                first = cocycle_report.failures()[0]
                raise CocycleError(
                    f"cocycle violates the {first.axiom} axiom at {first.witness}",
                    report=cocycle_report,
                )
        self.group = group
        self.cocycle = cocycle
        self.embedding = embedding
        self.grading = cocycle.group
        self.matrix_tol = matrix_tol

        catalog = []
        for label, rep in irreps.items():
            if rep.group is not group:
                raise StructuralError(f"irrep {label!r} lives on a different group")
            character = validate_irrep(rep, matrix_tol=matrix_tol)
            grade = grade_of(rep, embedding, matrix_tol=matrix_tol)
            catalog.append(GradedIrrep(label, rep, grade, character))
        self.catalog: tuple[GradedIrrep, ...] = tuple(catalog)
        self.complete = complete
        if complete:
            total = sum(m.dim**2 for m in self.catalog)
            if total != group.order:
                raise StructuralError(
                    f"catalog declared complete but sum of dim^2 = {total} != |G| = {group.order}"
                )

        unit_rep = MatrixRep(group, np.ones((group.order, 1, 1), dtype=np.complex128))
        self.unit = GradedIrrep(
            "1", unit_rep, self.grading.zero, np.ones(group.num_classes, dtype=np.complex128)
        )

    def __getitem__(self, label: str) -> GradedIrrep:
        for m in self.catalog:
            if m.label == label:
                return m
        raise KeyError(label)

    def dual_object(self, m: GradedIrrep) -> GradedIrrep:
        """The contragredient of a catalog member: grade negates, character conjugates."""
        return GradedIrrep(
            m.label + "*", dual_rep(m.rep), self.grading.neg(m.grade), np.conj(m.character)
        )

    # -- word helpers ---------------------------------------------------------

    @staticmethod
    def _as_word(obj) -> tuple[GradedIrrep, ...]:
        if isinstance(obj, GradedIrrep):
            return (obj,)
        return tuple(obj)

    def word_dim(self, obj) -> int:
        return int(np.prod([m.dim for m in self._as_word(obj)], initial=1))

    def word_grade(self, obj) -> GroupElt:
        grade = self.grading.zero
        for m in self._as_word(obj):
            grade = self.grading.add(grade, m.grade)
        return grade

    def word_labels(self, obj) -> tuple[str, ...]:
        return tuple(m.label for m in self._as_word(obj))

    # -- structure morphisms ----------------------------------------------------

    def f_scalar(self, a1: GroupElt, a2: GroupElt, a3: GroupElt) -> UnitScalar:
        return self.cocycle.f(a1, a2, a3)

    def omega_scalar(self, a1: GroupElt, a2: GroupElt) -> UnitScalar:
        return self.cocycle.omega(a1, a2)

    def associator(self, m1, m2, m3) -> StructureMorphism:
        """``F(a1,a2,a3)^{-1}`` times the identity on the flattened triple space."""
        a = tuple(self.word_grade(m) for m in (m1, m2, m3))
        d = self.word_dim(m1) * self.word_dim(m2) * self.word_dim(m3)
        scalar = self.f_scalar(*a).inverse().to_complex()
        labels = self.word_labels(m1) + self.word_labels(m2) + self.word_labels(m3)
        return StructureMorphism(scalar * np.eye(d), labels, labels)

    def braiding(self, m1, m2) -> StructureMorphism:
        """``Omega(a1,a2)^{-1}`` times the flip onto the reversed word."""
        a1, a2 = self.word_grade(m1), self.word_grade(m2)
        d1, d2 = self.word_dim(m1), self.word_dim(m2)
        scalar = self.omega_scalar(a1, a2).inverse().to_complex()
        return StructureMorphism(
            scalar * flip_matrix(d1, d2),
            self.word_labels(m1) + self.word_labels(m2),
            self.word_labels(m2) + self.word_labels(m1),
        )

    def twist(self, m) -> UnitScalar:
        """The ribbon scalar ``Omega(a, a)^{-1}`` on a grade-a object."""
        a = self.word_grade(m)
        return self.omega_scalar(a, a).inverse()

    def evaluation(self, m) -> StructureMorphism:
        """Row vector on M* (x) M: ``(f', v) -> F(a,-a,a)^{-1} f'(v)``."""
        a = self.word_grade(m)
        d = self.word_dim(m)
        scalar = self.f_scalar(a, self.grading.neg(a), a).inverse().to_complex()
        vec = scalar * np.eye(d).reshape(1, d * d)  # entry at (j, i) is delta_ji
        labels = self.word_labels(m)
        dual = tuple(lab + "*" for lab in labels)
        return StructureMorphism(vec, dual + labels, ())

    def coevaluation(self, m) -> StructureMorphism:
        """Column vector into M (x) M*: ``1 -> sum_i e_i (x) e_i'``."""
        d = self.word_dim(m)
        vec = np.eye(d).reshape(d * d, 1)
        labels = self.word_labels(m)
        dual = tuple(lab + "*" for lab in labels)
        return StructureMorphism(vec, (), labels + dual)

    # -- trace, dimension, S-matrix ---------------------------------------------

    def cat_trace(self, m, f: np.ndarray) -> complex:
        """Categorical trace: ``e_M . R_{M,M*} . ((theta f) (x) 1) . i_M``.

        The middle arrows act by reshaping instead of materializing the
        ``d^2 x d^2`` permutation matrix; the composite is the same linear map.
        """
        a = self.word_grade(m)
        d = self.word_dim(m)
        f = np.asarray(f, dtype=np.complex128)
        if f.shape != (d, d):
            raise StructuralError(f"endomorphism must be {d} x {d}, got {f.shape}")
        theta = self.twist(m).to_complex()
        braid = self.omega_scalar(a, self.grading.neg(a)).inverse().to_complex()
        evaluation = self.f_scalar(a, self.grading.neg(a), a).inverse().to_complex()
        # i_M is vec(I); ((theta f) (x) 1) vec(I) = vec(theta f); the braiding
        # transposes the matrix picture; evaluation contracts the diagonal.
        x = theta * f
        x = braid * x.T
        return complex(evaluation * np.trace(x))

    def cat_dim(self, m) -> complex:
        return self.cat_trace(m, np.eye(self.word_dim(m)))

    def double_braiding(self, m1, m2) -> np.ndarray:
        """``R_{M2,M1} . R_{M1,M2}`` as a matrix on the flattened pair."""
        return self.braiding(m2, m1).matrix @ self.braiding(m1, m2).matrix

    def s_entry(self, m1, m2) -> complex:
        """Categorical trace of the double braiding on M1 (x) M2."""
        return self.cat_trace((m1, m2), self.double_braiding(m1, m2))

    # -- coherence suite -----------------------------------------------------------

    def coherence_suite(
        self, *, tol: float | None = None, seed: int = 0, max_word_dim: int = MAX_WORD_DIM
    ) -> CoherenceReport:
        """Matrix-level coherence checks over all catalog tuples up to the
        dimension cap, with exact exponent checks wherever both sides are
        unit scalars."""
        tol = self.matrix_tol if tol is None else tol
        checks = [
            self._check_pentagon_matrices(tol, max_word_dim),
            self._check_triangle(tol),
            *self._check_hexagon_matrices(tol, max_word_dim),
            self._check_snakes(tol),
            self._check_balancing(tol),
            self._check_twist_dual(),
            self._check_double_braiding(tol),
            self._check_naturality(tol=max(tol, 1e-8), seed=seed),
        ]
        return CoherenceReport(tuple(checks))

    def _iter_tuples(self, arity: int, max_word_dim: int):
        for objs in product(self.catalog, repeat=arity):
            if int(np.prod([m.dim for m in objs])) <= max_word_dim:
                yield objs

    def _check_pentagon_matrices(self, tol: float, max_word_dim: int) -> AxiomCheck:
        checked, witness, max_err = 0, None, 0.0
        for m1, m2, m3, m4 in self._iter_tuples(4, max_word_dim):
            checked += 1
            lhs = self.associator((m1, m2), (m3,), (m4,)).matrix @ self.associator(
                (m1,), (m2,), (m3, m4)
            ).matrix
            rhs = (
                np.kron(self.associator((m1,), (m2,), (m3,)).matrix, np.eye(m4.dim))
                @ self.associator((m1,), (m2, m3), (m4,)).matrix
                @ np.kron(np.eye(m1.dim), self.associator((m2,), (m3,), (m4,)).matrix)
            )
            err = float(np.abs(lhs - rhs).max())
            max_err = max(max_err, err)
            if err > tol and witness is None:
                witness = tuple(m.label for m in (m1, m2, m3, m4))
        return AxiomCheck("pentagon(matrices)", witness is None, checked, witness, max_err)

    def _check_triangle(self, tol: float) -> AxiomCheck:
        checked, witness, max_err = 0, None, 0.0
        for m1, m2 in product(self.catalog, repeat=2):
            checked += 1
            mat = self.associator((m1,), (self.unit,), (m2,)).matrix
            err = float(np.abs(mat - np.eye(m1.dim * m2.dim)).max())
            max_err = max(max_err, err)
            if err > tol and witness is None:
                witness = (m1.label, m2.label)
        return AxiomCheck("triangle", witness is None, checked, witness, max_err)

    def _check_hexagon_matrices(self, tol: float, max_word_dim: int) -> list[AxiomCheck]:
        checked = 0
        witness1 = witness2 = None
        err1 = err2 = 0.0
        for x, y, z in self._iter_tuples(3, max_word_dim):
            checked += 1
            ax = self.associator
            br = self.braiding
            # braid X past Y (x) Z:  A_{Y,Z,X}^{-1} R_{X,YZ} A_{X,Y,Z}^{-1}
            #                     == (1_Y (x) R_{X,Z}) A_{Y,X,Z}^{-1} (R_{X,Y} (x) 1_Z)
            lhs = (
                np.linalg.inv(ax((y,), (z,), (x,)).matrix)
                @ br((x,), (y, z)).matrix
                @ np.linalg.inv(ax((x,), (y,), (z,)).matrix)
            )
            rhs = (
                np.kron(np.eye(y.dim), br((x,), (z,)).matrix)
                @ np.linalg.inv(ax((y,), (x,), (z,)).matrix)
                @ np.kron(br((x,), (y,)).matrix, np.eye(z.dim))
            )
            e = float(np.abs(lhs - rhs).max())
            err1 = max(err1, e)
            if e > tol and witness1 is None:
                witness1 = (x.label, y.label, z.label)
            # braid X (x) Y past Z:  A_{Z,X,Y} R_{XY,Z} A_{X,Y,Z}
            #                     == (R_{X,Z} (x) 1_Y) A_{X,Z,Y} (1_X (x) R_{Y,Z})
            lhs = (
                ax((z,), (x,), (y,)).matrix
                @ br((x, y), (z,)).matrix
                @ ax((x,), (y,), (z,)).matrix
            )
            rhs = (
                np.kron(br((x,), (z,)).matrix, np.eye(y.dim))
                @ ax((x,), (z,), (y,)).matrix
                @ np.kron(np.eye(x.dim), br((y,), (z,)).matrix)
            )
            e = float(np.abs(lhs - rhs).max())
            err2 = max(err2, e)
            if e > tol and witness2 is None:
                witness2 = (x.label, y.label, z.label)
        return [
            AxiomCheck("hexagon-1(matrices)", witness1 is None, checked, witness1, err1),
            AxiomCheck("hexagon-2(matrices)", witness2 is None, checked, witness2, err2),
        ]

    def _check_snakes(self, tol: float) -> AxiomCheck:
        checked, witness, max_err = 0, None, 0.0
        for m in self.catalog:
            checked += 1
            a = m.grade
            neg = self.grading.neg(a)
            d = m.dim
            ev = self.evaluation(m).matrix  # 1 x d^2, on M* (x) M
            coev = self.coevaluation(m).matrix  # d^2 x 1, into M (x) M*
            # snake on M:  (1_M (x) e_M) A_{M,M*,M}^{-1} (i_M (x) 1_M) == 1_M
            mid_inv = self.f_scalar(a, neg, a).to_complex()  # A^{-1} scalar
            snake_m = mid_inv * (np.kron(np.eye(d), ev) @ np.kron(coev, np.eye(d)))
            err = float(np.abs(snake_m - np.eye(d)).max())
            # snake on M*:  (e_M (x) 1_M*) A_{M*,M,M*} (1_M* (x) i_M) == 1_M*
            mid = self.f_scalar(neg, a, neg).inverse().to_complex()
            snake_dual = mid * (np.kron(ev, np.eye(d)) @ np.kron(np.eye(d), coev))
            err = max(err, float(np.abs(snake_dual - np.eye(d)).max()))
            max_err = max(max_err, err)
            if err > tol and witness is None:
                witness = (m.label,)
        return AxiomCheck("snake", witness is None, checked, witness, max_err)

    def _check_balancing(self, tol: float) -> AxiomCheck:
        """theta_{MN} = R_{N,M} R_{M,N} (theta_M (x) theta_N), matrices and exponents."""
        checked, witness, max_err = 0, None, 0.0
        for m, n in product(self.catalog, repeat=2):
            checked += 1
            lhs_exp = self.twist((m, n)).exponent
            rhs_exp = (
                UnitScalar(-self.cocycle.b(m.grade, n.grade)).exponent
                + self.twist(m).exponent
                + self.twist(n).exponent
            ) % 1
            lhs = self.twist((m, n)).to_complex() * np.eye(m.dim * n.dim)
            rhs = (
                self.double_braiding(m, n)
                * self.twist(m).to_complex()
                * self.twist(n).to_complex()
            )
            err = float(np.abs(lhs - rhs).max())
            max_err = max(max_err, err)
            if (lhs_exp != rhs_exp or err > tol) and witness is None:
                witness = (m.label, n.label)
        return AxiomCheck(
            "balancing", witness is None, checked, witness, max_err,
            detail="checked as matrices and as exact exponents",
        )

    def _check_twist_dual(self) -> AxiomCheck:
        checked, witness = 0, None
        for m in self.catalog:
            checked += 1
            a, neg = m.grade, self.grading.neg(m.grade)
            if self.cocycle.q(a) != self.cocycle.q(neg) and witness is None:
                witness = (m.label,)
        unit_ok = self.twist(self.unit).is_one
        if not unit_ok and witness is None:
            witness = (self.unit.label,)
        return AxiomCheck(
            "twist-dual", witness is None, checked, witness,
            detail="theta_{M*} = theta_M exactly, and theta of the unit is 1",
        )

    def _check_double_braiding(self, tol: float) -> AxiomCheck:
        """R_{N,M} R_{M,N} == e^{-2 pi i b(a,b)} I, matrices and exponents."""
        checked, witness, max_err = 0, None, 0.0
        for m, n in product(self.catalog, repeat=2):
            checked += 1
            scalar = UnitScalar(-self.cocycle.b(m.grade, n.grade))
            mat = self.double_braiding(m, n)
            err = float(np.abs(mat - scalar.to_complex() * np.eye(m.dim * n.dim)).max())
            exact = (
                -self.omega_scalar(m.grade, n.grade).exponent
                - self.omega_scalar(n.grade, m.grade).exponent
            ) % 1 == scalar.exponent
            max_err = max(max_err, err)
            if (err > tol or not exact) and witness is None:
                witness = (m.label, n.label)
        return AxiomCheck("double-braiding", witness is None, checked, witness, max_err)

    def _check_naturality(self, *, tol: float, seed: int) -> AxiomCheck:
        """Structure morphisms commute with sampled intertwiners."""
        rng = np.random.default_rng(seed)
        triples = []
        for m1, m2, m3 in product(self.catalog, repeat=3):
            if self.grading.add(m1.grade, m2.grade) != m3.grade:
                continue
            n = hom_dim(self.group, m1.character, m2.character, m3.character)
            if n > 0:
                triples.append((m1, m2, m3, n))
        checked, witness, max_err = 0, None, 0.0
        if triples:
            picks = rng.choice(len(triples), size=min(8, len(triples)), replace=False)
            for t in sorted(int(i) for i in picks):
                m1, m2, m3, n = triples[t]
                basis = intertwiner_basis(m1.rep, m2.rep, m3.rep, expected=n)
                f = basis[0]  # m3.dim x (m1.dim * m2.dim)
                for y in self.catalog:
                    checked += 1
                    # braiding naturality in the first slot:
                    # R_{M3,Y} (f (x) 1_Y) == (1_Y (x) f) R_{M1M2,Y}
                    lhs = self.braiding((m3,), (y,)).matrix @ np.kron(f, np.eye(y.dim))
                    rhs = np.kron(np.eye(y.dim), f) @ self.braiding((m1, m2), (y,)).matrix
                    err = float(np.abs(lhs - rhs).max())
                    # associator naturality in the first slot
                    lhs2 = self.associator((m3,), (y,), (y,)).matrix @ np.kron(
                        f, np.eye(y.dim * y.dim)
                    )
                    rhs2 = (
                        np.kron(f, np.eye(y.dim * y.dim))
                        @ self.associator((m1, m2), (y,), (y,)).matrix
                    )
                    err = max(err, float(np.abs(lhs2 - rhs2).max()))
                    max_err = max(max_err, err)
                    if err > tol and witness is None:
                        witness = (m1.label, m2.label, m3.label, y.label)
        return AxiomCheck(
            "naturality(spot-checks)", witness is None, checked, witness, max_err,
            detail=f"seed={seed}",
        )
