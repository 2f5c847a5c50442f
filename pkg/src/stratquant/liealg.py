"""Matrix Lie algebras with exact structure constants: sp(l, R) and so(s, R)."""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .exactalg.linalg import IncrementalEchelon, commutator, matmul, solve, trace, transpose, zeros
from .exactalg.scalar import Scalar

__all__ = ["MatrixLieAlgebra", "sp_algebra", "so_algebra", "symplectic_form"]


def _unit(n: int, i: int, j: int) -> list[list[Fraction]]:
    m = zeros(n)
    m[i][j] = Fraction(1)
    return m


def symplectic_form(l: int) -> list[list[Fraction]]:
    """``J = [[0, I], [-I, 0]]`` of size ``2l``."""
    j = zeros(2 * l)
    for i in range(l):
        j[i][l + i] = Fraction(1)
        j[l + i][i] = Fraction(-1)
    return j


def _real(x) -> Fraction | None:
    if isinstance(x, Scalar):
        return None if x.im else x.re
    return Fraction(x)


class MatrixLieAlgebra:
    """A Lie algebra given by a basis of square matrices.

    Coordinates of a matrix in the basis are found by an exact linear solve
    against the flattened basis; structure constants and the Killing form are
    derived from them, never hard-coded.
    """

    def __init__(self, name: str, basis: Sequence, labels: Sequence[str]):
        if len(basis) != len(labels):
            raise ValueError("one label per basis matrix")
        self.name = name
        self.basis = [[[Fraction(x) for x in row] for row in b] for b in basis]
        self.labels = tuple(labels)
        self.size = len(self.basis[0]) if self.basis else 0

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _columns(self):
        return [[b[i][j] for b in self.basis] for i in range(self.size) for j in range(self.size)]

    @cached_property
    def _reader(self) -> tuple[list[int], list[list[Fraction]]]:
        """Entries that determine the coordinates, and the inverse of that block."""
        ech = IncrementalEchelon()
        rows = []
        for r, row in enumerate(self._columns):
            if ech.add({k: x for k, x in enumerate(row) if x}):
                rows.append(r)
            if len(rows) == self.dim:
                break
        if len(rows) != self.dim:
            raise ValueError(f"basis of {self.name} is linearly dependent")
        block = [self._columns[r] for r in rows]
        cols = [solve(block, [Fraction(int(i == k)) for i in range(self.dim)]) for k in range(self.dim)]
        inv = [[cols[k][i].re for k in range(self.dim)] for i in range(self.dim)]
        return rows, inv

    def _try_coordinates(self, m) -> list[Fraction] | None:
        rows, inv = self._reader
        if len(m) != self.size or any(len(row) != self.size for row in m):
            return None
        m = [[_real(x) for x in row] for row in m]
        if any(x is None for row in m for x in row):
            return None
        flat = [m[i][j] for i in range(self.size) for j in range(self.size)]
        picked = [flat[r] for r in rows]
        coords = [sum((a * b for a, b in zip(row, picked)), Fraction(0)) for row in inv]
        if self.element(coords) != m:
            return None
        return coords

    def coordinates(self, m) -> list[Fraction]:
        coords = self._try_coordinates(m)
        if coords is None:
            raise ValueError(f"matrix is not in {self.name}")
        return coords

    def contains(self, m) -> bool:
        return self._try_coordinates(m) is not None

    def element(self, coords: Sequence) -> list[list[Fraction]]:
        out = zeros(self.size)
        for c, b in zip(coords, self.basis):
            if c:
                for i in range(self.size):
                    for j in range(self.size):
                        out[i][j] += c * b[i][j]
        return out

    @cached_property
    def structure_constants(self) -> list[list[list[Fraction]]]:
        """``c[i][j][k]`` with ``[e_i, e_j] = sum_k c[i][j][k] e_k``."""
        n = self.dim
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                v = self.coordinates(commutator(self.basis[i], self.basis[j]))
                c[i][j] = v
                c[j][i] = [-x for x in v]
        return c

    def ad(self, coords: Sequence) -> list[list[Fraction]]:
        """Matrix of ``ad_a`` in the basis (columns are images of basis vectors)."""
        n = self.dim
        c = self.structure_constants
        m = zeros(n)
        for i, a in enumerate(coords):
            if a:
                for j in range(n):
                    for k in range(n):
                        m[k][j] += a * c[i][j][k]
        return m

    @cached_property
    def killing_matrix(self) -> list[list[Fraction]]:
        """``K_ij = tr(ad_{e_i} ad_{e_j}) = sum_{k,m} c[i][k][m] c[j][m][k]``."""
        n = self.dim
        c = self.structure_constants
        return [[sum((c[i][k][m] * c[j][m][k] for k in range(n) for m in range(n)
                      if c[i][k][m] and c[j][m][k]), Fraction(0)) for j in range(n)] for i in range(n)]

    def killing(self, a, b) -> Fraction:
        """Killing form ``tr(ad_a ad_b)`` of two matrices in the algebra."""
        x, y = self.coordinates(a), self.coordinates(b)
        K = self.killing_matrix
        return sum((xi * K[i][j] * y[j] for i, xi in enumerate(x) if xi for j in range(self.dim) if y[j]),
                   Fraction(0))

    def killing_via_ad(self, a, b) -> Fraction:
        """The same form through explicit ad matrices; slower, kept as a cross-check."""
        return trace(matmul(self.ad(self.coordinates(a)), self.ad(self.coordinates(b))))

    def trace_form(self, a, b) -> Fraction:
        return trace(matmul(a, b))

    def jacobi_defect(self) -> int:
        """Number of basis triples violating Jacobi through the structure constants."""
        n = self.dim
        c = self.structure_constants
        bad = 0
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for m in range(n):
                        s = sum(c[j][k][t] * c[i][t][m] + c[k][i][t] * c[j][t][m] + c[i][j][t] * c[k][t][m]
                                for t in range(n))
                        if s:
                            bad += 1
        return bad


def sp_algebra(l: int) -> MatrixLieAlgebra:
    """sp(l, R) as ``[[A, B], [C, -A^T]]`` with ``B, C`` symmetric.

    Basis order: symmetric upper block ``b_i_j``, symmetric lower block
    ``c_i_j`` (``i <= j``), then the gl(l) block ``a_i_j``.  For ``l = 1``
    these are E, F and H.
    """
    n = 2 * l
    basis, labels = [], []
    for i in range(l):
        for j in range(i, l):
            m = _unit(n, i, l + j)
            m[j][l + i] = Fraction(1)
            basis.append(m)
            labels.append(f"b_{i + 1}_{j + 1}")
    for i in range(l):
        for j in range(i, l):
            m = _unit(n, l + i, j)
            m[l + j][i] = Fraction(1)
            basis.append(m)
            labels.append(f"c_{i + 1}_{j + 1}")
    for i in range(l):
        for j in range(l):
            m = _unit(n, i, j)
            m[l + j][l + i] = Fraction(-1)
            basis.append(m)
            labels.append(f"a_{i + 1}_{j + 1}")
    return MatrixLieAlgebra(f"sp({l})", basis, labels)


def so_algebra(s: int) -> MatrixLieAlgebra:
    """so(s, R) with basis ``E_ij - E_ji`` for ``i < j``."""
    basis, labels = [], []
    for i in range(s):
        for j in range(i + 1, s):
            m = _unit(s, i, j)
            m[j][i] = Fraction(-1)
            basis.append(m)
            labels.append(f"L_{i + 1}_{j + 1}")
    return MatrixLieAlgebra(f"so({s})", basis, labels)


def in_sp(m, l: int) -> bool:
    """``m^T J + J m == 0``.

    For ``m = [[A, B], [C, D]]`` this says B and C are symmetric and D = -A^T.
    """
    n = 2 * l
    if len(m) != n or any(len(row) != n for row in m):
        return False
    for i in range(l):
        for j in range(l):
            if m[i][l + j] != m[j][l + i] or m[l + i][j] != m[l + j][i]:
                return False
            if m[l + i][l + j] + m[j][i] != 0:
                return False
    return True
