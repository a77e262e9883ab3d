"""Dense matrices and Gaussian elimination with partial pivoting.

numpy arrays carry the entries; elimination is written out row by row so the
pivot sequence, the singularity test and the determinant sign are explicit.
"""

from typing import Iterable, Sequence, Tuple

import numpy as np

from config import PIVOT_TOL
from utils.errors import DimensionMismatch, SingularMatrix


class DenseMatrix:
    """Immutable real matrix of shape rows x cols, all entries finite."""

    def __init__(self, entries):
        array = np.array(entries, dtype=float, ndmin=2)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise DimensionMismatch(f"a matrix needs at least one row and one column, got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise ValueError("matrix entries must be finite")
        array.setflags(write=False)
        self.entries = array

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        return cls(np.eye(n))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[float]]) -> "DenseMatrix":
        return cls([list(row) for row in rows])

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape

    def __getitem__(self, index):
        return self.entries[index]

    def __sub__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {other.shape} from {self.shape}")
        return DenseMatrix(self.entries - other.entries)

    def norm_inf(self) -> float:
        """Maximum absolute row sum."""
        return float(np.max(np.sum(np.abs(self.entries), axis=1)))

    def __repr__(self):
        return f"<DenseMatrix: {self.rows}x{self.cols}>"


def matmul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Matrix product ``a . b``.

    Raises:
        DimensionMismatch: if ``a.cols != b.rows``
    """
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    return DenseMatrix(a.entries @ b.entries)


def _eliminate(a: DenseMatrix, rhs: np.ndarray = None, tol: float = None):
    """Forward elimination with partial pivoting.

    Returns the upper-triangular factor, the transformed right-hand side, the
    permutation sign and the pivots. With ``tol`` set, a pivot whose magnitude
    is at most ``tol * ||a||_inf`` raises SingularMatrix.
    """
    if a.rows != a.cols:
        raise DimensionMismatch(f"expected a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    u = a.entries.copy()
    b = None if rhs is None else np.array(rhs, dtype=float)
    threshold = None if tol is None else tol * a.norm_inf()
    sign = 1.0
    pivots = np.empty(n)

    for k in range(n):
        # Row interchange, if needed
        p = int(np.argmax(np.abs(u[k:, k]))) + k
        if threshold is not None and abs(u[p, k]) <= threshold:
            raise SingularMatrix(f"pivot {u[p, k]:.3e} at column {k} below {threshold:.3e}")
        if p != k:
            u[[k, p]] = u[[p, k]]
            if b is not None:
                b[[k, p]] = b[[p, k]]
            sign = -sign
        pivots[k] = u[k, k]
        if u[k, k] == 0.0:
            continue

        # Elimination
        lam = u[k + 1:, k] / u[k, k]
        u[k + 1:, k:] -= np.outer(lam, u[k, k:])
        if b is not None:
            b[k + 1:] -= lam * b[k]

    return u, b, sign, pivots


def solve(a: DenseMatrix, rhs: Sequence[float]) -> np.ndarray:
    """Solve ``a . x = rhs``.

    Args:
        a: square system matrix
        rhs: right-hand side vector

    Returns:
        Solution vector x

    Raises:
        DimensionMismatch: if shapes disagree
        SingularMatrix: if a pivot vanishes relative to ``||a||_inf``
    """
    rhs = np.asarray(rhs, dtype=float)
    if rhs.shape != (a.rows,):
        raise DimensionMismatch(f"right-hand side of length {rhs.shape} for a {a.rows}x{a.cols} matrix")
    u, b, _, _ = _eliminate(a, rhs, tol=PIVOT_TOL)

    # Back substitution
    n = a.rows
    x = np.empty(n)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - np.dot(u[k, k + 1:], x[k + 1:])) / u[k, k]
    return x


def determinant(a: DenseMatrix) -> float:
    """Product of the elimination pivots with permutation sign; 0.0 for singular input."""
    _, _, sign, pivots = _eliminate(a)
    return float(sign * np.prod(pivots))
