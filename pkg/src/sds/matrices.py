"""Weighted difference substitution matrices and chain composition.

The building blocks: the upper-triangular weight matrix W_n (column j is j
copies of 1/j), the n! permutation matrices, their products B = P·W_n, and
products of those along a chain of permutation indices.  All entries are
exact Fractions; matrices are immutable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import List, Sequence, Tuple

Chain = Tuple[int, ...]

MAX_PWN_ELEMENTS = 40320  # 8!; enumerating beyond this is refused


class MatrixError(ValueError):
    """Invalid matrix construction or use."""


class SubMatrix:
    """Dense square matrix of Fractions (row-major storage)."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise MatrixError("matrix must be square and non-empty")
        self.n = n
        self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)

    @staticmethod
    def identity(n: int) -> "SubMatrix":
        if n < 1:
            raise MatrixError("n must be positive")
        return SubMatrix(
            [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SubMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __matmul__(self, other: "SubMatrix") -> "SubMatrix":
        if self.n != other.n:
            raise MatrixError("dimension mismatch")
        n = self.n
        cols = list(zip(*other.rows))
        return SubMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in cols]
                for row in self.rows
            ]
        )

    def matvec(self, v: Sequence) -> Tuple[Fraction, ...]:
        if len(v) != self.n:
            raise MatrixError("dimension mismatch")
        vec = [Fraction(x) for x in v]
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(row[j] for row in self.rows)

    def det(self) -> Fraction:
        """Exact determinant by fraction-free-ish Gaussian elimination."""
        a = [list(row) for row in self.rows]
        n = self.n
        sign = 1
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                sign = -sign
            det *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                if a[r][col]:
                    factor = a[r][col] * inv
                    for k in range(col, n):
                        a[r][k] -= factor * a[col][k]
        return sign * det

    def solve(self, b: Sequence) -> Tuple[Fraction, ...]:
        """Exact solution x of self·x = b (raises on singular matrices)."""
        n = self.n
        if len(b) != n:
            raise MatrixError("dimension mismatch")
        a = [list(row) + [Fraction(b[i])] for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                raise MatrixError("singular matrix")
            a[col], a[pivot] = a[pivot], a[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    factor = a[r][col]
                    a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        return tuple(a[i][n] for i in range(n))

    def to_strings(self) -> List[str]:
        """Row-major flat list of "a/b" strings (wire format)."""
        return [str(x) for row in self.rows for x in row]

    def __repr__(self) -> str:
        return f"SubMatrix({[[str(x) for x in row] for row in self.rows]})"


def weighted_matrix(n: int) -> SubMatrix:
    """The weight matrix: entry (i, j) = 1/j for i <= j (1-based), else 0."""
    if n < 1:
        raise MatrixError("n must be positive")
    return SubMatrix(
        [
            [Fraction(1, j) if i <= j else Fraction(0) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    )


def _check_perm(perm: Sequence[int]) -> Tuple[int, ...]:
    perm = tuple(perm)
    n = len(perm)
    if n == 0 or sorted(perm) != list(range(1, n + 1)):
        raise MatrixError(f"not a permutation of 1..n: {perm}")
    return perm


def permutation_matrix(perm: Sequence[int]) -> SubMatrix:
    """0/1 matrix with entry (i, perm[i]) = 1 (1-based row convention)."""
    perm = _check_perm(perm)
    n = len(perm)
    return SubMatrix(
        [
            [Fraction(int(perm[i] == j + 1)) for j in range(n)]
            for i in range(n)
        ]
    )


def sds_matrix(perm: Sequence[int]) -> SubMatrix:
    """The weighted difference substitution matrix P_perm · W_n."""
    perm = _check_perm(perm)
    w = weighted_matrix(len(perm))
    # row i of P·W is row perm[i] of W; avoid the full product
    return SubMatrix([w.rows[perm[i] - 1] for i in range(len(perm))])


@lru_cache(maxsize=None)
def _enumerate_pwn_cached(n: int) -> Tuple[SubMatrix, ...]:
    return tuple(sds_matrix(p) for p in permutations(range(1, n + 1)))


def enumerate_pwn(n: int, max_elements: int = MAX_PWN_ELEMENTS) -> Tuple[SubMatrix, ...]:
    """All n! substitution matrices in lexicographic permutation order."""
    if n < 1:
        raise MatrixError("n must be positive")
    if math.factorial(n) > max_elements:
        raise MatrixError(
            f"{n}! = {math.factorial(n)} exceeds the limit of {max_elements}"
        )
    return _enumerate_pwn_cached(n)


def compose_chain(chain: Sequence[int], n: int) -> SubMatrix:
    """Product of the chain's substitution matrices, in chain order.

    The empty chain gives the identity.  Indices are 1-based into the
    lexicographic enumeration of PW_n.
    """
    mats = enumerate_pwn(n)
    out = SubMatrix.identity(n)
    for idx in chain:
        if not 1 <= idx <= len(mats):
            raise MatrixError(f"chain index {idx} out of range 1..{len(mats)}")
        out = out @ mats[idx - 1]
    return out


def is_normalized(m: SubMatrix) -> bool:
    """True iff every column sums to exactly 1."""
    return all(sum(m.column(j)) == 1 for j in range(m.n))


def barycenter_image(chain: Sequence[int], n: int) -> Tuple[Fraction, ...]:
    """Image of the barycenter (1/n, ..., 1/n) under the chain's matrix."""
    return compose_chain(chain, n).matvec([Fraction(1, n)] * n)
