"""Integer matrices, signed permutations and Hadamard operations.

Matrices are plain tuples of row tuples.  Tuple comparison in Python is
lexicographic, so comparing two matrices of equal shape with ``<`` is exactly
the row-lex order used throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Row = tuple[int, ...]
IntMatrix = tuple[Row, ...]


class DimensionError(ValueError):
    """Raised when matrix or permutation sizes do not line up."""


def as_matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    """Normalise any nested iterable of integers into an ``IntMatrix``."""
    mat = tuple(tuple(int(x) for x in row) for row in rows)
    if not mat or not mat[0]:
        raise DimensionError("matrix must have at least one row and one column")
    width = len(mat[0])
    if any(len(row) != width for row in mat):
        raise DimensionError("ragged matrix")
    return mat


def shape(a: IntMatrix) -> tuple[int, int]:
    return len(a), len(a[0])


def transpose(a: IntMatrix) -> IntMatrix:
    return tuple(zip(*a))


def negate(a: IntMatrix) -> IntMatrix:
    return tuple(tuple(-x for x in row) for row in a)


def identity_matrix(n: int, scale: int = 1) -> IntMatrix:
    return tuple(tuple(scale if i == j else 0 for j in range(n)) for i in range(n))


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if len(a[0]) != len(b):
        raise DimensionError("inner dimensions differ")
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def gram(a: IntMatrix) -> IntMatrix:
    """Return ``a @ a.T``."""
    return tuple(tuple(sum(x * y for x, y in zip(r, s)) for s in a) for r in a)


def gram_check(a: IntMatrix, k: int) -> bool:
    """True iff ``a @ a.T == k * I``."""
    for i, r in enumerate(a):
        for j in range(i, len(a)):
            dot = sum(x * y for x, y in zip(r, a[j]))
            if dot != (k if i == j else 0):
                return False
    return True


def row_lex_compare(a: IntMatrix, b: IntMatrix) -> int:
    """Three-way row-lex comparison: -1, 0 or 1."""
    if shape(a) != shape(b):
        raise DimensionError(f"cannot compare {shape(a)} with {shape(b)}")
    return (a > b) - (a < b)


def block_diag(blocks: Sequence[IntMatrix]) -> IntMatrix:
    """Diagonal block sum of square or rectangular blocks."""
    total_cols = sum(len(b[0]) for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        w = len(b[0])
        for r in b:
            rows.append((0,) * offset + tuple(r) + (0,) * (total_cols - offset - w))
        offset += w
    return tuple(rows)


def is_symmetric(a: IntMatrix) -> bool:
    return a == transpose(a)


def is_antisymmetric(a: IntMatrix) -> bool:
    return a == negate(transpose(a))


def max_abs_entry(a: IntMatrix) -> int:
    return max(abs(x) for row in a for x in row)


def format_matrix(a: IntMatrix) -> str:
    """Text format: one row per line, space separated integers."""
    return "\n".join(" ".join(str(x) for x in row) for row in a)


def parse_matrix(text: str) -> IntMatrix:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    return as_matrix(rows)


# ---------------------------------------------------------------------------
# Neg / Ord
# ---------------------------------------------------------------------------

def normalize_vector(v: Sequence[int]) -> Row:
    """Negate ``v`` if its first nonzero entry is positive."""
    for x in v:
        if x:
            return tuple(-y for y in v) if x > 0 else tuple(v)
    return tuple(v)


def neg_ord(a: IntMatrix) -> IntMatrix:
    """Negate columns that begin positive, then sort columns ascending."""
    cols = sorted(normalize_vector(c) for c in zip(*a))
    return tuple(zip(*cols))


def neg_ord_with_witness(a: IntMatrix) -> tuple[IntMatrix, "SignedPerm"]:
    """Like :func:`neg_ord` but also return ``R`` with ``a @ R.T == neg_ord(a)``."""
    n = len(a[0])
    cols = list(zip(*a))
    keyed = []
    for j, c in enumerate(cols):
        nc = normalize_vector(c)
        keyed.append((nc, j, -1 if nc != c else 1))
    keyed.sort(key=lambda t: (t[0], t[1]))
    perm = [0] * n
    signs = [1] * n
    for target, (_, j, s) in enumerate(keyed):
        perm[j] = target
        signs[target] = s
    r = SignedPerm(tuple(perm), tuple(signs))
    return tuple(zip(*(k[0] for k in keyed))), r


# ---------------------------------------------------------------------------
# Signed permutations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SignedPerm:
    """Monomial matrix over {0, 1, -1}.

    ``perm[i]`` is the image of index ``i``; ``signs[t]`` is the sign applied
    at target ``t``.  As a matrix, entry ``(perm[i], i)`` equals
    ``signs[perm[i]]``.  Products follow matrix multiplication, so
    ``(p * q)`` applies ``q`` first.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.perm)
        if len(self.signs) != n:
            raise DimensionError("perm and signs differ in length")
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"not a permutation: {self.perm}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +-1: {self.signs}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "SignedPerm":
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def from_matrix(cls, m: IntMatrix) -> "SignedPerm":
        n = len(m)
        perm = [-1] * n
        signs = [1] * n
        for i in range(n):
            for j in range(n):
                x = m[i][j]
                if x:
                    if x not in (1, -1) or perm[j] != -1:
                        raise ValueError("matrix is not monomial")
                    perm[j] = i
                    signs[i] = x
        if -1 in perm:
            raise ValueError("matrix is not monomial")
        return cls(tuple(perm), tuple(signs))

    @classmethod
    def from_images(cls, images: Sequence[tuple[int, int]]) -> "SignedPerm":
        """Build from ``[(target, sign), ...]`` indexed by source."""
        n = len(images)
        perm = tuple(t for t, _ in images)
        signs = [1] * n
        for t, s in images:
            signs[t] = s
        return cls(perm, tuple(signs))

    def to_matrix(self) -> IntMatrix:
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for i, t in enumerate(self.perm):
            rows[t][i] = self.signs[t]
        return tuple(tuple(r) for r in rows)

    def inverse(self) -> "SignedPerm":
        n = self.n
        inv = [0] * n
        signs = [1] * n
        for i, t in enumerate(self.perm):
            inv[t] = i
            signs[i] = self.signs[t]
        return SignedPerm(tuple(inv), tuple(signs))

    transpose = inverse

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        if self.n != other.n:
            raise DimensionError("size mismatch in composition")
        perm = tuple(self.perm[t] for t in other.perm)
        signs = [0] * self.n
        for i, t in enumerate(other.perm):
            u = self.perm[t]
            signs[u] = self.signs[u] * other.signs[t]
        return SignedPerm(perm, tuple(signs))

    def __neg__(self) -> "SignedPerm":
        return SignedPerm(self.perm, tuple(-s for s in self.signs))

    def is_identity(self) -> bool:
        return all(i == t for i, t in enumerate(self.perm)) and all(s == 1 for s in self.signs)

    def apply_rows(self, a: IntMatrix) -> IntMatrix:
        """Return ``self @ a``."""
        if len(a) != self.n:
            raise DimensionError("row count mismatch")
        inv = [0] * self.n
        for i, t in enumerate(self.perm):
            inv[t] = i
        out = []
        for t in range(self.n):
            row = a[inv[t]]
            out.append(row if self.signs[t] == 1 else tuple(-x for x in row))
        return tuple(out)

    def apply_cols(self, a: IntMatrix) -> IntMatrix:
        """Return ``a @ self.T``."""
        return transpose(self.apply_rows(transpose(a)))


@dataclass(frozen=True)
class HadamardPair:
    """A pair ``(L, R)`` acting on matrices by ``A -> L A R^T``."""

    left: SignedPerm
    right: SignedPerm

    @classmethod
    def identity(cls, m: int, n: int) -> "HadamardPair":
        return cls(SignedPerm.identity(m), SignedPerm.identity(n))

    def __mul__(self, other: "HadamardPair") -> "HadamardPair":
        return HadamardPair(self.left * other.left, self.right * other.right)

    def inverse(self) -> "HadamardPair":
        return HadamardPair(self.left.inverse(), self.right.inverse())

    def is_identity(self) -> bool:
        return self.left.is_identity() and self.right.is_identity()

    def apply(self, a: IntMatrix) -> IntMatrix:
        return apply_pair(self, a)


def apply_pair(p: HadamardPair, a: IntMatrix) -> IntMatrix:
    """Return ``L a R^T``."""
    m, n = shape(a)
    if p.left.n != m or p.right.n != n:
        raise DimensionError(f"pair of sizes ({p.left.n},{p.right.n}) cannot act on {m}x{n}")
    return p.right.apply_cols(p.left.apply_rows(a))
