"""Exact rational core: scalars, symmetric matrix decompositions, configurations.

Everything here is exact. Matrices are tuples of tuples of Fraction; no
floating point enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


class StructuralError(ValueError):
    """Input violates a structural precondition (shape, symmetry, diagonal)."""


class IndefinitePivotError(StructuralError):
    """No diagonal pivot exists; the matrix is certified not PSD."""


def rational(value) -> Fraction:
    """Coerce an int, Fraction or 'p/q'/'k' string to an exact rational.

    Floats are rejected: the exact pipeline never launders binary
    approximations into rationals.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise StructuralError(f"not a rational: {value!r}") from exc
    raise StructuralError(f"not a rational: {value!r}")


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    """Build a square rational matrix, validating shape."""
    m = tuple(tuple(rational(x) for x in row) for row in rows)
    n = len(m)
    for i, row in enumerate(m):
        if len(row) != n:
            raise StructuralError(f"row {i} has length {len(row)}, expected {n}")
    return m


def check_symmetric(m: Matrix) -> None:
    n = len(m)
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise StructuralError(f"not symmetric at entry [{i}][{j}]")


def gram_rank(m: Sequence[Sequence[Fraction]]) -> int:
    """Rank over the rationals, by fraction-free Gaussian elimination.

    Works on any symmetric rational matrix; the elimination is run on
    integer-scaled rows so large Gram matrices of low rank stay cheap.
    """
    m = as_matrix(m)
    check_symmetric(m)
    n = len(m)
    if n == 0:
        return 0
    # scale each row to integers once; row operations below stay integral
    rows = []
    for row in m:
        den = 1
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
        rows.append([int(x * den) for x in row])
    rank = 0
    col = 0
    while col < n and rank < n:
        piv = next((r for r in range(rank, n) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        for r in range(rank + 1, n):
            f = rows[r][col]
            if f:
                p = prow[col]
                rows[r] = [p * a - f * b for a, b in zip(rows[r], prow)]
        rank += 1
        col += 1
    return rank


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def ldl_decompose(m: Sequence[Sequence[Fraction]]):
    """Symmetrically pivoted LDL^T: P m P^T = L D L^T exactly.

    Returns (L, D, perm) with L unit lower-triangular, D the pivot tuple and
    perm the row order, i.e. m[perm[i]][perm[j]] == sum_k L[i][k] D[k] L[j][k].
    The matrix is PSD iff every entry of D is >= 0.  Raises
    IndefinitePivotError when all remaining diagonal entries vanish but the
    block does not (which already certifies the matrix is not PSD).
    """
    m = as_matrix(m)
    check_symmetric(m)
    n = len(m)
    a = [list(row) for row in m]
    perm = list(range(n))
    lower = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    diag = [Fraction(0)] * n
    for k in range(n):
        piv = next((q for q in range(k, n) if a[q][q] != 0), None)
        if piv is None:
            # PSD => zero diagonal forces a zero block; anything else is indefinite
            for i in range(k, n):
                for j in range(k, n):
                    if a[i][j] != 0:
                        raise IndefinitePivotError(
                            "zero diagonal with nonzero off-diagonal entries; not PSD"
                        )
            break
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
            perm[k], perm[piv] = perm[piv], perm[k]
            for j in range(k):
                lower[k][j], lower[piv][j] = lower[piv][j], lower[k][j]
        d = a[k][k]
        diag[k] = d
        for i in range(k + 1, n):
            lower[i][k] = a[i][k] / d
        for i in range(k + 1, n):
            lik = lower[i][k]
            if lik:
                arow = a[i]
                krow = a[k]
                for j in range(k + 1, i + 1):
                    arow[j] -= lik * krow[j]
                    a[j][i] = arow[j]
    L = tuple(tuple(row) for row in lower)
    return L, tuple(diag), tuple(perm)


def is_positive_semidefinite(m: Sequence[Sequence[Fraction]]) -> bool:
    try:
        _, diag, _ = ldl_decompose(m)
    except IndefinitePivotError:
        return False
    return all(d >= 0 for d in diag)


@dataclass(frozen=True)
class GramMatrix:
    """Symmetric unit-diagonal PSD rational matrix of pairwise inner products."""

    entries: Matrix

    def __post_init__(self):
        m = as_matrix(self.entries)
        object.__setattr__(self, "entries", m)
        check_symmetric(m)
        for i in range(len(m)):
            if m[i][i] != 1:
                raise StructuralError(f"diagonal entry [{i}][{i}] = {m[i][i]}, expected 1")
        if not is_positive_semidefinite(m):
            raise StructuralError("matrix is not positive semidefinite")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


@dataclass(frozen=True)
class Configuration:
    """A finite unit-sphere point set, represented by its rational Gram matrix.

    The ambient dimension is the rank of the Gram matrix: the configuration
    lives inside the span of its points.
    """

    gram: GramMatrix
    ambient_dim: int = field(init=False)
    label: Optional[str] = None
    point_labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        g = self.gram.entries
        n = len(g)
        if n == 0:
            raise StructuralError("empty configuration")
        for i in range(n):
            for j in range(i + 1, n):
                if g[i][j] == 1:
                    raise StructuralError(f"points {i} and {j} coincide (inner product 1)")
        if self.point_labels is not None:
            labels = tuple(str(x) for x in self.point_labels)
            if len(labels) != n:
                raise StructuralError(f"{len(labels)} labels for {n} points")
            object.__setattr__(self, "point_labels", labels)
        object.__setattr__(self, "ambient_dim", gram_rank(g))

    @classmethod
    def from_gram(cls, rows, label=None, point_labels=None) -> "Configuration":
        return cls(gram=GramMatrix(as_matrix(rows)), label=label, point_labels=point_labels)

    @property
    def size(self) -> int:
        return self.gram.size


def inner_product_spectrum(c: Configuration) -> tuple[Fraction, ...]:
    """Sorted distinct off-diagonal Gram values (includes -1 for antipodes)."""
    g = c.gram.entries
    seen = set()
    for i in range(len(g)):
        row = g[i]
        for j in range(len(g)):
            if j != i:
                seen.add(row[j])
    return tuple(sorted(seen))


def scaled_integer_gram(c: Configuration) -> tuple[int, list[list[int]]]:
    """Common denominator L and the integer matrix L*gram.

    Shared by the balance and design modules so shell sums and moment
    histograms run in integer arithmetic.
    """
    g = c.gram.entries
    den = 1
    for row in g:
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
    scaled = [[int(x * den) for x in row] for row in g]
    return den, scaled
