"""Builders for every named configuration: SRG spectral embeddings, simplex
edge-midpoint families, the inverted-tetrahedron modification, antipodal
unions, and small standard polytopes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import combinations, product
from typing import Optional, Sequence

from .exact import Configuration, StructuralError


class ConstructionError(StructuralError):
    """Constructor preconditions violated (not an SRG, bad indices, ...)."""


@dataclass(frozen=True)
class SrgParams:
    n: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        lhs = self.k * (self.k - self.lam - 1)
        rhs = (self.n - self.k - 1) * self.mu
        if lhs != rhs:
            raise ConstructionError(
                f"infeasible SRG parameters ({self.n},{self.k},{self.lam},{self.mu})"
            )

    @property
    def degenerate(self) -> bool:
        # complete multipartite graphs (mu = k) and their complements (mu = 0)
        return self.mu == 0 or self.mu == self.k

    def eigenvalues(self) -> tuple[int, int]:
        """Non-principal adjacency eigenvalues r > s, required integral."""
        disc = (self.lam - self.mu) ** 2 + 4 * (self.k - self.mu)
        root = math.isqrt(disc)
        if root * root != disc or (self.lam - self.mu + root) % 2 != 0:
            raise ConstructionError(
                f"irrational eigenvalues for parameters "
                f"({self.n},{self.k},{self.lam},{self.mu})"
            )
        r = (self.lam - self.mu + root) // 2
        s = (self.lam - self.mu - root) // 2
        return r, s

    def multiplicity(self, eig: int) -> int:
        r, s = self.eigenvalues()
        other = s if eig == r else r
        num = -(self.n - 1) * other - self.k
        den = eig - other
        if num % den != 0:
            raise ConstructionError("non-integral eigenvalue multiplicity")
        return num // den


def srg_params(adjacency: Sequence[Sequence[int]]) -> SrgParams:
    """Verify strong regularity and return (N, k, lambda, mu)."""
    n = len(adjacency)
    a = [tuple(int(x) for x in row) for row in adjacency]
    for i, row in enumerate(a):
        if len(row) != n:
            raise ConstructionError(f"adjacency row {i} has length {len(row)}")
        if row[i] != 0:
            raise ConstructionError(f"nonzero diagonal at vertex {i}")
        for j in range(n):
            if row[j] not in (0, 1):
                raise ConstructionError(f"entry [{i}][{j}] not 0/1")
            if a[j][i] != row[j]:
                raise ConstructionError(f"adjacency not symmetric at [{i}][{j}]")
    if n == 0:
        raise ConstructionError("empty graph")
    k = sum(a[0])
    for i in range(n):
        d = sum(a[i])
        if d != k:
            raise ConstructionError(f"not regular: vertex {i} has degree {d}, vertex 0 has {k}")
    if k == 0 or k == n - 1:
        raise ConstructionError(f"degenerate graph (k = {k}): no two eigenvalue classes")
    lam = mu = None
    for i in range(n):
        for j in range(i + 1, n):
            common = sum(a[i][m] & a[j][m] for m in range(n))
            if a[i][j]:
                if lam is None:
                    lam = common
                elif common != lam:
                    raise ConstructionError(
                        f"not strongly regular: adjacent pair ({i},{j}) has "
                        f"{common} common neighbors, expected {lam}"
                    )
            else:
                if mu is None:
                    mu = common
                elif common != mu:
                    raise ConstructionError(
                        f"not strongly regular: non-adjacent pair ({i},{j}) has "
                        f"{common} common neighbors, expected {mu}"
                    )
    return SrgParams(n=n, k=k, lam=lam, mu=mu)


def srg_spectral_embedding(
    adjacency: Sequence[Sequence[int]], eigen_choice: str = "r"
) -> Configuration:
    """Project the standard basis onto a nontrivial eigenspace, exactly.

    The projection onto the theta-eigenspace (theta in {r, s}) is
    P = (A - phi I - ((k - phi)/N) J) / (theta - phi); the configuration Gram
    is P rescaled to unit diagonal, and its rank is the eigenvalue
    multiplicity.
    """
    if eigen_choice not in ("r", "s"):
        raise ConstructionError(f"eigen_choice must be 'r' or 's', got {eigen_choice!r}")
    params = srg_params(adjacency)
    if params.degenerate:
        raise ConstructionError(
            f"degenerate strongly regular graph ({params.n},{params.k},"
            f"{params.lam},{params.mu}); no spherical embedding"
        )
    r, s = params.eigenvalues()
    theta, phi = (r, s) if eigen_choice == "r" else (s, r)
    mult = params.multiplicity(theta)
    if mult < 2:
        raise ConstructionError(f"eigenvalue {theta} has multiplicity {mult} < 2")
    n = params.n
    shift = Fraction(params.k - phi, n)
    scale = Fraction(theta - phi)
    diag = (Fraction(-phi) - shift) / scale
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            p = (Fraction(adjacency[i][j]) - (Fraction(phi) if i == j else 0) - shift) / scale
            row.append(p)
        assert row[i] == diag
        rows.append([x / diag for x in row])
    config = Configuration.from_gram(
        rows,
        label=f"srg({params.n},{params.k},{params.lam},{params.mu})/{eigen_choice}",
        point_labels=tuple(str(i) for i in range(n)),
    )
    if config.ambient_dim != mult:
        raise StructuralError(
            f"embedding rank {config.ambient_dim} != multiplicity {mult}"
        )
    return config


def _pair_label(i: int, j: int, n_vertices: int) -> str:
    return f"{i}{j}" if n_vertices <= 9 else f"{i}-{j}"


def simplex_midpoints(n: int) -> Configuration:
    """Edge midpoints of a regular n-simplex, rescaled to the unit sphere.

    Inner products: (n-3)/(2n-2) for label pairs sharing a vertex, -2/(n-1)
    for disjoint pairs.
    """
    if n < 3:
        raise ConstructionError(f"simplex midpoints need n >= 3, got {n}")
    pairs = list(combinations(range(1, n + 2), 2))
    share = Fraction(n - 3, 2 * n - 2)
    disjoint = Fraction(-2, n - 1)
    rows = []
    for p in pairs:
        row = []
        for q in pairs:
            if p == q:
                row.append(Fraction(1))
            elif set(p) & set(q):
                row.append(share)
            else:
                row.append(disjoint)
        rows.append(row)
    labels = tuple(_pair_label(i, j, n + 1) for i, j in pairs)
    return Configuration.from_gram(rows, label=f"C{n}", point_labels=labels)


def invert_tetrahedron(c: Configuration, tetra: Sequence[int]) -> Configuration:
    """Replace a regular tetrahedron (pairwise inner product -1/3) by its antipode."""
    tetra = tuple(int(i) for i in tetra)
    n = c.size
    if len(set(tetra)) != 4:
        raise ConstructionError(f"need 4 distinct indices, got {tetra}")
    if any(not 0 <= i < n for i in tetra):
        raise ConstructionError(f"tetrahedron index out of range: {tetra}")
    g = c.gram.entries
    third = Fraction(-1, 3)
    for a, b in combinations(tetra, 2):
        if g[a][b] != third:
            raise ConstructionError(
                f"points {a},{b} have inner product {g[a][b]}, expected -1/3"
            )
    flip = [-1 if i in tetra else 1 for i in range(n)]
    rows = [[g[i][j] * flip[i] * flip[j] for j in range(n)] for i in range(n)]
    labels = None
    if c.point_labels:
        labels = tuple(
            f"-{lab}" if i in tetra else lab for i, lab in enumerate(c.point_labels)
        )
    label = f"{c.label}'" if c.label else None
    return Configuration.from_gram(rows, label=label, point_labels=labels)


def default_distinguished_tetrahedron() -> tuple[int, int, int, int]:
    """Indices of the edge pairs 12, 34, 56, 78 in the C7 labeling."""
    pairs = list(combinations(range(1, 9), 2))
    return tuple(pairs.index(p) for p in [(1, 2), (3, 4), (5, 6), (7, 8)])


def c7_prime(tetra: Optional[Sequence[int]] = None) -> Configuration:
    if tetra is None:
        tetra = default_distinguished_tetrahedron()
    return invert_tetrahedron(simplex_midpoints(7), tetra)


def count_tetrahedra(c: Configuration, i: int) -> int:
    """Number of 4-subsets through point i with all inner products -1/3."""
    g = c.gram.entries
    n = c.size
    if not 0 <= i < n:
        raise StructuralError(f"point index {i} out of range")
    third = Fraction(-1, 3)
    nbrs = [j for j in range(n) if j != i and g[i][j] == third]
    count = 0
    for a_pos, a in enumerate(nbrs):
        ga = g[a]
        for b_pos in range(a_pos + 1, len(nbrs)):
            b = nbrs[b_pos]
            if ga[b] != third:
                continue
            gb = g[b]
            for c_pos in range(b_pos + 1, len(nbrs)):
                d = nbrs[c_pos]
                if ga[d] == third and gb[d] == third:
                    count += 1
    return count


def antipodal_union(c: Configuration) -> Configuration:
    """Union with the antipodal copy; Gram is the block matrix [[G,-G],[-G,G]]."""
    g = c.gram.entries
    n = c.size
    for i in range(n):
        for j in range(i + 1, n):
            if g[i][j] == -1:
                raise ConstructionError(
                    f"points {i} and {j} are already antipodal; union would duplicate"
                )
    rows = [
        [
            g[i % n][j % n] * (1 if (i < n) == (j < n) else -1)
            for j in range(2 * n)
        ]
        for i in range(2 * n)
    ]
    base_labels = c.point_labels or tuple(str(i) for i in range(n))
    labels = tuple(base_labels) + tuple(f"-{lab}" for lab in base_labels)
    label = f"{c.label} u -{c.label}" if c.label else None
    return Configuration.from_gram(rows, label=label, point_labels=labels)


def cube() -> Configuration:
    verts = list(product((1, -1), repeat=3))
    rows = [
        [Fraction(sum(a * b for a, b in zip(u, v)), 3) for v in verts] for u in verts
    ]
    labels = tuple("".join("+" if x > 0 else "-" for x in v) for v in verts)
    return Configuration.from_gram(rows, label="cube", point_labels=labels)


def cross_polytope(n: int) -> Configuration:
    if n < 1:
        raise ConstructionError(f"cross polytope needs n >= 1, got {n}")
    points = [(i, 1) for i in range(n)] + [(i, -1) for i in range(n)]
    rows = [
        [Fraction(si * sj) if i == j else Fraction(0) for (j, sj) in points]
        for (i, si) in points
    ]
    labels = tuple(f"{'+' if s > 0 else '-'}e{i + 1}" for i, s in points)
    return Configuration.from_gram(rows, label=f"cross_polytope({n})", point_labels=labels)


def simplex(n: int) -> Configuration:
    if n < 1:
        raise ConstructionError(f"simplex needs n >= 1, got {n}")
    off = Fraction(-1, n)
    rows = [
        [Fraction(1) if i == j else off for j in range(n + 1)] for i in range(n + 1)
    ]
    labels = tuple(f"v{i + 1}" for i in range(n + 1))
    return Configuration.from_gram(rows, label=f"simplex({n})", point_labels=labels)


def poles_and_ring(k: int):
    """North and south poles plus k equally spaced equatorial points.

    Ring inner products are irrational for general k, so this returns float
    coordinates for the numerics pipeline rather than an exact configuration.
    """
    from . import numerics

    if k < 2:
        raise ConstructionError(f"ring needs k >= 2 points, got {k}")
    return numerics.poles_and_ring_coordinates(k)


def standard_polytope(name: str, n: Optional[int] = None, k: Optional[int] = None):
    key = name.lower().replace("_", "-")
    if key == "cube":
        return cube()
    if key == "cross-polytope":
        if n is None:
            raise ConstructionError("cross-polytope requires a dimension (-n)")
        return cross_polytope(n)
    if key == "simplex":
        if n is None:
            raise ConstructionError("simplex requires a dimension (-n)")
        return simplex(n)
    if key in ("poles-and-ring", "poles-ring"):
        if k is None:
            raise ConstructionError("poles-and-ring requires a ring size (-k)")
        return poles_and_ring(k)
    raise ConstructionError(f"unknown polytope {name!r}")


def figure1_adjacency() -> tuple[tuple[int, ...], ...]:
    """The bundled 25-vertex (25,12,5,6) adjacency matrix."""
    text = resources.files("balanced").joinpath("data/graphs/srg_25_12_5_6.txt").read_text()
    rows = tuple(
        tuple(int(tok) for tok in line.split())
        for line in text.strip().splitlines()
    )
    return rows
