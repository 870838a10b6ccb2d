"""Root system tables for the finite simple types A-G.

Conventions used throughout the package:

* weights are integer tuples in the fundamental-weight basis,
* roots are integer tuples in the simple-root basis,
* the invariant form is normalised so the highest root has squared
  length 2; then d(alpha) = 2/(alpha,alpha) lies in {1, 2, 3},
* nodes are 1-based, numbered along the diagram as usual (short roots
  sit at the high end of the chain in types B and G, the long root in
  type C; in types E the branch node 2 hangs off node 4),
* the Cartan matrix is stored as A[i][j] = alpha_j(h_i), so column j
  holds the fundamental coordinates of alpha_j.

Everything is exact integer (or Fraction) arithmetic; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Weight = tuple[int, ...]

# positive root counts, used as a guard after the reflection closure
_NPOS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True, order=True)
class Root:
    """A root, stored by its integer coordinates in the simple-root basis."""

    coords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coords)

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __repr__(self) -> str:
        return f"Root{self.coords}"


def _dynkin(family: str, rank: int) -> tuple[list[tuple[int, int]], tuple[int, ...]]:
    """Diagram edges (0-based) and the length data d_i = 2/(alpha_i,alpha_i)."""
    if family not in _RANK_OK:
        raise ValueError(f"unknown family {family!r}")
    if not _RANK_OK[family](rank):
        raise ValueError(f"rank {rank} invalid for family {family}")
    chain = [(i, i + 1) for i in range(rank - 1)]
    if family == "A":
        return chain, (1,) * rank
    if family == "B":
        return chain, (1,) * (rank - 1) + (2,)
    if family == "C":
        return chain, (2,) * (rank - 1) + (1,)
    if family == "D":
        return chain[:-1] + [(rank - 3, rank - 1)], (1,) * rank
    if family == "E":
        # chain 1-3-4-5-..., node 2 attached to node 4 (1-based)
        spine = [0, 2] + list(range(3, rank))
        edges = [(spine[i], spine[i + 1]) for i in range(len(spine) - 1)]
        return edges + [(1, 3)], (1,) * rank
    if family == "F":
        return chain, (1, 1, 2, 2)
    return chain, (3, 1)  # G2


def _cartan(edges: list[tuple[int, int]], d: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    n = len(d)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        # A[i][j] = -1 when alpha_j is at least as long, else -d_i/d_j
        a[i][j] = -1 if d[i] <= d[j] else -(d[i] // d[j])
        a[j][i] = -1 if d[j] <= d[i] else -(d[j] // d[i])
    return tuple(tuple(row) for row in a)


class RootSystem:
    """Positive roots, lengths and coroot pairings of one simple type."""

    def __init__(self, family: str, rank: int):
        edges, d_simple = _dynkin(family, rank)
        self.family = family
        self.rank = rank
        self.d_simple = d_simple
        self.cartan = _cartan(edges, d_simple)
        self._close()

    def _close(self) -> None:
        n = self.rank
        a = self.cartan
        seen: set[tuple[int, ...]] = set()
        frontier = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        seen.update(frontier)
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(n):
                    pair = sum(a[i][j] * m[j] for j in range(n))
                    refl = tuple(m[j] - pair if j == i else m[j] for j in range(n))
                    if refl not in seen:
                        seen.add(refl)
                        nxt.append(refl)
            frontier = nxt
        for m in seen:
            if not (all(c >= 0 for c in m) or all(c <= 0 for c in m)):
                raise AssertionError(f"mixed-sign root {m}")
        pos = sorted((m for m in seen if all(c >= 0 for c in m)),
                     key=lambda m: (sum(m), m))
        expected = _NPOS[self.family](n)
        if len(pos) != expected or len(seen) != 2 * expected:
            raise AssertionError(
                f"{self.family}{n}: {len(pos)} positive roots, expected {expected}")

        self.positive_roots: tuple[Root, ...] = tuple(Root(m) for m in pos)
        self._d: dict[Root, int] = {}
        self._coroot: dict[Root, tuple[int, ...]] = {}
        for root in self.positive_roots:
            m = root.coords
            norm = sum(Fraction(a[i][j], self.d_simple[i]) * m[i] * m[j]
                       for i in range(n) for j in range(n))
            d_alpha = Fraction(2) / norm
            if d_alpha.denominator != 1 or d_alpha.numerator not in (1, 2, 3):
                raise AssertionError(f"bad length for {root}: d={d_alpha}")
            d_alpha = int(d_alpha)
            cor = []
            for i in range(n):
                c = Fraction(d_alpha * m[i], self.d_simple[i])
                if c.denominator != 1:
                    raise AssertionError(f"non-integral coroot pairing for {root}")
                cor.append(int(c))
            self._d[root] = d_alpha
            self._coroot[root] = tuple(cor)

        heights = [r.height for r in self.positive_roots]
        if heights.count(max(heights)) != 1:
            raise AssertionError("highest root not unique")
        self.theta = self.positive_roots[-1]
        if self._d[self.theta] != 1 or any(c < 0 for c in self.root_weight(self.theta)):
            raise AssertionError("highest root must be long and dominant")
        self._inv_cartan: tuple[tuple[Fraction, ...], ...] | None = None

    # -- basic queries ----------------------------------------------------

    def simple_root(self, i: int) -> Root:
        """The i-th simple root, i in 1..rank."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"node {i} out of range")
        return Root(tuple(1 if j == i - 1 else 0 for j in range(self.rank)))

    def d(self, root: Root) -> int:
        """2/(alpha,alpha), one of 1, 2, 3."""
        return self._d[root]

    def coroot_vector(self, root: Root) -> tuple[int, ...]:
        """Pairings (wt_1(h_alpha), ..., wt_n(h_alpha)) of the fundamental weights."""
        return self._coroot[root]

    def pairing(self, mu, root: Root):
        """mu(h_alpha) for mu in fundamental-weight coordinates."""
        cor = self._coroot[root]
        return sum(m * c for m, c in zip(mu, cor, strict=True))

    def root_weight(self, root: Root) -> Weight:
        """Fundamental-weight coordinates of a root."""
        return tuple(sum(self.cartan[i][j] * root.coords[j] for j in range(self.rank))
                     for i in range(self.rank))

    def is_dominant(self, mu) -> bool:
        return all(c >= 0 for c in mu)

    # -- Weyl group action on weights -------------------------------------

    def reflect(self, i: int, mu):
        """Simple reflection s_i on fundamental-weight coordinates, i in 1..rank."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"node {i} out of range")
        c = mu[i - 1]
        return tuple(mu[j] - c * self.cartan[j][i - 1] for j in range(self.rank))

    def weyl_apply(self, word, mu):
        """Apply s_{word[0]} ... s_{word[-1]} to mu (rightmost letter acts first)."""
        for i in reversed(word):
            mu = self.reflect(i, mu)
        return mu

    def root_coordinates(self, diff) -> tuple[Fraction, ...]:
        """Simple-root coordinates of a fundamental-coordinate vector."""
        if self._inv_cartan is None:
            self._inv_cartan = _invert(self.cartan)
        inv = self._inv_cartan
        n = self.rank
        return tuple(sum(inv[i][j] * diff[j] for j in range(n)) for i in range(n))

    def __repr__(self) -> str:
        return f"RootSystem({self.family}{self.rank})"


def _invert(a) -> tuple[tuple[Fraction, ...], ...]:
    n = len(a)
    work = [[Fraction(a[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
            for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if work[r][col] != 0)
        work[col], work[piv] = work[piv], work[col]
        scale = work[col][col]
        work[col] = [x / scale for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


@lru_cache(maxsize=None)
def root_system(family: str, rank: int) -> RootSystem:
    """Build (and cache) the root system of the given family and rank."""
    return RootSystem(family, rank)
