"""Combinatorial model for d-complexes with a complete (d-1)-skeleton.

A complex here is determined by a vertex count ``n``, a top dimension ``d``
and a set of d-faces, each a (d+1)-subset of {1..n}.  Every subset of
{1..n} with at most d vertices is implicitly a face (the skeleton is
complete), so only the top-dimensional faces are stored.

Two (d-1)-simplices are *neighbours* when their union is a stored d-face.
All the local machinery used by the shotgun-assembly pipeline lives here:
degrees, neighbour sets, ball/neighbourhood extraction, fingerprint
subcomplexes and the adjacency-count statistics.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

Simplex = tuple  # sorted tuple of distinct vertex ids


class DimensionError(ValueError):
    """A simplex has the wrong dimension for the requested operation."""


def as_simplex(vertices: Iterable[int]) -> Simplex:
    """Normalize an iterable of vertex ids into a sorted, validated tuple."""
    s = tuple(sorted(vertices))
    if len(set(s)) != len(s):
        raise ValueError(f"duplicate vertices in simplex {s}")
    if s and (not isinstance(s[0], int) or s[0] < 1):
        raise ValueError(f"vertex ids must be integers >= 1, got {s}")
    return s


@dataclass(frozen=True)
class NeighbourPairStats:
    """Counts of common neighbours of an adjacent simplex pair.

    ``w`` is the total number of common neighbours, ``s_prime`` counts
    those inside the union of the pair and ``s_dprime`` the rest.
    ``w == s_prime + s_dprime`` always; ``s_prime == d - 1`` whenever the
    pair is adjacent.
    """

    w: int
    s_prime: int
    s_dprime: int


@dataclass(frozen=True)
class FourTupleStats:
    """|S| and Z for two adjacent pairs (sigma1,sigma2), (sigma3,sigma4)."""

    s: int  # number of (d-1)-simplices adjacent to all four
    z: int  # indicator sum, in {0, 1, 2}


@dataclass(frozen=True)
class Fragment:
    """An induced piece of a complex.

    ``faces`` is the full face set (every dimension, empty face omitted).
    ``roster`` is the distinguished set of (d-1)-simplices the fragment was
    induced from; it is kept explicitly because the induced face set may
    contain (d-1)-faces that are not roster members.
    """

    vertices: frozenset
    faces: frozenset
    roster: frozenset

    def faces_of_size(self, k: int) -> set:
        return {f for f in self.faces if len(f) == k}


def induced_face_set(generators, d: int, is_top_face) -> frozenset:
    """Faces tau with tau <= g | g' for generators g, g' (g = g' allowed).

    Subsets with at most d vertices are always faces (complete skeleton);
    a (d+1)-subset is a face exactly when ``is_top_face`` says so.
    """
    gens = [tuple(sorted(g)) for g in generators]
    out: set = set()
    if d == 1 and all(len(g) == 1 for g in gens):
        # pair-unions of vertices: the singletons plus any present edges
        vs = sorted({g[0] for g in gens})
        out.update((v,) for v in vs)
        for i, a in enumerate(vs):
            for b in vs[i + 1 :]:
                e = (a, b)
                if is_top_face(e):
                    out.add(e)
        return frozenset(out)
    seen_unions: set = set()
    for i, a in enumerate(gens):
        sa = set(a)
        for b in gens[i:]:
            u = tuple(sorted(sa.union(b)))
            if u in seen_unions:
                continue
            seen_unions.add(u)
            m = len(u)
            for size in range(1, min(m, d) + 1):
                out.update(itertools.combinations(u, size))
            if m == d + 1:
                if is_top_face(u):
                    out.add(u)
            elif m > d + 1:
                for sub in itertools.combinations(u, d + 1):
                    if is_top_face(sub):
                        out.add(sub)
    return frozenset(out)


class Complex:
    """A complex of the fixed form: complete (d-1)-skeleton plus d-faces."""

    __slots__ = ("n", "d", "faces", "_cofaces")

    def __init__(self, n: int, d: int, faces: Iterable[Iterable[int]]):
        if d < 1:
            raise ValueError(f"dimension must be >= 1, got {d}")
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        normalized = frozenset(as_simplex(f) for f in faces)
        for f in normalized:
            if len(f) != d + 1:
                raise ValueError(f"face {f} does not have {d + 1} vertices")
            if f[-1] > n:
                raise ValueError(f"face {f} uses vertices beyond n={n}")
        self.n = n
        self.d = d
        self.faces = normalized
        self._cofaces = None

    # -- basic protocol -------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Complex)
            and self.n == other.n
            and self.d == other.d
            and self.faces == other.faces
        )

    def __hash__(self):
        return hash((self.n, self.d, self.faces))

    def __repr__(self):
        return f"Complex(n={self.n}, d={self.d}, |faces|={len(self.faces)})"

    def contains(self, simplex: Iterable[int]) -> bool:
        """Membership for a simplex of any dimension <= d."""
        s = as_simplex(simplex)
        if not s or s[-1] > self.n:
            return False
        if len(s) <= self.d:
            return True  # complete skeleton
        if len(s) == self.d + 1:
            return s in self.faces
        return False

    # -- neighbour structure --------------------------------------------

    def _check_center(self, sigma) -> Simplex:
        s = as_simplex(sigma)
        if len(s) != self.d:
            raise DimensionError(
                f"expected a (d-1)-simplex with {self.d} vertices, got {s}"
            )
        if s[-1] > self.n:
            raise ValueError(f"simplex {s} uses vertices beyond n={self.n}")
        return s

    def coface_index(self) -> dict:
        """Map each (d-1)-simplex with positive degree to its d-faces.

        Built lazily on first use; degree and neighbour queries dominate
        runtime so the index pays for itself immediately.
        """
        if self._cofaces is None:
            idx: dict = {}
            for f in self.faces:
                for sub in itertools.combinations(f, self.d):
                    idx.setdefault(sub, []).append(f)
            self._cofaces = idx
        return self._cofaces

    def cofaces(self, sigma) -> list:
        s = self._check_center(sigma)
        return self.coface_index().get(s, [])

    def degree(self, sigma) -> int:
        """Number of d-faces containing the (d-1)-simplex sigma."""
        return len(self.cofaces(sigma))

    def are_neighbours(self, sigma, sigma2) -> bool:
        a = self._check_center(sigma)
        b = self._check_center(sigma2)
        u = set(a).union(b)
        return len(u) == self.d + 1 and tuple(sorted(u)) in self.faces

    def neighbours(self, sigma) -> set:
        """S_sigma: all (d-1)-simplices whose union with sigma is a d-face.

        Always has exactly d * degree(sigma) elements.
        """
        s = self._check_center(sigma)
        out = set()
        for f in self.cofaces(s):
            for u in s:
                nb = tuple(v for v in f if v != u)
                out.add(nb)
        return out

    def distance(self, sigma, sigma2):
        """Shortest neighbour-chain length, or None when unreachable.

        None rather than an error: sparse samples routinely disconnect, and
        callers need to tell 'far' apart from 'invalid'.
        """
        a = self._check_center(sigma)
        b = self._check_center(sigma2)
        if a == b:
            return 0
        seen = {a}
        frontier = deque([(a, 0)])
        while frontier:
            cur, dist = frontier.popleft()
            for nb in self.neighbours(cur):
                if nb == b:
                    return dist + 1
                if nb not in seen:
                    seen.add(nb)
                    frontier.append((nb, dist + 1))
        return None

    def k_ball(self, sigma, k: int) -> set:
        """All (d-1)-simplices within distance k of sigma (sigma included)."""
        s = self._check_center(sigma)
        if k < 0:
            raise ValueError("k must be >= 0")
        ball = {s}
        frontier = {s}
        for _ in range(k):
            nxt = set()
            for cur in frontier:
                for nb in self.neighbours(cur):
                    if nb not in ball:
                        ball.add(nb)
                        nxt.add(nb)
            if not nxt:
                break
            frontier = nxt
        return ball

    def k_neighbourhood(self, sigma, k: int) -> Fragment:
        """The sub-complex induced by the distance-k ball around sigma."""
        s = self._check_center(sigma)
        if k < 1:
            raise ValueError("k must be >= 1 (k=0 induces no faces)")
        ball = self.k_ball(s, k)
        faces = induced_face_set(ball, self.d, lambda f: f in self.faces)
        verts = frozenset(v for f in faces for v in f)
        return Fragment(vertices=verts, faces=faces, roster=frozenset(ball))

    def common_fingerprint_complex(self, sigma1, sigma2) -> Fragment:
        """Sub-complex induced by the common neighbours of an adjacent pair."""
        a = self._check_center(sigma1)
        b = self._check_center(sigma2)
        if not self.are_neighbours(a, b):
            raise ValueError(f"{a} and {b} are not neighbours")
        common = self.neighbours(a) & self.neighbours(b)
        faces = induced_face_set(common, self.d, lambda f: f in self.faces)
        verts = frozenset(v for f in faces for v in f)
        return Fragment(vertices=verts, faces=faces, roster=frozenset(common))

    def neighbour_pair_stats(self, sigma1, sigma2) -> NeighbourPairStats:
        a = self._check_center(sigma1)
        b = self._check_center(sigma2)
        if not self.are_neighbours(a, b):
            raise ValueError(f"{a} and {b} are not neighbours")
        union = set(a).union(b)
        common = self.neighbours(a) & self.neighbours(b)
        s_prime = sum(1 for c in common if union.issuperset(c))
        return NeighbourPairStats(
            w=len(common), s_prime=s_prime, s_dprime=len(common) - s_prime
        )

    def four_tuple_stats(self, sigma1, sigma2, sigma3, sigma4) -> FourTupleStats:
        s1 = self._check_center(sigma1)
        s2 = self._check_center(sigma2)
        s3 = self._check_center(sigma3)
        s4 = self._check_center(sigma4)
        if not self.are_neighbours(s1, s2):
            raise ValueError(f"{s1} and {s2} are not neighbours")
        if not self.are_neighbours(s3, s4):
            raise ValueError(f"{s3} and {s4} are not neighbours")
        common = (
            self.neighbours(s1)
            & self.neighbours(s2)
            & self.neighbours(s3)
            & self.neighbours(s4)
        )
        z = 0
        if self.are_neighbours(s1, s3) and self.are_neighbours(s1, s4):
            z += 1
        if self.are_neighbours(s2, s3) and self.are_neighbours(s2, s4):
            z += 1
        return FourTupleStats(s=len(common), z=z)

    def supp_d(self, simplices) -> int:
        """Distinct d-faces expressible as a union of two members of A."""
        items = [self._check_center(s) for s in simplices]
        found = set()
        for i, a in enumerate(items):
            sa = set(a)
            for b in items[i + 1 :]:
                u = sa.union(b)
                if len(u) == self.d + 1:
                    t = tuple(sorted(u))
                    if t in self.faces:
                        found.add(t)
        return len(found)

    # -- text format ------------------------------------------------------

    def to_text(self) -> str:
        """Deterministic serialization: header plus lexicographic faces."""
        lines = ["# lm-shotgun complex format v1", f"LM {self.n} {self.d}"]
        for f in sorted(self.faces):
            lines.append(" ".join(str(v) for v in f))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Complex":
        header = None
        faces = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if header is None:
                parts = line.split()
                if len(parts) != 3 or parts[0] != "LM":
                    raise ValueError(
                        f"line {lineno}: expected header 'LM n d', got {raw!r}"
                    )
                header = (int(parts[1]), int(parts[2]))
                continue
            try:
                faces.append(tuple(int(tok) for tok in line.split()))
            except ValueError as exc:
                raise ValueError(f"line {lineno}: bad face {raw!r}") from exc
        if header is None:
            raise ValueError("missing 'LM n d' header line")
        return cls(header[0], header[1], faces)


def read_complex(path) -> Complex:
    with open(path, "r", encoding="utf-8") as fh:
        return Complex.from_text(fh.read())


def all_centers(n: int, d: int) -> Iterator[Simplex]:
    """All (d-1)-simplices on {1..n}, in lexicographic order."""
    return itertools.combinations(range(1, n + 1), d)
