"""Canonical forms for small face-sets, up to vertex relabeling.

A face-set is any finite collection of finite vertex sets.  Two face-sets
are isomorphic when some vertex bijection maps one onto the other; the
canonical form is a byte string with the property that equal bytes <=>
isomorphic.  Anchors restrict the admissible bijections: anchor i must map
onto anchor i *setwise*.

The algorithm is iterated partition refinement (vertex signatures built
from incident-face color profiles) followed by individualization of the
first non-singleton cell, taking the lexicographically smallest face
encoding over all branches.  Exponential in the worst case, fine for the
desk-scale fragments this package deals in.  Singleton faces cannot split
any partition beyond the initial coloring, so they are folded into it and
kept out of the refinement rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class CanonicalForm:
    data: bytes
    vertex_count: int
    face_count: int
    size_histogram: tuple

    def hex(self) -> str:
        return self.data.hex()

    @property
    def is_empty(self) -> bool:
        return self.vertex_count == 0 and self.face_count == 0


class _Instance:
    """Preprocessed face-set: indexed vertices, incidence, initial colors."""

    __slots__ = (
        "n",
        "faces",
        "faceset",
        "incidence",
        "init_colors",
        "anchors_idx",
        "singles",
    )

    def __init__(self, face_tuples, anchor_sets):
        verts = sorted(set().union(*(set(f) for f in face_tuples), *anchor_sets, set()))
        self.n = len(verts)
        vidx = {v: i for i, v in enumerate(verts)}
        self.singles = [0] * self.n
        multi = []
        for f in face_tuples:
            if len(f) == 1:
                self.singles[vidx[f[0]]] = 1
            else:
                multi.append(tuple(vidx[v] for v in f))
        self.faces = multi
        self.faceset = frozenset(multi)
        self.anchors_idx = [frozenset(vidx[v] for v in a) for a in anchor_sets]
        incidence = [[] for _ in range(self.n)]
        for f in multi:
            size = len(f)
            for v in f:
                rest = tuple(w for w in f if w != v)
                incidence[v].append((size, rest))
        self.incidence = [tuple(entries) for entries in incidence]
        profiles = [
            (self.singles[i],) + tuple(i in a for a in self.anchors_idx)
            for i in range(self.n)
        ]
        order = {p: i for i, p in enumerate(sorted(set(profiles)))}
        self.init_colors = [order[p] for p in profiles]

    def twins(self, a: int, b: int) -> bool:
        """True when swapping a and b maps the face set onto itself.

        Such a transposition is an automorphism, so individualizing a or b
        leads to the same minimal encoding and only one branch is needed.
        """
        fs = self.faceset
        for _size, rest in self.incidence[a]:
            if b in rest:
                continue
            if tuple(sorted(rest + (b,))) not in fs:
                return False
        for _size, rest in self.incidence[b]:
            if a in rest:
                continue
            if tuple(sorted(rest + (a,))) not in fs:
                return False
        return True


def _refine(inst: _Instance, colors):
    """Iterate signature refinement to a fixpoint.

    A round can only split classes, so the class count detects the
    fixpoint.
    """
    n = inst.n
    incidence = inst.incidence
    n_classes = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            local = []
            for size, rest in incidence[v]:
                if len(rest) == 1:
                    local.append((size, colors[rest[0]]))
                elif len(rest) == 2:
                    c1, c2 = colors[rest[0]], colors[rest[1]]
                    local.append((size, c1, c2) if c1 <= c2 else (size, c2, c1))
                else:
                    local.append((size,) + tuple(sorted(colors[w] for w in rest)))
            local.sort()
            sigs.append((colors[v], tuple(local)))
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [order[s] for s in sigs]
        new_n = len(order)
        if new_n == n_classes:
            return colors
        n_classes = new_n


def _encode(inst: _Instance, colors) -> bytes:
    # colors form a bijection onto 0..n-1 at this point
    relabeled = sorted(
        (len(f), tuple(sorted(colors[v] for v in f))) for f in inst.faces
    )
    parts = [b"n%d" % inst.n]
    parts.append(
        b"s"
        + ",".join(
            str(c) for c in sorted(colors[v] for v in range(inst.n) if inst.singles[v])
        ).encode()
    )
    for _, f in relabeled:
        parts.append(",".join(map(str, f)).encode())
    for a in inst.anchors_idx:
        parts.append(b"a" + ",".join(str(c) for c in sorted(colors[i] for i in a)).encode())
    return b";".join(parts)


def _search(inst: _Instance, colors) -> bytes:
    colors = _refine(inst, colors)
    cells: dict = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    target = None
    for c in sorted(cells):
        if len(cells[c]) > 1:
            target = cells[c]
            break
    if target is None:
        return _encode(inst, colors)
    # one branch per twin class: interchangeable vertices give equal minima
    reps: list = []
    for v in target:
        if not any(inst.twins(v, r) for r in reps):
            reps.append(v)
    best = None
    n = inst.n
    for v in reps:
        branched = list(colors)
        branched[v] = n  # fresh color beyond the current range
        enc = _search(inst, branched)
        if best is None or enc < best:
            best = enc
    return best


def canonical_form(
    faces: Iterable[Iterable[int]], anchors: Sequence[Iterable[int]] = ()
) -> CanonicalForm:
    """Canonical byte-string of a face-set, optionally rooted at anchors.

    Equal bytes <=> there is a vertex bijection mapping faces onto faces
    and each anchor set onto the corresponding anchor set.  The empty
    face-set has a well-defined (empty) form.
    """
    face_tuples = sorted({t for t in (tuple(sorted(f)) for f in faces) if t})
    anchor_sets = [frozenset(a) for a in anchors]
    histogram: dict = {}
    for f in face_tuples:
        histogram[len(f)] = histogram.get(len(f), 0) + 1
    meta_hist = tuple(sorted(histogram.items()))
    inst = _Instance(face_tuples, anchor_sets)
    if inst.n == 0:
        return CanonicalForm(b"", 0, 0, ())
    data = _search(inst, inst.init_colors)
    return CanonicalForm(data, inst.n, len(face_tuples), meta_hist)


def is_isomorphic(
    a: Iterable[Iterable[int]],
    b: Iterable[Iterable[int]],
    anchors_a: Sequence[Iterable[int]] = (),
    anchors_b: Sequence[Iterable[int]] = (),
) -> bool:
    """Face-set isomorphism, decided by canonical form equality."""
    return canonical_form(a, anchors_a) == canonical_form(b, anchors_b)


def complexes_isomorphic(x, y) -> bool:
    """Isomorphism of two complexes of the fixed skeleton-complete form.

    Vertex bijections of {1..n} always preserve the complete skeleton, so
    two complexes with equal n and d are isomorphic exactly when their
    d-face hypergraphs are.
    """
    if x.n != y.n or x.d != y.d:
        return False
    return is_isomorphic(x.faces, y.faces)
