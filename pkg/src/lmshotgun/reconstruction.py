"""Anonymized 1-neighbourhood extraction and fingerprint reconstruction.

The collection of a complex holds, per (d-1)-simplex center: the roster of
its neighbours, the d-faces through it and the d-faces spanned by two of
its neighbours, all over fresh anonymous labels.  Centers keep their true
identity.  Reconstruction matches canonical fingerprint forms between
centers: a pair sharing d-1 vertices is declared adjacent when some
fingerprint of one equals some fingerprint of the other.  Matches whose
supporting form occurs anywhere beyond the matched pair are reported as
ambiguous; pairs supported only by the empty form are reported separately.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from numpy.random import Generator, Philox, SeedSequence

from .complexes import Complex, as_simplex, induced_face_set
from .isomorphism import CanonicalForm, canonical_form

COLLECTION_FORMAT_VERSION = 1


class CollectionError(ValueError):
    """A neighbourhood collection failed validation."""


@dataclass(frozen=True)
class RootedNeighbourhood:
    """One anonymized 1-neighbourhood.

    ``center`` carries true vertex ids; ``roster``, ``d_faces`` and
    ``d_star_faces`` are over anonymous interior labels 1..m.
    """

    center: tuple
    d: int
    roster: tuple
    d_faces: tuple
    d_star_faces: tuple

    def visible_faces(self) -> frozenset:
        return frozenset(self.d_faces) | frozenset(self.d_star_faces)


@dataclass(frozen=True)
class NeighbourhoodCollection:
    n: int
    d: int
    neighbourhoods: tuple  # sorted by center; centers with no faces elided

    def by_center(self) -> dict:
        return {nb.center: nb for nb in self.neighbourhoods}


@dataclass
class AmbiguityReport:
    """Diagnostics for fingerprint collisions during reconstruction.

    A declared face is *clean* when some supporting form occurs exactly
    once in each of the two matched centers' lists and nowhere else; such
    a match can only come from a true adjacency.  All other declared faces
    are listed in ``ambiguous_faces``.  Faces whose only support is the
    empty fingerprint are additionally listed in ``empty_only_faces``.
    """

    n: int
    d: int
    declared: int = 0
    clean: int = 0
    ambiguous_faces: list = field(default_factory=list)
    empty_only_faces: list = field(default_factory=list)
    colliding_forms: int = 0

    @property
    def is_empty(self) -> bool:
        return not self.ambiguous_faces

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "declared": self.declared,
            "clean": self.clean,
            "ambiguous_faces": [list(f) for f in self.ambiguous_faces],
            "empty_only_faces": [list(f) for f in self.empty_only_faces],
            "colliding_forms": self.colliding_forms,
        }


# -- extraction -----------------------------------------------------------


def _scramble_map(support, scramble_seed: int, center) -> dict:
    """Fresh random relabeling of a neighbourhood's support onto 1..m."""
    ordered = sorted(support)
    rng = Generator(Philox(SeedSequence([scramble_seed & 0xFFFFFFFFFFFFFFFF, *center])))
    perm = rng.permutation(len(ordered))
    return {v: int(perm[i]) + 1 for i, v in enumerate(ordered)}


def extract_collection(x: Complex, scramble_seed: int) -> NeighbourhoodCollection:
    """All nonempty 1-neighbourhoods of x, interiors freshly anonymized."""
    neighbourhoods = []
    index = x.coface_index()
    for center in sorted(index):
        dfaces = index[center]
        roster = x.neighbours(center)
        dstar = set()
        roster_list = sorted(roster)
        cset = set(center)
        for i, a in enumerate(roster_list):
            sa = set(a)
            for b in roster_list[i + 1 :]:
                u = sa.union(b)
                if len(u) == x.d + 1 and not cset.issubset(u):
                    t = tuple(sorted(u))
                    if t in x.faces:
                        dstar.add(t)
        support = set(center)
        for s in roster:
            support.update(s)
        remap = _scramble_map(support, scramble_seed, center)
        relabel = lambda s: tuple(sorted(remap[v] for v in s))
        neighbourhoods.append(
            RootedNeighbourhood(
                center=center,
                d=x.d,
                roster=tuple(sorted(relabel(s) for s in roster)),
                d_faces=tuple(sorted(relabel(f) for f in dfaces)),
                d_star_faces=tuple(sorted(relabel(f) for f in dstar)),
            )
        )
    return NeighbourhoodCollection(n=x.n, d=x.d, neighbourhoods=tuple(neighbourhoods))


# -- fingerprints ----------------------------------------------------------


def center_fingerprints(nb: RootedNeighbourhood) -> List[Tuple[tuple, CanonicalForm]]:
    """(handle, form) for every roster member of a neighbourhood.

    The form is the unrooted canonical form of the fingerprint complex of
    (center, handle), built from faces visible inside the neighbourhood.
    Every common neighbour of the center and a roster member, and every
    d-face spanned by two of them, lies inside the 1-neighbourhood, so the
    fingerprint is fully determined by it.
    """
    d = nb.d
    visible = nb.visible_faces()
    roster = nb.roster
    out = []
    for handle in roster:
        hset = set(handle)
        common = []
        for rho in roster:
            u = hset.union(rho)
            if len(u) == d + 1 and tuple(sorted(u)) in visible:
                common.append(rho)
        faces = induced_face_set(common, d, lambda f: f in visible)
        out.append((handle, canonical_form(faces)))
    return out


# -- reconstruction --------------------------------------------------------


def reconstruct(coll: NeighbourhoodCollection) -> Tuple[Complex, AmbiguityReport]:
    """Fingerprint-matching reconstruction from a neighbourhood collection.

    Declares a candidate pair adjacent exactly when the two centers share a
    fingerprint form.  A true adjacency always produces a shared form (the
    pair's own fingerprint appears in both lists), so no true face is ever
    omitted; spurious shared forms can only add faces, and every such
    addition is flagged in the report because its supporting form
    necessarily occurs beyond the matched pair.
    """
    validate_collection(coll)
    n, d = coll.n, coll.d
    # form -> {center: multiplicity}; the empty form serializes to b""
    occurrences: Dict[bytes, Dict[tuple, int]] = {}
    for nb in coll.neighbourhoods:
        for _handle, form in center_fingerprints(nb):
            per_center = occurrences.setdefault(form.data, {})
            per_center[nb.center] = per_center.get(nb.center, 0) + 1

    declared: Dict[tuple, dict] = {}
    for data, per_center in occurrences.items():
        holders = sorted(per_center)
        if len(holders) < 2:
            continue
        clean_form = len(holders) == 2 and all(
            per_center[c] == 1 for c in holders
        )
        for c1, c2 in itertools.combinations(holders, 2):
            union = set(c1).union(c2)
            if len(union) != d + 1:
                continue
            face = tuple(sorted(union))
            entry = declared.setdefault(face, {"clean": False, "nonempty": False})
            if clean_form:
                entry["clean"] = True
            if data != b"":
                entry["nonempty"] = True

    report = AmbiguityReport(n=n, d=d, declared=len(declared))
    for face in sorted(declared):
        entry = declared[face]
        if entry["clean"]:
            report.clean += 1
        else:
            report.ambiguous_faces.append(face)
        if not entry["nonempty"]:
            report.empty_only_faces.append(face)
    report.colliding_forms = sum(
        1
        for per_center in occurrences.values()
        if sum(per_center.values()) > 2 or len(per_center) > 2
    )
    return Complex(n, d, declared.keys()), report


def verify_exact(x: Complex, y: Complex) -> bool:
    """Set equality of d-faces; n and d must agree."""
    if x.n != y.n or x.d != y.d:
        raise ValueError(
            f"parameter mismatch: ({x.n},{x.d}) vs ({y.n},{y.d})"
        )
    return x.faces == y.faces


# -- validation and persistence ---------------------------------------------


def validate_collection(coll: NeighbourhoodCollection) -> None:
    if coll.d < 1 or coll.n <= coll.d:
        raise CollectionError(f"bad parameters n={coll.n}, d={coll.d}")
    seen = set()
    for i, nb in enumerate(coll.neighbourhoods):
        where = f"neighbourhoods[{i}]"
        if nb.d != coll.d:
            raise CollectionError(f"{where}: dimension {nb.d} != {coll.d}")
        center = as_simplex(nb.center)
        if len(center) != coll.d or center[-1] > coll.n:
            raise CollectionError(f"{where}.center: bad simplex {nb.center}")
        if center in seen:
            raise CollectionError(f"{where}.center: duplicate center {center}")
        seen.add(center)
        for j, f in enumerate(nb.d_faces):
            if len(set(f)) != coll.d + 1:
                raise CollectionError(f"{where}.d_faces[{j}]: bad face {f}")
        for j, s in enumerate(nb.roster):
            if len(set(s)) != coll.d:
                raise CollectionError(f"{where}.roster[{j}]: bad simplex {s}")
        if len(nb.roster) != coll.d * len(nb.d_faces):
            raise CollectionError(
                f"{where}: roster size {len(nb.roster)} != d * |d_faces|"
            )
        roster_set = set(nb.roster)
        for j, f in enumerate(nb.d_star_faces):
            if len(set(f)) != coll.d + 1:
                raise CollectionError(f"{where}.d_star_faces[{j}]: bad face {f}")
            # two distinct d-subsets of f always union to f, so spanned
            # by the roster <=> at least two d-subsets are roster members
            fs = tuple(sorted(f))
            hits = sum(1 for s in itertools.combinations(fs, coll.d) if s in roster_set)
            if hits < 2:
                raise CollectionError(
                    f"{where}.d_star_faces[{j}]: {f} is not a union of two roster members"
                )


def collection_to_dict(coll: NeighbourhoodCollection) -> dict:
    return {
        "format_version": COLLECTION_FORMAT_VERSION,
        "kind": "neighbourhood-collection",
        "n": coll.n,
        "d": coll.d,
        "neighbourhoods": [
            {
                "center": list(nb.center),
                "roster": [list(s) for s in nb.roster],
                "d_faces": [list(f) for f in nb.d_faces],
                "d_star_faces": [list(f) for f in nb.d_star_faces],
            }
            for nb in coll.neighbourhoods
        ],
    }


def collection_from_dict(payload: dict) -> NeighbourhoodCollection:
    try:
        n = int(payload["n"])
        d = int(payload["d"])
        raw = payload["neighbourhoods"]
    except (KeyError, TypeError) as exc:
        raise CollectionError(f"missing collection field: {exc}") from exc
    neighbourhoods = []
    for i, item in enumerate(raw):
        where = f"neighbourhoods[{i}]"
        try:
            nb = RootedNeighbourhood(
                center=tuple(int(v) for v in item["center"]),
                d=d,
                roster=tuple(tuple(int(v) for v in s) for s in item["roster"]),
                d_faces=tuple(tuple(int(v) for v in f) for f in item["d_faces"]),
                d_star_faces=tuple(
                    tuple(int(v) for v in f) for f in item["d_star_faces"]
                ),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CollectionError(f"{where}: {exc}") from exc
        neighbourhoods.append(nb)
    coll = NeighbourhoodCollection(
        n=n, d=d, neighbourhoods=tuple(sorted(neighbourhoods, key=lambda nb: nb.center))
    )
    validate_collection(coll)
    return coll


def collection_to_json(coll: NeighbourhoodCollection) -> str:
    return json.dumps(collection_to_dict(coll), sort_keys=True, indent=1) + "\n"


def collection_from_json(text: str) -> NeighbourhoodCollection:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CollectionError(f"invalid JSON: {exc}") from exc
    return collection_from_dict(payload)
