"""Witness pairs for non-reconstructability from 1-neighbourhoods.

A witness is a pair of complexes on the same vertex set whose
1-neighbourhoods are isomorphic center by center while the complexes
themselves are not isomorphic.  Constructed mode emits known families:

* d = 1: two disjoint cycles C_{2m} + C_{2m} against one cycle C_{4m}.
  Every vertex sees the same local picture (two pairwise non-adjacent
  neighbours) but the component counts differ.
* d = 2: two triple systems on 13 points in which every pair of vertices
  lies in exactly one triangle, related by a quadrilateral switch that
  changes the isomorphism class.  Every edge's 1-neighbourhood is a single
  triangle in both, so the collections agree center by center.

Exhaustive mode walks every complex on (n, d), groups them by the vector
of per-center neighbourhood forms, and reports any group holding two
non-isomorphic complexes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .complexes import Complex, all_centers
from .isomorphism import canonical_form, complexes_isomorphic
from .sampler import enumerate_complexes


@dataclass(frozen=True)
class CollisionWitness:
    x: Complex
    x_tilde: Complex
    centers_checked: int
    per_center_isomorphic: bool
    complexes_isomorphic: bool

    @property
    def valid(self) -> bool:
        return self.per_center_isomorphic and not self.complexes_isomorphic


def neighbourhood_form(x: Complex, center) -> bytes:
    """Unrooted canonical form of the 1-neighbourhood of a center."""
    fragment = x.k_neighbourhood(center, 1)
    return canonical_form(fragment.faces).data


def verify_witness(x: Complex, x_tilde: Complex) -> CollisionWitness:
    """Check both witness claims with the isomorphism oracle."""
    if x.n != x_tilde.n or x.d != x_tilde.d:
        raise ValueError("witness candidates must share n and d")
    per_center = True
    checked = 0
    for center in all_centers(x.n, x.d):
        checked += 1
        if neighbourhood_form(x, center) != neighbourhood_form(x_tilde, center):
            per_center = False
            break
    return CollisionWitness(
        x=x,
        x_tilde=x_tilde,
        centers_checked=checked,
        per_center_isomorphic=per_center,
        complexes_isomorphic=complexes_isomorphic(x, x_tilde),
    )


# -- constructed families ------------------------------------------------------


def cycle_complex(vertices) -> list:
    vs = list(vertices)
    return [tuple(sorted((vs[i], vs[(i + 1) % len(vs)]))) for i in range(len(vs))]


def _constructed_d1(n: int) -> tuple:
    if n < 8 or n % 4:
        raise ValueError("the cycle family needs n divisible by 4, n >= 8")
    half = n // 2
    two = cycle_complex(range(1, half + 1)) + cycle_complex(range(half + 1, n + 1))
    one = cycle_complex(range(1, n + 1))
    return Complex(n, 1, two), Complex(n, 1, one)


def _cyclic_triple_system(n: int, base_blocks) -> set:
    blocks = set()
    for b in base_blocks:
        for shift in range(n):
            blocks.add(tuple(sorted(((v + shift) % n) + 1 for v in b)))
    return blocks


def _pasch_switch_pair(n: int = 13) -> tuple:
    """Two non-isomorphic pair-once triangle systems on n = 13 points.

    Start from the cyclic system generated by the base triples {0,1,4} and
    {0,2,7}; locate a quadrilateral configuration {abc, aef, dbf, dec} and
    replace it by its complementary configuration {def, dbc, aec, abf},
    which covers the same pairs.  The switch is accepted only when the
    result is verifiably non-isomorphic to the original.
    """
    if n != 13:
        raise ValueError("the switch family is built on 13 points")
    original = _cyclic_triple_system(13, [(0, 1, 4), (0, 2, 7)])
    blocks = sorted(original)
    for quad in itertools.combinations(range(len(blocks)), 4):
        chosen = [set(blocks[i]) for i in quad]
        support = set().union(*chosen)
        if len(support) != 6:
            continue
        if any(len(a & b) != 1 for a, b in itertools.combinations(chosen, 2)):
            continue
        degree = {v: sum(v in b for b in chosen) for v in support}
        if sorted(degree.values()) != [2, 2, 2, 2, 2, 2]:
            continue
        # complementary configuration on the same six points
        pairs_needed = {
            tuple(sorted(e))
            for b in chosen
            for e in itertools.combinations(sorted(b), 2)
        }
        replacement = None
        for cand in itertools.combinations(itertools.combinations(sorted(support), 3), 4):
            cand_sets = [set(c) for c in cand]
            if any(set(c) in [set(b) for b in chosen] for c in cand):
                continue
            pairs = [tuple(sorted(e)) for c in cand for e in itertools.combinations(sorted(c), 2)]
            if len(set(pairs)) == 12 and set(pairs) == pairs_needed:
                replacement = [tuple(sorted(c)) for c in cand]
                break
        if replacement is None:
            continue
        switched = set(original)
        for i in quad:
            switched.discard(blocks[i])
        switched.update(replacement)
        xa = Complex(13, 2, original)
        xb = Complex(13, 2, switched)
        if not complexes_isomorphic(xa, xb):
            return xa, xb
    raise RuntimeError("no isomorphism-breaking switch found")


def constructed_witness(n: int, d: int) -> CollisionWitness:
    if d == 1:
        x, xt = _constructed_d1(n)
    elif d == 2:
        if n != 13:
            raise ValueError("the d=2 constructed family requires n = 13")
        x, xt = _pasch_switch_pair(13)
    else:
        raise ValueError(
            "no constructed family for d >= 3; use exhaustive mode on small n"
        )
    witness = verify_witness(x, xt)
    if not witness.valid:
        raise RuntimeError("constructed pair failed witness verification")
    return witness


# -- exhaustive search ----------------------------------------------------------


def exhaustive_witness(n: int, d: int) -> Optional[CollisionWitness]:
    """Search all complexes on (n, d) for a witness pair; None when absent.

    Complexes are grouped by their center-indexed vector of neighbourhood
    forms; a witness exists exactly when some group splits into more than
    one isomorphism class.
    """
    centers = list(all_centers(n, d))
    groups: dict = {}
    for x in enumerate_complexes(n, d):
        signature = tuple(neighbourhood_form(x, c) for c in centers)
        groups.setdefault(signature, []).append(x)
    for members in groups.values():
        if len(members) < 2:
            continue
        classes: dict = {}
        for x in members:
            key = canonical_form(x.faces).data
            classes.setdefault(key, x)
        if len(classes) > 1:
            reps = list(classes.values())
            witness = verify_witness(reps[0], reps[1])
            if witness.valid:
                return witness
    return None


def collision_search(n: int, d: int, mode: str = "constructed") -> Optional[CollisionWitness]:
    """Find a non-reconstructability witness pair, or None (exhaustive mode only)."""
    if mode == "constructed":
        return constructed_witness(n, d)
    if mode == "exhaustive":
        return exhaustive_witness(n, d)
    raise ValueError(f"unknown mode {mode!r}")
