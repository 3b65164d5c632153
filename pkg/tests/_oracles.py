"""Independent brute-force oracles used across the test suite.

These deliberately avoid the package's own algorithms: isomorphism by
exhaustive bijection search, distances by Floyd-Warshall, neighbourhood
and fingerprint sets by direct expansion of their set-builder definitions.
"""

import itertools


def brute_force_isomorphic(a, b) -> bool:
    """Try every vertex bijection between the supports of two face-sets."""
    fa = {tuple(sorted(f)) for f in a}
    fb = {tuple(sorted(f)) for f in b}
    va = sorted({v for f in fa for v in f})
    vb = sorted({v for f in fb for v in f})
    if len(va) != len(vb) or len(fa) != len(fb):
        return False
    sizes_a = sorted(len(f) for f in fa)
    sizes_b = sorted(len(f) for f in fb)
    if sizes_a != sizes_b:
        return False
    for perm in itertools.permutations(vb):
        mapping = dict(zip(va, perm))
        if all(tuple(sorted(mapping[v] for v in f)) in fb for f in fa):
            return True
    return False


def floyd_warshall_distances(x):
    """All-pairs neighbour-chain distances over the (d-1)-simplices of x."""
    centers = list(itertools.combinations(range(1, x.n + 1), x.d))
    idx = {c: i for i, c in enumerate(centers)}
    big = float("inf")
    dist = [[big] * len(centers) for _ in centers]
    for i in range(len(centers)):
        dist[i][i] = 0
    for f in x.faces:
        subs = [tuple(sorted(s)) for s in itertools.combinations(f, x.d)]
        for a, b in itertools.combinations(subs, 2):
            dist[idx[a]][idx[b]] = 1
            dist[idx[b]][idx[a]] = 1
    for k in range(len(centers)):
        dk = dist[k]
        for i in range(len(centers)):
            di = dist[i]
            ik = di[k]
            if ik == big:
                continue
            for j in range(len(centers)):
                alt = ik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return centers, dist


def setbuilder_neighbourhood_faces(x, sigma, k):
    """Literal expansion of the induced-subcomplex definition."""
    ball = x.k_ball(sigma, k)
    out = set()
    for a in ball:
        for b in ball:
            union = tuple(sorted(set(a) | set(b)))
            for size in range(1, len(union) + 1):
                for sub in itertools.combinations(union, size):
                    if x.contains(sub):
                        out.add(sub)
    return out


def setbuilder_fingerprint_faces(x, sigma1, sigma2):
    common = x.neighbours(sigma1) & x.neighbours(sigma2)
    out = set()
    for a in common:
        for b in common:
            union = tuple(sorted(set(a) | set(b)))
            for size in range(1, len(union) + 1):
                for sub in itertools.combinations(union, size):
                    if x.contains(sub):
                        out.add(sub)
    return out


def brute_force_supp(x, simplices) -> int:
    faces = set()
    for a, b in itertools.combinations(set(simplices), 2):
        u = tuple(sorted(set(a) | set(b)))
        if len(u) == x.d + 1 and u in x.faces:
            faces.add(u)
    return len(faces)
