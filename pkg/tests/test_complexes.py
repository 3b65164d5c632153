"""Core combinatorial operations against examples and brute-force oracles."""

import itertools
import random

import pytest

from lmshotgun import Complex, DimensionError, LMParams, sample_lm
from lmshotgun.complexes import as_simplex

from _oracles import (
    brute_force_supp,
    floyd_warshall_distances,
    setbuilder_fingerprint_faces,
    setbuilder_neighbourhood_faces,
)

FIG1 = Complex(5, 2, [(1, 2, 3), (1, 2, 4), (1, 2, 5)])
FIG2 = Complex(5, 2, [(1, 2, 5), (1, 4, 5), (1, 3, 4), (1, 2, 3)])


def random_complex(rng, n, d):
    faces = [
        f for f in itertools.combinations(range(1, n + 1), d + 1) if rng.random() < rng.choice([0.15, 0.4, 0.7])
    ]
    return Complex(n, d, faces)


def test_simplex_normalization():
    assert as_simplex([3, 1, 2]) == (1, 2, 3)
    with pytest.raises(ValueError):
        as_simplex([1, 1, 2])
    with pytest.raises(ValueError):
        as_simplex([0, 1])


def test_complex_validation():
    with pytest.raises(ValueError):
        Complex(4, 2, [(1, 2)])  # wrong face size
    with pytest.raises(ValueError):
        Complex(4, 2, [(1, 2, 5)])  # vertex beyond n
    with pytest.raises(ValueError):
        Complex(4, 0, [])


def test_degree_examples():
    assert FIG1.degree((1, 2)) == 3
    assert Complex(5, 2, []).degree((1, 2)) == 0
    complete = Complex(5, 1, list(itertools.combinations(range(1, 6), 2)))
    assert complete.degree((3,)) == 4  # n - d on the complete complex
    with pytest.raises(DimensionError):
        FIG1.degree((1, 2, 3))


def test_are_neighbours_examples():
    assert FIG2.are_neighbours((1, 2), (1, 5))
    assert not FIG2.are_neighbours((1, 2), (1, 2))
    assert not FIG2.are_neighbours((1, 2), (3, 4))
    with pytest.raises(DimensionError):
        FIG2.are_neighbours((1,), (1, 2))


def test_neighbours_examples():
    assert len(FIG1.neighbours((1, 2))) == 6
    assert Complex(5, 2, []).neighbours((1, 2)) == set()
    star = Complex(3, 1, [(1, 2), (1, 3)])
    assert star.neighbours((1,)) == {(2,), (3,)}


def test_neighbour_count_identity():
    rng = random.Random(11)
    for _ in range(60):
        d = rng.choice([1, 2, 3])
        n = rng.randint(d + 2, 9)
        x = random_complex(rng, n, d)
        for sigma in itertools.combinations(range(1, n + 1), d):
            assert len(x.neighbours(sigma)) == d * x.degree(sigma)


def test_distance_examples():
    path = Complex(3, 1, [(1, 2), (2, 3)])
    assert path.distance((1,), (1,)) == 0
    assert path.distance((1,), (2,)) == 1
    assert path.distance((1,), (3,)) == 2
    split = Complex(4, 1, [(1, 2), (3, 4)])
    assert split.distance((1,), (3,)) is None


def test_distance_matches_floyd_warshall():
    rng = random.Random(5)
    for _ in range(12):
        d = rng.choice([1, 2])
        n = rng.randint(d + 2, 6)
        x = random_complex(rng, n, d)
        centers, dist = floyd_warshall_distances(x)
        for i, a in enumerate(centers):
            for j, b in enumerate(centers):
                expected = dist[i][j]
                got = x.distance(a, b)
                if expected == float("inf"):
                    assert got is None
                else:
                    assert got == expected


def test_distance_metric_properties():
    rng = random.Random(6)
    for _ in range(8):
        d = rng.choice([1, 2])
        n = rng.randint(d + 2, 6)
        x = random_complex(rng, n, d)
        centers = list(itertools.combinations(range(1, n + 1), d))
        for a, b in itertools.combinations(centers, 2):
            ab = x.distance(a, b)
            assert ab == x.distance(b, a)
            if ab is None:
                continue
            for c in centers:
                bc = x.distance(b, c)
                ac = x.distance(a, c)
                if bc is not None:
                    assert ac is not None and ac <= ab + bc


def test_k_ball():
    path = Complex(3, 1, [(1, 2), (2, 3)])
    assert path.k_ball((1,), 0) == {(1,)}
    assert path.k_ball((1,), 1) == {(1,), (2,)}
    assert path.k_ball((1,), 2) == {(1,), (2,), (3,)}
    # monotone and stabilizes at the component
    rng = random.Random(7)
    for _ in range(10):
        d = rng.choice([1, 2])
        n = rng.randint(d + 2, 7)
        x = random_complex(rng, n, d)
        sigma = tuple(range(1, d + 1))
        prev = x.k_ball(sigma, 0)
        for k in range(1, 6):
            cur = x.k_ball(sigma, k)
            assert prev <= cur
            prev = cur
        component = {
            c
            for c in itertools.combinations(range(1, n + 1), d)
            if x.distance(sigma, c) is not None
        }
        assert x.k_ball(sigma, n * n) == component


def test_k_neighbourhood_examples():
    empty = Complex(5, 2, [])
    frag = empty.k_neighbourhood((1, 2), 1)
    assert frag.faces == frozenset({(1,), (2,), (1, 2)})
    with pytest.raises(ValueError):
        empty.k_neighbourhood((1, 2), 0)

    frag2 = FIG2.k_neighbourhood((1, 2), 1)
    assert {f for f in frag2.faces if len(f) == 3} == {(1, 2, 3), (1, 2, 5)}

    triangle = Complex(3, 1, [(1, 2), (2, 3), (1, 3)])
    frag3 = triangle.k_neighbourhood((1,), 1)
    assert frag3.faces == frozenset(
        {(1,), (2,), (3,), (1, 2), (2, 3), (1, 3)}
    )


def test_k_neighbourhood_matches_setbuilder():
    rng = random.Random(8)
    for _ in range(15):
        d = rng.choice([1, 2])
        n = rng.randint(d + 2, 7)
        x = random_complex(rng, n, d)
        sigma = tuple(sorted(rng.sample(range(1, n + 1), d)))
        for k in (1, 2):
            frag = x.k_neighbourhood(sigma, k)
            assert set(frag.faces) == setbuilder_neighbourhood_faces(x, sigma, k)


def test_one_neighbourhood_decomposition():
    # the k=1 fragment decomposes into roster, faces through sigma, and
    # faces spanned by two roster members missing sigma
    rng = random.Random(9)
    for _ in range(15):
        d = rng.choice([1, 2, 3])
        n = rng.randint(d + 2, 8)
        x = random_complex(rng, n, d)
        sigma = tuple(sorted(rng.sample(range(1, n + 1), d)))
        frag = x.k_neighbourhood(sigma, 1)
        roster = x.neighbours(sigma)
        assert frag.roster == frozenset(roster) | {sigma}
        d_faces = {f for f in frag.faces if len(f) == d + 1}
        through = {f for f in d_faces if set(sigma) <= set(f)}
        assert through == set(x.cofaces(sigma))
        spanned = set()
        for a, b in itertools.combinations(roster, 2):
            u = tuple(sorted(set(a) | set(b)))
            if len(u) == d + 1 and u in x.faces and not set(sigma) <= set(u):
                spanned.add(u)
        assert d_faces - through == spanned


def test_common_fingerprint_examples():
    x = Complex(4, 1, [(1, 2)])
    frag = x.common_fingerprint_complex((1,), (2,))
    assert frag.faces == frozenset()
    with pytest.raises(ValueError):
        x.common_fingerprint_complex((1,), (3,))

    rng = random.Random(10)
    for _ in range(20):
        d = rng.choice([1, 2])
        n = rng.randint(d + 2, 7)
        x = random_complex(rng, n, d)
        for f in sorted(x.faces)[:2]:
            subs = list(itertools.combinations(f, d))
            a, b = subs[0], subs[1]
            frag = x.common_fingerprint_complex(a, b)
            assert set(frag.faces) == setbuilder_fingerprint_faces(x, a, b)


def test_neighbour_pair_stats():
    # smallest possible: only the shared face present
    d = 2
    x = Complex(6, d, [(1, 2, 3)])
    st = x.neighbour_pair_stats((1, 2), (1, 3))
    assert (st.w, st.s_prime, st.s_dprime) == (d - 1, d - 1, 0)

    # Figure 2: (1,5) and (1,3) are common neighbours of (1,2), (1,4)
    assert FIG2.are_neighbours((1, 2), (1, 4)) is False  # union (1,2,4) absent
    st2 = FIG2.neighbour_pair_stats((1, 2), (1, 5))
    assert st2.s_prime == 1

    rng = random.Random(12)
    checked = 0
    for _ in range(120):
        d = rng.choice([1, 2, 3])
        n = rng.randint(d + 2, 9)
        x = random_complex(rng, n, d)
        if not x.faces:
            continue
        f = sorted(x.faces)[0]
        subs = list(itertools.combinations(f, d))
        st = x.neighbour_pair_stats(subs[0], subs[1])
        assert st.s_prime == d - 1
        assert st.w == st.s_prime + st.s_dprime
        assert st.s_dprime >= 0
        checked += 1
    assert checked > 50


def test_four_tuple_stats_cases():
    rng = random.Random(13)
    for _ in range(150):
        d = rng.choice([2, 3])
        n = rng.randint(d + 4, d + 7)
        x = random_complex(rng, n, d)
        faces = sorted(x.faces)
        if len(faces) < 2:
            continue
        f1, f2 = faces[0], faces[-1]
        s1, s2 = list(itertools.combinations(f1, d))[:2]
        s3, s4 = list(itertools.combinations(f2, d))[:2]
        inter = set(s1) & set(s2) & set(s3) & set(s4)
        stats = x.four_tuple_stats(s1, s2, s3, s4)
        assert 0 <= stats.z <= 2
        if len(inter) <= d - 3:
            assert stats.s == 0
        elif len(inter) == d - 2:
            assert stats.s <= 1

    # identical pairs: Z = 0 since self-adjacency is impossible
    x = Complex(6, 2, [(1, 2, 3), (1, 2, 4), (1, 3, 4)])
    st = x.four_tuple_stats((1, 2), (1, 3), (1, 2), (1, 3))
    assert st.z == 0
    with pytest.raises(ValueError):
        x.four_tuple_stats((1, 2), (3, 4), (1, 2), (1, 3))


def test_supp_d():
    assert FIG1.supp_d([]) == 0
    assert FIG1.supp_d([(1, 2)]) == 0
    edge = Complex(3, 1, [(1, 2)])
    assert edge.supp_d([(1,), (2,)]) == 1
    s = FIG1.neighbours((1, 2))
    assert FIG1.supp_d(s) == 3  # the three faces through (1,2) for d=2

    rng = random.Random(14)
    for _ in range(30):
        d = rng.choice([1, 2])
        n = rng.randint(d + 2, 8)
        x = random_complex(rng, n, d)
        pool = list(itertools.combinations(range(1, n + 1), d))
        pick = rng.sample(pool, min(len(pool), rng.randint(1, 6)))
        assert x.supp_d(pick) == brute_force_supp(x, pick)


def test_contains():
    assert FIG1.contains((1,))
    assert FIG1.contains((4, 5))  # complete skeleton
    assert FIG1.contains((1, 2, 3))
    assert not FIG1.contains((3, 4, 5))
    assert not FIG1.contains((1, 2, 3, 4))


def test_text_format_round_trip():
    x = sample_lm(LMParams.from_alpha(20, 2, 0.4, seed=3))
    text = x.to_text()
    assert Complex.from_text(text) == x
    # deterministic serialization
    assert text == x.to_text()
    # comments and blank lines ignored
    weird = "# comment\n\nLM 3 1\n1 2\n# more\n2 3\n"
    assert Complex.from_text(weird) == Complex(3, 1, [(1, 2), (2, 3)])
    with pytest.raises(ValueError):
        Complex.from_text("1 2\n")
    with pytest.raises(ValueError):
        Complex.from_text("LM 3 1\n1 x\n")
