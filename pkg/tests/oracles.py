"""Independent reference implementations used as test oracles.

Everything here is deliberately brute force and shares no code with the
library paths it checks: determinants by fraction Gaussian elimination,
isomorphism by permutation search, colorings/matchings/covers by direct
subset enumeration, class counts by the orbit-counting formula.
"""

from fractions import Fraction
from itertools import combinations, permutations, product

from grpoly.graphs import Graph, connected_components, graph
from grpoly.polynomials import IntPoly


def det_fractions(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by plain Gaussian elimination over Fraction."""
    n = len(rows)
    m = [list(map(Fraction, row)) for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] * inv
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def _polymul_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def char_poly_oracle(entries) -> IntPoly:
    """det(tI - M) at t = 0..n, interpolated exactly (Lagrange over Q)."""
    n = len(entries)
    xs = [Fraction(t) for t in range(n + 1)]
    ys = [det_fractions([[(x if i == j else Fraction(0)) - entries[i][j]
                          for j in range(n)] for i in range(n)])
          for x in xs]
    coeffs = [Fraction(0)] * (n + 1)
    for i in range(n + 1):
        num = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n + 1):
            if j == i:
                continue
            num = _polymul_q(num, [-xs[j], Fraction(1)])
            denom *= xs[i] - xs[j]
        for d, c in enumerate(num):
            coeffs[d] += ys[i] * c / denom
    assert all(c.denominator == 1 for c in coeffs)
    return IntPoly(tuple(int(c) for c in coeffs))


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    bedges = b.edges
    for perm in permutations(range(a.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in bedges
               for u, v in a.edges) :
            return True
    return False


def labeled_class_count(n: int) -> int:
    """Isomorphism classes by labeled exhaustion with orbit-minimum dedup."""
    pairs = list(combinations(range(n), 2))
    nbits = len(pairs)
    index = {p: i for i, p in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append(tuple(
            index[(min(perm[u], perm[v]), max(perm[u], perm[v]))]
            for u, v in pairs))
    count = 0
    for mask in range(1 << nbits):
        is_rep = True
        for pm in perm_maps:
            image = 0
            rest = mask
            while rest:
                low = rest & -rest
                image |= 1 << pm[low.bit_length() - 1]
                rest ^= low
            if image < mask:
                is_rep = False
                break
        if is_rep:
            count += 1
    return count


def orbit_counting_classes(n: int) -> int:
    """Number of graph classes by averaging 2^(pair cycles) over all perms."""
    total = 0
    nperms = 0
    for perm in permutations(range(n)):
        nperms += 1
        seen = set()
        cycles = 0
        for pair in combinations(range(n), 2):
            if pair in seen:
                continue
            cycles += 1
            u, v = pair
            while True:
                seen.add((u, v))
                u, v = perm[u], perm[v]
                u, v = min(u, v), max(u, v)
                if (u, v) == pair:
                    break
        total += 1 << cycles
    assert total % nperms == 0
    return total // nperms


def proper_coloring_count(g: Graph, t: int) -> int:
    if t == 0:
        return 1 if g.n == 0 else 0
    count = 0
    for assignment in product(range(t), repeat=g.n):
        if all(assignment[u] != assignment[v] for u, v in g.edges):
            count += 1
    return count


def matching_counts_brute(g: Graph) -> tuple[int, ...]:
    edges = g.sorted_edges()
    counts = [0] * (len(edges) + 1)
    for r in range(len(edges) + 1):
        for sub in combinations(edges, r):
            vertices = [v for e in sub for v in e]
            if len(vertices) == len(set(vertices)):
                counts[r] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def edge_cover_counts_brute(g: Graph) -> tuple[int, ...]:
    edges = g.sorted_edges()
    counts = [0] * (len(edges) + 1)
    everything = set(range(g.n))
    for r in range(len(edges) + 1):
        for sub in combinations(edges, r):
            if {v for e in sub for v in e} == everything:
                counts[r] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def spanning_tree_count_brute(g: Graph) -> int:
    if g.n == 1:
        return 1
    count = 0
    for sub in combinations(g.sorted_edges(), g.n - 1):
        h = graph(g.n, sub)
        if len(connected_components(h)) == 1:
            count += 1
    return count


def tutte_eval_oracle(g: Graph, x: int, y: int) -> int:
    """Rank-nullity subgraph expansion evaluated at integers."""
    edges = g.sorted_edges()
    n = g.n
    r_e = n - len(connected_components(g))
    total = 0
    for r in range(len(edges) + 1):
        for sub in combinations(edges, r):
            k_sub = len(connected_components(graph(n, sub)))
            r_sub = n - k_sub
            total += (x - 1) ** (r_e - r_sub) * (y - 1) ** (r - r_sub)
    return total


def prufer_decode_reference(code, n):
    """Naive quadratic Prüfer decoder (smallest-leaf scan each round)."""
    deg = [1] * n
    for x in code:
        deg[x] += 1
    edges = []
    used = [False] * n
    for x in code:
        leaf = min(v for v in range(n) if deg[v] == 1 and not used[v])
        edges.append((min(leaf, x), max(leaf, x)))
        used[leaf] = True
        deg[x] -= 1
    last = [v for v in range(n) if not used[v] and deg[v] == 1]
    edges.append((min(last), max(last)))
    return sorted(edges)
