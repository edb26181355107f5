"""Brute-force oracles, independent of the Smith normal form code path."""

import itertools
from fractions import Fraction


def matvec(rows, v):
    return tuple(sum(a * b for a, b in zip(r, v)) for r in rows)


def frac_rank(rows):
    """Rank over Q by fraction Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        p = 1
        for i in range(n):
            p *= rows[i][perm[i]]
        total += -p if inv % 2 else p
    return total


def nonzero_maximal_minor(rows):
    """Absolute value of some nonzero rows x rows minor, or 0."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if m == 0:
        return 1
    for cols in itertools.combinations(range(n), m):
        d = leibniz_det([[r[c] for c in cols] for r in rows])
        if d:
            return abs(d)
    return 0


def subgroup_mod(gens, modulus, dim):
    """Subgroup of (Z/modulus)^dim generated by ``gens``, by closure."""
    seen = {(0,) * dim}
    frontier = [(0,) * dim]
    gens = [tuple(g % modulus for g in v) for v in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % modulus for a, b in zip(x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


class TooBig(Exception):
    pass


def coker_order_bruteforce(rows, limit=40000):
    """|Z^m / A Z^n| when finite (A given by rows), else None.

    Raises TooBig when the search space (Z/N)^m exceeds ``limit``.
    """
    m = len(rows)
    if m == 0:
        return 1
    N = nonzero_maximal_minor(rows)
    if N == 0:
        return None
    if N ** m > limit:
        raise TooBig(N ** m)
    cols = [tuple(r[j] for r in rows) for j in range(len(rows[0]))]
    # N Z^m lies inside A Z^n, so count in (Z/N)^m.
    H = subgroup_mod(cols, N, m)
    return N ** m // len(H)


def coker_two_torsion_bruteforce(rows):
    """Number of elements x of a finite cokernel with 2x = 0."""
    m = len(rows)
    N = nonzero_maximal_minor(rows)
    cols = [tuple(r[j] for r in rows) for j in range(len(rows[0]))]
    H = subgroup_mod(cols, N, m)
    count = 0
    for x in itertools.product(range(N), repeat=m):
        if tuple((2 * a) % N for a in x) in H:
            count += 1
    return count // len(H)


def in_span_bruteforce(gens, v, bound):
    """Search for integer coefficients in [-bound, bound]."""
    for c in itertools.product(range(-bound, bound + 1), repeat=len(gens)):
        if all(sum(ci * g[k] for ci, g in zip(c, gens)) == v[k] for k in range(len(v))):
            return c
    return None


def bounded_span(gens, dim, bound):
    """All combinations of ``gens`` with coefficients in [-bound, bound]."""
    out = set()
    for c in itertools.product(range(-bound, bound + 1), repeat=len(gens)):
        out.add(tuple(sum(ci * g[k] for ci, g in zip(c, gens)) for k in range(dim)))
    return out


def brute_quotient(gens, dim, box=4, coeff_bound=32, max_order=4):
    """Describe (Z~ ∩ [-box, box]^dim) / span(gens) by direct enumeration.

    The ambient lattice is {x : x0 = x1 mod 2}.  Membership of a difference
    in span(gens) is decided by searching coefficients in
    [-coeff_bound, coeff_bound].  Returns ``(free_rank, torsion_orders)``:
    the free rank is ``rank(ambient) - rank_Q(gens)`` and ``torsion_orders``
    lists the orders of the distinct finite-order classes met in the box.
    """
    pts = [
        p
        for p in itertools.product(range(-box, box + 1), repeat=dim)
        if (p[0] - p[1]) % 2 == 0
    ]
    span = bounded_span(gens, dim, coeff_bound)

    def member(v):
        return v in span

    torsion_reps = []
    for p in pts:
        order = next(
            (k for k in range(1, max_order + 1) if member(tuple(k * a for a in p))), None
        )
        if order is None:
            continue
        if not any(member(tuple(a - b for a, b in zip(p, q))) for q, _ in torsion_reps):
            torsion_reps.append((p, order))
    free = dim - (frac_rank([list(g) for g in gens]) if gens else 0)
    return free, sorted(o for _, o in torsion_reps)


def determinantal_invariant_factors(rows):
    """Invariant factors from determinantal divisors: d_k = gcd of k x k minors."""
    from math import gcd

    m = len(rows)
    n = len(rows[0]) if rows else 0
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in itertools.combinations(range(m), k):
            for cs in itertools.combinations(range(n), k):
                g = gcd(g, leibniz_det([[rows[i][j] for j in cs] for i in rs]))
        if g == 0:
            break
        divisors.append(g)
    factors = [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]
    return factors + [0] * (min(m, n) - len(factors))
