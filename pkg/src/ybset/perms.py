"""Permutations of {0..n-1} as image tuples.

A permutation p is a tuple with p[i] = image of i.  Tuples are hashable,
cheap to compare and compose, which is what the closure and search code
needs; everything here is a plain function over them.
"""
from __future__ import annotations

import itertools

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_perm(row) -> bool:
    n = len(row)
    seen = [False] * n
    for v in row:
        if not 0 <= v < n or seen[v]:
            return False
        seen[v] = True
    return True


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: compose(p, q)[i] = p[q[i]]."""
    return tuple(p[v] for v in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def conjugate(s: Perm, p: Perm) -> Perm:
    """s * p * s^-1."""
    return compose(compose(s, p), inverse(s))


def from_cycles(n: int, cycles) -> Perm:
    images = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:]):
            images[a] = b
        images[cyc[-1]] = cyc[0]
    perm = tuple(images)
    if not is_perm(perm):
        raise ValueError(f"cycles {cycles!r} do not define a permutation")
    return perm


def cycles(p: Perm, include_fixed: bool = False) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its least element, sorted by it."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        v = p[start]
        while v != start:
            cyc.append(v)
            seen[v] = True
            v = p[v]
        if len(cyc) > 1 or include_fixed:
            out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    """Sorted multiset of all cycle lengths (fixed points included)."""
    return tuple(sorted(len(c) for c in cycles(p, include_fixed=True)))


def order(p: Perm) -> int:
    import math

    o = 1
    for c in cycles(p, include_fixed=True):
        o = math.lcm(o, len(c))
    return o


def cycle_string(p: Perm, labels=None) -> str:
    """Disjoint-cycle notation, fixed points omitted, e.g. "(x1 x2)(x3 x4)"."""
    cycs = cycles(p)
    if not cycs:
        return "()"
    if labels is None:
        labels = [str(i) for i in range(len(p))]
    return "".join("(" + " ".join(labels[i] for i in c) + ")" for c in cycs)


def all_perms(n: int):
    return itertools.permutations(range(n))


def perms_fixing(n: int, point: int) -> list[Perm]:
    """All permutations of {0..n-1} with p[point] = point."""
    rest = [i for i in range(n) if i != point]
    out = []
    for images in itertools.permutations(rest):
        row = [0] * n
        row[point] = point
        for slot, img in zip(rest, images):
            row[slot] = img
        out.append(tuple(row))
    return out


def min_conjugate_fixing(p: Perm, point: int) -> Perm:
    """Lexicographically least s*p*s^-1 over all s with s[point] = point.

    Used to pick one first-row representative per cycle type during
    enumeration: the candidates are exactly the permutations fixing `point`
    with the cycle type of p.
    """
    best = None
    for s in perms_fixing(len(p), point):
        q = conjugate(s, p)
        if best is None or q < best:
            best = q
    return best
