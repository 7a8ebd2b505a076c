"""Permutation groups attached to a quadratic set.

Groups are materialized in full (generators -> breadth-first closure),
which is the honest thing to do at desk scale (degree <= 12, order up to
~1e5); there is deliberately no Schreier-Sims machinery here.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from . import perms
from .core import QuadraticSet, restrict
from .errors import DegreeMismatch, NotAnAction, NotInvariant
from .perms import Perm


class PermGroup:
    """A finitely generated subgroup of Sym({0..degree-1}), fully closed."""

    __slots__ = ("degree", "generators", "elements")

    def __init__(self, degree: int, generators, elements):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = frozenset(elements)

    @classmethod
    def from_generators(cls, degree: int, generators) -> "PermGroup":
        gens = []
        for g in generators:
            g = tuple(g)
            if len(g) != degree or not perms.is_perm(g):
                raise DegreeMismatch(f"generator {g!r} is not a permutation of degree {degree}")
            if g not in gens:
                gens.append(g)
        return cls(degree, gens, close(gens, degree))

    @classmethod
    def from_elements(cls, degree: int, elements) -> "PermGroup":
        """Wrap an element set, extracting a small generating set greedily."""
        elements = sorted(set(tuple(e) for e in elements))
        gens: list[Perm] = []
        have = {perms.identity(degree)}
        for e in elements:
            if e not in have:
                gens.append(e)
                have = close(gens, degree)
        assert have == set(elements), "element set is not closed"
        return cls(degree, gens, have)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return tuple(p) in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self):
        return len(self.elements)

    def is_abelian(self) -> bool:
        return all(
            perms.compose(a, b) == perms.compose(b, a)
            for a, b in itertools.combinations(self.generators, 2)
        )

    def exponent(self) -> int:
        import math

        e = 1
        for p in self.elements:
            e = math.lcm(e, perms.order(p))
        return e

    def center_size(self) -> int:
        return sum(
            1
            for p in self.elements
            if all(perms.compose(p, g) == perms.compose(g, p) for g in self.generators)
        )

    def orbits(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = {start}
            frontier = [start]
            while frontier:
                v = frontier.pop()
                for g in self.generators:
                    w = g[v]
                    if w not in orbit:
                        orbit.add(w)
                        frontier.append(w)
            for v in orbit:
                seen[v] = True
            out.append(tuple(sorted(orbit)))
        return out


def close(generators, degree: int) -> set[Perm]:
    """Breadth-first product closure of a generator list."""
    gens = [tuple(g) for g in generators]
    els = {perms.identity(degree)}
    els.update(gens)
    frontier = list(els)
    while frontier:
        new = []
        for a in gens:
            for b in frontier:
                c = perms.compose(a, b)
                if c not in els:
                    els.add(c)
                    new.append(c)
        frontier = new
    return els


@dataclass(frozen=True)
class GroupFingerprint:
    """Cheap isomorphism-type certificate: necessary, not sufficient.

    Order, abelianness, the element-order histogram and the centre size
    distinguish the groups this package ever needs to name (Klein four,
    D4, S4) from every other group of their orders.
    """

    order: int
    abelian: bool
    element_order_histogram: dict
    center_size: int


def fingerprint(group: PermGroup) -> GroupFingerprint:
    histogram = Counter(perms.order(p) for p in group.elements)
    return GroupFingerprint(
        order=group.order,
        abelian=group.is_abelian(),
        element_order_histogram=dict(sorted(histogram.items())),
        center_size=group.center_size(),
    )


# -- groups from a quadratic set ----------------------------------------

def image_group(qs: QuadraticSet) -> PermGroup:
    """Subgroup of Sym(X) generated by all left translations."""
    if not qs.is_nondegenerate():
        raise NotAnAction("left translations are not all bijective")
    from .core import _first_witness

    w = _first_witness(qs, "l1")
    if w is not None:
        raise NotAnAction(f"left action condition fails at {w}")
    return PermGroup.from_generators(qs.n, dict.fromkeys(qs.left))


def is_automorphism(tau, qs: QuadraticSet) -> bool:
    """Does tau intertwine r with itself on every pair?

    Under lri this is equivalent to conjugation sending each left
    translation to the translation of the image point; both routes are
    evaluated and cross-checked whenever lri holds.
    """
    tau = tuple(tau)
    if len(tau) != qs.n or not perms.is_perm(tau):
        return False
    direct = True
    for x in range(qs.n):
        for y in range(qs.n):
            z, t = qs.r(x, y)
            if qs.r(tau[x], tau[y]) != (tau[z], tau[t]):
                direct = False
                break
        if not direct:
            break
    if qs.is_nondegenerate() and qs.satisfies_lri():
        conj = all(
            perms.conjugate(tau, qs.left[x]) == qs.left[tau[x]] for x in range(qs.n)
        )
        assert conj == direct, "conjugation criterion disagrees with direct check"
    return direct


def automorphism_group_brute(qs: QuadraticSet) -> PermGroup:
    """Oracle: filter all of Sym(X).  Only sensible for small n."""
    found = [p for p in perms.all_perms(qs.n) if is_automorphism(p, qs)]
    return PermGroup.from_elements(qs.n, found)


def _row_invariant(qs, x):
    left = qs.left[x]
    right = qs.right[x]
    if perms.is_perm(left) and perms.is_perm(right):
        key = (perms.cycle_type(left), perms.cycle_type(right))
    else:
        key = (tuple(sorted(Counter(left).values())), tuple(sorted(Counter(right).values())))
    return (key, left[x] == x, right[x] == x)


def automorphism_group(qs: QuadraticSet) -> PermGroup:
    """All tau in Sym(X) with (tau x tau) . r = r . (tau x tau).

    Backtracking over partial maps in increasing index order.  Pruning:
    candidate images must share the row invariant (cycle type of both
    translations, own-fixed-point flag), and every fully assigned pair
    propagates the forced images of both components of r, which is the
    incremental form of the conjugation criterion when lri holds.
    """
    n = qs.n
    invariants = [_row_invariant(qs, x) for x in range(n)]
    candidates = [
        tuple(y for y in range(n) if invariants[y] == invariants[x]) for x in range(n)
    ]
    found: list[Perm] = []
    tau = [-1] * n
    used = [False] * n

    def propagate(assignments) -> list[int] | None:
        """Close the partial map under both components of r; None on clash."""
        added: list[int] = []
        queue = list(assignments)
        while queue:
            x = queue.pop()
            for y in range(n):
                if tau[y] < 0:
                    continue
                for u, v in ((x, y), (y, x)):
                    for src, img in zip(qs.r(u, v), qs.r(tau[u], tau[v])):
                        if tau[src] < 0:
                            if used[img] or invariants[src] != invariants[img]:
                                for a in added:
                                    used[tau[a]] = False
                                    tau[a] = -1
                                return None
                            tau[src] = img
                            used[img] = True
                            added.append(src)
                            queue.append(src)
                        elif tau[src] != img:
                            for a in added:
                                used[tau[a]] = False
                                tau[a] = -1
                            return None
        return added

    def search():
        try:
            x = tau.index(-1)
        except ValueError:
            found.append(tuple(tau))
            return
        for y in candidates[x]:
            if used[y]:
                continue
            tau[x] = y
            used[y] = True
            added = propagate([x])
            if added is not None:
                search()
                for a in added:
                    used[tau[a]] = False
                    tau[a] = -1
            tau[x] = -1
            used[y] = False

    search()
    result = [p for p in found if is_automorphism(p, qs)]
    assert len(result) == len(found), "backtracking emitted a non-automorphism"
    return PermGroup.from_elements(n, result)


def normalizer_membership(sigma, group: PermGroup) -> bool:
    """Does sigma conjugate every generator back into the group?"""
    sigma = tuple(sigma)
    if len(sigma) != group.degree or not perms.is_perm(sigma):
        raise DegreeMismatch("sigma must be a permutation of the group's degree")
    return all(perms.conjugate(sigma, g) in group.elements for g in group.generators)


def la_automorphism_criterion(qs_ambient: QuadraticSet, subset, alpha: int) -> bool:
    """Is the restriction of alpha's left translation an automorphism of the subset?

    Evaluates the pointwise criterion
        (alpha <| y) |> x == alpha |> x   for all x, y in the subset,
    cross-checked against a direct automorphism test of the restricted
    translation, and (for involutive ambients) against the equivalent
    form with (y |> alpha) in place of (alpha <| y).
    """
    from .core import check_ybe

    if not (
        qs_ambient.is_nondegenerate()
        and qs_ambient.satisfies_lri()
        and check_ybe(qs_ambient)[0]
    ):
        raise NotAnAction("ambient must be a nondegenerate solution with lri")
    sub = sorted(set(subset))
    inside = set(sub)
    sub_qs = restrict(qs_ambient, sub)  # raises NotInvariant if not closed
    L, R = qs_ambient.left, qs_ambient.right
    criterion = all(L[R[y][alpha]][x] == L[alpha][x] for x in sub for y in sub)
    restricted = []
    pos = {v: i for i, v in enumerate(sub)}
    for x in sub:
        img = L[alpha][x]
        if img not in inside:
            raise NotInvariant(
                f"left translation of {qs_ambient.labels[alpha]} does not preserve the subset",
                (alpha, x),
            )
        restricted.append(pos[img])
    direct = is_automorphism(tuple(restricted), sub_qs)
    assert direct == criterion, "pointwise criterion disagrees with direct automorphism test"
    if qs_ambient.is_involutive():
        alt = all(L[L[y][alpha]][x] == L[alpha][x] for x in sub for y in sub)
        assert alt == criterion, "involutive form of the criterion disagrees"
    return criterion
