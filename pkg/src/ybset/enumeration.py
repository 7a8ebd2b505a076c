"""Exhaustive generation of finite solutions up to isomorphism.

The main pipeline enumerates square-free involutive nondegenerate
solutions of a given order: candidates are assignments of one left
translation per element (each fixing its own element), the map being
determined by the left action.  A depth-first search assigns rows in
index order and prunes with conditions that every final solution must
satisfy (the left-action law, the cyclic conditions, involutivity),
evaluated on exactly the instances whose rows are all assigned.  Every
emitted table is fully re-verified afterwards, so the pruning cannot be
wrong, only slow.

A second, independent generator walks the raw space (all row
assignments, or all bijections of the pair set for general quadratic
sets) with no pruning; the test-suite compares the two.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import perms
from .core import QuadraticSet, check_ybe
from .errors import OrderTooLarge
from .perms import Perm

_PIPELINE_LIMIT = 7
_BRUTE_LIMIT = 3
_CANONICAL_LIMIT = 8


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


# -- the pruned DFS over left-action tables ------------------------------

def _row0_representatives(n: int) -> list[Perm]:
    """One least-lex conjugate per cycle type among rows fixing 0.

    Relabelling can always move the table's first row to such a
    representative, so restricting row 0 loses no isomorphism class
    while the final table set is deduplicated anyway.
    """
    reps = {}
    for p in perms.perms_fixing(n, 0):
        t = perms.cycle_type(p)
        if t not in reps:
            reps[t] = perms.min_conjugate_fixing(p, 0)
    return sorted(reps.values())


def _new_row_consistent(rows, invs, n: int) -> bool:
    """Check every condition instance completed by the newest row.

    rows/invs hold k+1 assigned left translations and their inverses.
    Instances: the left-action law L_x L_y = L_{x|>y} L_{x<|y} (l1 as a
    table identity), the cyclic conditions cl1/cl2, and involutivity of
    the induced map; each is evaluated exactly when the newest row is
    the largest row index it needs.
    """
    k = len(rows) - 1
    for x in range(k + 1):
        Lx = rows[x]
        LIx = invs[x]
        for y in range(k + 1):
            Ly = rows[y]
            z = Lx[y]
            t = invs[y][x]
            top = x if x > y else y
            # cl2: (x|>y) acting on x equals y acting on x
            if z <= k and max(top, z) == k and rows[z][x] != Ly[x]:
                return False
            # cl1: (x<|y)... the mirror with the inverse row
            u = LIx[y]
            if u <= k and max(top, u) == k and rows[u][x] != Ly[x]:
                return False
            # involutivity: r(z, t) must return (x, y)
            if z <= k and max(top, z) == k and rows[z][t] != x:
                return False
            if t <= k and max(top, t) == k and invs[t][z] != y:
                return False
            # l1 table identity, full-row comparison
            if z <= k and t <= k and max(top, z, t) == k:
                Lz = rows[z]
                Lt = rows[t]
                if any(Lx[Ly[w]] != Lz[Lt[w]] for w in range(n)):
                    return False
    return True


def _forced_values(rows, invs, k: int, n: int):
    """Values of row k pinned by already-assigned rows; None on clash.

    Sources (all consequences of the conditions in _new_row_consistent):
      row_k[y] = L_w[y]   where w = L_y[k] < k     (cl2 at (y, k))
      row_k[y] = L_u[y]   where u = inv(L_y)[k] < k (cl1 at (y, k))
      row_k[t] = x        where L_x[y] = k, t = inv(L_y)[x]  (involutivity)
      row_k[y] = L_x[y]   where inv(L_y)[x] = k              (involutivity)
    and two whole-row forcings from the left-action law when exactly one
    of the two product rows is row k.
    """
    forced = {k: k}

    def force(pos, val):
        if forced.get(pos, val) != val:
            return False
        forced[pos] = val
        return True

    full_rows = []
    for y in range(k):
        w = rows[y][k]
        if w < k and not force(y, rows[w][y]):
            return None, None
        u = invs[y][k]
        if u < k and not force(y, rows[u][y]):
            return None, None
    for x in range(k):
        Lx = rows[x]
        for y in range(k):
            z = Lx[y]
            t = invs[y][x]
            if z == k:
                if not force(t, x):
                    return None, None
                if t < k:
                    # L_x L_y = row_k L_t
                    full_rows.append(
                        tuple(Lx[rows[y][invs[t][w]]] for w in range(n))
                    )
            elif t == k:
                if not force(y, z):
                    return None, None
                if z < k:
                    # L_x L_y = L_z row_k
                    Lzi = invs[z]
                    full_rows.append(tuple(Lzi[Lx[rows[y][w]]] for w in range(n)))
    return forced, full_rows


def _dfs_square_free(n: int, restrict_row0: bool = True):
    """Yield left tables (tuples of rows) of square-free solution candidates.

    Every yielded table already passed the incremental pruning; callers
    still run the full verification.
    """
    if n == 0:
        return
    candidates_by_point = [perms.perms_fixing(n, k) for k in range(n)]
    first = _row0_representatives(n) if restrict_row0 else candidates_by_point[0]

    rows: list[Perm] = []
    invs: list[Perm] = []

    def rec():
        k = len(rows)
        if k == n:
            yield tuple(rows)
            return
        if k == 0:
            pool = first
        else:
            forced, full_rows = _forced_values(rows, invs, k, n)
            if forced is None:
                return
            if full_rows:
                head = full_rows[0]
                if any(r != head for r in full_rows[1:]):
                    return
                if head[k] != k or not perms.is_perm(head):
                    return
                if any(head[pos] != val for pos, val in forced.items()):
                    return
                pool = (head,)
            else:
                pool = candidates_by_point[k]
                if len(forced) > 1:
                    items = tuple(forced.items())
                    pool = [p for p in pool if all(p[pos] == val for pos, val in items)]
        for candidate in pool:
            rows.append(candidate)
            invs.append(perms.inverse(candidate))
            if _new_row_consistent(rows, invs, n):
                yield from rec()
            rows.pop()
            invs.pop()

    yield from rec()


def _verify_square_free_solution(table, n: int) -> QuadraticSet | None:
    qs = QuadraticSet.from_left_perms(_default_labels(n), dict(enumerate(table)))
    if not qs.is_involutive():
        return None
    if not qs.is_square_free():
        return None
    if not check_ybe(qs)[0]:
        return None
    assert qs.is_nondegenerate() and qs.is_bijective()
    return qs


def labeled_square_free_solutions(n: int, restrict_row0: bool = True):
    """All labelled square-free involutive nondegenerate solutions on n
    elements produced by the pruned search (row-0 restriction optional)."""
    for table in _dfs_square_free(n, restrict_row0=restrict_row0):
        qs = _verify_square_free_solution(table, n)
        if qs is not None:
            yield qs


def naive_square_free_solutions(n: int, allow_large: bool = False):
    """Independent oracle: every row assignment, full braid check, nothing
    shared with the pruned pipeline."""
    if n > 4 and not allow_large:
        raise OrderTooLarge(f"naive row sweep at n={n} (limit 4; pass allow_large)")
    pools = [perms.perms_fixing(n, x) for x in range(n)]
    for table in itertools.product(*pools):
        qs = QuadraticSet.from_left_perms(_default_labels(n), dict(enumerate(table)))
        if qs.is_involutive() and check_ybe(qs)[0]:
            yield qs


# -- general quadratic sets (pair-map backtracking) ------------------------

def enumerate_involutive_quadratic_sets(
    n: int,
    square_free: bool = True,
    nondegenerate: bool = True,
    allow_large: bool = False,
):
    """All labelled involutive quadratic sets with bijective r, by
    backtracking over the pairing of the pair set.

    r is an involution of X x X; choosing images pair by pair while
    keeping every partial left row and right row injective prunes the
    space enough for n <= 4 exhaustion.
    """
    if n > 4 and not allow_large:
        raise OrderTooLarge(f"involution sweep at n={n} (limit 4; pass allow_large)")
    pairs = [(x, y) for x in range(n) for y in range(n)]
    labels = _default_labels(n)

    left = [[None] * n for _ in range(n)]
    right = [[None] * n for _ in range(n)]

    def row_ok(x):
        # left row x stays completable to a bijection
        vals = [v for v in left[x] if v is not None]
        return len(vals) == len(set(vals))

    def col_ok(y):
        vals = [v for v in right[y] if v is not None]
        return len(vals) == len(set(vals))

    def assign(x, y, z, t):
        left[x][y] = z
        right[y][x] = t

    def unassign(x, y):
        left[x][y] = None
        right[y][x] = None

    def rec(i):
        while i < len(pairs) and left[pairs[i][0]][pairs[i][1]] is not None:
            i += 1
        if i == len(pairs):
            qs = QuadraticSet.from_map(
                labels,
                [
                    (x, y, left[x][y], right[y][x])
                    for x in range(n)
                    for y in range(n)
                ],
            )
            if nondegenerate and not qs.is_nondegenerate():
                return
            assert qs.is_involutive() and qs.is_bijective()
            yield qs
            return
        x, y = pairs[i]
        if square_free and x == y:
            assign(x, y, x, y)
            if (not nondegenerate or (row_ok(x) and col_ok(y))):
                yield from rec(i + 1)
            unassign(x, y)
            return
        for z in range(n):
            for t in range(n):
                if (z, t) == (x, y):
                    # fixed pair of the involution (always legal)
                    assign(x, y, z, t)
                    if (not nondegenerate or (row_ok(x) and col_ok(y))):
                        yield from rec(i + 1)
                    unassign(x, y)
                    continue
                if left[z][t] is not None:
                    continue
                if square_free and z == t:
                    # a square-free involution cannot move a pair onto the
                    # diagonal: the diagonal is pointwise fixed
                    continue
                assign(x, y, z, t)
                assign(z, t, x, y)
                ok = True
                if nondegenerate:
                    ok = row_ok(x) and col_ok(y) and row_ok(z) and col_ok(t)
                if ok:
                    yield from rec(i + 1)
                unassign(x, y)
                unassign(z, t)

    yield from rec(0)


def enumerate_bijective_quadratic_sets(n: int, allow_large: bool = False):
    """Every quadratic set of order n (all bijections of the pair set)."""
    if n > _BRUTE_LIMIT and not allow_large:
        raise OrderTooLarge(f"full pair-space sweep at n={n} (limit {_BRUTE_LIMIT})")
    pairs = [(x, y) for x in range(n) for y in range(n)]
    labels = _default_labels(n)
    for images in itertools.permutations(pairs):
        quads = [(x, y, z, t) for (x, y), (z, t) in zip(pairs, images)]
        yield QuadraticSet.from_map(labels, quads)


# -- isomorphism machinery -------------------------------------------------

def find_isomorphism(src: QuadraticSet, dst: QuadraticSet):
    """A bijection intertwining the two maps, or None.

    Same backtracking as the automorphism search, pointed at two sets.
    """
    if src.n != dst.n:
        return None
    from .groups import _row_invariant, is_automorphism

    n = src.n
    inv_src = [_row_invariant(src, x) for x in range(n)]
    inv_dst = [_row_invariant(dst, x) for x in range(n)]
    if sorted(inv_src) != sorted(inv_dst):
        return None
    candidates = [
        tuple(y for y in range(n) if inv_dst[y] == inv_src[x]) for x in range(n)
    ]
    tau = [-1] * n
    used = [False] * n

    def propagate(seeds):
        added = []
        queue = list(seeds)
        while queue:
            x = queue.pop()
            for y in range(n):
                if tau[y] < 0:
                    continue
                for u, v in ((x, y), (y, x)):
                    for s, img in zip(src.r(u, v), dst.r(tau[u], tau[v])):
                        if tau[s] < 0:
                            if used[img] or inv_src[s] != inv_dst[img]:
                                for a in added:
                                    used[tau[a]] = False
                                    tau[a] = -1
                                return None
                            tau[s] = img
                            used[img] = True
                            added.append(s)
                            queue.append(s)
                        elif tau[s] != img:
                            for a in added:
                                used[tau[a]] = False
                                tau[a] = -1
                            return None
        return added

    def search():
        try:
            x = tau.index(-1)
        except ValueError:
            return tuple(tau)
        for y in candidates[x]:
            if used[y]:
                continue
            tau[x] = y
            used[y] = True
            added = propagate([x])
            if added is not None:
                hit = search()
                if hit is not None:
                    return hit
                for a in added:
                    used[tau[a]] = False
                    tau[a] = -1
            tau[x] = -1
            used[y] = False
        return None

    hit = search()
    if hit is not None:
        # final paranoia: verify the intertwining directly
        assert all(
            dst.r(hit[x], hit[y]) == tuple(hit[v] for v in src.r(x, y))
            for x in range(n)
            for y in range(n)
        )
    return hit


def _invariant_key(qs: QuadraticSet):
    row_types = sorted(perms.cycle_type(r) if perms.is_perm(r) else (0,) for r in qs.left)
    distinct_rows = len(set(qs.left))
    # component size profile over nontrivial left edges (cheap union-find)
    parent = list(range(qs.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a in range(qs.n):
        for x in range(qs.n):
            y = qs.left[a][x]
            if y != x:
                parent[find(x)] = find(y)
    from collections import Counter

    sizes = tuple(sorted(Counter(find(v) for v in range(qs.n)).values(), reverse=True))
    return (qs.n, tuple(row_types), distinct_rows, sizes)


def dedupe_isomorphism(solutions):
    """One representative per isomorphism class, invariant-bucketed."""
    buckets: dict = {}
    out = []
    for qs in solutions:
        key = _invariant_key(qs)
        bucket = buckets.setdefault(key, [])
        if any(find_isomorphism(rep, qs) is not None for rep in bucket):
            continue
        bucket.append(qs)
        out.append(qs)
    return out


# -- canonical forms -------------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Least relabelling of the concatenated (left, right) tables."""

    n: int
    left: tuple[Perm, ...]
    right: tuple[Perm, ...]

    def as_quadratic_set(self) -> QuadraticSet:
        return QuadraticSet(_default_labels(self.n), self.left, self.right)

    def digest(self) -> str:
        import hashlib

        payload = repr((self.left, self.right)).encode()
        return hashlib.sha256(payload).hexdigest()[:12]


def canonical_form(qs: QuadraticSet) -> CanonicalForm:
    """Minimize the flattened (left ‖ right) table over all relabellings.

    Straight minimum over the n! relabellings, but each candidate is
    compared cell by cell in flattening order and abandoned at the first
    cell that already exceeds the best table, which keeps the sweep cheap
    at the guarded sizes.
    """
    n = qs.n
    if n > _CANONICAL_LIMIT:
        raise OrderTooLarge(f"canonical form at n={n} (limit {_CANONICAL_LIMIT})")
    left, right = qs.left, qs.right
    best: list[int] | None = None
    best_pi = None
    cells = [(x, y) for x in range(n) for y in range(n)]
    for inv in itertools.permutations(range(n)):
        # inv[i] = original element placed at position i
        pos = [0] * n
        for i, x in enumerate(inv):
            pos[x] = i
        flat: list[int] = []
        worse = False
        for table in (left, right):
            for i, j in cells:
                v = pos[table[inv[i]][inv[j]]]
                if best is not None:
                    b = best[len(flat)]
                    if v > b:
                        worse = True
                        break
                    if v < b:
                        best = None  # candidate is strictly better; stop comparing
                flat.append(v)
            if worse:
                break
        if not worse:
            best = flat
            best_pi = tuple(pos)
    assert best is not None and best_pi is not None
    relabeled = qs.relabel(best_pi)
    return CanonicalForm(
        n=n,
        left=relabeled.left,
        right=relabeled.right,
    )


def relabel_randomly(qs: QuadraticSet, rng) -> QuadraticSet:
    pi = list(range(qs.n))
    rng.shuffle(pi)
    return qs.relabel(tuple(pi))


# -- the public filtered enumeration ---------------------------------------

_REQUIRABLE = {"square_free", "involutive", "nondegenerate", "ybe", "lri"}


@dataclass(frozen=True)
class EnumFilter:
    order: int
    require: frozenset = frozenset()
    mpl: int | None = None
    abelian_image: bool | None = None
    component_count: int | None = None
    first_type_only: bool = False
    allow_large: bool = False

    def __post_init__(self):
        unknown = set(self.require) - _REQUIRABLE
        if unknown:
            raise ValueError(f"unknown require flags: {sorted(unknown)}")


def _passes_predicates(qs: QuadraticSet, filt: EnumFilter) -> bool:
    from . import graphs as graphs_mod
    from . import retract as retract_mod
    from .groups import image_group

    if filt.mpl is not None:
        if retract_mod.mpl(qs) != filt.mpl:
            return False
    if filt.abelian_image is not None:
        if image_group(qs).is_abelian() != filt.abelian_image:
            return False
    if filt.component_count is not None or filt.first_type_only:
        graph = graphs_mod.build_graph(qs)
        if filt.component_count is not None and len(graph.components) != filt.component_count:
            return False
        if filt.first_type_only:
            for comp in graph.components:
                if comp.is_nontrivial and not graphs_mod.analyze_component(qs, comp).is_first_type:
                    return False
    return True


def enumerate_solutions(filt: EnumFilter):
    """Representatives of the isomorphism classes matching the filter.

    With square_free+involutive+nondegenerate required the pruned
    left-action pipeline runs (braid relation always enforced: these are
    solutions); otherwise the full pair-space sweep handles tiny orders.
    """
    n = filt.order
    fast = {"square_free", "involutive", "nondegenerate"} <= set(filt.require)
    if fast:
        if n > _PIPELINE_LIMIT and not filt.allow_large:
            raise OrderTooLarge(
                f"square-free pipeline at n={n} (limit {_PIPELINE_LIMIT}; set allow_large)"
            )
        population = labeled_square_free_solutions(n)
    else:
        population = (
            qs
            for qs in enumerate_bijective_quadratic_sets(n, allow_large=filt.allow_large)
            if _passes_require(qs, filt.require)
        )
    for qs in dedupe_isomorphism(population):
        if _passes_predicates(qs, filt):
            yield qs


def _passes_require(qs: QuadraticSet, require) -> bool:
    checks = {
        "square_free": qs.is_square_free,
        "involutive": qs.is_involutive,
        "nondegenerate": qs.is_nondegenerate,
        "ybe": lambda: check_ybe(qs)[0],
        "lri": qs.satisfies_lri,
    }
    return all(checks[flag]() for flag in require)


def census(max_order: int, allow_large: bool = False) -> dict[int, list[QuadraticSet]]:
    """Square-free involutive nondegenerate solution classes per order."""
    filt_flags = frozenset({"square_free", "involutive", "nondegenerate", "ybe"})
    return {
        n: list(
            enumerate_solutions(
                EnumFilter(order=n, require=filt_flags, allow_large=allow_large)
            )
        )
        for n in range(1, max_order + 1)
    }


# -- classification record --------------------------------------------------

def classify(qs: QuadraticSet) -> dict:
    """Structural record of a square-free nondegenerate symmetric set."""
    from . import graphs as graphs_mod
    from . import retract as retract_mod
    from .extensions import check_stu
    from .core import restrict
    from .groups import fingerprint, image_group, is_automorphism

    from .errors import NotSquareFree, NotSymmetricSet

    if not (qs.is_nondegenerate() and qs.is_involutive() and check_ybe(qs)[0]):
        raise NotSymmetricSet("classify needs a nondegenerate symmetric set")
    if not qs.is_square_free():
        raise NotSquareFree("classify needs a square-free input")
    level = retract_mod.mpl(qs)
    group = image_group(qs)
    g_in_aut = all(is_automorphism(row, qs) for row in set(qs.left))
    graph = graphs_mod.build_graph(qs)
    comps = []
    for comp in graph.components:
        analysis = graphs_mod.analyze_component(qs, comp)
        comps.append(
            {
                "vertices": tuple(qs.labels[v] for v in comp.vertices),
                "size": len(comp.vertices),
                "first_type": analysis.is_first_type,
                "basis": analysis.basis_labels(qs) if analysis.basis else None,
            }
        )
    record = {
        "order": qs.n,
        "mpl": level,
        "image_group": fingerprint(group),
        "image_group_in_aut": g_in_aut,
        "components": comps,
    }
    if level == 2:
        record["natural_decomposition"] = _mpl2_decomposition(qs, graph)
    if level == 3:
        record["pairwise_unions"] = _mpl3_pairwise(qs, graph)
    return record


def _mpl2_decomposition(qs, graph) -> dict:
    """Level-2 splitting: components are trivial parts and every component
    pairs with every other (and with the rest) as a strong twisted union."""
    from .core import restrict
    from .extensions import check_stu

    parts = [comp.vertices for comp in graph.components]
    pairwise = True
    for a, b in itertools.combinations(parts, 2):
        sub = restrict(qs, a + b)
        apos = tuple(range(len(a)))
        bpos = tuple(range(len(a), len(a) + len(b)))
        if not check_stu(sub, apos, bpos)[0]:
            pairwise = False
    one_vs_rest = True
    if len(parts) > 1:
        for i, part in enumerate(parts):
            rest = tuple(v for j, p in enumerate(parts) if j != i for v in p)
            merged = tuple(sorted(part + rest))
            sub = restrict(qs, merged)
            ppos = tuple(merged.index(v) for v in part)
            rpos = tuple(merged.index(v) for v in rest)
            if not check_stu(sub, ppos, rpos)[0]:
                one_vs_rest = False
    return {
        "parts": [tuple(qs.labels[v] for v in p) for p in parts],
        "parts_trivial": all(restrict(qs, p).is_trivial() for p in parts),
        "pairwise_stu": pairwise,
        "one_vs_rest_stu": one_vs_rest,
    }


def _mpl3_pairwise(qs, graph) -> dict:
    from .core import restrict
    from .extensions import check_stu
    from . import retract as retract_mod

    parts = [comp.vertices for comp in graph.components]
    level_bound = all(
        (retract_mod.mpl(restrict(qs, p)) or 0) <= 2 for p in parts
    )
    pairwise = True
    for a, b in itertools.combinations(parts, 2):
        sub = restrict(qs, a + b)
        apos = tuple(range(len(a)))
        bpos = tuple(range(len(a), len(a) + len(b)))
        if not check_stu(sub, apos, bpos)[0]:
            pairwise = False
    return {"component_mpl_le_2": level_bound, "pairwise_stu": pairwise}
