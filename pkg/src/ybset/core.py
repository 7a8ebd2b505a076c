"""Finite quadratic sets (X, r) and their pointwise conditions.

A quadratic set is a finite set X = {0..n-1} with a map
r(x, y) = (x acting on y from the left, x acted on by y from the right),
stored as two n x n tables:

    left[x][y]  = value of x acting on y        (written  x |> y)
    right[y][x] = value of y acting on x        (written  x <| y)

so that r(x, y) = (left[x][y], right[y][x]).  Rows of `left` are the left
translations L_x: y -> x |> y and rows of `right` the right translations
R_y: x -> x <| y.  Nothing here assumes the rows are bijections; that is
exactly the `nondegenerate` flag of a PropertyReport.

All condition checkers are direct quantifier sweeps in lexicographic
element order; they are meant to be the trusted oracle for everything
built on top, so no algebraic shortcut is taken.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import perms
from .errors import DuplicateLabel, InvalidMap, NonBijectiveRow, NotInvariant
from .perms import Perm


class QuadraticSet:
    """Immutable pair of action tables over labelled elements."""

    __slots__ = ("n", "labels", "left", "right", "_hash")

    def __init__(self, labels, left, right):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            dup = sorted({l for l in labels if labels.count(l) > 1})
            raise DuplicateLabel(f"duplicate element label(s): {dup}")
        if any(not l for l in labels):
            raise DuplicateLabel("element labels must be nonempty")
        n = len(labels)
        left = tuple(tuple(row) for row in left)
        right = tuple(tuple(row) for row in right)
        if len(left) != n or len(right) != n or any(len(r) != n for r in left + right):
            raise InvalidMap("action tables must be n x n")
        for tbl in (left, right):
            for row in tbl:
                if any(not 0 <= v < n for v in row):
                    raise InvalidMap("table entry out of range")
        self.n = n
        self.labels = labels
        self.left = left
        self.right = right
        self._hash = hash((labels, left, right))

    # -- construction -------------------------------------------------

    @classmethod
    def from_left_action(cls, labels, rows) -> "QuadraticSet":
        """Build the set determined by its left action alone.

        `rows` maps a label to the full image list of its left translation,
        given as labels in element order; omitted labels get the identity.
        The right action is defined as the row-wise inverse, which makes
        the result nondegenerate and satisfy lri by construction.
        """
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise DuplicateLabel(f"duplicate element label(s) in {labels!r}")
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        left = [perms.identity(n)] * n
        for lab, images in rows.items():
            if lab not in index:
                raise InvalidMap(f"row for unknown label {lab!r}")
            row = tuple(index[img] for img in images)
            if len(row) != n or not perms.is_perm(row):
                raise NonBijectiveRow(f"left action row for {lab!r} is not a bijection")
            left[index[lab]] = row
        right = [perms.inverse(row) for row in left]
        return cls(labels, left, right)

    @classmethod
    def from_left_perms(cls, labels, rows) -> "QuadraticSet":
        """Same as from_left_action but rows are index-image tuples."""
        labels = tuple(labels)
        n = len(labels)
        left = [perms.identity(n)] * n
        for i, row in rows.items():
            row = tuple(row)
            if not perms.is_perm(row):
                raise NonBijectiveRow(f"left action row for {labels[i]!r} is not a bijection")
            left[i] = row
        right = [perms.inverse(row) for row in left]
        return cls(labels, left, right)

    @classmethod
    def from_map(cls, labels, quadruples) -> "QuadraticSet":
        """Build from explicit values r(x, y) = (z, t), one per ordered pair."""
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        n = len(labels)
        left = [[None] * n for _ in range(n)]
        right = [[None] * n for _ in range(n)]
        for x, y, z, t in quadruples:
            xi, yi, zi, ti = (index[v] if not isinstance(v, int) else v for v in (x, y, z, t))
            if left[xi][yi] is not None:
                raise InvalidMap(f"pair ({labels[xi]},{labels[yi]}) mapped twice")
            left[xi][yi] = zi
            right[yi][xi] = ti
        for xi in range(n):
            for yi in range(n):
                if left[xi][yi] is None:
                    raise InvalidMap(f"pair ({labels[xi]},{labels[yi]}) has no image")
        return cls(labels, left, right)

    # -- basic access -------------------------------------------------

    def r(self, x: int, y: int) -> tuple[int, int]:
        return (self.left[x][y], self.right[y][x])

    def left_row(self, x: int) -> Perm:
        return self.left[x]

    def right_row(self, y: int) -> Perm:
        return self.right[y]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown element label {label!r}") from None

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticSet)
            and self.labels == other.labels
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"QuadraticSet(n={self.n}, labels={self.labels!r})"

    # -- predicates used as preconditions everywhere -------------------

    def is_bijective(self) -> bool:
        return len({self.r(x, y) for x in range(self.n) for y in range(self.n)}) == self.n * self.n

    def is_nondegenerate(self) -> bool:
        return all(perms.is_perm(row) for row in self.left) and all(
            perms.is_perm(row) for row in self.right
        )

    def is_involutive(self) -> bool:
        for x in range(self.n):
            for y in range(self.n):
                if self.r(*self.r(x, y)) != (x, y):
                    return False
        return True

    def is_square_free(self) -> bool:
        return all(self.r(x, x) == (x, x) for x in range(self.n))

    def satisfies_lri(self) -> bool:
        return all(_lri_holds_at(self, x, y) for x in range(self.n) for y in range(self.n))

    def is_symmetric_set(self) -> bool:
        """Nondegenerate involutive solution (the setting of retractions)."""
        return self.is_nondegenerate() and self.is_involutive() and check_ybe(self)[0]

    def is_trivial(self) -> bool:
        return all(self.r(x, y) == (y, x) for x in range(self.n) for y in range(self.n))

    def relabel(self, pi: Perm) -> "QuadraticSet":
        """Transport the structure along x -> pi[x], keeping labels in place.

        The result has left[pi[x]][pi[y]] = pi[left[x][y]]; label strings stay
        attached to positions, not to transported elements, so relabelled
        sets compare by table only.
        """
        n = self.n
        left = [[0] * n for _ in range(n)]
        right = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                left[pi[x]][pi[y]] = pi[self.left[x][y]]
                right[pi[x]][pi[y]] = pi[self.right[x][y]]
        return QuadraticSet(self.labels, left, right)


# -- the condition catalogue -------------------------------------------
#
# Each checker takes (qs, x, y[, z]) and reports whether the defining
# equation holds at that point, so that a stored witness can be replayed.

def _l1_holds_at(qs, x, y, z):
    L, R = qs.left, qs.right
    return L[x][L[y][z]] == L[L[x][y]][L[R[y][x]][z]]


def _r1_holds_at(qs, x, y, z):
    L, R = qs.left, qs.right
    return R[z][R[y][x]] == R[R[z][y]][R[L[y][z]][x]]


def _lr3_holds_at(qs, x, y, z):
    L, R = qs.left, qs.right
    return R[L[R[y][x]][z]][L[x][y]] == L[R[L[y][z]][x]][R[z][y]]


def _l2_holds_at(qs, x, y, z):
    # r(x |> (y, z)) == x |> r(y, z), with x |> (y, z) = (x|>y, (x<|y)|>z)
    L, R = qs.left, qs.right
    a, b = L[x][y], L[R[y][x]][z]
    u, v = L[y][z], R[z][y]
    return qs.r(a, b) == (L[x][u], L[R[u][x]][v])


def _r2_holds_at(qs, x, y, z):
    L, R = qs.left, qs.right
    a, b = R[L[y][z]][x], R[z][y]
    u, v = L[x][y], R[y][x]
    return qs.r(a, b) == (R[L[v][z]][u], R[z][v])


def _cl1_holds_at(qs, x, y):
    L, R = qs.left, qs.right
    return L[R[x][y]][x] == L[y][x]


def _cl2_holds_at(qs, x, y):
    L, R = qs.left, qs.right
    return L[L[x][y]][x] == L[y][x]


def _cr1_holds_at(qs, x, y):
    L, R = qs.left, qs.right
    return R[L[x][y]][x] == R[y][x]


def _cr2_holds_at(qs, x, y):
    L, R = qs.left, qs.right
    return R[R[x][y]][x] == R[y][x]


def _lri_holds_at(qs, x, y):
    L, R = qs.left, qs.right
    return R[x][L[x][y]] == y and L[x][R[x][y]] == y


def _csl_holds_at(qs, x, y, t):
    L = qs.left
    return L[L[y][t]][L[y][x]] == L[L[t][y]][L[t][x]]


def _csr_holds_at(qs, x, y, t):
    # right-hand mirror of csl over the right translations
    R = qs.right
    return R[R[y][t]][R[y][x]] == R[R[t][y]][R[t][x]]


def _involutive_holds_at(qs, x, y):
    return qs.r(*qs.r(x, y)) == (x, y)


def _square_free_holds_at(qs, x):
    return qs.r(x, x) == (x, x)


def _braid_holds_at(qs, x, y, z):
    def r12(p):
        return (*qs.r(p[0], p[1]), p[2])

    def r23(p):
        return (p[0], *qs.r(p[1], p[2]))

    p = (x, y, z)
    return r12(r23(r12(p))) == r23(r12(r23(p)))


#: Replayable condition equations, flag name -> (arity, pointwise checker).
CONDITION_CHECKS = {
    "ybe": (3, _braid_holds_at),
    "l1": (3, _l1_holds_at),
    "r1": (3, _r1_holds_at),
    "lr3": (3, _lr3_holds_at),
    "l2": (3, _l2_holds_at),
    "r2": (3, _r2_holds_at),
    "cl1": (2, _cl1_holds_at),
    "cl2": (2, _cl2_holds_at),
    "cr1": (2, _cr1_holds_at),
    "cr2": (2, _cr2_holds_at),
    "lri": (2, _lri_holds_at),
    "csl": (3, _csl_holds_at),
    "csr": (3, _csr_holds_at),
    "involutive": (2, _involutive_holds_at),
    "square_free": (1, _square_free_holds_at),
}

PROPERTY_FLAGS = (
    "bijective_r",
    "nondegenerate",
    "involutive",
    "square_free",
    "ybe",
    "l1",
    "r1",
    "lr3",
    "l2",
    "r2",
    "lri",
    "cl1",
    "cl2",
    "cr1",
    "cr2",
    "csl",
    "csr",
)


@dataclass(frozen=True)
class PropertyReport:
    """All condition flags of one quadratic set, with falsifying witnesses.

    `witnesses` maps each False flag to the first element tuple (in
    lexicographic index order) at which its defining equation fails;
    replaying that tuple through CONDITION_CHECKS re-falsifies the flag.
    """

    flags: dict
    witnesses: dict

    def __getattr__(self, name):
        flags = object.__getattribute__(self, "flags")
        try:
            return flags[name]
        except KeyError:
            raise AttributeError(name) from None

    def failed(self) -> list[str]:
        return [f for f in PROPERTY_FLAGS if not self.flags[f]]


def _first_witness(qs, name) -> tuple | None:
    arity, check = CONDITION_CHECKS[name]
    idx = range(qs.n)
    if arity == 1:
        points = ((x,) for x in idx)
    elif arity == 2:
        points = ((x, y) for x in idx for y in idx)
    else:
        points = ((x, y, z) for x in idx for y in idx for z in idx)
    for pt in points:
        if not check(qs, *pt):
            return pt
    return None


def check_ybe(qs) -> tuple[bool, tuple | None]:
    """Braid relation over all triples; first failing triple as witness."""
    w = _first_witness(qs, "ybe")
    return (w is None, w)


def check_conditions(qs) -> PropertyReport:
    flags = {}
    witnesses = {}
    flags["bijective_r"] = qs.is_bijective()
    if not flags["bijective_r"]:
        seen = {}
        for x in range(qs.n):
            for y in range(qs.n):
                img = qs.r(x, y)
                if img in seen:
                    witnesses["bijective_r"] = (seen[img], (x, y))
                    break
                seen[img] = (x, y)
            if "bijective_r" in witnesses:
                break
    flags["nondegenerate"] = True
    for x in range(qs.n):
        if not perms.is_perm(qs.left[x]):
            flags["nondegenerate"] = False
            witnesses.setdefault("nondegenerate", ("left", x))
            break
        if not perms.is_perm(qs.right[x]):
            flags["nondegenerate"] = False
            witnesses.setdefault("nondegenerate", ("right", x))
            break
    for name in PROPERTY_FLAGS:
        if name in ("bijective_r", "nondegenerate"):
            continue
        w = _first_witness(qs, name)
        flags[name] = w is None
        if w is not None:
            witnesses[name] = w
    return PropertyReport(flags=flags, witnesses=witnesses)


def replay_witness(qs, flag: str, witness: tuple) -> bool:
    """Re-evaluate the defining equation of `flag` at a stored witness."""
    arity, check = CONDITION_CHECKS[flag]
    assert len(witness) == arity
    return check(qs, *witness)


# -- relations, restriction, homomorphisms ------------------------------

@dataclass(frozen=True)
class Relation:
    """One defining relation x*y = z*t coming from r(x, y) = (z, t)."""

    lhs: tuple[int, int]
    rhs: tuple[int, int]
    trivial: bool

    def render(self, labels) -> str:
        x, y = self.lhs
        z, t = self.rhs
        return f"{labels[x]}*{labels[y]} = {labels[z]}*{labels[t]}"


def relations(qs) -> list[Relation]:
    """One relation per orbit {(x,y), r(x,y)} of pairs, in lex order."""
    seen = set()
    out = []
    for x in range(qs.n):
        for y in range(qs.n):
            if (x, y) in seen:
                continue
            image = qs.r(x, y)
            seen.add((x, y))
            seen.add(image)
            out.append(Relation(lhs=(x, y), rhs=image, trivial=image == (x, y)))
    return out


def restrict(qs, subset) -> QuadraticSet:
    """Restriction of r to an r-invariant subset, elements reindexed."""
    sub = sorted(set(subset))
    if not sub:
        raise NotInvariant("subset must be nonempty")
    pos = {v: i for i, v in enumerate(sub)}
    inside = set(sub)
    n = len(sub)
    left = [[0] * n for _ in range(n)]
    right = [[0] * n for _ in range(n)]
    for x in sub:
        for y in sub:
            z, t = qs.r(x, y)
            if z not in inside or t not in inside:
                raise NotInvariant(
                    f"r({qs.labels[x]},{qs.labels[y]}) = "
                    f"({qs.labels[z]},{qs.labels[t]}) escapes the subset",
                    (x, y),
                )
            left[pos[x]][pos[y]] = pos[z]
            right[pos[y]][pos[x]] = pos[t]
    return QuadraticSet(tuple(qs.labels[v] for v in sub), left, right)


def invariant_subsets(qs) -> list[tuple[int, ...]]:
    """All nonempty proper r-invariant subsets (desk-scale sweep)."""
    import itertools

    out = []
    for k in range(1, qs.n):
        for sub in itertools.combinations(range(qs.n), k):
            inside = set(sub)
            if all(
                qs.left[x][y] in inside and qs.right[y][x] in inside
                for x in sub
                for y in sub
            ):
                out.append(sub)
    return out


def is_homomorphism(phi, src, dst) -> bool:
    """Does phi intertwine the two maps, (phi x phi) . r_src = r_dst . (phi x phi)?

    `phi` maps src indices to dst indices (sequence or dict).  When both
    sides satisfy lri the equivalent single-action criterion
    phi . L_x = L_phi(x) . phi is evaluated as well and cross-checked.
    """
    get = phi.__getitem__
    direct = True
    for x in range(src.n):
        for y in range(src.n):
            z, t = src.r(x, y)
            if dst.r(get(x), get(y)) != (get(z), get(t)):
                direct = False
                break
        if not direct:
            break
    if src.satisfies_lri() and dst.satisfies_lri():
        via_left = all(
            get(src.left[x][y]) == dst.left[get(x)][get(y)]
            for x in range(src.n)
            for y in range(src.n)
        )
        assert via_left == direct, "lri homomorphism criterion disagrees with direct check"
    return direct
