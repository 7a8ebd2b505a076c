"""The labelled action graph of a solution and its analysis.

Vertices are the elements; there is an arrow x --a--> y whenever a acts
on x from the left with value y.  Connected components are taken over the
nontrivial (x != y) edges viewed undirected, so they coincide with the
orbits of the translation image group.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from . import perms
from .core import QuadraticSet, check_ybe, restrict
from .errors import NotSquareFree, NotSymmetricSet
from .groups import PermGroup, close, is_automorphism
from .perms import Perm


@dataclass(frozen=True)
class Component:
    index: int
    vertices: tuple[int, ...]
    labels: tuple[int, ...]  # labels of nontrivial edges inside the component

    @property
    def is_nontrivial(self) -> bool:
        return len(self.vertices) > 1


@dataclass(frozen=True)
class SolutionGraph:
    qs: QuadraticSet
    edges: tuple[tuple[int, int, int], ...]  # (source, label, target), complete
    nontrivial_edges: tuple[tuple[int, int, int], ...]
    components: tuple[Component, ...]

    def component_of(self, vertex: int) -> Component:
        for comp in self.components:
            if vertex in comp.vertices:
                return comp
        raise KeyError(vertex)

    def component_sizes(self) -> tuple[int, ...]:
        return tuple(sorted((len(c.vertices) for c in self.components), reverse=True))


def build_graph(qs: QuadraticSet, relaxed: bool = False) -> SolutionGraph:
    """Complete labelled graph of the left action.

    Defined for finite symmetric sets with lri; anything else still gets a
    graph (the left table is always there) but with a warning, since the
    orbit and component statements only hold in the intended setting.
    """
    proper = (
        qs.is_nondegenerate()
        and qs.is_involutive()
        and qs.satisfies_lri()
        and check_ybe(qs)[0]
    )
    if not proper:
        warnings.warn(
            "action graph of a set that is not a symmetric set with lri; "
            "component/orbit guarantees do not apply",
            stacklevel=2,
        )
    n = qs.n
    edges = tuple((x, a, qs.left[a][x]) for a in range(n) for x in range(n))
    nontrivial = tuple(e for e in edges if e[0] != e[2])
    # undirected reachability over nontrivial edges
    adj: list[set[int]] = [set() for _ in range(n)]
    for x, _a, y in nontrivial:
        adj[x].add(y)
        adj[y].add(x)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack, verts = [start], {start}
        seen[start] = True
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    verts.add(w)
                    stack.append(w)
        vt = tuple(sorted(verts))
        labels = tuple(sorted({a for (x, a, y) in nontrivial if x in verts}))
        comps.append(Component(index=len(comps), vertices=vt, labels=labels))
    graph = SolutionGraph(qs=qs, edges=edges, nontrivial_edges=nontrivial, components=tuple(comps))
    if proper:
        orbits = sorted(PermGroup.from_generators(n, dict.fromkeys(qs.left)).orbits())
        assert sorted(c.vertices for c in comps) == orbits, (
            "graph components disagree with the orbits of the left action"
        )
    return graph


# -- stars ---------------------------------------------------------------

@dataclass(frozen=True)
class Star:
    """All single-translation cycles through one vertex, plus the subgraph
    they span with every inherited edge."""

    center: int
    cycles: dict  # label -> cycle through the center, starting there
    vertices: tuple[int, ...]

    def distinct_cycles(self) -> tuple[tuple[int, ...], ...]:
        # cycles all start at the center, so cyclic equality is tuple equality
        return tuple(sorted(set(self.cycles.values())))


def _require_square_free_symmetric(qs: QuadraticSet) -> None:
    if not (qs.is_nondegenerate() and qs.is_involutive() and check_ybe(qs)[0]):
        raise NotSymmetricSet("input is not a nondegenerate symmetric set")
    if not qs.is_square_free():
        raise NotSquareFree("input is not square-free")


def star(qs: QuadraticSet, x: int) -> Star:
    _require_square_free_symmetric(qs)
    cycles = {}
    verts = {x}
    for a in range(qs.n):
        cyc = [x]
        v = qs.left[a][x]
        while v != x:
            cyc.append(v)
            v = qs.left[a][v]
        cycles[a] = tuple(cyc)
        verts.update(cyc)
    return Star(center=x, cycles=cycles, vertices=tuple(sorted(verts)))


def _induced_edges(qs: QuadraticSet, vertices) -> set[tuple[int, int, int]]:
    inside = set(vertices)
    return {
        (x, a, qs.left[a][x])
        for a in range(qs.n)
        for x in inside
        if qs.left[a][x] in inside
    }


def star_equivalent(s1: Star, s2: Star, qs: QuadraticSet) -> bool:
    """Are the two spanned subgraphs isomorphic as labelled graphs?

    Label-preserving: a bijection f of the vertex sets such that for every
    label a and vertex v, a's edge stays inside the subgraph on one side
    iff it does on the other, and then f(a |> v) = a |> f(v).  Brute-force
    backtracking with a per-vertex cycle-signature prefilter.
    """
    v1, v2 = s1.vertices, s2.vertices
    if len(v1) != len(v2):
        return False

    inside1, inside2 = set(v1), set(v2)

    def signature(v, inside):
        sig = []
        for a in range(qs.n):
            w = qs.left[a][v]
            sig.append(-1 if w not in inside else (0 if w == v else 1))
        return tuple(sig)

    sig1 = {v: signature(v, inside1) for v in v1}
    sig2 = {v: signature(v, inside2) for v in v2}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False

    n1 = len(v1)
    assign: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v, w) -> bool:
        if sig1[v] != sig2[w]:
            return False
        for a in range(qs.n):
            x1 = qs.left[a][v]
            x2 = qs.left[a][w]
            if x1 in inside1:
                if x2 not in inside2:
                    return False
                if x1 in assign and assign[x1] != x2:
                    return False
            elif x2 in inside2:
                return False
        for u in assign:
            for a in range(qs.n):
                if qs.left[a][u] == v and qs.left[a][assign[u]] != w:
                    return False
                if qs.left[a][v] == u and qs.left[a][w] != assign[u]:
                    return False
        return True

    def search(i: int) -> bool:
        if i == n1:
            return True
        v = v1[i]
        for w in v2:
            if w in used or not consistent(v, w):
                continue
            assign[v] = w
            used.add(w)
            if search(i + 1):
                return True
            del assign[v]
            used.remove(w)
        return False

    return search(0)


# -- locally commuting actions and first-type analysis --------------------

def actions_commute_on(qs: QuadraticSet, a: int, b: int, component: Component) -> bool:
    """Do the translations of a and b commute on the component, in the
    strong sense that acting on either label by the other leaves its
    restricted translation unchanged?"""
    verts = component.vertices
    L = qs.left
    ba, ab = L[b][a], L[a][b]
    return all(L[ba][x] == L[a][x] for x in verts) and all(
        L[ab][x] == L[b][x] for x in verts
    )


@dataclass(frozen=True)
class FirstTypeAnalysis:
    component: Component
    is_first_type: bool
    label_cycle_length: dict  # label -> k when uniform over the component, else None
    group_order: int
    group_abelian: bool
    basis: tuple[int, ...] | None
    dimension: int | None
    cube_check: bool | None

    def basis_labels(self, qs: QuadraticSet) -> tuple[str, ...]:
        return tuple(qs.labels[a] for a in self.basis or ())


def _restricted_perm(qs: QuadraticSet, a: int, vertices) -> Perm:
    pos = {v: i for i, v in enumerate(vertices)}
    return tuple(pos[qs.left[a][v]] for v in vertices)


def _uniform_cycle_length(p: Perm) -> int | None:
    lengths = {len(c) for c in perms.cycles(p, include_fixed=True)}
    return lengths.pop() if len(lengths) == 1 else None


def analyze_component(qs: QuadraticSet, component: Component) -> FirstTypeAnalysis:
    """First-type test plus, when the restricted translations generate an
    abelian group, the minimal label basis realizing it as a direct
    product of cycles and the cube size check |X1| = k1*...*ks."""
    _require_square_free_symmetric(qs)
    verts = component.vertices
    labels = component.labels
    first_type = bool(labels) and all(
        actions_commute_on(qs, a, b, component) for a in labels for b in labels
    )
    restricted = {a: _restricted_perm(qs, a, verts) for a in labels}
    cycle_len = {a: _uniform_cycle_length(p) for a, p in restricted.items()}
    if labels:
        group = PermGroup.from_generators(len(verts), dict.fromkeys(restricted.values()))
        order, abelian = group.order, group.is_abelian()
    else:
        order, abelian = 1, True
    basis = dimension = cube = None
    if labels and abelian:
        basis = _label_basis(restricted, order)
        if basis is not None:
            dimension = len(basis)
            cube = len(verts) == _product(
                perms.order(restricted[a]) for a in basis
            )
    if first_type:
        assert abelian, "first-type component with nonabelian restricted group"
        assert restrict(qs, verts).is_trivial(), "first-type restriction is not trivial"
        assert all(cycle_len[a] is not None and cycle_len[a] > 1 for a in labels), (
            "first-type labels must act with one uniform cycle length"
        )
        assert basis is not None and cube, "first-type component failed the cube check"
        sub_qs = restrict(qs, verts)
        assert all(
            is_automorphism(restricted[a], sub_qs) for a in labels
        ), "restricted translation is not an automorphism of the trivial restriction"
        stars = [star(qs, v) for v in verts]
        assert all(star_equivalent(stars[0], s, qs) for s in stars[1:]), (
            "first-type component with inequivalent stars"
        )
    return FirstTypeAnalysis(
        component=component,
        is_first_type=first_type,
        label_cycle_length=cycle_len,
        group_order=order,
        group_abelian=abelian,
        basis=basis,
        dimension=dimension,
        cube_check=cube,
    )


def _product(values) -> int:
    out = 1
    for v in values:
        out *= v
    return out


def _label_basis(restricted: dict, group_order: int):
    """Smallest label subset whose restrictions generate the whole group as
    an internal direct product of cyclic groups; lexicographic tie-break."""
    labels = sorted(restricted)
    degree = len(next(iter(restricted.values())))
    for size in range(1, len(labels) + 1):
        for combo in itertools.combinations(labels, size):
            gens = [restricted[a] for a in combo]
            if len(close(gens, degree)) != group_order:
                continue
            if _product(perms.order(g) for g in gens) == group_order:
                return combo
    return None


def cube_coordinates(qs: QuadraticSet, component: Component, basis, origin: int | None = None):
    """Coordinates of each vertex along the basis translations, taking the
    least vertex as origin unless one is given."""
    verts = component.vertices
    if origin is None:
        origin = verts[0]
    restricted = {a: _restricted_perm(qs, a, verts) for a in basis}
    pos = {v: i for i, v in enumerate(verts)}
    ks = [perms.order(restricted[a]) for a in basis]
    coords = {}
    for exponents in itertools.product(*(range(k) for k in ks)):
        v = pos[origin]
        for a, e in zip(basis, exponents):
            for _ in range(e):
                v = restricted[a][v]
        coords.setdefault(verts[v], exponents)
    if len(coords) != len(verts):
        raise ValueError("basis translations do not reach every vertex")
    return coords


# -- DOT export -----------------------------------------------------------

_STYLES = ("solid", "dashed", "dotted")


def export_dot(graph: SolutionGraph, simplified: bool = False, name: str = "solution") -> str:
    """Deterministic Graphviz text.

    Full mode writes every edge (self-loops included) with its label.
    Simplified mode drops self-loops, merges mutual pairs of equally
    labelled arrows into one dir=both edge, and styles edges per label
    (solid/dashed/dotted cycling by label index).  Vertices in index
    order; attribute order label, style, dir.
    """
    qs = graph.qs
    lines = [f'digraph "{name}" {{']
    for v in range(qs.n):
        lines.append(f'  v{v} [label="{qs.labels[v]}"];')
    if not simplified:
        for x, a, y in graph.edges:
            lines.append(f'  v{x} -> v{y} [label="{qs.labels[a]}"];')
    else:
        style_of = {}
        for comp in graph.components:
            for a in comp.labels:
                style_of.setdefault(a, _STYLES[len(style_of) % len(_STYLES)])
        emitted = set()
        for x, a, y in graph.nontrivial_edges:
            if (x, a, y) in emitted:
                continue
            emitted.add((x, a, y))
            attrs = [f'label="{qs.labels[a]}"', f"style={style_of[a]}"]
            if qs.left[a][y] == x and (y, a, x) not in emitted:
                emitted.add((y, a, x))
                attrs.append("dir=both")
            lines.append(f'  v{x} -> v{y} [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
