"""Framed 4-valent graphs, rotating circuits, and medial graphs.

A framed 4-valent graph is a 4-regular graph in which each vertex carries a
cyclic order of its four half-edges; the pairs at cyclic distance two are
"opposite".  A rotating circuit traverses every edge once and never leaves a
vertex through the half-edge opposite to the one it entered.  Extracting the
vertex-visit word of a circuit, with a sign per vertex, yields a framed
chord diagram.

Text format (``#`` starts a comment):

    v0: h0 h1 h2 h3     # one line per vertex, half-edges in cyclic order
    e: h0 h1            # one line per edge

Medial graphs of plane graphs are provided as a generator of certifiably
planar inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .chords import FramedChordDiagram


class GraphError(ValueError):
    """Malformed framed graph."""


@dataclass(frozen=True)
class FramedFourGraph:
    """Vertices as 4-tuples of half-edge ids in cyclic order, plus a perfect
    matching of all half-edges into edges."""

    vertex_half_edges: tuple[tuple[int, int, int, int], ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "edges",
            tuple(tuple(sorted(e)) for e in self.edges),
        )

    @property
    def n(self) -> int:
        return len(self.vertex_half_edges)

    @property
    def half_edges(self) -> tuple[int, ...]:
        return tuple(h for v in self.vertex_half_edges for h in v)

    def vertex_of(self, h: int) -> int:
        return self._vertex_map()[h]

    def _vertex_map(self) -> dict[int, int]:
        return {h: v for v, quad in enumerate(self.vertex_half_edges) for h in quad}

    def _edge_partner(self) -> dict[int, int]:
        partner: dict[int, int] = {}
        for a, b in self.edges:
            partner[a] = b
            partner[b] = a
        return partner

    def opposite(self, h: int) -> int:
        quad = self.vertex_half_edges[self.vertex_of(h)]
        return quad[(quad.index(h) + 2) % 4]


def validate(g: FramedFourGraph) -> list[str]:
    """Return a list of invariant violations; empty means the graph is valid."""
    problems: list[str] = []
    seen_h: set[int] = set()
    for v, quad in enumerate(g.vertex_half_edges):
        if len(quad) != 4 or len(set(quad)) != 4:
            problems.append(f"vertex {v} does not have four distinct half-edges")
            continue
        dup = set(quad) & seen_h
        if dup:
            problems.append(f"half-edge(s) {sorted(dup)} belong to more than one vertex")
        seen_h |= set(quad)
    in_edges: dict[int, int] = {}
    for a, b in g.edges:
        if a == b:
            problems.append(f"edge pairs half-edge {a} with itself")
        for h in (a, b):
            in_edges[h] = in_edges.get(h, 0) + 1
    for h in seen_h:
        c = in_edges.get(h, 0)
        if c != 1:
            problems.append(f"half-edge {h} appears in {c} edges (expected 1)")
    for h in in_edges:
        if h not in seen_h:
            problems.append(f"edge references unknown half-edge {h}")
    if problems:
        return problems
    if g.n > 1:
        # connectivity over vertices via edges
        vmap = g._vertex_map()
        adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
        for a, b in g.edges:
            adj[vmap[a]].add(vmap[b])
            adj[vmap[b]].add(vmap[a])
        reached = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
        if len(reached) != g.n:
            problems.append("graph is disconnected")
    return problems


def require_valid(g: FramedFourGraph) -> None:
    problems = validate(g)
    if problems:
        raise GraphError("; ".join(problems))


@dataclass(frozen=True)
class RotatingCircuit:
    """Closed walk as (out_half_edge, in_half_edge) edge traversals."""

    steps: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    def visits(self) -> list[tuple[int, int]]:
        """Vertex visits in walk order as (in_half_edge, out_half_edge)."""
        n = len(self.steps)
        return [(self.steps[i][1], self.steps[(i + 1) % n][0]) for i in range(n)]


def _trace_walks(
    g: FramedFourGraph, trans: dict[int, int]
) -> list[list[int]]:
    """Closed walks induced by a transition system; one representative
    direction per walk, as the sequence of out-half-edges."""
    partner = g._edge_partner()
    succ = {h: trans[partner[h]] for h in g.half_edges}
    walks: list[list[int]] = []
    seen: set[int] = set()
    for start in sorted(g.half_edges):
        if start in seen:
            continue
        cycle = []
        h = start
        while True:
            cycle.append(h)
            seen.add(h)
            seen.add(partner[h])  # suppress the reversed copy of this walk
            h = succ[h]
            if h == start:
                break
        walks.append(cycle)
    return walks


_PAIRINGS = ((0, 1, 2, 3), (0, 3, 1, 2))  # the two rotating pairings, by position


def _transition_map(g: FramedFourGraph, choice: list[int]) -> dict[int, int]:
    trans: dict[int, int] = {}
    for v, quad in enumerate(g.vertex_half_edges):
        a, b, c, d = (quad[i] for i in _PAIRINGS[choice[v]])
        trans[a] = b
        trans[b] = a
        trans[c] = d
        trans[d] = c
    return trans


def rotating_circuit(g: FramedFourGraph, variant: int = 0) -> RotatingCircuit:
    """Extract a rotating circuit.

    Starts from one rotating transition per vertex (lowest-index pairing for
    ``variant == 0``, otherwise seeded per-vertex choices) and merges closed
    walks by re-pairing a vertex visited by two different walks until a
    single circuit remains.  Deterministic for a given (graph, variant).
    """
    require_valid(g)
    if g.n == 0:
        raise GraphError("empty graph has no rotating circuit")
    if variant == 0:
        choice = [0] * g.n
    else:
        rng = random.Random(variant)
        choice = [rng.randint(0, 1) for _ in range(g.n)]
    partner = g._edge_partner()
    vmap = g._vertex_map()
    while True:
        trans = _transition_map(g, choice)
        walks = _trace_walks(g, trans)
        if len(walks) == 1:
            break
        walk_of: dict[int, int] = {}
        for wi, cycle in enumerate(walks):
            for h in cycle:
                walk_of[vmap[h]] = walk_of.get(vmap[h], wi)
        merged = False
        for v in range(g.n):
            quad = g.vertex_half_edges[v]
            owners = {wi for wi, cycle in enumerate(walks) for h in cycle if vmap[h] == v}
            if len(owners) > 1:
                choice[v] ^= 1
                merged = True
                break
        if not merged:  # cannot happen for a connected graph
            raise GraphError("failed to merge walks into a single circuit")
    cycle = walks[0]
    steps = tuple((h, partner[h]) for h in cycle)
    return RotatingCircuit(steps)


def chord_diagram_of(g: FramedFourGraph, circuit: RotatingCircuit) -> FramedChordDiagram:
    """Framed chord diagram of a rotating circuit.

    One chord per vertex, joining its two visit positions; label is the
    vertex index plus one.  A chord is positive when the two departures
    leave through opposite half-edges (equivalently, the two arrivals enter
    through opposite half-edges), which is exactly the local source-target
    configuration.
    """
    require_valid(g)
    expected = {tuple(sorted(s)) for s in circuit.steps}
    if expected != set(g.edges) or circuit.length != len(g.edges):
        raise GraphError("circuit does not traverse this graph's edges exactly once")
    vmap = g._vertex_map()
    word = []
    visits: dict[int, list[tuple[int, int]]] = {}
    for h_in, h_out in circuit.visits():
        v = vmap[h_in]
        word.append(v + 1)
        visits.setdefault(v, []).append((h_in, h_out))
    negatives = set()
    for v, vs in visits.items():
        if len(vs) != 2:
            raise GraphError(f"vertex {v} visited {len(vs)} times (expected 2)")
        (_, out1), (_, out2) = vs
        if g.opposite(out1) != out2:
            negatives.add(v + 1)
    return FramedChordDiagram(tuple(word), frozenset(negatives))


def source_target_check(
    g: FramedFourGraph,
) -> tuple[bool, dict[int, str] | None]:
    """Does an edge orientation exist with two opposite half-edges outgoing
    and two opposite incoming at every vertex?

    Returns ``(True, orientation)`` with orientation mapping each half-edge
    to ``"out"`` or ``"in"``, else ``(False, None)``.
    """
    problems = validate(g)
    if problems:
        raise GraphError("; ".join(problems))
    if g.n == 0:
        return True, {}
    vmap = g._vertex_map()
    side = {h: g.vertex_half_edges[vmap[h]].index(h) % 2 for h in g.half_edges}
    # state[v] == 0: even-position pair outgoing; == 1: odd pair outgoing
    state: dict[int, int] = {0: 0}
    stack = [0]
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.n)}
    for a, b in g.edges:
        adj[vmap[a]].append((a, b))
        adj[vmap[b]].append((b, a))
    while stack:
        v = stack.pop()
        for a, b in adj[v]:
            w = vmap[b]
            need = state[v] ^ side[a] ^ side[b] ^ 1
            if w not in state:
                state[w] = need
                stack.append(w)
            elif state[w] != need:
                return False, None
    orientation = {
        h: "out" if side[h] == state[vmap[h]] else "in" for h in g.half_edges
    }
    return True, orientation


# ---------------------------------------------------------------------------
# plane graphs and medial construction


@dataclass(frozen=True)
class PlaneGraph:
    """Combinatorial plane embedding: edge ``e`` has darts ``2e`` and
    ``2e + 1``; each vertex lists its incident darts in rotation order."""

    num_edges: int
    rotations: tuple[tuple[int, ...], ...]

    def darts(self) -> tuple[int, ...]:
        return tuple(d for rot in self.rotations for d in rot)


def _twin(d: int) -> int:
    return d ^ 1


def plane_graph_faces(p: PlaneGraph) -> list[list[int]]:
    """Faces by tracing: next dart in a face is the rotation successor of
    the twin of the current dart."""
    nxt: dict[int, int] = {}
    for rot in p.rotations:
        for i, d in enumerate(rot):
            nxt[d] = rot[(i + 1) % len(rot)]
    faces: list[list[int]] = []
    seen: set[int] = set()
    for start in sorted(nxt):
        if start in seen:
            continue
        face = []
        d = start
        while True:
            face.append(d)
            seen.add(d)
            d = nxt[_twin(d)]
            if d == start:
                break
        faces.append(face)
    return faces


def validate_plane_graph(p: PlaneGraph) -> list[str]:
    problems: list[str] = []
    darts = p.darts()
    if sorted(darts) != list(range(2 * p.num_edges)):
        problems.append("rotations must list every dart of every edge exactly once")
        return problems
    if p.num_edges == 0:
        problems.append("plane graph has no edges")
        return problems
    # connectivity over vertices
    vert_of = {d: v for v, rot in enumerate(p.rotations) for d in rot}
    nv = len(p.rotations)
    adj: dict[int, set[int]] = {v: set() for v in range(nv)}
    for e in range(p.num_edges):
        a, b = vert_of[2 * e], vert_of[2 * e + 1]
        adj[a].add(b)
        adj[b].add(a)
    reached = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != nv:
        problems.append("plane graph is disconnected")
        return problems
    faces = plane_graph_faces(p)
    euler = nv - p.num_edges + len(faces)
    if euler != 2:
        problems.append(f"rotation system is not planar (V-E+F = {euler})")
    return problems


def medial_of_plane_graph(p: PlaneGraph) -> FramedFourGraph:
    """Medial framed 4-valent graph of a plane graph.

    One 4-valent vertex per edge, sitting at its midpoint; medial edges join
    edge-ends sharing a corner.  The opposite-pair structure is that of the
    two strands crossing at the midpoint, so the result always admits a
    checkerboard-colourable plane embedding.
    """
    problems = validate_plane_graph(p)
    if problems:
        raise GraphError("; ".join(problems))

    # Half-edge slots of medial vertex e, in cyclic order around the
    # midpoint of e (darts 2e at the "u" end, 2e+1 at the "v" end):
    #   4e + 0: before-corner at the v end     4e + 1: after-corner at u
    #   4e + 2: before-corner at the u end     4e + 3: after-corner at v
    def after_slot(d: int) -> int:
        return 4 * (d // 2) + (1 if d % 2 == 0 else 3)

    def before_slot(d: int) -> int:
        return 4 * (d // 2) + (2 if d % 2 == 0 else 0)

    edges = []
    for rot in p.rotations:
        for i, d in enumerate(rot):
            d_next = rot[(i + 1) % len(rot)]
            edges.append((after_slot(d), before_slot(d_next)))
    vertices = tuple(
        (4 * e, 4 * e + 1, 4 * e + 2, 4 * e + 3) for e in range(p.num_edges)
    )
    g = FramedFourGraph(vertices, tuple(edges))
    require_valid(g)
    return g


# ---------------------------------------------------------------------------
# text format and generators


def parse_graph(text: str) -> FramedFourGraph:
    vertices: dict[int, tuple[int, int, int, int]] = {}
    edges: list[tuple[int, int]] = []

    def half_edge(tok: str) -> int:
        if not tok.startswith("h"):
            raise GraphError(f"bad half-edge token {tok!r}")
        try:
            return int(tok[1:])
        except ValueError:
            raise GraphError(f"bad half-edge token {tok!r}") from None

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        head = head.strip()
        toks = rest.split()
        if head == "e":
            if len(toks) != 2:
                raise GraphError(f"edge line needs two half-edges: {raw!r}")
            edges.append((half_edge(toks[0]), half_edge(toks[1])))
        elif head.startswith("v"):
            try:
                v = int(head[1:])
            except ValueError:
                raise GraphError(f"bad vertex token {head!r}") from None
            if len(toks) != 4:
                raise GraphError(f"vertex line needs four half-edges: {raw!r}")
            if v in vertices:
                raise GraphError(f"duplicate vertex v{v}")
            quad = tuple(half_edge(t) for t in toks)
            vertices[v] = quad  # type: ignore[assignment]
        else:
            raise GraphError(f"unrecognized line {raw!r}")
    if sorted(vertices) != list(range(len(vertices))):
        raise GraphError("vertex indices must be 0..n-1")
    g = FramedFourGraph(tuple(vertices[v] for v in sorted(vertices)), tuple(edges))
    require_valid(g)
    return g


def serialize_graph(g: FramedFourGraph) -> str:
    lines = [
        f"v{v}: " + " ".join(f"h{h}" for h in quad)
        for v, quad in enumerate(g.vertex_half_edges)
    ]
    lines += [f"e: h{a} h{b}" for a, b in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def random_framed_graph(n: int, rng: random.Random) -> FramedFourGraph:
    """Random connected framed 4-valent graph on ``n`` vertices."""
    if n < 1:
        raise GraphError("need at least one vertex")
    vertices = tuple((4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3) for v in range(n))
    while True:
        hs = list(range(4 * n))
        rng.shuffle(hs)
        edges = tuple((hs[2 * i], hs[2 * i + 1]) for i in range(2 * n))
        g = FramedFourGraph(vertices, edges)
        if not validate(g):
            return g
