"""Face folding for planar graphs of fixed odd girth, and Ore subdivisions."""
from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import theta
from .graph import Graph, GraphError, delete_vertex, identify, odd_girth, subdivide_all
from .potential import ore_density_value


class FoldError(GraphError):
    def __init__(self, message: str, attempts: list):
        super().__init__(message)
        self.attempts = attempts


@dataclass
class FoldResult:
    folded: Graph
    pivot_index: int
    map: tuple
    attempts: list = field(default_factory=list)


def _check_face(g: Graph, face) -> list:
    face = list(face)
    r = len(face)
    if r < 3 or len(set(face)) != r:
        raise GraphError("face must be a cycle given by at least 3 distinct vertices")
    for i in range(r):
        if not g.has_edge(face[i], face[(i + 1) % r]):
            raise GraphError(f"face edge {(face[i], face[(i + 1) % r])} not in graph")
    return face


def fold_face(g: Graph, face, k: int) -> FoldResult:
    """Identify the two face-neighbours of some face vertex, keeping odd girth k.

    Pivots are tried in order i = 0..r-1; pivots whose two neighbours on the
    face are adjacent are skipped. Faciality is not checked.
    """
    face = _check_face(g, face)
    r = len(face)
    if r == k:
        raise GraphError(f"face length {r} equals the target odd girth")
    og = odd_girth(g)
    if og != k:
        raise GraphError(f"graph has odd girth {og}, expected {k}")
    attempts = []
    for i in range(r):
        a, b = face[i - 1], face[(i + 1) % r]
        if g.has_edge(a, b):
            attempts.append({"pivot": i, "skipped": "neighbours adjacent"})
            continue
        folded, m = identify(g, a, b)
        got = odd_girth(folded)
        attempts.append({"pivot": i, "odd_girth": got})
        if got == k:
            return FoldResult(folded, i, m, attempts)
    raise FoldError("no pivot keeps the odd girth; the cycle is probably not facial", attempts)


# ---------------------------------------------------------- face bookkeeping

@dataclass
class PlaneGraph:
    """A graph with its faces given as closed vertex walks."""
    graph: Graph
    faces: list

    def face_lengths(self) -> list[int]:
        return [len(f) for f in self.faces]

    def euler_characteristic(self) -> int:
        return self.graph.v - self.graph.e + len(self.faces)


def _reduce_spurs(walk: list) -> list:
    """Remove back-and-forth steps x y x from a closed walk."""
    w = list(walk)
    changed = True
    while changed and len(w) > 2:
        changed = False
        n = len(w)
        for i in range(n):
            if w[i - 1] == w[(i + 1) % n]:
                # drop w[i] and one copy of its repeated neighbour
                j = (i + 1) % n
                for idx in sorted({i, j}, reverse=True):
                    del w[idx]
                changed = True
                break
    return w


def _pinches(face: list, a: int, v: int, b: int) -> bool:
    if a not in face or b not in face:
        return False
    n = len(face)
    through_v = any(face[i] == v and {face[i - 1], face[(i + 1) % n]} == {a, b} for i in range(n))
    return not through_v


def fold_plane_face(pg: PlaneGraph, face_index: int, k: int) -> tuple[PlaneGraph, int]:
    """One fold step on an embedded graph, updating all faces.

    Only pivots whose two face-neighbours have no common neighbour off the
    face are used, so every parallel pair created bounds a piece of the folded
    face and collapses. Pivots that would pinch another face (both neighbours
    on it, but not joined there through the pivot) are skipped too.
    Degree-1 vertices left behind are deleted. Returns the new plane graph and
    the pivot index used.
    """
    g = pg.graph
    face = _check_face(g, pg.faces[face_index])
    r = len(face)
    if r == k:
        raise GraphError(f"face length {r} equals the target odd girth")
    attempts = []
    for i in range(r):
        v, a, b = face[i], face[i - 1], face[(i + 1) % r]
        if g.has_edge(a, b) or a == b:
            attempts.append({"pivot": i, "skipped": "neighbours adjacent"})
            continue
        allowed = {v, face[(i + 2) % r]} if r == 4 else {v}
        if not set(g.adj[a]) & set(g.adj[b]) <= allowed:
            attempts.append({"pivot": i, "skipped": "extra common neighbour"})
            continue
        if any(_pinches(f, a, v, b) for j, f in enumerate(pg.faces) if j != face_index):
            attempts.append({"pivot": i, "skipped": "would pinch another face"})
            continue
        folded, m = identify(g, a, b)
        if odd_girth(folded) != k:
            attempts.append({"pivot": i, "odd_girth": odd_girth(folded)})
            continue
        faces = [_reduce_spurs([m[x] for x in f]) for f in pg.faces]
        faces = [f for f in faces if len(f) > 2]
        return _prune_pendants(PlaneGraph(folded, faces)), i
    raise FoldError("no pivot keeps the odd girth", attempts)


def _prune_pendants(pg: PlaneGraph) -> PlaneGraph:
    g, faces = pg.graph, pg.faces
    while True:
        low = [x for x in range(g.n) if g.degree(x) <= 1]
        if not low:
            return PlaneGraph(g, faces)
        g, m = delete_vertex(g, low[0])
        faces = [_reduce_spurs([m[x] for x in f if m[x] is not None]) for f in faces]
        faces = [f for f in faces if len(f) > 2]


def fold_until_uniform(pg: PlaneGraph, k: int, max_steps: int = 10_000) -> tuple[PlaneGraph, list]:
    """Fold faces of length != k until none remain.

    Each round folds the first such face that has a usable pivot.
    """
    history = []
    for _ in range(max_steps):
        todo = [i for i, f in enumerate(pg.faces) if len(f) != k]
        if not todo:
            return pg, history
        stuck = []
        for idx in todo:
            try:
                nxt, pivot = fold_plane_face(pg, idx, k)
            except FoldError as exc:
                stuck.append({"face": idx, "attempts": exc.attempts})
                continue
            break
        else:
            raise FoldError("no face of the wrong length can be folded", stuck)
        pg = nxt
        history.append({"face": idx, "pivot": pivot, "v": pg.graph.v, "e": pg.graph.e})
    raise GraphError("folding did not finish within the step limit")


def theta_plane(*lengths: int) -> PlaneGraph:
    """Theta graph on branch vertices 0 and 1 with faces between consecutive paths."""
    g = theta(*lengths)
    paths = []
    nxt = 2
    for length in lengths:
        paths.append([0] + list(range(nxt, nxt + length - 1)) + [1])
        nxt += length - 1
    faces = []
    for j in range(len(paths)):
        p, q = paths[j], paths[(j + 1) % len(paths)]
        faces.append(p + list(reversed(q))[1:-1])
    return PlaneGraph(g, faces)


# ------------------------------------------------------------------------ Ore

def ore_subdivide(g: Graph, t: int) -> Graph:
    """Subdivide every edge 2t-2 times."""
    if t < 1:
        raise GraphError("t must be positive")
    return subdivide_all(g, 2 * t - 2)


@dataclass
class OreDensityCheck:
    v: int
    e: int
    t: int
    formula: object

    @property
    def equal(self) -> bool:
        return self.formula == self.e

    def to_dict(self) -> dict:
        return {"v": self.v, "e": self.e, "t": self.t, "formula": str(self.formula), "equal": self.equal}


def ore_density_check(g: Graph, t: int) -> OreDensityCheck:
    return OreDensityCheck(g.v, g.e, t, ore_density_value(g.v, t))
