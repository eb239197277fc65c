"""Named graphs used throughout the test and verification suites."""
from __future__ import annotations

import random

from .graph import Graph, GraphError, complete, cycle

# The three 16-vertex C7-critical graphs with (17,15)-potential 2. Edge lists
# are written with 1-based labels; vertex ``i`` becomes ``i - 1``.
_TWO_CELLS = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 1),
              (2, 8), (8, 9), (9, 10), (10, 11), (11, 12), (12, 1)]
_TIGHT_CONNECTORS = {
    "A": (12, 7),
    "B": (11, 6),
    "C": (10, 5),
}


def tight_example(variant: str = "A") -> Graph:
    """Two 7-cycles sharing the edge 1-2, joined by a path with four internal vertices."""
    try:
        a, b = _TIGHT_CONNECTORS[variant]
    except KeyError:
        raise GraphError(f"unknown variant {variant!r}; expected one of A, B, C") from None
    chain = [a, 13, 14, 15, 16, b]
    es = _TWO_CELLS + list(zip(chain, chain[1:]))
    return Graph(16, [(u - 1, v - 1) for u, v in es])


def tight_examples() -> dict[str, Graph]:
    return {k: tight_example(k) for k in _TIGHT_CONNECTORS}


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def dodecahedron() -> Graph:
    es = []
    for i in range(5):
        es.append((i, (i + 1) % 5))            # outer pentagon
        es.append((i, 5 + 2 * i))              # spokes to the middle ring
        es.append((15 + i, 15 + (i + 1) % 5))  # inner pentagon
        es.append((6 + 2 * i, 15 + i))         # middle ring to inner pentagon
    es += [(5 + j, 5 + (j + 1) % 10) for j in range(10)]  # middle 10-cycle
    return Graph(20, es)


def theta(*lengths: int) -> Graph:
    """Two branch vertices 0 and 1 joined by internally disjoint paths of the given lengths."""
    if len(lengths) < 2 or sum(1 for x in lengths if x == 1) > 1 or min(lengths) < 1:
        raise GraphError("theta graph needs >= 2 paths, lengths >= 1, at most one direct edge")
    es = []
    nxt = 2
    for length in lengths:
        chain = [0] + list(range(nxt, nxt + length - 1)) + [1]
        nxt += length - 1
        es.extend(zip(chain, chain[1:]))
    return Graph(nxt, es)


def wheel(rim: int) -> Graph:
    g = cycle(rim)
    return Graph(rim + 1, list(g.edges) + [(rim, i) for i in range(rim)])


def random_planar_cubic(faces: int, seed: int | None = None, flips: int | None = None) -> Graph:
    """Random 3-connected cubic planar graph: the dual of a random triangulation.

    The triangulation on ``faces`` vertices is grown by stacking vertices into
    random triangles and then mixed by random edge flips that keep it simple.
    The dual has ``2 * faces - 4`` vertices.
    """
    if faces < 4:
        raise GraphError("need at least 4 triangulation vertices")
    rng = random.Random(seed)
    tris = {frozenset((0, 1, 2)), frozenset((0, 1, 3)), frozenset((0, 2, 3)), frozenset((1, 2, 3))}
    for x in range(4, faces):
        t = rng.choice(sorted(tris, key=sorted))
        a, b, c = sorted(t)
        tris.remove(t)
        tris |= {frozenset((a, b, x)), frozenset((a, c, x)), frozenset((b, c, x))}

    def edge_faces():
        ef = {}
        for t in tris:
            a, b, c = sorted(t)
            for e in ((a, b), (a, c), (b, c)):
                ef.setdefault(e, []).append(t)
        return ef

    for _ in range(flips if flips is not None else 4 * faces):
        ef = edge_faces()
        e = rng.choice(sorted(ef))
        t1, t2 = ef[e]
        (c,) = t1 - set(e)
        (d,) = t2 - set(e)
        if (min(c, d), max(c, d)) in ef:
            continue
        a, b = e
        # both endpoints lose an edge; keep the triangulation 3-connected
        if sum(1 for x in ef if a in x) <= 3 or sum(1 for x in ef if b in x) <= 3:
            continue
        tris -= {t1, t2}
        tris |= {frozenset((a, c, d)), frozenset((b, c, d))}

    order = sorted(tris, key=sorted)
    idx = {t: i for i, t in enumerate(order)}
    dual = [(idx[t1], idx[t2]) for t1, t2 in edge_faces().values()]
    return Graph(len(order), dual)


NAMED = {
    "petersen": petersen,
    "dodecahedron": dodecahedron,
}


def named_graph(name: str) -> Graph:
    """Resolve names like ``c7``, ``k4``, ``petersen``, ``tight-a``."""
    key = name.lower()
    if key in NAMED:
        return NAMED[key]()
    if key.startswith("tight-") and len(key) == 7:
        return tight_example(key[-1].upper())
    if key[:1] in "ck" and key[1:].isdigit():
        n = int(key[1:])
        return cycle(n) if key[0] == "c" else complete(n)
    raise GraphError(f"unknown graph name {name!r}")
