"""Named instance generators: the two worked examples, the k-strong family
with no long spanning cycle, seeded random instances, and the SAT builders."""

import random
from typing import Optional, Sequence

from .digraph import PartitionedDigraph
from .errors import UnknownGenerator
from .fileformat import InstanceFile
from .npc import CNF3, build_np1, build_np2


def fig1() -> InstanceFile:
    """Order-5 strong instance with a Hamiltonian cycle but no 4-cycle
    through all four partite sets (a=1 b=2 c=3 x=4 y=5)."""
    d = PartitionedDigraph(
        [1, 2, 3, 4, 4],
        [(1, 2), (2, 3), (1, 3), (4, 1), (4, 3), (2, 4), (1, 5), (3, 5), (5, 2)],
    )
    legend = {"a": 1, "b": 2, "c": 3, "x": 4, "y": 5}
    return InstanceFile(digraph=d, legend=legend)


_FIG2_CLASSES = {
    1: ("x1", "y4", "x7"),
    2: ("x2", "y5", "x8"),
    3: ("y1", "y2", "y3"),
    4: ("x3", "x4", "x5", "x6"),
    5: ("y6", "y7", "y8"),
}
_FIG2_BACKWARD = [
    ("x2", "x1"),
    ("x3", "x2"),
    ("y4", "y3"),
    ("y5", "y4"),
    ("y6", "y5"),
    ("x7", "x6"),
    ("x8", "x7"),
]


def fig2() -> InstanceFile:
    """Sixteen vertices in eight two-cycle columns: factor maximum equals n,
    yet every spanning generalized cycle loses at least three arcs."""
    names = [f"x{i}" for i in range(1, 9)] + [f"y{i}" for i in range(1, 9)]
    ids = {name: k + 1 for k, name in enumerate(names)}
    col = {name: int(name[1]) for name in names}
    part = [0] * 16
    for klass, members in _FIG2_CLASSES.items():
        for name in members:
            part[ids[name] - 1] = klass
    arcs = set()
    for i in range(1, 9):
        arcs.add((ids[f"x{i}"], ids[f"y{i}"]))
        arcs.add((ids[f"y{i}"], ids[f"x{i}"]))
    shown = set()
    for a, b in _FIG2_BACKWARD:
        arcs.add((ids[a], ids[b]))
        shown.add(frozenset((ids[a], ids[b])))
    for a in names:
        for b in names:
            ia, ib = ids[a], ids[b]
            if ia >= ib or part[ia - 1] == part[ib - 1]:
                continue
            if col[a] == col[b] or frozenset((ia, ib)) in shown:
                continue
            if col[a] < col[b]:
                arcs.add((ia, ib))
            else:
                arcs.add((ib, ia))
    d = PartitionedDigraph(part, arcs)
    return InstanceFile(digraph=d, legend=dict(sorted(ids.items(), key=lambda kv: kv[1])))


def noclose(k: int, c: int) -> InstanceFile:
    """k-strong instance whose factors all miss c-1 arcs: c-1 partite sets of
    size k+1, one of size k, forward arcs between classes, and the full
    return bundle from the last class to the first."""
    if k < 1 or c < 2:
        raise ValueError("need k >= 1 and c >= 2")
    part = []
    for i in range(1, c):
        part += [i] * (k + 1)
    part += [c] * k
    n = len(part)
    arcs = set()
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u != v and part[u - 1] < part[v - 1]:
                arcs.add((u, v))
    first_class = [v for v in range(1, n + 1) if part[v - 1] == 1]
    last_class = [v for v in range(1, n + 1) if part[v - 1] == c]
    for w in last_class:
        for a in first_class:
            arcs.add((w, a))
    return InstanceFile(digraph=PartitionedDigraph(part, arcs))


def random_smd(n: int, c: int, density: float, seed: int) -> InstanceFile:
    """Seeded random instance; every cross-partite pair gets one or both arcs
    (both with probability `density`)."""
    if not 1 <= c <= n:
        raise ValueError("need 1 <= c <= n")
    rng = random.Random(f"gmpd-random:{n}:{c}:{density}:{seed}")
    part = [(i % c) + 1 for i in range(n)]
    rng.shuffle(part)
    for i in range(c):
        part[i] = i + 1
    arcs = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if part[u - 1] == part[v - 1]:
                continue
            r = rng.random()
            if r < density:
                arcs += [(u, v), (v, u)]
            elif r < density + (1 - density) / 2:
                arcs.append((u, v))
            else:
                arcs.append((v, u))
    return InstanceFile(digraph=PartitionedDigraph(part, arcs))


def random_extended(n_sets: int, max_size: int, seed: int) -> InstanceFile:
    """Seeded random extended semicomplete digraph: each partite-set pair is
    oriented one way, the other, or completely joined."""
    rng = random.Random(f"gmpd-extended:{n_sets}:{max_size}:{seed}")
    sizes = [rng.randint(1, max_size) for _ in range(n_sets)]
    part = []
    for i, s in enumerate(sizes, 1):
        part += [i] * s
    n = len(part)
    members = {i: [v for v in range(1, n + 1) if part[v - 1] == i] for i in range(1, n_sets + 1)}
    arcs = []
    for i in range(1, n_sets + 1):
        for j in range(i + 1, n_sets + 1):
            r = rng.random()
            for u in members[i]:
                for v in members[j]:
                    if r < 0.34:
                        arcs.append((u, v))
                    elif r < 0.67:
                        arcs.append((v, u))
                    else:
                        arcs += [(u, v), (v, u)]
    return InstanceFile(digraph=PartitionedDigraph(part, arcs))


def sat1(f: CNF3) -> InstanceFile:
    d, legend = build_np1(f)
    return InstanceFile(digraph=d, legend=legend)


def sat2(f: CNF3) -> InstanceFile:
    d, legend = build_np2(f)
    return InstanceFile(digraph=d, legend=legend)


def generate(name: str, params: Sequence[str], seed: Optional[int] = None,
             cnf: Optional[CNF3] = None) -> InstanceFile:
    """Dispatch by generator name; deterministic for fixed arguments."""
    if name == "fig1":
        return fig1()
    if name == "fig2":
        return fig2()
    if name == "noclose":
        if len(params) != 2:
            raise UnknownGenerator("noclose takes k and c")
        return noclose(int(params[0]), int(params[1]))
    if name == "random":
        if len(params) != 3:
            raise UnknownGenerator("random takes n, c and density")
        return random_smd(int(params[0]), int(params[1]), float(params[2]), seed or 0)
    if name == "extended":
        if len(params) != 2:
            raise UnknownGenerator("extended takes set count and max set size")
        return random_extended(int(params[0]), int(params[1]), seed or 0)
    if name == "sat1":
        if cnf is None:
            raise UnknownGenerator("sat1 needs a CNF input")
        return sat1(cnf)
    if name == "sat2":
        if cnf is None:
            raise UnknownGenerator("sat2 needs a CNF input")
        return sat2(cnf)
    raise UnknownGenerator(name)
