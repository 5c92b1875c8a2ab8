"""Maximum-arc cycle factors via an exact min-cost assignment.

The completion of the instance gives an assignment problem whose {0,1}
costs charge 1 per same-partite step and 0 per arc; missing cross-partite
pairs are forbidden.  A minimum-cost successor permutation decodes to a
factor with the maximum number of arcs: arcs = n - cost.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .digraph import PartitionedDigraph
from .errors import Degenerate, NoFactor
from .walks import GFactor, GWalk, canonical_cycle, validate_factor

INF = 10 ** 9
_INF_CUT = 10 ** 8


@dataclass(frozen=True)
class AssignmentInstance:
    """Square cost grid; INF marks forbidden pairs (diagonal always INF)."""

    size: int
    cost: Tuple[Tuple[int, ...], ...]


def solve_assignment(cost: List[List[int]]) -> Optional[Tuple[int, List[int]]]:
    """Exact min-cost perfect assignment (shortest augmenting paths).

    Returns (total, successor) with successor[i] = column of row i, or None
    when no feasible assignment exists.  0-based indices.
    """
    n = len(cost)
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    p = [0] * (n + 1)          # p[j] = row matched to column j (1-based, 0 = none)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = INF
            j1 = -1
            row = cost[i0 - 1]
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = row[j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            if delta >= _INF_CUT:
                return None
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0 != 0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    succ = [0] * n
    total = 0
    for j in range(1, n + 1):
        succ[p[j] - 1] = j - 1
        total += cost[p[j] - 1][j - 1]
    if total >= _INF_CUT:
        return None
    return total, succ


def lexmin_assignment(cost: List[List[int]]) -> Optional[Tuple[int, List[int]]]:
    """Optimal assignment whose successor map is lexicographically smallest.

    Fixes rows in ascending order to the smallest column that keeps the total
    optimal; each candidate is certified by re-solving the residual problem.
    """
    base = solve_assignment(cost)
    if base is None:
        return None
    total, _ = base
    n = len(cost)
    fixed_cols: List[Optional[int]] = [None] * n
    used = [False] * n
    spent = 0
    for i in range(n):
        free_rows = [r for r in range(i + 1, n)]
        for j in range(n):
            if used[j] or cost[i][j] >= _INF_CUT:
                continue
            free_cols = [c for c in range(n) if not used[c] and c != j]
            sub = [[cost[r][c] for c in free_cols] for r in free_rows]
            if sub:
                res = solve_assignment(sub)
                if res is None:
                    continue
                rest = res[0]
            else:
                rest = 0
            if spent + cost[i][j] + rest == total:
                fixed_cols[i] = j
                used[j] = True
                spent += cost[i][j]
                break
        if fixed_cols[i] is None:
            raise AssertionError("lexicographic fixing lost feasibility")
    assert spent == total
    return total, [c for c in fixed_cols]  # type: ignore[misc]


def _succ_cycles(succ: List[int]) -> List[List[int]]:
    seen = [False] * len(succ)
    cycles = []
    for s in range(len(succ)):
        if seen[s]:
            continue
        cyc = []
        v = s
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = succ[v]
        cycles.append(cyc)
    return cycles


def completion_costs(d: PartitionedDigraph) -> AssignmentInstance:
    n = d.n
    grid = []
    for u in range(1, n + 1):
        row = []
        for v in range(1, n + 1):
            if u == v:
                row.append(INF)
            elif (u, v) in d.arcs:
                row.append(0)
            elif d.same_part(u, v):
                row.append(1)
            else:
                row.append(INF)
        grid.append(tuple(row))
    return AssignmentInstance(size=n, cost=tuple(grid))


def max_arc_gcycle_factor(d: PartitionedDigraph) -> GFactor:
    """A spanning factor of generalized cycles with the maximum arc count."""
    d.require_smd()
    if d.n < 2:
        raise Degenerate("a cycle factor needs at least two vertices")
    inst = completion_costs(d)
    solved = lexmin_assignment([list(r) for r in inst.cost])
    if solved is None:
        raise NoFactor("no spanning set of generalized cycles exists")
    _, succ = solved
    cycles = []
    for cyc in _succ_cycles(succ):
        cycles.append(canonical_cycle(GWalk("cycle", tuple(v + 1 for v in cyc))))
    cycles.sort(key=lambda c: c.seq[0])
    factor = GFactor(tuple(cycles))
    validate_factor(d, factor)
    return factor


def c_f(d: PartitionedDigraph) -> int:
    """Maximum number of arcs in a generalized cycle factor."""
    f = max_arc_gcycle_factor(d)
    return f.arc_count(d)


def max_arc_path_cycle_subdigraph(d: PartitionedDigraph) -> Tuple[GWalk, GFactor]:
    """Spanning subdigraph of one path plus cycles, maximizing total arcs.

    Solved on the completion plus one dummy vertex wired to and from every
    vertex at cost 0; the dummy's successor cycle, opened, is the path.
    """
    d.require_smd()
    if d.n == 1:
        return GWalk("path", (1,)), GFactor(())
    n = d.n
    base = completion_costs(d)
    grid = [list(r) + [0] for r in base.cost]
    grid.append([0] * n + [INF])
    solved = lexmin_assignment(grid)
    if solved is None:
        raise NoFactor("no spanning path-plus-cycles cover exists")
    _, succ = solved
    path_seq = None
    cycles = []
    for cyc in _succ_cycles(succ):
        if n in cyc:  # dummy id (0-based n)
            k = cyc.index(n)
            opened = cyc[k + 1:] + cyc[:k]
            path_seq = tuple(v + 1 for v in opened)
        else:
            cycles.append(canonical_cycle(GWalk("cycle", tuple(v + 1 for v in cyc))))
    assert path_seq, "dummy vertex always lies on some successor cycle"
    cycles.sort(key=lambda c: c.seq[0])
    path = GWalk("path", path_seq)
    remainder = GFactor(tuple(cycles))
    covered = set(path.seq) | remainder.vertex_set()
    assert covered == set(d.vertices())
    return path, remainder
