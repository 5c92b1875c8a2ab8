"""Partitioned digraph model and structural predicates.

Vertices are dense integer ids 1..n.  Partite sets are derived from the
per-vertex partite index, never stored as separate lists.  Instances are
immutable after construction; all operations below are pure functions.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import AugmentedInput, NotSemicomplete


class PartitionedDigraph:
    """A digraph whose vertices carry partite indices.

    Construction accepts any loop-free arc set, including arcs inside a
    partite set; whether the instance is a valid semicomplete multipartite
    digraph is reported by :func:`validate`, not enforced here.
    """

    __slots__ = ("n", "c", "_part", "arcs", "augmented", "_out", "_in", "_smd_cache")

    def __init__(self, part: Iterable[int], arcs: Iterable[tuple], augmented: bool = False):
        part = tuple(part)
        if not part:
            raise ValueError("at least one vertex required")
        self.n = len(part)
        self.c = max(part)
        if min(part) < 1 or set(part) != set(range(1, self.c + 1)):
            raise ValueError("partite indices must cover 1..c with every index used")
        self._part = part
        arcset = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arcset:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc ({u},{v}) out of range")
        self.arcs = arcset
        self.augmented = augmented
        out = {v: set() for v in range(1, self.n + 1)}
        inn = {v: set() for v in range(1, self.n + 1)}
        for u, v in arcset:
            out[u].add(v)
            inn[v].add(u)
        self._out = {v: frozenset(s) for v, s in out.items()}
        self._in = {v: frozenset(s) for v, s in inn.items()}
        self._smd_cache = None

    # -- basic accessors -------------------------------------------------

    def vertices(self):
        return range(1, self.n + 1)

    def part(self, v: int) -> int:
        return self._part[v - 1]

    @property
    def part_vector(self) -> tuple:
        return self._part

    def partite_set(self, i: int) -> frozenset:
        return frozenset(v for v in self.vertices() if self._part[v - 1] == i)

    def partite_sets(self):
        sets = [set() for _ in range(self.c)]
        for v in self.vertices():
            sets[self._part[v - 1] - 1].add(v)
        return [frozenset(s) for s in sets]

    def out(self, v: int) -> frozenset:
        return self._out[v]

    def inn(self, v: int) -> frozenset:
        return self._in[v]

    def is_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def same_part(self, u: int, v: int) -> bool:
        return self._part[u - 1] == self._part[v - 1]

    def is_semicomplete_digraph(self) -> bool:
        """True when every partite set is a singleton and the instance is an SMD."""
        return self.c == self.n and self.is_smd()

    def is_smd(self) -> bool:
        if self._smd_cache is None:
            self._smd_cache = validate(self).is_smd
        return self._smd_cache

    def require_smd(self):
        if self.augmented:
            raise AugmentedInput("operation requires a plain (non-augmented) instance")
        if not self.is_smd():
            raise NotSemicomplete("instance is not a semicomplete multipartite digraph")

    def __eq__(self, other):
        return (
            isinstance(other, PartitionedDigraph)
            and self._part == other._part
            and self.arcs == other.arcs
            and self.augmented == other.augmented
        )

    def __hash__(self):
        return hash((self._part, self.arcs, self.augmented))

    def __repr__(self):
        return f"PartitionedDigraph(n={self.n}, c={self.c}, m={len(self.arcs)})"


@dataclass
class ValidationReport:
    is_smd: bool
    is_extended: bool
    is_strong: bool
    internal_arc: Optional[tuple] = None        # arc inside a partite set
    missing_pair: Optional[tuple] = None        # cross-partite pair with no arc
    extended_witness: Optional[tuple] = None    # partite-set index pair breaking extension


def validate(d: PartitionedDigraph) -> ValidationReport:
    """Classify an instance; violations are reported, never raised."""
    internal = None
    for u, v in sorted(d.arcs):
        if d.same_part(u, v):
            internal = (u, v)
            break
    missing = None
    for u, v in combinations(d.vertices(), 2):
        if d.same_part(u, v):
            continue
        if (u, v) not in d.arcs and (v, u) not in d.arcs:
            missing = (u, v)
            break
    smd = internal is None and missing is None
    ext_witness = None
    if smd:
        sets = d.partite_sets()
        for i, j in combinations(range(d.c), 2):
            fwd = any((u, v) in d.arcs for u in sets[i] for v in sets[j])
            bwd = any((v, u) in d.arcs for u in sets[i] for v in sets[j])
            complete = all(
                (u, v) in d.arcs and (v, u) in d.arcs for u in sets[i] for v in sets[j]
            )
            one_way = (fwd and not bwd) or (bwd and not fwd)
            if not (one_way or complete):
                ext_witness = (i + 1, j + 1)
                break
        extended = ext_witness is None
    else:
        extended = False
    return ValidationReport(
        is_smd=smd,
        is_extended=extended,
        is_strong=is_strong(d),
        internal_arc=internal,
        missing_pair=missing,
        extended_witness=ext_witness,
    )


def strong_components(d: PartitionedDigraph) -> list:
    """Strongly connected components, listed in condensation topological order."""
    n = d.n
    order = []
    seen = [False] * (n + 1)
    for root in d.vertices():
        if seen[root]:
            continue
        stack = [(root, iter(sorted(d.out(root))))]
        seen[root] = True
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, iter(sorted(d.out(w)))))
                    advanced = True
                    break
            if not advanced:
                order.append(v)
                stack.pop()
    comp = [0] * (n + 1)
    comp_count = 0
    assigned = [False] * (n + 1)
    components = []
    for root in reversed(order):
        if assigned[root]:
            continue
        comp_count += 1
        members = []
        stack = [root]
        assigned[root] = True
        while stack:
            v = stack.pop()
            members.append(v)
            comp[v] = comp_count
            for w in sorted(d.inn(v)):
                if not assigned[w]:
                    assigned[w] = True
                    stack.append(w)
        components.append(sorted(members))
    # Kosaraju emits components in reverse topological order of the
    # condensation when scanning the reversed graph; the loop above walks
    # finish times backwards, which yields topological order directly.
    return components


def is_strong(d: PartitionedDigraph) -> bool:
    return len(strong_components(d)) == 1


def is_k_strong(d: PartitionedDigraph, k: int) -> bool:
    """Exhaustive check: n >= k+1 and every deletion of < k vertices stays strong."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return True
    if d.n < k + 1:
        return False
    verts = list(d.vertices())
    for size in range(k):
        for removed in combinations(verts, size):
            if not is_strong(induce(d, [v for v in verts if v not in removed])[0]):
                return False
    return True


def induce(d: PartitionedDigraph, vertices) -> tuple:
    """Induced subdigraph on the given vertices, relabelled 1..|S|.

    Returns (subdigraph, old_of_new) where old_of_new[i-1] is the original id
    of new vertex i.  Partite indices are compacted so every index is used.
    """
    old = sorted(set(vertices))
    if not old:
        raise ValueError("induced subdigraph needs at least one vertex")
    new_of_old = {v: i + 1 for i, v in enumerate(old)}
    used_parts = sorted({d.part(v) for v in old})
    part_map = {p: i + 1 for i, p in enumerate(used_parts)}
    part = [part_map[d.part(v)] for v in old]
    arcs = [
        (new_of_old[u], new_of_old[v])
        for (u, v) in d.arcs
        if u in new_of_old and v in new_of_old
    ]
    return PartitionedDigraph(part, arcs, augmented=d.augmented), old


def contract_partite(d: PartitionedDigraph) -> PartitionedDigraph:
    """Contract each partite set to one vertex; the result is semicomplete."""
    d.require_smd()
    arcs = set()
    for u, v in d.arcs:
        i, j = d.part(u), d.part(v)
        if i != j:
            arcs.add((i, j))
    return PartitionedDigraph(list(range(1, d.c + 1)), arcs)


@dataclass(frozen=True)
class WeightedCompletion:
    """The base digraph plus all same-partite arcs at weight 1.

    The completed arc set is semicomplete: original arcs keep weight 0 and
    every ordered same-partite pair is added at weight 1.  Cross-partite
    pairs keep exactly the arcs of the base.
    """

    base: PartitionedDigraph
    added: frozenset

    @property
    def arcs(self) -> frozenset:
        return self.base.arcs | self.added

    def weight(self, arc: tuple) -> int:
        if arc in self.base.arcs:
            return 0
        if arc in self.added:
            return 1
        raise KeyError(f"{arc} is not an arc of the completion")


def weighted_completion(d: PartitionedDigraph) -> WeightedCompletion:
    d.require_smd()
    added = set()
    for u in d.vertices():
        for v in d.vertices():
            if u != v and d.same_part(u, v):
                added.add((u, v))
    return WeightedCompletion(base=d, added=frozenset(added))


def augment_terminals(d: PartitionedDigraph, terminals) -> PartitionedDigraph:
    """Add all arcs from each terminal to the rest of its partite set.

    The result may carry arcs inside partite sets; it is flagged as augmented
    so that operations requiring a plain instance reject it.
    """
    d.require_smd()
    x = set(terminals)
    for v in x:
        if not 1 <= v <= d.n:
            raise ValueError(f"terminal {v} out of range")
    new_arcs = set()
    for v in x:
        for w in d.vertices():
            if w != v and d.same_part(v, w) and (v, w) not in d.arcs:
                new_arcs.add((v, w))
    if not new_arcs:
        return d
    return PartitionedDigraph(d.part_vector, d.arcs | new_arcs, augmented=True)
