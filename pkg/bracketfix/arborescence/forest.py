"""
Rooted forests stored as parent maps

RootedForest is what simulate and the exact solvers hand out; WorkForest is the
fixer's partial solution Q, which only ever gains arcs and keeps guessed sizes
current as it does.
"""

import logging
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from ..models.errors import InvalidForest, PreconditionViolated

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


class RootedForest:
    """Disjoint union of arborescences over a fixed vertex set"""

    def __init__(self, vertices: Iterable[int], arcs: Iterable[Arc] = ()):
        self._vertices: Tuple[int, ...] = tuple(sorted(set(vertices)))
        self._parent: Dict[int, int] = {}
        self._children: Dict[int, List[int]] = {v: [] for v in self._vertices}
        for u, v in arcs:
            self._link(u, v)
        self._check_acyclic()

    def _link(self, u: int, v: int) -> None:
        if u not in self._children or v not in self._children:
            raise InvalidForest(f"arc ({u}, {v}) leaves the vertex set")
        if u == v:
            raise InvalidForest(f"self-loop on {u}")
        if v in self._parent:
            raise InvalidForest(f"{v} already has parent {self._parent[v]}")
        self._parent[v] = u
        self._children[u].append(v)

    def _check_acyclic(self) -> None:
        settled: Set[int] = set()
        for start in self._vertices:
            path = []
            node: Optional[int] = start
            on_path: Set[int] = set()
            while node is not None and node not in settled:
                if node in on_path:
                    raise InvalidForest(f"cycle through {node}")
                on_path.add(node)
                path.append(node)
                node = self._parent.get(node)
            settled.update(path)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._children

    def parent(self, v: int) -> Optional[int]:
        return self._parent.get(v)

    def children(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(self._children[v]))

    def siblings(self, v: int) -> Tuple[int, ...]:
        p = self._parent.get(v)
        if p is None:
            return ()
        return tuple(c for c in self.children(p) if c != v)

    def descendants(self, v: int) -> Set[int]:
        """Desc(v), including v"""
        seen = {v}
        stack = [v]
        while stack:
            for c in self._children[stack.pop()]:
                seen.add(c)
                stack.append(c)
        return seen

    def roots(self) -> Tuple[int, ...]:
        return tuple(v for v in self._vertices if v not in self._parent)

    def arcs(self) -> List[Arc]:
        return sorted((u, v) for v, u in self._parent.items())

    def arc_set(self) -> FrozenSet[Arc]:
        return frozenset((u, v) for v, u in self._parent.items())

    def is_ancestor(self, a: int, v: int) -> bool:
        """True when a is v or lies on the path from v up to its root"""
        node: Optional[int] = v
        while node is not None:
            if node == a:
                return True
            node = self._parent.get(node)
        return False

    def postorder(self, root: int) -> List[int]:
        """Vertices of the subtree at root, children before parents"""
        order = []
        stack = [(root, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                order.append(node)
                continue
            stack.append((node, True))
            for c in self._children[node]:
                stack.append((c, False))
        return order

    def __repr__(self) -> str:
        return f"RootedForest(vertices={len(self._vertices)}, arcs={self.arcs()})"


class WorkForest(RootedForest):
    """
    Partial solution Q: arcs are only ever added, and guessed sizes stay current

    Vertices in `fixed` have guessed size 2^fixed[v] whatever hangs below them;
    every other vertex has 1 plus the guessed sizes of its children.
    """

    def __init__(self, vertices: Iterable[int], arcs: Iterable[Arc] = (), fixed: Optional[Mapping[int, int]] = None):
        super().__init__(vertices, arcs)
        self._fixed: Dict[int, int] = dict(fixed or {})
        self._beta: Dict[int, int] = {}
        for root in self.roots():
            for node in self.postorder(root):
                self._beta[node] = self._compute_beta(node)

    def _compute_beta(self, node: int) -> int:
        if node in self._fixed:
            return 1 << self._fixed[node]
        return 1 + sum(self._beta[c] for c in self._children[node])

    def beta(self, v: int) -> int:
        return self._beta[v]

    def add_arc(self, x: int, y: int) -> None:
        """
        Hang the parentless vertex y under x

        Raises:
            PreconditionViolated: y already has a parent, or x lies below y
        """
        if y in self._parent:
            raise PreconditionViolated(f"{y} already has parent {self._parent[y]}")
        if self.is_ancestor(y, x):
            raise PreconditionViolated(f"arc ({x}, {y}) would close a cycle")
        self._parent[y] = x
        self._children[x].append(y)
        delta = self._beta[y]
        node: Optional[int] = x
        while node is not None and node not in self._fixed:
            self._beta[node] += delta
            node = self._parent.get(node)

    def freeze(self) -> RootedForest:
        return RootedForest(self._vertices, self.arcs())
