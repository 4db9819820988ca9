"""Forest of rooted trees with node merging, path compression into a single
node, and size-aware linking with edge payload handover.

Parent pointers are left stale when nodes merge; a union-find layer resolves
any stored pointer to the live representative. Tree sizes live on roots.
Path discovery climbs alternately from both endpoints with marking, so it
costs O(|path|) without any depth bookkeeping.
"""

from __future__ import annotations

from typing import Any, Optional

from .dsu import DsuForest


class BlockTreeError(Exception):
    pass


class SameNodeError(BlockTreeError):
    pass


class NotSameTreeError(BlockTreeError):
    pass


class SameTreeError(BlockTreeError):
    pass


class BlockTreeNode:
    __slots__ = ("id", "handle", "parent", "edge", "size", "item", "_mark")

    def __init__(self, node_id: int, handle: Any, item: int):
        self.id = node_id
        self.handle = handle
        self.parent: Optional[BlockTreeNode] = None
        self.edge: Any = None  # payload of (self, parent); None at roots
        self.size = 1  # meaningful at roots only
        self.item = item
        self._mark = False

    def __repr__(self) -> str:
        return f"BlockTreeNode({self.id})"


class BlockForest:
    def __init__(self) -> None:
        self._dsu = DsuForest()
        self._serial = 0
        self.reroot_touches = 0  # nodes handed over across all rerootings

    def new_node(self, handle: Any) -> BlockTreeNode:
        self._serial += 1
        node = BlockTreeNode(self._serial, handle, 0)
        node.item = self._dsu.make_set(node)
        return node

    # -- resolution helpers -------------------------------------------

    def representative(self, node: BlockTreeNode) -> BlockTreeNode:
        return self._dsu.label_of(node.item)

    def is_live(self, node: BlockTreeNode) -> bool:
        return self.representative(node) is node

    def parent_of(self, node: BlockTreeNode) -> Optional[BlockTreeNode]:
        p = node.parent
        return None if p is None else self.representative(p)

    def root_path(self, node: BlockTreeNode) -> list[BlockTreeNode]:
        """Live nodes from `node` up to its tree root, inclusive."""
        path = [self.representative(node)]
        while (p := self.parent_of(path[-1])) is not None:
            path.append(p)
        return path

    def tree_size(self, node: BlockTreeNode) -> int:
        return self.root_path(node)[-1].size

    # -- operations ----------------------------------------------------

    def compress_path(
        self, x: BlockTreeNode, y: BlockTreeNode
    ) -> tuple[list[BlockTreeNode], list[Any], BlockTreeNode]:
        """Merge the whole tree path from x to y into one node.

        Returns (path nodes ordered from x to y, their edge payloads in path
        order, the merged node). The merged node keeps the meet point's parent
        link and gets a fresh (unset) handle for the caller to bind.
        """
        x = self.representative(x)
        y = self.representative(y)
        if x is y:
            raise SameNodeError("path endpoints coincide")
        meet = self._find_meet(x, y)
        if meet is None:
            raise NotSameTreeError("nodes lie in different trees")

        up_x = self._climb_to(x, meet)
        up_y = self._climb_to(y, meet)
        nodes = up_x + up_y[-2::-1]
        payloads = [n.edge for n in up_x[:-1]] + [n.edge for n in up_y[-2::-1]]

        for n in nodes:
            if n is not meet:
                self._dsu.unite(n.item, meet.item, meet)
        root = self.root_path(meet)[-1]
        root.size -= len(nodes) - 1
        # the caller binds a fresh handle to the merged node; the stale one
        # stays readable so returned path nodes still identify themselves
        return nodes, payloads, meet

    def join_trees(self, x: BlockTreeNode, y: BlockTreeNode, payload: Any) -> None:
        """Link two trees with an edge (x, y) carrying `payload`.

        The smaller tree is rerooted at its endpoint (payloads handed child to
        parent along the way) and hung under the other endpoint.
        """
        x = self.representative(x)
        y = self.representative(y)
        path_x = self.root_path(x)
        path_y = self.root_path(y)
        rx, ry = path_x[-1], path_y[-1]
        if rx is ry:
            raise SameTreeError("nodes already in one tree")
        if rx.size <= ry.size:
            self._reroot(path_x)
            x.parent, x.edge = y, payload
            ry.size += rx.size
        else:
            self._reroot(path_y)
            y.parent, y.edge = x, payload
            rx.size += ry.size

    # -- internals -------------------------------------------------------

    def _find_meet(
        self, x: BlockTreeNode, y: BlockTreeNode
    ) -> Optional[BlockTreeNode]:
        marked = [x, y]
        x._mark = y._mark = True
        a, b = x, y
        a_done = b_done = False
        meet = None
        while meet is None and not (a_done and b_done):
            if not a_done:
                pa = self.parent_of(a)
                if pa is None:
                    a_done = True
                elif pa._mark:
                    meet = pa
                else:
                    pa._mark = True
                    marked.append(pa)
                    a = pa
            if meet is None and not b_done:
                pb = self.parent_of(b)
                if pb is None:
                    b_done = True
                elif pb._mark:
                    meet = pb
                else:
                    pb._mark = True
                    marked.append(pb)
                    b = pb
        for n in marked:
            n._mark = False
        return meet

    def _climb_to(
        self, start: BlockTreeNode, stop: BlockTreeNode
    ) -> list[BlockTreeNode]:
        path = [start]
        while path[-1] is not stop:
            path.append(self.parent_of(path[-1]))
        return path

    def _reroot(self, path: list[BlockTreeNode]) -> None:
        # path[0] becomes the root; each node on the way hands its edge
        # payload to its parent, per the child-to-parent handover rule.
        self.reroot_touches += len(path)
        for i in range(len(path) - 1, 0, -1):
            v, u = path[i], path[i - 1]
            v.parent = u
            v.edge = u.edge
        path[0].parent = None
        path[0].edge = None
