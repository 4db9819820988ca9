"""Incremental maintenance of the maximal 3-edge-connected subgraphs.

The engine keeps a decomposition tree whose levels cycle through connected
components, 2-edge-connected components, and 3-edge-connected components;
leaves are exactly the maximal 3-edge-connected subgraphs of the inserted
graph. Non-leaf component nodes carry a block tree of their 2-eccs, non-leaf
2-ecc nodes carry a cactus of their 3-eccs, and a vertex union-find labelled
by leaves answers same-subgraph queries.

Edge insertion locates the nearest common ancestor of the two endpoint leaves
and rewrites only that node's attached structure; interconnection edges that
fall inside a freshly merged 3-ecc are re-inserted depth-first, which pushes
them to deeper levels exactly once each.
"""

from __future__ import annotations

from typing import Optional

from .blockforest import BlockForest
from .cactusforest import CactusForest
from .dsu import DsuForest
from .graph import SelfLoopError, UnknownVertexError

KIND_ROOT = "root"
KIND_1ECC = "ecc1"
KIND_2ECC = "ecc2"
KIND_3ECC = "ecc3"

_CHILD_KIND = {
    KIND_ROOT: KIND_1ECC,
    KIND_1ECC: KIND_2ECC,
    KIND_2ECC: KIND_3ECC,
    KIND_3ECC: KIND_1ECC,
}


class DecompError(Exception):
    pass


class DecompNode:
    __slots__ = (
        "id",
        "kind",
        "parent",
        "children",
        "level",
        "leaf",
        "bt_node",
        "cx_node",
        "dsu_item",
        "_mark",
    )

    def __init__(self, node_id: int, kind: str, parent: Optional["DecompNode"], level: int):
        self.id = node_id
        self.kind = kind
        self.parent = parent
        self.children: set[DecompNode] = set()
        self.level = level
        self.leaf = False
        self.bt_node = None  # block-tree node of a 2-ecc inside its parent's tree
        self.cx_node = None  # cactus real node of a 3-ecc inside its parent's cactus
        self.dsu_item: Optional[int] = None  # any vertex item of a leaf's class
        self._mark = False

    def __repr__(self) -> str:
        return f"DecompNode({self.id}, {self.kind}, level={self.level})"


class DecompTree:
    def __init__(self) -> None:
        self._serial = 0
        self.root = self._new_node(KIND_ROOT, None, 0)
        self._dsu = DsuForest()
        self._bf = BlockForest()
        self._cf = CactusForest()
        self.n_vertices = 0
        self.affecting_insertions = 0
        self.total_insert_calls = 0

    def _new_node(self, kind: str, parent: Optional[DecompNode], level: int) -> DecompNode:
        self._serial += 1
        node = DecompNode(self._serial, kind, parent, level)
        if parent is not None:
            parent.children.add(node)
        return node

    # -- vertex / query surface ------------------------------------------

    def insert_vertex(self) -> int:
        if self.root.leaf:
            self._demote_root_leaf()
        v = self.n_vertices + 1
        self.n_vertices = v
        c3 = self._new_chain(self.root)
        item = self._dsu.make_set(c3)
        assert item == v - 1
        c3.dsu_item = item
        return v

    def _new_chain(self, top: DecompNode) -> DecompNode:
        """Fresh 1-ecc/2-ecc/3-ecc chain below `top`; returns the leaf."""
        c1 = self._new_node(KIND_1ECC, top, top.level + 1)
        c2 = self._new_node(KIND_2ECC, c1, top.level + 2)
        c3 = self._new_node(KIND_3ECC, c2, top.level + 3)
        c3.leaf = True
        c2.bt_node = self._bf.new_node(c2)
        c3.cx_node = self._cf.new_node(c3)
        return c3

    def _demote_root_leaf(self) -> None:
        # the whole graph had condensed into the root; its class moves to a
        # fresh chain so the root can take new components again
        c3 = self._new_chain(self.root)
        self._dsu.set_label(self.root.dsu_item, c3)
        c3.dsu_item = self.root.dsu_item
        self.root.dsu_item = None
        self.root.leaf = False

    def _check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.n_vertices):
            raise UnknownVertexError(f"unknown vertex {v}")

    def _leaf_of(self, v: int) -> DecompNode:
        return self._dsu.label_of(v - 1)

    def same_max_3ec(self, x: int, y: int) -> bool:
        self._check_vertex(x)
        self._check_vertex(y)
        return self._dsu.root_of(x - 1) == self._dsu.root_of(y - 1)

    def partition(self) -> list[set[int]]:
        classes = [
            {i + 1 for i in self._dsu.members(r)} for r in self._dsu.roots()
        ]
        return sorted(classes, key=min)

    def subgraph_of(self, x: int) -> set[int]:
        self._check_vertex(x)
        root = self._dsu.root_of(x - 1)
        return {i + 1 for i in self._dsu.members(root)}

    def count(self) -> int:
        return self._dsu.num_sets

    # -- edge insertion -----------------------------------------------------

    def insert_edge(self, x: int, y: int) -> None:
        self._check_vertex(x)
        self._check_vertex(y)
        if x == y:
            raise SelfLoopError(f"self-loop at vertex {x}")
        if self._dsu.root_of(x - 1) != self._dsu.root_of(y - 1):
            self.affecting_insertions += 1
        self._insert(x, y)

    def _insert(self, x: int, y: int) -> None:
        while True:
            self.total_insert_calls += 1
            leaf_x = self._leaf_of(x)
            leaf_y = self._leaf_of(y)
            if leaf_x is leaf_y:
                return
            nca, path_x, path_y = self._nca(leaf_x, leaf_y)
            if nca.kind in (KIND_ROOT, KIND_3ECC):
                self._insert_at_component(path_x, path_y, x, y)
                return
            if nca.kind == KIND_1ECC:
                self._insert_at_1ecc(nca, path_x, path_y, x, y)
                return
            # nca is a 2-ecc node: compress the cycle-path on its cactus
            c1, c2 = path_x[-1], path_y[-1]
            q_nodes, q_payloads, z_real = self._cf.compress_cycle_path(
                c1.cx_node, c2.cx_node
            )
            if len(q_nodes) == len(nca.children):
                # the whole 2-ecc became 3-edge-connected
                self._condense(nca, z_real)
                return
            self._merge3ecc(nca, [q.handle for q in q_nodes], q_payloads, z_real)
            # repeat the insertion; it now lands strictly deeper

    def _insert_at_component(self, path_x, path_y, x: int, y: int) -> None:
        """The new edge bridges two connected components: merge the 1-ecc
        children and link their block trees at the 2-eccs holding x and y."""
        c1, c2 = path_x[-1], path_y[-1]
        u2, v2 = path_x[-2], path_y[-2]
        self._bf.join_trees(u2.bt_node, v2.bt_node, (x, y))
        self._merge_siblings([c1, c2])

    def _insert_at_1ecc(self, nca, path_x, path_y, x: int, y: int) -> None:
        """The new edge joins two 2-eccs: compress the block-tree path,
        merge cycle-paths inside every 2-ecc along it, then merge them all
        and join their cactuses along the induced cycle."""
        c1, c2 = path_x[-1], path_y[-1]
        b_nodes, b_payloads, z_bt = self._bf.compress_path(c1.bt_node, c2.bt_node)
        xs = [bn.handle for bn in b_nodes]
        k = len(xs)
        lvl2, lvl3 = nca.level + 1, nca.level + 2

        # orient bridge payload (u, v) so entry[i] lands in xs[i] and
        # exit[i] in xs[i] as well: enters[i] comes from the previous bridge
        enters = [x]
        exits = []
        for i, (u, v) in enumerate(b_payloads):
            if self._ancestor_at(u, lvl2) is xs[i]:
                exits.append(u)
                enters.append(v)
            else:
                exits.append(v)
                enters.append(u)
        exits.append(y)

        merged3 = []
        for i in range(k):
            a = self._ancestor_at(enters[i], lvl3)
            b = self._ancestor_at(exits[i], lvl3)
            if a is b:
                merged3.append(a)
                continue
            q_nodes, q_payloads, z_real = self._cf.compress_cycle_path(
                a.cx_node, b.cx_node
            )
            d = self._merge3ecc(xs[i], [q.handle for q in q_nodes], q_payloads, z_real)
            merged3.append(d)

        survivor = self._merge_siblings(xs)
        z_bt.handle = survivor
        survivor.bt_node = z_bt
        self._cf.join_cactuses(
            [d.cx_node for d in merged3], b_payloads + [(x, y)]
        )

    def _merge3ecc(self, parent2ecc, d_nodes, payloads, z_real) -> DecompNode:
        """Merge 3-ecc siblings into one node and re-insert the cactus edges
        that became internal to it. Former leaves get a fresh trivial chain
        first, so the merged node's subtree decomposes them properly."""
        for d in d_nodes:
            if d.leaf:
                self._expand_leaf(d)
        survivor = self._merge_siblings(d_nodes)
        z_real.handle = survivor
        survivor.cx_node = z_real
        for (u, v) in payloads:
            self._insert(u, v)
        return survivor

    def _expand_leaf(self, d: DecompNode) -> None:
        c3 = self._new_chain(d)
        d.leaf = False
        self._dsu.set_label(d.dsu_item, c3)
        c3.dsu_item = d.dsu_item
        d.dsu_item = None

    def _merge_siblings(self, nodes: list[DecompNode]) -> DecompNode:
        """Redirect children of the smaller nodes into the one with the most
        children; the others are discarded from the tree."""
        survivor = max(nodes, key=lambda nd: len(nd.children))
        parent = survivor.parent
        for nd in nodes:
            if nd is survivor:
                continue
            for ch in nd.children:
                ch.parent = survivor
            survivor.children |= nd.children
            parent.children.discard(nd)
        return survivor

    def _condense(self, nca: DecompNode, z_real) -> None:
        """The 2-ecc `nca` became 3-edge-connected: collapse per the two
        grandparent cases."""
        p1 = nca.parent
        grand = p1.parent
        if len(grand.children) == 1 and len(p1.children) == 1:
            # nca was the only 2-ecc below `grand`: grand itself is the new leaf
            leaves = self._collect_leaves(grand)
            self._unite_leaves(leaves, grand)
            grand.children = set()
            grand.leaf = True
        else:
            leaves = self._collect_leaves(nca)
            self._serial += 1
            d = DecompNode(self._serial, KIND_3ECC, nca, nca.level + 1)
            d.leaf = True
            self._unite_leaves(leaves, d)
            nca.children = {d}
            # the compressed cactus is now a single real node; rebind it
            z_real.handle = d
            d.cx_node = z_real

    def _collect_leaves(self, top: DecompNode) -> list[DecompNode]:
        out = []
        stack = list(top.children)
        while stack:
            nd = stack.pop()
            if nd.leaf:
                out.append(nd)
            else:
                stack.extend(nd.children)
        return out

    def _unite_leaves(self, leaves: list[DecompNode], new_leaf: DecompNode) -> None:
        base = leaves[0].dsu_item
        for lf in leaves[1:]:
            self._dsu.unite(base, lf.dsu_item, None)
            lf.dsu_item = None
        leaves[0].dsu_item = None
        self._dsu.set_label(base, new_leaf)
        new_leaf.dsu_item = base

    # -- tree navigation ------------------------------------------------------

    def _nca(self, leaf_x: DecompNode, leaf_y: DecompNode):
        marked = [leaf_x, leaf_y]
        leaf_x._mark = leaf_y._mark = True
        a, b = leaf_x, leaf_y
        meet = None
        while meet is None:
            advanced = False
            if a.parent is not None:
                advanced = True
                if a.parent._mark:
                    meet = a.parent
                else:
                    a = a.parent
                    a._mark = True
                    marked.append(a)
            if meet is None and b.parent is not None:
                advanced = True
                if b.parent._mark:
                    meet = b.parent
                else:
                    b = b.parent
                    b._mark = True
                    marked.append(b)
            if not advanced:
                for n in marked:
                    n._mark = False
                raise DecompError("leaves in disjoint trees")
        for n in marked:
            n._mark = False
        path_x = [leaf_x]
        while path_x[-1].parent is not meet:
            path_x.append(path_x[-1].parent)
        path_y = [leaf_y]
        while path_y[-1].parent is not meet:
            path_y.append(path_y[-1].parent)
        return meet, path_x, path_y

    def _ancestor_at(self, v: int, level: int) -> DecompNode:
        node = self._leaf_of(v)
        while node.level > level:
            node = node.parent
        if node.level != level:
            raise DecompError(f"vertex {v} has no ancestor at level {level}")
        return node

    # -- structural audit -------------------------------------------------------

    def validate(self) -> None:
        """Debug audit: kind cycling, levels, handle bijections, and the
        leaf/DSU correspondence. Raises DecompError on any violation."""
        leaves = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.leaf:
                if node.children:
                    raise DecompError(f"leaf {node} has children")
                if node.kind not in (KIND_3ECC, KIND_ROOT):
                    raise DecompError(f"leaf {node} has kind {node.kind}")
                leaves.append(node)
            elif not node.children and node is not self.root:
                raise DecompError(f"internal {node} has no children")
            for ch in node.children:
                if ch.parent is not node:
                    raise DecompError(f"parent link broken at {ch}")
                if ch.level != node.level + 1:
                    raise DecompError(f"level broken at {ch}")
                if ch.kind != _CHILD_KIND[node.kind]:
                    raise DecompError(f"kind cycle broken at {ch}")
                stack.append(ch)
            if node.kind == KIND_1ECC and not node.leaf:
                self._check_block_binding(node)
            if node.kind == KIND_2ECC and not node.leaf:
                self._check_cactus_binding(node)
        if len(leaves) != self._dsu.num_sets:
            raise DecompError("leaf count disagrees with class count")
        for lf in leaves:
            if lf.dsu_item is None or self._dsu.label_of(lf.dsu_item) is not lf:
                raise DecompError(f"class label broken at leaf {lf}")

    def _check_block_binding(self, node: DecompNode) -> None:
        trees = set()
        for ch in node.children:
            bn = ch.bt_node
            if bn is None or not self._bf.is_live(bn) or bn.handle is not ch:
                raise DecompError(f"block binding broken under {node}")
            trees.add(id(self._bf.root_path(bn)[-1]))
        if len(trees) != 1:
            raise DecompError(f"children of {node} span several block trees")
        any_child = next(iter(node.children))
        if self._bf.tree_size(any_child.bt_node) != len(node.children):
            raise DecompError(f"block tree size mismatch under {node}")

    def _check_cactus_binding(self, node: DecompNode) -> None:
        roots = set()
        for ch in node.children:
            rn = ch.cx_node
            if rn is None or not self._cf.is_live(rn) or rn.handle is not ch:
                raise DecompError(f"cactus binding broken under {node}")
            roots.add(id(self._cf.root_path(rn)[-1]))
        if len(roots) != 1:
            raise DecompError(f"children of {node} span several cactuses")
        any_child = next(iter(node.children))
        if self._cf.cactus_size(any_child.cx_node) != len(node.children):
            raise DecompError(f"cactus size mismatch under {node}")
