"""Cactus forest with cycle-path compression and cycle-joining.

Each cactus is stored as a rooted tree that alternates "real" nodes (the
cactus vertices) and "cycle" nodes. Every cycle node owns a circular doubly
linked list with one entry per cactus vertex on that cycle; entries carry the
payloads of the two incident cycle edges (entry.right_edge is the payload of
the edge towards entry.right, and always equals entry.right.left_edge).

A cycle node points at the list entry of its parent real node; the parent
keeps no back pointer, since one real node may be the parent of many cycles.
Non-parent members keep a bidirectional link with their entry.

Real nodes merge through a union-find layer, so stored real-node references
must be resolved through `representative` before use. Cycle nodes never
merge; they are discarded when a 2-entry list collapses, or split when a
squeeze detaches a segment into a fresh cycle.
"""

from __future__ import annotations

from typing import Any, Optional

from .dsu import DsuForest


class CactusError(Exception):
    pass


class SameNodeError(CactusError):
    pass


class NotSameCactusError(CactusError):
    pass


class DuplicateCactusError(CactusError):
    pass


class NotOnCycleError(CactusError):
    pass


class OriginCycle:
    """Accounting record for one cycle introduced by join_cactuses."""

    __slots__ = ("size", "walk_touches")

    def __init__(self, size: int):
        self.size = size
        self.walk_touches = 0


class ListEntry:
    __slots__ = ("real", "left", "right", "left_edge", "right_edge", "_mark")

    def __init__(self, real: "RealNode"):
        self.real = real
        self.left: "ListEntry" = self
        self.right: "ListEntry" = self
        self.left_edge: Any = None
        self.right_edge: Any = None
        self._mark = False


class RealNode:
    __slots__ = ("id", "handle", "parent", "entry", "size", "item", "_mark")

    def __init__(self, node_id: int, handle: Any):
        self.id = node_id
        self.handle = handle
        self.parent: Optional[CycleNode] = None
        self.entry: Optional[ListEntry] = None  # member entry in parent's list
        self.size = 1  # meaningful at roots only
        self.item = 0
        self._mark = False

    def __repr__(self) -> str:
        return f"RealNode({self.id})"


class CycleNode:
    __slots__ = ("id", "parent", "parent_entry", "origin", "_mark")

    def __init__(self, node_id: int, origin: OriginCycle):
        self.id = node_id
        self.parent: Optional[RealNode] = None  # may be stale; resolve via dsu
        self.parent_entry: Optional[ListEntry] = None
        self.origin = origin
        self._mark = False

    def __repr__(self) -> str:
        return f"CycleNode({self.id})"


class CactusForest:
    def __init__(self) -> None:
        self._dsu = DsuForest()
        self._serial = 0
        self._cycles: set[CycleNode] = set()
        self.origins: list[OriginCycle] = []
        self.reroot_touches = 0

    def new_node(self, handle: Any) -> RealNode:
        self._serial += 1
        node = RealNode(self._serial, handle)
        node.item = self._dsu.make_set(node)
        return node

    # -- resolution helpers ---------------------------------------------

    def representative(self, node: RealNode) -> RealNode:
        return self._dsu.label_of(node.item)

    def is_live(self, node: RealNode) -> bool:
        return self.representative(node) is node

    def cycle_parent(self, cyc: CycleNode) -> RealNode:
        return self.representative(cyc.parent)

    def root_path(self, node: RealNode) -> list:
        """Alternating real/cycle nodes from `node` up to its cactus root."""
        path: list = [self.representative(node)]
        while (cyc := path[-1].parent) is not None:
            path.append(cyc)
            path.append(self.cycle_parent(cyc))
        return path

    def cactus_size(self, node: RealNode) -> int:
        return self.root_path(node)[-1].size

    def cycles(self) -> set[CycleNode]:
        return set(self._cycles)

    # -- operations -------------------------------------------------------

    def compress_cycle_path(
        self, x: RealNode, y: RealNode
    ) -> tuple[list[RealNode], list[Any], RealNode]:
        """Merge the cycle-path from x to y into a single real node.

        Returns (cycle-path nodes ordered from x to y, payloads of the cactus
        edges that directly join consecutive path members, the merged node).
        Every involved cycle is squeezed at its two path members; residual
        2-entry lists where the members coincide are dissolved.
        """
        x = self.representative(x)
        y = self.representative(y)
        if x is y:
            raise SameNodeError("cycle-path endpoints coincide")
        meet = self._find_meet(x, y)
        if meet is None:
            raise NotSameCactusError("nodes lie in different cactuses")

        up_x = self._climb_to(x, meet)
        up_y = self._climb_to(y, meet)
        if isinstance(meet, RealNode):
            reals_x = up_x[::2]
            reals_y = up_y[::2]
            nodes = reals_x + reals_y[-2::-1]
        else:
            reals_x = up_x[:-1:2]
            reals_y = up_y[:-1:2]
            nodes = reals_x + reals_y[::-1]

        payloads: list[Any] = []
        for part in (up_x, up_y):
            stop = len(part) - 1 if isinstance(meet, RealNode) else len(part) - 2
            for i in range(0, stop - 1, 2):
                child = self.representative(part[i])
                anc = self.representative(part[i + 2])
                payloads.extend(self._squeeze_anc_desc(child, anc, part[i + 1]))
        if isinstance(meet, CycleNode):
            u = self.representative(up_x[-2])
            v = self.representative(up_y[-2])
            payloads.extend(self._squeeze_siblings(u, v, meet))

        merged = self.representative(x)
        assert merged is self.representative(y)
        self.root_path(merged)[-1].size -= len(nodes) - 1
        # the caller binds a fresh handle to the merged node; the stale one
        # stays readable so returned path nodes still identify themselves
        return nodes, payloads, merged

    def squeeze_cycle(self, u: RealNode, v: RealNode, cyc: CycleNode) -> list[Any]:
        """Merge two distinct members of one cycle, splitting its list.

        Returns the payloads of the direct edges between u and v on the cycle
        (0, 1, or 2 of them). u and v must be related as child/parent of the
        cycle or as two of its child members.
        """
        u = self.representative(u)
        v = self.representative(v)
        if u is v:
            raise NotOnCycleError("squeeze endpoints coincide")
        u_child = u.parent is cyc
        v_child = v.parent is cyc
        if u_child and v_child:
            return self._squeeze_siblings(u, v, cyc)
        pr = self.cycle_parent(cyc)
        if u_child and pr is v:
            return self._squeeze_anc_desc(u, v, cyc)
        if v_child and pr is u:
            return self._squeeze_anc_desc(v, u, cyc)
        raise NotOnCycleError("nodes are not both members of the cycle")

    def join_cactuses(self, xs: list[RealNode], payloads: list[Any]) -> None:
        """Link k >= 2 pairwise distinct cactuses with a new cycle x1..xk.

        payloads[i] is carried by the cycle edge (x_i, x_{i+1 mod k}). Every
        cactus except a largest is rerooted at its attachment node.
        """
        k = len(xs)
        if k < 2 or len(payloads) != k:
            raise CactusError("need k >= 2 nodes and k payloads")
        lives = [self.representative(x) for x in xs]
        paths = [self.root_path(r) for r in lives]
        roots = [p[-1] for p in paths]
        if len({id(r) for r in roots}) != k:
            raise DuplicateCactusError("attachment nodes share a cactus")

        big = max(range(k), key=lambda i: (roots[i].size, i))
        total = sum(r.size for r in roots)
        for i in range(k):
            if i != big:
                self._reroot(paths[i])

        origin = OriginCycle(k)
        self.origins.append(origin)
        self._serial += 1
        cyc = CycleNode(self._serial, origin)
        entries = [ListEntry(r) for r in lives]
        for i in range(k):
            e, nxt = entries[i], entries[(i + 1) % k]
            e.right = nxt
            nxt.left = e
            e.right_edge = payloads[i]
            nxt.left_edge = payloads[i]
        for i in range(k):
            if i != big:
                lives[i].parent = cyc
                lives[i].entry = entries[i]
        cyc.parent = lives[big]
        cyc.parent_entry = entries[big]
        self._cycles.add(cyc)
        roots[big].size = total

    # -- climbing ----------------------------------------------------------

    def _find_meet(self, x: RealNode, y: RealNode):
        marked = [x, y]
        x._mark = y._mark = True
        a, b = x, y
        a_done = b_done = False
        meet = None
        while meet is None and not (a_done and b_done):
            for side in (0, 1):
                cur, done = (a, a_done) if side == 0 else (b, b_done)
                if done or meet is not None:
                    continue
                up = cur.parent if isinstance(cur, RealNode) else self.cycle_parent(cur)
                if up is None:
                    if side == 0:
                        a_done = True
                    else:
                        b_done = True
                elif up._mark:
                    meet = up
                else:
                    up._mark = True
                    marked.append(up)
                    if side == 0:
                        a = up
                    else:
                        b = up
        for n in marked:
            n._mark = False
        return meet

    def _climb_to(self, start: RealNode, stop) -> list:
        path: list = [start]
        while path[-1] is not stop:
            cur = path[-1]
            path.append(cur.parent if isinstance(cur, RealNode) else self.cycle_parent(cur))
        return path

    # -- squeezing ----------------------------------------------------------

    def _merge(self, dead: RealNode, live: RealNode) -> None:
        self._dsu.unite(dead.item, live.item, live)

    def _squeeze_anc_desc(self, child: RealNode, anc: RealNode, cyc: CycleNode) -> list[Any]:
        ue = child.entry
        pe = cyc.parent_entry
        if ue.left is pe and ue.right is pe:
            # child was the only other member; the 2-cycle dissolves
            out = [ue.left_edge, ue.right_edge]
            self._cycles.discard(cyc)
            self._merge(child, anc)
            return out
        if ue.left is pe:
            out = [ue.left_edge]
            ue.right.left = pe
            pe.right = ue.right
            pe.right_edge = ue.right_edge
            self._merge(child, anc)
            return out
        if ue.right is pe:
            out = [ue.right_edge]
            ue.left.right = pe
            pe.left = ue.left
            pe.left_edge = ue.left_edge
            self._merge(child, anc)
            return out
        # no direct edge: detach the shorter internal arc into a new cycle
        z_at_v, seg = self._shorter_arc(ue, pe, cyc.origin)
        new_cyc = self._split_segment(ue, pe, anc, z_at_v, seg, cyc.origin)
        new_cyc.parent = anc
        self._merge(child, anc)
        return []

    def _squeeze_siblings(self, u: RealNode, v: RealNode, cyc: CycleNode) -> list[Any]:
        ue, ve = u.entry, v.entry
        if ue.left is ve:
            out = [ue.left_edge]
            ue.right.left = ve
            ve.right = ue.right
            ve.right_edge = ue.right_edge
            self._merge(u, v)
            return out
        if ue.right is ve:
            out = [ue.right_edge]
            ue.left.right = ve
            ve.left = ue.left
            ve.left_edge = ue.left_edge
            self._merge(u, v)
            return out
        z_at_v, seg = self._shorter_arc(ue, ve, cyc.origin)
        pe = cyc.parent_entry
        if pe not in seg:
            new_cyc = self._split_segment(ue, ve, v, z_at_v, seg, cyc.origin)
            new_cyc.parent = v
        else:
            # the old parent entry falls inside the detached segment: that
            # segment keeps the parent entry and v's own entry, while the
            # remaining arc gets a fresh entry for v as its parent entry
            self._split_segment_with_parent(ue, ve, u, v, cyc, z_at_v, seg)
        self._merge(u, v)
        return []

    def _shorter_arc(
        self, ue: ListEntry, ve: ListEntry, origin: OriginCycle
    ) -> tuple[bool, list[ListEntry]]:
        """Alternating left-walks from both entries; returns (hit v?, arc).

        The arc is the internal segment strictly between the endpoints on the
        side of whichever walker finished first: [ue.left .. ve.right] when
        the u-walker hit ve, else [ve.left .. ue.right]. Ties favour the
        u-walker, so equal arcs resolve to the segment reached from u.
        """
        ue._mark = ve._mark = True
        marked = [ue, ve]
        wa, wb = ue, ve
        seen_a: list[ListEntry] = []
        seen_b: list[ListEntry] = []
        z = None
        touches = 0
        while z is None:
            wa = wa.left
            touches += 1
            if wa._mark:
                z = wa
                break
            wa._mark = True
            marked.append(wa)
            seen_a.append(wa)
            wb = wb.left
            touches += 1
            if wb._mark:
                z = wb
                break
            wb._mark = True
            marked.append(wb)
            seen_b.append(wb)
        for e in marked:
            e._mark = False
        origin.walk_touches += touches
        return (z is ve, seen_a) if z is ve else (False, seen_b)

    def _split_segment(
        self,
        ue: ListEntry,
        ve: ListEntry,
        survivor: RealNode,
        z_at_v: bool,
        seg: list[ListEntry],
        origin: OriginCycle,
    ) -> CycleNode:
        """Detach `seg` plus a fresh entry for the survivor into a new cycle.

        Handles the common mechanics of the ancestor/descendant split and the
        sibling split whose segment misses the parent entry. The caller sets
        the new cycle's parent real node. ue is discarded from the old list.
        """
        self._serial += 1
        new_cyc = CycleNode(self._serial, origin)
        self._cycles.add(new_cyc)
        nve = ListEntry(survivor)
        if z_at_v:
            # seg = [ue.left .. ve.right]
            first, last = seg[0], seg[-1]
            nve.right = last
            last.left = nve
            nve.left = first
            first.right = nve
            nve.right_edge = ve.right_edge
            nve.left_edge = ue.left_edge
            ue.right.left = ve
            ve.right = ue.right
            ve.right_edge = ue.right_edge
        else:
            # seg = [ve.left .. ue.right]
            first, last = seg[0], seg[-1]
            nve.left = first
            first.right = nve
            nve.right = last
            last.left = nve
            nve.left_edge = ve.left_edge
            nve.right_edge = ue.right_edge
            ue.left.right = ve
            ve.left = ue.left
            ve.left_edge = ue.left_edge
        for e in seg:
            r = self.representative(e.real)
            r.parent = new_cyc
        new_cyc.parent_entry = nve
        return new_cyc

    def _split_segment_with_parent(
        self,
        ue: ListEntry,
        ve: ListEntry,
        u: RealNode,
        v: RealNode,
        cyc: CycleNode,
        z_at_v: bool,
        seg: list[ListEntry],
    ) -> None:
        pe = cyc.parent_entry
        self._serial += 1
        new_cyc = CycleNode(self._serial, cyc.origin)
        self._cycles.add(new_cyc)
        nve = ListEntry(v)
        if z_at_v:
            # seg = [ue.left .. ve.right]; remaining arc = [ue.right .. ve.left]
            old_left, old_left_edge = ve.left, ve.left_edge
            ve.left = ue.left
            ue.left.right = ve
            ve.left_edge = ue.left_edge
            nve.right = ue.right
            ue.right.left = nve
            nve.right_edge = ue.right_edge
            nve.left = old_left
            old_left.right = nve
            nve.left_edge = old_left_edge
        else:
            # seg = [ve.left .. ue.right]; remaining arc = [ve.right .. ue.left]
            old_right, old_right_edge = ve.right, ve.right_edge
            ve.right = ue.right
            ue.right.left = ve
            ve.right_edge = ue.right_edge
            nve.left = ue.left
            ue.left.right = nve
            nve.left_edge = ue.left_edge
            nve.right = old_right
            old_right.left = nve
            nve.right_edge = old_right_edge
        for e in seg:
            if e is not pe:
                r = self.representative(e.real)
                r.parent = new_cyc
        v.parent = new_cyc
        new_cyc.parent_entry = pe
        new_cyc.parent = self.representative(pe.real)
        cyc.parent_entry = nve
        cyc.parent = v

    # -- rerooting -----------------------------------------------------------

    def _reroot(self, path: list) -> None:
        """Make path[0] the root of its cactus tree (path from root_path)."""
        self.reroot_touches += len(path)
        if len(path) == 1:
            return
        # triples (upper real, cycle, lower real) processed top-down; each
        # real hands its member entry upward and adopts the old parent entry
        for i in range(len(path) - 1, 1, -2):
            upper, cyc, lower = path[i], path[i - 1], path[i - 2]
            old_pe = cyc.parent_entry
            cyc.parent_entry = lower.entry
            cyc.parent = lower
            upper.parent = cyc
            upper.entry = old_pe
        path[0].parent = None
        path[0].entry = None

    # -- introspection --------------------------------------------------------

    def expanded_edges(self) -> list[tuple[RealNode, RealNode, Any]]:
        """The explicit cactus edges (live endpoints, payload), one per
        circular-list link, across the whole forest."""
        out = []
        for cyc in self._cycles:
            e = cyc.parent_entry
            while True:
                out.append(
                    (
                        self.representative(e.real),
                        self.representative(e.right.real),
                        e.right_edge,
                    )
                )
                e = e.right
                if e is cyc.parent_entry:
                    break
        return out

    def check_lists(self) -> None:
        """Ring-level invariants: link symmetry, shared edge payloads,
        list length >= 2, member entries bound bidirectionally."""
        for cyc in self._cycles:
            e = cyc.parent_entry
            length = 0
            while True:
                if e.right.left is not e or e.left.right is not e:
                    raise CactusError(f"broken ring links in {cyc}")
                if e.right_edge is not e.right.left_edge:
                    raise CactusError(f"edge payload mismatch in {cyc}")
                r = self.representative(e.real)
                if e is not cyc.parent_entry and (r.entry is not e or r.parent is not cyc):
                    raise CactusError(f"member binding broken in {cyc}")
                length += 1
                e = e.right
                if e is cyc.parent_entry:
                    break
            if length < 2:
                raise CactusError(f"cycle {cyc} shorter than 2")
