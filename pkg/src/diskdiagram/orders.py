"""Strict partial orders, cyclic orders, and small binary relations.

Vertices are identified by strings throughout.  A strict partial order is
stored transitively closed, so membership tests are single lookups.  Cyclic
orders are stored as a canonical circular sequence; with two or fewer
elements the arrangement carries no information and only the carrier is
kept.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NotASubset,
    NotConvenient,
    NotInCarrier,
    OrderCycle,
    TooSmallCarrier,
)


def transitive_closure(pairs):
    """Closure of a set of (a, b) pairs under transitivity."""
    succ = {}
    for a, b in pairs:
        succ.setdefault(a, set()).add(b)
    closed = set()
    for start in succ:
        seen = set()
        stack = list(succ[start])
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(succ.get(x, ()))
        closed.update((start, x) for x in seen)
    return closed


@dataclass(frozen=True)
class StrictPartialOrder:
    """A transitively closed, irreflexive, antisymmetric relation."""

    carrier: frozenset
    pairs: frozenset  # (a, b) means a < b

    @classmethod
    def from_pairs(cls, carrier, pairs):
        """Build the order generated by ``pairs``.

        Raises OrderCycle if the closure would relate some element to
        itself, and NotInCarrier for pairs mentioning unknown elements.
        """
        carrier = frozenset(carrier)
        for a, b in pairs:
            for x in (a, b):
                if x not in carrier:
                    raise NotInCarrier(x)
        closed = transitive_closure(pairs)
        for a, b in closed:
            if a == b or (b, a) in closed:
                raise OrderCycle(_cycle_witness(pairs, a))
        return cls(carrier, frozenset(closed))

    def lt(self, a, b):
        return (a, b) in self.pairs

    def comparable(self, a, b):
        return (a, b) in self.pairs or (b, a) in self.pairs

    def covers(self):
        """Pairs (a, b) with a < b and nothing strictly between."""
        out = []
        for a, b in self.pairs:
            if not any(self.lt(a, c) and self.lt(c, b) for c in self.carrier):
                out.append((a, b))
        return sorted(out)

    def below(self, v):
        return frozenset(a for a, b in self.pairs if b == v)

    def above(self, v):
        return frozenset(b for a, b in self.pairs if a == v)

    def minimal_elements(self):
        tops = {b for _, b in self.pairs}
        return frozenset(self.carrier - tops)

    def maximal_elements(self):
        bottoms = {a for a, _ in self.pairs}
        return frozenset(self.carrier - bottoms)

    def extends(self, other):
        """True when this order contains every pair of ``other``."""
        return other.pairs <= self.pairs


def _cycle_witness(pairs, start):
    """Recover one directed cycle through ``start`` from generating pairs."""
    succ = {}
    for a, b in pairs:
        succ.setdefault(a, []).append(b)
    path, seen = [start], {start}
    node = start
    while True:
        nxt = None
        for cand in succ.get(node, ()):
            if cand == start:
                return tuple(path)
            if cand not in seen:
                nxt = cand
                break
        if nxt is None:
            return tuple(path)
        path.append(nxt)
        seen.add(nxt)
        node = nxt


def comparability(order, a, b):
    """Classify a pair: "C1" if comparable, "C2" otherwise."""
    for x in (a, b):
        if x not in order.carrier:
            raise NotInCarrier(x)
    return "C1" if order.comparable(a, b) else "C2"


@dataclass(frozen=True)
class A4Result:
    passed: bool
    witness: tuple | None  # (v, a, b): v separates the incomparable pair (a, b)


def check_A4(order):
    """Congruence of incomparability.

    For every incomparable pair (a, b) and every third element v the
    relations v < a and v < b must agree, and likewise v > a and v > b.
    Returns the first violation as (v, a, b).
    """
    items = sorted(order.carrier)
    for i, a in enumerate(items):
        for b in items[i + 1 :]:
            if order.comparable(a, b):
                continue
            for v in items:
                if v == a or v == b:
                    continue
                if order.lt(a, v) != order.lt(b, v):
                    return A4Result(False, (v, a, b))
                if order.lt(v, a) != order.lt(v, b):
                    return A4Result(False, (v, a, b))
    return A4Result(True, None)


class CyclicOrder:
    """A circular arrangement of distinct items.

    The arrangement is canonicalised by rotating the minimum item to the
    front, so equal cyclic orders compare equal as objects.  Orientation is
    kept; use ``same_up_to_reflection`` for the unoriented comparison.
    Arrangements of one or two items are stored sorted: there is only one
    circular arrangement of them.
    """

    __slots__ = ("items", "_pos")

    def __init__(self, seq):
        seq = tuple(seq)
        if len(set(seq)) != len(seq):
            raise ValueError(f"repeated items in cyclic order: {seq}")
        if len(seq) <= 2:
            items = tuple(sorted(seq))
        else:
            k = seq.index(min(seq))
            items = seq[k:] + seq[:k]
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(items)})

    def __setattr__(self, name, value):
        raise AttributeError("CyclicOrder is immutable")

    def __len__(self):
        return len(self.items)

    def __contains__(self, item):
        return item in self._pos

    def __eq__(self, other):
        return isinstance(other, CyclicOrder) and self.items == other.items

    def __hash__(self):
        return hash(self.items)

    def __repr__(self):
        return f"CyclicOrder({list(self.items)})"

    def index(self, item):
        if item not in self._pos:
            raise NotInCarrier(item)
        return self._pos[item]

    def adjacent(self, item):
        """(predecessor, successor) of ``item`` along the arrangement."""
        if len(self.items) <= 2:
            raise TooSmallCarrier(len(self.items))
        i = self.index(item)
        n = len(self.items)
        return self.items[(i - 1) % n], self.items[(i + 1) % n]

    def adjacent_pairs(self):
        """All consecutive pairs, one per circular gap."""
        n = len(self.items)
        if n < 2:
            return ()
        if n == 2:
            return ((self.items[0], self.items[1]),)
        return tuple(
            (self.items[i], self.items[(i + 1) % n]) for i in range(n)
        )

    def restrict(self, subset):
        """The arrangement induced on a subset, in the same orientation."""
        subset = frozenset(subset)
        extra = subset - set(self.items)
        if extra:
            raise NotASubset(extra)
        return CyclicOrder(v for v in self.items if v in subset)

    def reversed(self):
        return CyclicOrder(tuple(reversed(self.items)))

    def same_up_to_reflection(self, other):
        return self == other or self == other.reversed()

    def between(self, a, b, c):
        """True when walking forward from a reaches b strictly before c."""
        ia, ib, ic = self.index(a), self.index(b), self.index(c)
        n = len(self.items)
        return (ib - ia) % n < (ic - ia) % n


@dataclass(frozen=True)
class BinaryRelation:
    carrier: frozenset
    pairs: frozenset  # directed (a, b)

    @classmethod
    def of(cls, carrier, pairs):
        carrier = frozenset(carrier)
        pairs = frozenset(pairs)
        for a, b in pairs:
            for x in (a, b):
                if x not in carrier:
                    raise NotInCarrier(x)
        return cls(carrier, pairs)


def is_convenient(rel):
    """Irreflexive with in-degree and out-degree at most one everywhere."""
    outs, ins = set(), set()
    for a, b in rel.pairs:
        if a == b:
            return False
        if a in outs or b in ins:
            return False
        outs.add(a)
        ins.add(b)
    return True


@dataclass(frozen=True)
class RelationComponent:
    kind: str  # "chain" or "cycle"
    items: tuple

    def __len__(self):
        return len(self.items)


def rho_components(rel):
    """Decompose a convenient relation into chains and cycles.

    Every carrier element appears in exactly one component.  A chain may
    consist of a single element (length zero).  Components are returned
    deterministically: chains first, sorted by first element, then cycles
    rotated to start at their minimum, sorted.
    """
    if not is_convenient(rel):
        raise NotConvenient("some element repeats as a source or a target")
    succ = {a: b for a, b in rel.pairs}
    pred = {b: a for a, b in rel.pairs}
    chains, cycles = [], []
    placed = set()
    for start in sorted(rel.carrier):
        if start in placed or start in pred:
            continue
        seq = [start]
        while seq[-1] in succ:
            seq.append(succ[seq[-1]])
        placed.update(seq)
        chains.append(RelationComponent("chain", tuple(seq)))
    for start in sorted(rel.carrier):
        if start in placed:
            continue
        seq = [start]
        while True:
            nxt = succ[seq[-1]]
            if nxt == start:
                break
            seq.append(nxt)
        placed.update(seq)
        k = seq.index(min(seq))
        cycles.append(RelationComponent("cycle", tuple(seq[k:] + seq[:k])))
    chains.sort(key=lambda c: c.items[0])
    cycles.sort(key=lambda c: c.items[0])
    return tuple(chains + cycles)
