"""Edge ideals and cover ideals of simple graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .ideal import MonomialIdeal, intersect
from .ring import RingContext


@dataclass(frozen=True)
class SimpleGraph:
    """Graph on vertices 1..vertex_count; vertex k maps to the k-th ring variable."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if vertex_count < 1:
            raise ValueError("a graph needs at least one vertex")
        norm = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (1 <= a <= vertex_count and 1 <= b <= vertex_count):
                raise ValueError(f"edge {a}-{b} out of range 1..{vertex_count}")
            norm.add((min(a, b), max(a, b)))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", frozenset(norm))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def default_ring(self) -> RingContext:
        return RingContext(f"x{k}" for k in range(1, self.vertex_count + 1))

    def __str__(self) -> str:
        return f"graph {self.vertex_count}; " + " ".join(f"{a}-{b}" for a, b in self.sorted_edges())


def _ring(G: SimpleGraph, ctx: RingContext | None) -> RingContext:
    ctx = ctx or G.default_ring()
    if ctx.n < G.vertex_count:
        raise ValueError(f"{ctx} has fewer variables than the graph has vertices")
    if not G.edges:
        raise ValueError("graph has no edges")
    return ctx


def edge_ideal(G: SimpleGraph, ctx: RingContext | None = None) -> MonomialIdeal:
    ctx = _ring(G, ctx)
    return MonomialIdeal(ctx, (ctx.var(a - 1) * ctx.var(b - 1) for a, b in G.sorted_edges()))


def cover_ideal(G: SimpleGraph, ctx: RingContext | None = None) -> MonomialIdeal:
    """Intersection of the primes (x_a, x_b) over all edges {a, b}."""
    ctx = _ring(G, ctx)
    return intersect([MonomialIdeal(ctx, [ctx.var(a - 1), ctx.var(b - 1)]) for a, b in G.sorted_edges()])


def cycle_graph(k: int) -> SimpleGraph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(k, [(i, i % k + 1) for i in range(1, k + 1)])


def wheel_graph(order: int) -> SimpleGraph:
    """Cycle on vertices 1..order-1 plus the hub `order` joined to every rim vertex."""
    if order < 4:
        raise ValueError("a wheel needs at least 4 vertices")
    rim = order - 1
    edges = [(i, i % rim + 1) for i in range(1, rim + 1)]
    edges += [(i, order) for i in range(1, rim + 1)]
    return SimpleGraph(order, edges)
