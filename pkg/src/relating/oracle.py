"""Exponential-time reference answers straight from the definitions.

These are meant for small graphs: they check every fast path in the test
suite and back the ``brute`` mode of the command line tool.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, GraphError, is_maximal_independent


class CapExceeded(RuntimeError):
    """Enumeration stopped because it produced more sets than allowed."""

    def __init__(self, cap: int):
        super().__init__(f"more than {cap} maximal independent sets")
        self.cap = cap


@dataclass(frozen=True)
class RelatingWitness:
    """Certificate set ``s`` for a relating edge: ``s + {x}`` and ``s + {y}``
    are both maximal independent sets."""

    s: frozenset[int]

    def serialize(self) -> str:
        return format_witness(self)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_maximal_independent_sets(
    g: Graph, cap: int | None = None
) -> Iterator[frozenset[int]]:
    """Yield every maximal independent set of ``g`` exactly once.

    Bron-Kerbosch with pivoting, run on the complement through bitmasks.
    Raises :class:`CapExceeded` once more than ``cap`` sets would be produced.
    """
    closed = [(1 << v) | sum(1 << w for w in g.adj[v]) for v in g.vertices]
    count = 0

    def expand(r: int, p: int, x: int) -> Iterator[frozenset[int]]:
        nonlocal count
        if not p and not x:
            count += 1
            if cap is not None and count > cap:
                raise CapExceeded(cap)
            yield frozenset(_bits(r))
            return
        # Pivot: the vertex whose closed neighbourhood covers fewest candidates.
        pivot = min(_bits(p | x), key=lambda u: (closed[u] & p).bit_count())
        for v in _bits(p & closed[pivot]):
            yield from expand(r | (1 << v), p & ~closed[v], x & ~closed[v])
            p &= ~(1 << v)
            x |= 1 << v

    yield from expand(0, (1 << g.n) - 1, 0)


def independence_number(g: Graph) -> int:
    return max((len(s) for s in enumerate_maximal_independent_sets(g)), default=0)


def is_well_covered(g: Graph) -> bool:
    sizes = {len(s) for s in enumerate_maximal_independent_sets(g)}
    return len(sizes) <= 1


def _check_edge(g: Graph, x: int, y: int) -> None:
    if not g.has_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge")


def verify_relating_witness(g: Graph, x: int, y: int, s: Iterable[int]) -> bool:
    _check_edge(g, x, y)
    s = frozenset(s)
    if x in s or y in s:
        return False
    return is_maximal_independent(g, s | {x}) and is_maximal_independent(g, s | {y})


def is_relating_brute(
    g: Graph, x: int, y: int, cap: int | None = None
) -> RelatingWitness | None:
    """Search for a relating witness for edge ``xy`` by enumeration.

    Only maximal independent sets of ``g - (N[x] | N[y])`` are tried: growing
    a candidate inside that subgraph never breaks independence with ``x`` or
    ``y`` and only adds domination.
    """
    _check_edge(g, x, y)
    outside = set(g.vertices) - g.closed_neighborhood(x) - g.closed_neighborhood(y)
    sub, old = g.induced(outside)
    for s_sub in enumerate_maximal_independent_sets(sub, cap):
        s = frozenset(old[v] for v in s_sub)
        if verify_relating_witness(g, x, y, s):
            return RelatingWitness(s)
    return None


def format_witness(w: RelatingWitness | None) -> str:
    """``witness <k> : <v1> ... <vk>`` with 1-based ids, or ``witness none``."""
    if w is None:
        return "witness none"
    ids = " ".join(str(v + 1) for v in sorted(w.s))
    return f"witness {len(w.s)} : {ids}".rstrip()


def parse_witness(line: str) -> RelatingWitness | None:
    parts = line.split()
    if parts == ["witness", "none"]:
        return None
    if len(parts) < 3 or parts[0] != "witness" or parts[2] != ":":
        raise ValueError(f"bad witness line {line!r}")
    try:
        k = int(parts[1])
        ids = [int(p) - 1 for p in parts[3:]]
    except ValueError:
        raise ValueError(f"bad witness line {line!r}") from None
    if k != len(ids) or len(set(ids)) != k or any(v < 0 for v in ids):
        raise ValueError(f"bad witness line {line!r}")
    return RelatingWitness(frozenset(ids))
