"""Unit-capacity maximum flow by shortest augmenting paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class FlowNetworkError(ValueError):
    pass


@dataclass(frozen=True)
class FlowNetwork:
    """Directed network on nodes ``0..node_count-1``; every arc has capacity 1."""

    node_count: int
    source: int
    sink: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(tuple(a) for a in self.arcs))
        if self.source == self.sink:
            raise FlowNetworkError("source and sink must differ")
        for node in (self.source, self.sink):
            if not 0 <= node < self.node_count:
                raise FlowNetworkError(f"node {node} out of range")
        seen = set()
        for a, b in self.arcs:
            if not (0 <= a < self.node_count and 0 <= b < self.node_count):
                raise FlowNetworkError(f"arc ({a}, {b}) out of range")
            if a == b:
                raise FlowNetworkError(f"loop arc at {a}")
            if b == self.source:
                raise FlowNetworkError(f"arc ({a}, {b}) enters the source")
            if a == self.sink:
                raise FlowNetworkError(f"arc ({a}, {b}) leaves the sink")
            if (a, b) in seen:
                raise FlowNetworkError(f"duplicate arc ({a}, {b})")
            seen.add((a, b))


@dataclass(frozen=True)
class FlowResult:
    value: int
    arc_flow: tuple[int, ...]  # parallel to FlowNetwork.arcs

    def dump(self, net: FlowNetwork) -> str:
        """Diagnostic listing, one ``arc <u> <v> flow <f>`` line per arc."""
        return "".join(
            f"arc {a} {b} flow {f}\n" for (a, b), f in zip(net.arcs, self.arc_flow)
        )


def max_flow(net: FlowNetwork) -> FlowResult:
    """Maximum s-t flow with all capacities 1.

    Each round runs a BFS in the residual graph (neighbours scanned in
    increasing node order) and pushes one unit along the path found.
    """
    n = net.node_count
    # Residual arcs out of each node: (head, arc index, is_forward).
    out: list[list[tuple[int, int, bool]]] = [[] for _ in range(n)]
    for i, (a, b) in enumerate(net.arcs):
        out[a].append((b, i, True))
        out[b].append((a, i, False))
    for lst in out:
        lst.sort()
    flow = [0] * len(net.arcs)
    s, t = net.source, net.sink
    value = 0
    while True:
        parent: list[tuple[int, int, bool] | None] = [None] * n
        seen = [False] * n
        seen[s] = True
        queue = deque([s])
        while queue and not seen[t]:
            w = queue.popleft()
            for z, i, fwd in out[w]:
                if seen[z]:
                    continue
                if (fwd and flow[i] == 0) or (not fwd and flow[i] == 1):
                    seen[z] = True
                    parent[z] = (w, i, fwd)
                    queue.append(z)
        if not seen[t]:
            break
        z = t
        while z != s:
            w, i, fwd = parent[z]
            flow[i] = 1 if fwd else 0
            z = w
        value += 1
    result = FlowResult(value, tuple(flow))
    _check_flow(net, result)
    return result


def _check_flow(net: FlowNetwork, res: FlowResult) -> None:
    balance = [0] * net.node_count
    for (a, b), f in zip(net.arcs, res.arc_flow):
        assert f in (0, 1)
        balance[a] -= f
        balance[b] += f
    for v, bal in enumerate(balance):
        if v == net.source:
            assert -bal == res.value
        elif v == net.sink:
            assert bal == res.value
        else:
            assert bal == 0, f"flow not conserved at node {v}"
