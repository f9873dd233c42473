"""Dinic max-flow on small integer networks."""

from __future__ import annotations

from collections import deque


class Dinic:
    def __init__(self, n: int) -> None:
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int) -> int:
        """Add arc u->v; returns its index (the reverse arc is index ^ 1)."""
        idx = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0]
        self.head[u].append(idx)
        self.head[v].append(idx + 1)
        return idx

    def flow_on(self, idx: int) -> int:
        return self.cap[idx ^ 1]

    def _bfs(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for a in self.head[u]:
                v = self.to[a]
                if self.cap[a] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    q.append(v)
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        to, cap, head = self.to, self.cap, self.head
        while True:
            level = self._bfs(s, t)
            if level is None:
                return total
            it = [0] * self.n
            # Iterative DFS; augmenting paths have unit bottleneck in our networks
            # but capacities on source arcs may exceed one, so track the minimum.
            while True:
                path: list[int] = []
                u = s
                while u != t:
                    advanced = False
                    while it[u] < len(head[u]):
                        a = head[u][it[u]]
                        v = to[a]
                        if cap[a] > 0 and level[v] == level[u] + 1:
                            path.append(a)
                            u = v
                            advanced = True
                            break
                        it[u] += 1
                    if not advanced:
                        if u == s:
                            break
                        level[u] = -1
                        a = path.pop()
                        u = to[a ^ 1]
                        it[u] += 1
                if u != t:
                    break
                push = min(cap[a] for a in path)
                for a in path:
                    cap[a] -= push
                    cap[a ^ 1] += push
                total += push
