"""Union-find over a line of positions where only neighbouring intervals merge."""


class IntervalUnionFind:
    """Partition of ``[1, n]`` into contiguous intervals.

    Starts as ``n`` singletons. ``union`` may only join two intervals that
    touch; ``find`` returns the bounds of the interval holding a position.
    Union by rank with path compression.
    """

    __slots__ = ("n", "_parent", "_rank", "_lo", "_hi")

    def __init__(self, n: int):
        self.n = n
        self._parent = list(range(n + 1))
        self._rank = [0] * (n + 1)
        self._lo = list(range(n + 1))
        self._hi = list(range(n + 1))

    def _root(self, j: int) -> int:
        parent = self._parent
        root = j
        while parent[root] != root:
            root = parent[root]
        while parent[j] != root:
            parent[j], j = root, parent[j]
        return root

    def find(self, j: int) -> tuple[int, int]:
        if not 1 <= j <= self.n:
            raise IndexError(f"position {j} outside [1, {self.n}]")
        r = self._root(j)
        return self._lo[r], self._hi[r]

    def union(self, a: int, b: int) -> tuple[int, int]:
        """Merge the intervals holding ``a`` and ``b``; they must be adjacent."""
        ra, rb = self._root(a), self._root(b)
        if ra == rb:
            return self._lo[ra], self._hi[ra]
        lo_a, hi_a, lo_b, hi_b = self._lo[ra], self._hi[ra], self._lo[rb], self._hi[rb]
        if hi_a + 1 != lo_b and hi_b + 1 != lo_a:
            raise ValueError(f"intervals [{lo_a},{hi_a}] and [{lo_b},{hi_b}] are not neighbours")
        if self._rank[ra] < self._rank[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        if self._rank[ra] == self._rank[rb]:
            self._rank[ra] += 1
        self._lo[ra] = min(lo_a, lo_b)
        self._hi[ra] = max(hi_a, hi_b)
        return self._lo[ra], self._hi[ra]

    def intervals(self) -> list[tuple[int, int]]:
        seen = []
        j = 1
        while j <= self.n:
            lo, hi = self.find(j)
            seen.append((lo, hi))
            j = hi + 1
        return seen
