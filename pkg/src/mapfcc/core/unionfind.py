class UnionFind:
    """
    Disjoint-set forest over arbitrary hashable elements.

    Elements are registered lazily on first use. Uses path compression and
    union by rank.
    """

    def __init__(self, elements=()):
        self.parent = {}
        self.rank = {}
        for x in elements:
            self.add(x)

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.rank[x] = 0

    def find(self, x):
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        """
        Merge the sets containing x and y.

        Returns:
            False if both were already in the same set, True otherwise.
        """
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        return True

    def connected(self, x, y) -> bool:
        return self.find(x) == self.find(y)

    def count(self) -> int:
        """
        Number of disjoint sets among registered elements.
        """
        return sum(1 for x in self.parent if self.parent[x] == x)
