"""Maximum bipartite matching by augmenting paths (Kuhn's algorithm).

Left vertices are ``0..len(adj)-1``; ``adj[i]`` lists the right vertices
adjacent to ``i``.  Instances here are tiny (child lists of tree nodes), so the
simple O(VE) augmenting scheme beats Hopcroft-Karp's bookkeeping in practice.
"""


def max_matching(adj, n_right):
    """Return ``match_left`` where ``match_left[i]`` is the right partner or -1."""
    match_right = [-1] * n_right
    match_left = [-1] * len(adj)

    def augment(u, seen):
        for v in adj[u]:
            if seen[v]:
                continue
            seen[v] = True
            if match_right[v] == -1 or augment(match_right[v], seen):
                match_right[v] = u
                match_left[u] = v
                return True
        return False

    for u in range(len(adj)):
        augment(u, [False] * n_right)
    return match_left


def has_perfect_left_matching(adj, n_right):
    """True iff every left vertex can be matched simultaneously."""
    if len(adj) > n_right:
        return False
    if any(not row for row in adj):
        return False
    return all(v != -1 for v in max_matching(adj, n_right))
