"""Pure-Python state-sum kernel, used when the compiled extension is absent."""


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def state_histogram(crossings, n_labels):
    """Histogram of Kauffman states by (number of A-smoothings, loop count).

    ``crossings`` is a sequence of 4-tuples of labels in ``range(n_labels)``.
    Bit ``i`` of the state mask selects the B-smoothing at crossing ``i``;
    A joins positions 0-1 and 2-3, B joins 0-3 and 1-2.  Returns a
    ``(n+1) x (n_labels+1)`` nested list of counts.
    """
    n = len(crossings)
    if n > 40:
        raise ValueError("state sum limited to 40 crossings")
    for t in crossings:
        for j in t:
            if not 0 <= j < n_labels:
                raise ValueError(f"label {j} out of range")
    hist = [[0] * (n_labels + 1) for _ in range(n + 1)]
    a_pairs = [((t[0], t[1]), (t[2], t[3])) for t in crossings]
    b_pairs = [((t[0], t[3]), (t[1], t[2])) for t in crossings]
    for mask in range(1 << n):
        parent = list(range(n_labels))
        loops = n_labels
        n_a = 0
        for i in range(n):
            if (mask >> i) & 1:
                pairs = b_pairs[i]
            else:
                pairs = a_pairs[i]
                n_a += 1
            for x, y in pairs:
                rx, ry = _find(parent, x), _find(parent, y)
                if rx != ry:
                    parent[rx] = ry
                    loops -= 1
        hist[n_a][loops] += 1
    return hist
