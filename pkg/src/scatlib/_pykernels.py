"""Pure-Python hot loops. Mirrors ``_ckernels.pyx`` function for function.

Conventions shared with the compiled module: ``letters`` is a sequence of
letter ids in ``[1, cap)``; positions are 1-based; every returned
per-position array has length ``n`` (entry ``j - 1`` belongs to position
``j``) and uses ``n + 1`` as the out-of-band "unreachable" value.
"""

from .unionfind import IntervalUnionFind

BACKEND = "python"


def _as_list(letters):
    return letters.tolist() if hasattr(letters, "tolist") else list(letters)


def arch_ends(letters, need, cap):
    """Greedy left-to-right arch scan; returns the 1-based end of every arch."""
    letters = _as_list(letters)
    ends = []
    if need <= 0:
        return ends
    seen = [False] * cap
    h = need
    for pos, a in enumerate(letters, 1):
        if not seen[a]:
            seen[a] = True
            h -= 1
            if h == 0:
                ends.append(pos)
                h = need
                # the arch held every letter, so |arch| >= need pays for this
                seen = [False] * cap
    return ends


def suffix_tables(letters, need, cap):
    """Arrays (u, t, m) over all suffixes x[j..n].

    u[j]: end of the shortest universal prefix of x[j..n] (n+1 if none).
    t[j]: universality index of x[j..n].
    m[j]: end of the shortest prefix of x[j..n] with index t[j] (j-1 when t[j] = 0).
    """
    x = _as_list(letters)
    n = len(x)
    inf = n + 1
    u = [inf] * (n + 2)
    t = [0] * (n + 2)
    m = [0] * (n + 2)
    m[n + 1] = n
    if n == 0 or need <= 0:
        return [], [], []
    first = [0] * cap  # leftmost occurrence of each letter in the scanned suffix
    h = need
    j = n
    while j >= 1 and h > 0:
        a = x[j - 1]
        if first[a] == 0:
            h -= 1
        first[a] = j
        j -= 1
    if h == 0:
        start = j + 1
        top = max(first[a] for a in range(cap) if first[a])
        u[start] = top
        for i in range(start - 1, 0, -1):
            a = x[i - 1]
            if first[a] == top:
                first[a] = i
                top -= 1
                while first[x[top - 1]] != top:
                    top -= 1
            else:
                first[a] = i
            u[i] = top
        last_universal = start
    else:
        last_universal = 0
    for i in range(n, 0, -1):
        if i > last_universal:
            t[i] = 0
            m[i] = i - 1
        else:
            nxt = u[i] + 1
            t[i] = 1 + t[nxt]
            m[i] = m[nxt]
    return u[1 : n + 1], t[1 : n + 1], m[1 : n + 1]


def x_coordinates(letters, cap):
    """Left-to-right x-coordinates with a monotone stack of positions."""
    w = _as_list(letters)
    n = len(w)
    x = [0] * (n + 1)
    last = [0] * cap
    stack = [0]
    for i in range(1, n + 1):
        a = w[i - 1]
        lp = last[a]
        last[a] = i
        if lp == 0:
            x[i] = 1
            del stack[1:]
        else:
            # invariant: x strictly increases along the stack and each entry
            # is the minimum of x on the positions it covers
            while stack[-2] >= lp:
                stack.pop()
            x[i] = x[stack[-1]] + 1
        stack.append(i)
    return x[1:]


def y_coordinates(letters, cap, k, x):
    """Right-to-left y-coordinates, eliminating positions with x + y > k + 1.

    Eliminated positions get y = n + 1.
    """
    w = _as_list(letters)
    x = _as_list(x)
    n = len(w)
    inf = n + 1
    y = [0] * (n + 2)
    nnext = [0] * cap
    stack = [n + 1]  # sentinel with y = 0
    uf = IntervalUnionFind(n) if n else None
    bound = k + 1
    for i in range(n, 0, -1):
        a = w[i - 1]
        j = nnext[a]
        if j == 0:
            owner = n + 1
        else:
            owner = uf.find(j)[0]
        cand = y[owner] + 1
        if x[i - 1] + cand <= bound:
            y[i] = cand
            nnext[a] = i
            # absorb eliminated singletons and every interval above the owner
            p = i + 1
            while p < owner and p <= n:
                p = uf.union(i, p)[1] + 1
            while stack[-1] != owner:
                stack.pop()
            stack.append(i)
        else:
            y[i] = inf
    return y[1 : n + 1]


def assemble_normal_form(letters, k, x, y):
    """Drop eliminated positions and sort letters inside saturated blocks.

    A block is a maximal run of consecutive surviving positions sharing the
    same (x, y) with x + y = k + 1. Blocks are ordered by stable counting
    sorts of (block, letter, position) triples.
    """
    w = _as_list(letters)
    x = _as_list(x)
    y = _as_list(y)
    n = len(w)
    inf = n + 1
    alive = [i for i in range(n) if y[i] != inf]
    out = [w[i] for i in alive]
    full = k + 1
    # tag each surviving index with its block number (0 = not in a block)
    block_of = [0] * len(alive)
    blocks = 0
    prev = None
    for r, i in enumerate(alive):
        key = (x[i], y[i])
        if key[0] + key[1] == full:
            if key != prev:
                blocks += 1
            block_of[r] = blocks
            prev = key
        else:
            prev = None
    if blocks == 0:
        return out
    triples = [(block_of[r], out[r], r) for r in range(len(alive)) if block_of[r]]
    cap = max(out) + 1
    triples = _counting_sort(triples, 1, cap)
    triples = _counting_sort(triples, 0, blocks + 1)
    # block positions are contiguous, so the r-th slot of block b is refilled in order
    slots = [r for r in range(len(alive)) if block_of[r]]
    for slot, (_, letter, _) in zip(slots, triples):
        out[slot] = letter
    return out


def _counting_sort(items, key, size):
    counts = [0] * (size + 1)
    for item in items:
        counts[item[key] + 1] += 1
    for v in range(size):
        counts[v + 1] += counts[v]
    out = [None] * len(items)
    for item in items:
        c = item[key]
        out[counts[c]] = item
        counts[c] += 1
    return out


def normal_form(letters, cap, k):
    x = x_coordinates(letters, cap)
    y = y_coordinates(letters, cap, k, x)
    return assemble_normal_form(letters, k, x, y)
