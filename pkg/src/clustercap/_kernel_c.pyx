# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernel: minimum min-cut over all repair sequences of one
selected-node distribution.

Twin of ``_kernel_py.scan_distribution`` with identical semantics on
scaled int64 inputs: sequences are visited in lexicographic order with
the separate label sorting after all cluster labels, and only strict
improvements move the minimum.  The caller guarantees that intermediate
values fit in 64 bits and k <= 32.
"""

MAX_K = 32


def scan_distribution(int s0, tuple clusters, int d_intra, int d_cross,
                      long long alpha, long long beta_intra, long long beta_cross):
    """Return (min value, first achieving order) for one distribution."""
    cdef int L = len(clusters)
    cdef int k = 0
    cdef int[32] items
    cdef int[32] best_items
    cdef int[34] seen
    cdef int c, count, i, j, lab, h, a, b, t, sep_label
    cdef long long acc, w, best
    cdef bint improved

    sep_label = L + 1
    for c in range(L):
        count = clusters[c]
        for i in range(count):
            if k >= MAX_K:
                raise ValueError("k exceeds compiled kernel limit")
            items[k] = c + 1
            k += 1
    for i in range(s0):
        if k >= MAX_K:
            raise ValueError("k exceeds compiled kernel limit")
        items[k] = sep_label
        k += 1
    if k == 0:
        return 0, ()

    best = -1
    while True:
        # evaluate current permutation; early exit once >= best
        for i in range(L + 2):
            seen[i] = 0
        acc = 0
        improved = True
        for i in range(k):
            lab = items[i]
            seen[lab] += 1
            if lab == sep_label:
                w = (d_intra + d_cross - i) * beta_cross
            else:
                h = seen[lab]
                a = d_intra + 1 - h
                b = d_cross - (i + 1 - h)
                if b < 0:
                    b = 0
                w = a * beta_intra + b * beta_cross
            if w < alpha:
                acc += w
            else:
                acc += alpha
            if best >= 0 and acc >= best:
                improved = False
                break
        if improved and (best < 0 or acc < best):
            best = acc
            for i in range(k):
                best_items[i] = items[i]

        # next lexicographic permutation
        i = k - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            break
        j = k - 1
        while items[j] <= items[i]:
            j -= 1
        t = items[i]; items[i] = items[j]; items[j] = t
        j = k - 1
        i += 1
        while i < j:
            t = items[i]; items[i] = items[j]; items[j] = t
            i += 1
            j -= 1

    order = tuple(0 if best_items[i] == sep_label else best_items[i] for i in range(k))
    return best, order
