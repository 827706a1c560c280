"""Pure-Python strand tracer, the reference twin of ``_concat.pyx``."""


def concat_kernel(n, xp, xl, yp, yl):
    """Stack ``x`` over ``y`` and trace every composite strand.

    Arguments are the partner/label arrays of the two diagrams.  Returns
    ``(partner, label, loops)``: the arrays of the loop-free result and the
    accumulated label of each closed loop (sign depends on traversal
    direction).

    The middle node at position ``k`` is ordinal ``2n-k`` in ``x`` and
    ``k-1`` in ``y``; both conversions are ``q -> 2n-1-q``.
    """
    two_n = 2 * n
    flip = two_n - 1
    partner = [0] * two_n
    label = [0] * two_n
    done = [False] * two_n
    seen = [False] * n  # middle row, indexed by position - 1
    for start in range(two_n):
        if done[start]:
            continue
        if start < n:
            P, L, on_x = xp, xl, True
        else:
            P, L, on_x = yp, yl, False
        cur = start
        acc = 0
        while True:
            q = P[cur]
            acc += L[cur]
            if on_x:
                if q < n:
                    break
                seen[flip - q] = True
                P, L, on_x = yp, yl, False
            else:
                if q >= n:
                    break
                seen[q] = True
                P, L, on_x = xp, xl, True
            cur = flip - q
        partner[start] = q
        partner[q] = start
        label[start] = acc
        label[q] = -acc
        done[start] = done[q] = True
    loops = []
    for m in range(n):
        if seen[m]:
            continue
        start = flip - m  # enter x from below at middle position m+1
        cur = start
        P, L, on_x = xp, xl, True
        acc = 0
        while True:
            q = P[cur]
            acc += L[cur]
            if on_x:
                seen[flip - q] = True
                P, L, on_x = yp, yl, False
            else:
                seen[q] = True
                P, L, on_x = xp, xl, True
            cur = flip - q
            if on_x and cur == start:
                break
        loops.append(acc)
    return tuple(partner), tuple(label), loops
