"""Pure-Python simplex kernels.

The tableau is a list of rows of Python ints sharing one positive common
denominator ``det``; the real entry is ``T[i][j] / det``.  Column 0 holds the
constant term.  ``_kernel.pyx`` compiles the same three functions.
"""


def pivot(T, r, s, det):
    """Integer Jordan exchange on entry ``(r, s)``; returns the new denominator.

    Division by the old denominator is exact (every entry is a minor of the
    initial integer tableau).
    """
    rowr = T[r]
    p = rowr[s]
    ncols = len(rowr)
    for i in range(len(T)):
        if i == r:
            continue
        row = T[i]
        a = row[s]
        if a == 0:
            if p != det:
                for j in range(ncols):
                    row[j] = row[j] * p // det
        else:
            for j in range(ncols):
                if j != s:
                    row[j] = (row[j] * p - a * rowr[j]) // det
    for j in range(ncols):
        rowr[j] = -rowr[j]
    rowr[s] = det
    if p < 0:
        for row in T:
            for j in range(ncols):
                row[j] = -row[j]
        return -p
    return p


def bland_entering(obj, col_ok, nonbasic):
    """Column with negative reduced cost and least variable id, or -1."""
    best = -1
    best_id = -1
    for j in range(1, len(obj)):
        if col_ok[j] and obj[j] < 0:
            vid = nonbasic[j]
            if best < 0 or vid < best_id:
                best = j
                best_id = vid
    return best


def bland_leaving(T, s, row_ok, basic):
    """Minimum-ratio row for entering column ``s``, ties to least basic id;
    -1 when the column is unbounded."""
    best = -1
    bnum = 0
    bden = 1
    bid = -1
    for i in range(len(row_ok)):
        if not row_ok[i]:
            continue
        a = T[i][s]
        if a < 0:
            num = T[i][0]
            den = -a
            if best < 0:
                take = True
            else:
                lhs = num * bden
                rhs = bnum * den
                take = lhs < rhs or (lhs == rhs and basic[i] < bid)
            if take:
                best, bnum, bden, bid = i, num, den, basic[i]
    return best
