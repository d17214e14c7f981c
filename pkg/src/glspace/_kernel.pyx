# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled simplex kernels; semantics identical to ``_kernel_py``."""


def pivot(list T, Py_ssize_t r, Py_ssize_t s, object det):
    cdef list rowr = T[r]
    cdef list row
    cdef object p = rowr[s]
    cdef object a
    cdef Py_ssize_t i, j
    cdef Py_ssize_t ncols = len(rowr)
    cdef Py_ssize_t nrows = len(T)
    cdef bint scale = p != det
    for i in range(nrows):
        if i == r:
            continue
        row = <list>T[i]
        a = row[s]
        if a == 0:
            if scale:
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
        for i in range(nrows):
            row = <list>T[i]
            for j in range(ncols):
                row[j] = -row[j]
        return -p
    return p


def bland_entering(list obj, list col_ok, list nonbasic):
    cdef Py_ssize_t best = -1
    cdef Py_ssize_t j
    cdef long vid, best_id = -1
    for j in range(1, len(obj)):
        if col_ok[j] and obj[j] < 0:
            vid = nonbasic[j]
            if best < 0 or vid < best_id:
                best = j
                best_id = vid
    return best


def bland_leaving(list T, Py_ssize_t s, list row_ok, list basic):
    cdef Py_ssize_t best = -1
    cdef Py_ssize_t i
    cdef object a, num, den, lhs, rhs
    cdef object bnum = 0
    cdef object bden = 1
    cdef long bid = -1
    cdef bint take
    for i in range(len(row_ok)):
        if not row_ok[i]:
            continue
        a = (<list>T[i])[s]
        if a < 0:
            num = (<list>T[i])[0]
            den = -a
            if best < 0:
                take = True
            else:
                lhs = num * bden
                rhs = bnum * den
                take = lhs < rhs or (lhs == rhs and basic[i] < bid)
            if take:
                best = i
                bnum = num
                bden = den
                bid = basic[i]
    return best
