# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled kernels for down-set enumeration, limited to 64-point posets.

Semantics mirror ideals_py exactly (same traversal, same node counts);
the dispatcher in _kernels routes here only when len(preds) <= 64.
"""

from libc.stdint cimport int64_t, uint64_t


def ideals_of_size(preds, unsigned long long allowed, long size, long long max_nodes):
    """All down-sets of `allowed` with exactly `size` points."""
    cdef Py_ssize_t npoints = len(preds)
    if npoints > 64:
        raise ValueError("compiled kernel supports at most 64 points")
    cdef uint64_t cpreds[64]
    cdef Py_ssize_t j
    for j in range(npoints):
        cpreds[j] = preds[j]
    # explicit stack: each state pushes at most two, depth <= npoints+1
    cdef long si_arr[132]
    cdef uint64_t ch_arr[132]
    cdef long ct_arr[132]
    cdef Py_ssize_t top = 0
    cdef long i, count
    cdef uint64_t chosen, bit
    cdef int64_t nodes = 0
    cdef bint completed = True
    out = []
    si_arr[0] = 0
    ch_arr[0] = 0
    ct_arr[0] = 0
    top = 1
    while top > 0:
        top -= 1
        i = si_arr[top]
        chosen = ch_arr[top]
        count = ct_arr[top]
        nodes += 1
        if nodes > max_nodes:
            completed = False
            break
        if count == size:
            out.append(chosen)
            continue
        if size - count > npoints - i:
            continue
        bit = (<uint64_t>1) << i
        si_arr[top] = i + 1
        ch_arr[top] = chosen
        ct_arr[top] = count
        top += 1
        if (allowed & bit) != 0 and (cpreds[i] & ~chosen) == 0:
            si_arr[top] = i + 1
            ch_arr[top] = chosen | bit
            ct_arr[top] = count + 1
            top += 1
    return out, nodes, completed


def count_ideals_of_size(preds, unsigned long long allowed, long size, long long max_nodes):
    """Like ideals_of_size but only counts the down-sets."""
    cdef Py_ssize_t npoints = len(preds)
    if npoints > 64:
        raise ValueError("compiled kernel supports at most 64 points")
    cdef uint64_t cpreds[64]
    cdef Py_ssize_t j
    for j in range(npoints):
        cpreds[j] = preds[j]
    cdef long si_arr[132]
    cdef uint64_t ch_arr[132]
    cdef long ct_arr[132]
    cdef Py_ssize_t top = 0
    cdef long i, count
    cdef uint64_t chosen, bit
    cdef int64_t nodes = 0
    cdef int64_t found = 0
    cdef bint completed = True
    si_arr[0] = 0
    ch_arr[0] = 0
    ct_arr[0] = 0
    top = 1
    while top > 0:
        top -= 1
        i = si_arr[top]
        chosen = ch_arr[top]
        count = ct_arr[top]
        nodes += 1
        if nodes > max_nodes:
            completed = False
            break
        if count == size:
            found += 1
            continue
        if size - count > npoints - i:
            continue
        bit = (<uint64_t>1) << i
        si_arr[top] = i + 1
        ch_arr[top] = chosen
        ct_arr[top] = count
        top += 1
        if (allowed & bit) != 0 and (cpreds[i] & ~chosen) == 0:
            si_arr[top] = i + 1
            ch_arr[top] = chosen | bit
            ct_arr[top] = count + 1
            top += 1
    return found, nodes, completed


def all_ideals(preds, unsigned long long allowed, long long max_nodes):
    """Every down-set of `allowed`, any size (the empty set included)."""
    cdef Py_ssize_t npoints = len(preds)
    if npoints > 64:
        raise ValueError("compiled kernel supports at most 64 points")
    cdef uint64_t cpreds[64]
    cdef Py_ssize_t j
    for j in range(npoints):
        cpreds[j] = preds[j]
    cdef long si_arr[132]
    cdef uint64_t ch_arr[132]
    cdef Py_ssize_t top = 0
    cdef long i
    cdef uint64_t chosen, bit
    cdef int64_t nodes = 0
    cdef bint completed = True
    out = []
    si_arr[0] = 0
    ch_arr[0] = 0
    top = 1
    while top > 0:
        top -= 1
        i = si_arr[top]
        chosen = ch_arr[top]
        nodes += 1
        if nodes > max_nodes:
            completed = False
            break
        if i == npoints:
            out.append(chosen)
            continue
        bit = (<uint64_t>1) << i
        si_arr[top] = i + 1
        ch_arr[top] = chosen
        top += 1
        if (allowed & bit) != 0 and (cpreds[i] & ~chosen) == 0:
            si_arr[top] = i + 1
            ch_arr[top] = chosen | bit
            top += 1
    return out, nodes, completed
