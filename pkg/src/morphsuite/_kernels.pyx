# cython: boundscheck=False, wraparound=False
"""Compiled edit-distance kernel.

Negative-option selection ranks every permutation of a record's affixes by
its distance to the gold surface, so this inner loop dominates suite-build
time on morpheme-rich records (up to 10,080 candidates each).
"""
from libc.stdlib cimport free, malloc


cpdef int levenshtein(str a, str b):
    """Minimal insertions/deletions/substitutions turning a into b."""
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    if la == 0:
        return <int> lb
    if lb == 0:
        return <int> la

    cdef int *row = <int *> malloc((lb + 1) * sizeof(int))
    if row == NULL:
        raise MemoryError()

    cdef Py_ssize_t i, j
    cdef int corner, above, cur
    cdef Py_UCS4 ca
    try:
        for j in range(lb + 1):
            row[j] = <int> j
        for i in range(1, la + 1):
            corner = row[0]
            row[0] = <int> i
            ca = a[i - 1]
            for j in range(1, lb + 1):
                above = row[j]
                cur = corner if ca == <Py_UCS4> b[j - 1] else corner + 1
                if above + 1 < cur:
                    cur = above + 1
                if row[j - 1] + 1 < cur:
                    cur = row[j - 1] + 1
                corner = above
                row[j] = cur
        return row[lb]
    finally:
        free(row)
