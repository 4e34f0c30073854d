# cython: boundscheck=False, wraparound=False
"""Compiled LEA resolution kernel; twin of ``corefkit._lea_py``."""
from libc.stdlib cimport calloc, free, malloc

__all__ = ["resolution_sums"]


def resolution_sums(entities_a, entities_b):
    """Size-weighted LEA resolution of side A against side B.

    Same contract as the pure-Python kernel: entities are sequences of
    non-negative mention ids, the return value is the
    ``(numerator, denominator)`` pair of the weighted resolution sum.
    """
    cdef list a_sides = [list(e) for e in entities_a]
    cdef list b_sides = [list(e) for e in entities_b]
    cdef Py_ssize_t n_b = len(b_sides)
    cdef Py_ssize_t total_b = 0
    cdef Py_ssize_t max_id = -1
    cdef Py_ssize_t i, j, k, size, m
    cdef list entity

    for entity in b_sides:
        total_b += len(entity)
        for m in entity:
            if m > max_id:
                max_id = m
    for entity in a_sides:
        for m in entity:
            if m > max_id:
                max_id = m

    cdef Py_ssize_t n_mentions = max_id + 1
    # CSR map: mention id -> the B entities containing it.
    cdef long *mem_count = <long *> calloc(n_mentions + 1, sizeof(long))
    cdef long *mem_off = <long *> malloc((n_mentions + 2) * sizeof(long))
    cdef long *mem_val = <long *> malloc((total_b + 1) * sizeof(long))
    cdef long *overlap = <long *> calloc(n_b + 1, sizeof(long))
    cdef long *touched = <long *> malloc((n_b + 1) * sizeof(long))
    if not mem_count or not mem_off or not mem_val or not overlap or not touched:
        free(mem_count); free(mem_off); free(mem_val); free(overlap); free(touched)
        raise MemoryError()

    cdef double numerator = 0.0
    cdef long denominator = 0
    cdef Py_ssize_t n_touched, links, common, count, pos
    cdef double resolution
    try:
        for entity in b_sides:
            for m in entity:
                mem_count[m] += 1
        mem_off[0] = 0
        for i in range(n_mentions):
            mem_off[i + 1] = mem_off[i] + mem_count[i]
            mem_count[i] = 0
        for j in range(n_b):
            entity = b_sides[j]
            for m in entity:
                mem_val[mem_off[m] + mem_count[m]] = j
                mem_count[m] += 1

        for entity in a_sides:
            size = len(entity)
            denominator += size
            n_touched = 0
            for m in entity:
                if m >= n_mentions:
                    continue
                for pos in range(mem_off[m], mem_off[m + 1]):
                    j = mem_val[pos]
                    if overlap[j] == 0:
                        touched[n_touched] = j
                        n_touched += 1
                    overlap[j] += 1
            if size == 1:
                resolution = 1.0 if n_touched > 0 else 0.0
            else:
                links = size * (size - 1) // 2
                common = 0
                for k in range(n_touched):
                    count = overlap[touched[k]]
                    common += count * (count - 1) // 2
                resolution = <double> common / <double> links
            numerator += size * resolution
            for k in range(n_touched):
                overlap[touched[k]] = 0
    finally:
        free(mem_count)
        free(mem_off)
        free(mem_val)
        free(overlap)
        free(touched)
    return numerator, denominator
