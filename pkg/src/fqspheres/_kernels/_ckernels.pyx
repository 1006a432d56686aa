# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled counting kernels; see _pykernels for the shared contract."""

from libc.stdlib cimport calloc, free

BACKEND_NAME = "compiled"


cdef long long* _as_array(list xs) except NULL:
    cdef Py_ssize_t n = len(xs)
    cdef long long* arr = <long long*> calloc(n if n > 0 else 1, sizeof(long long))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        arr[i] = xs[i]
    return arr


cdef inline long long _residue(long long v, long long q):
    # C % truncates toward zero; shift negatives back into range.
    v %= q
    if v < 0:
        v += q
    return v


def incidences_naive(int q, int d, list pts, list sph):
    """Direct double loop: test every (point, sphere) pair."""
    cdef Py_ssize_t n = len(pts) // d
    cdef Py_ssize_t m = len(sph) // (d + 1)
    cdef long long* P = NULL
    cdef long long* S = NULL
    cdef long long* center
    cdef long long s, t, lam, total = 0
    cdef Py_ssize_t i, j
    cdef int k
    try:
        P = _as_array(pts)
        S = _as_array(sph)
        for j in range(m):
            center = S + j * (d + 1)
            lam = center[d]
            for i in range(n):
                s = 0
                for k in range(d):
                    t = P[i * d + k] - center[k]
                    s += t * t
                if s % q == lam:
                    total += 1
        return total
    finally:
        free(P)
        free(S)


def incidences_bucketed(int q, int d, list pts, list sph):
    """Group spheres by center, then histogram distances from each center."""
    cdef Py_ssize_t stride = d + 1
    cdef Py_ssize_t m = len(sph) // stride
    cdef dict groups = {}
    cdef Py_ssize_t j
    for j in range(m):
        key = tuple(sph[j * stride : j * stride + d])
        if key in groups:
            groups[key].append(sph[j * stride + d])
        else:
            groups[key] = [sph[j * stride + d]]
    cdef Py_ssize_t n = len(pts) // d
    cdef long long* P = _as_array(pts)
    cdef long long* hist = <long long*> calloc(q, sizeof(long long))
    cdef long long* C = <long long*> calloc(d if d > 0 else 1, sizeof(long long))
    cdef long long total = 0, s, t
    cdef Py_ssize_t i
    cdef int k, w
    if hist == NULL or C == NULL:
        free(P)
        free(hist)
        free(C)
        raise MemoryError()
    try:
        for key, lams in groups.items():
            for k in range(d):
                C[k] = key[k]
            for w in range(q):
                hist[w] = 0
            for i in range(n):
                s = 0
                for k in range(d):
                    t = P[i * d + k] - C[k]
                    s += t * t
                hist[s % q] += 1
            for lam in lams:
                total += hist[<Py_ssize_t> lam]
        return total
    finally:
        free(P)
        free(hist)
        free(C)


def incidences_lifted(int q, int d, list pts, list sph):
    """Count pairs whose lifted difference lands on the paraboloid."""
    cdef Py_ssize_t stride = d + 1
    cdef Py_ssize_t n = len(pts) // d
    cdef Py_ssize_t m = len(sph) // stride
    cdef long long* B = <long long*> calloc((n * stride) if n > 0 else 1,
                                            sizeof(long long))
    cdef long long* C = <long long*> calloc((m * stride) if m > 0 else 1,
                                            sizeof(long long))
    if B == NULL or C == NULL:
        free(B)
        free(C)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef int k
    cdef long long s, t, total = 0
    try:
        for i in range(n):
            for k in range(d):
                B[i * stride + k] = pts[i * d + k]
            B[i * stride + d] = 0
        for j in range(m):
            for k in range(d):
                C[j * stride + k] = sph[j * stride + k]
            C[j * stride + d] = _residue(-<long long> sph[j * stride + d], q)
        for i in range(n):
            for j in range(m):
                s = 0
                for k in range(d):
                    t = B[i * stride + k] - C[j * stride + k]
                    s += t * t
                if s % q == _residue(B[i * stride + d] - C[j * stride + d], q):
                    total += 1
        return total
    finally:
        free(B)
        free(C)


def paraboloid_diff_table(int q, int d):
    """Difference-count table of the lifted paraboloid against itself."""
    cdef Py_ssize_t stride = d + 1
    cdef Py_ssize_t nrows = 1
    cdef int k
    for k in range(d):
        nrows *= q
    cdef Py_ssize_t size = nrows * q
    cdef long long* rows = <long long*> calloc(nrows * stride, sizeof(long long))
    cdef long long* u = <long long*> calloc(d if d > 0 else 1, sizeof(long long))
    cdef long long* counts = <long long*> calloc(size, sizeof(long long))
    if rows == NULL or u == NULL or counts == NULL:
        free(rows)
        free(u)
        free(counts)
        raise MemoryError()
    cdef Py_ssize_t r, a, b, idx
    cdef long long s
    cdef int pos
    try:
        for r in range(nrows):
            s = 0
            for k in range(d):
                rows[r * stride + k] = u[k]
                s += u[k] * u[k]
            rows[r * stride + d] = s % q
            pos = d - 1
            while pos >= 0:
                u[pos] += 1
                if u[pos] == q:
                    u[pos] = 0
                    pos -= 1
                else:
                    break
        for a in range(nrows):
            for b in range(nrows):
                idx = 0
                for k in range(stride):
                    idx = idx * q + _residue(
                        rows[a * stride + k] - rows[b * stride + k], q)
                counts[idx] += 1
        out = [0] * size
        for r in range(size):
            out[r] = counts[r]
        return out
    finally:
        free(rows)
        free(u)
        free(counts)


def determined_circle_ids(int q, list pts):
    """Sorted ids of circles through some non-collinear triple of pts."""
    cdef Py_ssize_t n = len(pts) // 2
    cdef long long* xs = <long long*> calloc(n if n > 0 else 1, sizeof(long long))
    cdef long long* ys = <long long*> calloc(n if n > 0 else 1, sizeof(long long))
    cdef long long* inv = <long long*> calloc(q, sizeof(long long))
    cdef unsigned char* flags = <unsigned char*> calloc(q * q * q, 1)
    if xs == NULL or ys == NULL or inv == NULL or flags == NULL:
        free(xs)
        free(ys)
        free(inv)
        free(flags)
        raise MemoryError()
    cdef Py_ssize_t i, j, k, cid
    cdef long long a, e, acc
    cdef long long ax, ay, bx, by, cx, cy
    cdef long long s1, r1, r2, dx12, dy12, dy13, disc, dinv, ca, cb, lam
    try:
        for i in range(n):
            xs[i] = pts[2 * i]
            ys[i] = pts[2 * i + 1]
        for a in range(1, q):
            # Fermat power a^(q-2) by square and multiply
            acc = 1
            e = q - 2
            s1 = a
            while e:
                if e & 1:
                    acc = acc * s1 % q
                s1 = s1 * s1 % q
                e >>= 1
            inv[a] = acc
        for i in range(n - 2):
            ax = xs[i]
            ay = ys[i]
            s1 = ax * ax + ay * ay
            for j in range(i + 1, n - 1):
                bx = xs[j]
                by = ys[j]
                dx12 = ax - bx
                dy12 = ay - by
                r1 = s1 - bx * bx - by * by
                for k in range(j + 1, n):
                    cx = xs[k]
                    cy = ys[k]
                    dy13 = ay - cy
                    disc = _residue(dx12 * dy13 - (ax - cx) * dy12, q)
                    if disc == 0:
                        continue
                    r2 = s1 - cx * cx - cy * cy
                    dinv = inv[4 * disc % q]
                    ca = _residue(2 * (r1 * dy13 - r2 * dy12) * dinv, q)
                    cb = _residue(2 * (dx12 * r2 - (ax - cx) * r1) * dinv, q)
                    lam = ((ax - ca) * (ax - ca) + (ay - cb) * (ay - cb)) % q
                    flags[(ca * q + cb) * q + lam] = 1
        out = []
        for cid in range(q * q * q):
            if flags[cid]:
                out.append(cid)
        return out
    finally:
        free(xs)
        free(ys)
        free(inv)
        free(flags)


def circle_point_counts(int q, list pts):
    """Points-on-circle counts for all q^3 circles of the plane."""
    cdef Py_ssize_t n = len(pts) // 2
    cdef long long* xs = <long long*> calloc(n if n > 0 else 1, sizeof(long long))
    cdef long long* ys = <long long*> calloc(n if n > 0 else 1, sizeof(long long))
    cdef long long* counts = <long long*> calloc(q * q * q, sizeof(long long))
    if xs == NULL or ys == NULL or counts == NULL:
        free(xs)
        free(ys)
        free(counts)
        raise MemoryError()
    cdef Py_ssize_t i, base, size
    cdef long long cx, cy, t1, t2
    try:
        for i in range(n):
            xs[i] = pts[2 * i]
            ys[i] = pts[2 * i + 1]
        base = 0
        for cx in range(q):
            for cy in range(q):
                for i in range(n):
                    t1 = xs[i] - cx
                    t2 = ys[i] - cy
                    counts[base + (t1 * t1 + t2 * t2) % q] += 1
                base += q
        size = q * q * q
        out = [0] * size
        for i in range(size):
            out[i] = counts[i]
        return out
    finally:
        free(xs)
        free(ys)
        free(counts)
