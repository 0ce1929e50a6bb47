# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels (int64).

Signature-compatible with `_purepaths`.  Counts are accumulated in int64;
any addition that would overflow raises OverflowError and the caller falls
back to the pure-Python kernels, so results stay exact.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free

cdef int64_t LIMIT = (<int64_t>1) << 62

BACKEND_NAME = "cython"


cdef inline int64_t checked_add(int64_t a, int64_t b) except? -1:
    if a > LIMIT - b:
        raise OverflowError("int64 path count overflow")
    return a + b


def count_monotone_2d(int W, int H, blocked):
    cdef const unsigned char[::1] mask = blocked
    if mask[0]:
        return 0
    cdef int64_t *ways = <int64_t *> malloc(W * H * sizeof(int64_t))
    if ways == NULL:
        raise MemoryError()
    cdef int x, y, i
    cdef int64_t w
    try:
        for x in range(W):
            for y in range(H):
                i = x * H + y
                if mask[i]:
                    ways[i] = 0
                    continue
                w = 1 if i == 0 else 0
                if x:
                    w = checked_add(w, ways[i - H])
                if y:
                    w = checked_add(w, ways[i - 1])
                ways[i] = w
        return ways[W * H - 1]
    finally:
        free(ways)


def count_monotone_3d(int W, int H, int D, blocked):
    cdef const unsigned char[::1] mask = blocked
    if mask[0]:
        return 0
    cdef int HD = H * D
    cdef int64_t *ways = <int64_t *> malloc(W * HD * sizeof(int64_t))
    if ways == NULL:
        raise MemoryError()
    cdef int x, y, z, i
    cdef int64_t w
    try:
        for x in range(W):
            for y in range(H):
                for z in range(D):
                    i = x * HD + y * D + z
                    if mask[i]:
                        ways[i] = 0
                        continue
                    w = 1 if i == 0 else 0
                    if x:
                        w = checked_add(w, ways[i - HD])
                    if y:
                        w = checked_add(w, ways[i - D])
                    if z:
                        w = checked_add(w, ways[i - 1])
                    ways[i] = w
        return ways[W * HD - 1]
    finally:
        free(ways)


def count_fixed_1d(int W, int sx, int tx, dxs, int length, blocked):
    cdef const unsigned char[::1] mask = blocked
    if mask[sx]:
        return 0
    cdef int nsteps = len(dxs)
    cdef int *dx = <int *> malloc(nsteps * sizeof(int))
    cdef int64_t *cur = <int64_t *> malloc(W * sizeof(int64_t))
    cdef int64_t *nxt = <int64_t *> malloc(W * sizeof(int64_t))
    if dx == NULL or cur == NULL or nxt == NULL:
        free(dx); free(cur); free(nxt)
        raise MemoryError()
    cdef int k, x, nx, step
    cdef int64_t c
    cdef int64_t *tmp
    try:
        for k in range(nsteps):
            dx[k] = dxs[k]
        for x in range(W):
            cur[x] = 0
        cur[sx] = 1
        for step in range(length):
            for x in range(W):
                nxt[x] = 0
            for x in range(W):
                c = cur[x]
                if c == 0:
                    continue
                for k in range(nsteps):
                    nx = x + dx[k]
                    if 0 <= nx < W and not mask[nx]:
                        nxt[nx] = checked_add(nxt[nx], c)
            tmp = cur; cur = nxt; nxt = tmp
        return cur[tx]
    finally:
        free(dx); free(cur); free(nxt)


def count_fixed_2d(int W, int H, int sx, int sy, int tx, int ty,
                   dxs, dys, int length, blocked):
    cdef const unsigned char[::1] mask = blocked
    cdef int size = W * H
    if mask[sx * H + sy]:
        return 0
    cdef int nsteps = len(dxs)
    cdef int *dx = <int *> malloc(nsteps * sizeof(int))
    cdef int *dy = <int *> malloc(nsteps * sizeof(int))
    cdef int64_t *cur = <int64_t *> malloc(size * sizeof(int64_t))
    cdef int64_t *nxt = <int64_t *> malloc(size * sizeof(int64_t))
    if dx == NULL or dy == NULL or cur == NULL or nxt == NULL:
        free(dx); free(dy); free(cur); free(nxt)
        raise MemoryError()
    cdef int k, x, y, nx, ny, i, step
    cdef int64_t c
    cdef int64_t *tmp
    try:
        for k in range(nsteps):
            dx[k] = dxs[k]
            dy[k] = dys[k]
        for i in range(size):
            cur[i] = 0
        cur[sx * H + sy] = 1
        for step in range(length):
            for i in range(size):
                nxt[i] = 0
            for x in range(W):
                for y in range(H):
                    c = cur[x * H + y]
                    if c == 0:
                        continue
                    for k in range(nsteps):
                        nx = x + dx[k]
                        ny = y + dy[k]
                        if 0 <= nx < W and 0 <= ny < H:
                            i = nx * H + ny
                            if not mask[i]:
                                nxt[i] = checked_add(nxt[i], c)
            tmp = cur; cur = nxt; nxt = tmp
        return cur[tx * H + ty]
    finally:
        free(dx); free(dy); free(cur); free(nxt)


def count_fixed_3d(int W, int H, int D, s, t, dxs, dys, dzs, int length, blocked):
    cdef const unsigned char[::1] mask = blocked
    cdef int HD = H * D
    cdef int size = W * HD
    cdef int sx = s[0], sy = s[1], sz = s[2]
    cdef int tx = t[0], ty = t[1], tz = t[2]
    if mask[sx * HD + sy * D + sz]:
        return 0
    cdef int nsteps = len(dxs)
    cdef int *dx = <int *> malloc(nsteps * sizeof(int))
    cdef int *dy = <int *> malloc(nsteps * sizeof(int))
    cdef int *dz = <int *> malloc(nsteps * sizeof(int))
    cdef int64_t *cur = <int64_t *> malloc(size * sizeof(int64_t))
    cdef int64_t *nxt = <int64_t *> malloc(size * sizeof(int64_t))
    if dx == NULL or dy == NULL or dz == NULL or cur == NULL or nxt == NULL:
        free(dx); free(dy); free(dz); free(cur); free(nxt)
        raise MemoryError()
    cdef int k, x, y, z, nx, ny, nz, i, step
    cdef int64_t c
    cdef int64_t *tmp
    try:
        for k in range(nsteps):
            dx[k] = dxs[k]
            dy[k] = dys[k]
            dz[k] = dzs[k]
        for i in range(size):
            cur[i] = 0
        cur[sx * HD + sy * D + sz] = 1
        for step in range(length):
            for i in range(size):
                nxt[i] = 0
            for x in range(W):
                for y in range(H):
                    for z in range(D):
                        c = cur[x * HD + y * D + z]
                        if c == 0:
                            continue
                        for k in range(nsteps):
                            nx = x + dx[k]
                            ny = y + dy[k]
                            nz = z + dz[k]
                            if 0 <= nx < W and 0 <= ny < H and 0 <= nz < D:
                                i = nx * HD + ny * D + nz
                                if not mask[i]:
                                    nxt[i] = checked_add(nxt[i], c)
            tmp = cur; cur = nxt; nxt = tmp
        return cur[tx * HD + ty * D + tz]
    finally:
        free(dx); free(dy); free(dz); free(cur); free(nxt)
