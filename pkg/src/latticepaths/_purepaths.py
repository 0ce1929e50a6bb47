"""Pure-Python counting kernels.

Same signatures as the compiled module `_fastpaths`; arbitrary-precision
ints, so these never overflow.  Grids are flattened row-major with the last
coordinate fastest; `blocked` is a bytes/bytearray admissibility mask
(1 = point not allowed).
"""

BACKEND_NAME = "python"


def count_monotone_2d(W, H, blocked):
    """Monotone unit-step paths (0,0) -> (W-1,H-1) over the mask."""
    if blocked[0]:
        return 0
    ways = [0] * (W * H)
    ways[0] = 1
    for x in range(W):
        base = x * H
        for y in range(H):
            i = base + y
            if blocked[i]:
                ways[i] = 0
                continue
            w = ways[i]
            if x:
                w += ways[i - H]
            if y:
                w += ways[i - 1]
            ways[i] = w
    return ways[W * H - 1]


def count_monotone_3d(W, H, D, blocked):
    if blocked[0]:
        return 0
    HD = H * D
    ways = [0] * (W * HD)
    ways[0] = 1
    for x in range(W):
        for y in range(H):
            base = x * HD + y * D
            for z in range(D):
                i = base + z
                if blocked[i]:
                    ways[i] = 0
                    continue
                w = ways[i]
                if x:
                    w += ways[i - HD]
                if y:
                    w += ways[i - D]
                if z:
                    w += ways[i - 1]
                ways[i] = w
    return ways[W * HD - 1]


def count_fixed_1d(W, sx, tx, dxs, length, blocked):
    if blocked[sx]:
        return 0
    cur = [0] * W
    cur[sx] = 1
    for _ in range(length):
        nxt = [0] * W
        for x in range(W):
            c = cur[x]
            if not c:
                continue
            for dx in dxs:
                nx = x + dx
                if 0 <= nx < W and not blocked[nx]:
                    nxt[nx] += c
        cur = nxt
    return cur[tx]


def count_fixed_2d(W, H, sx, sy, tx, ty, dxs, dys, length, blocked):
    start = sx * H + sy
    if blocked[start]:
        return 0
    size = W * H
    cur = [0] * size
    cur[start] = 1
    nsteps = len(dxs)
    for _ in range(length):
        nxt = [0] * size
        for x in range(W):
            base = x * H
            for y in range(H):
                c = cur[base + y]
                if not c:
                    continue
                for k in range(nsteps):
                    nx = x + dxs[k]
                    ny = y + dys[k]
                    if 0 <= nx < W and 0 <= ny < H:
                        j = nx * H + ny
                        if not blocked[j]:
                            nxt[j] += c
        cur = nxt
    return cur[tx * H + ty]


def count_fixed_3d(W, H, D, s, t, dxs, dys, dzs, length, blocked):
    HD = H * D
    start = s[0] * HD + s[1] * D + s[2]
    if blocked[start]:
        return 0
    size = W * HD
    cur = [0] * size
    cur[start] = 1
    nsteps = len(dxs)
    for _ in range(length):
        nxt = [0] * size
        for x in range(W):
            for y in range(H):
                base = x * HD + y * D
                for z in range(D):
                    c = cur[base + z]
                    if not c:
                        continue
                    for k in range(nsteps):
                        nx = x + dxs[k]
                        ny = y + dys[k]
                        nz = z + dzs[k]
                        if 0 <= nx < W and 0 <= ny < H and 0 <= nz < D:
                            j = nx * HD + ny * D + nz
                            if not blocked[j]:
                                nxt[j] += c
        cur = nxt
    return cur[t[0] * HD + t[1] * D + t[2]]
