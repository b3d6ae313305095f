"""Exact discordance rate of the bucket-permuted scalar encoder (all quadruples, pair-table counting)."""
import numpy as np
from hash_oracle import mix64

LO, HI, N, W = 0.0, 199.0, 220, 21
BUCKETS = N - W + 1
PERM_SEED = 7

def permutation():
    return sorted(range(BUCKETS), key=lambda b: (mix64(PERM_SEED ^ b), b))

def rate(samples, bucket_of):
    perm = permutation()
    rows = []
    for a in samples:
        for b in samples:
            pa, pb = perm[bucket_of(a)], perm[bucket_of(b)]
            rows.append((max(0, W - abs(pa - pb)), abs(a - b)))
    o = np.array([r[0] for r in rows]); d = np.array([r[1] for r in rows])
    bad = 0
    levels = sorted(set(o.tolist()))
    sorted_d = {lv: np.sort(d[o == lv]) for lv in levels}
    for hi_lv in levels:
        for lo_lv in levels:
            if hi_lv <= lo_lv:
                continue
            # pairs p (O=hi) and q (O=lo) with d_p > d_q
            bad += np.searchsorted(sorted_d[lo_lv], sorted_d[hi_lv], side="left").sum()
    total = len(rows) ** 2
    return 2 * bad / total

grid = [float(i) for i in range(200)]
r = rate(grid, lambda v: int(v))
print("perm head", permutation()[:8])
print(f"adversarial exact rate over all quadruples of 200 grid: {r:.6f}")
sigma = (r * (1 - r) / 1e4) ** 0.5
print(f"threshold (rate - 5 sigma at 1e4 quadruples): {r - 5 * sigma:.4f}")

if __name__ == "__main__":
    import math
    # the 0..45 / n=100 / w=21 configuration over 200 evenly spaced samples
    LO, HI, N, W = 0.0, 45.0, 100, 21
    BUCKETS = N - W + 1
    res = (HI - LO) / (N - W)
    g = [45.0 * i / 199 for i in range(200)]
    r2 = rate(g, lambda v: min(max(math.floor(v / res), 0), N - W))
    print(f"0..45 config adversarial exact rate: {r2:.6f}")
