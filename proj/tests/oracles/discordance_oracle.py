"""Brute-force strict-discordance oracle for the bounded scalar encoder."""
import math, random, itertools

def bucket(v, lo, hi, n, w):
    res = (hi - lo) / (n - w)
    v = min(max(v, lo), hi)
    return min(max(math.floor((v - lo) / res), 0), n - w)

def pair_table(samples, enc_bucket, w):
    pairs = []
    for a in samples:
        for b in samples:
            pairs.append((max(0, w - abs(enc_bucket(a) - enc_bucket(b))), abs(a - b)))
    return pairs

def discordant(p, q):
    (o1, d1), (o2, d2) = p, q
    return (o1 > o2 and d1 > d2) or (o1 < o2 and d1 < d2)

def exhaustive_rate(pairs):
    # count over all ordered pair-of-pairs via sorting would be faster; brute force is the oracle
    bad = 0
    for p in pairs:
        for q in pairs:
            bad += discordant(p, q)
    return bad, len(pairs) ** 2

def grid(count, lo, hi):
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]

lo, hi, n, w = 0.0, 45.0, 100, 21
g200 = grid(200, lo, hi)
b = lambda v: bucket(v, lo, hi, n, w)
sub40 = g200[::5]
bad, tot = exhaustive_rate(pair_table(sub40, b, w))
print(f"0..45 config n=100 w=21: 40-subset exhaustive discordant {bad}/{tot} = {bad/tot:.6f}")

# bucket-aligned grid: 200 samples at integer spacing, resolution exactly 1
lo2, hi2, n2, w2 = 0.0, 199.0, 220, 21
g2 = grid(200, lo2, hi2)
b2 = lambda v: bucket(v, lo2, hi2, n2, w2)
bad, tot = exhaustive_rate(pair_table(g2[::5], b2, w2))
print(f"aligned config 0..199 n=220 w=21: 40-subset exhaustive discordant {bad}/{tot}")
# full 200 exhaustive on pair level (overlap anti-monotone in distance => zero)
pt = pair_table(g2, b2, w2)
pt_sorted = sorted(pt, key=lambda t: t[1])
ok = all(pt_sorted[i][0] >= pt_sorted[i + 1][0] or pt_sorted[i][1] == pt_sorted[i + 1][1] for i in range(len(pt_sorted) - 1))
print("aligned full grid overlap non-increasing in distance:", ok)
