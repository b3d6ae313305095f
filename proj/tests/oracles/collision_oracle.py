"""Birthday-bound oracle for hash collisions in a (2R+1)^2 neighborhood plus a Monte-Carlo check."""
import math, random
from hash_oracle import coordinate_hash, neighborhood

def p_all_distinct(k, n):
    return math.prod(1 - i / n for i in range(k))

for n in (100, 1000, 2048):
    print(f"n={n} analytic P(exactly 25)={p_all_distinct(25, n):.5f}")

rng = random.Random(1)
for n in (100, 1000):
    exact = 0
    trials = 4000
    for _ in range(trials):
        x, y = rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)
        bits = {coordinate_hash(cx, cy, 0, n)[0] for cx, cy in neighborhood(x, y, 2)}
        exact += len(bits) == 25
    print(f"n={n} monte-carlo P(exactly 25)={exact / trials:.4f}")
