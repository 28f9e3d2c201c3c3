# How many elements of F_Q are k-normal, for each k.
from knormal import build_tower, histogram

for pmn in [(2, 1, 3), (2, 1, 7), (2, 1, 4), (3, 1, 4), (2, 2, 3)]:
    T = build_tower(*pmn)
    h = histogram(T, oracle_sample=16, seed=0)
    print(f"p,m,n = {pmn}: {h.counts}  (method {h.method}, total {sum(h.counts.values())} = Q - 1)")
