#!/usr/bin/env python3
"""Regenerate data/b006255.txt (Graham's sequence, OEIS A006255).

Independent brute force over the definition: a(n) is the least s >= n such
that some subset of [n, s] containing n has a square product. A product is
a square iff the GF(2) sum of the squarefree kernels vanishes, so a(n) is
the first s for which kernel(n) lies in the GF(2) span of the kernels of
n+1..s. Kept deliberately separate from the C++ solver so the two can be
cross-checked.
"""
import sys

def squarefree_kernel(x):
    mask, p = 0, 2
    while p * p <= x:
        e = 0
        while x % p == 0:
            x //= p
            e += 1
        if e % 2 == 1:
            mask ^= 1 << p
        p += 1
    if x > 1:
        mask ^= 1 << x
    return mask

def reduce_against(basis, v):
    for b in basis:
        v = min(v, v ^ b)
    return v

def graham2(n):
    if n == 0:
        return 0
    target = squarefree_kernel(n)
    if target == 0:
        return n
    basis, s = [], n
    while True:
        s += 1
        v = reduce_against(basis, squarefree_kernel(s))
        if v:
            basis.append(v)
            basis.sort(reverse=True)
        if reduce_against(basis, target) == 0:
            return s

def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 120
    print("# A006255: Graham's sequence, a(n) for n = 1..%d." % n_max)
    for n in range(1, n_max + 1):
        print(n, graham2(n))

if __name__ == "__main__":
    main()
