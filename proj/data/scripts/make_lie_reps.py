"""Permutation representations of Sp6(2), U4(2) = PSp4(3) and Omega8+(2).

Sp6(2) acts on the 63 nonzero vectors of F_2^6, PSp4(3) on the 40 points of
PG(3,3); both are generated by symplectic transvections x -> x + c B(x,v) v.
Omega8+(2) acts on the 120 nonsingular vectors of the form
x0 x4 + x1 x5 + x2 x6 + x3 x7 through products of an even number of
reflections x -> x + B(x,v) v with Q(v) = 1.
Two random products are kept once sympy certifies that they generate a group
of the full order.
"""
import itertools
import random
import sys

from sympy.combinatorics import Permutation, PermutationGroup


def form(x, y, q, n):
    h = n // 2
    return sum(x[i] * y[i + h] - x[i + h] * y[i] for i in range(h)) % q


def normalize(v, q):
    for a in v:
        if a:
            inv = pow(a, -1, q)
            return tuple(c * inv % q for c in v)
    return None


def points(q, n):
    pts = set()
    for v in itertools.product(range(q), repeat=n):
        if any(v):
            pts.add(normalize(v, q))
    return sorted(pts)


def transvection(v, c, pts, index, q, n):
    images = []
    for x in pts:
        b = form(x, v, q, n)
        y = tuple((x[i] + c * b * v[i]) % q for i in range(n))
        images.append(index[normalize(y, q)])
    return images


def compose(p, r):
    return [r[p[i]] for i in range(len(p))]


def search(q, n, order, seed):
    pts = points(q, n)
    index = {p: i for i, p in enumerate(pts)}
    trans = [transvection(v, 1, pts, index, q, n) for v in pts]
    rng = random.Random(seed)
    while True:
        gens = []
        for _ in range(2):
            g = list(range(len(pts)))
            for _ in range(8):
                g = compose(g, rng.choice(trans))
            gens.append(g)
        if PermutationGroup([Permutation(g) for g in gens]).order() == order:
            return len(pts), gens


def quadratic(x):
    return (x[0] * x[4] + x[1] * x[5] + x[2] * x[6] + x[3] * x[7]) % 2


def polar(x, y):
    return (quadratic(tuple((a + b) % 2 for a, b in zip(x, y))) + quadratic(x) + quadratic(y)) % 2


def search_omega8(order, seed):
    pts = [v for v in itertools.product(range(2), repeat=8) if quadratic(v) == 1]
    index = {p: i for i, p in enumerate(pts)}
    refl = []
    for v in pts:
        refl.append([index[tuple((x[i] + polar(x, v) * v[i]) % 2 for i in range(8))] for x in pts])
    rng = random.Random(seed)
    while True:
        gens = []
        for _ in range(2):
            g = list(range(len(pts)))
            for _ in range(8):
                g = compose(g, rng.choice(refl))
            gens.append(g)
        if PermutationGroup([Permutation(g) for g in gens]).order() == order:
            return len(pts), gens


def cycles(images):
    seen = [False] * len(images)
    out = []
    for s in range(len(images)):
        if seen[s]:
            continue
        c = []
        p = s
        while not seen[p]:
            seen[p] = True
            c.append(p)
            p = images[p]
        if len(c) > 1:
            out.append("(" + " ".join(map(str, c)) + ")")
    return "".join(out) or "()"


def write(path, title, note, degree, gens, order):
    with open(path, "w") as f:
        f.write(f"# {title}\n# {note}\n# generated by data/scripts/make_lie_reps.py; order {order} certified by sympy\n")
        f.write(f"degree {degree}\n")
        for g in gens:
            f.write(cycles(g) + "\n")


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "data"
    d, gens = search(2, 6, 1451520, 1)
    write(f"{out}/sp6_2.grp", "Sp6(2) on the 63 nonzero vectors of F_2^6",
          "products of symplectic transvections; points are vectors in lexicographic order", d, gens, 1451520)
    d, gens = search(3, 4, 25920, 2)
    write(f"{out}/u4_2.grp", "U4(2) = PSp4(3) on the 40 points of PG(3,3)",
          "products of symplectic transvections; points are normalized vectors in lexicographic order", d, gens, 25920)
    d, gens = search_omega8(174182400, 3)
    write(f"{out}/o8p_2.grp", "Omega8+(2) on the 120 nonsingular vectors of F_2^8",
          "products of eight orthogonal reflections; points are vectors in lexicographic order", d, gens, 174182400)
