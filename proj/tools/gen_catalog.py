#!/usr/bin/env python3
"""Generates data/catalog.txt and include/f2/catalog_data.hpp.

Every isomorphism type of group of order 1..31, as permutation generators in
cycle notation. Groups are assembled from cyclic groups, natural actions,
direct products (disjoint points), metacyclic normal forms and a few
semidirect products with an explicit automorphism, realized through their
left-regular representation. The C++ test suite certifies the result: orders,
per-order counts against the reference gnu table, and pairwise
non-isomorphism.

Usage: tools/gen_catalog.py [repo_root]
"""

import itertools
import pathlib
import sys

# ---------------------------------------------------------------- permutations
# A group is (degree, [perm, ...]) with perms as 0-based image tuples.


def cyc(n, cycles):
    img = list(range(n))
    for c in cycles:
        for i, x in enumerate(c):
            img[x - 1] = c[(i + 1) % len(c)] - 1
    return tuple(img)


def compose(a, b):  # a(b(x))
    return tuple(a[x] for x in b)


def closure(degree, gens):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def cyclic(n):
    if n == 1:
        return (1, [])
    return (n, [cyc(n, [list(range(1, n + 1))])])


def product(*groups):
    degree = sum(g[0] for g in groups)
    gens = []
    offset = 0
    for d, gs in groups:
        for g in gs:
            img = list(range(degree))
            for i in range(d):
                img[i + offset] = g[i] + offset
            gens.append(tuple(img))
        offset += d
    return (degree, gens)


def dihedral_natural(n):
    """D_{2n} on n points, n >= 3."""
    r = cyc(n, [list(range(1, n + 1))])
    s = tuple((n - i) % n for i in range(n))
    return (n, [r, s])


def regular(n, mul):
    """Left-regular representation of a group on elements 0..n-1 (0 = identity)."""
    for a in range(n):
        assert mul(0, a) == a and mul(a, 0) == a
    for a, b, c in itertools.product(range(n), repeat=3):
        assert mul(mul(a, b), c) == mul(a, mul(b, c)), "not associative"
    orders = []
    for a in range(n):
        k, x = 1, a
        while x != 0:
            x = mul(x, a)
            k += 1
        orders.append(k)
    # Greedy generators: largest order first, smallest index on ties.
    cand = sorted(range(n), key=lambda a: (-orders[a], a))
    members = {0}
    gens = []
    for c in cand:
        if c in members:
            continue
        gens.append(c)
        lst = list(members)
        i = 0
        while i < len(lst):
            for g in gens:
                y = mul(lst[i], g)
                if y not in members:
                    members.add(y)
                    lst.append(y)
            i += 1
        if len(members) == n:
            break
    perms = [tuple(mul(g, x) for x in range(n)) for g in gens]
    return (n, perms)


def metacyclic(m, k, r, t):
    """<x, y | x^m = 1, y^k = x^t, y^-1 x y = x^r>."""
    assert pow(r, k, m) == 1 % m and (r * t) % m == t % m
    s = pow(r, -1, m) if m > 1 else 0

    def mul(e1, e2):
        a1, b1 = e1 % m, e1 // m
        a2, b2 = e2 % m, e2 // m
        a = (a1 + a2 * pow(s, b1, m)) % m if m > 1 else 0
        b = b1 + b2
        if b >= k:
            b -= k
            a = (a + t) % m if m > 1 else 0
        return a + m * b

    return regular(m * k, mul)


def semidirect_abelian(moduli, action, acting_order):
    """N x| Z_k with N = Z_{m1} x ... abelian and `action` the generator's automorphism of N."""
    n_elems = list(itertools.product(*[range(m) for m in moduli]))
    index = {e: i for i, e in enumerate(n_elems)}
    nsize = len(n_elems)

    def add(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, moduli))

    def act(e, times):
        for _ in range(times):
            e = action(e)
        return e

    def mul(e1, e2):
        n1, k1 = n_elems[e1 % nsize], e1 // nsize
        n2, k2 = n_elems[e2 % nsize], e2 // nsize
        n = add(n1, act(n2, k1))
        return index[n] + nsize * ((k1 + k2) % acting_order)

    return regular(nsize * acting_order, mul)


def z3_by_d8():
    """Z3 x| D8 with kernel of the action a Klein four subgroup of D8."""
    rho = cyc(4, [[1, 2, 3, 4]])
    sigma = cyc(4, [[1, 3]])
    d8 = sorted(closure(4, [rho, sigma]))
    kernel = set(sorted(closure(4, [compose(rho, rho), sigma])))
    ident = tuple(range(4))
    d8.remove(ident)
    d8 = [ident] + d8
    hidx = {h: i for i, h in enumerate(d8)}

    def mul(e1, e2):
        x1, h1 = e1 % 3, e1 // 3
        x2, h2 = e2 % 3, e2 // 3
        sign = 1 if d8[h1] in kernel else -1
        return (x1 + sign * x2) % 3 + 3 * hidx[compose(d8[h1], d8[h2])]

    return regular(24, mul)


def sl23_on_vectors():
    """SL(2,3) acting on the 8 nonzero vectors of GF(3)^2."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(mat):
        (a, b), (c, d) = mat
        return tuple(idx[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vecs)

    return (8, [act(((1, 1), (0, 1))), act(((0, 2), (1, 0)))])


def heisenberg27():
    """Unitriangular 3x3 matrices over GF(3), acting on GF(3)^2 by (x,y) -> (x + a y + b, y + c)."""
    pts = [(x, y) for x in range(3) for y in range(3)]
    idx = {p: i for i, p in enumerate(pts)}

    def act(f):
        return tuple(idx[f(x, y)] for x, y in pts)

    return (9, [act(lambda x, y: ((x + 1) % 3, y)), act(lambda x, y: (x, (y + 1) % 3)),
                act(lambda x, y: ((x + y) % 3, y))])


def generalized_dihedral_33():
    """(Z3 x Z3) x| Z2 by inversion, acting on GF(3)^2 by v -> +-v + b."""
    pts = [(x, y) for x in range(3) for y in range(3)]
    idx = {p: i for i, p in enumerate(pts)}

    def act(f):
        return tuple(idx[f(x, y)] for x, y in pts)

    return (9, [act(lambda x, y: ((x + 1) % 3, y)), act(lambda x, y: (x, (y + 1) % 3)),
                act(lambda x, y: ((-x) % 3, (-y) % 3))])


def affine_1(p, a):
    """x -> x + 1 and x -> a x on GF(p)."""
    return (p, [tuple((x + 1) % p for x in range(p)), tuple((a * x) % p for x in range(p))])


S3 = (3, [cyc(3, [[1, 2, 3]]), cyc(3, [[1, 2]])])
A4 = (4, [cyc(4, [[1, 2, 3]]), cyc(4, [[1, 2], [3, 4]])])
S4 = (4, [cyc(4, [[1, 2, 3, 4]]), cyc(4, [[1, 2]])])
Z2, Z3, Z4, Z5 = cyclic(2), cyclic(3), cyclic(4), cyclic(5)
V4 = product(Z2, Z2)
D8 = dihedral_natural(4)
Q8 = metacyclic(4, 2, 3, 2)
DIC12 = metacyclic(6, 2, 5, 3)
D10 = dihedral_natural(5)


def catalog():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    c = {1: [("Z1", cyclic(1))]}
    for p in primes:
        c[p] = [(f"Z{p}", cyclic(p))]
    c[4] = [("Z4", Z4), ("Z2xZ2", V4)]
    c[6] = [("Z6", cyclic(6)), ("S3", S3)]
    c[8] = [("Z8", cyclic(8)), ("Z4xZ2", product(Z4, Z2)), ("Z2xZ2xZ2", product(Z2, Z2, Z2)),
            ("D8", D8), ("Q8", Q8)]
    c[9] = [("Z9", cyclic(9)), ("Z3xZ3", product(Z3, Z3))]
    c[10] = [("Z10", cyclic(10)), ("D10", D10)]
    c[12] = [("Z12", cyclic(12)), ("Z6xZ2", product(cyclic(6), Z2)), ("D12", dihedral_natural(6)),
             ("A4", A4), ("Dic12", DIC12)]
    c[14] = [("Z14", cyclic(14)), ("D14", dihedral_natural(7))]
    c[15] = [("Z15", cyclic(15))]
    c[16] = [
        ("Z16", cyclic(16)),
        ("Z4xZ4", product(Z4, Z4)),
        ("Z4xZ2:Z2", semidirect_abelian((4, 2), lambda e: (e[0], (e[1] + e[0]) % 2), 2)),
        ("Z4:Z4", metacyclic(4, 4, 3, 0)),
        ("Z8xZ2", product(cyclic(8), Z2)),
        ("M16", metacyclic(8, 2, 5, 0)),
        ("D16", dihedral_natural(8)),
        ("SD16", metacyclic(8, 2, 3, 0)),
        ("Q16", metacyclic(8, 2, 7, 4)),
        ("Z4xZ2xZ2", product(Z4, Z2, Z2)),
        ("D8xZ2", product(D8, Z2)),
        ("Q8xZ2", product(Q8, Z2)),
        ("D8oZ4", semidirect_abelian((4, 2), lambda e: ((e[0] + 2 * e[1]) % 4, e[1]), 2)),
        ("Z2xZ2xZ2xZ2", product(Z2, Z2, Z2, Z2)),
    ]
    c[18] = [("Z18", cyclic(18)), ("Z6xZ3", product(cyclic(6), Z3)), ("D18", dihedral_natural(9)),
             ("S3xZ3", product(S3, Z3)), ("Z3xZ3:Z2", generalized_dihedral_33())]
    c[20] = [("Z20", cyclic(20)), ("Z10xZ2", product(cyclic(10), Z2)), ("D20", dihedral_natural(10)),
             ("Dic20", metacyclic(10, 2, 9, 5)), ("F20", affine_1(5, 2))]
    c[21] = [("Z21", cyclic(21)), ("Z7:Z3", affine_1(7, 2))]
    c[22] = [("Z22", cyclic(22)), ("D22", dihedral_natural(11))]
    c[24] = [
        ("Z3:Z8", metacyclic(3, 8, 2, 0)),
        ("Z24", cyclic(24)),
        ("SL(2,3)", sl23_on_vectors()),
        ("Dic24", metacyclic(12, 2, 11, 6)),
        ("Z4xS3", product(Z4, S3)),
        ("D24", dihedral_natural(12)),
        ("Dic12xZ2", product(DIC12, Z2)),
        ("Z3:D8", z3_by_d8()),
        ("Z12xZ2", product(cyclic(12), Z2)),
        ("D8xZ3", product(D8, Z3)),
        ("Q8xZ3", product(Q8, Z3)),
        ("S4", S4),
        ("A4xZ2", product(A4, Z2)),
        ("S3xZ2xZ2", product(S3, Z2, Z2)),
        ("Z6xZ2xZ2", product(cyclic(6), Z2, Z2)),
    ]
    c[25] = [("Z25", cyclic(25)), ("Z5xZ5", product(Z5, Z5))]
    c[26] = [("Z26", cyclic(26)), ("D26", dihedral_natural(13))]
    c[27] = [("Z27", cyclic(27)), ("Z9xZ3", product(cyclic(9), Z3)), ("Z3xZ3xZ3", product(Z3, Z3, Z3)),
             ("Heis27", heisenberg27()), ("M27", metacyclic(9, 3, 4, 0))]
    c[28] = [("Z28", cyclic(28)), ("Z14xZ2", product(cyclic(14), Z2)), ("D28", dihedral_natural(14)),
             ("Dic28", metacyclic(14, 2, 13, 7))]
    c[30] = [("Z30", cyclic(30)), ("D30", dihedral_natural(15)), ("S3xZ5", product(S3, Z5)),
             ("D10xZ3", product(D10, Z3))]
    return c


def cycle_string(perm):
    seen = set()
    out = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc_pts = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc_pts.append(x + 1)
            x = perm[x]
        out.append("(" + ",".join(map(str, cyc_pts)) + ")")
    return "".join(out) if out else "()"


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).resolve().parent.parent)
    lines = [
        "# Groups of order 1..31, one isomorphism type per line.",
        "# Format: order|name|degree|gen;gen;...  (cycle notation, 1-based points)",
        "# Generated by tools/gen_catalog.py; do not edit by hand.",
    ]
    for order, entries in sorted(catalog().items()):
        for name, (degree, gens) in entries:
            assert len(closure(degree, gens)) == order, (name, len(closure(degree, gens)))
            lines.append(f"{order}|{name}|{degree}|" + ";".join(cycle_string(g) for g in gens))
    text = "\n".join(lines) + "\n"
    (root / "data" / "catalog.txt").write_text(text)
    header = (
        "#pragma once\n\n"
        "// Generated by tools/gen_catalog.py from the same source as data/catalog.txt.\n\n"
        "namespace f2::detail {\n\n"
        "inline constexpr const char* kCatalogText = R\"CATALOG(\n" + text + ")CATALOG\";\n\n"
        "}  // namespace f2::detail\n"
    )
    (root / "include" / "f2" / "catalog_data.hpp").write_text(header)
    print(f"wrote {len(lines) - 3} catalog entries")


if __name__ == "__main__":
    main()
