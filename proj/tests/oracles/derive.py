"""Independent oracle values frozen into the C++ tests.

Uses sympy only; nothing here calls the C++ library. Run:
    python3 tests/oracles/derive.py
"""
from itertools import combinations_with_replacement
from math import comb, prod

import sympy as sp

h = sp.symbols("h")


def trunc(expr, n):
    s = sp.series(expr, h, 0, n + 1).removeO()
    return [sp.Poly(s, h).coeff_monomial(h**i) for i in range(n + 1)]


def ci_segre(degrees, n):
    """s(X, P^n) for a complete intersection: deg X h^c / prod(1 + d h)."""
    c = len(degrees)
    return trunc(prod(degrees) * h**c / prod(1 + d * h for d in degrees), n)


print("# linear spaces P^k in P^n")
for n in range(1, 6):
    for k in range(n):
        print(f"P{k} in P{n}:", trunc(h ** (n - k) / (1 + h) ** (n - k), n))

print("# hypersurfaces")
print("conic:", ci_segre([2], 2))
print("nodal cubic:", ci_segre([3], 2))
print("quadric surface:", ci_segre([2], 3))

print("# twisted cubic: [C] = 3 h^2, deg c1(N) = 4*3 - 2")
print("twisted cubic:", [0, 0, 3, -(4 * 3 - 2)])

print("# complete intersections, n <= 4, degrees <= 3")
for n in range(1, 5):
    for c in range(1, n + 1):
        for ds in combinations_with_replacement([1, 2, 3], c):
            print(f"n={n} ds={''.join(map(str, ds))}:", ci_segre(list(ds), n))

print("# cancellation")
print("line on quadric (1+2h)(h^2-2h^3):", trunc((1 + 2 * h) * (h**2 - 2 * h**3), 3))
print("P4 line/quadric (1+3h+2h^2)(h^3-3h^4):", trunc((1 + 3 * h + 2 * h**2) * (h**3 - 3 * h**4), 4))
print("conic on itself P3 (1+3h+2h^2)(2h^2-6h^3):", trunc((1 + 3 * h + 2 * h**2) * (2 * h**2 - 6 * h**3), 3))
print("linear flag P1<P2<P4:", trunc(h**3 / (1 + h) ** 2, 4))

print("# groebner bases (grevlex)")
x, y, z, w = sp.symbols("x y z w")
for name, gens, vs in [
    ("twisted cubic", [x * z - y**2, x * w - y * z, y * w - z**2], (x, y, z, w)),
    ("cyclic3", [x + y + z, x * y + y * z + z * x, x * y * z - w**3], (x, y, z, w)),
    ("two conics", [x**2 + y**2 - z**2, x * y - z**2], (x, y, z)),
]:
    G = sp.groebner(gens, *vs, order="grevlex")
    print(name, ":", [str(g) for g in G.exprs])

print("# multiplicities at the origin (lowest degree of the affine equation)")
X, Y = sp.symbols("X Y")
for name, f in [
    ("nodal cubic", Y**2 - X**3 - X**2),
    ("cuspidal cubic", Y**2 - X**3),
    ("triple point", Y**2 * X - X**4 - Y**4),
    ("tacnode", Y**2 - X**4),
]:
    print(name, ":", min(sum(m) for m in sp.Poly(f, X, Y).monoms()))

print("# Veronese conic: kernel of k[a,b,c] -> k[s,t], a=s^2, b=st, c=t^2")
a, b, c, s, t = sp.symbols("a b c s t")
G = sp.groebner([a - s**2, b - s * t, c - t**2], s, t, a, b, c, order="lex")
print([str(g) for g in G.exprs if not g.has(s) and not g.has(t)])

print("# rkf and cmk")
print("C(2,1) =", comb(2, 1), "; 2*C(2,1) =", 2 * comb(2, 1))
print("2(1+h)^2 on P^1:", trunc(2 * (1 + h) ** 2, 1))
print("cmk:", {(n, h0): (2**n, 2**n * h0) for n in (0, 1, 2) for h0 in (1, 3)})
