"""Independent sympy computation of the frozen values used in the C++ tests.

Run: python3 tests/oracles/derive.py
Nothing here shares code with the library.
"""
import sympy as sp

lam, t, a, b = sp.symbols("lambda t alpha beta")


def algebra(dim, table):
    """table: {(i, j): {k: c}} for i < j."""
    c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), out in table.items():
        for k, v in out.items():
            c[i][j][k] = sp.Rational(v)
            c[j][i][k] = -sp.Rational(v)
    return c


def ad(c, x):
    n = len(c)
    m = sp.zeros(n, n)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                m[k, j] += x[i] * c[i][j][k]
    return m


def e(n, i):
    v = [0] * n
    v[i] = 1
    return v


def killing(c):
    n = len(c)
    ads = [ad(c, e(n, i)) for i in range(n)]
    return sp.Matrix(n, n, lambda i, j: (ads[i] * ads[j]).trace())


so3 = algebra(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}})
heis = algebra(3, {(0, 1): {2: 1}})
sl2 = algebra(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}})
e2 = algebra(3, {(0, 1): {2: 1}, (0, 2): {1: -1}})
# e1, e2, e3, D with [e1,e2]=e3, [D,e1]=e2, [D,e2]=-e1
hgo = algebra(4, {(0, 1): {2: 1}, (1, 3): {0: 1}, (0, 3): {1: -1}})

print("ad(e1) heis:", ad(heis, e(3, 0)).tolist())
print("ad(h) sl2:", ad(sl2, e(3, 0)).tolist())
print("killing so3:", killing(so3).tolist())
print("killing sl2:", killing(sl2).tolist())
print("killing heis:", killing(heis).tolist())
print("charpoly ad e1 so3:", sp.factor(ad(so3, e(3, 0)).charpoly(lam).as_expr()))
print("charpoly ad h sl2:", sp.expand(ad(sl2, e(3, 0)).charpoly(lam).as_expr()))
print("charpoly ad x e2:", ad(e2, e(3, 1)).charpoly(lam).as_expr())
L = ad(e2, e(3, 1))
print("ad x e2 squared zero:", (L * L).is_zero_matrix, "L(r) =", list(L * sp.Matrix(e(3, 0))))

# so3 + so3 with X = e1 + 2 e1'
blk = sp.diag(ad(so3, e(3, 0)), 2 * ad(so3, e(3, 0)))
print("charpoly so3+so3 e1+2e1':", sp.factor(blk.charpoly(lam).as_expr()))
print("L^2 eigen:", (blk * blk).eigenvals())


def translate(c, word, x):
    """Ad(a^-1) x for a = exp(t1 Z1)...exp(tn Zn)."""
    v = sp.Matrix(x)
    for z, tt in word:
        v = (-tt * ad(c, z)).exp() * v
    return v


print("e2 translate r by (x,1):", list(translate(e2, [(e(3, 1), 1)], e(3, 0))))
print("hgo translate e1 by (e2,1):", list(translate(hgo, [(e(4, 1), 1)], e(4, 0))))


def F(c, mproj, word, x):
    v = mproj(translate(c, word, x))
    return (v.T * v)[0]


proj_e2 = lambda v: sp.Matrix([v[1], v[2]])
proj_hgo = lambda v: sp.Matrix([v[0], v[1], v[2]])
print("e2 F(r) at (x,1):", F(e2, proj_e2, [(e(3, 1), 1)], e(3, 0)), "base", F(e2, proj_e2, [], e(3, 0)))
print("hgo F(e1) at (e2,1):", F(hgo, proj_hgo, [(e(4, 1), 1)], e(4, 0)), "base", F(hgo, proj_hgo, [], e(4, 0)))
print("hgo F(e2) at (e1,1):", F(hgo, proj_hgo, [(e(4, 0), 1)], e(4, 1)))
print("hgo F(D) at (e1,1):", F(hgo, proj_hgo, [(e(4, 0), 1)], e(4, 3)))
print("hgo F(e3) at (e1,1),(D,1/2),(e2,-3):",
      F(hgo, proj_hgo, [(e(4, 0), 1), (e(4, 3), sp.Rational(1, 2)), (e(4, 1), -3)], e(4, 2)))
hv = translate(hgo, [(e(4, 1), 1)], e(4, 0))
wv = translate(hgo, [(e(4, 1), 1)], e(4, 2))
print("hgo g(e3,e1) at (e2,1):", (proj_hgo(wv).T * proj_hgo(hv))[0])


def taylor(c, mproj, x, z, k):
    v = mproj((-t * ad(c, z)).exp() * sp.Matrix(x))
    f = sp.simplify((v.T * v)[0])
    return sp.diff(f, t, k).subs(t, 0)


print("e2 taylor X=r Z=x k=2:", taylor(e2, proj_e2, e(3, 0), e(3, 1), 2))
print("e2 taylor X=x Z=r k=1..4:", [taylor(e2, proj_e2, e(3, 1), e(3, 0), k) for k in range(1, 5)])
print("hgo taylor X=e1 Z=e2 k=1..3:", [taylor(hgo, proj_hgo, e(4, 0), e(4, 1), k) for k in range(1, 4)])

# skewness system: L U = a U - b V, L V = b U + a V; rows are the three
# equations g(L^2 W, L W') + g(L W, L^2 W') = 0 style expansions in
# (g(U,U), g(U,V), g(V,V)).
guu, guv, gvv = sp.symbols("guu guv gvv")
# L U = a U - b V, L V = b U + a V; column j holds the image of basis j
Lm = sp.Matrix([[a, b], [-b, a]])


def g(p, q):
    return p[0] * q[0] * guu + (p[0] * q[1] + p[1] * q[0]) * guv + p[1] * q[1] * gvv


U, V = sp.Matrix([1, 0]), sp.Matrix([0, 1])
LU, LV = Lm * U, Lm * V
L2U, L2V = Lm * LU, Lm * LV
eqs = [g(L2U, LU), g(L2V, LV), g(L2U, LV) + g(L2V, LU)]
M = sp.Matrix([[sp.expand(q).coeff(s) for s in (guu, guv, gvv)] for q in eqs])
print("skewness matrix:", M.tolist())
print("det:", sp.factor(M.det()))
print("matrix at (1,2):", M.subs({a: 1, b: 2}).tolist())
print("det at (1,2):", M.det().subs({a: 1, b: 2}))
