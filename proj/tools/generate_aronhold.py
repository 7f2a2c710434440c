#!/usr/bin/env python3
"""Derive the classical Aronhold invariants S (degree 4) and T (degree 6) of a
ternary cubic by the umbral/bracket method, and emit exact integer formulas as
C++ code (src/aronhold.cpp is generated from this).

A ternary cubic F = sum_{i+j+k=3} c_ijk x^i y^j z^k corresponds to the symmetric
trilinear tensor t with F(x) = sum t_uvw x_u x_v x_w, i.e. for a multidegree
alpha, t_alpha = c_alpha / multinomial(3; alpha).  A product of 3x3 brackets in
which each umbral symbol occurs exactly three times expands to a polynomial in
the symbol coordinates; the umbral substitution (symbol monomial of degree 3
-> matching tensor entry) turns it into an SL3-invariant of the cubic.  The
degree-4 invariant space is spanned by S, the degree-6 one by T.

The script verifies invariance under random unimodular substitutions, pins the
scale on the Hesse pencil x^3+y^3+z^3+6m*xyz, and determines the discriminant
combination T^2 + c*S^3 from known singular cubics.
"""

import itertools
from fractions import Fraction
from math import factorial, gcd

EXPS = sorted((e for e in itertools.product(range(4), repeat=3) if sum(e) == 3),
              reverse=True)
EIDX = {e: i for i, e in enumerate(EXPS)}


def multinom(e):
    return factorial(3) // (factorial(e[0]) * factorial(e[1]) * factorial(e[2]))


# ---- tiny polynomial engine over the 10 cubic coefficients ----------------
# polynomial = dict: (exponent 10-tuple) -> Fraction

def padd(p, q):
    r = dict(p)
    for k, v in q.items():
        nv = r.get(k, Fraction(0)) + v
        if nv:
            r[k] = nv
        elif k in r:
            del r[k]
    return r


def pscale(p, c):
    return {k: v * c for k, v in p.items()} if c else {}


def pmul(p, q):
    r = {}
    for k1, v1 in p.items():
        for k2, v2 in q.items():
            k = tuple(a + b for a, b in zip(k1, k2))
            nv = r.get(k, Fraction(0)) + v1 * v2
            if nv:
                r[k] = nv
            elif k in r:
                del r[k]
    return r


def pvar(e):
    k = [0] * len(EXPS)
    k[EIDX[e]] = 1
    return {tuple(k): Fraction(1)}


def peval(p, vals):
    tot = Fraction(0)
    for k, v in p.items():
        t = v
        for i, m in enumerate(k):
            for _ in range(m):
                t *= vals[i]
        tot += t
    return tot


# ---- umbral expansion ------------------------------------------------------

def bracket_invariant(brackets, nsym):
    """Expand prod of dets of symbol rows, then substitute tensor entries.

    Terms are streamed: each det contributes one of 6 signed permutation picks;
    a pick assigns one coordinate index to each symbol in the bracket.
    """
    perms = [(p, sign) for p, sign in
             [((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
              ((2, 1, 0), -1), ((1, 0, 2), -1), ((0, 2, 1), -1)]]
    total = {}
    for picks in itertools.product(perms, repeat=len(brackets)):
        sign = 1
        deg = [[0, 0, 0] for _ in range(nsym)]
        for (p, s), br in zip(picks, brackets):
            sign *= s
            for sym, coord in zip(br, p):
                deg[sym][coord] += 1
        coeff = Fraction(sign)
        key = [0] * len(EXPS)
        ok = True
        for alpha in deg:
            if sum(alpha) != 3:
                ok = False
                break
            a = tuple(alpha)
            key[EIDX[a]] += 1
            coeff /= multinom(a)
        if not ok:
            continue
        k = tuple(key)
        nv = total.get(k, Fraction(0)) + coeff
        if nv:
            total[k] = nv
        elif k in total:
            del total[k]
    return total


def primitive(p):
    if not p:
        return p
    dens = 1
    for v in p.values():
        dens = dens * v.denominator // gcd(dens, v.denominator)
    g = 0
    for v in p.values():
        g = gcd(g, abs(v.numerator * (dens // v.denominator)))
    return {k: v * dens / g for k, v in p.items()}


# ---- evaluation helpers ----------------------------------------------------

def cubic_coeffs(fn):
    """fn maps (i,j,k) -> coefficient of x^i y^j z^k."""
    return [Fraction(fn(e)) for e in EXPS]


def coeffs_of_product_of_linear(lins):
    """coefficients of product of linear forms given as (a,b,c) triples."""
    poly = {(0, 0, 0): Fraction(1)}
    for (a, b, c) in lins:
        np_ = {}
        for k, v in poly.items():
            for d, coef in (((1, 0, 0), a), ((0, 1, 0), b), ((0, 0, 1), c)):
                if coef == 0:
                    continue
                kk = (k[0] + d[0], k[1] + d[1], k[2] + d[2])
                np_[kk] = np_.get(kk, Fraction(0)) + v * Fraction(coef)
        poly = np_
    return [poly.get(e, Fraction(0)) for e in EXPS]


def subs_linear(coeffs, g):
    """coefficients of F(g*(x,y,z)) given 3x3 integer matrix g (rows)."""
    # build polynomial by expanding each monomial
    lin = [(g[0][0], g[0][1], g[0][2]),
           (g[1][0], g[1][1], g[1][2]),
           (g[2][0], g[2][1], g[2][2])]
    out = [Fraction(0)] * len(EXPS)
    for e, c in zip(EXPS, coeffs):
        if c == 0:
            continue
        lins = [lin[0]] * e[0] + [lin[1]] * e[1] + [lin[2]] * e[2]
        term = coeffs_of_product_of_linear(lins) if lins else None
        for i, v in enumerate(term):
            out[i] += c * v
    return out


def det3(g):
    return (g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
            - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
            + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]))


def check_invariance(inv, weight):
    import random
    rng = random.Random(7)
    trials = 0
    while trials < 4:
        g = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
        if det3(g) == 0:
            continue
        trials += 1
        coeffs = [Fraction(rng.randint(-5, 5)) for _ in EXPS]
        lhs = peval(inv, subs_linear(coeffs, g))
        rhs = Fraction(det3(g)) ** weight * peval(inv, coeffs)
        assert lhs == rhs, ("not invariant", g)
    print("invariance ok (weight %d)" % weight)


def hesse(mnum, mden=1):
    m = Fraction(mnum, mden)
    def fn(e):
        if e in ((3, 0, 0), (0, 3, 0), (0, 0, 3)):
            return 1
        if e == (1, 1, 1):
            return 6 * m
        return 0
    return cubic_coeffs(fn)


def mono(expr):
    d = dict(expr)
    return cubic_coeffs(lambda e: d.get(e, 0))


def cxx_emit(name, p):
    lines = []
    for k in sorted(p.keys(), reverse=True):
        v = p[k]
        assert v.denominator == 1
        factors = []
        for e, m in zip(EXPS, k):
            for _ in range(m):
                factors.append("c[%d]" % EIDX[e])
        cc = int(v)
        sign = "+" if cc >= 0 else "-"
        lines.append("  r %s= Q(%d)*%s;" % (sign, abs(cc), "*".join(factors)))
    return lines


def main():
    print("expanding S bracket...")
    S = bracket_invariant([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)], 4)
    S = primitive(S)
    check_invariance(S, 4)

    # Hesse pencil values at several m pin S(m) as a degree-4 polynomial in m
    import sympy as sp
    msym = sp.Symbol("m")
    pts = [Fraction(k) for k in range(-3, 4)]
    vals = [sp.Rational(peval(S, hesse(q))) for q in pts]
    Sh = sp.interpolate(list(zip([sp.Rational(q) for q in pts], vals)), msym)
    Sh = sp.expand(Sh)
    print("S on Hesse:", Sh)
    ratio = sp.cancel(Sh / (msym - msym**4))
    assert ratio.is_constant(), Sh
    if sp.Rational(ratio) < 0:
        S = pscale(S, Fraction(-1))
        Sh = sp.expand(-Sh)
    print("S Hesse ratio:", sp.cancel(Sh / (msym - msym**4)))

    print("expanding T bracket (6 symbols)...")
    candidates = [
        [(0, 1, 2), (0, 1, 3), (0, 4, 5), (1, 4, 5), (2, 3, 4), (2, 3, 5)],
        [(0, 1, 2), (0, 1, 3), (0, 2, 4), (1, 3, 5), (2, 4, 5), (3, 4, 5)],
        [(0, 1, 2), (0, 3, 4), (1, 3, 5), (0, 1, 5), (2, 3, 4), (2, 4, 5)],
    ]
    T = None
    for br in candidates:
        cand = bracket_invariant(br, 6)
        if cand:
            T = primitive(cand)
            print("using brackets:", br)
            break
    assert T is not None
    check_invariance(T, 6)
    vals = [sp.Rational(peval(T, hesse(q))) for q in pts]
    Th = sp.expand(sp.interpolate(list(zip([sp.Rational(q) for q in pts], vals)), msym))
    print("T on Hesse:", Th)
    ratio = sp.cancel(Th / (1 - 20 * msym**3 - 8 * msym**6))
    print("T/(1-20m^3-8m^6):", ratio)
    if ratio.is_constant() and sp.Rational(ratio) < 0:
        T = pscale(T, Fraction(-1))
        Th = sp.expand(-Th)

    # discriminant combination: T^2 + c*S^3 vanishing on singular cubics
    sing = {
        "z(y^2-xz)": mono({(0, 2, 1): 1, (1, 0, 2): -1}),
        "x(yz+x^2)": mono({(1, 1, 1): 1, (3, 0, 0): 1}),
        "xyz": mono({(1, 1, 1): 1}),
        "cusp": mono({(3, 0, 0): 1, (0, 2, 1): -1}),
        "nodal": mono({(1, 1, 1): 1, (0, 3, 0): -1, (0, 2, 1): -3,
                       (0, 1, 2): -3, (0, 0, 3): -1}),
        "x^2y": mono({(2, 1, 0): 1}),
        "3 conc lines": mono({(2, 1, 0): 1, (1, 2, 0): 1}),
        "hesse m=-1/2": hesse(-1, 2),
    }
    smooth = {
        "fermat": hesse(0),
        "a=-6": hesse(-1),
        "a=1": hesse(Fraction(1, 6)),
        # y^2z - x^3 - xz^2 is the smooth harmonic cubic (j = 1728): T = 0
        "harmonic": mono({(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): -1}),
    }
    c_candidates = set()
    for name, F in sing.items():
        s, t = peval(S, F), peval(T, F)
        print("S,T on %-14s: %s, %s" % (name, s, t))
        if s != 0:
            c_candidates.add(-t * t / (s * s * s))
    print("candidate c values:", c_candidates)
    assert len(c_candidates) == 1
    c = c_candidates.pop()
    disc = lambda F: peval(T, F) ** 2 + c * peval(S, F) ** 3
    for name, F in sing.items():
        assert disc(F) == 0, name
    for name, F in smooth.items():
        assert disc(F) != 0, name
    print("discriminant = T^2 + (%s)*S^3 separates all checks" % c)

    slines = cxx_emit("S", S)
    tlines = cxx_emit("T", T)
    with open("/tmp/aronhold_S.txt", "w") as f:
        f.write("\n".join(slines) + "\n")
    with open("/tmp/aronhold_T.txt", "w") as f:
        f.write("\n".join(tlines) + "\n")
    print("S terms:", len(slines), " T terms:", len(tlines))
    print("monomial order EXPS:", EXPS)


if __name__ == "__main__":
    main()
