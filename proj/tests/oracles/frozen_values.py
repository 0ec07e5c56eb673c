#!/usr/bin/env python3
"""Independent high-precision oracle for the frozen values used in the C++ tests.

Every quantity is evaluated from the literal floor-based definitions with
mpmath at 50 significant digits. Nothing here shares code with the library.
Run: python3 tests/oracles/frozen_values.py
"""
from mpmath import mp, mpf, floor, sqrt, root, matrix, eigh, diag, ones

mp.dps = 50


def k(j, nu):
    return int(floor(mpf(2) ** (j - 1) * nu))


def r(j, nu):
    return int(floor(mpf(2) ** j * nu))


def s(j, nu):
    rj = r(j, nu)
    return (-1) ** rj * mpf(2) ** (j - 1) * nu + (-1) ** (rj + 1) * floor(mpf(rj + 1) / 2)


def S(N, nu, a, b):
    a, b, nu = mpf(a), mpf(b), mpf(nu)
    tot = mpf(0)
    for j in range(1, N + 1):
        kj = k(j, nu)
        x = (b ** (2 ** (j - 1) - kj) * a ** kj) ** (mpf(1) / 2 ** j)
        y = (a ** (kj + 1) * b ** (2 ** (j - 1) - kj - 1)) ** (mpf(1) / 2 ** j)
        tot += s(j, nu) * (x - y) ** 2
    return tot


def R(N, nu, a, b):
    a, b, nu = mpf(a), mpf(b), mpf(nu)
    f = int(floor(mpf(2) ** N * nu))
    p = mpf(2) ** N
    return (f + 1 - p * nu) * (a ** f * b ** (2 ** N - f)) ** (1 / p) + \
        (p * nu - f) * (a ** (f + 1) * b ** (2 ** N - f - 1)) ** (1 / p)


def K(t):
    t = mpf(t)
    return (t + 1) ** 2 / (4 * t)


def beta(N, nu):
    al = floor(mpf(2) ** N * nu) + 1 - mpf(2) ** N * nu
    return min(al, 1 - al)


def show(label, *vals):
    print(label, *[mp.nstr(v, 20) for v in vals])


# young refined
a, b, nu = mpf(2), mpf(5), mpf('0.3')
show("young_refined(0.3,2,5,3) lhs rhs", a ** nu * b ** (1 - nu) + S(3, nu, a, b), nu * a + (1 - nu) * b)
show("S_2(1/4;16,1)", S(2, mpf(1) / 4, 16, 1))
show("R_2(1/4;16,1)", R(2, mpf(1) / 4, 16, 1))

# reverse refined (nu <= 1/2 branch)
sab = sqrt(a * b)
show("reverse_refined(0.3,2,5,3) lhs rhs",
     nu * a + (1 - nu) * b + S(3, 2 * nu, sab, a),
     a ** nu * b ** (1 - nu) + (1 - nu) * (sqrt(a) - sqrt(b)) ** 2)

# minus reverse inductive
def minus_ind(nu, a, b, N):
    nu, a, b = mpf(nu), mpf(a), mpf(b)
    tot = (1 + nu) * a - nu * b
    for j in range(1, N + 1):
        tot += nu * 2 ** (j - 1) * (sqrt(a) - (a ** (2 ** (j - 1) - 1) * b) ** (mpf(1) / 2 ** j)) ** 2
    closed = (1 + 2 ** N * nu) * a - 2 ** N * nu * (a ** (2 ** N - 1) * b) ** (mpf(1) / 2 ** N)
    return tot, closed, a ** (1 + nu) * b ** (-nu)

show("minus_inductive(0.5,9,1,2) lhs closed rhs", *minus_ind('0.5', 9, 1, 2))
show("minus_inductive(1,4,1,1) lhs closed rhs", *minus_ind(1, 4, 1, 1))

nu, a, b = mpf('0.4'), mpf(3), mpf(2)
show("minus_via_s(0.4,3,2,3) lhs rhs", (1 + nu) * a - nu * b + S(3, 1 - nu, a * b, b * b) / b, a ** (1 + nu) * b ** (-nu))
nu, a, b = mpf('1.5'), mpf(2), mpf(3)
xx = a ** (1 + nu) * b ** (-nu)
show("minus_via_s2(1.5,2,3,2) lhs rhs", (1 + nu) * a - nu * b + (1 + nu) * S(2, 1 / (1 + nu), xx, b), xx)

# squared refined
def squared_refined(nu, a, b, N):
    nu, a, b = mpf(nu), mpf(a), mpf(b)
    lhs = (a ** nu * b ** (1 - nu)) ** 2 + s(1, nu) ** 2 * (a - b) ** 2
    for j in range(2, N + 1):
        kj = k(j, nu)
        x = (b ** (2 ** (j - 1) - kj) * a ** kj) ** (mpf(1) / 2 ** (j - 1))
        y = (a ** (kj + 1) * b ** (2 ** (j - 1) - kj - 1)) ** (mpf(1) / 2 ** (j - 1))
        lhs += s(j, nu) * (x - y) ** 2
    return lhs, (nu * a + (1 - nu) * b) ** 2

show("squared_refined(0.3,2,5,4) lhs rhs", *squared_refined('0.3', 2, 5, 4))
nu, a, b = mpf('0.25'), mpf(4), mpf(1)
show("squared_reverse(0.25,4,1,1) lhs rhs term",
     (nu * a + (1 - nu) * b) ** 2 + S(1, 2 * nu, a * b, a * a),
     (a ** nu * b ** (1 - nu)) ** 2 + (1 - nu) ** 2 * (a - b) ** 2, S(1, 2 * nu, a * b, a * a))
nu, a, b = mpf('0.9'), mpf(2), mpf(3)
show("squared_reverse(0.9,2,3,2) lhs rhs",
     (nu * a + (1 - nu) * b) ** 2 + S(2, 2 - 2 * nu, a * b, b * b),
     (a ** nu * b ** (1 - nu)) ** 2 + nu ** 2 * (a - b) ** 2)

# double refinement
nu, a, b, N, M = mpf('0.3'), mpf(2), mpf(5), 2, 2
f = int(floor(2 ** N * nu))
al = f + 1 - 2 ** N * nu
x = (a ** f * b ** (2 ** N - f)) ** (mpf(1) / 2 ** N)
y = (a ** (f + 1) * b ** (2 ** N - f - 1)) ** (mpf(1) / 2 ** N)
show("double(0.3,2,5,2,2) lhs rhs alpha x y",
     a ** nu * b ** (1 - nu) + S(N, nu, a, b) + S(M, al, x, y), nu * a + (1 - nu) * b, al, x, y)

# kantorovich
show("K(2)", K(2))
nu, a, b, N = mpf('0.3'), mpf(2), mpf(5), 2
show("kanto_young_refined(0.3,2,5,2) lhs",
     K((b / a) ** (mpf(1) / 2 ** N)) ** beta(N, nu) * a ** nu * b ** (1 - nu) + S(N, nu, a, b))

def kanto_sab(nu, a, b, N):
    nu, a, b = mpf(nu), mpf(a), mpf(b)
    g2 = (a ** nu * b ** (1 - nu)) ** 2
    if nu <= mpf(1) / 2:
        c = 1 - 2 * nu
        lhs = c ** (2 * nu) * K((b / (c * a)) ** (mpf(1) / 2 ** N)) ** beta(N, 2 * nu) * g2 + nu ** 2 * (a + b) ** 2 \
            + c * b * S(N, c, b / c, a)
    else:
        c = 2 * nu - 1
        lhs = c ** (2 - 2 * nu) * K((c * b / a) ** (mpf(1) / 2 ** N)) ** beta(N, c) * g2 + (1 - nu) ** 2 * (a + b) ** 2 \
            + c * a * S(N, c, a / c, b)
    return lhs, (nu * a + (1 - nu) * b) ** 2

def kanto_nu(nu, a, b, N):
    nu, a, b = mpf(nu), mpf(a), mpf(b)
    g = a ** nu * b ** (1 - nu)
    if nu <= mpf(1) / 2:
        lhs = nu ** (2 * nu) * K((nu * sqrt(a / b)) ** (mpf(1) / 2 ** N)) ** beta(N, 1 - 2 * nu) * g \
            + nu ** 2 * (sqrt(a) - sqrt(b)) ** 2 + S(N, 1 - 2 * nu, b, nu * sqrt(a * b))
    else:
        lhs = (1 - nu) ** (2 - 2 * nu) * K(((1 - nu) * sqrt(b / a)) ** (mpf(1) / 2 ** N)) ** beta(N, 2 * nu - 1) * g \
            + (1 - nu) ** 2 * (sqrt(a) - sqrt(b)) ** 2 + S(N, 2 * nu - 1, a, (1 - nu) * sqrt(a * b))
    return lhs, nu ** 2 * a + (1 - nu) ** 2 * b

show("kanto_square_sab(0.25,4,1,1) lhs rhs", *kanto_sab('0.25', 4, 1, 1))
show("kanto_square_sab(0.75,4,1,2) lhs rhs", *kanto_sab('0.75', 4, 1, 2))
show("kanto_nu_square(0.25,4,1,1) lhs rhs", *kanto_nu('0.25', 4, 1, 1))
show("kanto_nu_square(0.75,4,1,2) lhs rhs", *kanto_nu('0.75', 4, 1, 2))

# heinz
nu, a, b = mpf('0.3'), mpf(2), mpf(5)
show("heinz(0.3,2,5) lower mid upper", 2 * sqrt(a * b), a ** nu * b ** (1 - nu) + a ** (1 - nu) * b ** nu, a + b)
nu, a, b = mpf('0.25'), mpf(4), mpf(1)
H = a ** nu * b ** (1 - nu) + a ** (1 - nu) * b ** nu
show("heinz_refined(0.25,4,1,2) lhs rhs",
     H ** 2 + 2 * nu * (a - b) ** 2 + S(2, 2 * nu, a * b, a * a) + S(2, 2 * nu, a * b, b * b), (a + b) ** 2)
nu, a, b = mpf('0.2'), mpf(4), mpf(1)
H = a ** nu * b ** (1 - nu) + a ** (1 - nu) * b ** nu
show("heinz_reverse(0.2,4,1,2) lhs rhs",
     (a + b) ** 2 + S(2, 4 * nu, sqrt(a ** 3 * b), a * b) + S(2, 4 * nu, sqrt(a * b ** 3), a * b),
     H ** 2 + 2 * nu * (a - b) ** 2 + (1 - 2 * nu) * ((sqrt(a * b) - a) ** 2 + (sqrt(a * b) - b) ** 2))

# log-convex: f3(t) = trace norm of diag(1,4)^t
f3 = lambda t: 1 + mpf(4) ** t
t, N = mpf('0.3'), 2
show("logconvex f3 diag(1,4) t=0.3 N=2 lhs mid rhs",
     K((f3(1) / f3(0)) ** (mpf(1) / 2 ** N)) ** beta(N, t) * f3(t) + S(N, t, f3(1), f3(0)),
     K((f3(1) / f3(0)) ** (mpf(1) / 2 ** N)) ** beta(N, t) * f3(1) ** t * f3(0) ** (1 - t) + S(N, t, f3(1), f3(0)),
     t * f3(1) + (1 - t) * f3(0))

# uin corollary item 2, frobenius, A=diag(1,4), B=diag(2,3), X=ones(2), t=0.4, N=2
def frob_item2(t):
    # ||A^t X B^{1-t}||_F with diagonal A, B and X all ones
    lam, mu = [mpf(1), mpf(4)], [mpf(2), mpf(3)]
    return sqrt(sum((l ** t * m ** (1 - t)) ** 2 for l in lam for m in mu))
t, N = mpf('0.4'), 2
f1v, f0v = frob_item2(1), frob_item2(0)
show("uin item2 lhs rhs",
     K((f1v / f0v) ** (mpf(1) / 2 ** N)) ** beta(N, t) * frob_item2(t) + S(N, t, f1v, f0v), t * f1v + (1 - t) * f0v)

# HS squared refined, A=diag(1,4), B=diag(2,3), X=ones, nu=0.3, N=3 (weights s_j included)
lam, mu = [mpf(1), mpf(4)], [mpf(2), mpf(3)]
tot_l = tot_r = mpf(0)
for l in lam:
    for m in mu:
        lhs, rhs = squared_refined('0.3', l, m, 3)
        tot_l += lhs
        tot_r += rhs
show("hs_squared_refined diag nu=0.3 N=3 lhs rhs", tot_l, tot_r)
