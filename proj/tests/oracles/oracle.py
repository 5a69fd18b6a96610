"""Brute-force reference computations used to freeze expected values in the
C++ test suites. Deliberately naive: direct formula evaluation, full table
scans, no pruning. Run: python3 tests/oracles/oracle.py"""
import itertools

T3 = [[0, 1, 2], [1, 1, 2], [2, 2, 1]]
S3 = [[0, 0, 0], [0, 1, 0], [0, 0, 2]]
TAU = [0, 2, 1]
ID3 = [0, 1, 2]


def assoc(t):
    n = len(t)
    return all(t[t[a][b]][c] == t[a][t[b][c]]
               for a in range(n) for b in range(n) for c in range(n))


def first_nonassoc(t):
    n = len(t)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    return (a, b, c)
    return None


def inverses(t):
    n = len(t)
    inv = []
    for a in range(n):
        c = [x for x in range(n) if t[t[a][x]][a] == a and t[t[x][a]][x] == x]
        if len(c) != 1:
            return None
        inv.append(c[0])
    return inv


def cyclic(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def lam_rho(add, mul, inv):
    n = len(mul)
    lam = [[mul[a][add[inv[a]][b]] for b in range(n)] for a in range(n)]
    rho = [[mul[inv[add[inv[a]][b]]][b] for b in range(n)] for a in range(n)]
    return lam, rho


def r_apply(r, a, b):
    return r[0][a][b], r[1][a][b]


def braid_first_fail(r):
    n = len(r[0])
    for a in range(n):
        for b in range(n):
            for c in range(n):
                x1, y1 = r_apply(r, a, b)
                y2, z2 = r_apply(r, y1, c)
                x3, y3 = r_apply(r, x1, y2)
                b1, c1 = r_apply(r, b, c)
                a2, b2 = r_apply(r, a, b1)
                b3, c3 = r_apply(r, b2, c1)
                if (x3, y3, z2) != (a2, b3, c3):
                    return (a, b, c)
    return None


def r12(r, t):
    x, y = r_apply(r, t[0], t[1]); return (x, y, t[2])


def r23(r, t):
    y, z = r_apply(r, t[1], t[2]); return (t[0], y, z)


def r13(r, t):
    x, z = r_apply(r, t[0], t[2]); return (x, t[1], z)


def qybe(r):
    n = len(r[0])
    for t in itertools.product(range(n), repeat=3):
        if r12(r, r13(r, r23(r, t))) != r23(r, r13(r, r12(r, t))):
            return t
    return None


def pentagon(r):
    n = len(r[0])
    for t in itertools.product(range(n), repeat=3):
        if r23(r, r13(r, r12(r, t))) != r12(r, r23(r, t)):
            return t
    return None


def as_fn(r):
    n = len(r[0])
    return tuple(r[0][a][b] * n + r[1][a][b] for a in range(n) for b in range(n))


def index_period(r):
    f = as_fn(r)
    N = len(f)
    powers = [tuple(range(N))]
    while True:
        nxt = tuple(f[p] for p in powers[-1])
        if nxt in powers:
            j = powers.index(nxt)
            return j, len(powers) - j
        powers.append(nxt)


def is_semibrace(add, mul, inv):
    n = len(mul)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][add[inv[a]][c]]]:
                    return False
    return True


def main():
    print("T3 inv", inverses(T3), "S3 inv", inverses(S3))
    print("nonassoc [[0,1],[0,0]]", first_nonassoc([[0, 1], [0, 0]]))
    # endomorphisms
    for name, t in [("T3", T3), ("S3", S3)]:
        n = len(t)
        ends = [f for f in itertools.product(range(n), repeat=n)
                if all(f[t[a][b]] == t[f[a]][f[b]] for a in range(n) for b in range(n))]
        print("End", name, len(ends), ends)
        auts = [f for f in itertools.permutations(range(n))
                if all(f[t[a][b]] == t[f[a]][f[b]] for a in range(n) for b in range(n))]
        print("Aut", name, auts)
    # C2 additions
    C2 = cyclic(2); inv2 = inverses(C2)
    cnt = 0
    for e in itertools.product(range(2), repeat=4):
        add = [list(e[0:2]), list(e[2:4])]
        if assoc(add) and is_semibrace(add, C2, inv2):
            cnt += 1
    print("C2 additions", cnt)
    # T3 additions
    inv = inverses(T3)
    hits = []
    for e in itertools.product(range(3), repeat=9):
        add = [list(e[0:3]), list(e[3:6]), list(e[6:9])]
        if assoc(add) and is_semibrace(add, T3, inv):
            hits.append(add)
    nsol = sum(1 for add in hits if braid_first_fail(lam_rho(add, T3, inv)) is None)
    print("T3 additions", len(hits), "solutions", nsol)
    # inverse semigroups up to iso
    for n in (1, 2, 3):
        reps = set()
        for e in itertools.product(range(n), repeat=n * n):
            t = [list(e[i * n:(i + 1) * n]) for i in range(n)]
            if not assoc(t) or inverses(t) is None:
                continue
            best = None
            for p in itertools.permutations(range(n)):
                q = [0] * n
                for i in range(n):
                    q[p[i]] = i
                rel = tuple(p[t[q[i]][q[j]]] for i in range(n) for j in range(n))
                best = rel if best is None or rel < best else best
            reps.add(best)
        print("inverse semigroups order", n, len(reps))
    # trivial solutions on T3
    rz = [[b for b in range(3)] for a in range(3)]
    lz = [[a for b in range(3)] for a in range(3)]
    r_rz = lam_rho(rz, T3, inv)
    r_lz = lam_rho(lz, T3, inv)
    print("r_rz", r_rz, "braid", braid_first_fail(r_rz), index_period(r_rz))
    print("r_rz qybe", qybe(r_rz), "pent", pentagon(r_rz))
    tau_rz = (r_rz[1], r_rz[0])
    tau_lz = (r_lz[1], r_lz[0])
    print("tau r_rz pent", pentagon(tau_rz), "qybe", qybe(tau_rz))
    print("tau r_lz pent", pentagon(tau_lz), "qybe", qybe(tau_lz), tau_lz)
    cl = lam_rho(T3, T3, inv)
    print("clifford ab", cl, braid_first_fail(cl), index_period(cl))

    # double semidirect case study
    S_add = [[0] * 3 for _ in range(3)]
    T_add = T3
    inv_s = inverses(S3)
    phis = [f for f in itertools.product(range(3), repeat=3)
            if all(f[T3[a][b]] == T3[f[a]][f[b]] for a in range(3) for b in range(3))]
    sigma = [ID3, ID3, TAU]
    for phi in phis:
        # carrier (a,u) -> 3a+u
        n = 9
        add = [[0] * n for _ in range(n)]
        mul = [[0] * n for _ in range(n)]
        for a, u, b, v in itertools.product(range(3), repeat=4):
            add[3 * a + u][3 * b + v] = 3 * S_add[a][b] + T_add[phi[u]][v]
            mul[3 * a + u][3 * b + v] = 3 * S3[a][sigma[u][b]] + T3[u][v]
        binv = inverses(mul)
        ok = assoc(add) and binv is not None and is_semibrace(add, mul, binv)
        r = lam_rho(add, mul, binv)
        w = braid_first_fail(r)
        wl = None if w is None else [(x // 3, x % 3) for x in w]
        ip = index_period(r)
        print("phi", phi, "valid", ok, "braid witness", w, wl, "ind/per", ip)

    # Example: semidirect S3 (a+b=b) x T3 (u+v=uv) via sigma
    n = 9
    add = [[0] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    for a, u, b, v in itertools.product(range(3), repeat=4):
        add[3 * a + u][3 * b + v] = 3 * b + T3[u][v]
        mul[3 * a + u][3 * b + v] = 3 * S3[a][sigma[u][b]] + T3[u][v]
    binv = inverses(mul)
    print("semidirect inv", binv, "(x,y)^-1 =", divmod(binv[3 * 1 + 2], 3))
    r = lam_rho(add, mul, binv)
    print("semidirect rB braid", braid_first_fail(r), "ind/per", index_period(r))

    # C6 asymmetric example, f(a) = a^3 (additively 3a)
    m = 6
    f = [(3 * a) % m for a in range(m)]
    Sadd = [[(b + f[(a - b) % m]) % m for b in range(m)] for a in range(m)]
    Smul = cyclic(m)
    print("C6 S add assoc", assoc(Sadd), "semibrace", is_semibrace(Sadd, Smul, inverses(Smul)))
    N = 36
    add = [[0] * N for _ in range(N)]
    mul = [[0] * N for _ in range(N)]
    for a, u, b, v in itertools.product(range(m), repeat=4):
        # (a+b, b(a,b) + u^b + v) with b(a,b) = a, u^b = 1 (=0), T sum = product
        add[m * a + u][m * b + v] = m * Sadd[a][b] + (a + v) % m
        mul[m * a + u][m * b + v] = m * ((a + b) % m) + (u + v) % m
    binv = inverses(mul)
    print("C6 product add assoc first fail", first_nonassoc(add))
    print("C6 product left axiom", is_semibrace(add, mul, binv))
    r = lam_rho(add, mul, binv)
    closed_ok = True
    for a, u, b, v in itertools.product(range(m), repeat=4):
        lam = (m * ((a + b + f[(-a - b) % m]) % m) + (u - a + v) % m)
        rho = m * f[(a + b) % m] + a
        if r[0][m * a + u][m * b + v] != lam or r[1][m * a + u][m * b + v] != rho:
            closed_ok = False
    print("C6 closed form matches lambda_rho", closed_ok)
    print("C6 rB braid", braid_first_fail(r), "ind/per", index_period(r))


main()
