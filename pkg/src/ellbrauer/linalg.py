"""Exact linear algebra: integer Smith normal form with recorded transforms,
and kernel / solve primitives for maps between finite abelian groups
presented as Z^a with a modulus on each coordinate.

Matrices act on row vectors by right multiplication throughout (x -> x @ A).
Integer work uses Python ints (no overflow); bulk modular elimination uses
numpy, where the small moduli keep int64 products safe.
"""

from __future__ import annotations

import numpy as np


def xgcd(a, b):
    """Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _int_matmul(A, B):
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    cols = len(B[0])
    out = []
    for row in A:
        acc = [0] * cols
        for k, a in enumerate(row):
            if a:
                brow = B[k]
                for j in range(cols):
                    acc[j] += a * brow[j]
        out.append(acc)
    return out


class SmithDecomposition:
    """U @ A @ V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...

    The cokernel of x -> x @ A (that is, Z^cols / rowspace(A)) has invariant
    factors [d_i > 1] plus a free part of rank cols - rank.  Rows of U below
    the rank form a basis of the row kernel {x : x @ A = 0}.
    """

    def __init__(self, matrix, diag, rank, U, V):
        self.matrix = matrix
        self.diag = diag
        self.rank = rank
        self.U = U
        self.V = V

    @property
    def invariant_factors(self):
        return [d for d in self.diag[: self.rank] if d > 1]

    @property
    def free_rank(self):
        return len(self.V) - self.rank

    def kernel_basis(self):
        return [row[:] for row in self.U[self.rank:]]

    def verify(self):
        prod = _int_matmul(_int_matmul(self.U, self.matrix), self.V)
        for i, row in enumerate(prod):
            for j, v in enumerate(row):
                want = self.diag[i] if (i == j and i < self.rank) else 0
                if v != want:
                    return False
        return all(
            self.diag[i] % self.diag[i - 1] == 0 for i in range(1, self.rank)
        )


def smith_normal_form(matrix):
    """Smith normal form of an integer matrix (list of int rows).

    Classical elimination with a least-|entry| pivot heuristic; after each
    pivot is isolated, any trailing entry it fails to divide is folded back
    in, which makes the diagonal come out as a divisibility chain directly.
    """
    A = [list(map(int, row)) for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    original = [row[:] for row in A]

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, c):
        Ad, As = A[dst], A[src]
        for k in range(n):
            Ad[k] += c * As[k]
        Ud, Us = U[dst], U[src]
        for k in range(m):
            Ud[k] += c * Us[k]

    def addmul_col(dst, src, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(A[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # clear the pivot column; a nonzero remainder becomes the new,
            # strictly smaller pivot, so this loop terminates
            restart = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    addmul_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    addmul_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            # divisibility repair: fold in any entry the pivot misses
            culprit = None
            d = A[t][t]
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % d != 0:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            addmul_row(t, culprit, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    rank = sum(1 for i in range(min(m, n)) if A[i][i] != 0)
    diag = [A[i][i] for i in range(min(m, n))]
    return SmithDecomposition(original, diag, rank, U, V)


def invariant_factors(matrix):
    return smith_normal_form(matrix).invariant_factors


# -- modular elimination (numpy) ------------------------------------------------


def rref_mod_p(A, p):
    """Reduced row echelon form mod a prime.  Returns (R, pivot_columns)."""
    A = np.array(A, dtype=np.int64) % p
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        rows = np.nonzero(A[r:, c])[0]
        if len(rows) == 0:
            continue
        pr = r + int(rows[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        mask = A[:, c] != 0
        mask[r] = False
        if mask.any():
            A[mask] = (A[mask] - np.outer(A[mask, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def row_kernel_mod_p(A, p):
    """Basis of {x : x @ A == 0 mod p}, via echelon form of the transpose."""
    A = np.array(A, dtype=np.int64) % p
    a = A.shape[0]
    R, pivots = rref_mod_p(A.T, p)
    pivset = set(pivots)
    basis = []
    for f in range(a):
        if f in pivset:
            continue
        v = np.zeros(a, dtype=np.int64)
        v[f] = 1
        for ri, c in enumerate(pivots):
            v[c] = (-int(R[ri, f])) % p
        basis.append(v)
    if not basis:
        return np.zeros((0, a), dtype=np.int64)
    return np.array(basis, dtype=np.int64)


def reduce_against_rref(vec, R, pivots, p):
    """Reduce vec against an RREF basis.  The result has zeros at all pivot
    columns, which makes it the least element of its coset when coordinate
    vectors are compared left to right."""
    v = np.array(vec, dtype=np.int64) % p
    for ri, c in enumerate(pivots):
        if v[c]:
            v = (v - v[c] * R[ri]) % p
    return v


def solve_mod_p(A, b, p):
    """A particular solution of x @ A == b (mod p), or None."""
    A = np.array(A, dtype=np.int64) % p
    b = np.array(b, dtype=np.int64).reshape(-1) % p
    aug = np.concatenate([A.T, b.reshape(-1, 1)], axis=1)
    R, pivots = rref_mod_p(aug, p)
    a = A.shape[0]
    if a in pivots:
        return None
    x = np.zeros(a, dtype=np.int64)
    for ri, c in enumerate(pivots):
        x[c] = R[ri, a]
    if ((x @ A - b) % p != 0).any():
        return None
    return x


def _factor_prime_power(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def _valuations(col, p, e):
    out = np.zeros(len(col), dtype=np.int64)
    tmp = col.copy()
    for _ in range(e):
        div = (tmp % p == 0) & (tmp != 0)
        out[div] += 1
        tmp[div] //= p
    return out


def _echelon_mod_prime_power(A, p, e):
    """Row echelon basis of the row space of A mod p^e.

    Pivots are normalized to exact powers of p (least valuation in their
    column among the unprocessed rows); only rows below the pivot are
    cleared, so every operation is invertible mod p^e and the row space is
    preserved exactly.
    """
    q = p ** e
    A = np.array(A, dtype=np.int64) % q
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if len(nz) == 0:
            continue
        vals = _valuations(col[nz], p, e)
        k = int(np.argmin(vals))
        v = int(vals[k])
        swap_with = r + int(nz[k])
        if swap_with != r:
            A[[r, swap_with]] = A[[swap_with, r]]
        unit = int(A[r, c]) // p ** v
        A[r] = (A[r] * pow(unit % q, -1, q)) % q
        below = np.nonzero(A[r + 1:, c])[0]
        if len(below):
            rows = r + 1 + below
            factors = A[rows, c] // p ** v  # exact: valuation >= v below pivot
            A[rows] = (A[rows] - factors.reshape(-1, 1) * A[r]) % q
        r += 1
    return A[:r]


def row_kernel_mod_n(A, n):
    """Generators of {x in (Z/n)^a : x @ A == 0 mod n}.

    Prime n: a basis from echelon form.  Prime power: echelon of the
    transpose shrinks the system to at most a rows, then an integer Smith
    normal form reads the kernel off the diagonal.  Other composite n: CRT
    over the prime-power parts.  The rows generate the kernel subgroup but
    are not required to be independent.
    """
    A = np.array(A, dtype=np.int64)
    a = A.shape[0]
    factors = _factor_prime_power(n)
    if len(factors) > 1:
        gens = []
        for p, e in factors:
            q = p ** e
            cof = n // q
            unit = cof * pow(cof % q, -1, q)  # 1 mod q, 0 mod n/q
            for g in row_kernel_mod_n(A % q, q):
                row = [(unit * int(x)) % n for x in g]
                if any(row):
                    gens.append(row)
        if not gens:
            return np.zeros((0, a), dtype=np.int64)
        return np.array(gens, dtype=np.int64)
    p, e = factors[0]
    if e == 1:
        return row_kernel_mod_p(A, p)
    H = _echelon_mod_prime_power(A.T % n, p, e)
    if H.shape[0] == 0:
        return np.eye(a, dtype=np.int64)
    # H @ x == 0 mod n  <=>  D @ z == 0 with x = V z  (U unimodular dropped)
    dec = smith_normal_form([[int(x) for x in row] for row in H])
    gens = []
    for i in range(a):
        mult = n // _gcd(dec.diag[i], n) if i < dec.rank else 1
        if mult % n == 0:
            continue
        col = [(int(dec.V[row][i]) * mult) % n for row in range(a)]
        if any(col):
            gens.append(col)
    if not gens:
        return np.zeros((0, a), dtype=np.int64)
    return np.array(gens, dtype=np.int64)


def solve_mod_n(A, b, n):
    """A particular solution of x @ A == b (mod n), or None."""
    factors = _factor_prime_power(n)
    if len(factors) == 1 and factors[0][1] == 1:
        return solve_mod_p(A, b, factors[0][0])
    A = np.array(A, dtype=np.int64)
    a, cols = A.shape
    stacked = [[int(x) for x in row] for row in A] + [
        [n if i == j else 0 for j in range(cols)] for i in range(cols)
    ]
    dec = smith_normal_form(stacked)
    bV = _int_matmul([[int(x) for x in b]], dec.V)[0]
    w = []
    for i in range(a + cols):
        if i < dec.rank:
            if bV[i] % dec.diag[i] != 0:
                return None
            w.append(bV[i] // dec.diag[i])
        else:
            if i < len(bV) and bV[i] != 0:
                return None
            w.append(0)
    z = _int_matmul([w], dec.U)[0]
    x = np.array(z[:a], dtype=np.int64) % n
    if ((x @ A - np.array(b)) % n != 0).any():
        return None
    return x
