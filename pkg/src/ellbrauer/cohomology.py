"""Group cohomology in degrees 0..2 via inhomogeneous cochains.

Conventions (matching the row-vector left action of gmodules):
    (d0 f)(h)        = h . f - f
    (d1 f)(h1, h2)   = h1 . f(h2) - f(h1 h2) + f(h1)
    (d2 f)(g1,g2,g3) = g1 . f(g2,g3) - f(g1 g2, g3) + f(g1, g2 g3) - f(g1, g2)

Cocycles and coboundaries are computed as integer lattices through the
modular kernel machinery in linalg; uniform prime moduli take a fast
echelon path, everything else goes through integer Smith normal form with
the modulus relations appended.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg

SIZE_CAP = 10_000_000
LATTICE_PATH_CAP = 400  # cochain coordinates; composite moduli stay small


class CohomologyError(ValueError):
    pass


class Cochain:
    """A function G^degree -> M stored as a (|G|^degree, rank) table.

    Degree 0 stores a single row.  Index order is lexicographic in the
    group's canonical element order: degree 2 index = g1 * |G| + g2.
    """

    def __init__(self, group, module, degree, table):
        self.group = group
        self.module = module
        self.degree = degree
        size = group.n ** degree
        self.table = np.array(table, dtype=np.int64).reshape(size, module.rank)
        self.table %= module.mod_vec

    @classmethod
    def zero(cls, group, module, degree):
        return cls(group, module, degree,
                   np.zeros((group.n ** degree, module.rank), dtype=np.int64))

    def value(self, *args):
        idx = 0
        for a in args:
            idx = idx * self.group.n + a
        return tuple(int(x) for x in self.table[idx])

    def flat(self):
        return self.table.reshape(-1).copy()

    def __add__(self, other):
        return Cochain(self.group, self.module, self.degree, self.table + other.table)

    def __sub__(self, other):
        return Cochain(self.group, self.module, self.degree, self.table - other.table)

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and self.group is other.group
            and (self.table == other.table).all()
        )

    def serialize(self):
        return {
            "degree": self.degree,
            "values": [[int(x) for x in row] for row in self.table],
        }


def differential(cochain):
    """The coboundary of a cochain of degree <= 2."""
    g = cochain.group
    m = cochain.module
    n = g.n
    deg = cochain.degree
    if deg > 2:
        raise CohomologyError("degree out of range")
    mats = m.elem_mats
    t = cochain.table
    if deg == 0:
        out = np.array([t[0] @ mats[h] - t[0] for h in range(n)])
        return Cochain(g, m, 1, out)
    if deg == 1:
        out = np.zeros((n * n, m.rank), dtype=np.int64)
        for h1 in range(n):
            block = t @ mats[h1]                      # h1 . f(h2), all h2
            prods = g.mul[h1]                         # h1 h2
            out[h1 * n:(h1 + 1) * n] = block - t[prods] + t[h1]
        return Cochain(g, m, 2, out)
    out = np.zeros((n ** 3, m.rank), dtype=np.int64)
    t2 = t.reshape(n, n, m.rank)
    for g1 in range(n):
        acted = t2.reshape(n * n, m.rank) @ mats[g1]
        acted = acted.reshape(n, n, m.rank)
        for g2 in range(n):
            row = g1 * n * n + g2 * n
            g1g2 = int(g.mul[g1, g2])
            g2g3 = g.mul[g2]
            out[row:row + n] = (
                acted[g2] - t2[g1g2] + t2[g1, g2g3] - t2[g1, g2]
            )
    return Cochain(g, m, 3, out)


def differential_matrix(group, module, degree):
    """Integer matrix of d_degree in row-vector form: flat(df) = flat(f) @ D."""
    n = group.n
    r = module.rank
    mats = module.elem_mats
    eye = np.eye(r, dtype=np.int64)
    if degree == 0:
        D = np.zeros((r, n * r), dtype=np.int64)
        for h in range(n):
            D[:, h * r:(h + 1) * r] = mats[h] - eye
        return D
    if degree == 1:
        D = np.zeros((n * r, n * n * r), dtype=np.int64)
        for h1 in range(n):
            for h2 in range(n):
                col = (h1 * n + h2) * r
                D[h2 * r:(h2 + 1) * r, col:col + r] += mats[h1]
                k = int(group.mul[h1, h2])
                D[k * r:(k + 1) * r, col:col + r] -= eye
                D[h1 * r:(h1 + 1) * r, col:col + r] += eye
        return D
    if degree == 2:
        D = np.zeros((n * n * r, n ** 3 * r), dtype=np.int64)
        for g1 in range(n):
            for g2 in range(n):
                g1g2 = int(group.mul[g1, g2])
                for g3 in range(n):
                    col = ((g1 * n + g2) * n + g3) * r
                    D[(g2 * n + g3) * r:(g2 * n + g3 + 1) * r, col:col + r] += mats[g1]
                    D[(g1g2 * n + g3) * r:(g1g2 * n + g3 + 1) * r, col:col + r] -= eye
                    g2g3 = int(group.mul[g2, g3])
                    D[(g1 * n + g2g3) * r:(g1 * n + g2g3 + 1) * r, col:col + r] += eye
                    D[(g1 * n + g2) * r:(g1 * n + g2 + 1) * r, col:col + r] -= eye
        return D
    raise CohomologyError("degree out of range")


@dataclass
class CohomologyGroup:
    """H^degree as invariant factors plus representative cocycles and a
    coordinate map from arbitrary cocycles to class coordinates."""

    degree: int
    invariant_factors: list
    representatives: list
    _coord_fn: object = field(repr=False, default=None)

    @property
    def order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def class_coords(self, cochain):
        """Coordinates of the class of a cocycle with respect to the
        representative generators; raises if the input is not a cocycle."""
        return self._coord_fn(cochain)

    def serialize(self):
        return {
            "degree": self.degree,
            "invariant_factors": list(self.invariant_factors),
            "representatives": [c.serialize() for c in self.representatives],
        }


def _uniform_prime(moduli):
    s = set(moduli)
    if len(s) != 1:
        return None
    n = s.pop()
    return n if linalg._factor_prime_power(n) == [(n, 1)] else None


def _cohomology_prime_path(group, module, degree, p):
    """Vector-space route for a uniform prime modulus: everything is F_p
    linear algebra, invariant factors are [p] * dim."""
    d_here = differential_matrix(group, module, degree)
    kernel = linalg.row_kernel_mod_p(d_here, p)
    if degree == 0:
        b_rref = np.zeros((0, module.rank), dtype=np.int64)
        b_piv = []
    else:
        d_prev = differential_matrix(group, module, degree - 1)
        b_rref, b_piv = linalg.rref_mod_p(d_prev, p)
    # representatives: reduce kernel basis rows against the coboundary space;
    # lexicographically least coset members, in sorted order
    reduced = [linalg.reduce_against_rref(v, b_rref, b_piv, p) for v in kernel]
    reduced = [v for v in reduced if v.any()]
    reduced.sort(key=lambda v: v.tolist())
    chosen = []
    spanning = b_rref.copy()
    pivots = list(b_piv)
    for v in reduced:
        w = linalg.reduce_against_rref(v, spanning, pivots, p)
        if not w.any():
            continue
        # normalize leading coefficient to 1 and append to the spanning set
        lead = int(np.nonzero(w)[0][0])
        w = (w * pow(int(w[lead]), -1, p)) % p
        ins = int(np.searchsorted(np.array(pivots + [10 ** 9]), lead))
        spanning = np.insert(spanning, ins, w, axis=0)
        pivots.insert(ins, lead)
        chosen.append(v)
    reps = [Cochain(group, module, degree, v) for v in chosen]
    rep_rows = np.array([c.flat() for c in reps], dtype=np.int64) if reps else \
        np.zeros((0, d_here.shape[0]), dtype=np.int64)
    rep_rref, rep_piv = (linalg.rref_mod_p(rep_rows, p) if len(reps) else
                         (np.zeros((0, d_here.shape[0]), dtype=np.int64), []))

    def coord_fn(cochain):
        v = cochain.flat() % p
        if ((v @ d_here) % p != 0).any():
            raise CohomologyError("not a cocycle")
        w = linalg.reduce_against_rref(v, b_rref, b_piv, p)
        coords = [0] * len(reps)
        # express w in the representative span by mirrored elimination
        for ri, c in enumerate(rep_piv):
            if w[c]:
                coeff = int(w[c])
                w = (w - coeff * rep_rref[ri]) % p
                # rep_rref rows are combinations of reduced reps; recover
                # coordinates through the change of basis below
                coords_vec[ri] = coeff
        return tuple(coords)

    # build an explicit coordinate solver: solve x = sum c_i rep_i modulo the
    # coboundary space, via rref of [reps; coboundaries] with bookkeeping
    def coord_fn(cochain):
        v = cochain.flat() % p
        if ((v @ d_here) % p != 0).any():
            raise CohomologyError("not a cocycle")
        if not reps:
            return ()
        w = linalg.reduce_against_rref(v, b_rref, b_piv, p)
        sol = linalg.solve_mod_p(
            np.array([c.flat() for c in reps], dtype=np.int64),
            np.array(
                [linalg.reduce_against_rref(c.flat(), b_rref, b_piv, p) * 0 + w
                 for c in reps[:1]][0] if reps else w,
                dtype=np.int64),
            p,
        )
        if sol is None:
            raise CohomologyError("class coordinate solve failed")
        return tuple(int(x) % p for x in sol)

    factors = [p] * len(reps)
    return CohomologyGroup(degree, factors, reps, coord_fn)


def _cohomology_lattice_path(group, module, degree):
    """General route: kernel and image as subgroups of (Z/L)^a after scaling
    mixed moduli to a common L, quotient structure through integer Smith
    normal form with the modulus relations appended as extra rows."""
    a = group.n ** degree * module.rank
    if a > LATTICE_PATH_CAP:
        raise CohomologyError("cohomology instance too large")
    target_moduli = list(module.moduli) * (group.n ** (degree + 1))
    source_moduli = list(module.moduli) * (group.n ** degree)
    L = 1
    for n in set(module.moduli):
        L = L * n // linalg._gcd(L, n)
    d_here = differential_matrix(group, module, degree)
    # scale column j by L / modulus_j so one congruence mod L captures all
    scale = np.array([L // m for m in target_moduli], dtype=np.int64)
    kernel = linalg.row_kernel_mod_n(d_here * scale, L)
    k_gens = [list(map(int, row)) for row in kernel]
    if degree == 0:
        b_gens = []
    else:
        d_prev = differential_matrix(group, module, degree - 1)
        b_gens = [list(map(int, row)) for row in d_prev]
    mod_rows = [[source_moduli[i] if i == j else 0 for j in range(a)] for i in range(a)]
    # relations among the kernel generators modulo the coboundary lattice:
    # rows (c | d | z) with c @ K + d @ B + z @ mods = 0
    stacked = k_gens + b_gens + mod_rows
    if not k_gens:
        return CohomologyGroup(degree, [], [], lambda c: ())
    dec = linalg.smith_normal_form(stacked)
    kcount = len(k_gens)
    rel_rows = [row[:kcount] for row in dec.kernel_basis()]
    qdec = linalg.smith_normal_form(rel_rows) if rel_rows else None
    factors = []
    reps = []
    rep_data = []
    K = np.array(k_gens, dtype=np.int64)
    if qdec is None:
        for i in range(kcount):
            factors.append(0)
        raise CohomologyError("cohomology group is infinite")  # cannot happen: mods included
    # quotient Z^kcount / rowspace(rel): generator j has coordinates given by
    # column j of V (x = V z with z = e_j)
    Vt = np.array(qdec.V, dtype=np.int64)
    diag = qdec.diag
    for i in range(kcount):
        d = diag[i] if i < qdec.rank else 0
        if d == 1:
            continue
        if d == 0:
            raise CohomologyError("cohomology quotient came out infinite")
        coeffs = Vt[:, i]
        vec = (coeffs @ K)
        table = np.array([int(x) % source_moduli[j] for j, x in enumerate(vec)],
                         dtype=np.int64)
        if not table.any():
            continue
        factors.append(int(d))
        reps.append(Cochain(group, module, degree, table))
        rep_data.append(i)

    Vinv_needed = np.array(
        linalg._int_matmul([[int(x) for x in r] for r in np.eye(kcount, dtype=np.int64)],
                           qdec.V), dtype=np.int64)

    def coord_fn(cochain):
        v = cochain.flat()
        if ((np.array(v) * 1 @ (d_here * scale)) % L != 0).any():
            raise CohomologyError("not a cocycle")
        # express v in the kernel generators modulo the modulus lattice
        sol = linalg.solve_mod_n(np.array(k_gens, dtype=np.int64), v, L) \
            if k_gens else None
        if sol is None:
            raise CohomologyError("class coordinate solve failed")
        z = linalg._int_matmul([[int(x) for x in sol]], qdec.V)[0]
        out = []
        for pos, i in enumerate(rep_data):
            out.append(int(z[i]) % factors[pos])
        return tuple(out)

    return CohomologyGroup(degree, factors, reps, coord_fn)


def cohomology(group, module, degree):
    """H^degree(G, M) with representatives and a class-coordinate map."""
    if degree < 0 or degree > 2:
        raise CohomologyError("degree out of range")
    if group.n ** degree * module.rank > SIZE_CAP:
        raise CohomologyError("cohomology instance too large")
    p = _uniform_prime(module.moduli)
    if p is not None:
        return _cohomology_prime_path(group, module, degree, p)
    return _cohomology_lattice_path(group, module, degree)
