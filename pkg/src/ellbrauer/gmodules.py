"""Finite abelian groups with a left group action, stored in row-vector form.

An element is a row vector x over the modulus vector (n_1, ..., n_r); the
action of a group element g is x -> x @ mat(g).  Because the action is a left
action on row vectors, per-element matrices compose contravariantly:
mat(g*h) = mat(h) @ mat(g).  They are derived along the stored generator
words and validated against the full multiplication table.
"""

from __future__ import annotations

import itertools
import json

import numpy as np

from . import linalg


class ModuleActionError(ValueError):
    pass


EXHAUSTIVE_CAP = 2 ** 24


class GModule:
    """A module (Z/n_1 x ... x Z/n_r) over a FiniteGroup."""

    def __init__(self, group, moduli, gen_mats, name=""):
        self.group = group
        self.moduli = tuple(int(n) for n in moduli)
        self.rank = len(self.moduli)
        self.name = name
        self.mod_vec = np.array(self.moduli, dtype=np.int64)
        gm = [np.array(m, dtype=np.int64) % self.mod_vec for m in gen_mats]
        if len(gm) != len(group.generators):
            raise ModuleActionError(
                "need one action matrix per group generator "
                f"({len(group.generators)} generators, {len(gm)} matrices)"
            )
        for m in gm:
            if m.shape != (self.rank, self.rank):
                raise ModuleActionError("action matrices must be square of the module rank")
        self.gen_mats = gm
        self.elem_mats = self._derive_elem_mats()
        self._validate()

    def _derive_elem_mats(self):
        n = self.group.n
        mats = np.zeros((n, self.rank, self.rank), dtype=np.int64)
        mats[0] = np.eye(self.rank, dtype=np.int64)
        for i in range(1, n):
            word = self.group.words[i]
            # left action: mat(x * s) = mat(s) @ mat(x)
            parent_word = word[:-1]
            parent = self.group.word_product(parent_word)
            mats[i] = (self.gen_mats[word[-1]] @ mats[parent]) % self.mod_vec
        return mats

    def _validate(self):
        g = self.group
        mv = self.mod_vec
        # mixed moduli require lattice compatibility n_i * m[i][j] == 0 mod n_j
        if len(set(self.moduli)) > 1:
            for m in self.gen_mats:
                for i in range(self.rank):
                    for j in range(self.rank):
                        if (self.moduli[i] * int(m[i, j])) % self.moduli[j]:
                            raise ModuleActionError(
                                "action not well-defined: matrix entry "
                                f"({i},{j}) breaks the modulus lattice"
                            )
        for i in range(g.n):
            mi = self.elem_mats[i]
            for j in range(g.n):
                k = int(g.mul[i, j])
                got = (self.elem_mats[j] @ mi) % mv
                if not (got == self.elem_mats[k]).all():
                    raise ModuleActionError(
                        "action not well-defined: table entry "
                        f"{g.elements[i]!r} * {g.elements[j]!r} violated"
                    )
        # invertibility of every element matrix follows: the table check
        # includes mat(g) @ mat(g^-1) == mat(e) == identity

    # -- basic operations ------------------------------------------------------

    @property
    def order(self):
        out = 1
        for n in self.moduli:
            out *= n
        return out

    def reduce(self, vec):
        return tuple(int(x) % n for x, n in zip(vec, self.moduli))

    def act(self, g_idx, vec):
        v = np.array(vec, dtype=np.int64)
        return self.reduce(v @ self.elem_mats[g_idx])

    def elements(self):
        if self.order > EXHAUSTIVE_CAP:
            raise ModuleActionError("module too large to enumerate")
        ranges = [range(n) for n in self.moduli]
        return [tuple(t) for t in itertools.product(*ranges)]

    def zero(self):
        return (0,) * self.rank

    def invariants(self):
        """All elements fixed by every generator, with the structure of the
        fixed subgroup as invariant factors.  Exhaustive enumeration."""
        fixed = []
        for x in self.elements():
            v = np.array(x, dtype=np.int64)
            if all(
                (tuple((v @ m) % self.mod_vec)) == x for m in self.gen_mats
            ):
                fixed.append(x)
        return fixed, abelian_structure(self.moduli, fixed)

    def descriptor(self):
        return {
            "moduli": list(self.moduli),
            "action": [[[int(x) for x in row] for row in m] for m in self.gen_mats],
        }


def abelian_structure(moduli, elements):
    """Invariant factors of the subgroup of prod(Z/n_i) generated by the
    given coordinate tuples.

    The subgroup is L/Lambda for L = span(lifts) + Lambda with Lambda the
    modulus lattice; its invariant factors are read off the Smith form of
    Lambda expressed in a basis of L.
    """
    r = len(moduli)
    if not elements:
        return []
    gens = [[int(x) for x in e] for e in elements]
    relations = [[moduli[i] if i == j else 0 for j in range(r)] for i in range(r)]
    lbasis = _lattice_basis(gens + relations)
    coords = [_solve_integer(lbasis, row) for row in relations]
    dec = linalg.smith_normal_form(coords)
    return [d for d in dec.diag[: dec.rank] if d > 1]


def _lattice_basis(rows):
    """A square integer basis of the lattice spanned by the rows (which must
    have full column rank)."""
    dec = linalg.smith_normal_form(rows)
    r = len(rows[0])
    if dec.rank != r:
        raise ValueError("lattice does not have full rank")
    # U A V = D -> A = U^-1 D V^-1; rows of D V^-1 form a basis of the row
    # space lattice of A... but U^-1 is needed; instead use Hermite-style:
    # the first r rows of (D @ V^-1) equal (U A), whose row space is the same
    # lattice.  Compute U @ A directly.
    ua = linalg._int_matmul(dec.U, dec.matrix)
    basis = [row for row in ua if any(row)]
    assert len(basis) == r
    return basis


def _solve_integer(basis, target):
    """Solve c @ basis = target exactly over the integers."""
    r = len(basis)
    dec = linalg.smith_normal_form(basis)
    tv = linalg._int_matmul([list(target)], dec.V)[0]
    w = []
    for i in range(r):
        d = dec.diag[i]
        if tv[i] % d != 0:
            raise ValueError("target not in lattice")
        w.append(tv[i] // d)
    return linalg._int_matmul([w], dec.U)[0]


def module_create(group, moduli, gen_mats, name=""):
    """Validated construction; raises ModuleActionError when the matrices
    are inconsistent with the multiplication table."""
    return GModule(group, moduli, gen_mats, name=name)


def trivial_module(group, n, rank=1, name=""):
    eye = [[int(i == j) for j in range(rank)] for i in range(rank)]
    return GModule(group, [n] * rank, [eye] * len(group.generators),
                   name=name or f"trivial(Z/{n})^{rank}")


def restrict(module, handle):
    """Restrict along a subgroup handle: same coordinates, action matrices
    read off the parent's per-element matrices at the subgroup's own
    generators."""
    sub = handle.as_group()
    gen_mats = [module.elem_mats[g] for g in handle.gen_indices]
    return GModule(sub, module.moduli, gen_mats,
                   name=f"{module.name}|{handle.name}" if module.name else "")


def block_submodule(module, coords, name=""):
    """The submodule on a coordinate block, after checking the block is
    preserved by every generator."""
    coords = list(coords)
    other = [i for i in range(module.rank) if i not in coords]
    for m in module.gen_mats:
        if other and (m[np.ix_(coords, other)] != 0).any():
            raise ModuleActionError("coordinate block is not preserved by the action")
    sub_mats = [m[np.ix_(coords, coords)] for m in module.gen_mats]
    return GModule(module.group, [module.moduli[i] for i in coords], sub_mats, name=name)


def induce(module, handle):
    """Induction along a normal subgroup with chosen coset representatives:
    functions from the parent group to the module that are linear over the
    subgroup, acting by right translation of the argument.

    Coordinates are blocks indexed by the coset representatives; the block
    of rep s maps under g through the subgroup element h with s*g = h*s'.
    """
    parent = handle.parent
    if not handle.normal:
        raise ModuleActionError("induction requires a normal subgroup")
    reps = list(handle.coset_reps)
    if len(reps) > 4:
        raise ModuleActionError("induction restricted to index <= 4")
    if module.group.n != handle.order:
        raise ModuleActionError("module is not over the handle's subgroup")
    t = len(reps)
    r = module.rank
    rep_pos = {s: k for k, s in enumerate(reps)}

    def decompose(g):
        # g = h * s with h in the subgroup, s a rep
        for s in reps:
            h = int(parent.mul[g, parent.inv[s]])
            if handle.contains(h):
                return h, s
        raise ModuleActionError("coset representatives do not cover the group")

    gen_mats = []
    for g in parent.generators:
        big = np.zeros((t * r, t * r), dtype=np.int64)
        for k, s in enumerate(reps):
            sg = int(parent.mul[s, g])
            h, s2 = decompose(sg)
            h_sub = handle.position(h)
            # target block k draws from the source block of rep s2 through h
            big[rep_pos[s2] * r:(rep_pos[s2] + 1) * r, k * r:(k + 1) * r] = \
                module.elem_mats[h_sub]
        gen_mats.append(big)
    return GModule(parent, list(module.moduli) * t, gen_mats,
                   name=f"induced({module.name})" if module.name else "induced")


def n1_action_table(n1_module):
    """Column-vector action matrices of the distinguished elements (shear,
    rotation i, and the other two quaternion units j, k) on the rank-3
    block module, with the standard involution identities asserted.

    Values act on columns by left multiplication, i.e. they are the
    transposes of the stored row-action matrices.
    """
    from .groups import GL23_GEN_SHEAR, GL23_GEN_ROT, QUAT_J, QUAT_K, _normalize_matrix

    g = n1_module.group
    out = {}
    wanted = {
        "shear": GL23_GEN_SHEAR,
        "i": GL23_GEN_ROT,
        "j": QUAT_J,
        "k": QUAT_K,
    }
    for label, mat in wanted.items():
        key = _normalize_matrix(mat, 3)
        if key not in g.index:
            raise ModuleActionError("action table mismatch: expected element missing")
        out[label] = [[int(x) for x in row] for row in n1_module.elem_mats[g.index[key]].T]
    neg_e = _normalize_matrix(((-1, 0), (0, -1)), 3)
    ident = np.eye(n1_module.rank, dtype=np.int64)
    if not (n1_module.elem_mats[g.index[neg_e]] == ident).all():
        raise ModuleActionError("action table mismatch: -identity must act trivially")
    for label in ("i", "j", "k"):
        m = np.array(out[label], dtype=np.int64)
        if not ((m @ m) % 2 == ident).all():
            raise ModuleActionError(f"action table mismatch: {label}^2 is not the identity")
    return out


def module_from_descriptor(desc, group):
    if not isinstance(desc, dict) or "moduli" not in desc or "action" not in desc:
        raise ModuleActionError("module descriptor needs 'moduli' and 'action' fields")
    return module_create(group, desc["moduli"], desc["action"])


def module_from_spec(spec, group):
    """Parse shorthand: trivial:N, level3-units (over GL2(Z/3)), or JSON."""
    spec = spec.strip()
    if spec.startswith("{"):
        return module_from_descriptor(json.loads(spec), group)
    parts = spec.split(":")
    if parts[0] == "trivial":
        return trivial_module(group, int(parts[1]))
    if parts[0] == "level3-units":
        from .kummer import build_unit_action_module
        from .fields import field_create

        module, _ = build_unit_action_module(field_create(2, 2), group=group)
        return module
    raise ModuleActionError(f"unknown module spec {spec!r}")
