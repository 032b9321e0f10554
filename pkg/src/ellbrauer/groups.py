"""Finite groups as explicit multiplication tables with generator words.

Element order is breadth-first discovery order from the identity, extending
words on the right (ties broken by generator list order), so every element
carries a deterministic word used by the cocycle machinery.
"""

from __future__ import annotations

import json

import numpy as np

CLOSURE_CAP = 10_000


class GroupConstructionError(ValueError):
    pass


def mat_mul_mod(a, b, p):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n))
        for i in range(n)
    )


def mat_det_mod(a, p):
    if len(a) != 2:
        raise ValueError("determinant helper only covers 2x2 matrices")
    return (a[0][0] * a[1][1] - a[0][1] * a[1][0]) % p


def mat_identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _normalize_matrix(m, p):
    return tuple(tuple(int(x) % p for x in row) for row in m)


class FiniteGroup:
    """A finite group given by elements, multiplication table, and words.

    elements[0] is the identity.  words[i] is a tuple of generator positions
    whose left-to-right product equals elements[i].
    """

    def __init__(self, elements, mul, generators, words, name=""):
        self.elements = list(elements)
        self.n = len(self.elements)
        self.mul = np.asarray(mul, dtype=np.int64)
        self.generators = list(generators)
        self.words = list(words)
        self.name = name
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.inv = [0] * self.n
        for i in range(self.n):
            hits = np.nonzero(self.mul[i] == 0)[0]
            if len(hits) != 1:
                raise GroupConstructionError("multiplication table has no unique inverse")
            self.inv[i] = int(hits[0])

    def __repr__(self):
        return f"FiniteGroup({self.name or 'unnamed'}, order={self.n})"

    def mul_idx(self, i, j):
        return int(self.mul[i, j])

    def conj(self, g, h):
        """g * h * g^-1 by index."""
        return int(self.mul[self.mul[g, h], self.inv[g]])

    def element_order(self, i):
        k, cur = 1, i
        while cur != 0:
            cur = int(self.mul[cur, i])
            k += 1
        return k

    def word_product(self, word):
        cur = 0
        for s in word:
            cur = int(self.mul[cur, self.generators[s]])
        return cur

    def is_latin_square(self):
        n = self.n
        target = np.arange(n)
        for i in range(n):
            if not (np.sort(self.mul[i]) == target).all():
                return False
            if not (np.sort(self.mul[:, i]) == target).all():
                return False
        return True

    def is_subgroup(self, indices):
        s = set(indices)
        return all(int(self.mul[i, j]) in s for i in s for j in s) and all(
            self.inv[i] in s for i in s
        )

    def is_normal(self, indices):
        s = set(indices)
        return all(self.conj(g, h) in s for g in range(self.n) for h in s)

    def subgroup_handle(self, gen_indices, name=""):
        """Close a subset of elements under multiplication; record
        normality and, when normal, coset representatives in discovery
        order."""
        seen = {0}
        order = [0]
        queue = [0]
        while queue:
            x = queue.pop(0)
            for g in gen_indices:
                y = int(self.mul[x, g])
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
        normal = self.is_normal(order)
        reps = None
        if normal:
            reps = []
            covered = set()
            for i in range(self.n):
                if i in covered:
                    continue
                reps.append(i)
                covered.update(int(self.mul[h, i]) for h in order)
        return SubgroupHandle(self, tuple(order), tuple(gen_indices), normal, reps, name)


class SubgroupHandle:
    """A subgroup of a parent group: element indices (discovery order from
    the designated generators), normality flag, and coset representatives
    for the quotient when normal."""

    def __init__(self, parent, indices, gen_indices, normal, coset_reps, name=""):
        self.parent = parent
        self.indices = indices
        self.gen_indices = gen_indices
        self.normal = normal
        self.coset_reps = coset_reps
        self.name = name
        self._group = None
        self._pos = {g: k for k, g in enumerate(indices)}

    @property
    def order(self):
        return len(self.indices)

    def position(self, parent_idx):
        return self._pos[parent_idx]

    def contains(self, parent_idx):
        return parent_idx in self._pos

    def as_group(self):
        """Materialize the subgroup as a FiniteGroup of its own (elements
        keep their parent representations; parent indices recoverable via
        parent_indices)."""
        if self._group is None:
            parent = self.parent
            elems = [parent.elements[i] for i in self.indices]
            k = len(self.indices)
            mul = [
                [self._pos[int(parent.mul[self.indices[i], self.indices[j]])] for j in range(k)]
                for i in range(k)
            ]
            gens = [self._pos[g] for g in self.gen_indices]
            words = _bfs_words_from_table(np.asarray(mul), gens)
            # elements must already be listed in BFS order for these gens
            if words is None:
                raise GroupConstructionError("subgroup enumeration is not BFS-consistent")
            g = FiniteGroup(elems, mul, gens, words, name=self.name or "subgroup")
            g.parent_indices = list(self.indices)
            self._group = g
        return self._group

    def coset_order(self, parent_idx):
        """Least t >= 1 with (element)^t inside the subgroup."""
        t, cur = 1, parent_idx
        while not self.contains(cur):
            cur = int(self.parent.mul[cur, parent_idx])
            t += 1
        return t


def _bfs_words_from_table(mul, gens):
    n = mul.shape[0]
    words = {0: ()}
    order = [0]
    queue = [0]
    while queue:
        x = queue.pop(0)
        for s, g in enumerate(gens):
            y = int(mul[x, g])
            if y not in words:
                words[y] = words[x] + (s,)
                order.append(y)
                queue.append(y)
    if len(order) != n or order != list(range(n)):
        return None
    return [words[i] for i in range(n)]


def group_from_generators(generators, mul_fn, identity, name="", cap=CLOSURE_CAP):
    """Breadth-first closure of a generator list under an abstract product.

    Elements must be hashable; discovery order from the identity defines the
    canonical element order and the stored generator words.
    """
    elements = [identity]
    words = {identity: ()}
    queue = [identity]
    while queue:
        x = queue.pop(0)
        for s, g in enumerate(generators):
            y = mul_fn(x, g)
            if y not in words:
                if len(words) >= cap:
                    raise GroupConstructionError("group too large")
                words[y] = words[x] + (s,)
                elements.append(y)
                queue.append(y)
    index = {g: i for i, g in enumerate(elements)}
    n = len(elements)
    mul = [[index[mul_fn(a, b)] for b in elements] for a in elements]
    gen_idx = [index[g] for g in generators]
    word_list = [words[g] for g in elements]
    return FiniteGroup(elements, mul, gen_idx, word_list, name=name)


def matrix_group_closure(p, generators, name=""):
    """Closure of 2x2 (or nxn) generator matrices over Z/p."""
    gens = [_normalize_matrix(g, p) for g in generators]
    size = len(gens[0])
    ident = mat_identity(size)
    if size == 2:
        for g in gens:
            if mat_det_mod(g, p) == 0 or (p > 0 and _gcd(mat_det_mod(g, p), p) != 1):
                raise GroupConstructionError("singular generator")
    return group_from_generators(
        gens, lambda a, b: mat_mul_mod(a, b, p), ident, name=name or f"mat({p})"
    )


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def semidirect_cyclic(m, n, r, name=""):
    """Z/m twisted by Z/n acting through the unit r: elements (a, b) with
    (a1, b1) * (a2, b2) = (a1 + r^b1 * a2, b1 + b2).  Generators (1, 0) and
    (0, 1); the (1, 0) generator is dropped when m == 1."""
    r = r % m if m > 1 else 0
    if m > 1:
        if _gcd(r, m) != 1 or pow(r, n, m) != 1:
            raise GroupConstructionError("invalid twisting unit")

    def mul_fn(x, y):
        return ((x[0] + pow(r, x[1], m) * y[0]) % m if m > 1 else 0, (x[1] + y[1]) % n)

    gens = []
    if m > 1:
        gens.append((1, 0))
    if n > 1:
        gens.append((0, 1))
    if not gens:
        gens = [(0, 0)]
    return group_from_generators(
        gens, mul_fn, (0, 0), name=name or f"semidirect({m},{n};{r})"
    )


def cyclic_group(n, name=""):
    return semidirect_cyclic(1, n, 1, name=name or f"cyclic({n})")


# explicit generators used for GL_2(Z/3) and its distinguished subgroups;
# listed in the order (shear, rotation, reflection) so that stored words
# and the shipped action matrices line up
GL23_GEN_SHEAR = ((1, 0), (-1, 1))     # order 3, generates SL/quaternion part
GL23_GEN_ROT = ((0, -1), (1, 0))       # the order-4 rotation i
GL23_GEN_REFL = ((1, 0), (0, -1))      # determinant -1 reflection
QUAT_J = ((-1, -1), (-1, 1))
QUAT_K = ((1, -1), (-1, -1))


def gl2_group(p=3):
    if p != 3:
        raise GroupConstructionError("only GL_2 over Z/3 is shipped with canonical generators")
    return matrix_group_closure(
        3, [GL23_GEN_SHEAR, GL23_GEN_ROT, GL23_GEN_REFL], name="GL2(Z/3)"
    )


def identify_filtration(group):
    """Locate the quaternion subgroup and the determinant-one subgroup inside
    GL_2(Z/3), with normality verified and quotient structure recorded.

    Returns (quaternion_handle, det1_handle); the quaternion handle is
    generated by the rotation and the second quaternion unit, the
    determinant-one subgroup by the rotation and the shear.
    """
    if group.n != 48:
        raise GroupConstructionError("unexpected group: order is not 48")
    p = 3
    try:
        rot = group.index[_normalize_matrix(GL23_GEN_ROT, p)]
        shear = group.index[_normalize_matrix(GL23_GEN_SHEAR, p)]
        refl = group.index[_normalize_matrix(GL23_GEN_REFL, p)]
        quat_j = group.index[_normalize_matrix(QUAT_J, p)]
    except (KeyError, TypeError, ValueError):
        raise GroupConstructionError("unexpected group: canonical matrices missing")
    det1 = [i for i, g in enumerate(group.elements) if mat_det_mod(g, p) == 1]
    sl = group.subgroup_handle([rot, shear], name="SL2(Z/3)")
    if sorted(sl.indices) != sorted(det1) or sl.order != 24:
        raise GroupConstructionError("unexpected group: determinant-one part malformed")
    quat = group.subgroup_handle([rot, quat_j], name="quaternion")
    if quat.order != 8:
        raise GroupConstructionError("unexpected group: quaternion part malformed")
    if not (sl.normal and quat.normal):
        raise GroupConstructionError("unexpected group: filtration not normal")
    # quotient generators: GL/SL is order 2 via the reflection, SL/quat is
    # order 3 via the shear
    if sl.coset_order(refl) != 2 or quat.coset_order(shear) != 3:
        raise GroupConstructionError("unexpected group: quotient structure off")
    quat.quotient_generator = shear
    sl.quotient_generator = refl
    return quat, sl


# -- JSON descriptors -----------------------------------------------------------


def group_from_descriptor(desc):
    """Build a group from a JSON-style descriptor dict.

    Supported forms:
      {"type": "matrix-gen", "p": 3, "gens": [[[1,0],[0,2]], ...]}
      {"type": "semidirect", "m": 3, "n": 4, "r": 2}
      {"type": "cyclic", "n": 4}
      {"type": "gl2", "p": 3}
    """
    if not isinstance(desc, dict) or "type" not in desc:
        raise GroupConstructionError("group descriptor must be an object with a 'type' field")
    t = desc["type"]
    try:
        if t == "matrix-gen":
            return matrix_group_closure(int(desc["p"]), desc["gens"])
        if t == "semidirect":
            return semidirect_cyclic(int(desc["m"]), int(desc["n"]), int(desc["r"]))
        if t == "cyclic":
            return cyclic_group(int(desc["n"]))
        if t == "gl2":
            return gl2_group(int(desc.get("p", 3)))
    except KeyError as e:
        raise GroupConstructionError(f"group descriptor missing field {e}") from e
    raise GroupConstructionError(f"unknown group descriptor type {t!r}")


def group_from_spec(spec):
    """Parse shorthand like gl2:3, cyclic:4, semidirect:3:4:2, or inline JSON."""
    spec = spec.strip()
    if spec.startswith("{"):
        return group_from_descriptor(json.loads(spec))
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind == "gl2":
            return gl2_group(int(parts[1]) if len(parts) > 1 else 3)
        if kind == "cyclic":
            return cyclic_group(int(parts[1]))
        if kind == "semidirect":
            return semidirect_cyclic(int(parts[1]), int(parts[2]), int(parts[3]))
    except (IndexError, ValueError) as e:
        raise GroupConstructionError(f"malformed group spec {spec!r}") from e
    raise GroupConstructionError(f"unknown group spec {spec!r}")
