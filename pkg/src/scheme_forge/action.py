"""Group actions given by generating sets of additive automorphisms of X.

Each built-in family materializes a small generating set as point
permutations; orbits are computed by breadth-first closure (the full group
is never stored).  Adjoint images iota(g) are defined generator-by-generator
following the family's structural rule and verified against the pairing.
"""

from __future__ import annotations

import math

from . import oracles
from .errors import UsageError, IntegrityError
from .poset import WeakOrderPoset
from .space import (AbelianSpace, VectorSpace, FullMatrixSpace,
                    AlternatingMatrixSpace, SymmetricMatrixSpace,
                    HermitianMatrixSpace, CyclicProductSpace, point_index)

VECTOR_MATRIX_FAMILIES = ("cyclotomic", "hamming", "weak_hamming",
                          "weak_hamming_dual")


# -- small matrix helpers over a FieldSpec ---------------------------------

def mat_identity(k, field):
    z, o = field.zero(), field.one()
    return tuple(tuple(o if i == j else z for j in range(k)) for i in range(k))

def mat_mul(A, B, field):
    n, m, r = len(A), len(B[0]), len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = field.zero()
            for k in range(r):
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)

def mat_transpose(A):
    return tuple(zip(*A))

def mat_conj_transpose(A, space):
    return tuple(tuple(space.conj(A[j][i]) for j in range(len(A)))
                 for i in range(len(A[0])))

def mat_vec(A, v, field):
    return tuple(
        sum((A[i][j] * v[j] for j in range(len(v))), field.zero())
        for i in range(len(A)))


def gl_generators(k, field):
    """A classical generating set of GL(k, q): the k-cycle permutation
    matrix, one elementary transvection, and diag(w, 1, ..., 1) for a
    primitive w (omitted when q = 2 or k admits no such map)."""
    z, o = field.zero(), field.one()
    gens = []
    if k >= 2:
        cycle = tuple(tuple(o if i == (j + 1) % k else z for j in range(k))
                      for i in range(k))
        gens.append(("cycle", cycle))
        transvection = tuple(tuple(
            o if i == j else (o if (i, j) == (0, 1) else z)
            for j in range(k)) for i in range(k))
        gens.append(("transvection", transvection))
    if field.q > 2:
        w = field.primitive_element()
        diag = tuple(tuple(
            (w if i == 0 else o) if i == j else z for j in range(k))
            for i in range(k))
        gens.append(("diag_primitive", diag))
    return gens


def scalar_mul_point(space, x, u):
    """u * x on point indices by a binary addition chain."""
    x = point_index(x)
    acc = 0
    base = x
    u = int(u)
    if u < 0:
        base = space.neg(base)
        u = -u
    while u:
        if u & 1:
            acc = space.add(acc, base)
        base = space.add(base, base)
        u >>= 1
    return acc


class Generator:
    """One generating automorphism: a materialized point permutation plus
    the structured data its adjoint rule needs."""

    __slots__ = ("name", "perm", "data")

    def __init__(self, name, perm, data):
        self.name = name
        self.perm = tuple(perm)
        self.data = data

    def __repr__(self):
        return "Generator(%s)" % self.name


class GeneratorSet:
    def __init__(self, space, family, params, generators, poset=None):
        self.space = space
        self.family = family
        self.params = dict(params)
        self.generators = list(generators)
        self.poset = poset
        for g in self.generators:
            if g.perm[0] != 0:
                raise IntegrityError("generator %s does not fix 0" % g.name)
            if len(set(g.perm)) != space.size:
                raise IntegrityError("generator %s is not a bijection" % g.name)

    def verify_additive(self):
        """Exhaustive check of g(x + x') = gx + gx'."""
        space = self.space
        for g in self.generators:
            for x in range(space.size):
                for y in range(x, space.size):
                    if g.perm[space.add(x, y)] != space.add(g.perm[x], g.perm[y]):
                        return False, (g.name, x, y)
        return True, None

    def label(self):
        items = ",".join("%s=%s" % (k, v) for k, v in sorted(self.params.items()))
        return "%s(%s)" % (self.family, items)


class OrbitPartition:
    """Classes of the orbit partition, class 0 = {0}, the rest ordered by
    minimal point index."""

    def __init__(self, class_of, classes):
        self.class_of = class_of
        self.classes = classes
        self.d = len(classes) - 1

    @property
    def sizes(self):
        return [len(c) for c in self.classes]


def orbits(genset: GeneratorSet) -> OrbitPartition:
    space = genset.space
    n = space.size
    seen = [False] * n
    raw = []
    perms = [g.perm for g in genset.generators]
    for start in range(n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        frontier = [start]
        while frontier:
            nxt = []
            for x in frontier:
                for perm in perms:
                    y = perm[x]
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        nxt.append(y)
            frontier = nxt
        raw.append(sorted(comp))
    if genset.poset is not None:
        # weak-Hamming classes are weight spheres; label by poset weight so
        # class j of the action and of its dual-poset partner correspond
        raw.sort(key=lambda c: (genset.poset.weight(space.coords_of(c[0])),
                                c[0]))
    elif hasattr(space, "index_of_matrix"):
        # forms schemes label classes by rank (alternating: rank/2, which
        # sorts the same way); ties broken by minimal point index
        raw.sort(key=lambda c: (oracles.matrix_rank(
            space.materialize_cached(c[0]), space.field), c[0]))
    else:
        raw.sort(key=lambda c: c[0])
    if raw[0] != [0]:
        raise IntegrityError("orbit of 0 is not {0}")
    class_of = [0] * n
    for ci, comp in enumerate(raw):
        for x in comp:
            class_of[x] = ci
    return OrbitPartition(class_of, raw)


def check_condition_4(partition: OrbitPartition, space: AbelianSpace):
    """Negation-closure of every class; returns (ok, witness)."""
    for x in range(space.size):
        if partition.class_of[x] != partition.class_of[space.neg(x)]:
            return False, x
    return True, None


def check_condition_6(partition: OrbitPartition, space: AbelianSpace):
    """The involution j(i) with -O_i = O_{j(i)}, verified exhaustively.
    Returns the pairing list, or None if negation is not class-coherent."""
    pairing = [None] * (partition.d + 1)
    for x in range(space.size):
        i = partition.class_of[x]
        j = partition.class_of[space.neg(x)]
        if pairing[i] is None:
            pairing[i] = j
        elif pairing[i] != j:
            return None
    for i, j in enumerate(pairing):
        if pairing[j] != i:
            return None
    return pairing


# -- family constructors -----------------------------------------------------


def _materialize_matvec(space: VectorSpace, M):
    field = space.field
    perm = []
    for x in range(space.size):
        v = space.materialize_cached(x)
        perm.append(space.index_of_vector(mat_vec(M, v, field)))
    return perm


def _materialize_congruence(space, left, right):
    """A -> left A right materialized on matrix points."""
    field = space.field
    perm = []
    for x in range(space.size):
        A = space.materialize_cached(x)
        perm.append(space.index_of_matrix(mat_mul(mat_mul(left, A, field),
                                                  right, field)))
    return perm


def build_action(space: AbelianSpace, family, **params) -> GeneratorSet:
    """Materialize the generating set of a built-in family on `space`."""
    if family == "central":
        return _build_central(space, params)
    if family == "cyclotomic":
        return _build_cyclotomic(space, params)
    if family == "bilinear":
        return _build_bilinear(space, params)
    if family in ("alternating", "symmetric", "hermitian"):
        return _build_congruence(space, family, params)
    if family == "hamming":
        return _build_hamming(space, params)
    if family in ("weak_hamming", "weak_hamming_dual"):
        return _build_weak_hamming(space, family, params)
    if family == "custom":
        return _build_custom(space, params)
    raise UsageError("unknown action family %r" % family)


def _build_central(space, params):
    nu = space.exponent if isinstance(space, CyclicProductSpace) else space.character_order
    if hasattr(space, "field"):
        nu = space.field.p
    gens = []
    for u in range(2, nu):
        if math.gcd(u, nu) != 1:
            continue
        perm = [scalar_mul_point(space, x, u) for x in range(space.size)]
        gens.append(Generator("mul_%d" % u, perm, {"unit": u}))
    return GeneratorSet(space, "central", {"nu": nu, **params}, gens)


def _build_cyclotomic(space, params):
    if not isinstance(space, VectorSpace) or space.n != 1:
        raise UsageError("cyclotomic actions live on X = (F_q, +)")
    d = int(params["d"])
    q = space.field.q
    if q % 2 == 0 or d < 1 or (q - 1) % (2 * d) != 0:
        raise UsageError("cyclotomic classes need odd q with 2d | q-1")
    w = space.field.primitive_element()
    M = ((w ** d,),)
    perm = _materialize_matvec(space, M)
    return GeneratorSet(space, "cyclotomic", {"d": d},
                        [Generator("mul_w^%d" % d, perm, {"matrix": M})])


def _build_bilinear(space, params):
    if not isinstance(space, FullMatrixSpace):
        raise UsageError("bilinear actions live on full matrix spaces")
    field = space.field
    m, n = space.m, space.n
    Im, In = mat_identity(m, field), mat_identity(n, field)
    gens = []
    for name, alpha in gl_generators(m, field):
        perm = _materialize_congruence(space, mat_transpose(alpha), In)
        gens.append(Generator("left_" + name, perm, {"alpha": alpha, "beta": In}))
    for name, beta in gl_generators(n, field):
        perm = _materialize_congruence(space, Im, beta)
        gens.append(Generator("right_" + name, perm, {"alpha": Im, "beta": beta}))
    return GeneratorSet(space, "bilinear", {"m": m, "n": n}, gens)


def _build_congruence(space, family, params):
    expected = {"alternating": AlternatingMatrixSpace,
                "symmetric": SymmetricMatrixSpace,
                "hermitian": HermitianMatrixSpace}[family]
    if not isinstance(space, expected):
        raise UsageError("%s actions need a %s space"
                         % (family, expected.kind))
    field = space.field
    gens = []
    for name, alpha in gl_generators(space.m, field):
        if family == "hermitian":
            left = mat_conj_transpose(alpha, space)
        else:
            left = mat_transpose(alpha)
        perm = _materialize_congruence(space, left, alpha)
        gens.append(Generator(name, perm, {"alpha": alpha}))
    extra = {}
    if family == "symmetric":
        extra["q_mod_4"] = field.q % 4
    return GeneratorSet(space, family, {"m": space.m, **extra}, gens)


def _hamming_block_generators(space, block, tag):
    """Monomial generators of the Hamming group on the given coordinate
    block (1-based coords): adjacent transpositions plus one primitive
    scaling, returned as n x n matrices."""
    field = space.field
    n = space.n
    z, o = field.zero(), field.one()
    gens = []
    for a, b in zip(block, block[1:]):
        M = [[o if i == j else z for j in range(n)] for i in range(n)]
        i0, j0 = a - 1, b - 1
        M[i0][i0] = M[j0][j0] = z
        M[i0][j0] = M[j0][i0] = o
        gens.append(("%sswap_%d_%d" % (tag, a, b), tuple(map(tuple, M))))
    if field.q > 2:
        w = field.primitive_element()
        i0 = block[0] - 1
        M = [[o if i == j else z for j in range(n)] for i in range(n)]
        M[i0][i0] = w
        gens.append(("%sscale_%d" % (tag, block[0]), tuple(map(tuple, M))))
    return gens


def _build_hamming(space, params):
    if not isinstance(space, VectorSpace):
        raise UsageError("hamming actions live on vector spaces")
    n = int(params.get("n", space.n))
    if n != space.n:
        raise UsageError("hamming n mismatch with space dimension")
    gens = []
    for name, M in _hamming_block_generators(space, list(range(1, n + 1)), ""):
        gens.append(Generator(name, _materialize_matvec(space, M), {"matrix": M}))
    return GeneratorSet(space, "hamming", {"n": n}, gens)


def _build_weak_hamming(space, family, params):
    if not isinstance(space, VectorSpace):
        raise UsageError("weak_hamming actions live on vector spaces")
    levels = tuple(int(v) for v in params["levels"])
    poset = WeakOrderPoset(levels)
    if family == "weak_hamming_dual":
        poset = poset.dual()
    if poset.n != space.n:
        raise UsageError("level sizes must sum to the space dimension")
    field = space.field
    z, o = field.zero(), field.one()
    mats = []
    for s in range(1, poset.t + 1):
        mats.extend(_hamming_block_generators(space, poset.block(s),
                                              "lvl%d_" % s))
    for s in range(1, poset.t + 1):
        for s2 in range(1, s):
            i = poset.block(s)[0]
            l = poset.block(s2)[0]
            M = [[o if a == b else z for b in range(space.n)]
                 for a in range(space.n)]
            M[l - 1][i - 1] = o  # e_i -> e_i + e_l, a level-s -> level-s2 bleed
            mats.append(("bleed_%d_to_%d" % (i, l), tuple(map(tuple, M))))
    gens = [Generator(name, _materialize_matvec(space, M), {"matrix": M})
            for name, M in mats]
    return GeneratorSet(space, family, {"levels": levels}, gens, poset=poset)


def _build_custom(space, params):
    perms = params["generators"]
    gens = []
    for k, perm in enumerate(perms):
        if sorted(perm) != list(range(space.size)):
            raise UsageError("custom generator %d is not a permutation of X" % k)
        gens.append(Generator("custom_%d" % k, perm, {}))
    gs = GeneratorSet(space, "custom", {}, gens)
    ok, witness = gs.verify_additive()
    if not ok:
        raise UsageError("custom generator violates additivity at %s" % (witness,))
    return gs


# -- adjoints ---------------------------------------------------------------


class AdjointMap:
    """Per-generator adjoint images, aligned with the source generators."""

    def __init__(self, source: GeneratorSet, images, codomain_family):
        self.source = source
        self.images = list(images)
        self.codomain_family = codomain_family


def adjoint_map(genset: GeneratorSet) -> AdjointMap:
    space = genset.space
    family = genset.family
    if family == "custom":
        raise UsageError("custom actions carry no built-in adjoint map")
    images = []
    codomain = family
    if family == "central":
        images = [Generator("adj_" + g.name, g.perm, dict(g.data))
                  for g in genset.generators]
    elif family in VECTOR_MATRIX_FAMILIES:
        if family == "weak_hamming":
            codomain = "weak_hamming_dual"
        elif family == "weak_hamming_dual":
            codomain = "weak_hamming"
        dual_poset = genset.poset.dual() if genset.poset is not None else None
        for g in genset.generators:
            Mt = mat_transpose(g.data["matrix"])
            if dual_poset is not None:
                _assert_preserves_weight(space, Mt, dual_poset, g.name)
            images.append(Generator("adj_" + g.name,
                                    _materialize_matvec(space, Mt),
                                    {"matrix": Mt}))
    elif family == "bilinear":
        In = mat_identity(space.n, space.field)
        for g in genset.generators:
            at = mat_transpose(g.data["alpha"])
            bt = mat_transpose(g.data["beta"])
            perm = _materialize_congruence(space, mat_transpose(at), bt)
            images.append(Generator("adj_" + g.name, perm,
                                    {"alpha": at, "beta": bt}))
    elif family in ("alternating", "symmetric", "hermitian"):
        for g in genset.generators:
            if family == "hermitian":
                a2 = mat_conj_transpose(g.data["alpha"], space)
                left = mat_conj_transpose(a2, space)
            else:
                a2 = mat_transpose(g.data["alpha"])
                left = mat_transpose(a2)
            perm = _materialize_congruence(space, left, a2)
            images.append(Generator("adj_" + g.name, perm, {"alpha": a2}))
    else:
        raise UsageError("no adjoint rule for family %r" % family)
    return AdjointMap(genset, images, codomain)


def _assert_preserves_weight(space, M, poset, name):
    field = space.field
    for x in range(space.size):
        v = space.materialize_cached(x)
        if poset.weight(mat_vec(M, v, field)) != poset.weight(v):
            raise IntegrityError(
                "adjoint of %s does not preserve the dual poset weight" % name)


def verify_adjoint(adjoint: AdjointMap, exhaustive_bound=1024):
    """Check <gx, y> = <x, iota(g) y> for every generator.

    Exhaustive over X x X when |X| is within the bound; above it, for
    vector spaces, checks all basis pairs (enough by bilinearity of the
    pairing exponent in each argument)."""
    genset = adjoint.source
    space = genset.space
    n = space.size
    if n <= exhaustive_bound:
        xs = ys = range(n)
    else:
        if not isinstance(space, VectorSpace):
            raise UsageError("|X| above the exhaustive adjoint bound")
        xs = ys = [space.basis_index(i) for i in range(1, space.n + 1)]
    for g, ig in zip(genset.generators, adjoint.images):
        for x in xs:
            for y in ys:
                if (space.pairing_exponent(g.perm[x], y)
                        != space.pairing_exponent(x, ig.perm[y])):
                    return False, (g.name, x, y)
    return True, None
