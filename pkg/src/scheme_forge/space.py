"""Finite abelian vertex groups X and their inner products.

Every space enumerates its points by a fixed mixed-radix encoding over its
free coordinates (first coordinate most significant, zero element at index
0), supports the additive group operations on point indices, and evaluates
the inner product <x,y> as a root of unity of the space's character order.

The pairing is exposed in two forms: `pairing_exponent` returns the integer
k with <x,y> = zeta_m^k (the workhorse for character sums, which are
accumulated as exponent histograms), and `inner_product` wraps it in a
CycloInt.
"""

from __future__ import annotations

import math

from .cyclo import CycloInt
from .errors import UsageError, ResourceLimitError
from .gf import FieldSpec

DEFAULT_SIZE_BOUND = 4096


class Point:
    """A point of an AbelianSpace: its index plus free-coordinate vector."""

    __slots__ = ("index", "coords")

    def __init__(self, index, coords):
        self.index = index
        self.coords = coords

    def __eq__(self, other):
        return isinstance(other, Point) and self.index == other.index

    def __hash__(self):
        return hash(self.index)

    def __repr__(self):
        return "Point(%d, %s)" % (self.index, list(self.coords))


def point_index(x):
    return x.index if isinstance(x, Point) else x


class AbelianSpace:
    """Base class: mixed-radix coordinate bookkeeping and pairing plumbing.

    Subclasses set `kind`, `_radices`, `character_order`, and implement
    coordinate add/neg plus `pairing_exponent`.
    """

    kind = None

    def __init__(self, radices, character_order, lambda_multiplier=1,
                 size_bound=DEFAULT_SIZE_BOUND):
        size = 1
        for r in radices:
            size *= r
        if size > size_bound:
            raise ResourceLimitError(
                "|X| = %d exceeds size bound %d" % (size, size_bound))
        if math.gcd(lambda_multiplier, character_order) != 1:
            raise UsageError("lambda multiplier must be a unit mod %d"
                             % character_order)
        self._radices = tuple(radices)
        self.size = size
        self.character_order = character_order
        self.lambda_multiplier = lambda_multiplier
        self._mat_cache = {}

    # -- indexing ----------------------------------------------------------

    def coords_of(self, index):
        if not 0 <= index < self.size:
            raise UsageError("point index out of range")
        coords = []
        for r in reversed(self._radices):
            coords.append(index % r)
            index //= r
        coords.reverse()
        return tuple(coords)

    def index_of(self, coords):
        index = 0
        for c, r in zip(coords, self._radices):
            assert 0 <= c < r
            index = index * r + c
        return index

    def point(self, index):
        return Point(index, self.coords_of(index))

    def points(self):
        """All |X| points in index order; the zero element comes first."""
        return [self.point(i) for i in range(self.size)]

    # -- group structure (subclass hooks work coordinatewise) --------------

    def _coord_add(self, pos, a, b):
        raise NotImplementedError

    def _coord_neg(self, pos, a):
        raise NotImplementedError

    def add(self, x, y):
        xi, yi = point_index(x), point_index(y)
        cx, cy = self.coords_of(xi), self.coords_of(yi)
        return self.index_of(tuple(self._coord_add(k, a, b)
                                   for k, (a, b) in enumerate(zip(cx, cy))))

    def neg(self, x):
        cx = self.coords_of(point_index(x))
        return self.index_of(tuple(self._coord_neg(k, a)
                                   for k, a in enumerate(cx)))

    def sub(self, x, y):
        """x - y as a point index."""
        return self.add(x, self.neg(y))

    # -- pairing -------------------------------------------------------------

    def pairing_exponent(self, x, y):
        """k with <x,y> = zeta_m^k (before the lambda multiplier)."""
        raise NotImplementedError

    def materialize_cached(self, x):
        i = point_index(x)
        v = self._mat_cache.get(i)
        if v is None:
            v = self.materialize(i)
            self._mat_cache[i] = v
        return v

    def inner_product(self, x, y):
        k = self.pairing_exponent(x, y) * self.lambda_multiplier
        return CycloInt.root_of_unity(self.character_order, k)

    def verify_nondegenerate(self):
        """Exhaustive check of inner product axiom (iii): x != 0 implies
        <x,y> != 1 for some y. Returns (ok, witness_or_None)."""
        m = self.character_order
        for x in range(1, self.size):
            if all((self.pairing_exponent(x, y) * self.lambda_multiplier) % m == 0
                   for y in range(self.size)):
                return False, x
        return True, None

    # -- misc ---------------------------------------------------------------

    def serialize_point(self, x):
        return list(self.coords_of(point_index(x)))

    def __repr__(self):
        return "%s(size=%d)" % (type(self).__name__, self.size)


class _FieldCoordMixin:
    """Coordinate arithmetic where every free coordinate is a field element
    indexed by FieldSpec.from_index order."""

    def _coord_add(self, pos, a, b):
        els = self._field_elements
        return (els[a] + els[b]).index

    def _coord_neg(self, pos, a):
        return (-self._field_elements[a]).index


class VectorSpace(_FieldCoordMixin, AbelianSpace):
    """X = (F_q^n, +) with <x,y> = lambda(sum x_i y_i)."""

    kind = "vector"

    def __init__(self, n, field: FieldSpec, **kw):
        if n < 1:
            raise UsageError("n must be >= 1")
        self.n = n
        self.field = field
        self._field_elements = field.elements()
        super().__init__((field.q,) * n, field.p, **kw)

    def materialize(self, x):
        return tuple(self._field_elements[c]
                     for c in self.coords_of(point_index(x)))

    def index_of_vector(self, vec):
        return self.index_of(tuple(a.index for a in vec))

    def basis_index(self, i):
        """Index of the standard basis vector e_i (1-based i)."""
        vec = [self.field.zero()] * self.n
        vec[i - 1] = self.field.one()
        return self.index_of_vector(vec)

    def pairing_exponent(self, x, y):
        vx = self.materialize_cached(x)
        vy = self.materialize_cached(y)
        acc = self.field.zero()
        for a, b in zip(vx, vy):
            acc = acc + a * b
        return acc.trace()

    def to_config(self):
        return {"kind": "vector", "n": self.n, "field": self.field.to_config()}


class FullMatrixSpace(_FieldCoordMixin, AbelianSpace):
    """X = (F_q^{m x n}, +), <A,B> = lambda(sum_ij A_ij B_ij)."""

    kind = "matrix_full"

    def __init__(self, m, n, field: FieldSpec, **kw):
        self.m = m
        self.n = n
        self.field = field
        self._field_elements = field.elements()
        super().__init__((field.q,) * (m * n), field.p, **kw)

    def materialize(self, x):
        els = self._field_elements
        c = self.coords_of(point_index(x))
        return tuple(tuple(els[c[i * self.n + j]] for j in range(self.n))
                     for i in range(self.m))

    def index_of_matrix(self, mat):
        return self.index_of(tuple(mat[i][j].index
                                   for i in range(self.m)
                                   for j in range(self.n)))

    def pairing_exponent(self, x, y):
        A = self.materialize_cached(x)
        B = self.materialize_cached(y)
        acc = self.field.zero()
        for i in range(self.m):
            for j in range(self.n):
                acc = acc + A[i][j] * B[i][j]
        return acc.trace()

    def to_config(self):
        return {"kind": "matrix_full", "m": self.m, "n": self.n,
                "field": self.field.to_config()}


class AlternatingMatrixSpace(_FieldCoordMixin, AbelianSpace):
    """Alternating m x m matrices (zero diagonal, A_ji = -A_ij); the free
    coordinates are the strict upper triangle, row-major."""

    kind = "matrix_alternating"

    def __init__(self, m, field: FieldSpec, **kw):
        self.m = m
        self.field = field
        self._field_elements = field.elements()
        self._positions = [(i, j) for i in range(m) for j in range(i + 1, m)]
        super().__init__((field.q,) * len(self._positions), field.p, **kw)

    def materialize(self, x):
        els = self._field_elements
        zero = self.field.zero()
        c = self.coords_of(point_index(x))
        mat = [[zero] * self.m for _ in range(self.m)]
        for (i, j), v in zip(self._positions, c):
            mat[i][j] = els[v]
            mat[j][i] = -els[v]
        return tuple(tuple(row) for row in mat)

    def index_of_matrix(self, mat):
        return self.index_of(tuple(mat[i][j].index for i, j in self._positions))

    def pairing_exponent(self, x, y):
        A = self.materialize_cached(x)
        B = self.materialize_cached(y)
        acc = self.field.zero()
        for i, j in self._positions:
            acc = acc + A[i][j] * B[i][j]
        return acc.trace()

    def to_config(self):
        return {"kind": "matrix_alternating", "m": self.m,
                "field": self.field.to_config()}


class SymmetricMatrixSpace(_FieldCoordMixin, AbelianSpace):
    """Symmetric m x m matrices over F_q, q odd; free coordinates are the
    upper triangle including the diagonal."""

    kind = "matrix_symmetric"

    def __init__(self, m, field: FieldSpec, **kw):
        if field.p == 2:
            raise UsageError("symmetric forms spaces require odd q")
        self.m = m
        self.field = field
        self._field_elements = field.elements()
        self._positions = [(i, j) for i in range(m) for j in range(i, m)]
        super().__init__((field.q,) * len(self._positions), field.p, **kw)

    def materialize(self, x):
        els = self._field_elements
        zero = self.field.zero()
        c = self.coords_of(point_index(x))
        mat = [[zero] * self.m for _ in range(self.m)]
        for (i, j), v in zip(self._positions, c):
            mat[i][j] = els[v]
            mat[j][i] = els[v]
        return tuple(tuple(row) for row in mat)

    def index_of_matrix(self, mat):
        return self.index_of(tuple(mat[i][j].index for i, j in self._positions))

    def pairing_exponent(self, x, y):
        # sum_ij A_ij B_ij = tr(A tB) = tr(AB) for symmetric A, B
        A = self.materialize_cached(x)
        B = self.materialize_cached(y)
        acc = self.field.zero()
        for i in range(self.m):
            for j in range(self.m):
                acc = acc + A[i][j] * B[i][j]
        return acc.trace()

    def to_config(self):
        return {"kind": "matrix_symmetric", "m": self.m,
                "field": self.field.to_config()}


class HermitianMatrixSpace(AbelianSpace):
    """Hermitian m x m matrices over F_{q^2} (conjugation a -> a^q).

    Free coordinates: the diagonal runs over the base subfield F_q, the
    strict upper triangle over all of F_{q^2}; lower entries are forced by
    *A = A.  The pairing tr(AB) lands in F_q and is fed to the base-field
    trace, keeping the character order at p.
    """

    kind = "matrix_hermitian"

    def __init__(self, m, field: FieldSpec, **kw):
        if field.e % 2 != 0:
            raise UsageError("Hermitian spaces need an even-degree field F_{q^2}")
        self.m = m
        self.field = field
        self.base_f = field.e // 2
        self.base_q = field.p ** self.base_f
        self._field_elements = field.elements()
        self._subfield = tuple(
            a for a in self._field_elements
            if (a ** self.base_q).coeffs == a.coeffs)
        assert len(self._subfield) == self.base_q
        self._sub_index = {a.index: k for k, a in enumerate(self._subfield)}
        self._diag = [(i, i) for i in range(m)]
        self._upper = [(i, j) for i in range(m) for j in range(i + 1, m)]
        radices = (self.base_q,) * m + (field.q,) * len(self._upper)
        super().__init__(radices, field.p, **kw)

    def conj(self, a):
        return a ** self.base_q

    def _coord_add(self, pos, a, b):
        if pos < self.m:
            s = self._subfield[a] + self._subfield[b]
            return self._sub_index[s.index]
        return (self._field_elements[a] + self._field_elements[b]).index

    def _coord_neg(self, pos, a):
        if pos < self.m:
            return self._sub_index[(-self._subfield[a]).index]
        return (-self._field_elements[a]).index

    def materialize(self, x):
        els = self._field_elements
        zero = self.field.zero()
        c = self.coords_of(point_index(x))
        mat = [[zero] * self.m for _ in range(self.m)]
        for k, (i, _) in enumerate(self._diag):
            mat[i][i] = self._subfield[c[k]]
        for k, (i, j) in enumerate(self._upper):
            v = els[c[self.m + k]]
            mat[i][j] = v
            mat[j][i] = self.conj(v)
        return tuple(tuple(row) for row in mat)

    def index_of_matrix(self, mat):
        coords = []
        for i in range(self.m):
            coords.append(self._sub_index[mat[i][i].index])
        for i, j in self._upper:
            coords.append(mat[i][j].index)
        return self.index_of(tuple(coords))

    def pairing_exponent(self, x, y):
        # A . B = tr(A *B) = tr(AB), an element of the base subfield F_q
        A = self.materialize_cached(x)
        B = self.materialize_cached(y)
        acc = self.field.zero()
        for i in range(self.m):
            for j in range(self.m):
                acc = acc + A[i][j] * B[j][i]
        return acc.subfield_trace(self.base_f)

    def to_config(self):
        return {"kind": "matrix_hermitian", "m": self.m,
                "field": self.field.to_config()}


class CyclicProductSpace(AbelianSpace):
    """X = Z_{m_1} x ... x Z_{m_k} with <x,y> = prod zeta_{m_i}^{x_i y_i},
    valued in Z[zeta_m] for m = lcm(m_1, ..., m_k)."""

    kind = "cyclic_product"

    def __init__(self, moduli, **kw):
        moduli = tuple(int(m) for m in moduli)
        if not moduli or any(m < 2 for m in moduli):
            raise UsageError("cyclic_product needs moduli >= 2")
        self.moduli = moduli
        m = 1
        for mi in moduli:
            m = m * mi // math.gcd(m, mi)
        self.exponent = m
        super().__init__(moduli, m, **kw)

    def _coord_add(self, pos, a, b):
        return (a + b) % self.moduli[pos]

    def _coord_neg(self, pos, a):
        return (-a) % self.moduli[pos]

    def pairing_exponent(self, x, y):
        m = self.character_order
        cx = self.coords_of(point_index(x))
        cy = self.coords_of(point_index(y))
        return sum((m // mi) * a * b
                   for mi, a, b in zip(self.moduli, cx, cy)) % m

    def to_config(self):
        return {"kind": "cyclic_product", "moduli": list(self.moduli)}


def space_from_config(cfg, size_bound=DEFAULT_SIZE_BOUND):
    """Build an AbelianSpace from a config fragment."""
    if not isinstance(cfg, dict) or "kind" not in cfg:
        raise UsageError("space config must be a dict with a 'kind'")
    kind = cfg["kind"]
    kw = {"size_bound": size_bound,
          "lambda_multiplier": cfg.get("lambda_multiplier", 1)}
    if kind == "cyclic_product":
        return CyclicProductSpace(cfg["moduli"], **kw)
    fcfg = cfg.get("field")
    if not isinstance(fcfg, dict):
        raise UsageError("space config needs a 'field' fragment")
    field = FieldSpec(fcfg["p"], fcfg.get("e", 1), fcfg.get("modulus"))
    if kind == "vector":
        return VectorSpace(cfg["n"], field, **kw)
    if kind == "matrix_full":
        return FullMatrixSpace(cfg["m"], cfg["n"], field, **kw)
    if kind == "matrix_alternating":
        return AlternatingMatrixSpace(cfg["m"], field, **kw)
    if kind == "matrix_symmetric":
        return SymmetricMatrixSpace(cfg["m"], field, **kw)
    if kind == "matrix_hermitian":
        return HermitianMatrixSpace(cfg["m"], field, **kw)
    raise UsageError("unknown space kind %r" % kind)
