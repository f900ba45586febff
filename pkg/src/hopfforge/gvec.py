"""Graded vector spaces over an exact field with a bicharacter braiding.

The ambient braided monoidal category: vector spaces graded by a finite
abelian group ``G = Z/n1 x ... x Z/nr``, homogeneous linear maps, the usual
tensor product, and the braiding ``x (x) y -> chi(|x|, |y|) y (x) x``.

Basis conventions
-----------------
An *atomic* object is a graded dimension table; its basis lists degrees in
lexicographic order and, inside a degree, vectors ``0 .. d-1``.  A general
object is a word of atoms (the unit object is the empty word).  Its canonical
basis is ordered by total degree first and then by the left-factor-major
multi-index, so the ordering only depends on the flattened word and the
tensor product is strictly associative.

Morphisms keep their matrices in the multi-index order internally (so that
tensor products are plain Kronecker products); :attr:`Mor.matrix` exposes the
canonical order.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from ._exact import ExactMatrix
from ._linalg import nullspace
from .errors import FieldMismatch, GradingMismatch, NonHomogeneous, ShapeMismatch
from .field import FieldSpec, RawScalar

Degree = tuple


class GradingGroup:
    """Finite abelian group ``Z/n1 x ... x Z/nr`` with integer-coded elements.

    The code of ``(g1, ..., gr)`` is its mixed-radix value with ``g1`` most
    significant, so numeric order of codes is lexicographic order of tuples.
    """

    __slots__ = ("orders", "size", "_weights", "_table")

    def __init__(self, orders: Sequence[int] = ()):
        orders = tuple(int(n) for n in orders)
        if any(n < 1 for n in orders):
            raise ValueError(f"cyclic orders must be positive, got {orders}")
        self.orders = orders
        self.size = math.prod(orders)
        w, acc = [], 1
        for n in reversed(orders):
            w.append(acc)
            acc *= n
        self._weights = tuple(reversed(w))
        self._table = None

    def __eq__(self, other):
        return isinstance(other, GradingGroup) and self.orders == other.orders

    def __hash__(self):
        return hash(self.orders)

    def __repr__(self):
        return f"GradingGroup({list(self.orders)})"

    @property
    def zero(self) -> Degree:
        return (0,) * len(self.orders)

    def normalize(self, g) -> Degree:
        if isinstance(g, int) and len(self.orders) == 1:
            g = (g,)
        g = tuple(int(x) for x in g)
        if len(g) != len(self.orders):
            raise GradingMismatch(f"degree {g} does not belong to {self}")
        return tuple(x % n for x, n in zip(g, self.orders))

    def elements(self) -> list[Degree]:
        return [tuple(t) for t in itertools.product(*(range(n) for n in self.orders))]

    def code(self, g) -> int:
        g = self.normalize(g)
        return sum(x * w for x, w in zip(g, self._weights))

    def decode(self, code: int) -> Degree:
        return tuple((code // w) % n for w, n in zip(self._weights, self.orders))

    def components(self, codes: np.ndarray) -> np.ndarray:
        """``(len(codes), r)`` array of residues."""
        codes = np.asarray(codes, dtype=np.int64)
        if not self.orders:
            return np.zeros((len(codes), 0), dtype=np.int64)
        w = np.array(self._weights, dtype=np.int64)
        n = np.array(self.orders, dtype=np.int64)
        return (codes[:, None] // w[None, :]) % n[None, :]

    def add_codes(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise group sum of two equally shaped code arrays."""
        if not self.orders:
            return np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        if self._table is None and self.size <= 4096:
            g = np.arange(self.size)
            ca = self.components(g)
            s = (ca[:, None, :] + ca[None, :, :]) % np.array(self.orders)
            self._table = (s * np.array(self._weights)).sum(axis=2)
        if self._table is not None:
            return self._table[a, b]
        shape = np.broadcast(a, b).shape
        a = np.broadcast_to(a, shape).ravel()
        b = np.broadcast_to(b, shape).ravel()
        s = (self.components(a) + self.components(b)) % np.array(self.orders)
        return (s * np.array(self._weights)).sum(axis=1).reshape(shape)


class Bicharacter:
    """A bicharacter ``chi: G x G -> k^*`` given on pairs of generators.

    ``chi(g, h) = prod_{a, b} table[a][b] ** (g_a * h_b)``; well defined
    because every ``table[a][b]`` is checked to satisfy
    ``table[a][b] ** gcd(n_a, n_b) == 1``.
    """

    __slots__ = ("group", "field", "table", "_values")

    def __init__(self, group: GradingGroup, field: FieldSpec, table=None):
        r = len(group.orders)
        if table is None:
            table = [[1] * r for _ in range(r)]
        table = tuple(tuple(field.element(v) for v in row) for row in table)
        if len(table) != r or any(len(row) != r for row in table):
            raise GradingMismatch(f"bicharacter table must be {r}x{r}")
        for a, row in enumerate(table):
            for b, v in enumerate(row):
                if v == 0:
                    raise ValueError("bicharacter values must be nonzero")
                e = math.gcd(group.orders[a], group.orders[b])
                if field.power(v, e) != 1:
                    raise ValueError(
                        f"bicharacter value {field.format_scalar(v)} on generators "
                        f"({a}, {b}) is not a root of unity of order dividing {e}")
        self.group = group
        self.field = field
        self.table = table
        self._values = None

    def __eq__(self, other):
        return (isinstance(other, Bicharacter) and self.group == other.group
                and self.field == other.field and self.table == other.table)

    def __hash__(self):
        return hash((self.group, self.field, self.table))

    def __call__(self, g, h) -> RawScalar:
        g = self.group.normalize(g)
        h = self.group.normalize(h)
        val = self.field.one
        for a, ga in enumerate(g):
            for b, hb in enumerate(h):
                if ga and hb:
                    val = self.field.mul(val, self.field.power(self.table[a][b], ga * hb))
        return val

    def transposed(self) -> "Bicharacter":
        t = [[self.table[b][a] for b in range(len(self.table))] for a in range(len(self.table))]
        return Bicharacter(self.group, self.field, t)

    def code_values(self) -> np.ndarray:
        """``|G| x |G|`` integer array of values (residues, or +-1 over Q)."""
        if self._values is None:
            els = self.group.elements()
            vals = np.zeros((len(els), len(els)), dtype=np.int64)
            for i, g in enumerate(els):
                for j, h in enumerate(els):
                    v = self(g, h)
                    vals[i, j] = int(v)
            self._values = vals
        return self._values

    def is_trivial(self) -> bool:
        return all(v == 1 for row in self.table for v in row)


class GVec:
    """The category of G-graded vector spaces with a chosen bicharacter."""

    __slots__ = ("field", "group", "chi", "__weakref__", "_words")

    def __init__(self, field: FieldSpec, orders: Sequence[int] = (), table=None):
        self.field = field
        self.group = GradingGroup(orders)
        self.chi = Bicharacter(self.group, field, table)
        if field.p is None:
            for row in self.chi.table:
                for v in row:
                    if v not in (1, -1):
                        raise ValueError("over the rationals the bicharacter takes values +-1")
        self._words = {}

    @classmethod
    def trivial(cls, field: FieldSpec) -> "GVec":
        return cls(field)

    @classmethod
    def super(cls, field: FieldSpec) -> "GVec":
        """Super vector spaces: Z/2 grading with chi(1, 1) = -1."""
        return cls(field, (2,), [[-1]])

    def __eq__(self, other):
        return isinstance(other, GVec) and self.field == other.field and self.chi == other.chi

    def __hash__(self):
        return hash(self.chi)

    def __repr__(self):
        return f"GVec({self.field}, {list(self.group.orders)}, {[list(map(str, r)) for r in self.chi.table]})"

    def transposed(self) -> "GVec":
        """Same grading with ``chi(g, h)`` replaced by ``chi(h, g)``.

        Transposing every structure map of a bialgebra in this category yields
        a bialgebra in the transposed category.
        """
        t = self.chi.transposed().table
        return GVec(self.field, self.group.orders, t)

    # -- objects --------------------------------------------------------------

    def atom(self, dims: Mapping | int) -> "Obj":
        """Atomic object from ``{degree: dim}`` (an int means degree zero)."""
        if isinstance(dims, int):
            dims = {self.group.zero: dims}
        table = {}
        for g, d in dims.items():
            d = int(d)
            if d < 0:
                raise ValueError("dimensions must be nonnegative")
            if d:
                c = self.group.code(g)
                table[c] = table.get(c, 0) + d
        return self._word((tuple(sorted(table.items())),))

    def obj(self, dims: Mapping | int) -> "Obj":
        return self.atom(dims)

    @property
    def unit(self) -> "Obj":
        return self._word(())

    def _word(self, factors: tuple) -> "Obj":
        obj = self._words.get(factors)
        if obj is None:
            obj = Obj(self, factors)
            self._words[factors] = obj
        return obj

    def tensor(self, *objs: "Obj") -> "Obj":
        factors = ()
        for o in objs:
            if o.cat != self:
                raise GradingMismatch("objects belong to different categories")
            factors += o.factors
        return self._word(factors)


class Obj:
    """A graded object: a word of atomic graded dimension tables."""

    __slots__ = ("cat", "factors", "dim", "_degs", "_perm", "_rank", "_ordered")

    def __init__(self, cat: GVec, factors: tuple):
        self.cat = cat
        self.factors = factors
        self.dim = int(np.prod([sum(d for _, d in atom) for atom in factors], dtype=np.int64))
        self._degs = self._perm = self._rank = None
        # A word whose factors each sit in one degree has constant degree, hence is ordered.
        self._ordered = True if all(len(atom) <= 1 for atom in factors) else None

    @property
    def degs(self) -> np.ndarray:
        """Degree codes of the Kronecker-order basis."""
        if self._degs is None:
            degs = np.zeros(1, dtype=np.int64)
            for atom in self.factors:
                codes = np.repeat(np.array([c for c, _ in atom], dtype=np.int64),
                                  [d for _, d in atom]).astype(np.int64)
                degs = self.cat.group.add_codes(degs[:, None], codes[None, :]).ravel()
            self._degs = degs
        return self._degs

    @property
    def perm(self) -> np.ndarray:
        """Kronecker index of each canonical (degree-sorted) basis vector."""
        if self._perm is None:
            self._perm = np.arange(self.dim) if self._ordered else np.argsort(self.degs, kind="stable")
        return self._perm

    @property
    def rank(self) -> np.ndarray:
        """Canonical index of each Kronecker basis vector (inverse of ``perm``)."""
        if self._rank is None:
            if self._ordered:
                self._rank = np.arange(self.dim)
            else:
                rank = np.empty_like(self.perm)
                rank[self.perm] = np.arange(self.dim)
                self._rank = rank
        return self._rank

    @property
    def ordered(self) -> bool:
        if self._ordered is None:
            self._ordered = bool(np.all(self.perm == np.arange(self.dim)))
        return self._ordered

    # Objects are interned per category, so identity comparison suffices.

    @property
    def field(self) -> FieldSpec:
        return self.cat.field

    def _code_counts(self) -> dict:
        """``{degree code: dimension}``, convolved factor by factor."""
        group = self.cat.group
        counts = {group.code(group.zero): 1}
        for atom in self.factors:
            nxt = {}
            for c, n in counts.items():
                for a, d in atom:
                    k = int(group.add_codes(np.array([c]), np.array([a]))[0])
                    nxt[k] = nxt.get(k, 0) + n * d
            counts = nxt
        return {c: n for c, n in counts.items() if n}

    @property
    def graded_dims(self) -> dict:
        return {self.cat.group.decode(c): n for c, n in sorted(self._code_counts().items())}

    def same_dims(self, other: "Obj") -> bool:
        """Equal graded dimensions, i.e. equal canonical bases up to relabeling."""
        if self is other:
            return True
        return (self.cat == other.cat and self.dim == other.dim
                and self._code_counts() == other._code_counts())

    def basis_degrees(self) -> list[Degree]:
        """Degrees of the canonical basis vectors, in order."""
        return [self.cat.group.decode(int(c)) for c in self.degs[self.perm]]

    @property
    def is_atomic(self) -> bool:
        return len(self.factors) <= 1

    def flatten(self) -> "Obj":
        """The atomic object with the same graded dimensions."""
        return self.cat.atom(self.graded_dims)

    @property
    def id(self) -> "Mor":
        return identity(self)

    def __matmul__(self, other):
        if isinstance(other, Obj):
            return tensor_obj(self, other)
        if isinstance(other, Mor):
            return tensor_mor(identity(self), other)
        return NotImplemented

    def __pow__(self, n: int) -> "Obj":
        return self.cat.tensor(*([self] * n))

    def __repr__(self):
        parts = []
        for atom in self.factors:
            parts.append("{" + ", ".join(f"{self.cat.group.decode(c)}: {d}" for c, d in atom) + "}")
        return "Obj(" + (" (x) ".join(parts) if parts else "1") + ")"


def tensor_obj(x: Obj, y: Obj) -> Obj:
    """Tensor product of objects (concatenation of words)."""
    if x.cat != y.cat:
        raise GradingMismatch("objects belong to different categories")
    return x.cat._word(x.factors + y.factors)


class Mor:
    """A homogeneous linear map ``dom -> cod``.

    ``Mor(dom, cod, matrix)`` takes the matrix in canonical bases (rows index
    ``cod``); entries that would connect different degrees are rejected.
    """

    __slots__ = ("dom", "cod", "_mat", "_factors")

    def __init__(self, dom: Obj, cod: Obj, matrix, *, check: bool = True):
        field = dom.cat.field
        if dom.cat != cod.cat:
            raise GradingMismatch("domain and codomain belong to different categories")
        if not isinstance(matrix, ExactMatrix):
            matrix = ExactMatrix.from_rows(field, matrix)
        if matrix.field != field:
            raise FieldMismatch(f"matrix over {matrix.field} for objects over {field}")
        if matrix.shape != (cod.dim, dom.dim):
            raise ShapeMismatch(f"matrix shape {matrix.shape} for a map of dims {dom.dim} -> {cod.dim}")
        if check:
            rows, cols, _ = matrix.coo()
            bad = np.nonzero(cod.degs[cod.perm][rows] != dom.degs[dom.perm][cols])[0]
            if len(bad):
                r, c = int(rows[bad[0]]), int(cols[bad[0]])
                raise NonHomogeneous(
                    f"entry ({r}, {c}) maps degree {dom.basis_degrees()[c]} "
                    f"to degree {cod.basis_degrees()[r]}", r, c)
        if not (cod.ordered and dom.ordered):
            matrix = matrix.take(cod.rank, dom.rank)
        self.dom = dom
        self.cod = cod
        self._mat = matrix
        self._factors = None

    @classmethod
    def _raw(cls, dom: Obj, cod: Obj, mat: ExactMatrix) -> "Mor":
        f = cls.__new__(cls)
        f.dom = dom
        f.cod = cod
        f._mat = mat
        f._factors = None
        return f

    @classmethod
    def _deferred_tensor(cls, dom: Obj, cod: Obj, factors: tuple) -> "Mor":
        """A tensor product kept as its factors (objects for identities) until needed."""
        f = cls.__new__(cls)
        f.dom = dom
        f.cod = cod
        f._mat = None
        f._factors = factors
        return f

    @property
    def mat(self) -> ExactMatrix:
        """Matrix in the Kronecker order of the factors of domain and codomain."""
        if self._mat is None:
            out = None
            for it in self._factors:
                m = identity(it).mat if isinstance(it, Obj) else it.mat
                out = m if out is None else out.kron(m)
            self._mat = out
            self._factors = None
        return self._mat

    @property
    def field(self) -> FieldSpec:
        return self.dom.cat.field

    @property
    def cat(self) -> GVec:
        return self.dom.cat

    @property
    def matrix(self) -> ExactMatrix:
        """Matrix in the canonical bases of domain and codomain."""
        if self.cod.ordered and self.dom.ordered:
            return self.mat
        return self.mat.take(self.cod.perm, self.dom.perm)

    def to_lists(self) -> list[list[RawScalar]]:
        return self.matrix.to_lists()

    def entries(self):
        """Nonzero canonical entries ``(row, col, value)``."""
        return self.matrix.entries()

    # -- algebra --------------------------------------------------------------

    def compose(self, other: "Mor") -> "Mor":
        """``self`` after ``other``."""
        return compose(self, other)

    def __rshift__(self, other: "Mor") -> "Mor":
        """Diagrammatic order: ``f >> g`` is ``g`` after ``f``."""
        if isinstance(other, Obj):
            other = identity(other)
        return compose(other, self)

    def __rrshift__(self, other):
        if isinstance(other, Obj):
            return compose(self, identity(other))
        return NotImplemented

    def __matmul__(self, other):
        if isinstance(other, Obj):
            other = identity(other)
        if not isinstance(other, Mor):
            return NotImplemented
        return tensor_mor(self, other)

    def __rmatmul__(self, other):
        if isinstance(other, Obj):
            return tensor_mor(identity(other), self)
        return NotImplemented

    def _same_shape(self, other: "Mor") -> "Mor":
        if other.dom is self.dom and other.cod is self.cod:
            return other
        if not (self.dom.same_dims(other.dom) and self.cod.same_dims(other.cod)):
            raise ShapeMismatch("morphisms have different domains or codomains")
        return Mor._raw(self.dom, self.cod, _reindex(other.mat, other.cod, self.cod, other.dom, self.dom))

    def __add__(self, other: "Mor") -> "Mor":
        other = self._same_shape(other)
        return Mor._raw(self.dom, self.cod, self.mat + other.mat)

    def __sub__(self, other: "Mor") -> "Mor":
        other = self._same_shape(other)
        return Mor._raw(self.dom, self.cod, self.mat - other.mat)

    def __neg__(self) -> "Mor":
        return Mor._raw(self.dom, self.cod, -self.mat)

    def scale(self, s) -> "Mor":
        return Mor._raw(self.dom, self.cod, self.mat.scale(s))

    def __rmul__(self, s):
        if isinstance(s, Mor):
            return NotImplemented
        return self.scale(s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mor):
            return NotImplemented
        try:
            other = self._same_shape(other)
        except ShapeMismatch:
            return False
        return self.mat == other.mat

    __hash__ = None

    def first_difference(self, other: "Mor"):
        """``None`` if equal, else ``(row, col, mine, theirs)`` in canonical bases."""
        other = self._same_shape(other)
        if self.mat == other.mat:
            return None
        return self.matrix.first_difference(other.matrix)

    def transpose(self, cat: GVec | None = None) -> "Mor":
        """The transposed map ``cod -> dom``, optionally moved into ``cat``.

        ``cat`` must have the same grading group (typically ``cat.transposed()``).
        """
        dom, cod = self.cod, self.dom
        if cat is not None and cat != self.cat:
            if cat.group != self.cat.group or cat.field != self.field:
                raise GradingMismatch("transposition target has a different grading or field")
            dom = cat._word(dom.factors)
            cod = cat._word(cod.factors)
        return Mor._raw(dom, cod, self.mat.transpose())

    def is_zero(self) -> bool:
        return self.mat.is_zero()

    def __repr__(self):
        return f"<Mor {self.dom!r} -> {self.cod!r} nnz={self.mat.nnz}>"


def _reindex(mat: ExactMatrix, cod_from: Obj, cod_to: Obj, dom_from: Obj, dom_to: Obj) -> ExactMatrix:
    """Move a matrix between objects with equal graded dims but different words."""
    rows = None if cod_from is cod_to else cod_from.perm[cod_to.rank]
    cols = None if dom_from is dom_to else dom_from.perm[dom_to.rank]
    if rows is None and cols is None:
        return mat
    return mat.take(rows, cols)


def identity(x: Obj) -> Mor:
    if x.dim <= IDENTITY_CACHE_DIM:
        return _identity_cached(x)
    return Mor._raw(x, x, ExactMatrix.identity(x.field, x.dim))


#: Identities up to this dimension are cached; larger ones are cheap to rebuild.
IDENTITY_CACHE_DIM = 1 << 12


@lru_cache(maxsize=1024)
def _identity_cached(x: Obj) -> Mor:
    return Mor._raw(x, x, ExactMatrix.identity(x.field, x.dim))


def zero_mor(x: Obj, y: Obj) -> Mor:
    return Mor._raw(x, y, ExactMatrix.zeros(x.field, y.dim, x.dim))


def compose(f: Mor, g: Mor) -> Mor:
    """``f`` after ``g``; requires equal graded dims of ``g.cod`` and ``f.dom``."""
    if g.cod is not f.dom:
        if not g.cod.same_dims(f.dom):
            raise ShapeMismatch(f"cannot compose: {g.cod!r} does not match {f.dom!r}")
        gm = _reindex(g.mat, g.cod, f.dom, g.dom, g.dom)
    else:
        gm = g.mat
    if f._mat is None:
        return Mor._raw(g.dom, f.cod, _apply_factors(f._factors, gm))
    return Mor._raw(g.dom, f.cod, f.mat.matmul(gm))


def _apply_factors(factors: tuple, m: ExactMatrix) -> ExactMatrix:
    """``(f_1 (x) ... (x) f_n) @ m``, one factor at a time; objects are identities."""
    cods = [it.dim if isinstance(it, Obj) else it.cod.dim for it in factors]
    doms = [it.dim if isinstance(it, Obj) else it.dom.dim for it in factors]
    for k, it in enumerate(factors):
        if isinstance(it, Obj):
            continue
        left = int(np.prod(cods[:k], dtype=np.int64))
        right = int(np.prod(doms[k + 1:], dtype=np.int64))
        m = m.apply_factor(it.mat, left, right)
    return m


def tensor_mor(f: Mor, g: Mor) -> Mor:
    if f.cat != g.cat:
        raise GradingMismatch("morphisms belong to different categories")
    return Mor._raw(tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod), f.mat.kron(g.mat))


#: Tensor products with more entries than this are kept factored until needed.
DEFERRED_TENSOR_MIN = 1 << 20


def tensor(*items) -> Mor:
    """Tensor product of several morphisms (objects stand for identities).

    Large products are returned in factored form; composing one after a map
    then applies the factors one at a time, and anything else that reads the
    matrix builds it on first access.
    """
    factors = []
    for it in items:
        if isinstance(it, Mor) and it._mat is None:
            factors.extend(it._factors)
        else:
            factors.append(it)
    if not factors:
        raise ValueError("tensor needs at least one factor")
    cat = factors[0].cat
    for it in factors[1:]:
        if it.cat != cat:
            raise GradingMismatch("morphisms belong to different categories")
    dom = cat.tensor(*(it if isinstance(it, Obj) else it.dom for it in factors))
    cod = cat.tensor(*(it if isinstance(it, Obj) else it.cod for it in factors))
    if dom.dim * cod.dim > DEFERRED_TENSOR_MIN and len(factors) > 1:
        return Mor._deferred_tensor(dom, cod, tuple(factors))
    out = None
    for it in factors:
        if isinstance(it, Obj):
            it = identity(it)
        out = it if out is None else tensor_mor(out, it)
    return out


def then(*maps: Mor) -> Mor:
    """Diagrammatic composite: first ``maps[0]``, then ``maps[1]``, ..."""
    out = maps[0]
    for f in maps[1:]:
        out = compose(f, out)
    return out


@lru_cache(maxsize=256)
def _braid_cached(x: Obj, y: Obj, inverse: bool) -> Mor:
    field = x.field
    dx, dy = x.dim, y.dim
    i = np.repeat(np.arange(dx), dy)
    j = np.tile(np.arange(dy), dx)
    src = i * dy + j
    dst = j * dx + i
    vals = x.cat.chi.code_values()[x.degs[i], y.degs[j]]
    if inverse:
        if field.p is None:
            vals = vals.copy()  # +-1 is its own inverse
        else:
            vals = np.array([pow(int(v), -1, field.p) for v in vals], dtype=np.int64) if len(vals) else vals
        mat = ExactMatrix.monomial(field, dx * dy, dx * dy, src, dst, vals)
        return Mor._raw(tensor_obj(y, x), tensor_obj(x, y), mat)
    mat = ExactMatrix.monomial(field, dx * dy, dx * dy, dst, src, vals)
    return Mor._raw(tensor_obj(x, y), tensor_obj(y, x), mat)


def braiding(x: Obj, y: Obj) -> Mor:
    """``c_{X,Y}: X (x) Y -> Y (x) X``."""
    if x.cat != y.cat:
        raise GradingMismatch("objects belong to different categories")
    return _braid_cached(x, y, False)


def braiding_inv(x: Obj, y: Obj) -> Mor:
    """``c_{X,Y}^{-1}: Y (x) X -> X (x) Y``."""
    if x.cat != y.cat:
        raise GradingMismatch("objects belong to different categories")
    return _braid_cached(x, y, True)


def _degree_blocks(x: Obj):
    """Canonical positions grouped by degree code, in increasing degree."""
    sorted_degs = x.degs[x.perm]
    codes, starts = np.unique(sorted_degs, return_index=True)
    ends = list(starts[1:]) + [x.dim]
    return {int(c): np.arange(s, e) for c, s, e in zip(codes, starts, ends)}


def kernel(f: Mor) -> tuple[Obj, Mor]:
    """``(K, j)`` with ``j`` the reduced column-echelon basis of ``ker f``.

    The computation runs degree by degree.
    """
    field = f.field
    m = f.matrix
    dom_blocks = _degree_blocks(f.dom)
    cod_blocks = _degree_blocks(f.cod)
    dims = {}
    entries = []
    col = 0
    for code, cols in dom_blocks.items():
        rows = cod_blocks.get(code, np.zeros(0, dtype=np.int64))
        if len(rows):
            basis = nullspace(field, m.take(rows, cols))
        else:
            basis = [{k: field.one} for k in range(len(cols))]
        for vec in basis:
            for k, v in vec.items():
                entries.append((int(cols[k]), col, v))
            col += 1
        if basis:
            dims[f.cat.group.decode(code)] = len(basis)
    k_obj = f.cat.atom(dims)
    j = Mor(k_obj, f.dom, ExactMatrix.from_entries(field, f.dom.dim, col, entries), check=False)
    return k_obj, j


def cokernel(f: Mor) -> tuple[Obj, Mor]:
    """``(Q, p)`` with ``p`` the reduced row-echelon basis of the left null space."""
    field = f.field
    m = f.matrix
    dom_blocks = _degree_blocks(f.dom)
    cod_blocks = _degree_blocks(f.cod)
    dims = {}
    entries = []
    row = 0
    for code, rows in cod_blocks.items():
        cols = dom_blocks.get(code, np.zeros(0, dtype=np.int64))
        if len(cols):
            basis = nullspace(field, m.take(rows, cols).transpose())
        else:
            basis = [{k: field.one} for k in range(len(rows))]
        for vec in basis:
            for k, v in vec.items():
                entries.append((row, int(rows[k]), v))
            row += 1
        if basis:
            dims[f.cat.group.decode(code)] = len(basis)
    q_obj = f.cat.atom(dims)
    p = Mor(f.cod, q_obj, ExactMatrix.from_entries(field, row, f.cod.dim, entries), check=False)
    return q_obj, p


def random_mor(x: Obj, y: Obj, rng, density: float = 1.0, bound: int = 3) -> Mor:
    """Random homogeneous map (used by tests and mutation experiments)."""
    field = x.field
    entries = []
    yd = y.degs[y.perm]
    xd = x.degs[x.perm]
    for r in range(y.dim):
        for c in range(x.dim):
            if yd[r] == xd[c] and rng.random() < density:
                v = field.random_element(rng, bound)
                if v != 0:
                    entries.append((r, c, v))
    return Mor(x, y, ExactMatrix.from_entries(field, y.dim, x.dim, entries), check=False)


def from_entries(x: Obj, y: Obj, entries: Iterable[tuple[int, int, object]]) -> Mor:
    """Map ``x -> y`` from canonical ``(row, col, value)`` triples (checked)."""
    entries = [(r, c, x.field.element(v)) for r, c, v in entries]
    return Mor(x, y, ExactMatrix.from_entries(x.field, y.dim, x.dim, entries))
