"""Exact matrices over Q or F_p with a dense/sparse hybrid storage.

A matrix is stored as an integer numerator array together with a single
positive common denominator (always 1 over F_p).  Small matrices are kept as
dense numpy arrays; large ones as scipy CSR matrices.  Numerators are int64
whenever an a-priori bound guarantees that no intermediate value can overflow;
otherwise the computation falls back to Python integers (object arrays), so
results are exact in every case.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterator, Sequence

import numpy as np
import scipy.sparse as sp

from .errors import FieldMismatch, ShapeMismatch
from .field import FieldSpec, RawScalar

# int64 values are kept strictly below this bound, so sums of two never wrap.
_LIMIT = 1 << 62
# Matrices with at most this many entries are stored densely.
DENSE_MAX = 1 << 16
# Object-dtype (big integer) matrices larger than this are refused.
OBJECT_MAX = 1 << 22


class ExactOverflow(ArithmeticError):
    """A big-integer intermediate is too large to be handled densely."""


def _maxabs_dense(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(x)) for x in a.flat)
    return int(np.abs(a).max())


def _maxabs_sparse(a: sp.csr_matrix) -> int:
    if a.nnz == 0:
        return 0
    return int(np.abs(a.data).max())


def _gcd_all(values) -> int:
    return reduce(math.gcd, (int(v) for v in values), 0)


class ExactMatrix:
    """An immutable exact matrix; see the module docstring for the layout."""

    __slots__ = ("field", "shape", "den", "_dense", "_sparse")

    def __init__(self, field: FieldSpec, shape, num, den: int = 1):
        # Internal constructor: ``num`` is a dense ndarray or a CSR matrix in
        # arbitrary (not yet normalized) form.
        self.field = field
        self.shape = (int(shape[0]), int(shape[1]))
        self.den = int(den)
        self._dense = None
        self._sparse = None
        self._normalize(num)

    # -- normalization --------------------------------------------------------

    def _normalize(self, num) -> None:
        field = self.field
        m, n = self.shape
        if self.den < 0:
            self.den = -self.den
            num = -num
        if sp.issparse(num):
            num = num.tocsr(copy=True)
            if num.dtype != np.int64:
                num = num.astype(np.int64)
            if field.p is not None:
                num.data %= field.p
                self.den = 1
            num.eliminate_zeros()
            if field.p is None:
                g = math.gcd(self.den, _gcd_all(np.unique(np.abs(num.data)))) if num.nnz else self.den
                if num.nnz == 0:
                    self.den = 1
                elif g > 1:
                    num.data //= g
                    self.den //= g
            if m * n <= DENSE_MAX:
                self._dense = num.toarray().astype(np.int64)
            else:
                num.sort_indices()
                self._sparse = num
            return
        num = np.asarray(num)
        if num.dtype != object and num.dtype != np.int64:
            num = num.astype(np.int64)
        if field.p is not None and num.dtype != object and m * n <= DENSE_MAX:
            self.den = 1
            self._dense = np.mod(num, field.p)
            return
        if field.p is not None:
            if num.dtype == object:
                num = np.array([int(x) % field.p for x in num.flat], dtype=np.int64).reshape(num.shape)
            else:
                num = np.mod(num, field.p)
            self.den = 1
        else:
            if num.dtype == object:
                g = math.gcd(self.den, _gcd_all(num.flat))
            elif num.size:
                g = math.gcd(self.den, int(np.gcd.reduce(num, axis=None)))
            else:
                g = self.den
            if g == 0 or not num.any():
                self.den = 1
                num = np.zeros(num.shape, dtype=np.int64)
            elif g > 1:
                num = num // g
                self.den //= g
            if num.dtype == object and _maxabs_dense(num) < _LIMIT:
                num = num.astype(np.int64)
        if m * n > DENSE_MAX and num.dtype != object:
            self._sparse = sp.csr_matrix(num)
        else:
            self._dense = num

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zeros(cls, field: FieldSpec, m: int, n: int) -> "ExactMatrix":
        if m * n <= DENSE_MAX:
            return cls(field, (m, n), np.zeros((m, n), dtype=np.int64))
        return cls(field, (m, n), sp.csr_matrix((m, n), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "ExactMatrix":
        if n * n <= DENSE_MAX:
            return cls._trusted(field, (n, n), np.eye(n, dtype=np.int64), 1)
        idx = np.arange(n)
        return cls.monomial(field, n, n, idx, idx, np.ones(n, dtype=np.int64))

    @classmethod
    def _trusted(cls, field: FieldSpec, shape, dense: np.ndarray, den: int) -> "ExactMatrix":
        """Wrap an already normalized dense int64 numerator array."""
        out = cls.__new__(cls)
        out.field = field
        out.shape = shape
        out.den = den
        out._dense = dense
        out._sparse = None
        return out

    @classmethod
    def monomial(cls, field, m, n, rows, cols, vals) -> "ExactMatrix":
        """Matrix with integer entries ``vals`` at ``(rows, cols)`` (duplicates add)."""
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        vals = np.asarray(vals, dtype=np.int64)
        mat = sp.csr_matrix((vals, (rows, cols)), shape=(m, n), dtype=np.int64)
        return cls(field, (m, n), mat)

    @classmethod
    def from_entries(cls, field: FieldSpec, m: int, n: int,
                     entries: Sequence[tuple[int, int, RawScalar]]) -> "ExactMatrix":
        """Build from ``(row, col, value)`` triples; duplicates add up."""
        vals = [field.element(v) for _, _, v in entries]
        if field.p is None:
            den = reduce(lambda a, b: a * b // math.gcd(a, b), (v.denominator for v in vals), 1)
            ints = [int(v.numerator * (den // v.denominator)) for v in vals]
        else:
            den, ints = 1, [int(v) for v in vals]
        rows = [int(r) for r, _, _ in entries]
        cols = [int(c) for _, c, _ in entries]
        for r, c in zip(rows, cols):
            if not (0 <= r < m and 0 <= c < n):
                raise ShapeMismatch(f"entry ({r}, {c}) outside a {m}x{n} matrix")
        big = any(abs(v) >= _LIMIT // max(1, len(ints)) for v in ints)
        if big or m * n <= DENSE_MAX:
            if big and m * n > OBJECT_MAX:
                raise ExactOverflow("entries too large for a sparse matrix")
            arr = np.zeros((m, n), dtype=object if big else np.int64)
            for r, c, v in zip(rows, cols, ints):
                arr[r, c] += v
            return cls(field, (m, n), arr, den)
        mat = sp.csr_matrix((np.array(ints, dtype=np.int64), (rows, cols)), shape=(m, n))
        return cls(field, (m, n), mat, den)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence]) -> "ExactMatrix":
        """Build from a nested list of scalars (ints, Fractions or strings)."""
        m = len(rows)
        n = len(rows[0]) if m else 0
        entries = []
        for r, row in enumerate(rows):
            if len(row) != n:
                raise ShapeMismatch("ragged matrix rows")
            for c, v in enumerate(row):
                v = field.element(v)
                if v != 0:
                    entries.append((r, c, v))
        return cls.from_entries(field, m, n, entries)

    # -- access ---------------------------------------------------------------

    @property
    def is_sparse(self) -> bool:
        return self._sparse is not None

    def _num_dense(self, dtype=None) -> np.ndarray:
        if self._dense is not None:
            a = self._dense
        else:
            if self.shape[0] * self.shape[1] > OBJECT_MAX * 4:
                raise ExactOverflow("matrix too large to densify")
            a = self._sparse.toarray()
        if dtype is object and a.dtype != object:
            a = a.astype(object)
        return a

    def _num_sparse(self) -> sp.csr_matrix:
        if self._sparse is not None:
            return self._sparse
        if self._dense.dtype == object:
            raise ExactOverflow("big integers cannot be stored sparsely")
        return sp.csr_matrix(self._dense)

    def _is_big(self) -> bool:
        return self._dense is not None and self._dense.dtype == object

    def maxabs(self) -> int:
        return _maxabs_dense(self._dense) if self._dense is not None else _maxabs_sparse(self._sparse)

    @property
    def nnz(self) -> int:
        if self._dense is not None:
            return int(np.count_nonzero(self._dense))
        return int(self._sparse.nnz)

    def is_zero(self) -> bool:
        return self.nnz == 0

    def _value(self, num) -> RawScalar:
        if self.field.p is None:
            return Fraction(int(num), self.den)
        return int(num)

    def entry(self, r: int, c: int) -> RawScalar:
        if self._dense is not None:
            return self._value(self._dense[r, c])
        return self._value(self._sparse[r, c])

    def coo(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Row indices, column indices and numerators of the nonzero entries."""
        if self._dense is not None:
            rows, cols = np.nonzero(self._dense)
            return rows, cols, self._dense[rows, cols]
        co = self._sparse.tocoo()
        return co.row.astype(np.int64), co.col.astype(np.int64), co.data

    def entries(self) -> Iterator[tuple[int, int, RawScalar]]:
        """Nonzero entries in row-major order."""
        rows, cols, nums = self.coo()
        order = np.lexsort((cols, rows))
        for k in order:
            yield int(rows[k]), int(cols[k]), self._value(nums[k])

    def to_lists(self) -> list[list[RawScalar]]:
        a = self._num_dense()
        return [[self._value(x) for x in row] for row in a]

    def column(self, c: int) -> dict[int, RawScalar]:
        if self._dense is not None:
            col = self._dense[:, c]
            return {int(r): self._value(col[r]) for r in np.nonzero(col)[0]}
        col = self._sparse[:, [c]].tocoo()
        return {int(r): self._value(v) for r, v in zip(col.row, col.data)}

    def row_dicts(self) -> list[dict[int, RawScalar]]:
        """One ``{col: value}`` dict per row (used by the elimination code)."""
        out: list[dict[int, RawScalar]] = [dict() for _ in range(self.shape[0])]
        for r, c, v in self.entries():
            out[r][c] = v
        return out

    # -- arithmetic -----------------------------------------------------------

    def _check_field(self, other: "ExactMatrix") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} versus {other.field}")

    def _bound(self, a: int, b: int, k: int) -> int:
        if self.field.p is not None:
            a = b = self.field.p - 1
        return a * b * max(k, 1)

    def _product_bound(self, other: "ExactMatrix", k: int) -> int:
        """Bound on the absolute value of an entry of a product with inner size ``k``."""
        if self.field.p is not None:
            return (self.field.p - 1) ** 2 * max(k, 1)
        return self.maxabs() * other.maxabs() * max(k, 1)

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        m, k = self.shape
        k2, n = other.shape
        if k != k2:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        den = self.den * other.den
        bound = self._product_bound(other, k)
        small = (m * n <= DENSE_MAX and m * k <= DENSE_MAX and k * n <= DENSE_MAX)
        if small or self._is_big() or other._is_big():
            if bound < _LIMIT and not (self._is_big() or other._is_big()):
                num = self._num_dense() @ other._num_dense()
            else:
                num = self._num_dense(object).dot(other._num_dense(object))
            return ExactMatrix(self.field, (m, n), num, den)
        if bound >= _LIMIT:
            if m * n > OBJECT_MAX:
                raise ExactOverflow("product too large for big-integer arithmetic")
            num = self._num_dense(object).dot(other._num_dense(object))
            return ExactMatrix(self.field, (m, n), num, den)
        num = self._num_sparse() @ other._num_sparse()
        return ExactMatrix(self.field, (m, n), num, den)

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_field(other)
        m = self.shape[0] * other.shape[0]
        n = self.shape[1] * other.shape[1]
        den = self.den * other.den
        bound = self._product_bound(other, 1)
        big = bound >= _LIMIT or self._is_big() or other._is_big()
        if m * n <= DENSE_MAX or big:
            if big and m * n > OBJECT_MAX:
                raise ExactOverflow("tensor product too large for big-integer arithmetic")
            a = self._num_dense(object if big else None)
            b = other._num_dense(object if big else None)
            num = (a[:, None, :, None] * b[None, :, None, :]).reshape(m, n)
            return ExactMatrix(self.field, (m, n), num, den)
        num = sp.kron(self._num_sparse(), other._num_sparse(), format="csr")
        return ExactMatrix(self.field, (m, n), num, den)

    def apply_factor(self, g: "ExactMatrix", left: int, right: int) -> "ExactMatrix":
        """``(I_left (x) g (x) I_right) @ self`` without forming the Kronecker product.

        Rows of ``self`` are read as triples ``(x, u, y)`` in Kronecker order;
        ``g`` acts on the middle index.
        """
        self._check_field(g)
        v, u = g.shape
        rows, cols = self.shape
        if rows != left * u * right:
            raise ShapeMismatch(f"cannot apply a {g.shape} factor to {self.shape} between {left} and {right}")
        if self._is_big() or g._is_big() or g._product_bound(self, u) >= _LIMIT:
            eye_l, eye_r = ExactMatrix.identity(self.field, left), ExactMatrix.identity(self.field, right)
            return eye_l.kron(g).kron(eye_r).matmul(self)
        m = self._num_sparse().tocoo()
        r, c = m.row.astype(np.int64), m.col.astype(np.int64)
        x, rest = np.divmod(r, u * right)
        mid, y = np.divmod(rest, right)
        # One row per occupied (x, y, column) slot, so scipy's work arrays stay small.
        keys, slot = np.unique((x * right + y) * cols + c, return_inverse=True)
        stacked = sp.csr_matrix((m.data, (slot.ravel(), mid)), shape=(len(keys), u))
        prod = (stacked @ g._num_sparse().T.tocsr()).tocoo()
        xy, c2 = np.divmod(keys[prod.row], cols)
        x2, y2 = np.divmod(xy, right)
        out = sp.csr_matrix((prod.data, ((x2 * v + prod.col) * right + y2, c2)),
                            shape=(left * v * right, cols), dtype=np.int64)
        return ExactMatrix(self.field, (left * v * right, cols), out, self.den * g.den)

    def _combine(self, other: "ExactMatrix", sign: int) -> "ExactMatrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot add {self.shape} and {other.shape}")
        lcm = self.den * other.den // math.gcd(self.den, other.den)
        fa, fb = lcm // self.den, lcm // other.den
        bound = self._bound(self.maxabs(), fa, 1) + self._bound(other.maxabs(), fb, 1)
        big = bound >= _LIMIT or self._is_big() or other._is_big()
        if self._dense is not None and other._dense is not None or big:
            dt = object if big else None
            num = self._num_dense(dt) * fa + sign * (other._num_dense(dt) * fb)
        else:
            num = self._num_sparse() * fa + sign * (other._num_sparse() * fb)
        return ExactMatrix(self.field, self.shape, num, lcm)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self._combine(other, -1)

    def __neg__(self) -> "ExactMatrix":
        num = self._dense if self._dense is not None else self._sparse
        return ExactMatrix(self.field, self.shape, -num, self.den)

    def scale(self, s: RawScalar) -> "ExactMatrix":
        s = self.field.element(s)
        if self.field.p is None:
            a, b = s.numerator, s.denominator
        else:
            a, b = int(s), 1
        big = self._bound(self.maxabs(), abs(a), 1) >= _LIMIT or self._is_big()
        if self._dense is not None or big:
            num = self._num_dense(object if big else None) * a
        else:
            num = self._sparse * a
        return ExactMatrix(self.field, self.shape, num, self.den * b)

    def transpose(self) -> "ExactMatrix":
        if self._dense is not None:
            num = self._dense.T.copy()
        else:
            num = self._sparse.T.tocsr()
        return ExactMatrix(self.field, (self.shape[1], self.shape[0]), num, self.den)

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def take(self, rows=None, cols=None) -> "ExactMatrix":
        """Submatrix (or reindexing) by integer index arrays."""
        rows = np.arange(self.shape[0]) if rows is None else np.asarray(rows, dtype=np.int64)
        cols = np.arange(self.shape[1]) if cols is None else np.asarray(cols, dtype=np.int64)
        if self._dense is not None:
            num = self._dense[np.ix_(rows, cols)]
        else:
            num = self._sparse[rows][:, cols]
        return ExactMatrix(self.field, (len(rows), len(cols)), num, self.den)

    @staticmethod
    def block_diag_free(field: FieldSpec, m: int, n: int,
                        blocks: Sequence[tuple[np.ndarray, np.ndarray, "ExactMatrix"]]) -> "ExactMatrix":
        """Assemble an ``m x n`` matrix from blocks placed at given index sets."""
        entries = []
        for rows, cols, blk in blocks:
            for r, c, v in blk.entries():
                entries.append((int(rows[r]), int(cols[c]), v))
        return ExactMatrix.from_entries(field, m, n, entries)

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.field != other.field or self.shape != other.shape or self.den != other.den:
            return False
        if self._dense is not None and other._dense is not None:
            return bool(np.array_equal(self._dense, other._dense))
        if self._is_big() or other._is_big():
            return bool(np.array_equal(self._num_dense(object), other._num_dense(object)))
        diff = self._num_sparse() != other._num_sparse()
        return diff.nnz == 0

    __hash__ = None

    def first_difference(self, other: "ExactMatrix"):
        """First coordinate (in column-major order) where two matrices differ.

        Returns ``None`` when they are equal, else ``(row, col, mine, theirs)``.
        """
        if self.shape != other.shape:
            raise ShapeMismatch(f"cannot compare {self.shape} with {other.shape}")
        if self == other:
            return None
        diff = self - other
        rows, cols, _ = diff.coo()
        k = np.lexsort((rows, cols))[0]
        r, c = int(rows[k]), int(cols[k])
        return r, c, self.entry(r, c), other.entry(r, c)

    def rank(self) -> int:
        from ._linalg import rref_rows

        _, pivots = rref_rows(self.field, self.row_dicts(), self.shape[1])
        return len(pivots)

    def __repr__(self) -> str:
        kind = "sparse" if self.is_sparse else "dense"
        return f"<ExactMatrix {self.shape[0]}x{self.shape[1]} over {self.field}, {kind}, nnz={self.nnz}>"
