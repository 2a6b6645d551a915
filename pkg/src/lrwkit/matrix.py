"""Dense matrices over a :class:`~lrwkit.field.Field`.

Rows and columns carry labels so that submatrices ``M[X, Y]`` can be taken by
label.  Over GF(2) the rank computation packs rows into Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import DimensionMismatch, NotSquare, ZeroT
from .field import Field, SesquiMorphism

Row = tuple[int, ...]


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of GF(2) row vectors packed as ints (xor basis by leading bit)."""
    basis: dict[int, int] = {}
    r = 0
    for v in rows:
        while v:
            h = v.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = v
                r += 1
                break
            v ^= b
    return r


def pack_gf2(row: Sequence[int]) -> int:
    v = 0
    for j, a in enumerate(row):
        if a:
            v |= 1 << j
    return v


def rref(f: Field, rows: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    work = [list(r) for r in rows]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    add, mul, neg = f.add_table, f.mul_table, f.neg_table
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = f.inv(work[r][c])
        if inv != 1:
            work[r] = [mul[inv][a] for a in work[r]]
        prow = work[r]
        for i in range(len(work)):
            if i != r and work[i][c]:
                factor = neg[work[i][c]]
                mrow = mul[factor]
                work[i] = [add[a][mrow[b]] for a, b in zip(work[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank_rows(f: Field, rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    if f.order == 2:
        return gf2_rank(pack_gf2(r) for r in rows)
    ncols = len(rows[0])
    if ncols == 0:
        return 0
    return len(rref(f, rows, ncols)[1])


def solve_row_raw(f: Field, target: Sequence[int], basis: Sequence[Sequence[int]]) -> list[int] | None:
    """Coefficients ``u`` with ``u . basis = target``, or ``None`` if none exist.

    Solves ``basis^T u^T = target^T`` by elimination on the augmented system.
    Free variables are set to zero, so the answer is unique whenever the rows
    of ``basis`` are independent.
    """
    k = len(basis)
    ncols = len(target)
    if k == 0:
        return [] if not any(target) else None
    # one equation per column of basis, unknowns u_0..u_{k-1}, rhs target[c]
    aug = [[basis[i][c] for i in range(k)] + [target[c]] for c in range(ncols)]
    red, piv = rref(f, aug, k + 1)
    if k in piv:
        return None
    u = [0] * k
    for row, pc in zip(red, piv):
        u[pc] = row[k]
    return u


def mat_mul(
    f: Field, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], ncols: int | None = None
) -> list[list[int]]:
    """Product with the zero-padding extension when inner dimensions differ.

    ``ncols`` gives the width of ``b`` when ``b`` has no rows.
    """
    if ncols is None:
        ncols = len(b[0]) if b else 0
    if not a:
        return []
    inner_a = len(a[0])
    inner = max(inner_a, len(b))
    add, mul = f.add_table, f.mul_table
    out = []
    for row in a:
        acc = [0] * ncols
        for k in range(min(inner, inner_a, len(b))):
            c = row[k]
            if c:
                mrow = mul[c]
                acc = [add[x][mrow[y]] for x, y in zip(acc, b[k])]
        out.append(acc)
    return out


def transpose(rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    if not rows:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*rows)]


@dataclass(frozen=True)
class FMatrix:
    """A labelled matrix over a finite field."""

    field: Field
    row_labels: tuple[Hashable, ...]
    col_labels: tuple[Hashable, ...]
    entries: tuple[Row, ...]

    def __post_init__(self) -> None:
        if len(set(self.row_labels)) != len(self.row_labels):
            raise DimensionMismatch("duplicate row labels")
        if len(set(self.col_labels)) != len(self.col_labels):
            raise DimensionMismatch("duplicate column labels")
        if len(self.entries) != len(self.row_labels):
            raise DimensionMismatch("row count does not match labels")
        q = self.field.order
        for r in self.entries:
            if len(r) != len(self.col_labels):
                raise DimensionMismatch("column count does not match labels")
            if any(not 0 <= a < q for a in r):
                raise ValueError("entry outside the field")

    @classmethod
    def from_rows(
        cls,
        field: Field,
        rows: Sequence[Sequence[int]],
        row_labels: Sequence[Hashable] | None = None,
        col_labels: Sequence[Hashable] | None = None,
    ) -> "FMatrix":
        rows = [tuple(int(a) for a in r) for r in rows]
        ncols = len(rows[0]) if rows else (len(col_labels) if col_labels is not None else 0)
        rl = tuple(range(len(rows))) if row_labels is None else tuple(row_labels)
        cl = tuple(range(ncols)) if col_labels is None else tuple(col_labels)
        return cls(field, rl, cl, tuple(rows))

    @classmethod
    def zeros(cls, field: Field, row_labels: Sequence[Hashable], col_labels: Sequence[Hashable]) -> "FMatrix":
        return cls(field, tuple(row_labels), tuple(col_labels), tuple((0,) * len(col_labels) for _ in row_labels))

    @classmethod
    def identity(cls, field: Field, labels: Sequence[Hashable]) -> "FMatrix":
        n = len(labels)
        return cls(field, tuple(labels), tuple(labels), tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_labels), len(self.col_labels)

    @property
    def is_square_labelled(self) -> bool:
        return self.row_labels == self.col_labels

    def _rindex(self) -> dict:
        return {lab: i for i, lab in enumerate(self.row_labels)}

    def _cindex(self) -> dict:
        return {lab: i for i, lab in enumerate(self.col_labels)}

    def __getitem__(self, key: tuple[Hashable, Hashable]) -> int:
        r, c = key
        return self.entries[self.row_labels.index(r)][self.col_labels.index(c)]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def submatrix(self, rows: Iterable[Hashable], cols: Iterable[Hashable]) -> "FMatrix":
        ri, ci = self._rindex(), self._cindex()
        rows, cols = list(rows), list(cols)
        ent = tuple(tuple(self.entries[ri[r]][ci[c]] for c in cols) for r in rows)
        return FMatrix(self.field, tuple(rows), tuple(cols), ent)

    def transpose(self) -> "FMatrix":
        ent = tuple(zip(*self.entries)) if self.entries else tuple(() for _ in self.col_labels)
        return FMatrix(self.field, self.col_labels, self.row_labels, tuple(tuple(r) for r in ent))

    def __matmul__(self, other: "FMatrix") -> "FMatrix":
        prod = mat_mul(self.field, self.entries, other.entries, len(other.col_labels))
        return FMatrix.from_rows(self.field, prod, self.row_labels, other.col_labels)

    def rank(self) -> int:
        return rank(self)

    def to_text(self) -> str:
        lines = [f"rows {len(self.row_labels)}", f"cols {len(self.col_labels)}"]
        lines += [" ".join(map(str, r)) for r in self.entries]
        return "\n".join(lines)


def rank(m: FMatrix) -> int:
    """Rank over the matrix's field; empty matrices have rank 0."""
    if not m.row_labels or not m.col_labels:
        return 0
    return rank_rows(m.field, m.entries)


def solve_row(target: Sequence[int], basis: FMatrix) -> list[int] | None:
    """Coefficient row ``u`` with ``u . basis = target``, or ``None``."""
    if len(target) != len(basis.col_labels):
        raise DimensionMismatch("target length differs from basis width")
    return solve_row_raw(basis.field, target, basis.entries)


def is_sigma_symmetric(m: FMatrix, sigma: SesquiMorphism) -> bool:
    if not m.is_square_labelled:
        raise NotSquare("sigma-symmetry needs a square matrix with equal row and column labels")
    e = m.entries
    n = len(e)
    return all(e[i][j] == sigma(e[j][i]) for i in range(n) for j in range(n))


def star_rows(
    f: Field,
    sigma: SesquiMorphism,
    rows: Sequence[Sequence[int]],
    cx_rows: Sequence[int],
    cy_rows: Sequence[int],
    cx_cols: Sequence[int],
    cy_cols: Sequence[int],
    t: int,
) -> list[list[int]]:
    """Raw form of :func:`star` with the two functions pre-evaluated on rows and columns."""
    if t == 0:
        raise ZeroT("t must be nonzero")
    add, mul, neg = f.add_table, f.mul_table, f.neg_table
    inv_st = f.inv(sigma(t))
    inv_t = f.inv(t)
    out = []
    for i, row in enumerate(rows):
        a = mul[sigma(cx_rows[i])][inv_st]
        b = mul[sigma(cy_rows[i])][inv_t]
        ma, mb = mul[a], mul[b]
        out.append([add[add[m][neg[ma[cy]]]][neg[mb[cx]]] for m, cx, cy in zip(row, cx_cols, cy_cols)])
    return out


def star(
    m: FMatrix,
    sigma: SesquiMorphism,
    cx: Mapping[Hashable, int],
    cy: Mapping[Hashable, int],
    t: int,
) -> FMatrix:
    """``M * (sigma, Cx, Cy, t)``.

    Entry ``(i, j)`` becomes
    ``m[i,j] - sigma(Cx(i)) Cy(j) / sigma(t) - sigma(Cy(i)) Cx(j) / t``.
    ``cx`` and ``cy`` must be defined on every row label and column label.
    """
    rows = star_rows(
        m.field,
        sigma,
        m.entries,
        [cx[r] for r in m.row_labels],
        [cy[r] for r in m.row_labels],
        [cx[c] for c in m.col_labels],
        [cy[c] for c in m.col_labels],
        t,
    )
    return FMatrix.from_rows(m.field, rows, m.row_labels, m.col_labels)
