"""Small finite fields GF(p^k) and sesqui-morphisms on them.

Elements are the integers ``0 .. q-1``.  An element is the base-``p`` number
whose digits (least significant first) are the coefficients of a polynomial
in ``x`` reduced modulo the field's irreducible polynomial, so for GF(4) with
``x^2 + x + 1`` the element ``2`` is ``x`` and ``3`` is ``x + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product
from typing import Sequence

from .errors import NotInvolution, NotPrime, NotSesqui, ReduciblePoly, UndefinedQuotient

MAX_ORDER = 256

# low-to-high coefficients
BUILTIN_POLYS: dict[int, tuple[int, int, tuple[int, ...]]] = {
    2: (2, 1, (0, 1)),
    3: (3, 1, (0, 1)),
    4: (2, 2, (1, 1, 1)),
    5: (5, 1, (0, 1)),
    7: (7, 1, (0, 1)),
    8: (2, 3, (1, 1, 0, 1)),
    9: (3, 2, (1, 0, 1)),
    16: (2, 4, (1, 1, 0, 0, 1)),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` divided by ``m`` over GF(p); lists are low-to-high."""
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < dm:
            break
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def is_irreducible(p: int, poly: Sequence[int]) -> bool:
    """Exhaustive test: no monic factor of degree 1..deg/2 divides ``poly``."""
    poly = list(poly)
    while poly and poly[-1] % p == 0:
        poly.pop()
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    poly = [c % p for c in poly]
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(poly, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class Field:
    """GF(p^k) with precomputed operation tables."""

    char: int
    degree: int
    poly: tuple[int, ...]
    add_table: tuple[tuple[int, ...], ...] = dc_field(repr=False, compare=False)
    mul_table: tuple[tuple[int, ...], ...] = dc_field(repr=False, compare=False)
    neg_table: tuple[int, ...] = dc_field(repr=False, compare=False)
    inv_table: tuple[int, ...] = dc_field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.char**self.degree

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def is_binary(self) -> bool:
        return self.order == 2

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[a]

    def div(self, a: int, b: int) -> int:
        return self.mul_table[a][self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        r = 1
        for _ in range(e):
            r = self.mul_table[r][a]
        return r

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        add, mul = self.add_table, self.mul_table
        acc = 0
        for a, b in zip(u, v):
            if a and b:
                acc = add[acc][mul[a][b]]
        return acc

    def scale(self, c: int, v: Sequence[int]) -> tuple[int, ...]:
        row = self.mul_table[c]
        return tuple(row[a] for a in v)

    def vadd(self, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
        add = self.add_table
        return tuple(add[a][b] for a, b in zip(u, v))

    def vsub(self, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
        add, neg = self.add_table, self.neg_table
        return tuple(add[a][neg[b]] for a, b in zip(u, v))

    def header(self) -> str:
        return "field {} {} {}".format(self.char, self.degree, " ".join(map(str, self.poly)))

    def __str__(self) -> str:
        return f"GF({self.order})"


def _digits(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(a % p)
        a //= p
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    v = 0
    for d in reversed(ds):
        v = v * p + d
    return v


@lru_cache(maxsize=None)
def _build(char: int, degree: int, poly: tuple[int, ...]) -> Field:
    q = char**degree
    digits = [_digits(a, char, degree) for a in range(q)]
    add = tuple(
        tuple(_undigits([(x + y) % char for x, y in zip(digits[a], digits[b])], char) for b in range(q))
        for a in range(q)
    )
    neg = tuple(_undigits([(-x) % char for x in digits[a]], char) for a in range(q))

    def mul_raw(a: int, b: int) -> int:
        da, db = digits[a], digits[b]
        prod = [0] * (2 * degree - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % char
        rem = _poly_mod(prod, poly, char) if degree > 1 else [prod[0] % char]
        rem = rem + [0] * (degree - len(rem))
        return _undigits(rem[:degree], char)

    mul = tuple(tuple(mul_raw(a, b) for b in range(q)) for a in range(q))
    inv = [0] * q
    for a in range(1, q):
        for b in range(1, q):
            if mul[a][b] == 1:
                inv[a] = b
                break
    return Field(char, degree, poly, add, mul, neg, tuple(inv))


def make_field(char: int, degree: int = 1, poly: Sequence[int] | None = None) -> Field:
    """Build GF(char^degree) from an irreducible polynomial (low-to-high coefficients).

    For ``degree == 1`` the polynomial is irrelevant and may be omitted or given
    in degenerate form such as ``[1]``.  For larger degrees a missing polynomial
    is looked up among the built-in ones.
    """
    if not _is_prime(char):
        raise NotPrime(f"{char} is not prime")
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if char**degree > MAX_ORDER:
        raise ValueError(f"fields above order {MAX_ORDER} are not supported")
    if degree == 1:
        return _build(char, 1, (0, 1))
    if poly is None:
        entry = BUILTIN_POLYS.get(char**degree)
        if entry is None or entry[0] != char:
            raise ValueError(f"no built-in polynomial for GF({char}^{degree}); pass one")
        poly = entry[2]
    coeffs = [int(c) % char for c in poly]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) - 1 != degree:
        raise ReduciblePoly(f"polynomial {list(poly)} does not have degree {degree}")
    if not is_irreducible(char, coeffs):
        raise ReduciblePoly(f"polynomial {list(poly)} is reducible over GF({char})")
    # make monic so the encoding does not depend on scaling
    lead_inv = pow(coeffs[-1], char - 2, char)
    coeffs = [c * lead_inv % char for c in coeffs]
    return _build(char, degree, tuple(coeffs))


def gf(q: int) -> Field:
    """Field of order ``q`` using the built-in polynomial table."""
    entry = BUILTIN_POLYS.get(q)
    if entry is None:
        raise ValueError(f"no built-in field of order {q}")
    char, degree, poly = entry
    return make_field(char, degree, poly)


GF2 = gf(2)
GF3 = gf(3)


def check_field_axioms(f: Field) -> bool:
    """Exhaustive axiom check; cubic in q, intended for q <= 16."""
    q = f.order
    add, mul = f.add_table, f.mul_table
    for a in range(q):
        if add[a][0] != a or mul[a][1] != a or add[a][f.neg_table[a]] != 0:
            return False
        if a and mul[a][f.inv_table[a]] != 1:
            return False
        for b in range(q):
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                return False
            for c in range(q):
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    return False
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    return False
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    return False
    return True


@dataclass(frozen=True)
class SesquiMorphism:
    """An involution sigma whose quotient x -> sigma(x)/sigma(1) is an automorphism."""

    field: Field
    table: tuple[int, ...]
    kind: str = dc_field(default="table", compare=False)

    def __call__(self, a: int) -> int:
        return self.table[a]

    @property
    def one(self) -> int:
        return self.table[1]

    def line(self) -> str:
        if self.kind == "table":
            return "sigma table " + " ".join(map(str, self.table))
        return "sigma " + self.kind


def _validate_sigma(f: Field, table: tuple[int, ...]) -> None:
    q = f.order
    if sorted(table) != list(range(q)):
        raise NotInvolution("sigma table is not a permutation of the field")
    if any(table[table[a]] != a for a in range(q)):
        raise NotInvolution("sigma(sigma(a)) != a for some a")
    s1 = table[1]
    if s1 == 0:
        raise UndefinedQuotient("sigma(1) = 0; the quotient map is undefined")
    inv1 = f.inv(s1)
    phi = [f.mul(table[a], inv1) for a in range(q)]
    for a in range(q):
        for b in range(q):
            if phi[f.add(a, b)] != f.add(phi[a], phi[b]):
                raise NotSesqui("quotient map is not additive")
            if phi[f.mul(a, b)] != f.mul(phi[a], phi[b]):
                raise NotSesqui("quotient map is not multiplicative")


def make_sesqui(f: Field, kind: str | Sequence[int] = "identity", j: int = 0) -> SesquiMorphism:
    """Validated sesqui-morphism.

    ``kind`` is ``"identity"``, ``"negation"``, ``"frobenius"`` (with power ``j``,
    meaning ``a -> a^(p^j)``) or an explicit table of ``q`` images.
    """
    q = f.order
    if isinstance(kind, str):
        if kind == "identity":
            table = tuple(range(q))
            kind = "identity"
        elif kind == "negation":
            table = f.neg_table
            kind = "negation"
        elif kind == "frobenius":
            e = f.char ** (j % f.degree)
            table = tuple(f.pow(a, e) if a else 0 for a in range(q))
            kind = f"frobenius {j}"
        else:
            raise ValueError(f"unknown sigma kind {kind!r}")
    else:
        table = tuple(int(a) for a in kind)
        kind = "table"
        if len(table) != q:
            raise NotInvolution(f"sigma table needs {q} entries, got {len(table)}")
    _validate_sigma(f, table)
    return SesquiMorphism(f, table, kind)


def default_sigma(f: Field) -> SesquiMorphism:
    return make_sesqui(f, "identity")
