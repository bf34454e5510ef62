"""Arithmetic over GF(p^m), p^m <= 2^16, with exact integer matrices.

Field elements are canonical integers: the polynomial coefficients over
GF(p) packed little-endian in base p (so for p = 2 an element is just the
bit pattern of its polynomial).  Extension moduli are encoded the same way
and must be monic and irreducible; irreducibility is verified by trial
division at construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError

MAX_Q = 1 << 16

# convenience moduli for the common small extensions
BUILTIN_MODULI = {
    (2, 2): 0b111,      # x^2 + x + 1
    (2, 3): 0b1011,     # x^3 + x + 1
    (2, 4): 0b10011,    # x^4 + x + 1
    (3, 2): 10,         # x^2 + 1
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _digits(x: int, p: int) -> list[int]:
    out = []
    while x:
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p: int) -> int:
    x = 0
    for d in reversed(list(ds)):
        x = x * p + d
    return x


def _poly_deg(x: int, p: int) -> int:
    return len(_digits(x, p)) - 1


def _poly_mul(a: int, b: int, p: int) -> int:
    da, db = _digits(a, p), _digits(b, p)
    if not da or not db:
        return 0
    out = [0] * (len(da) + len(db) - 1)
    for i, ca in enumerate(da):
        if ca == 0:
            continue
        for j, cb in enumerate(db):
            out[i + j] = (out[i + j] + ca * cb) % p
    return _undigits(out, p)


def _poly_mod(a: int, mod: int, p: int) -> int:
    da = _digits(a, p)
    dm = _digits(mod, p)
    dgm = len(dm) - 1
    # mod is monic, so no leading-coefficient inversion is needed
    while len(da) - 1 >= dgm and any(da):
        shift = len(da) - 1 - dgm
        lead = da[-1]
        for i, c in enumerate(dm):
            da[shift + i] = (da[shift + i] - lead * c) % p
        while da and da[-1] == 0:
            da.pop()
    return _undigits(da, p)


def _is_irreducible(mod: int, p: int, m: int) -> bool:
    # trial division by every monic polynomial of degree 1..m//2
    for d in range(1, m // 2 + 1):
        lead = p**d
        for tail in range(p**d):
            divisor = lead + tail
            if _poly_divides(divisor, mod, p):
                return False
    return True


def _poly_divides(d: int, a: int, p: int) -> bool:
    da = _digits(a, p)
    dd = _digits(d, p)
    deg_d = len(dd) - 1
    inv_lead = pow(dd[-1], p - 2, p)
    while len(da) - 1 >= deg_d and any(da):
        shift = len(da) - 1 - deg_d
        factor = (da[-1] * inv_lead) % p
        for i, c in enumerate(dd):
            da[shift + i] = (da[shift + i] - factor * c) % p
        while da and da[-1] == 0:
            da.pop()
    return not any(da)


@dataclass(frozen=True)
class FieldSpec:
    p: int
    m: int = 1
    modulus: int | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ParameterError(f"characteristic must be prime, got {self.p}")
        if self.m < 1:
            raise ParameterError(f"extension degree must be positive, got {self.m}")
        if self.p**self.m > MAX_Q:
            raise ParameterError(f"field size {self.p}^{self.m} exceeds 2^16")
        if self.m == 1:
            if self.modulus is not None:
                raise ParameterError("prime fields take no modulus")
            return
        mod = self.modulus
        if mod is None:
            mod = BUILTIN_MODULI.get((self.p, self.m))
            if mod is None:
                raise ParameterError(
                    f"no built-in modulus for GF({self.p}^{self.m}); supply one explicitly"
                )
            object.__setattr__(self, "modulus", mod)
        if _poly_deg(mod, self.p) != self.m:
            raise ParameterError(f"modulus {mod} does not have degree {self.m} over GF({self.p})")
        if _digits(mod, self.p)[-1] != 1:
            raise ParameterError(f"modulus {mod} must be monic")
        if not _is_irreducible(mod, self.p, self.m):
            raise ParameterError(f"modulus {mod} is reducible over GF({self.p})")

    @property
    def q(self) -> int:
        return self.p**self.m

    def to_text(self) -> str:
        if self.m == 1:
            return f"field {self.p}"
        return f"field {self.p}^{self.m} modulus={self.modulus}"


def parse_field(text: str) -> FieldSpec:
    """Parse "13", "2^4" (built-in modulus) or "2^4:19"."""
    text = text.strip()
    modulus = None
    if ":" in text:
        text, mtxt = text.split(":", 1)
        modulus = int(mtxt)
    if "^" in text:
        ptxt, mtxt = text.split("^", 1)
        return FieldSpec(int(ptxt), int(mtxt), modulus)
    if modulus is not None:
        raise ValueError("prime fields take no modulus")
    return FieldSpec(int(text))


class Field:
    """Arithmetic on canonical integer elements of GF(p^m)."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.q = spec.q

    def _check(self, x: int) -> None:
        if not 0 <= x < self.q:
            raise ValueError(f"element {x} outside GF({self.q})")

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        s = self.spec
        if s.m == 1:
            return (a + b) % s.p
        da, db = _digits(a, s.p), _digits(b, s.p)
        length = max(len(da), len(db))
        da += [0] * (length - len(da))
        db += [0] * (length - len(db))
        return _undigits(((x + y) % s.p for x, y in zip(da, db)), s.p)

    def neg(self, a: int) -> int:
        self._check(a)
        s = self.spec
        if s.m == 1:
            return (-a) % s.p
        return _undigits(((-c) % s.p for c in _digits(a, s.p)), s.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        s = self.spec
        if s.m == 1:
            return (a * b) % s.p
        return _poly_mod(_poly_mul(a, b, s.p), s.modulus, s.p)

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        s = self.spec
        if s.m == 1:
            return pow(a, s.p - 2, s.p)
        # a^(q-2) by square and multiply
        result, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))


def mat_rank(field: Field, rows) -> int:
    """Row-echelon rank by Gaussian elimination over the field."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rref(field: Field, rows):
    """Reduced row-echelon form; returns (nonzero rows, pivot column list)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [field.sub(v, field.mul(f, w)) for v, w in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def nullspace(field: Field, rows):
    """Basis of the right kernel as a list of length-n vectors."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(field, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for prow, pcol in enumerate(pivots):
            v[pcol] = field.neg(red[prow][f])
        basis.append(v)
    return basis
