"""Exact arithmetic in small finite fields F_p and F_{p^k}.

Extension elements use the polynomial-quotient representation: a tuple of
k coefficients in {0..p-1} relative to a fixed monic irreducible modulus.
Everything is exact integer arithmetic; field sizes are capped at 5**6
elements so that exhaustive procedures (root finding, irreducibility by
trial division) stay instant.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence, Union

from .errors import FieldTooLarge, NonPrimeCharacteristic, ReducibleModulus

# Largest field size any exhaustive scan will touch.
SEARCH_BOUND = 5 ** 6

Coercible = Union["FieldElement", int, Sequence[int]]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p (ascending coefficient tuples)
# ---------------------------------------------------------------------------

def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    quot = [0] * max(0, len(a) - len(b) + 1)
    rem = list(a)
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        factor = (rem[-1] * inv_lead) % p
        quot[shift] = factor
        for i, bi in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * bi) % p
        _poly_trim(rem)
    return _poly_trim(quot), rem


def _poly_xgcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """Return (g, s, t) with s*a + t*b = g over F_p."""
    r0, r1 = _poly_trim(list(a)), _poly_trim(list(b))
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_trim([(x - y) % p for x, y in itertools.zip_longest(s0, _poly_mul(q, s1, p), fillvalue=0)])
        t0, t1 = t1, _poly_trim([(x - y) % p for x, y in itertools.zip_longest(t0, _poly_mul(q, t1, p), fillvalue=0)])
    return r0, s0, t0


def _irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            _, rem = _poly_divmod(modulus, divisor, p)
            if not rem:
                return False
    return k >= 1


class FieldSpec:
    """A concrete finite field F_{p^k} with a fixed monic irreducible modulus.

    Instances are immutable; use :func:`field_create`.
    """

    __slots__ = ("p", "k", "modulus", "_hash")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None):
        self.p = p
        self.k = k
        self.modulus = modulus
        self._hash = hash((p, k, modulus))

    @property
    def size(self) -> int:
        return self.p ** self.k

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.k == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.k}"

    # -- element construction ------------------------------------------------

    def element(self, value: Coercible) -> FieldElement:
        """Coerce an int (prime-subfield image), coordinate sequence or element."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            coords = [value % self.p] + [0] * (self.k - 1)
            return FieldElement(self, tuple(coords))
        coords = [int(c) % self.p for c in value]
        if len(coords) > self.k:
            raise ValueError(f"expected at most {self.k} coordinates, got {len(coords)}")
        coords += [0] * (self.k - len(coords))
        return FieldElement(self, tuple(coords))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.k)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def generator(self) -> FieldElement:
        """The class of t (for k > 1), or 1 for the prime field."""
        if self.k == 1:
            return self.one
        return FieldElement(self, (0, 1) + (0,) * (self.k - 2))

    def elements(self) -> Iterator[FieldElement]:
        """All field elements in canonical order (base-p digits, ascending)."""
        for m in range(self.size):
            yield self.element_by_index(m)

    def element_by_index(self, m: int) -> FieldElement:
        coords = []
        for _ in range(self.k):
            coords.append(m % self.p)
            m //= self.p
        return FieldElement(self, tuple(coords))

    def index_of(self, a: FieldElement) -> int:
        m = 0
        for c in reversed(a.coords):
            m = m * self.p + c
        return m

    # -- coordinate kernels ----------------------------------------------------

    def _add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        if self.k == 1:
            return ((a[0] * b[0]) % p,)
        prod = _poly_mul(a, b, p)
        if len(prod) >= self.k:
            _, prod = _poly_divmod(prod, self.modulus, p)
        prod = list(prod) + [0] * (self.k - len(prod))
        return tuple(prod)

    def _inv(self, a: tuple[int, ...]) -> tuple[int, ...]:
        if not any(a):
            raise ZeroDivisionError("inverse of zero field element")
        p = self.p
        if self.k == 1:
            return (pow(a[0], p - 2, p),)
        g, s, _ = _poly_xgcd(a, self.modulus, p)
        # g is a nonzero constant since the modulus is irreducible
        scale = pow(g[0], p - 2, p)
        s = [(c * scale) % p for c in s]
        s += [0] * (self.k - len(s))
        return tuple(s[: self.k])

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        out = {"p": self.p, "k": self.k}
        if self.modulus is not None:
            out["modulus"] = list(self.modulus)
        return out

    @classmethod
    def from_json(cls, data: dict) -> FieldSpec:
        return field_create(data["p"], data.get("k", 1), data.get("modulus"))


class FieldElement:
    """An element of a :class:`FieldSpec`, stored as polynomial coordinates."""

    __slots__ = ("spec", "coords")

    def __init__(self, spec: FieldSpec, coords: tuple[int, ...]):
        self.spec = spec
        self.coords = coords

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.spec == other.spec
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.coords))

    def _coerce(self, other: Coercible) -> FieldElement:
        if isinstance(other, FieldElement):
            return other
        return self.spec.element(other)

    def __add__(self, other: Coercible) -> FieldElement:
        other = self._coerce(other)
        return FieldElement(self.spec, self.spec._add(self.coords, other.coords))

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> FieldElement:
        other = self._coerce(other)
        return FieldElement(self.spec, self.spec._sub(self.coords, other.coords))

    def __rsub__(self, other: Coercible) -> FieldElement:
        return self._coerce(other) - self

    def __neg__(self) -> FieldElement:
        return FieldElement(self.spec, self.spec._neg(self.coords))

    def __mul__(self, other: Coercible) -> FieldElement:
        other = self._coerce(other)
        return FieldElement(self.spec, self.spec._mul(self.coords, other.coords))

    __rmul__ = __mul__

    def __truediv__(self, other: Coercible) -> FieldElement:
        other = self._coerce(other)
        return FieldElement(self.spec, self.spec._mul(self.coords, self.spec._inv(other.coords)))

    def __rtruediv__(self, other: Coercible) -> FieldElement:
        return self._coerce(other) / self

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec._inv(self.coords))

    def __pow__(self, exponent: int) -> FieldElement:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.spec.one
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self) -> str:
        if self.spec.k == 1:
            return str(self.coords[0])
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> list[int]:
        return list(self.coords)


def field_create(p: int, k: int = 1, modulus: Iterable[int] | None = None) -> FieldSpec:
    """Create F_{p^k}; for k > 1 a monic irreducible modulus is checked or found.

    When no modulus is supplied the lexicographically smallest monic
    irreducible polynomial (by its tuple of non-leading coefficients) is
    chosen, so a given (p, k) always yields the same field presentation.
    """
    if not _is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic must be prime, got {p}")
    if k < 1:
        raise ValueError(f"extension degree must be >= 1, got {k}")
    if p ** k > SEARCH_BOUND:
        raise FieldTooLarge(f"field size {p ** k} exceeds the design bound {SEARCH_BOUND}")
    if k == 1:
        if modulus is not None:
            raise ValueError("prime fields carry no modulus")
        return FieldSpec(p, 1, None)
    if modulus is not None:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != k + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {k}")
        if not _irreducible(mod, p):
            raise ReducibleModulus(f"{list(mod)} is reducible over F_{p}")
        return FieldSpec(p, k, mod)
    for tail in itertools.product(range(p), repeat=k):
        mod = tuple(tail) + (1,)
        if _irreducible(mod, p):
            return FieldSpec(p, k, mod)
    raise ReducibleModulus(f"no irreducible monic polynomial of degree {k} over F_{p} found")


def frobenius(a: FieldElement) -> FieldElement:
    """The p-power map a -> a^p; the identity on the prime subfield."""
    return a ** a.spec.p


def pth_root(a: FieldElement) -> FieldElement:
    """Inverse of :func:`frobenius`: the unique b with b^p = a."""
    spec = a.spec
    return a ** (spec.p ** (spec.k - 1))


def in_prime_field(a: FieldElement) -> bool:
    return frobenius(a) == a


def find_roots(field: FieldSpec, coeffs: Sequence[Coercible]) -> list[FieldElement]:
    """All roots of the polynomial with the given ascending coefficients.

    Exhaustive evaluation over the whole field; complete by construction.
    Roots come back in canonical field-element order.
    """
    if field.size > SEARCH_BOUND:
        raise FieldTooLarge(f"field size {field.size} exceeds the design bound {SEARCH_BOUND}")
    cs = [field.element(c) for c in coeffs]
    if not any(cs):
        raise ValueError("root finding requires a nonzero polynomial")
    roots = []
    for a in field.elements():
        acc = field.zero
        for c in reversed(cs):
            acc = acc * a + c
        if not acc:
            roots.append(a)
    return roots


def artin_schreier_roots(field: FieldSpec, sigma: FieldElement, eps: FieldElement,
                         n1: int = 1) -> list[FieldElement]:
    """Roots of Z^(p^n1) - sigma^(p^n1 - 1) Z - eps in the field."""
    h = field.p ** n1
    pi = sigma ** (h - 1)
    coeffs: list[FieldElement] = [-eps, -pi] + [field.zero] * (h - 2) + [field.one]
    return find_roots(field, coeffs)


def _prime_power_base(q: int) -> int:
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            m = q
            while m % p == 0:
                m //= p
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p
    raise ValueError(f"{q} is not a prime power")


def combine_residues(r: int, s: int, q: int) -> int:
    """The unique k in [0, (q-1)p) with k = r mod (q-1) and k = s mod p.

    Here p is the prime of which q is a power; gcd(q-1, p) = 1 makes the
    combination unique.
    """
    p = _prime_power_base(q)
    m = q - 1
    k = r % m
    t = ((s - k) * pow(m % p, -1, p)) % p
    return k + m * t
