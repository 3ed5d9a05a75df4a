"""Exact arithmetic for finite commutative rings with identity.

Three ring families are supported, each with an enumerable carrier and a
fixed bijection between element indices and canonical coordinates:

* ``ModularRing``      -- Z_n, elements are residues.
* ``ProductRing``      -- finite direct products of rings.
* ``PolyQuotientRing`` -- Z_m[x_1,..,x_k] cut down by per-variable monomial
  relators (x_i^e = 0) plus at most one monic univariate modulus polynomial.

Descriptors round-trip through a small textual grammar::

    ring  := zn | zn ("x" zn)+ | zn "[" vars "]" "/(" relators ")"
    zn    := "Z" integer

e.g. ``Z12``, ``Z4xZ9``, ``Z2[x,y]/(x^3,y^2)``, ``Z3[t]/(t^2+1)``.
"""

from __future__ import annotations

import itertools
import re
import threading
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

CARRIER_CAP = 65536


class RingError(Exception):
    """Base class for ring construction and parsing failures."""


class ZeroModulus(RingError):
    """Modulus below 2 cannot carry a ring with identity distinct from 0."""


class NonMonicModulus(RingError):
    """The univariate modulus polynomial must have leading coefficient 1."""


class CarrierTooLarge(RingError):
    """Carrier would exceed the supported cap of 65,536 elements."""


class ParseError(RingError):
    """Input does not match the descriptor or element-label grammar."""


# ---------------------------------------------------------------------------
# Descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModularRing:
    modulus: int


@dataclass(frozen=True)
class ProductRing:
    factors: tuple["RingDescriptor", ...]


@dataclass(frozen=True)
class PolyQuotientRing:
    coefficient_modulus: int
    variables: tuple[str, ...]
    # degree bound per variable: x_i^exponents[i] rewrites to 0, except for
    # modulus_var where it rewrites to the tail of the modulus polynomial
    exponents: tuple[int, ...]
    modulus_var: Optional[int] = None
    # ascending coefficients, length exponents[modulus_var] + 1, leading 1
    modulus_coeffs: Optional[tuple[int, ...]] = None


RingDescriptor = Union[ModularRing, ProductRing, PolyQuotientRing]


def _validate_descriptor(desc: RingDescriptor) -> int:
    """Check invariants and return the carrier size."""
    if isinstance(desc, ModularRing):
        if desc.modulus < 2:
            raise ZeroModulus(f"modulus must be >= 2, got {desc.modulus}")
        size = desc.modulus
    elif isinstance(desc, ProductRing):
        if len(desc.factors) < 2:
            raise ParseError("a product ring needs at least two factors")
        size = 1
        for f in desc.factors:
            size *= _validate_descriptor(f)
            if size > CARRIER_CAP:
                raise CarrierTooLarge(f"product carrier exceeds {CARRIER_CAP}")
    elif isinstance(desc, PolyQuotientRing):
        if desc.coefficient_modulus < 2:
            raise ZeroModulus(
                f"coefficient modulus must be >= 2, got {desc.coefficient_modulus}"
            )
        if not desc.variables or len(desc.variables) != len(desc.exponents):
            raise ParseError("each variable needs exactly one relator")
        if len(set(desc.variables)) != len(desc.variables):
            raise ParseError("duplicate variable names")
        if any(e < 1 for e in desc.exponents):
            raise ParseError("relator exponents must be >= 1")
        if (desc.modulus_var is None) != (desc.modulus_coeffs is None):
            raise ParseError("modulus variable and coefficients must come together")
        if desc.modulus_coeffs is not None:
            d = desc.exponents[desc.modulus_var]
            if len(desc.modulus_coeffs) != d + 1:
                raise ParseError("modulus coefficient count does not match degree")
            if desc.modulus_coeffs[-1] % desc.coefficient_modulus != 1:
                raise NonMonicModulus("univariate modulus must be monic")
        slots = 1
        for e in desc.exponents:
            slots *= e
        size = 1
        for _ in range(slots):
            size *= desc.coefficient_modulus
            if size > CARRIER_CAP:
                raise CarrierTooLarge(f"quotient carrier exceeds {CARRIER_CAP}")
    else:
        raise ParseError(f"unknown descriptor {desc!r}")
    if size > CARRIER_CAP:
        raise CarrierTooLarge(f"carrier size {size} exceeds {CARRIER_CAP}")
    return size


# ---------------------------------------------------------------------------
# Descriptor grammar
# ---------------------------------------------------------------------------

_ZN_RE = re.compile(r"^z(\d+)$")
_VAR_RE = re.compile(r"^[a-z][a-z0-9_]*$")
_POWER_RE = re.compile(r"^([a-z][a-z0-9_]*)\^(\d+)$")
_QUOTIENT_RE = re.compile(r"^(z\d+)\[([^\]]+)\]/\((.*)\)$")


def _split_top_level(s: str, sep: str = ",") -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_poly(text: str, variables: tuple[str, ...]) -> dict[tuple[int, ...], int]:
    """Parse a polynomial like ``t^2+1`` or ``2*x^2*y+x+3`` into a term map."""
    s = text.replace(" ", "").lower()
    if not s:
        raise ParseError("empty polynomial")
    # normalize leading sign and split into signed terms
    terms: dict[tuple[int, ...], int] = {}
    s = s.replace("-", "+-")
    for raw in s.split("+"):
        if not raw:
            continue
        sign = 1
        if raw.startswith("-"):
            sign, raw = -1, raw[1:]
        if not raw:
            raise ParseError(f"dangling sign in {text!r}")
        coeff = 1
        exps = [0] * len(variables)
        for factor in raw.split("*"):
            if not factor:
                raise ParseError(f"empty factor in {text!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _POWER_RE.match(factor)
            if m:
                name, e = m.group(1), int(m.group(2))
            elif _VAR_RE.match(factor):
                name, e = factor, 1
            else:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            if name not in variables:
                raise ParseError(f"unknown variable {name!r} in {text!r}")
            exps[variables.index(name)] += e
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + sign * coeff
    return terms


def parse_ring(text: str) -> RingDescriptor:
    """Parse a ring descriptor string (case-insensitive)."""
    s = text.replace(" ", "").lower()
    if not s:
        raise ParseError("empty ring descriptor")
    m = _QUOTIENT_RE.match(s)
    if m:
        zn, vars_part, rel_part = m.groups()
        base = _ZN_RE.match(zn)
        modulus = int(base.group(1))
        if modulus < 2:
            raise ZeroModulus(f"modulus must be >= 2 in {text!r}")
        variables = tuple(v for v in vars_part.split(","))
        for v in variables:
            if not _VAR_RE.match(v):
                raise ParseError(f"bad variable name {v!r} in {text!r}")
        if len(set(variables)) != len(variables):
            raise ParseError(f"duplicate variable in {text!r}")
        relators = _split_top_level(rel_part)
        if len(relators) != len(variables):
            raise ParseError(
                f"expected {len(variables)} relators, got {len(relators)} in {text!r}"
            )
        exponents: dict[str, int] = {}
        modulus_var: Optional[int] = None
        modulus_coeffs: Optional[tuple[int, ...]] = None
        for rel in relators:
            pm = _POWER_RE.match(rel)
            if pm and pm.group(1) in variables:
                name, e = pm.group(1), int(pm.group(2))
                if name in exponents:
                    raise ParseError(f"two relators for {name!r}")
                if e < 1:
                    raise ParseError(f"relator exponent must be >= 1 in {rel!r}")
                exponents[name] = e
                continue
            # a non-monomial relator is the univariate modulus polynomial
            terms = parse_poly(rel, variables)
            used = {
                i for exp in terms for i, e in enumerate(exp) if e
            }
            if len(used) != 1:
                raise ParseError(f"modulus relator must be univariate: {rel!r}")
            if modulus_var is not None:
                raise ParseError("at most one univariate modulus is supported")
            vi = used.pop()
            name = variables[vi]
            if name in exponents:
                raise ParseError(f"two relators for {name!r}")
            degree = max(exp[vi] for exp in terms)
            coeffs = [0] * (degree + 1)
            for exp, c in terms.items():
                coeffs[exp[vi]] = (coeffs[exp[vi]] + c) % modulus
            if coeffs[-1] != 1:
                raise NonMonicModulus(f"modulus {rel!r} is not monic over Z{modulus}")
            modulus_var = vi
            exponents[name] = degree
            modulus_coeffs = tuple(coeffs)
        missing = [v for v in variables if v not in exponents]
        if missing:
            raise ParseError(f"no relator for variable(s) {missing} in {text!r}")
        desc: RingDescriptor = PolyQuotientRing(
            coefficient_modulus=modulus,
            variables=variables,
            exponents=tuple(exponents[v] for v in variables),
            modulus_var=modulus_var,
            modulus_coeffs=modulus_coeffs,
        )
        _validate_descriptor(desc)
        return desc
    if "[" in s or "]" in s or "/" in s:
        raise ParseError(f"malformed quotient ring descriptor {text!r}")
    parts = s.split("x")
    descs = []
    for p in parts:
        zm = _ZN_RE.match(p)
        if not zm:
            raise ParseError(f"bad ring term {p!r} in {text!r}")
        n = int(zm.group(1))
        if n < 2:
            raise ZeroModulus(f"modulus must be >= 2 in {text!r}")
        descs.append(ModularRing(n))
    if len(descs) == 1:
        desc = descs[0]
    else:
        desc = ProductRing(tuple(descs))
    _validate_descriptor(desc)
    return desc


def _poly_term_str(variables: tuple[str, ...], exps: tuple[int, ...], coeff: int) -> str:
    factors = []
    if coeff != 1 or not any(exps):
        factors.append(str(coeff))
    for v, e in zip(variables, exps):
        if e == 1:
            factors.append(v)
        elif e > 1:
            factors.append(f"{v}^{e}")
    return "*".join(factors)


def poly_string(variables: tuple[str, ...], terms: dict[tuple[int, ...], int]) -> str:
    """Canonical polynomial string: terms by descending exponent tuple."""
    live = {e: c for e, c in terms.items() if c}
    if not live:
        return "0"
    keys = sorted(live, reverse=True)
    return "+".join(_poly_term_str(variables, k, live[k]) for k in keys)


def descriptor_string(desc: RingDescriptor) -> str:
    """Canonical textual form; parse_ring(descriptor_string(d)) == d."""
    if isinstance(desc, ModularRing):
        return f"Z{desc.modulus}"
    if isinstance(desc, ProductRing):
        return "x".join(descriptor_string(f) for f in desc.factors)
    rels = []
    for i, (v, e) in enumerate(zip(desc.variables, desc.exponents)):
        if desc.modulus_var == i:
            terms = {
                tuple(d if j == i else 0 for j in range(len(desc.variables))): c
                for d, c in enumerate(desc.modulus_coeffs)
            }
            rels.append(poly_string(desc.variables, terms))
        else:
            rels.append(f"{v}^{e}")
    return (
        f"Z{desc.coefficient_modulus}[{','.join(desc.variables)}]/({','.join(rels)})"
    )


# ---------------------------------------------------------------------------
# Ring runtime
# ---------------------------------------------------------------------------

class Ring:
    """A finite commutative ring; elements are indices in [0, size).

    Rings are immutable after construction, so every operation is safe to
    call from multiple threads.
    """

    descriptor: RingDescriptor
    size: int
    one: int
    zero: int = 0

    def __init__(self, descriptor: RingDescriptor, size: int):
        self.descriptor = descriptor
        self.size = size
        self.full_bits = (1 << size) - 1
        self._pow_cache: dict[int, list[int]] = {}
        self._rho_cache: dict[int, tuple[int, int]] = {}
        self._unit_bits: Optional[int] = None
        self._lock = threading.Lock()
        # ideal interning lives on the ring so ids are process-wide stable
        self.ideal_intern: dict[int, object] = {}

    # family-specific primitives -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def coordinates(self, a: int):
        raise NotImplementedError

    def label(self, a: int) -> str:
        raise NotImplementedError

    def parse_label(self, text: str) -> int:
        raise NotImplementedError

    def _compute_unit_bits(self) -> int:
        # carrier scan: x is a unit iff some r has x*r == 1
        bits = 0
        for x in range(self.size):
            if any(self.mul(x, r) == self.one for r in range(self.size)):
                bits |= 1 << x
        return bits

    # shared operations ----------------------------------------------------------

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def elements(self) -> range:
        return range(self.size)

    def pow(self, x: int, m: int) -> int:
        """x^m for m >= 1, via the memoized power sequence."""
        if m < 1:
            raise ValueError("exponent must be >= 1")
        seq = self._pow_cache.get(x)
        if seq is not None and len(seq) >= m:
            return seq[m - 1]
        # the sequence only ever grows, so readers above never lock
        with self._lock:
            seq = self._pow_cache.setdefault(x, [x])
            while len(seq) < m:
                seq.append(self.mul(seq[-1], x))
        return seq[m - 1]

    def power_rho(self, x: int) -> tuple[int, int]:
        """Preperiod and period of the value sequence x, x^2, x^3, ...

        The sequence is eventually periodic with preperiod + period <= size.
        """
        cached = self._rho_cache.get(x)
        if cached is not None:
            return cached
        seen: dict[int, int] = {}
        m = 1
        while True:
            v = self.pow(x, m)
            if v in seen:
                t = seen[v] - 1
                p = m - seen[v]
                self._rho_cache[x] = (t, p)
                return t, p
            seen[v] = m
            m += 1

    def unit_bits(self) -> int:
        if self._unit_bits is None:
            with self._lock:
                if self._unit_bits is None:
                    self._unit_bits = self._compute_unit_bits()
        return self._unit_bits

    def is_unit(self, x: int) -> bool:
        return bool(self.unit_bits() >> x & 1)

    def __repr__(self):
        return f"Ring({descriptor_string(self.descriptor)})"


class _ModularRingOps(Ring):
    def __init__(self, desc: ModularRing):
        super().__init__(desc, desc.modulus)
        self.n = desc.modulus
        self.one = 1 % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return (self.n - a) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def coordinates(self, a):
        return a

    def label(self, a):
        return str(a)

    def parse_label(self, text):
        s = text.strip()
        if not re.fullmatch(r"-?\d+", s):
            raise ParseError(f"bad element label {text!r} for Z{self.n}")
        return int(s) % self.n

    def _compute_unit_bits(self):
        n = self.n
        if n <= 512:
            return super()._compute_unit_bits()
        rs = np.arange(n, dtype=np.int64)
        bits = 0
        for x in range(n):
            if ((x * rs) % n == 1).any():
                bits |= 1 << x
        return bits


class _ProductRingOps(Ring):
    def __init__(self, desc: ProductRing, factors: list[Ring]):
        size = 1
        for f in factors:
            size *= f.size
        super().__init__(desc, size)
        self.factor_rings = factors
        # mixed radix, first factor most significant
        weights = []
        w = size
        for f in factors:
            w //= f.size
            weights.append(w)
        self._weights = weights
        self.one = self.encode(tuple(f.one for f in factors))

    def encode(self, comps: tuple[int, ...]) -> int:
        return sum(c * w for c, w in zip(comps, self._weights))

    def decode(self, a: int) -> tuple[int, ...]:
        out = []
        for w in self._weights:
            out.append(a // w)
            a %= w
        return tuple(out)

    def add(self, a, b):
        ca, cb = self.decode(a), self.decode(b)
        return self.encode(tuple(f.add(x, y) for f, x, y in zip(self.factor_rings, ca, cb)))

    def neg(self, a):
        return self.encode(tuple(f.neg(x) for f, x in zip(self.factor_rings, self.decode(a))))

    def mul(self, a, b):
        ca, cb = self.decode(a), self.decode(b)
        return self.encode(tuple(f.mul(x, y) for f, x, y in zip(self.factor_rings, ca, cb)))

    def coordinates(self, a):
        return tuple(f.coordinates(c) for f, c in zip(self.factor_rings, self.decode(a)))

    def label(self, a):
        comps = self.decode(a)
        return "(" + ",".join(f.label(c) for f, c in zip(self.factor_rings, comps)) + ")"

    def parse_label(self, text):
        s = text.strip()
        if not (s.startswith("(") and s.endswith(")")):
            raise ParseError(f"product element label must be parenthesized: {text!r}")
        parts = _split_top_level(s[1:-1])
        if len(parts) != len(self.factor_rings):
            raise ParseError(f"expected {len(self.factor_rings)} components in {text!r}")
        return self.encode(tuple(f.parse_label(p) for f, p in zip(self.factor_rings, parts)))

    def _compute_unit_bits(self):
        bits = 0
        for a in range(self.size):
            if all(f.is_unit(c) for f, c in zip(self.factor_rings, self.decode(a))):
                bits |= 1 << a
        return bits


class _QuotientRingOps(Ring):
    def __init__(self, desc: PolyQuotientRing):
        size = _validate_descriptor(desc)
        super().__init__(desc, size)
        self.m = desc.coefficient_modulus
        self.variables = desc.variables
        self.bounds = desc.exponents
        # residue monomials in ascending lex order of exponent tuples
        self.monomials: list[tuple[int, ...]] = sorted(
            itertools.product(*(range(e) for e in desc.exponents))
        )
        self.slot_of = {mono: k for k, mono in enumerate(self.monomials)}
        self._rewrite: Optional[tuple[int, dict[int, int]]] = None
        if desc.modulus_var is not None:
            d = desc.exponents[desc.modulus_var]
            repl = {
                k: (-c) % self.m for k, c in enumerate(desc.modulus_coeffs[:-1]) if c % self.m
            }
            self._rewrite = (desc.modulus_var, repl)
        self.one = self.encode_digits((1,) + (0,) * (len(self.monomials) - 1))
        self._mul_rows: dict[int, list[int]] = {}

    def encode_digits(self, digits) -> int:
        a = 0
        for k in reversed(range(len(digits))):
            a = a * self.m + digits[k]
        return a

    def decode_digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in self.monomials:
            out.append(a % self.m)
            a //= self.m
        return tuple(out)

    def add(self, a, b):
        da, db = self.decode_digits(a), self.decode_digits(b)
        return self.encode_digits(tuple((x + y) % self.m for x, y in zip(da, db)))

    def neg(self, a):
        return self.encode_digits(tuple((-x) % self.m for x in self.decode_digits(a)))

    def _reduce(self, terms: dict[tuple[int, ...], int]) -> tuple[int, ...]:
        digits = [0] * len(self.monomials)
        stack = [(e, c) for e, c in terms.items() if c % self.m]
        while stack:
            exps, coeff = stack.pop()
            coeff %= self.m
            if not coeff:
                continue
            over = next((i for i, e in enumerate(exps) if e >= self.bounds[i]), None)
            if over is None:
                digits[self.slot_of[exps]] = (digits[self.slot_of[exps]] + coeff) % self.m
                continue
            if self._rewrite is None or self._rewrite[0] != over:
                continue  # nilpotent relator kills the term
            vi, repl = self._rewrite
            base = list(exps)
            base[vi] -= self.bounds[vi]
            for deg, c in repl.items():
                e2 = list(base)
                e2[vi] += deg
                stack.append((tuple(e2), coeff * c))
        return tuple(digits)

    def _raw_mul(self, a: int, b: int) -> int:
        da, db = self.decode_digits(a), self.decode_digits(b)
        terms: dict[tuple[int, ...], int] = {}
        for i, ca in enumerate(da):
            if not ca:
                continue
            mi = self.monomials[i]
            for j, cb in enumerate(db):
                if not cb:
                    continue
                mj = self.monomials[j]
                key = tuple(x + y for x, y in zip(mi, mj))
                terms[key] = terms.get(key, 0) + ca * cb
        return self.encode_digits(self._reduce(terms))

    def mul(self, a, b):
        row = self._mul_rows.get(a)
        if row is None:
            row = [self._raw_mul(a, b2) for b2 in range(self.size)]
            self._mul_rows[a] = row
        return row[b]

    def coordinates(self, a):
        return self.decode_digits(a)

    def label(self, a):
        digits = self.decode_digits(a)
        terms = {self.monomials[k]: c for k, c in enumerate(digits) if c}
        return poly_string(self.variables, terms)

    def parse_label(self, text):
        terms = parse_poly(text, self.variables)
        return self.encode_digits(self._reduce(terms))

    def _compute_unit_bits(self):
        bits = 0
        for x in range(self.size):
            row = self._mul_rows.get(x)
            if row is not None:
                if self.one in row:
                    bits |= 1 << x
                continue
            if any(self.mul(x, r) == self.one for r in range(self.size)):
                bits |= 1 << x
        return bits


_RING_CACHE: dict[RingDescriptor, Ring] = {}
_RING_CACHE_LOCK = threading.RLock()


def build_ring(descriptor: Union[RingDescriptor, str]) -> Ring:
    """Build (or fetch the cached) ring for a descriptor or descriptor string."""
    if isinstance(descriptor, str):
        descriptor = parse_ring(descriptor)
    with _RING_CACHE_LOCK:
        ring = _RING_CACHE.get(descriptor)
        if ring is None:
            size = _validate_descriptor(descriptor)
            if isinstance(descriptor, ModularRing):
                ring = _ModularRingOps(descriptor)
            elif isinstance(descriptor, ProductRing):
                factors = [build_ring(f) for f in descriptor.factors]
                ring = _ProductRingOps(descriptor, factors)
            else:
                ring = _QuotientRingOps(descriptor)
            assert ring.size == size
            if ring.one == ring.zero:
                raise ZeroModulus("ring must have 1 distinct from 0")
            _RING_CACHE[descriptor] = ring
    return ring


def parse_elements(ring: Ring, text: str) -> tuple[int, ...]:
    """Parse a comma-separated element list; the literal ``0`` means none."""
    s = text.strip()
    if s == "0" or not s:
        return ()
    return tuple(ring.parse_label(p) for p in _split_top_level(s) if p.strip())
