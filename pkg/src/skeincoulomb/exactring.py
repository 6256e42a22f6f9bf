"""Exact sparse Laurent polynomials and rational functions over Q(i).

Monomials are stored as packed integers: the exponent of symbol ``j`` of a
table with ``n`` symbols lives in a signed 20-bit digit at position
``n - 1 - j``.  With signed (balanced) digits, integer addition of keys is
addition of exponent vectors and integer comparison of keys is the
lexicographic order with the first symbol most significant.

Coefficients are Gaussian rationals.  Real coefficients are kept as plain
``int`` / ``Fraction`` so the common case runs at native speed; only values
with a nonzero imaginary part are :class:`GaussQ` instances.

Rational functions keep their denominator as a product of monic, content-free
"atoms".  Sums use the least common multiple of the factored denominators and
cancel atoms by trial division, which keeps expression swell in check
without a multivariate GCD.  Zero testing never depends on reduction.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from .errors import (
    DegenerateScalar,
    TableMismatch,
    UnmappedSymbol,
    ZeroToNegativePower,
)

_BITS = 20
_FULL = 1 << _BITS
_HALF = _FULL >> 1
_MASK = _FULL - 1


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

_RATIONAL = (int, Fraction)


def _demote(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def _mk(re_, im):
    if im == 0:
        return _demote(re_)
    return GaussQ(_demote(re_), _demote(im))


class GaussQ:
    """A Gaussian rational ``re + im*i`` with ``im != 0``.

    Use :func:`gauss` to build values; it returns a plain rational when the
    imaginary part vanishes.
    """

    __slots__ = ("re", "im")

    def __init__(self, re_, im):
        self.re = re_
        self.im = im

    def __add__(self, o):
        if type(o) is GaussQ:
            return _mk(self.re + o.re, self.im + o.im)
        if not isinstance(o, _RATIONAL):
            return NotImplemented
        return _mk(self.re + o, self.im)

    __radd__ = __add__

    def __sub__(self, o):
        if type(o) is GaussQ:
            return _mk(self.re - o.re, self.im - o.im)
        if not isinstance(o, _RATIONAL):
            return NotImplemented
        return _mk(self.re - o, self.im)

    def __rsub__(self, o):
        if not isinstance(o, _RATIONAL):
            return NotImplemented
        return _mk(o - self.re, -self.im)

    def __mul__(self, o):
        if type(o) is GaussQ:
            return _mk(self.re * o.re - self.im * o.im,
                       self.re * o.im + self.im * o.re)
        if not isinstance(o, _RATIONAL):
            return NotImplemented
        return _mk(self.re * o, self.im * o)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def inverse(self):
        n = Fraction(self.re * self.re + self.im * self.im)
        return _mk(self.re / n, -self.im / n)

    def __truediv__(self, o):
        if not isinstance(o, (GaussQ,) + _RATIONAL):
            return NotImplemented
        return cdiv(self, o)

    def __rtruediv__(self, o):
        if not isinstance(o, _RATIONAL):
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        return cpow(self, e)

    def conjugate(self):
        return GaussQ(self.re, -self.im)

    def __eq__(self, o):
        if type(o) is GaussQ:
            return self.re == o.re and self.im == o.im
        if isinstance(o, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im, "i"))

    def __repr__(self):
        return f"GaussQ({self.re}, {self.im})"

    def __str__(self):
        return coeff_text(self)


I = GaussQ(0, 1)


def gauss(re_, im=0):
    """Build a Gaussian rational from rational real and imaginary parts."""
    return _mk(Fraction(re_), Fraction(im))


def cdiv(a, b):
    """Exact division of coefficients (never produces a float)."""
    if b == 0:
        raise DegenerateScalar("division by zero coefficient")
    if type(b) is GaussQ:
        return a * b.inverse()
    if type(a) is GaussQ:
        return _mk(Fraction(a.re) / b, Fraction(a.im) / b)
    if type(a) is int and type(b) is int:
        return _demote(Fraction(a, b))
    return _demote(Fraction(a) / b)


def cpow(c, e):
    if e >= 0:
        r = 1
        base = c
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r
    return cdiv(1, cpow(c, -e))


def coeff_text(c) -> str:
    if type(c) is GaussQ:
        im = c.im
        sign = "+" if im > 0 else "-"
        return f"({c.re}{sign}{abs(im)}i)"
    return str(c)


def parse_coeff(text: str):
    text = text.strip()
    if text.startswith("(") and text.endswith("i)"):
        body = text[1:-2]
        # split at the last sign that is not an exponent/leading sign
        m = re.match(r"^(-?[0-9/]+)([+-])([0-9/]+)$", body)
        if not m:
            raise ValueError(f"bad Gaussian coefficient {text!r}")
        im = Fraction(m.group(3))
        if m.group(2) == "-":
            im = -im
        return gauss(Fraction(m.group(1)), im)
    return _demote(Fraction(text))


# ---------------------------------------------------------------------------
# Symbol tables
# ---------------------------------------------------------------------------

class SymbolTable:
    """An ordered list of distinct formal symbols.

    The order is significant: it fixes the packed monomial layout and the
    lexicographic term order (first symbol most significant).
    """

    __slots__ = ("symbols", "_index", "_shifts", "_bias", "_hash")

    def __init__(self, symbols: Iterable[str]):
        symbols = tuple(symbols)
        if len(set(symbols)) != len(symbols):
            raise ValueError(f"duplicate symbol names in {symbols}")
        for s in symbols:
            if not isinstance(s, str) or not s:
                raise ValueError(f"invalid symbol name {s!r}")
        self.symbols = symbols
        self._index = {s: j for j, s in enumerate(symbols)}
        n = len(symbols)
        self._shifts = tuple(_BITS * (n - 1 - j) for j in range(n))
        self._bias = sum(_HALF << sh for sh in self._shifts)
        self._hash = hash(symbols)

    def __len__(self):
        return len(self.symbols)

    def __eq__(self, other):
        return self is other or (isinstance(other, SymbolTable) and self.symbols == other.symbols)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SymbolTable({list(self.symbols)})"

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnmappedSymbol(f"symbol {name!r} not in table {self.symbols}") from None

    def unit(self, name: str) -> int:
        return 1 << self._shifts[self.index(name)]

    def pack(self, exps) -> int:
        if isinstance(exps, Mapping):
            return sum(e << self._shifts[self.index(s)] for s, e in exps.items())
        if len(exps) != len(self.symbols):
            raise ValueError("exponent vector length does not match table")
        return sum(e << sh for e, sh in zip(exps, self._shifts))

    def unpack(self, key: int) -> Tuple[int, ...]:
        k = key + self._bias
        return tuple(((k >> sh) & _MASK) - _HALF for sh in self._shifts)

    def digit(self, key: int, j: int) -> int:
        return (((key + self._bias) >> self._shifts[j]) & _MASK) - _HALF

    # convenience constructors
    def gen(self, name: str) -> "RatFn":
        return RatFn(LaurentPoly.symbol(self, name))

    def gens(self):
        return tuple(self.gen(s) for s in self.symbols)

    def const(self, c) -> "RatFn":
        return RatFn(LaurentPoly.constant(self, c))

    def one(self) -> "RatFn":
        return self.const(1)

    def zero(self) -> "RatFn":
        return self.const(0)


def _check_table(a, b):
    if a is not b and a != b:
        raise TableMismatch(f"{a!r} vs {b!r}")


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

Number = Union[int, Fraction, GaussQ]


class LaurentPoly:
    """Sparse Laurent polynomial with Gaussian-rational coefficients."""

    __slots__ = ("table", "terms", "_hash", "_box")

    def __init__(self, table: SymbolTable, terms: Optional[Dict[int, Number]] = None):
        self.table = table
        if terms is None:
            terms = {}
        else:
            terms = {k: _demote(c) for k, c in terms.items() if c != 0}
        self.terms = terms
        self._hash = None
        self._box = None

    @classmethod
    def _raw(cls, table, terms):
        p = cls.__new__(cls)
        p.table = table
        p.terms = terms
        p._hash = None
        p._box = None
        return p

    @classmethod
    def constant(cls, table, c):
        c = _demote(c) if not isinstance(c, float) else _reject_float(c)
        return cls._raw(table, {0: c} if c != 0 else {})

    @classmethod
    def symbol(cls, table, name, power=1):
        return cls._raw(table, {power * table.unit(name): 1})

    @classmethod
    def monomial(cls, table, exps, coeff=1):
        if coeff == 0:
            return cls._raw(table, {})
        return cls._raw(table, {table.pack(exps): _demote(coeff)})

    @classmethod
    def from_exponents(cls, table, items: Mapping):
        """Build from ``{exponent_tuple_or_dict: coeff}``."""
        terms: Dict[int, Number] = {}
        for exps, c in items.items():
            k = table.pack(exps)
            terms[k] = terms.get(k, 0) + c
        return cls(table, terms)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get(0, 0)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- coercion -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            _check_table(self.table, other.table)
            return other
        if isinstance(other, (int, Fraction, GaussQ)):
            return LaurentPoly.constant(self.table, other)
        return None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if len(o.terms) > len(self.terms):
            big, small = o.terms, self.terms
        else:
            big, small = self.terms, o.terms
        t = dict(big)
        for k, c in small.items():
            v = t.get(k, 0) + c
            if v == 0:
                t.pop(k, None)
            else:
                t[k] = v
        return LaurentPoly._raw(self.table, t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.table, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for k, c in o.terms.items():
            v = t.get(k, 0) - c
            if v == 0:
                t.pop(k, None)
            else:
                t[k] = v
        return LaurentPoly._raw(self.table, t)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussQ)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        _check_table(self.table, other.table)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            if cb == 1:
                return LaurentPoly._raw(self.table, {k + kb: c for k, c in a.items()})
            return LaurentPoly._raw(self.table, {k + kb: _demote(c * cb) for k, c in a.items()})
        t: Dict[int, Number] = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw(self.table, {k: _demote(c) for k, c in t.items() if c != 0})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussQ)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        if c == 0:
            return LaurentPoly._raw(self.table, {})
        if c == 1:
            return self
        return LaurentPoly._raw(self.table, {k: _demote(v * c) for k, v in self.terms.items()})

    def shift(self, key: int, coeff=1):
        """Multiply by the monomial ``coeff * m`` where ``m`` has packed key ``key``."""
        if coeff == 1:
            return LaurentPoly._raw(self.table, {k + key: c for k, c in self.terms.items()})
        return LaurentPoly._raw(self.table, {k + key: _demote(c * coeff) for k, c in self.terms.items()})

    def __pow__(self, e: int):
        if e < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            (k, c), = self.terms.items()
            return LaurentPoly._raw(self.table, {k * e: cpow(c, e)})
        r = LaurentPoly.constant(self.table, 1)
        base = self
        while e:
            if e & 1:
                r = r * base
            e >>= 1
            if e:
                base = base * base
        return r

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.table == other.table and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussQ)):
            return self.terms == ({0: other} if other != 0 else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self.terms.items())))
        return self._hash

    # -- structure ----------------------------------------------------------
    def leading(self):
        k = max(self.terms)
        return k, self.terms[k]

    def exponent_box(self):
        """Per-symbol (min, max) exponents; cached."""
        if self._box is None:
            n = len(self.table)
            lo = [None] * n
            hi = [None] * n
            unpack = self.table.unpack
            for k in self.terms:
                for j, e in enumerate(unpack(k)):
                    if lo[j] is None or e < lo[j]:
                        lo[j] = e
                    if hi[j] is None or e > hi[j]:
                        hi[j] = e
            self._box = (tuple(lo), tuple(hi))
        return self._box

    def degree_in(self, name: str) -> Tuple[int, int]:
        j = self.table.index(name)
        lo, hi = self.exponent_box()
        return lo[j], hi[j]

    def symbols_used(self):
        if not self.terms:
            return set()
        lo, hi = self.exponent_box()
        return {s for s, a, b in zip(self.table.symbols, lo, hi) if a or b}

    def content_split(self):
        """Return ``(c, mkey, prim)`` with ``self == c * m * prim``.

        ``prim`` has minimum exponent 0 in every symbol and leading
        coefficient 1; ``m`` is the monomial with packed key ``mkey``.
        """
        if not self.terms:
            raise DegenerateScalar("content of the zero polynomial")
        lo, _ = self.exponent_box()
        mkey = self.table.pack(lo)
        _, lc = self.leading()
        if mkey == 0 and lc == 1:
            return 1, 0, self
        inv = cdiv(1, lc)
        prim = LaurentPoly._raw(self.table, {k - mkey: _demote(c * inv) for k, c in self.terms.items()})
        return lc, mkey, prim

    def divide_exact(self, d: "LaurentPoly") -> Optional["LaurentPoly"]:
        """Return ``self / d`` when ``d`` divides ``self`` in the Laurent ring, else ``None``."""
        _check_table(self.table, d.table)
        if d.is_zero():
            raise DegenerateScalar("division by the zero polynomial")
        if self.is_zero():
            return self
        if d.is_monomial():
            (k, c), = d.terms.items()
            return self.shift(-k, cdiv(1, c))
        nlo, nhi = self.exponent_box()
        dlo, dhi = d.exponent_box()
        qlo = tuple(a - b for a, b in zip(nlo, dlo))
        qhi = tuple(a - b for a, b in zip(nhi, dhi))
        if any(a > b for a, b in zip(qlo, qhi)):
            return None
        unpack = self.table.unpack
        dk, dc = d.leading()
        dinv = cdiv(1, dc)
        dterms = [(k - dk, c) for k, c in d.terms.items() if k != dk]
        r = dict(self.terms)
        heap = [-k for k in r]
        heapq.heapify(heap)
        q: Dict[int, Number] = {}
        while r:
            k = -heapq.heappop(heap)
            c = r.get(k)
            if c is None:
                continue
            t = k - dk
            for e, a, b in zip(unpack(t), qlo, qhi):
                if e < a or e > b:
                    return None
            tc = _demote(c * dinv)
            q[t] = tc
            del r[k]
            for ok, oc in dterms:
                kk = k + ok
                v = r.get(kk)
                if v is None:
                    r[kk] = _demote(-tc * oc)
                    heapq.heappush(heap, -kk)
                else:
                    v = v - tc * oc
                    if v == 0:
                        del r[kk]
                    else:
                        r[kk] = _demote(v)
        return LaurentPoly._raw(self.table, q)

    # -- substitution -------------------------------------------------------
    def map_monomials(self, mmap: "MonomialMap") -> "LaurentPoly":
        return mmap.apply_poly(self)

    def evaluate(self, values: Mapping[str, Number]):
        """Evaluate at numeric values for every occurring symbol (oracle use)."""
        total = 0
        syms = self.table.symbols
        for k, c in self.terms.items():
            v = c
            for s, e in zip(syms, self.table.unpack(k)):
                if e:
                    if s not in values:
                        raise UnmappedSymbol(s)
                    x = values[s]
                    if e < 0 and x == 0:
                        raise ZeroToNegativePower(s)
                    v = v * cpow(x, e)
            total = total + v
        return _demote(total)

    def swap_symbols(self, pairs: Mapping[str, str]) -> "LaurentPoly":
        imgs = {a: (1, self.table.unit(b)) for a, b in pairs.items()}
        return MonomialMap(self.table, self.table, imgs).apply_poly(self)

    # -- text ---------------------------------------------------------------
    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        syms = self.table.symbols
        for k in sorted(self.terms, reverse=True):
            s = coeff_text(self.terms[k])
            for name, e in zip(syms, self.table.unpack(k)):
                if e:
                    s += f"*{name}^{e}"
            parts.append(s)
        return " + ".join(parts)

    __str__ = text

    def __repr__(self):
        return f"LaurentPoly({self.text()})"


def _reject_float(x):
    raise TypeError("floating-point values are not allowed in exact arithmetic")


def parse_poly(table: SymbolTable, text: str) -> LaurentPoly:
    """Parse the canonical text form produced by :meth:`LaurentPoly.text`."""
    text = text.strip()
    if text == "0":
        return LaurentPoly(table)
    terms: Dict[int, Number] = {}
    for part in text.split(" + "):
        pieces = part.split("*")
        c = parse_coeff(pieces[0])
        key = 0
        for p in pieces[1:]:
            name, _, e = p.partition("^")
            key += int(e) * table.unit(name)
        terms[key] = terms.get(key, 0) + c
    return LaurentPoly(table, terms)


# ---------------------------------------------------------------------------
# Monomial maps (fast substitutions)
# ---------------------------------------------------------------------------

class MonomialMap:
    """Ring homomorphism sending each symbol to ``coeff * monomial``.

    ``images`` maps source symbol names to ``(coeff, target_key)``.  When the
    source and target tables coincide, unlisted symbols are fixed; otherwise
    unlisted symbols pass through by name if the target has them.
    """

    __slots__ = ("source", "target", "_changed", "_full", "_pows", "_atom_cache")

    def __init__(self, source: SymbolTable, target: SymbolTable, images: Mapping[str, Tuple[Number, int]]):
        self.source = source
        self.target = target
        self._pows = {}
        self._atom_cache = {}
        if source == target:
            self._full = None
            self._changed = tuple(
                (source.index(s), c, k - source.unit(s))
                for s, (c, k) in images.items()
                if not (c == 1 and k == source.unit(s))
            )
        else:
            full = []
            for j, s in enumerate(source.symbols):
                if s in images:
                    full.append(images[s])
                elif s in target:
                    full.append((1, target.unit(s)))
                else:
                    full.append(None)
            self._full = tuple(full)
            self._changed = None

    def _cpow(self, j, c, e):
        key = (j, e)
        v = self._pows.get(key)
        if v is None:
            if c == 0 and e < 0:
                raise ZeroToNegativePower(self.source.symbols[j])
            v = cpow(c, e)
            self._pows[key] = v
        return v

    def apply_poly(self, p: LaurentPoly) -> LaurentPoly:
        _check_table(p.table, self.source)
        out: Dict[int, Number] = {}
        if self._full is None:
            changed = self._changed
            if not changed:
                return p
            bias = self.source._bias
            shifts = self.source._shifts
            for k, c in p.terms.items():
                kb = k + bias
                nk = k
                for j, cj, dk in changed:
                    e = ((kb >> shifts[j]) & _MASK) - _HALF
                    if e:
                        nk += e * dk
                        if cj != 1:
                            c = c * self._cpow(j, cj, e)
                v = out.get(nk)
                out[nk] = c if v is None else v + c
        else:
            full = self._full
            unpack = self.source.unpack
            for k, c in p.terms.items():
                nk = 0
                for j, e in enumerate(unpack(k)):
                    if e:
                        img = full[j]
                        if img is None:
                            raise UnmappedSymbol(self.source.symbols[j])
                        cj, kj = img
                        nk += e * kj
                        if cj != 1:
                            c = c * self._cpow(j, cj, e)
                v = out.get(nk)
                out[nk] = c if v is None else v + c
        return LaurentPoly._raw(self.target, {k: _demote(c) for k, c in out.items() if c != 0})

    def apply_atom(self, atom: LaurentPoly):
        """Image of a denominator atom, split as ``(c, mkey, prim)``."""
        r = self._atom_cache.get(atom)
        if r is None:
            img = self.apply_poly(atom)
            if img.is_zero():
                raise DegenerateScalar("a denominator factor maps to zero")
            r = img.content_split()
            self._atom_cache[atom] = r
        return r


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------

class RatFn:
    """Exact rational function ``num / prod(atom**e)``.

    Every atom is a monic Laurent polynomial with no monomial content that is
    not itself a monomial.  Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFn):
            if den is None:
                self.num, self.den = num.num, num.den
                return
            r = num / den
            self.num, self.den = r.num, r.den
            return
        if not isinstance(num, LaurentPoly):
            raise TypeError("RatFn numerator must be a LaurentPoly or RatFn")
        if den is None:
            self.num, self.den = num, {}
            return
        if isinstance(den, (int, Fraction, GaussQ)):
            den = LaurentPoly.constant(num.table, den)
        if isinstance(den, RatFn):
            r = RatFn(num) / den
            self.num, self.den = r.num, r.den
            return
        _check_table(num.table, den.table)
        if den.is_zero():
            raise DegenerateScalar("zero denominator")
        c, mkey, prim = den.content_split()
        num = num.shift(-mkey, cdiv(1, c))
        atoms = {} if prim.is_constant() else {prim: 1}
        self.num, self.den = _reduce(num, atoms)

    @classmethod
    def _raw(cls, num, den):
        r = cls.__new__(cls)
        r.num = num
        r.den = den
        return r

    @property
    def table(self) -> SymbolTable:
        return self.num.table

    @property
    def numerator(self) -> LaurentPoly:
        return self.num

    @property
    def denominator(self) -> LaurentPoly:
        d = LaurentPoly.constant(self.table, 1)
        for a, e in self.den.items():
            d = d * a ** e
        return d

    def atoms(self):
        return dict(self.den)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return not self.den

    def is_constant(self) -> bool:
        return not self.den and self.num.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.constant_value()

    def is_monomial(self) -> bool:
        return not self.den and self.num.is_monomial()

    def to_laurent(self) -> Optional[LaurentPoly]:
        """The Laurent polynomial equal to this value, or ``None``."""
        if not self.den:
            return self.num
        num, den = _reduce(self.num, dict(self.den))
        return num if not den else None

    # -- coercion -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RatFn):
            _check_table(self.table, other.table)
            return other
        if isinstance(other, LaurentPoly):
            _check_table(self.table, other.table)
            return RatFn._raw(other, {})
        if isinstance(other, (int, Fraction, GaussQ)):
            return RatFn._raw(LaurentPoly.constant(self.table, other), {})
        if isinstance(other, float):
            _reject_float(other)
        return None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _add(self, o, 1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _add(self, o, -1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _add(o, self, -1)

    def __neg__(self):
        return RatFn._raw(-self.num, self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RatFn._raw(LaurentPoly(self.table), {})
        if not o.den and not self.den:
            return RatFn._raw(self.num * o.num, {})
        if not o.den and o.num.is_monomial():
            return RatFn._raw(self.num * o.num, self.den)
        if not self.den and self.num.is_monomial():
            return RatFn._raw(self.num * o.num, o.den)
        den = dict(self.den)
        for a, e in o.den.items():
            den[a] = den.get(a, 0) + e
        # only cross cancellations are possible between reduced operands
        num = self.num * o.num
        num, den = _reduce(num, den, only=set(self.den) | set(o.den))
        return RatFn._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFn":
        if self.num.is_zero():
            raise DegenerateScalar("inverse of zero")
        c, mkey, prim = self.num.content_split()
        num = self.denominator.shift(-mkey, cdiv(1, c))
        den = {} if prim.is_constant() else {prim: 1}
        num, den = _reduce(num, den)
        return RatFn._raw(num, den)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DegenerateScalar("division by zero rational function")
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if not self.den:
            return RatFn._raw(self.num ** e, {})
        return RatFn._raw(self.num ** e, {a: k * e for a, k in self.den.items()})

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return scalar_eq(self, o)

    __hash__ = None

    # -- substitution -------------------------------------------------------
    def map_monomials(self, mmap: MonomialMap) -> "RatFn":
        num = mmap.apply_poly(self.num)
        if not self.den:
            return RatFn._raw(num, {})
        den: Dict[LaurentPoly, int] = {}
        for a, e in self.den.items():
            c, mkey, prim = mmap.apply_atom(a)
            if e == 1:
                num = num.shift(-mkey, cdiv(1, c))
            else:
                num = num.shift(-mkey * e, cdiv(1, cpow(c, e)))
            if not prim.is_constant():
                den[prim] = den.get(prim, 0) + e
        if len(den) < len(self.den) or any(e > 1 for e in den.values()):
            num, den = _reduce(num, den)
        return RatFn._raw(num, den)

    def substitute(self, mapping: Mapping, table: Optional[SymbolTable] = None) -> "RatFn":
        return scalar_substitute(self, mapping, table)

    def evaluate(self, values: Mapping[str, Number]):
        n = self.num.evaluate(values)
        d = 1
        for a, e in self.den.items():
            d = d * cpow(a.evaluate(values), e)
        if d == 0:
            raise DegenerateScalar("denominator vanishes at the evaluation point")
        return cdiv(n, d)

    def symbols_used(self):
        s = set(self.num.symbols_used())
        for a in self.den:
            s |= a.symbols_used()
        return s

    # -- text ---------------------------------------------------------------
    def text(self) -> str:
        if not self.den:
            return self.num.text()
        den = "*".join(
            f"({a.text()})" + (f"^{e}" if e != 1 else "")
            for a, e in sorted(self.den.items(), key=lambda ae: ae[0].text())
        )
        return f"({self.num.text()}) / ({den})"

    __str__ = text

    def __repr__(self):
        return f"RatFn({self.text()})"


def _reduce(num: LaurentPoly, den: Dict[LaurentPoly, int], only=None):
    """Cancel denominator atoms that divide ``num`` exactly."""
    if num.is_zero():
        return num, {}
    if not den:
        return num, den
    for a in list(den):
        if only is not None and a not in only:
            continue
        e = den[a]
        while e:
            q = num.divide_exact(a)
            if q is None:
                break
            num = q
            e -= 1
        if e:
            den[a] = e
        else:
            del den[a]
    return num, den


def _add(a: RatFn, b: RatFn, sign: int) -> RatFn:
    if b.num.is_zero():
        return a
    if a.num.is_zero():
        return b if sign == 1 else -b
    if a.den == b.den:
        num = a.num + b.num if sign == 1 else a.num - b.num
        if not a.den:
            return RatFn._raw(num, {})
        num, den = _reduce(num, dict(a.den))
        return RatFn._raw(num, den)
    lcm = dict(a.den)
    for at, e in b.den.items():
        if lcm.get(at, 0) < e:
            lcm[at] = e
    na = a.num
    for at, e in lcm.items():
        k = e - a.den.get(at, 0)
        if k:
            na = na * at ** k
    nb = b.num
    for at, e in lcm.items():
        k = e - b.den.get(at, 0)
        if k:
            nb = nb * at ** k
    num = na + nb if sign == 1 else na - nb
    num, den = _reduce(num, lcm)
    return RatFn._raw(num, den)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def as_ratfn(x, table: SymbolTable) -> RatFn:
    if isinstance(x, RatFn):
        _check_table(x.table, table)
        return x
    if isinstance(x, LaurentPoly):
        _check_table(x.table, table)
        return RatFn._raw(x, {})
    if isinstance(x, (int, Fraction, GaussQ)):
        return RatFn._raw(LaurentPoly.constant(table, x), {})
    if isinstance(x, str):
        return table.gen(x)
    raise TypeError(f"cannot interpret {x!r} as a rational function")


def scalar_arith(lhs: RatFn, rhs: RatFn, kind: str) -> RatFn:
    """Exact ``add`` / ``sub`` / ``mul`` / ``div`` on rational functions."""
    _check_table(lhs.table, rhs.table)
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "mul":
        return lhs * rhs
    if kind == "div":
        return lhs / rhs
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def scalar_eq(lhs: RatFn, rhs: RatFn) -> bool:
    """Exact equality by cross-multiplication."""
    _check_table(lhs.table, rhs.table)
    if lhs.den == rhs.den:
        return lhs.num == rhs.num
    a = lhs.num * rhs.denominator
    b = rhs.num * lhs.denominator
    return a == b


def _monomial_image(img: RatFn):
    """``(coeff, key)`` if ``img`` is a nonzero monomial, else ``None``."""
    if img.den or len(img.num.terms) != 1:
        return None
    (k, c), = img.num.terms.items()
    return c, k


def scalar_substitute(value: RatFn, mapping: Mapping, table: Optional[SymbolTable] = None) -> RatFn:
    """Apply the ring homomorphism extending ``mapping`` (symbol -> value).

    Images are interpreted over ``table`` (default: the value's own table).
    Symbols that are not mapped pass through by name when the target table
    has them; otherwise :class:`UnmappedSymbol` is raised.
    """
    src = value.table
    tgt = table if table is not None else src
    imgs = {s: as_ratfn(v, tgt) for s, v in mapping.items()}
    for s in imgs:
        src.index(s)
    used = value.symbols_used()
    for s in used:
        if s not in imgs and s not in tgt:
            raise UnmappedSymbol(f"symbol {s!r} has no image")
    mono = {}
    for s, img in imgs.items():
        m = _monomial_image(img)
        if m is None:
            break
        mono[s] = m
    else:
        return value.map_monomials(MonomialMap(src, tgt, mono))
    return _general_substitute(value, imgs, tgt)


def _general_substitute(value: RatFn, imgs: Mapping[str, RatFn], tgt: SymbolTable) -> RatFn:
    src = value.table
    pows: Dict[Tuple[int, int], RatFn] = {}

    def image_pow(j, e):
        r = pows.get((j, e))
        if r is None:
            s = src.symbols[j]
            img = imgs[s] if s in imgs else tgt.gen(s)
            if e < 0 and img.is_zero():
                raise ZeroToNegativePower(s)
            r = img ** e
            pows[(j, e)] = r
        return r

    def poly_image(p: LaurentPoly) -> RatFn:
        # group terms by their denominator pattern to limit LCM work
        total = tgt.zero()
        buckets: Dict[Tuple, LaurentPoly] = {}
        dens: Dict[Tuple, Dict] = {}
        for k, c in p.terms.items():
            term = RatFn._raw(LaurentPoly.constant(tgt, c), {})
            for j, e in enumerate(src.unpack(k)):
                if e:
                    term = term * image_pow(j, e)
            sig = tuple(sorted(((a.text(), x) for a, x in term.den.items())))
            if sig in buckets:
                buckets[sig] = buckets[sig] + term.num
            else:
                buckets[sig] = term.num
                dens[sig] = term.den
        for sig, n in buckets.items():
            total = total + RatFn._raw(n, dict(dens[sig])) if dens[sig] else total + RatFn._raw(n, {})
        return total

    out = poly_image(value.num)
    for a, e in value.den.items():
        d = poly_image(a)
        if d.is_zero():
            raise DegenerateScalar("a denominator factor maps to zero")
        out = out / d ** e
    return out


def laurent_quotient_test(value: RatFn) -> Optional[LaurentPoly]:
    """Return the Laurent polynomial equal to ``value`` if there is one."""
    return value.to_laurent()


def random_ratfn(table: SymbolTable, rng, *, terms: int = 3, max_exp: int = 2, laurent: bool = False,
                 symbols=None) -> RatFn:
    """A random sparse rational function with small integer data (for tests)."""
    names = list(symbols) if symbols is not None else list(table.symbols)

    def rpoly(nterms):
        t = {}
        for _ in range(nterms):
            exps = {s: rng.randint(-max_exp, max_exp) for s in names}
            t[table.pack(exps)] = t.get(table.pack(exps), 0) + rng.choice([-3, -2, -1, 1, 2, 3])
        return LaurentPoly(table, t)

    num = rpoly(terms)
    if laurent:
        return RatFn(num)
    den = rpoly(2)
    while den.is_zero():
        den = rpoly(2)
    return RatFn(num, den)
