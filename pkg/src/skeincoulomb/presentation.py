"""Finitely presented algebras and checks that an operator assignment respects them.

Relations are kept exactly as printed (``lhs - rhs``), as sums of scalar
coefficients times words in the generators.  The empty word is the unit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errors import UnmappedGenerator, UnmappedParameter
from .exactring import RatFn, SymbolTable, as_ratfn
from .qdiffop import DiffOp, OpSpace

Word = Tuple[str, ...]


class NCPoly:
    """Element of the free algebra over rational functions: ``{word: coeff}``."""

    __slots__ = ("table", "terms")

    def __init__(self, table: SymbolTable, terms: Optional[Dict[Word, RatFn]] = None):
        self.table = table
        self.terms = {w: c for w, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def word(cls, table, *names) -> "NCPoly":
        return cls(table, {tuple(names): table.one()})

    def _lift(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            return other
        return NCPoly(self.table, {(): as_ratfn(other, self.table)})

    def __add__(self, other):
        o = self._lift(other)
        t = dict(self.terms)
        for w, c in o.terms.items():
            t[w] = t[w] + c if w in t else c
        return NCPoly(self.table, t)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly(self.table, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            c = as_ratfn(other, self.table)
            return NCPoly(self.table, {w: v * c for w, v in self.terms.items()})
        t: Dict[Word, RatFn] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                t[w] = t[w] + c1 * c2 if w in t else c1 * c2
        return NCPoly(self.table, t)

    def __rmul__(self, other):
        c = as_ratfn(other, self.table)
        return NCPoly(self.table, {w: c * v for w, v in self.terms.items()})

    def __pow__(self, e: int):
        r = self._lift(1)
        for _ in range(e):
            r = r * self
        return r


@dataclass
class Relation:
    """``sum coeff * word = 0``."""

    terms: List[Tuple[RatFn, Word]]
    label: str = ""

    @classmethod
    def from_sides(cls, lhs: NCPoly, rhs: NCPoly, label: str = "") -> "Relation":
        diff = lhs - rhs
        # keep the printed order: words from the left side first
        order = list(lhs.terms) + [w for w in rhs._lift(rhs).terms if w not in lhs.terms]
        terms = [(diff.terms[w], w) for w in order if w in diff.terms]
        return cls(terms, label)

    def words(self):
        return [w for _, w in self.terms]


@dataclass
class Presentation:
    name: str
    generators: Tuple[str, ...]
    parameters: SymbolTable
    relations: List[Relation]
    central: Dict[str, RatFn] = field(default_factory=dict)

    def __post_init__(self):
        for rel in self.relations:
            for _, w in rel.terms:
                for g in w:
                    if g not in self.generators:
                        raise UnmappedGenerator(f"relation uses undeclared generator {g!r}")

    def to_json(self) -> str:
        return json.dumps({
            "name": self.name,
            "generators": list(self.generators),
            "parameters": list(self.parameters.symbols),
            "central": {k: v.text() for k, v in self.central.items()},
            "relations": [
                {"label": r.label,
                 "terms": [{"coeff": c.text(), "word": list(w)} for c, w in r.terms]}
                for r in self.relations
            ],
        }, indent=1, sort_keys=False)


class RepMap:
    """Generator images plus a translation of the presentation's parameters."""

    def __init__(self, space: OpSpace, images: Mapping[str, DiffOp], translation: Mapping[str, object]):
        self.space = space
        self.images = dict(images)
        self.translation = {k: as_ratfn(v, space.table) for k, v in translation.items()}
        self._words: Dict[Word, DiffOp] = {}

    def translate(self, c: RatFn) -> RatFn:
        for s in c.symbols_used():
            if s not in self.translation:
                raise UnmappedParameter(f"parameter {s!r} has no translation")
        return c.substitute(self.translation, self.space.table)

    def eval_word(self, word: Sequence[str]) -> DiffOp:
        word = tuple(word)
        got = self._words.get(word)
        if got is not None:
            return got
        if not word:
            r = self.space.one()
        else:
            if word[-1] not in self.images:
                raise UnmappedGenerator(f"generator {word[-1]!r} has no image")
            r = self.eval_word(word[:-1]) * self.images[word[-1]]
        self._words[word] = r
        return r


def eval_word(rep: RepMap, word: Sequence[str]) -> DiffOp:
    return rep.eval_word(word)


def relation_residual(rep: RepMap, rel: Relation) -> DiffOp:
    total = rep.space.zero()
    for c, w in rel.terms:
        total = total + rep.eval_word(w).scale(rep.translate(c))
    return total


def check_presentation(rep: RepMap, pres: Presentation):
    """``[(index, holds, residual)]`` for every relation."""
    out = []
    for i, rel in enumerate(pres.relations):
        r = relation_residual(rep, rel)
        out.append((i, r.is_zero(), r))
    return out


# ---------------------------------------------------------------------------
# the presentations
# ---------------------------------------------------------------------------

def dahacc_presentation() -> Presentation:
    P = SymbolTable(("qh", "t1", "t2", "t3", "t4"))
    q = P.gen("qh") ** 2
    t1, t2, t3, t4 = (P.gen(f"t{i}") for i in range(1, 5))
    s1, s2, s3, s4 = t1 - t1 ** -1, t2 - t2 ** -1, q ** -1 * t3 - q * t3 ** -1, t4 - t4 ** -1
    L, M, N = s2 * s4 + s3 * s1, s1 * s2 + s3 * s4, s1 * s4 + s3 * s2
    x, y, z = (NCPoly.word(P, g) for g in "xyz")
    rels = [
        Relation.from_sides(q ** -1 * x * y - q * y * x, (q ** -2 - q ** 2) * z - (q ** -1 - q) * L, "xy"),
        Relation.from_sides(q ** -1 * y * z - q * z * y, (q ** -2 - q ** 2) * x - (q ** -1 - q) * M, "yz"),
        Relation.from_sides(q ** -1 * z * x - q * x * z, (q ** -2 - q ** 2) * y - (q ** -1 - q) * N, "zx"),
        Relation.from_sides(
            q ** -1 * x * y * z,
            q ** -2 * x * x + q ** 2 * y * y + q ** -2 * z * z - q ** -1 * M * x - q * N * y - q ** -1 * L * z
            - s1 ** 2 - s2 ** 2 - s3 ** 2 - s4 ** 2 + s1 * s2 * s3 * s4 - (q + q ** -1) ** 2,
            "cubic"),
    ]
    return Presentation("daha-cc", ("x", "y", "z"), P, rels)


def dahaa1_presentation() -> Presentation:
    P = SymbolTable(("qh", "th"))
    qh = P.gen("qh")
    q = qh ** 2
    t = P.gen("th") ** 2
    x, y, z = (NCPoly.word(P, g) for g in "xyz")
    rels = [
        Relation.from_sides(qh * x * y - qh ** -1 * y * x, (q - q ** -1) * z, "xy"),
        Relation.from_sides(qh * y * z - qh ** -1 * z * y, (q - q ** -1) * x, "yz"),
        Relation.from_sides(qh * z * x - qh ** -1 * x * z, (q - q ** -1) * y, "zx"),
        Relation.from_sides(q * x * x + q ** -1 * y * y + q * z * z - qh * x * y * z,
                            NCPoly(P) + (t * q ** -1 - q * t ** -1 + q + q ** -1), "quartic"),
    ]
    return Presentation("daha-a1", ("x", "y", "z"), P, rels)


def skein_s04_presentation() -> Presentation:
    P = SymbolTable(("A", "l1", "l2", "l3", "l4"))
    A = P.gen("A")
    d = {i: -(P.gen(f"l{i}") + P.gen(f"l{i}") ** -1) for i in range(1, 5)}
    a, b, c = (NCPoly.word(P, g) for g in ("alpha", "beta", "gamma"))
    d1, d2, d3, d4 = d[1], d[2], d[3], d[4]
    rels = [
        Relation.from_sides(A ** 2 * a * b - A ** -2 * b * a,
                            (A ** 4 - A ** -4) * c + NCPoly(P) + (A ** 2 - A ** -2) * (d2 * d4 + d1 * d3), "alpha-beta"),
        Relation.from_sides(A ** 2 * b * c - A ** -2 * c * b,
                            (A ** 4 - A ** -4) * a + NCPoly(P) + (A ** 2 - A ** -2) * (d1 * d2 + d3 * d4), "beta-gamma"),
        Relation.from_sides(A ** 2 * c * a - A ** -2 * a * c,
                            (A ** 4 - A ** -4) * b + NCPoly(P) + (A ** 2 - A ** -2) * (d1 * d4 + d2 * d3), "gamma-alpha"),
        Relation.from_sides(
            A ** 2 * a * b * c,
            A ** 4 * a * a + A ** -4 * b * b + A ** 4 * c * c
            + A ** 2 * (d1 * d2 + d3 * d4) * a + A ** -2 * (d1 * d4 + d2 * d3) * b + A ** 2 * (d2 * d4 + d1 * d3) * c
            + d1 ** 2 + d2 ** 2 + d3 ** 2 + d4 ** 2 + d1 * d2 * d3 * d4 - (A ** 2 + A ** -2) ** 2,
            "cubic"),
    ]
    return Presentation("skein-s04", ("alpha", "beta", "gamma"), P, rels,
                        {f"delta{i}": d[i] for i in range(1, 5)})


def skein_s11_presentation() -> Presentation:
    P = SymbolTable(("A", "l"))
    A = P.gen("A")
    delta = -(P.gen("l") + P.gen("l") ** -1)
    a, b, c = (NCPoly.word(P, g) for g in ("alpha", "beta", "gamma"))
    rels = [
        Relation.from_sides(A ** -1 * a * b - A * b * a, (A ** -2 - A ** 2) * c, "alpha-beta"),
        Relation.from_sides(A ** -1 * b * c - A * c * b, (A ** -2 - A ** 2) * a, "beta-gamma"),
        Relation.from_sides(A ** -1 * c * a - A * a * c, (A ** -2 - A ** 2) * b, "gamma-alpha"),
        Relation.from_sides(A ** -2 * a * a + A ** 2 * b * b + A ** -2 * c * c - A ** -1 * a * b * c,
                            NCPoly(P) + (A ** 2 + A ** -2 - delta), "delta"),
    ]
    return Presentation("skein-s11", ("alpha", "beta", "gamma"), P, rels, {"delta": delta})


def skein_s03_presentation() -> Presentation:
    P = SymbolTable(("A", "l1", "l2", "l3"))
    central = {f"delta{i}": -(P.gen(f"l{i}") + P.gen(f"l{i}") ** -1) for i in range(1, 4)}
    return Presentation("skein-s03", (), P, [], central)


def z2_image(pres: Presentation, signs: Mapping[str, int]) -> Presentation:
    """Apply a sign automorphism ``g -> signs[g] * g`` to every relation."""
    rels = []
    for rel in pres.relations:
        terms = []
        for c, w in rel.terms:
            s = 1
            for g in w:
                s *= signs.get(g, 1)
            terms.append((c * s, w))
        rels.append(Relation(terms, rel.label))
    return Presentation(pres.name + "-twisted", pres.generators, pres.parameters, rels, pres.central)


def same_relation_up_to_scalar(r1: Relation, r2: Relation) -> bool:
    """Whether ``r1`` is a nonzero scalar multiple of ``r2`` (as free-algebra elements)."""
    a = {w: c for c, w in r1.terms}
    b = {w: c for c, w in r2.terms}
    if set(a) != set(b) or not a:
        return False
    w0 = next(iter(a))
    ratio = a[w0] / b[w0]
    return all(a[w] == ratio * b[w] for w in a)
