"""Finite binary relations stored as bit rows.

A carrier is an index set {0, ..., size-1} with optional display labels. A
relation from A to B keeps one Python int per element of A, the bitmask of its
images in B. Composition is then a row-by-row bitwise OR, i.e. a boolean
matrix product at O(n^3 / wordsize), and all the order/equivalence checks are
mask arithmetic. The empty carrier is legal everywhere.

Relations serialize as {"dom": n, "cod": m, "pairs": [[a, b], ...]}; pair
order is irrelevant on input and lexicographic on output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .report import CheckReport, InputError, PreconditionError


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Carrier:
    """An index set 0..size-1; labels are cosmetic and never affect checks."""

    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.size < 0:
            raise InputError("carrier size must be nonnegative")
        if self.labels is not None:
            if len(self.labels) != self.size:
                raise InputError(
                    f"carrier has {self.size} elements but {len(self.labels)} labels"
                )
            if len(set(self.labels)) != self.size:
                raise InputError("carrier labels must be distinct")

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(i)

    def render(self, elems: Iterable[int]) -> str:
        return "(" + ", ".join(self.label(i) for i in elems) + ")"


@dataclass(frozen=True)
class FinRel:
    """A relation dom -> cod; rows[a] is the bitmask of b with (a, b) related."""

    dom: Carrier
    cod: Carrier
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.dom.size:
            raise InputError(
                f"relation has {len(self.rows)} rows for a domain of size {self.dom.size}"
            )
        full = (1 << self.cod.size) - 1
        for a, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise InputError(f"row {a} has bits outside the codomain")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_pairs(
        cls, dom: Carrier, cod: Carrier, pairs: Iterable[Sequence[int]]
    ) -> "FinRel":
        rows = [0] * dom.size
        for pair in pairs:
            if len(pair) != 2:
                raise InputError(f"relation pair {list(pair)!r} is not a 2-element list")
            a, b = pair
            if not (isinstance(a, int) and isinstance(b, int)):
                raise InputError(f"relation pair {list(pair)!r} must hold integers")
            if not (0 <= a < dom.size and 0 <= b < cod.size):
                raise InputError(f"relation pair ({a}, {b}) out of range")
            rows[a] |= 1 << b
        return cls(dom, cod, tuple(rows))

    @classmethod
    def identity(cls, carrier: Carrier) -> "FinRel":
        return cls(carrier, carrier, tuple(1 << a for a in range(carrier.size)))

    @classmethod
    def empty(cls, dom: Carrier, cod: Carrier) -> "FinRel":
        return cls(dom, cod, (0,) * dom.size)

    @classmethod
    def full(cls, dom: Carrier, cod: Carrier) -> "FinRel":
        mask = (1 << cod.size) - 1
        return cls(dom, cod, (mask,) * dom.size)

    # -- basic queries -----------------------------------------------------

    def has(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.dom.size) for b in bits(self.rows[a])]

    def count(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def is_map(self) -> bool:
        """True when every domain element has exactly one image."""
        return all(row.bit_count() == 1 for row in self.rows)

    def map_values(self) -> list[int]:
        if not self.is_map():
            raise PreconditionError("relation is not a mapping")
        return [lowest_bit(row) for row in self.rows]

    def contains(self, other: "FinRel") -> bool:
        _require_parallel(other, self)
        return all(o & ~s == 0 for o, s in zip(other.rows, self.rows))

    # -- algebra -----------------------------------------------------------

    def compose(self, other: "FinRel") -> "FinRel":
        """Relational composite "self then other" (dom(self) -> cod(other))."""
        if self.cod.size != other.dom.size:
            raise InputError(
                f"cannot compose: middle carriers have sizes {self.cod.size} and {other.dom.size}"
            )
        orows = other.rows
        rows = []
        for row in self.rows:
            acc = 0
            m = row
            while m:
                low = m & -m
                acc |= orows[low.bit_length() - 1]
                m ^= low
            rows.append(acc)
        return FinRel(self.dom, other.cod, tuple(rows))

    def dagger(self) -> "FinRel":
        """Transpose; the dagger involution of the relation."""
        rows = [0] * self.cod.size
        for a, row in enumerate(self.rows):
            m = row
            while m:
                low = m & -m
                rows[low.bit_length() - 1] |= 1 << a
                m ^= low
        return FinRel(self.cod, self.dom, tuple(rows))

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "dom": self.dom.size,
            "cod": self.cod.size,
            "pairs": [[a, b] for a, b in self.pairs()],
        }

    @classmethod
    def from_json(cls, obj: object) -> "FinRel":
        if not isinstance(obj, dict):
            raise InputError("relation JSON must be an object")
        for key in ("dom", "cod", "pairs"):
            if key not in obj:
                raise InputError(f"relation JSON missing field {key!r}")
        dom, cod, pairs = obj["dom"], obj["cod"], obj["pairs"]
        if not isinstance(dom, int) or isinstance(dom, bool):
            raise InputError("field 'dom' must be an integer")
        if not isinstance(cod, int) or isinstance(cod, bool):
            raise InputError("field 'cod' must be an integer")
        if not isinstance(pairs, list):
            raise InputError("field 'pairs' must be a list of [a, b] pairs")
        return cls.from_pairs(Carrier(dom), Carrier(cod), pairs)


@dataclass(frozen=True)
class TwoCell:
    """An inclusion claim between parallel relations, with a counterexample."""

    lhs: FinRel
    rhs: FinRel
    holds: bool
    counterexample: tuple[int, int] | None = None


def _require_parallel(f: FinRel, g: FinRel) -> None:
    if f.dom.size != g.dom.size or f.cod.size != g.cod.size:
        raise InputError(
            "relations are not parallel: "
            f"{f.dom.size}x{f.cod.size} vs {g.dom.size}x{g.cod.size}"
        )


def _require_endo(f: FinRel) -> None:
    if f.dom.size != f.cod.size:
        raise InputError(
            f"expected an endo-relation, got {f.dom.size} -> {f.cod.size}"
        )


def is_subcell(f: FinRel, g: FinRel) -> TwoCell:
    """Whether f is contained in g; counterexample is the first extra pair."""
    _require_parallel(f, g)
    for a, (fr, gr) in enumerate(zip(f.rows, g.rows)):
        extra = fr & ~gr
        if extra:
            return TwoCell(f, g, False, (a, lowest_bit(extra)))
    return TwoCell(f, g, True)


def union(rels: Sequence[FinRel]) -> FinRel:
    """Pairwise union of a nonempty family of parallel relations."""
    if not rels:
        raise InputError("union requires a nonempty family")
    first = rels[0]
    for other in rels[1:]:
        _require_parallel(first, other)
    rows = tuple(
        _or_all(r.rows[a] for r in rels) for a in range(first.dom.size)
    )
    return FinRel(first.dom, first.cod, rows)


def _or_all(masks: Iterable[int]) -> int:
    acc = 0
    for m in masks:
        acc |= m
    return acc


def is_left_adjoint_rel(f: FinRel, g: FinRel) -> CheckReport:
    """Check f -| g in the relation 2-category.

    Requires id_dom ⊆ (f then g) and (g then f) ⊆ id_cod; the report records
    which inclusion fails, with the offending pair as witness. Holds exactly
    when f is a mapping and g is its transpose.
    """
    if g.dom.size != f.cod.size or g.cod.size != f.dom.size:
        raise InputError(
            "adjoint candidate has mismatched carriers: "
            f"f is {f.dom.size}->{f.cod.size} but g is {g.dom.size}->{g.cod.size}"
        )
    for a in range(f.dom.size):
        acc = 0
        for b in bits(f.rows[a]):
            acc |= g.rows[b]
        if not acc >> a & 1:
            return CheckReport.failing(
                "left-adjoint-rel",
                "unit",
                (a, a),
                f"({a}, {a}) is missing from the round trip through f and g",
            )
    for b in range(g.dom.size):
        acc = 0
        for a in bits(g.rows[b]):
            acc |= f.rows[a]
        extra = acc & ~(1 << b)
        if extra:
            return CheckReport.failing(
                "left-adjoint-rel",
                "counit",
                (b, lowest_bit(extra)),
                f"({b}, {lowest_bit(extra)}) appears in the round trip through g and f",
            )
    return CheckReport.passing("left-adjoint-rel")


def kernel(f: FinRel) -> FinRel:
    """Fiber equivalence of a mapping: relates a, a' iff f(a) = f(a')."""
    if not f.is_map():
        bad = next(a for a, row in enumerate(f.rows) if row.bit_count() != 1)
        raise PreconditionError(
            f"kernel requires a mapping; element {bad} has {f.rows[bad].bit_count()} images"
        )
    return f.compose(f.dagger())


def refl_trans_closure(f: FinRel) -> FinRel:
    """Least reflexive-transitive relation containing f.

    Seeds with the identity and squares until fixpoint, so the loop count is
    logarithmic in the carrier size.
    """
    _require_endo(f)
    rows = tuple(row | (1 << a) for a, row in enumerate(f.rows))
    while True:
        squared = []
        for row in rows:
            acc = 0
            m = row
            while m:
                low = m & -m
                acc |= rows[low.bit_length() - 1]
                m ^= low
            squared.append(acc)
        squared = tuple(squared)
        if squared == rows:
            return FinRel(f.dom, f.cod, rows)
        rows = squared


def is_preorder(f: FinRel) -> CheckReport:
    """Reflexivity and transitivity, with the first missing pair as witness."""
    _require_endo(f)
    for a, row in enumerate(f.rows):
        if not row >> a & 1:
            return CheckReport.failing(
                "preorder", "reflexivity", (a, a), f"missing ({a}, {a})"
            )
    for a, row in enumerate(f.rows):
        acc = 0
        m = row
        while m:
            low = m & -m
            acc |= f.rows[low.bit_length() - 1]
            m ^= low
        extra = acc & ~row
        if extra:
            c = lowest_bit(extra)
            return CheckReport.failing(
                "preorder",
                "transitivity",
                (a, c),
                f"({a}, {c}) is reachable in two steps but not related",
            )
    return CheckReport.passing("preorder")


def is_partial_order(f: FinRel) -> CheckReport:
    rep = is_preorder(f)
    if not rep.ok:
        return CheckReport.failing("partial-order", rep.failed, rep.witness, rep.message)
    for a, row in enumerate(f.rows):
        for b in bits(row):
            if a != b and f.rows[b] >> a & 1:
                return CheckReport.failing(
                    "partial-order",
                    "antisymmetry",
                    (a, b),
                    f"({a}, {b}) and ({b}, {a}) both related",
                )
    return CheckReport.passing("partial-order")


def is_equivalence(f: FinRel) -> CheckReport:
    rep = is_preorder(f)
    if not rep.ok:
        return CheckReport.failing("equivalence", rep.failed, rep.witness, rep.message)
    for a, row in enumerate(f.rows):
        for b in bits(row):
            if not f.rows[b] >> a & 1:
                return CheckReport.failing(
                    "equivalence",
                    "symmetry",
                    (a, b),
                    f"({a}, {b}) related but ({b}, {a}) is not",
                )
    return CheckReport.passing("equivalence")


def product_carrier(a: Carrier, b: Carrier) -> Carrier:
    """Cartesian product carrier, row-major: (x, y) maps to x * b.size + y."""
    labels = None
    if a.labels is not None and b.labels is not None:
        labels = tuple(
            f"({la}, {lb})" for la in a.labels for lb in b.labels
        )
    return Carrier(a.size * b.size, labels)


def product_rel(f: FinRel, g: FinRel) -> FinRel:
    """Componentwise product relation on the row-major product carriers."""
    dom = product_carrier(f.dom, g.dom)
    cod = product_carrier(f.cod, g.cod)
    width = g.cod.size
    rows = []
    for frow in f.rows:
        for grow in g.rows:
            acc = 0
            for b in bits(frow):
                acc |= grow << (b * width)
            rows.append(acc)
    return FinRel(dom, cod, tuple(rows))
