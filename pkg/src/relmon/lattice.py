"""Finite lattices and the perspectivity order on their quotient monoids.

A lattice is stored as a partial order together with derived meet and join
tables. The quotients b/a of a lattice carry the order b/a up-to d/c iff
a = b meet c and d = b join c; whether that order is a monad order on the
quotient monoid is equivalent to modularity of the lattice, and both sides
of that equivalence are implemented as separate checkers so the comparison
itself is testable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .monoid import MonadCandidate, RelMonoid, from_poset_quotients, is_monad, quotient_pairs
from .rel import Carrier, FinRel, bits, is_partial_order, lowest_bit
from .report import CheckReport, InputError, PreconditionError


@dataclass(frozen=True)
class FinLattice:
    order: FinRel
    meet: tuple[int, ...]
    join: tuple[int, ...]

    @cached_property
    def n(self) -> int:
        return self.order.dom.size

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        return self.order.rows

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        return self.order.dagger().rows

    def leq(self, x: int, y: int) -> bool:
        return bool(self.order.rows[x] >> y & 1)

    def meet_of(self, x: int, y: int) -> int:
        return self.meet[x * self.n + y]

    def join_of(self, x: int, y: int) -> int:
        return self.join[x * self.n + y]

    @cached_property
    def bottom(self) -> int:
        full = (1 << self.n) - 1
        return next(x for x in range(self.n) if self.up_masks[x] == full)

    @cached_property
    def top(self) -> int:
        full = (1 << self.n) - 1
        return next(x for x in range(self.n) if self.down_masks[x] == full)

    def to_json(self) -> dict:
        return {
            "carrier": self.n,
            "order": [[a, b] for a, b in self.order.pairs()],
        }

    @classmethod
    def from_json(cls, obj: object) -> "FinLattice":
        if not isinstance(obj, dict):
            raise InputError("lattice JSON must be an object")
        for key in ("carrier", "order"):
            if key not in obj:
                raise InputError(f"lattice JSON missing field {key!r}")
        size = obj["carrier"]
        if not isinstance(size, int) or isinstance(size, bool):
            raise InputError("field 'carrier' must be an integer size")
        carrier = Carrier(size)
        rel = FinRel.from_pairs(carrier, carrier, obj["order"])
        # reflexive pairs may be omitted in files
        rel = FinRel(carrier, carrier, tuple(row | 1 << a for a, row in enumerate(rel.rows)))
        return lattice_from_order(rel)


def lattice_from_order(order: FinRel) -> FinLattice:
    """Derive meet and join tables; rejects non-lattices naming the bad pair."""
    rep = is_partial_order(order)
    if not rep.ok:
        raise InputError(f"not a partial order: {rep.summary()}")
    n = order.dom.size
    if n == 0:
        raise InputError("a lattice needs at least one element")
    up = order.rows
    down = order.dagger().rows
    meet = [0] * (n * n)
    join = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            below = down[x] & down[y]
            m = next((z for z in bits(below) if below & ~down[z] == 0), None)
            if m is None:
                raise InputError(f"not a lattice: pair ({x}, {y}) has no meet")
            above = up[x] & up[y]
            j = next((z for z in bits(above) if above & ~up[z] == 0), None)
            if j is None:
                raise InputError(f"not a lattice: pair ({x}, {y}) has no join")
            meet[x * n + y] = m
            join[x * n + y] = j
    return FinLattice(order, tuple(meet), tuple(join))


def is_modular(lat: FinLattice) -> CheckReport:
    """Modular law: x <= y implies y meet (x join z) = x join (y meet z)."""
    n = lat.n
    for x in range(n):
        for y in bits(lat.up_masks[x]):
            for z in range(n):
                lhs = lat.meet_of(y, lat.join_of(x, z))
                rhs = lat.join_of(x, lat.meet_of(y, z))
                if lhs != rhs:
                    lab = lat.order.dom.label
                    return CheckReport.failing(
                        "modular",
                        "modular-law",
                        (x, y, z),
                        f"{lab(y)} meet ({lab(x)} join {lab(z)}) = {lab(lhs)} "
                        f"but {lab(x)} join ({lab(y)} meet {lab(z)}) = {lab(rhs)}",
                    )
    return CheckReport.passing("modular")


@dataclass(frozen=True)
class QuotientOrder:
    """The quotient monoid of a lattice with its perspectivity order."""

    qmonoid: RelMonoid
    arrow: FinRel


def build_quotient_order(lat: FinLattice) -> QuotientOrder:
    """Order on quotients: b/a up-to d/c iff a = b meet c and d = b join c."""
    qmonoid = from_poset_quotients(lat.order)
    quots = quotient_pairs(lat.order)
    k = len(quots)
    rows = [0] * k
    for i, (a, b) in enumerate(quots):
        for j, (c, d) in enumerate(quots):
            if a == lat.meet_of(b, c) and d == lat.join_of(b, c):
                rows[i] |= 1 << j
    arrow = FinRel(qmonoid.carrier, qmonoid.carrier, tuple(rows))
    return QuotientOrder(qmonoid, arrow)


def check_star_star(lat: FinLattice) -> CheckReport:
    """Perspectivity decomposition property of a lattice.

    For quotients b/a, c/b, c'/a' with c/a up-to c'/a', some b' between a'
    and c' must satisfy b/a up-to b'/a' and c/b up-to c'/b'. Holds exactly
    on modular lattices. Witness: the three quotient indices.
    """
    quots = quotient_pairs(lat.order)
    index = {q: i for i, q in enumerate(quots)}
    qcarrier = Carrier(
        len(quots),
        tuple(f"{lat.order.dom.label(b)}/{lat.order.dom.label(a)}" for a, b in quots),
    )

    def upto(low1: int, hi1: int, low2: int, hi2: int) -> bool:
        return low1 == lat.meet_of(hi1, low2) and hi2 == lat.join_of(hi1, low2)

    for a, b in quots:
        for c in bits(lat.up_masks[b]):
            for ap, cp in quots:
                if not upto(a, c, ap, cp):
                    continue
                ok = any(
                    upto(a, b, ap, bp) and upto(b, c, bp, cp)
                    for bp in bits(lat.up_masks[ap] & lat.down_masks[cp])
                )
                if not ok:
                    wit = (index[(a, b)], index[(b, c)], index[(ap, cp)])
                    return CheckReport.failing(
                        "star-star",
                        "decomposition",
                        wit,
                        f"quotients {qcarrier.render(wit)} admit no midpoint",
                    )
    return CheckReport.passing("star-star")


def check_qa_monad_iff_modular(lat: FinLattice) -> CheckReport:
    """Agreement between the quotient-order monad check and modularity."""
    qo = build_quotient_order(lat)
    monad_rep = is_monad(MonadCandidate(qo.qmonoid, qo.arrow))
    mod_rep = is_modular(lat)
    details = {
        "qa_monad": monad_rep.ok,
        "modular": mod_rep.ok,
        "qa_monad_report": monad_rep,
        "modular_report": mod_rep,
    }
    if monad_rep.ok == mod_rep.ok:
        return CheckReport.passing("qa-monad-iff-modular", **details)
    return CheckReport.failing(
        "qa-monad-iff-modular",
        "agreement",
        None,
        f"quotient-order monad check says {monad_rep.ok} "
        f"but modularity says {mod_rep.ok}",
        **details,
    )


def q_functor(v: FinRel, src: FinLattice, dst: FinLattice) -> FinRel:
    """Quotient map b/a -> v(b)/v(a) of a lattice homomorphism v.

    v must be a mapping src -> dst preserving binary meets and joins.
    """
    if v.dom.size != src.n or v.cod.size != dst.n:
        raise InputError("map does not connect the two lattice carriers")
    if not v.is_map():
        raise PreconditionError("lattice homomorphism must be a mapping")
    f = [lowest_bit(row) for row in v.rows]
    for x in range(src.n):
        for y in range(src.n):
            if f[src.meet_of(x, y)] != dst.meet_of(f[x], f[y]):
                raise PreconditionError(
                    f"map does not preserve the meet of ({x}, {y})"
                )
            if f[src.join_of(x, y)] != dst.join_of(f[x], f[y]):
                raise PreconditionError(
                    f"map does not preserve the join of ({x}, {y})"
                )
    src_quots = quotient_pairs(src.order)
    dst_index = {q: i for i, q in enumerate(quotient_pairs(dst.order))}
    rows = tuple(1 << dst_index[(f[a], f[b])] for a, b in src_quots)
    return FinRel(
        Carrier(len(src_quots)), Carrier(len(dst_index)), rows
    )
