"""Partial abelian monoids, effect algebras, congruences, quotients.

A partial abelian monoid is a carrier with a zero and a partial binary
addition; the defined-domain is first class, stored as an n*n table with -1
for undefined cells. On top of the basic axioms sit positivity,
cancellativity, the canonical order, effect algebras, the Riesz
decomposition property, congruences with their quotients, orthomodular
lattices read as effect algebras, and dimension equivalences.

Everything returns CheckReports with witnesses; the constructions raise on
violated preconditions. Several checks have an independent characterization
through the relational-monoid layer (RDP vs the order being a monad, quotient
maps vs left adjoints); where both sides are computed the reports cross-check
them and a disagreement raises an internal error rather than picking a side.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .lattice import FinLattice
from .monoid import (
    LaxMorphism,
    MonadCandidate,
    RelMonoid,
    induced_monad,
    is_left_adjoint_relmon,
    is_monad,
)
from .rel import Carrier, FinRel, bits, is_equivalence, is_partial_order, lowest_bit
from .report import CheckReport, InputError, InternalCheckError, PreconditionError


@dataclass(frozen=True)
class PartialAbelianMonoid:
    carrier: Carrier
    zero: int
    plus: tuple[int, ...]  # flattened n*n, -1 marks an undefined cell

    def __post_init__(self) -> None:
        n = self.carrier.size
        if not (isinstance(self.zero, int) and 0 <= self.zero < n):
            raise InputError(f"zero index {self.zero!r} out of range for size {n}")
        if len(self.plus) != n * n:
            raise InputError(
                f"addition table has {len(self.plus)} cells, expected {n * n}"
            )
        for i, c in enumerate(self.plus):
            if not (isinstance(c, int) and -1 <= c < n):
                raise InputError(
                    f"table cell ({i // n}, {i % n}) holds {c!r}, out of range"
                )

    @cached_property
    def n(self) -> int:
        return self.carrier.size

    def defined(self, a: int, b: int) -> bool:
        return self.plus[a * self.n + b] >= 0

    def value(self, a: int, b: int) -> int:
        """Result of a+b; only meaningful when defined(a, b)."""
        return self.plus[a * self.n + b]

    @cached_property
    def cells(self) -> tuple[tuple[int, int, int], ...]:
        n = self.n
        return tuple(
            (i // n, i % n, c) for i, c in enumerate(self.plus) if c >= 0
        )

    @classmethod
    def from_cells(
        cls,
        size: int,
        zero: int,
        cells: Iterable[Sequence[int]],
        labels: Sequence[str] | None = None,
    ) -> "PartialAbelianMonoid":
        table = [-1] * (size * size)
        for cell in cells:
            if len(cell) != 3:
                raise InputError(f"addition cell {list(cell)!r} is not a triple")
            a, b, c = cell
            if not all(isinstance(x, int) and 0 <= x < size for x in (a, b, c)):
                raise InputError(f"addition cell ({a}, {b}, {c}) out of range")
            prev = table[a * size + b]
            if prev >= 0 and prev != c:
                raise InputError(
                    f"conflicting values {prev} and {c} for cell ({a}, {b})"
                )
            table[a * size + b] = c
        carrier = Carrier(size, tuple(labels) if labels is not None else None)
        return cls(carrier, zero, tuple(table))

    def to_json(self) -> dict:
        out: dict = {
            "carrier": self.n,
            "zero": self.zero,
            "plus": [[a, b, c] for a, b, c in self.cells],
        }
        if self.carrier.labels is not None:
            out["labels"] = list(self.carrier.labels)
        return out

    @classmethod
    def from_json(cls, obj: object) -> "PartialAbelianMonoid":
        if not isinstance(obj, dict):
            raise InputError("partial monoid JSON must be an object")
        for key in ("carrier", "zero", "plus"):
            if key not in obj:
                raise InputError(f"partial monoid JSON missing field {key!r}")
        size = obj["carrier"]
        zero = obj["zero"]
        plus = obj["plus"]
        if not isinstance(size, int) or isinstance(size, bool):
            raise InputError("field 'carrier' must be an integer size")
        if not isinstance(zero, int) or isinstance(zero, bool):
            raise InputError("field 'zero' must be an element index")
        if not isinstance(plus, list) or not all(
            isinstance(t, list) and len(t) == 3 for t in plus
        ):
            raise InputError("field 'plus' must be a list of [a, b, a+b] cells")
        labels = obj.get("labels")
        if labels is not None and not (
            isinstance(labels, list) and all(isinstance(s, str) for s in labels)
        ):
            raise InputError("field 'labels' must be a list of strings")
        return cls.from_cells(size, zero, plus, labels)


# ---------------------------------------------------------------------------
# axioms and derived classes


def check_pam_axioms(p: PartialAbelianMonoid) -> CheckReport:
    """Zero totality (P3), commutativity (P2), associativity transfer (P1).

    P1 reads: if b+c and a+(b+c) are defined then a+b and (a+b)+c are defined
    and associativity holds. Checked in the order P3, P2, P1 so the most
    basic breakage is named first.
    """
    n = p.n
    lab = p.carrier.label
    for a in range(n):
        if not p.defined(a, p.zero) or p.value(a, p.zero) != a:
            return CheckReport.failing(
                "pam-axioms",
                "P3",
                (a,),
                f"{lab(a)} + {lab(p.zero)} is not {lab(a)}",
            )
    for a in range(n):
        for b in range(n):
            if p.defined(a, b):
                if not p.defined(b, a) or p.value(a, b) != p.value(b, a):
                    return CheckReport.failing(
                        "pam-axioms",
                        "P2",
                        (a, b),
                        f"{lab(a)} + {lab(b)} defined but not matched by "
                        f"{lab(b)} + {lab(a)}",
                    )
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if not p.defined(b, c):
                    continue
                bc = p.value(b, c)
                if not p.defined(a, bc):
                    continue
                if not p.defined(a, b):
                    return CheckReport.failing(
                        "pam-axioms",
                        "P1",
                        (a, b, c),
                        f"{lab(a)} + ({lab(b)} + {lab(c)}) defined but "
                        f"{lab(a)} + {lab(b)} is not",
                    )
                ab = p.value(a, b)
                if not p.defined(ab, c) or p.value(ab, c) != p.value(a, bc):
                    return CheckReport.failing(
                        "pam-axioms",
                        "P1",
                        (a, b, c),
                        f"({lab(a)} + {lab(b)}) + {lab(c)} does not reassociate",
                    )
    return CheckReport.passing("pam-axioms")


def _require_pam(p: PartialAbelianMonoid) -> None:
    rep = check_pam_axioms(p)
    if not rep.ok:
        raise PreconditionError(f"not a partial abelian monoid: {rep.summary()}")


def is_positive(p: PartialAbelianMonoid) -> CheckReport:
    """No nonzero summands add to zero."""
    _require_pam(p)
    for a in range(p.n):
        for b in range(p.n):
            if (
                p.defined(a, b)
                and p.value(a, b) == p.zero
                and not (a == p.zero and b == p.zero)
            ):
                return CheckReport.failing(
                    "positive",
                    "positivity",
                    (a, b),
                    f"{p.carrier.label(a)} + {p.carrier.label(b)} = "
                    f"{p.carrier.label(p.zero)}",
                )
    return CheckReport.passing("positive")


def is_cancellative(p: PartialAbelianMonoid) -> CheckReport:
    """a+b = a+c forces b = c."""
    _require_pam(p)
    for a in range(p.n):
        seen: dict[int, int] = {}
        for b in range(p.n):
            if p.defined(a, b):
                v = p.value(a, b)
                if v in seen:
                    return CheckReport.failing(
                        "cancellative",
                        "cancellation",
                        (a, seen[v], b),
                        f"{p.carrier.label(a)} + {p.carrier.label(seen[v])} = "
                        f"{p.carrier.label(a)} + {p.carrier.label(b)}",
                    )
                seen[v] = b
    return CheckReport.passing("cancellative")


def is_gea(p: PartialAbelianMonoid) -> CheckReport:
    """Positive and cancellative."""
    pos = is_positive(p)
    if not pos.ok:
        return CheckReport.failing("gea", "positivity", pos.witness, pos.message)
    canc = is_cancellative(p)
    if not canc.ok:
        return CheckReport.failing("gea", "cancellation", canc.witness, canc.message)
    return CheckReport.passing("gea")


def canonical_order(p: PartialAbelianMonoid) -> FinRel:
    """a below c iff some b has a+b = c; a partial order on any GEA."""
    rep = is_gea(p)
    if not rep.ok:
        raise PreconditionError(f"not a generalized effect algebra: {rep.summary()}")
    rows = [0] * p.n
    for a in range(p.n):
        for b in range(p.n):
            if p.defined(a, b):
                rows[a] |= 1 << p.value(a, b)
    order = FinRel(p.carrier, p.carrier, tuple(rows))
    check = is_partial_order(order)
    if not check.ok:
        raise InternalCheckError(
            f"canonical order of a generalized effect algebra must be a "
            f"partial order, but {check.summary()}"
        )
    return order


def is_effect_algebra(p: PartialAbelianMonoid) -> CheckReport:
    """A GEA with a greatest element in its canonical order."""
    order = canonical_order(p)
    full = (1 << p.n) - 1
    down = order.dagger().rows
    for t in range(p.n):
        if down[t] == full:
            return CheckReport.passing("effect-algebra", top=t)
    maximal = [t for t in range(p.n) if order.rows[t] == 1 << t]
    return CheckReport.failing(
        "effect-algebra",
        "upper-bound",
        None,
        "no greatest element",
        maximal=maximal,
    )


def has_rdp(p: PartialAbelianMonoid) -> CheckReport:
    """Riesz decomposition: y below x1+x2 splits as y1+y2 with yi below xi.

    The same condition says the reverse canonical order is a monad order on
    the underlying relational monoid; both sides are computed and compared,
    and a mismatch raises an internal error.
    """
    order = canonical_order(p)
    down = order.dagger().rows
    witness = None
    message = ""
    for x1 in range(p.n):
        if witness:
            break
        for x2 in range(p.n):
            if not p.defined(x1, x2):
                continue
            s = p.value(x1, x2)
            for y in bits(down[s]):
                if not any(
                    p.defined(y1, y2) and p.value(y1, y2) == y
                    for y1 in bits(down[x1])
                    for y2 in bits(down[x2])
                ):
                    witness = (x1, x2, y)
                    message = (
                        f"{p.carrier.label(y)} lies below "
                        f"{p.carrier.label(x1)} + {p.carrier.label(x2)} "
                        "but does not decompose along them"
                    )
                    break
            if witness:
                break
    monad_rep = is_monad(MonadCandidate(to_relmonoid(p), order.dagger()))
    if monad_rep.ok != (witness is None):
        raise InternalCheckError(
            "Riesz decomposition scan and the monad check disagree: "
            f"decomposition witness {witness}, monad says {monad_rep.summary()}"
        )
    if witness is None:
        return CheckReport.passing("rdp", monad_agrees=True)
    return CheckReport.failing(
        "rdp", "decomposition", witness, message, monad_agrees=True
    )


def to_relmonoid(p: PartialAbelianMonoid) -> RelMonoid:
    """The graph of the partial addition as a relational monoid."""
    _require_pam(p)
    return RelMonoid(p.carrier, frozenset([p.zero]), frozenset(p.cells))


def pam_from_relmonoid(m: RelMonoid) -> PartialAbelianMonoid:
    """Inverse of to_relmonoid where it makes sense.

    Requires exactly one unit and a functional multiplication; commutativity
    and the rest are diagnosed by check_pam_axioms, not here.
    """
    if len(m.units) != 1:
        raise InputError(
            f"monoid has {len(m.units)} units, cannot serve as a partial "
            "addition with zero"
        )
    n = m.n
    table = [-1] * (n * n)
    for a1, a2, a in m.triples:
        if table[a1 * n + a2] >= 0:
            raise InputError(
                f"multiplication of ({a1}, {a2}) is not single-valued"
            )
        table[a1 * n + a2] = a
    return PartialAbelianMonoid(m.carrier, next(iter(m.units)), tuple(table))


# ---------------------------------------------------------------------------
# congruences and quotients


@dataclass(frozen=True)
class CongruenceCandidate:
    base: PartialAbelianMonoid
    classes: FinRel

    def __post_init__(self) -> None:
        if (
            self.classes.dom.size != self.base.n
            or self.classes.cod.size != self.base.n
        ):
            raise InputError(
                f"congruence relation is {self.classes.dom.size}->"
                f"{self.classes.cod.size} but the carrier has size {self.base.n}"
            )

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "classes": [[a, b] for a, b in self.classes.pairs()],
        }

    @classmethod
    def from_json(cls, obj: object) -> "CongruenceCandidate":
        if not isinstance(obj, dict):
            raise InputError("congruence JSON must be an object")
        for key in ("base", "classes"):
            if key not in obj:
                raise InputError(f"congruence JSON missing field {key!r}")
        base = PartialAbelianMonoid.from_json(obj["base"])
        rel = FinRel.from_pairs(base.carrier, base.carrier, obj["classes"])
        return cls(base, rel)


def check_congruence(c: CongruenceCandidate) -> CheckReport:
    """C1 equivalence, C2 sum compatibility, C5 decomposition lifting.

    C2: defined sums of related summands are related. C5: if x+y exists and
    is related to z, then z = x1+y1 for some x1 related to x, y1 related to y.
    """
    _require_pam(c.base)
    p, sim = c.base, c.classes
    eq = is_equivalence(sim)
    if not eq.ok:
        return CheckReport.failing("congruence", "C1", eq.witness, eq.message)
    lab = p.carrier.label
    for x1 in range(p.n):
        for y1 in range(p.n):
            if not p.defined(x1, y1):
                continue
            for x2 in bits(sim.rows[x1]):
                for y2 in bits(sim.rows[y1]):
                    if not p.defined(x2, y2):
                        continue
                    if not sim.has(p.value(x1, y1), p.value(x2, y2)):
                        return CheckReport.failing(
                            "congruence",
                            "C2",
                            (x1, y1, x2, y2),
                            f"{lab(x1)}+{lab(y1)} and {lab(x2)}+{lab(y2)} are "
                            "sums of related summands but are unrelated",
                        )
    for x in range(p.n):
        for y in range(p.n):
            if not p.defined(x, y):
                continue
            for z in bits(sim.rows[p.value(x, y)]):
                if not any(
                    p.defined(x1, y1) and p.value(x1, y1) == z
                    for x1 in bits(sim.rows[x])
                    for y1 in bits(sim.rows[y])
                ):
                    return CheckReport.failing(
                        "congruence",
                        "C5",
                        (x, y, z),
                        f"{lab(z)} is related to {lab(x)}+{lab(y)} but has no "
                        "decomposition along related parts",
                    )
    return CheckReport.passing("congruence")


def _class_partition(sim: FinRel) -> tuple[list[int], list[int]]:
    """Class index per element, classes ordered by least member."""
    seen: dict[int, int] = {}
    cls_of = []
    reps: list[int] = []
    for a in range(sim.dom.size):
        row = sim.rows[a]
        if row not in seen:
            seen[row] = len(reps)
            reps.append(a)
        cls_of.append(seen[row])
    return cls_of, reps


def quotient_pam(c: CongruenceCandidate) -> PartialAbelianMonoid:
    """Quotient by a valid congruence; classes indexed by least member.

    The sum of two classes is the class of any defined representative sum;
    all representative choices are re-verified to agree, a disagreement
    raises an internal error.
    """
    rep = check_congruence(c)
    if not rep.ok:
        raise PreconditionError(f"not a congruence: {rep.summary()}")
    p, sim = c.base, c.classes
    cls_of, reps = _class_partition(sim)
    k = len(reps)
    table = [-1] * (k * k)
    for a in range(p.n):
        for b in range(p.n):
            if not p.defined(a, b):
                continue
            i = cls_of[a] * k + cls_of[b]
            v = cls_of[p.value(a, b)]
            if table[i] >= 0 and table[i] != v:
                raise InternalCheckError(
                    "quotient addition is not well defined on classes "
                    f"({cls_of[a]}, {cls_of[b]}) despite a valid congruence"
                )
            table[i] = v
    labels = None
    if p.carrier.labels is not None:
        labels = tuple(f"[{p.carrier.label(r)}]" for r in reps)
    carrier = Carrier(k, labels)
    return PartialAbelianMonoid(carrier, cls_of[p.zero], tuple(table))


def quotient_map_is_left_adjoint(c: CongruenceCandidate) -> CheckReport:
    """Left-adjointness of the class map onto the quotient.

    Holds exactly when only zero is related to zero. The report details
    record that side condition and whether the adjunction-induced order
    equals the congruence.
    """
    rep = check_congruence(c)
    if not rep.ok:
        raise PreconditionError(f"not a congruence: {rep.summary()}")
    p, sim = c.base, c.classes
    quot = quotient_pam(c)
    cls_of, _ = _class_partition(sim)
    rel = FinRel(p.carrier, quot.carrier, tuple(1 << cls_of[a] for a in range(p.n)))
    h = LaxMorphism(to_relmonoid(p), to_relmonoid(quot), rel)
    zero_stray = sim.rows[p.zero] & ~(1 << p.zero)
    details = {
        "zero_faithful": zero_stray == 0,
        "induced_equals_classes": rel.compose(rel.dagger()).rows == sim.rows,
    }
    if zero_stray:
        details["zero_faithful_witness"] = (lowest_bit(zero_stray),)
    adj = is_left_adjoint_relmon(h)
    if adj.ok:
        return CheckReport.passing("quotient-left-adjoint", **details)
    return CheckReport.failing(
        "quotient-left-adjoint", adj.failed, adj.witness, adj.message, **details
    )


def adjoint_induces_c1c2c5(h: LaxMorphism) -> CheckReport:
    """A left adjoint between partial-addition monoids induces a congruence.

    The source monoid must present a partial abelian monoid (single unit,
    functional multiplication). The induced same-image equivalence is run
    through check_congruence; by general theory it must pass, so a failure
    here indicates an implementation fault and the message says so.
    """
    adj = is_left_adjoint_relmon(h)
    if not adj.ok:
        raise PreconditionError(f"not a left adjoint: {adj.summary()}")
    src = pam_from_relmonoid(h.src)
    _require_pam(src)
    monad = induced_monad(h)
    rep = check_congruence(CongruenceCandidate(src, monad.order))
    if rep.ok:
        return CheckReport.passing("adjoint-induces-congruence")
    return CheckReport.failing(
        "adjoint-induces-congruence",
        rep.failed,
        rep.witness,
        f"internal inconsistency, adjoint-induced relation is no congruence: "
        f"{rep.message}",
    )


# ---------------------------------------------------------------------------
# orthomodular lattices and dimension equivalence


@dataclass(frozen=True)
class OmlStructure:
    lattice: FinLattice
    ortho: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.lattice.n
        if len(self.ortho) != n:
            raise InputError(
                f"orthocomplement lists {len(self.ortho)} values for {n} elements"
            )
        for a, c in enumerate(self.ortho):
            if not (isinstance(c, int) and 0 <= c < n):
                raise InputError(f"orthocomplement of {a} is {c!r}, out of range")

    def orthogonal(self, a: int, b: int) -> bool:
        return self.lattice.leq(a, self.ortho[b])

    def to_json(self) -> dict:
        return {"lattice": self.lattice.to_json(), "ortho": list(self.ortho)}

    @classmethod
    def from_json(cls, obj: object) -> "OmlStructure":
        if not isinstance(obj, dict):
            raise InputError("orthomodular lattice JSON must be an object")
        for key in ("lattice", "ortho"):
            if key not in obj:
                raise InputError(f"orthomodular lattice JSON missing field {key!r}")
        lattice = FinLattice.from_json(obj["lattice"])
        ortho = obj["ortho"]
        if not isinstance(ortho, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in ortho
        ):
            raise InputError("field 'ortho' must be a list of element indices")
        return cls(lattice, tuple(ortho))


def validate_oml(s: OmlStructure) -> CheckReport:
    """Orthocomplementation laws plus the orthomodular law."""
    lat = s.lattice
    lab = lat.order.dom.label
    for a in range(lat.n):
        if s.ortho[s.ortho[a]] != a:
            return CheckReport.failing(
                "oml", "involution", (a,), f"{lab(a)} is not its own double complement"
            )
    for a in range(lat.n):
        for b in bits(lat.up_masks[a]):
            if not lat.leq(s.ortho[b], s.ortho[a]):
                return CheckReport.failing(
                    "oml",
                    "antitone",
                    (a, b),
                    f"{lab(a)} below {lab(b)} but complements are not reversed",
                )
    for a in range(lat.n):
        if lat.join_of(a, s.ortho[a]) != lat.top:
            return CheckReport.failing(
                "oml", "complement-join", (a,), f"{lab(a)} join its complement is not the top"
            )
        if lat.meet_of(a, s.ortho[a]) != lat.bottom:
            return CheckReport.failing(
                "oml", "complement-meet", (a,), f"{lab(a)} meet its complement is not the bottom"
            )
    for a in range(lat.n):
        for b in bits(lat.up_masks[a]):
            if lat.join_of(a, lat.meet_of(b, s.ortho[a])) != b:
                return CheckReport.failing(
                    "oml",
                    "orthomodular",
                    (a, b),
                    f"{lab(b)} does not rebuild from {lab(a)} and the complement part",
                )
    return CheckReport.passing("oml")


def oml_as_effect_algebra(s: OmlStructure) -> PartialAbelianMonoid:
    """Partial addition on an orthomodular lattice: a+b = a join b when a
    is below the complement of b."""
    rep = validate_oml(s)
    if not rep.ok:
        raise InputError(f"not an orthomodular lattice: {rep.summary()}")
    lat = s.lattice
    n = lat.n
    table = [-1] * (n * n)
    for a in range(n):
        for b in range(n):
            if s.orthogonal(a, b):
                table[a * n + b] = lat.join_of(a, b)
    return PartialAbelianMonoid(lat.order.dom, lat.bottom, tuple(table))


def _orthogonal_families(s: OmlStructure) -> list[tuple[int, ...]]:
    """Nonempty pairwise-orthogonal subsets as sorted tuples, lexicographic."""
    n = s.lattice.n
    out: list[tuple[int, ...]] = []

    def extend(start: int, cur: tuple[int, ...]) -> None:
        for x in range(start, n):
            if all(s.orthogonal(y, x) for y in cur):
                nxt = cur + (x,)
                out.append(nxt)
                extend(x + 1, nxt)

    extend(0, ())
    return out


def _family_matches(fam1: tuple[int, ...], fam2: tuple[int, ...], sim: FinRel) -> bool:
    """Whether some pairing relates the families memberwise."""
    used = [False] * len(fam2)

    def go(i: int) -> bool:
        if i == len(fam1):
            return True
        for j, g in enumerate(fam2):
            if not used[j] and sim.has(fam1[i], g):
                used[j] = True
                if go(i + 1):
                    return True
                used[j] = False
        return False

    return go(0)


def _join_of(lat: FinLattice, fam: tuple[int, ...]) -> int:
    acc = lat.bottom
    for x in fam:
        acc = lat.join_of(acc, x)
    return acc


def _dimension_clause_b(s: OmlStructure, sim: FinRel) -> tuple[int, int, int] | None:
    """First failure of the decomposition-transfer clause, if any."""
    lat = s.lattice
    for a1 in range(lat.n):
        for a2 in range(lat.n):
            if not s.orthogonal(a1, a2):
                continue
            for b in bits(sim.rows[lat.join_of(a1, a2)]):
                if not any(
                    s.orthogonal(b1, b2)
                    and lat.join_of(b1, b2) == b
                    and sim.has(b1, a1)
                    and sim.has(b2, a2)
                    for b1 in range(lat.n)
                    for b2 in range(lat.n)
                ):
                    return (a1, a2, b)
    return None


def is_dimension_equivalence(
    s: OmlStructure, sim: FinRel, literal_joins: bool = False
) -> CheckReport:
    """Dimension-equivalence clauses for a relation on an orthomodular lattice.

    Checked in order: equivalence; (A) only zero is related to zero;
    (B) a sum decomposition transfers across the relation; (C) memberwise
    related pairwise-orthogonal families have related joins (equal joins
    instead when literal_joins is set); (D) non-orthogonal elements dominate
    a related nonzero pair.
    """
    rep = validate_oml(s)
    if not rep.ok:
        raise InputError(f"not an orthomodular lattice: {rep.summary()}")
    lat = s.lattice
    if sim.dom.size != lat.n or sim.cod.size != lat.n:
        raise InputError("relation does not live on the lattice carrier")
    lab = lat.order.dom.label
    eq = is_equivalence(sim)
    if not eq.ok:
        return CheckReport.failing("dimension-equivalence", "equivalence", eq.witness, eq.message)
    stray = sim.rows[lat.bottom] & ~(1 << lat.bottom)
    if stray:
        a = lowest_bit(stray)
        return CheckReport.failing(
            "dimension-equivalence",
            "A",
            (a,),
            f"nonzero {lab(a)} is related to the bottom",
        )
    b_wit = _dimension_clause_b(s, sim)
    if b_wit is not None:
        a1, a2, b = b_wit
        return CheckReport.failing(
            "dimension-equivalence",
            "B",
            (a1, a2, b),
            f"{lab(b)} is related to {lab(a1)} join {lab(a2)} but "
            "has no matching orthogonal decomposition",
        )
    families = _orthogonal_families(s)
    for fam1 in families:
        for fam2 in families:
            if len(fam1) != len(fam2):
                continue
            if not _family_matches(fam1, fam2, sim):
                continue
            j1 = _join_of(lat, fam1)
            j2 = _join_of(lat, fam2)
            bad = j1 != j2 if literal_joins else not sim.has(j1, j2)
            if bad:
                kind = "equal" if literal_joins else "related"
                return CheckReport.failing(
                    "dimension-equivalence",
                    "C",
                    (j1, j2),
                    f"memberwise-related orthogonal families have joins "
                    f"{lab(j1)} and {lab(j2)}, which are not {kind}",
                    family_1=list(fam1),
                    family_2=list(fam2),
                )
    for a in range(lat.n):
        for b in range(lat.n):
            if s.orthogonal(a, b):
                continue
            below_a = lat.down_masks[a] & ~(1 << lat.bottom)
            found = any(
                sim.rows[a1] & lat.down_masks[b] & ~(1 << lat.bottom)
                for a1 in bits(below_a)
            )
            if not found:
                return CheckReport.failing(
                    "dimension-equivalence",
                    "D",
                    (a, b),
                    f"non-orthogonal {lab(a)}, {lab(b)} dominate no related "
                    "nonzero pair",
                )
    return CheckReport.passing("dimension-equivalence")
