"""Named small structures used across tests, samples, and docs.

Everything here is rebuilt on call from first principles (orders, tables,
truncation rules); no structure is a frozen constant, so a bug in a
constructor shows up as a checker failure rather than a stale fixture.
"""

from __future__ import annotations

from itertools import product

from .lattice import FinLattice, lattice_from_order
from .monoid import LaxMorphism, RelMonoid, from_monoid_table
from .pam import OmlStructure, PartialAbelianMonoid, oml_as_effect_algebra, to_relmonoid
from .rel import Carrier, FinRel
from .report import InputError


# -- monoids ----------------------------------------------------------------


def z2_monoid() -> RelMonoid:
    return from_monoid_table([[0, 1], [1, 0]], 0, labels=("0", "1"))


def trivial_monoid() -> RelMonoid:
    return from_monoid_table([[0]], 0)


def chain_pam(n: int) -> PartialAbelianMonoid:
    """{0..n-1} with a+b defined iff the integer sum stays below n."""
    if n < 1:
        raise InputError("chain needs at least one element")
    cells = [
        (a, b, a + b) for a in range(n) for b in range(n) if a + b < n
    ]
    return PartialAbelianMonoid.from_cells(n, 0, cells)


def truncated_nat_monoid(top: int) -> RelMonoid:
    """Additive naturals {0..top}, the sum defined while it fits."""
    return to_relmonoid(chain_pam(top + 1))


def divisibility_order(top: int) -> FinRel:
    """(a, b) related iff a divides b, on {0..top}; zero divides only zero."""
    carrier = Carrier(top + 1)
    pairs = [
        (a, b)
        for a in range(top + 1)
        for b in range(top + 1)
        if (b % a == 0 if a else b == 0)
    ]
    return FinRel.from_pairs(carrier, carrier, pairs)


def _words(alphabet: str, maxlen: int) -> list[str]:
    out = [""]
    for k in range(1, maxlen + 1):
        out.extend("".join(w) for w in product(alphabet, repeat=k))
    return out


def _is_subword(small: str, big: str) -> bool:
    it = iter(big)
    return all(ch in it for ch in small)


def words_monoid(maxlen: int, alphabet: str = "ab") -> RelMonoid:
    """Free monoid on the alphabet truncated at maxlen; "eps" labels the
    empty word."""
    words = _words(alphabet, maxlen)
    index = {w: i for i, w in enumerate(words)}
    mult = [
        (index[u], index[v], index[u + v])
        for u in words
        for v in words
        if len(u) + len(v) <= maxlen
    ]
    labels = tuple(w if w else "eps" for w in words)
    return RelMonoid.make(len(words), [0], mult, labels)


def subword_order(maxlen: int, alphabet: str = "ab") -> FinRel:
    """(x, y) related iff y embeds into x as a scattered subword."""
    words = _words(alphabet, maxlen)
    carrier = Carrier(len(words), tuple(w if w else "eps" for w in words))
    pairs = [
        (i, j)
        for i, x in enumerate(words)
        for j, y in enumerate(words)
        if _is_subword(y, x)
    ]
    return FinRel.from_pairs(carrier, carrier, pairs)


def doubling_endo(top: int) -> FinRel:
    """Graph of a -> 2a on {0..top}, defined while the double fits."""
    carrier = Carrier(top + 1)
    pairs = [(a, 2 * a) for a in range(top + 1) if 2 * a <= top]
    return FinRel.from_pairs(carrier, carrier, pairs)


def power_order(top: int, k: int = 2) -> FinRel:
    """(a, b) related iff b = a * k^i for some i >= 0, within {0..top}."""
    carrier = Carrier(top + 1)
    pairs = []
    for a in range(top + 1):
        b = a
        while b <= top:
            pairs.append((a, b))
            if b == 0:
                break
            b *= k
    return FinRel.from_pairs(carrier, carrier, pairs)


def degree_morphism(q: int = 2, d: int = 2) -> LaxMorphism:
    """Degree map from truncated monic polynomials to truncated addition."""
    from .monoid import poly_monoid

    src = poly_monoid(q, d)
    dst = truncated_nat_monoid(d)
    degree_of = []
    for i in range(src.n):
        # polynomial index layout: q^0 + ... + q^(k-1) entries precede degree k
        total, k = 0, 0
        while total + q**k <= i:
            total += q**k
            k += 1
        degree_of.append(k)
    rel = FinRel.from_pairs(
        src.carrier, dst.carrier, [(i, degree_of[i]) for i in range(src.n)]
    )
    return LaxMorphism(src, dst, rel)


# -- lattices -----------------------------------------------------------------


def chain_lattice(n: int) -> FinLattice:
    carrier = Carrier(n)
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    return lattice_from_order(FinRel.from_pairs(carrier, carrier, pairs))


def boolean_lattice(k: int) -> FinLattice:
    """Subsets of a k-element set ordered by inclusion; index = bitmask."""
    n = 1 << k
    labels = tuple(
        "{" + ",".join(str(i) for i in range(k) if m >> i & 1) + "}"
        for m in range(n)
    )
    carrier = Carrier(n, labels)
    pairs = [(a, b) for a in range(n) for b in range(n) if a & ~b == 0]
    return lattice_from_order(FinRel.from_pairs(carrier, carrier, pairs))


def m3_lattice() -> FinLattice:
    """Bottom, three incomparable atoms, top: the diamond."""
    carrier = Carrier(5, ("0", "x", "y", "z", "1"))
    pairs = [(0, i) for i in range(5)] + [(i, i) for i in range(1, 5)]
    pairs += [(i, 4) for i in range(1, 4)]
    return lattice_from_order(FinRel.from_pairs(carrier, carrier, pairs))


def n5_lattice() -> FinLattice:
    """Bottom, a chain x < y, a lone z, top: the pentagon."""
    carrier = Carrier(5, ("0", "x", "y", "z", "1"))
    pairs = [(0, i) for i in range(5)] + [(i, i) for i in range(1, 5)]
    pairs += [(1, 2), (1, 4), (2, 4), (3, 4)]
    return lattice_from_order(FinRel.from_pairs(carrier, carrier, pairs))


# -- orthomodular structures --------------------------------------------------


def boolean_oml(k: int) -> OmlStructure:
    lat = boolean_lattice(k)
    full = (1 << k) - 1
    return OmlStructure(lat, tuple(full & ~m for m in range(1 << k)))


def mo2_oml() -> OmlStructure:
    """Two incomparable complement pairs of atoms between bottom and top."""
    carrier = Carrier(6, ("0", "a", "a'", "b", "b'", "1"))
    pairs = [(0, i) for i in range(6)] + [(i, i) for i in range(1, 6)]
    pairs += [(i, 5) for i in range(1, 5)]
    lat = lattice_from_order(FinRel.from_pairs(carrier, carrier, pairs))
    return OmlStructure(lat, (5, 2, 1, 4, 3, 0))


def boolean22_pam() -> PartialAbelianMonoid:
    """The four-element Boolean effect algebra: two atoms summing to the top."""
    return oml_as_effect_algebra(boolean_oml(2))


def diamond_pam() -> PartialAbelianMonoid:
    """Effect algebra 0, a, b, 1 with a+a = 1 = b+b and a+b undefined."""
    cells = [(0, x, x) for x in range(4)] + [(x, 0, x) for x in range(4)]
    cells += [(1, 1, 3), (2, 2, 3)]
    return PartialAbelianMonoid.from_cells(4, 0, cells, ("0", "a", "b", "1"))
