"""Regenerate the demo JSON files in this directory.

Run from the repository root: python3 samples/make_samples.py
"""

import json
import pathlib

from relmon import catalog
from relmon.monoid import MonadCandidate, interval_monoid
from relmon.pam import CongruenceCandidate, canonical_order, to_relmonoid
from relmon.rel import Carrier, FinRel

HERE = pathlib.Path(__file__).resolve().parent


def dump(name: str, payload: dict) -> None:
    (HERE / name).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def main() -> None:
    dump("z2.json", catalog.z2_monoid().to_json())
    dump("interval6.json", interval_monoid(6).to_json())

    # the diamond effect algebra carried by >= (the dagger of its sum order);
    # check-monad rejects it and the witness is the decomposition that fails
    dia = catalog.diamond_pam()
    cand = MonadCandidate(to_relmonoid(dia), canonical_order(dia).dagger())
    dump("diamond_ge.json", cand.to_json())
    dump("diamond_pam.json", dia.to_json())

    dump("chain5_pam.json", catalog.chain_pam(5).to_json())

    # glue the two atoms of the Boolean square; zero-faithful, quotient is a chain
    b22 = catalog.boolean22_pam()
    blocks = [[0], [1, 2], [3]]
    pairs = [(a, b) for blk in blocks for a in blk for b in blk]
    car = Carrier(b22.n)
    dump(
        "boolean22_congruence.json",
        CongruenceCandidate(b22, FinRel.from_pairs(car, car, pairs)).to_json(),
    )

    dump("n5.json", catalog.n5_lattice().to_json())
    dump("m3.json", catalog.m3_lattice().to_json())
    dump("boolean22_pam.json", catalog.boolean22_pam().to_json())

    mo2 = catalog.mo2_oml()
    dump("mo2_oml.json", mo2.to_json())
    dump("mo2_identity_rel.json", FinRel.identity(mo2.lattice.order.dom).to_json())

    dump("degree_map.json", catalog.degree_morphism(2, 2).to_json())

    m8 = catalog.truncated_nat_monoid(8)
    dump("doubling_endo.json", MonadCandidate(m8, catalog.doubling_endo(8)).to_json())


if __name__ == "__main__":
    main()
