"""Regenerate the JSON bundles in ``fixtures/`` from the builders.

Run from the repository root: ``python3 scripts/make_fixtures.py``.
"""

from __future__ import annotations

import copy
from pathlib import Path

from hopfforge import bundlefile as bf
from hopfforge import catalog
from hopfforge import constructors as C
from hopfforge.crossprod import CrossDatum
from hopfforge.field import FieldSpec
from hopfforge.gvec import GVec
from hopfforge.projection import projection_from_datum

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def trivial_datum() -> CrossDatum:
    k = C.group_algebra(C.GroupDatum.trivial(), GVec.trivial(catalog.Q))
    return C.build_tensor_bialgebra(k, k)


def perturbed_phi(doc: dict) -> dict:
    """Send the third canonical basis vector of ``A (x) B`` to the second one.

    The result still satisfies the cross coalgebra conditions, so the
    bialgebra checks are the ones that catch it.
    """
    doc = copy.deepcopy(doc)
    name = doc["roles"]["phi"]
    entries = [e for e in doc["morphisms"][name]["entries"] if e[1] != 2]
    doc["morphisms"][name]["entries"] = sorted(entries + [[1, 2, "1"]])
    return doc


def non_homogeneous(doc: dict) -> dict:
    """Put a nonzero entry between the even unit and the odd generator of the super line."""
    doc = copy.deepcopy(doc)
    name = doc["roles"]["H"]["unit"]
    doc["morphisms"][name]["entries"].append([1, 0, "1"])
    return doc


def without_antipode_axioms(doc: dict) -> dict:
    """Declare Hopf but store a map that is not the convolution inverse of the identity."""
    doc = copy.deepcopy(doc)
    name = doc["roles"]["H"]["antipode"]
    doc["morphisms"][name]["entries"] = [[r, c, str(-FieldSpec.rational().parse_scalar(v))]
                                         for r, c, v in doc["morphisms"][name]["entries"]]
    return doc


def unsplit_projection(doc: dict) -> dict:
    """Double ``pi`` so that ``pi i`` is twice the identity."""
    doc = copy.deepcopy(doc)
    name = doc["roles"]["pi"]
    doc["morphisms"][name]["entries"] = [[r, c, str(2 * FieldSpec.rational().parse_scalar(v))]
                                         for r, c, v in doc["morphisms"][name]["entries"]]
    return doc


def documents() -> dict[str, dict]:
    si = C.sweedler_inputs(catalog.Q)
    h4 = catalog.sweedler()
    docs = {
        "sweedler_inputs": bf.inputs_document(si.A, si.B, {"lact": si.lact, "lcoact": si.lcoact}),
        "h4": bf.cross_document(h4, declares=["bialgebra"]),
        "h4_hopf": bf.hopf_document(C.sweedler_h4(catalog.Q)),
        "h4_projection": bf.projection_document(projection_from_datum(h4)),
        "trivial": bf.cross_document(trivial_datum(), declares=["bialgebra"]),
        "tensor_kz2_kz3dual": bf.cross_document(catalog.tensor_groups(), declares=["bialgebra"]),
        "super_line_kz2": bf.cross_document(catalog.super_line_z2(), declares=["bialgebra"]),
        "dz3": bf.cross_document(catalog.double("Z3"), declares=["bialgebra"]),
        "dz3_projection": bf.projection_document(catalog.projection("drinfeld_Z3")),
        "ds3_f101": bf.cross_document(catalog.double("S3", catalog.F101), declares=["bialgebra"]),
        "ds3_projection_f101": bf.projection_document(catalog.projection("drinfeld_S3", catalog.F101)),
    }
    docs["h4_perturbed_phi"] = perturbed_phi(docs["h4"])
    docs["bad_nonhomogeneous"] = non_homogeneous(bf.hopf_document(C.super_line(catalog.Q)))
    docs["hopf_bad_antipode"] = without_antipode_axioms(docs["h4_hopf"])
    docs["h4_projection_unsplit"] = unsplit_projection(docs["h4_projection"])
    return docs


def main() -> None:
    OUT.mkdir(exist_ok=True)
    for name, doc in documents().items():
        bf.write_bundle(doc, OUT / f"{name}.json")
        print(f"fixtures/{name}.json")


if __name__ == "__main__":
    main()
