import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import koszulcy

CORPUS = Path(os.environ.get("KOSZULCY_CORPUS_DIR", Path(__file__).resolve().parents[2] / "corpus"))


def doc(name):
    return (CORPUS / f"{name}.json").read_text()


def test_commands_listed():
    assert {"dual", "cy", "pbw", "thm5"} <= set(koszulcy.commands())


def test_cy_polynomial_ring():
    code, report = koszulcy.run("cy", doc("kxy"))
    assert code == 0
    assert report["is_CY"] is True
    assert report["dimension"] == 3
    assert report["koszul_bound"] == 5


def test_identity_sigma_refutes_quantum_plane():
    code, report = koszulcy.run("cy", doc("qplane2"), sigma="id")
    assert code == 1
    assert report["verdict"] == "fail"


def test_nakayama_quantum_plane():
    assert koszulcy.nakayama(doc("qplane2")) == [[2, 0], [0, Fraction(1, 2)]]


def test_hilbert_and_dual():
    assert koszulcy.hilbert(doc("kxy"), 4) == [1, 2, 3, 4, 5]
    d = koszulcy.dual(doc("kxy"))
    assert koszulcy.hilbert(d, 3) == [1, 2, 1, 0]


def test_dict_input_and_canonical_form():
    parsed = json.loads(doc("jordan"))
    assert koszulcy.canonicalize(parsed) == doc("jordan")


def test_parse_error():
    bad = {"generators": ["x"], "relations": [[{"coeff": "1", "word": ["x", "x", "x"]}]]}
    with pytest.raises(koszulcy.ParseError, match="quadratic"):
        koszulcy.canonicalize(bad)
    code, report = koszulcy.run("dual", bad)
    assert code == 2
    assert report["error"]["kind"] == "parse"


def test_resource_guard():
    with pytest.raises(koszulcy.ResourceGuardError):
        koszulcy.hilbert(doc("usl2"), 40)
    code, _ = koszulcy.run("hilbert", doc("usl2"), max_degree=40)
    assert code == 3


def test_thm5_example():
    code, report = koszulcy.run("thm5", doc("qplane2-linear"))
    assert code == 0
    assert (report["cond_i"], report["cond_ii"], report["cond_iii"]) == (False, False, False)
    assert report["equivalent"] is True
