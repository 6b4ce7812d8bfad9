import json
import pathlib

import pytest

import mmmcalc

ROOT = pathlib.Path(__file__).resolve().parents[2]
BSU3 = (ROOT / "share" / "bundles" / "bsu3.json").read_text()

FREE_X2 = json.dumps({"generators": [{"name": "x", "degree": 2}], "relations": []})


def test_l_class_components():
    assert mmmcalc.l_class(1, 1) == "1/3*p4"
    assert mmmcalc.l_class(2, 2) == "7/45*p8 - 1/45*p4^2"


def test_kernel_and_closed_form_agree():
    assert mmmcalc.kernel_compare(4, 8)
    basis = mmmcalc.kernel(4, 8, closed_form=True)
    assert len(basis) == 1


def test_kappa_of_euler_class():
    assert mmmcalc.kappa(BSU3, "chi") == "3"
    assert mmmcalc.kappa(BSU3, "1/3*p4") == "1"


def test_kappa_kernel_dimensions():
    assert len(mmmcalc.kappa_kernel(BSU3, 8, domain="pont")) == 1
    assert len(mmmcalc.kappa_kernel(BSU3, 8, domain="full")) == 2


def test_ch_pushforward_leading_terms():
    rep = mmmcalc.ch_pushforward(2, trunc=3)
    assert rep["matches_series"]
    assert rep["pipeline"][:3] == ["3/2", "-5/8", "7/80"]
    assert rep["matching_closed_form"] == "single-factorial"


def test_transgression():
    assert mmmcalc.trg(FREE_X2, "x^2") == "2*x*t_x"


def test_weyl_kernel_matches_gysin():
    assert mmmcalc.weyl_matches_gysin(1)
    assert len(mmmcalc.weyl_kernel(1)) == 2


def test_run_suite():
    assert "lclass" in mmmcalc.suite_names()
    rep = mmmcalc.run_suite("lclass")
    assert rep["pass"] is True
    assert all(c["pass"] for c in rep["checks"])


def test_bad_input_raises():
    with pytest.raises(ValueError):
        mmmcalc.normalize(FREE_X2, "x +")
