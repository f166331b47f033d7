import csv
import io
import json

import numpy as np
import pytest

from c4spectra import verify as V
from c4spectra.canon import canonical_form
from c4spectra.errors import CapacityError, PreconditionError
from c4spectra.graph import build_delta_n2_bicyclic, build_delta_n2_unicyclic, build_extremal, star
from c4spectra.graphio import from_graph6
from c4spectra.spectral import q_index


def test_gap_status():
    assert V.gap_status(1e-3) == V.PASS
    assert V.gap_status(1e-9) == V.FLAGGED
    assert V.gap_status(0.0) == V.FAIL
    assert V.combine([V.PASS, V.FLAGGED]) == V.FLAGGED
    assert V.combine([V.FLAGGED, V.FAIL]) == V.FAIL


@pytest.mark.parametrize("n,k", [(5, 1), (6, 1), (8, 2)])
def test_thm31(n, k):
    rep = V.verify_thm31(n, k)
    assert rep.status == V.PASS
    assert rep.witnesses["maximizer"]["canonical_form"] == canonical_form(build_extremal(n, k)).hex()
    assert abs(rep.witnesses["maximizer"]["q"] - V.thm31_bound(n, k)) < 1e-8


def test_thm31_small_case_counts():
    assert V.verify_thm31(5, 1).witnesses["count"] == 4
    assert V.verify_thm31(6, 1).witnesses["maximizer"]["q"] == pytest.approx(6.2015, abs=1e-4)


def test_thm31_beyond_ceiling_is_construction_only():
    rep = V.verify_thm31(30, 4)
    assert rep.scope == "construction-only" and rep.status == V.PASS


def test_thm31_precondition():
    with pytest.raises(PreconditionError):
        V.verify_thm31(3, 1)


def test_witness_round_trip():
    # a report's witness alone identifies the graph
    rep = V.verify_thm31(7, 2)
    g = from_graph6(rep.witnesses["maximizer"]["graph6"])
    assert canonical_form(g).hex() == rep.witnesses["maximizer"]["canonical_form"]
    assert q_index(g) == pytest.approx(rep.witnesses["maximizer"]["q"], abs=1e-12)


@pytest.mark.parametrize("n", [6, 7])
def test_thm32(n):
    rep = V.verify_thm32(n)
    assert rep.status == V.PASS
    assert rep.witnesses["rank_variants"] == [rep.witnesses["identification"]["g2"],
                                              rep.witnesses["identification"]["g3"]]


def test_thm33():
    rep = V.verify_thm33(8)
    assert rep.status == V.PASS
    assert rep.witnesses["shift_rank3_to_rank2"] is not None
    with pytest.raises(PreconditionError):
        V.verify_thm33(7)


@pytest.mark.parametrize("n", [6, 7, 11, 30])
def test_identify_g2_g3(n):
    ident = V.identify_g2_g3(n)
    assert (ident["g2"], ident["g3"]) == ("B", "A")
    assert ident["q"][ident["g2"]] > ident["q"][ident["g3"]]


@pytest.mark.parametrize("n", [8, 9, 15])
def test_identify_g5_g6(n, monkeypatch):
    # the shift check compares canonical forms, so lift the ceiling for n = 15
    monkeypatch.setenv("C4SPECTRA_CANON_CEILING", "16")
    ident = V.identify_g5_g6(n)
    assert (ident["g5"], ident["g6"]) == ("B", "A")
    assert ident["margin"] > 1e-8


def test_identify_g5_g6_respects_canon_ceiling():
    with pytest.raises(CapacityError):
        V.identify_g5_g6(13)


def test_shift_example():
    shift = V.find_perron_shift(build_delta_n2_bicyclic(8, "A"), build_delta_n2_bicyclic(8, "B"))
    assert shift["x_u"] >= shift["x_v"] - V.PERRON_SLACK


def test_lemma21_small_run_and_star_skip():
    rep = V.verify_lemma21_random(40, (5, 7), seed=7)
    assert rep.status == V.PASS and rep.witnesses["performed"] > 0
    rng = np.random.default_rng(0)
    assert V._random_shift_trial(rng, star(6)) is None
    with pytest.raises(PreconditionError):
        V.verify_lemma21_random(0)


def test_lemma21_reproducible():
    a = V.verify_lemma21_random(30, seed=3).witnesses
    b = V.verify_lemma21_random(30, seed=3).witnesses
    assert a == b


def test_bounds_corpus():
    reports = V.verify_bounds_corpus(6)
    assert [r.status for r in reports] == [V.PASS] * 3
    assert reports[2].witnesses["tight"]
    with pytest.raises(PreconditionError):
        V.verify_bounds_corpus(9)


def test_polynomial_agreement_small():
    rep = V.verify_polynomial_agreement((6, 10), (6, 12))
    assert rep.status == V.PASS
    assert all(r["charpoly_exact"] for r in rep.witnesses["cubic"])


def test_F_positivity_small():
    rep = V.verify_F_positivity((6, 10), 100, 1)
    assert rep.status == V.PASS and rep.witnesses["identity_exact"]


def test_remark34_small():
    rep = V.verify_remark34(n_max=7, corpus_n_max=5, tree_n_max=7)
    assert rep.status == V.PASS


def test_mu_top3_matches_q_top3_at_six():
    q_rep, mu_rep = V.verify_thm32(6, "q"), V.verify_thm32(6, "mu")
    assert [w["canonical_form"] for w in q_rep.witnesses["top"][:3]] == \
        [w["canonical_form"] for w in mu_rep.witnesses["top"][:3]]


def test_all_unicyclic_interpretation_is_not_a_pass():
    assert V.verify_thm32(6, "q", c4_free=False).status == V.FLAGGED


def test_serialization():
    reports = [V.verify_thm31(6, 1), V.verify_F_positivity((6, 7), 10)]
    data = json.loads(V.reports_to_json(reports))["reports"]
    assert [d["claim_id"] for d in data] == ["thm3.1", "proof3.2-F"]
    assert set(data[0]) == {"claim_id", "params", "status", "scope", "timing", "witnesses"}
    rows = list(csv.DictReader(io.StringIO(V.reports_to_csv(reports))))
    assert len(rows) == reports[0].witnesses["count"]
    assert set(V.CSV_FIELDS) <= set(rows[0])


def test_delta_variants_differ_from_extremal():
    for n in (6, 9):
        keys = {canonical_form(build_delta_n2_unicyclic(n, v)) for v in "AB"}
        assert canonical_form(build_extremal(n, 1)) not in keys
