from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from gbs_locc.certify import (
    EVEN_WINDOW,
    FOUR_M_SPECIAL,
    ODD_WINDOW,
    DifferenceSet,
    certify,
    certify_even,
    certify_odd,
    closure_thm1,
    difference_set,
    replay,
)
from gbs_locc.core import (
    GbsSet,
    ceil_sqrt,
    construct_fan5,
    construct_sdm_even,
    construct_sdm_odd,
    construct_thm1,
    construct_thm2,
    construct_thm3,
    construct_thm4,
    construct_thm5,
)

FAN5_DELTA = {
    (2, 0), (3, 0), (1, 1), (1, 2), (1, 3), (1, 4),
    (4, 1), (4, 2), (4, 3), (4, 4), (0, 2), (0, 3),
}


def brute_delta(d, labels):
    out = set()
    for j, (a, b) in enumerate(labels):
        for k, (c, e) in enumerate(labels):
            if j != k:
                out.add(((a - c) % d, (b - e) % d))
    return out


@st.composite
def gbs_sets(draw, max_d=20, min_size=1):
    d = draw(st.integers(2, max_d))
    labels = draw(
        st.lists(st.tuples(st.integers(0, d - 1), st.integers(0, d - 1)), min_size=min_size, max_size=min(d * d, 10), unique=True)
    )
    return GbsSet(d, tuple(labels))


def test_difference_set_fan5():
    delta = difference_set(construct_fan5())
    assert delta.labels == FAN5_DELTA
    assert delta.labels == brute_delta(5, construct_fan5().labels)


def test_difference_set_small_cases():
    assert difference_set(GbsSet(7, ((0, 0), (2, 3)))).labels == {(2, 3), (5, 4)}
    assert len(difference_set(GbsSet(7, ((3, 3),)))) == 0


@given(gbs_sets())
def test_difference_set_invariants(s):
    delta = difference_set(s)
    d = s.d
    assert (0, 0) not in delta
    assert all(((-m) % d, (-n) % d) in delta for m, n in delta.labels)
    assert len(delta) <= len(s) * (len(s) - 1)
    assert delta.labels == brute_delta(d, s.labels)


def test_difference_set_type_rejects_bad_input():
    with pytest.raises(ValueError):
        DifferenceSet(5, frozenset({(0, 0)}))
    with pytest.raises(ValueError):
        DifferenceSet(5, frozenset({(1, 2)}))


def test_closure_on_fan5():
    delta = difference_set(construct_fan5())
    closed = closure_thm1(delta)
    assert closed.labels - delta.labels == {(1, 0), (4, 0)}
    assert closure_thm1(closed) == closed


def test_closure_guard():
    delta = DifferenceSet(5, frozenset({(1, i) for i in range(1, 5)} | {(4, i) for i in range(1, 5)}))
    assert closure_thm1(delta) == delta


def test_certify_odd_fan5_window():
    cert = certify_odd(closure_thm1(difference_set(construct_fan5())))
    assert cert.rule == ODD_WINDOW and cert.i0 == 2 and cert.window_len == 2


def test_certify_odd_thm1_7():
    cert = certify_odd(closure_thm1(difference_set(construct_thm1(7))))
    assert cert is not None and cert.rule == ODD_WINDOW


def test_certify_odd_requires_full_first_row():
    delta = closure_thm1(difference_set(construct_thm2(9)))
    assert delta.row(1) == {0, 1, 3, 4, 5}
    assert certify_odd(delta) is None


def test_certify_parity_errors():
    with pytest.raises(ValueError):
        certify_odd(difference_set(construct_thm4(6)))
    with pytest.raises(ValueError):
        certify_even(difference_set(construct_fan5()))
    with pytest.raises(ValueError):
        certify(GbsSet(5, ((0, 0),)))


def test_certify_even_examples():
    cert6 = certify_even(difference_set(construct_thm4(6)))
    assert cert6.rule == EVEN_WINDOW and cert6.i0 == 1 and cert6.window_len == 3
    delta8 = difference_set(construct_thm4(8))
    assert delta8.row(0) == {1, 2, 3, 5, 6, 7}
    assert delta8.row(4) == set(range(8))
    assert certify_even(delta8).rule == FOUR_M_SPECIAL
    assert certify_even(difference_set(GbsSet(6, ((1, 1),)))) is None


def test_certify_pipeline_examples():
    fan = certify(construct_fan5())
    assert fan.status == "certified"
    assert fan.certificate.closure_added == {(1, 0), (4, 0)}
    assert certify(construct_thm4(100)).certified
    r = certify(GbsSet(5, ((0, 0), (0, 1))))
    assert r.status == "not_certified" and r.certificate is None
    assert r.missing is not None


@pytest.mark.parametrize("d", [9, 11, 13])
def test_thm2_is_not_certified(d):
    r = certify(construct_thm2(d))
    assert not r.certified
    assert r.missing == (1, 2)


def test_report_json_shape():
    doc = certify(construct_fan5()).to_dict()
    assert doc["status"] == "certified"
    assert doc["rule"] == "OddWindow"
    assert doc["i0"] == 2
    assert doc["closure_added"] == [[1, 0], [4, 0]]
    assert doc["missing"] is None
    bad = certify(construct_thm2(9)).to_dict()
    assert bad["status"] == "not_certified" and bad["missing"] == [1, 2]


def certified_family_sets():
    for d in range(5, 200, 2):
        yield construct_thm1(d)
    for d in range(4, 201, 2):
        yield construct_thm4(d)
    for d in range(9, 200, 2):
        yield construct_thm3(d)
    for d in range(6, 201, 2):
        yield construct_thm5(d)


def test_certificates_replay():
    for s in certified_family_sets():
        r = certify(s)
        assert r.certified, (s.family, s.d)
        assert replay(s, r.certificate), (s.family, s.d)


def test_tampered_certificates_do_not_replay():
    s = construct_fan5()
    cert = certify(s).certificate
    assert not replay(s, replace(cert, i0=1))
    assert not replay(s, replace(cert, closure_added=frozenset()))
    assert not replay(s, replace(cert, rule=EVEN_WINDOW))
    s8 = construct_thm4(8)
    assert not replay(s8, replace(certify(s8).certificate, rule=EVEN_WINDOW, i0=1))


def test_sdm_odd_grid():
    for d in range(9, 100, 2):
        for m in range(2, ceil_sqrt(d) + 3):
            assert certify(construct_sdm_odd(d, m)).certified, (d, m)


def test_sdm_even_grid():
    for d in range(6, 201, 2):
        for m in range(2, ceil_sqrt((d + 2) // 2) + 3):
            assert certify(construct_sdm_even(d, m)).certified, (d, m)


@settings(max_examples=200)
@given(st.data())
def test_adding_labels_keeps_certification(data):
    base = data.draw(st.sampled_from([construct_fan5(), construct_thm1(7), construct_thm4(6), construct_thm4(8), construct_thm3(9)]))
    d = base.d
    extra = data.draw(st.lists(st.tuples(st.integers(0, d - 1), st.integers(0, d - 1)), max_size=6))
    bigger = GbsSet.from_pairs(d, list(base.labels) + extra)
    r = certify(bigger)
    assert r.certified
    assert replay(bigger, r.certificate)
