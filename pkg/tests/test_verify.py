import pytest

from pnverify.verify import CLAIMS, ORIGINS, Claim, verify_paper

FLAGGED = {"cy4-forced-degree-form", "r-bound-kummer-display", "veronese-cone-base"}


def test_suite_size_and_order():
    items = verify_paper()
    assert len(items) >= 20
    ids = [i.claim_id for i in items]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)


def test_every_claim_has_an_origin():
    assert all(c.origin in ORIGINS for c in CLAIMS)


def test_only_documented_discrepancies_are_flagged():
    items = verify_paper()
    assert {i.claim_id for i in items if i.status == "flagged"} == FLAGGED
    assert all(i.status == "pass" for i in items if i.claim_id not in FLAGGED)


def test_flagged_items_keep_both_values():
    item = next(i for i in verify_paper() if i.claim_id == "r-bound-kummer-display")
    assert (item.expected, item.computed) == ("17/2", "15/2")


def test_errors_become_data():
    def boom() -> str:
        raise ZeroDivisionError("x")

    (item,) = verify_paper((Claim("z", "loc", "derived", "1", boom),))
    assert item.status == "fail" and item.computed.startswith("error: ZeroDivisionError")


def test_missing_origin_rejected():
    with pytest.raises(ValueError):
        verify_paper((Claim("z", "loc", "guess", "1", lambda: "1"),))
