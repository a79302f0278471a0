"""Acceptance criteria, one test per criterion; tolerances are exact."""

import os

import pytest

from hopfatlas.acceptance import CRITERIA

SEED = int(os.environ.get("HOPFATLAS_TEST_SEED", "0"))


@pytest.mark.parametrize("cid,desc,fn", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_acceptance(cid, desc, fn):
    ok, detail = fn(SEED)
    print(f"{cid} {'PASS' if ok else 'FAIL'}: {desc}: {detail}")
    assert ok, f"{cid} ({desc}): {detail}"
