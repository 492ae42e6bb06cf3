import json

import pytest

from stiefelcodes import (
    BIBD,
    Resolution,
    builtin_design,
    find_resolution,
    load_design_file,
    verify_bibd,
    verify_resolution,
)
from stiefelcodes.designs import design_from_dict, design_to_dict
from stiefelcodes.errors import BudgetExceeded, InvalidParameter, SchemaError, UnknownDesign

K4_BLOCKS = [(1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3)]

FANO_BLOCKS = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)]


def test_k4_design_verifies():
    design = BIBD.from_blocks(4, K4_BLOCKS)
    assert (design.v, design.b, design.rep, design.k, design.lam) == (4, 6, 3, 2, 1)
    assert verify_bibd(design)


def test_duplicated_block_fails_with_pair_diagnostic():
    blocks = K4_BLOCKS + [(1, 2)]
    design = BIBD(v=4, b=7, rep=3, k=2, lam=1, blocks=tuple(blocks))
    result = verify_bibd(design)
    assert not result
    assert "pair" in result.problems[0]


def test_ag23_verifies():
    design, _ = builtin_design("ag-2-3")
    assert (design.v, design.b, design.rep, design.k, design.lam) == (9, 12, 4, 3, 1)
    # direct count over all 36 pairs
    for p in range(1, 10):
        for q in range(p + 1, 10):
            hits = sum(1 for blk in design.blocks if p in blk and q in blk)
            assert hits == 1


def test_k4_resolution_verifies():
    design, res = builtin_design("k4-edges")
    assert res.classes == ((0, 1), (2, 3), (4, 5))
    assert verify_resolution(design, res)


def test_bad_resolution_rejected():
    design = BIBD.from_blocks(4, K4_BLOCKS)
    bad = Resolution(((0, 2), (1, 3), (4, 5)))  # blocks {12} and {13} share point 1
    result = verify_resolution(design, bad)
    assert not result
    assert "repeats point 1" in result.problems[0]


def test_resolution_must_cover_all_blocks():
    design = BIBD.from_blocks(4, K4_BLOCKS)
    result = verify_resolution(design, Resolution(((0, 1), (2, 3))))
    assert not result


def test_find_resolution_k4():
    design = BIBD.from_blocks(4, K4_BLOCKS)
    res = find_resolution(design)
    assert res is not None
    assert verify_resolution(design, res)


def test_find_resolution_fano_not_found():
    design = BIBD.from_blocks(7, FANO_BLOCKS)
    assert verify_bibd(design)
    assert find_resolution(design) is None


def test_find_resolution_ag23():
    design, _ = builtin_design("ag-2-3")
    res = find_resolution(design)
    assert res is not None
    assert verify_resolution(design, res)


def test_find_resolution_budget():
    design, _ = builtin_design("ag-2-3")
    with pytest.raises(BudgetExceeded):
        find_resolution(design, budget=2)


def test_find_resolution_rejects_lambda_two():
    blocks = K4_BLOCKS + K4_BLOCKS
    design = BIBD.from_blocks(4, blocks)
    assert design.lam == 2
    with pytest.raises(InvalidParameter):
        find_resolution(design)


@pytest.mark.parametrize("name", ["k4-edges", "ag-2-2", "ag-2-3"])
def test_builtins_verified(name):
    design, res = builtin_design(name)
    assert verify_bibd(design)
    assert verify_resolution(design, res)
    # replication identity used by the composition proof (lambda = 1)
    assert design.rep * (design.k - 1) == (design.v - 1) * design.lam


def test_ag22_coincides_with_k4_edges():
    design, _ = builtin_design("ag-2-2")
    k4 = set(K4_BLOCKS)
    assert set(design.blocks) == k4
    assert (design.v, design.b, design.rep, design.k, design.lam) == (4, 6, 3, 2, 1)


def test_unknown_builtin():
    with pytest.raises(UnknownDesign):
        builtin_design("petersen")


def test_design_dict_round_trip():
    design, res = builtin_design("ag-2-3")
    data = design_to_dict(design, res)
    back, back_res = design_from_dict(data)
    assert back.blocks == design.blocks
    assert back_res.classes == res.classes


def test_design_file_round_trip(tmp_path):
    design, res = builtin_design("k4-edges")
    path = tmp_path / "design.json"
    path.write_text(json.dumps(design_to_dict(design, res)))
    loaded, loaded_res = load_design_file(path)
    assert loaded.blocks == design.blocks
    assert loaded_res.classes == res.classes


def test_design_file_without_resolution(tmp_path):
    path = tmp_path / "design.json"
    path.write_text(json.dumps({"v": 4, "blocks": [list(b) for b in K4_BLOCKS]}))
    design, res = load_design_file(path)
    assert res is None
    assert verify_bibd(design)


def test_malformed_design_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(SchemaError):
        load_design_file(path)
    path.write_text(json.dumps({"blocks": [[1, 2]]}))
    with pytest.raises(SchemaError):
        load_design_file(path)
