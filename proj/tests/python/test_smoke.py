import pytest

import fanoclass


def test_enumeration_matches_table():
    rows = fanoclass.enumerate_all(2)
    assert len(rows) == 36
    assert {r["table_id"] for r in rows} == {f"2-{i}" for i in range(1, 37)}
    assert sorted(r["kx3"] for r in fanoclass.enumerate_all(3, True)) == [12, 14, 48, 52]


def test_verify():
    ok, text = fanoclass.verify(2)
    assert ok, text
    ok, text = fanoclass.verify(3, True)
    assert ok, text


def test_ground_truth():
    assert len(fanoclass.ground_truth(2)) == 36
    primitive = {r["table_id"] for r in fanoclass.ground_truth(2, True)}
    assert primitive == {"2-2", "2-6", "2-8", "2-18", "2-24", "2-32", "2-34", "2-35", "2-36"}


def test_chern_formulas():
    assert fanoclass.antican_cube_p1_bundle_over_surface(2, 0, 8) == 52
    assert fanoclass.antican_cube_divisor_in_p2_bundle(8, 2, -10, 8, -10, 8, 12) == 14
    assert fanoclass.genus_from_blowup(16, 64, 4, 7) == 5
    assert fanoclass.conic_bundle_ksq_dot_pullback(-3, 5) == 7
    big = 10**30
    assert fanoclass.antican_cube_p1_bundle_over_surface(big, 0, 0) == 2 * big


def test_errors_become_python_exceptions():
    with pytest.raises(fanoclass.FanoError, match="parity"):
        fanoclass.genus_from_blowup(15, 64, 4, 7)
    with pytest.raises(ValueError):
        fanoclass.enumerate_all(3, False)


def test_lattice_index():
    assert fanoclass.lattice_index_candidates(1, 1, "C1", "D1") == {1}


def test_cli_entry_point():
    code, out, _ = fanoclass.run_cli(["chern", "antican-cube-p1-bundle", "2", "0", "8"])
    assert code == 0
    assert out == "52\n"
    code, _, _ = fanoclass.run_cli(["verify"])
    assert code == 2


def test_emit_csv():
    text = fanoclass.emit(2, format="csv")
    assert len(text.splitlines()) == 37
