from hlab._scalar import rat
from hlab.geometry import ConvexPolygon, pt
from hlab.convex_ops import hausdorff
from hlab.continuity import f_eval, grid_oracle_hausdorff, modulus_table
from hlab.scenarios import (
    FIGURE2_DELTAS,
    f_union_eval,
    figure1_scenario,
    figure2_convex_control,
    figure2_scenario,
)


class TestFigure1:
    def test_max_ratio_is_eight(self):
        _, rows, max_ratio = figure1_scenario()
        assert max_ratio == 8
        assert max_ratio > 1

    def test_every_row_exceeds_step(self):
        _, rows, _ = figure1_scenario()
        h = rat(1, 32)
        for row in rows:
            assert row.r_next - row.r == h
            assert row.gap == 8 * h > h

    def test_ratio_collapses_after_saturation(self):
        scene, _, _ = figure1_scenario()
        rows = modulus_table(scene.A, scene.B, scene.norm,
                             [rat(9, 4), rat(5, 2)], rat(1, 32))
        assert all(row.ratio <= 1 for row in rows)

    def test_gap_confirmed_by_grid_oracle(self):
        scene, rows, _ = figure1_scenario()
        row = rows[1]
        M = f_eval(scene.A, scene.B, row.r, scene.norm)
        Mp = f_eval(scene.A, scene.B, row.r_next, scene.norm)
        lo, hi = grid_oracle_hausdorff(M, Mp, scene.norm, rat(1, 32))
        assert lo <= row.gap <= hi


class TestFigure2:
    def test_gap_stays_above_jump_bound(self):
        _, jump = figure2_scenario()
        assert jump.rho == 2
        assert jump.jump_lower_bound == 4
        assert all(g >= jump.jump_lower_bound for g in jump.gaps)

    def test_single_component_below_threshold(self):
        scene, _ = figure2_scenario()
        parts = f_union_eval(scene.A, scene.b_parts, rat(3, 2), scene.norm)
        assert len(parts) == 1

    def test_two_components_at_threshold(self):
        scene, _ = figure2_scenario()
        parts = f_union_eval(scene.A, scene.b_parts, rat(2), scene.norm)
        assert len(parts) == 2
        assert parts[1] == ConvexPolygon.hull([pt(3, rat(1, 2))])

    def test_convexified_control_gaps_shrink(self):
        _, gaps = figure2_convex_control()
        for d, g in zip(FIGURE2_DELTAS, gaps):
            assert g <= 2 * d

    def test_union_gap_bracketed_by_oracle(self):
        scene, jump = figure2_scenario()
        n = scene.norm
        d = rat(1, 4)
        at_rho = f_union_eval(scene.A, scene.b_parts, scene.r, n)
        before = f_union_eval(scene.A, scene.b_parts, scene.r - d, n)
        lo, hi = grid_oracle_hausdorff(before, at_rho, n, rat(1, 16))
        gap = jump.gaps[FIGURE2_DELTAS.index(d)]
        assert lo <= gap <= hi


class TestFUnionEval:
    def test_single_part_reduces_to_f_eval(self, rng, linf):
        from conftest import random_polygon
        from hlab.convex_ops import set_distance

        A = random_polygon(rng)
        B = random_polygon(rng)
        r = set_distance(A, B, linf) + rat(1, 2)
        assert f_union_eval(A, [B], r, linf) == [f_eval(A, B, r, linf)]

    def test_all_components_empty(self, linf):
        import pytest
        from hlab.continuity import DomainError

        A = ConvexPolygon.hull([pt(0, 0)])
        far = ConvexPolygon.hull([pt(5, 5)])
        with pytest.raises(DomainError, match="radius below union distance"):
            f_union_eval(A, [far], rat(1), linf)
