"""Signed-volume bookkeeping for the single-player label motion."""

from fractions import Fraction

import pytest

from cellnash import (
    MixedProfile,
    cell_volume_polynomial,
    errors,
    find_pre_equilibria,
    moved_cell_volume,
    root_label,
    total_volume_polynomial,
    triangulate,
)

from conftest import make_game, one_player_games


def poly_eval(coeffs, t):
    value = 0
    power = 1
    for c in coeffs:
        value += c * power
        power *= t
    return value


def test_rejects_multi_player_games(mp):
    tri = triangulate(1, 2)
    with pytest.raises(errors.NotSinglePlayer):
        total_volume_polynomial(mp, tri)


def test_cert_segment_grows_to_full_length():
    # g=(0,1), m=4: the segment next to the maximizer vertex carries both
    # labels; its endpoints move to the two distinct pure strategies
    game = make_game((2,), ((0, 1),))
    tri = triangulate(1, 4)
    result = total_volume_polynomial(game, tri)
    cert_cell = find_pre_equilibria(game, 4)[0].cell.factor[0]
    poly = result.cell_polys[cert_cell]
    assert poly == (Fraction(1, 4), Fraction(3, 4))
    assert poly_eval(poly, 1) == 1


def test_same_label_segments_shrink_to_zero():
    game = make_game((2,), ((0, 1),))
    tri = triangulate(1, 4)
    result = total_volume_polynomial(game, tri)
    cert_cell = find_pre_equilibria(game, 4)[0].cell.factor[0]
    for idx, poly in enumerate(result.cell_polys):
        if idx == cert_cell:
            continue
        assert poly == (Fraction(1, 4), Fraction(-1, 4))
        assert poly_eval(poly, 1) == 0


def test_identity_motion_keeps_original_volume():
    game = make_game((3,), ((0, 1, 2),))
    tri = triangulate(2, 2)
    for idx in range(len(tri.cells)):
        poly = cell_volume_polynomial(game, tri, idx)
        assert poly_eval(poly, 0) == Fraction(1, 4)
        assert moved_cell_volume(game, tri, idx, 0) == Fraction(1, 4)


def test_total_volume_exactly_constant_one():
    for game in one_player_games():
        dim = game.shape[0] - 1
        for m in (2, 4, 8):
            tri = triangulate(dim, m)
            result = total_volume_polynomial(game, tri)
            assert result.is_constant, (game.name, m, result.total)
            assert result.value_at(0) == 1
            assert result.value_at(1) == 1


def test_tied_payoffs_still_partition():
    # all labels tie-break to the first strategy except the forced vertex
    game = make_game((2,), ((0, 0),))
    tri = triangulate(1, 2)
    result = total_volume_polynomial(game, tri)
    assert result.is_constant
    assert result.value_at(Fraction(1, 3)) == 1
    mixed_label_cells = []
    for idx, cell in enumerate(tri.cells):
        labels = {
            root_label(game, MixedProfile((tri.vertices[v],))).choices
            for v in cell
        }
        if len(labels) == 2:
            mixed_label_cells.append(idx)
    # only the segment touching the forced (0,1) vertex keeps both labels,
    # and it is the one cell still standing at t=1
    assert len(mixed_label_cells) == 1
    assert tuple(mixed_label_cells) == result.nonzero_cells_at_one


def test_nonzero_cells_at_one_are_certified():
    for game in one_player_games():
        dim = game.shape[0] - 1
        for m in (2, 4, 8):
            tri = triangulate(dim, m)
            result = total_volume_polynomial(game, tri)
            certified = {
                cert.cell.factor[0] for cert in find_pre_equilibria(game, m)
            }
            for idx in result.nonzero_cells_at_one:
                assert idx in certified


def test_polynomial_matches_independent_numeric_path():
    # the coefficient route and the direct determinant-at-t route must
    # agree at several sample points
    for game in one_player_games():
        dim = game.shape[0] - 1
        tri = triangulate(dim, 4)
        for idx in range(len(tri.cells)):
            poly = cell_volume_polynomial(game, tri, idx)
            for k in range(dim + 3):
                t = Fraction(k, dim + 2)
                assert poly_eval(poly, t) == moved_cell_volume(game, tri, idx, t)


def test_three_strategy_cancellation():
    game = make_game((3,), ((0, 1, 2),))
    tri = triangulate(2, 2)
    result = total_volume_polynomial(game, tri)
    assert result.is_constant
    assert result.value_at(Fraction(1, 2)) == 1
    # the four triangles' quadratics cancel exactly, not approximately
    degree = max(len(p) for p in result.cell_polys)
    assert degree >= 2
