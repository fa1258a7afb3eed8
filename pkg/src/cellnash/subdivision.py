"""Staircase triangulations of strategy simplices and their products.

A player's strategy simplex at resolution ``m`` is cut along the lattice
of points with coordinates ``k/m``.  Cells come from the classic cube
construction: map the simplex to monotone staircase coordinates
``m >= z_1 >= ... >= z_d >= 0``, tile the cube with unit-cube simplices
(one per base point and insertion order), and keep those whose vertices
all stay monotone.  That yields ``m**d`` simplices on ``C(m+d, d)``
lattice vertices, every cell with the same volume, and shared faces
matching exactly — no hanging nodes.

A product cell combines one cell per player; its vertex profiles are all
combinations of the factor cells' vertices, which is exactly one profile
per pure strategy combination.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import ResolutionZero
from .game import Game, MixedProfile
from .scalars import Scalar


@dataclass(frozen=True)
class Triangulation:
    """All cells of one player's simplex grid.

    ``vertices`` are exact barycentric points in lexicographic order of
    their ``k/m`` numerators; each cell is an ascending tuple of vertex
    indices, and the cell list is sorted.
    """

    dim: int  # simplex dimension: strategy count minus one
    resolution: int
    vertices: tuple[tuple[Scalar, ...], ...]
    cells: tuple[tuple[int, ...], ...]


def _lattice_vertices(dim: int, resolution: int) -> list[tuple[int, ...]]:
    """Numerator vectors: nonnegative ints of length dim+1 summing to m."""
    out = []

    def fill(prefix: list[int], remaining: int, slots: int):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for k in range(remaining + 1):
            fill(prefix + [k], remaining - k, slots - 1)

    fill([], resolution, dim + 1)
    out.sort()
    return out


def _staircase_to_numerators(z: Sequence[int], resolution: int) -> tuple[int, ...]:
    # z_1 >= ... >= z_d monotone; differences give the barycentric numerators
    d = len(z)
    coords = [resolution - z[0]]
    for i in range(d - 1):
        coords.append(z[i] - z[i + 1])
    coords.append(z[d - 1])
    return tuple(coords)


def _is_monotone(z: Sequence[int]) -> bool:
    return all(z[i] >= z[i + 1] for i in range(len(z) - 1))


def _coordinate(k: int, m: int) -> Scalar:
    # keep exact ints at the corners so degenerate vectors stay cheap
    if k == 0:
        return 0
    if k == m:
        return 1
    return Fraction(k, m)


def triangulate(dim: int, resolution: int) -> Triangulation:
    """Build the grid for a ``dim``-dimensional strategy simplex."""
    if dim < 0:
        raise ResolutionZero(f"dimension {dim} is negative")
    if resolution < 1:
        raise ResolutionZero(f"resolution {resolution} must be >= 1")
    m = resolution
    numerators = _lattice_vertices(dim, m)
    index = {v: i for i, v in enumerate(numerators)}
    vertices = tuple(
        tuple(_coordinate(k, m) for k in v) for v in numerators
    )
    cells: list[tuple[int, ...]] = []
    if dim == 0:
        cells.append((0,))
    else:
        for base in itertools.product(range(m), repeat=dim):
            if not _is_monotone(base):
                continue
            for order in itertools.permutations(range(dim)):
                walk = [tuple(base)]
                cursor = list(base)
                ok = True
                for axis in order:
                    cursor[axis] += 1
                    if not _is_monotone(cursor):
                        ok = False
                        break
                    walk.append(tuple(cursor))
                if ok:
                    cell = tuple(
                        sorted(index[_staircase_to_numerators(z, m)] for z in walk)
                    )
                    cells.append(cell)
    cells = sorted(set(cells))
    expected = m**dim
    assert len(cells) == expected, f"expected {expected} cells, built {len(cells)}"
    return Triangulation(
        dim=dim, resolution=m, vertices=vertices, cells=tuple(cells)
    )


@dataclass(frozen=True)
class ProductCell:
    """One grid cell per player, combined.

    ``vertex_profiles`` holds every combination of factor-cell vertices in
    lexicographic order over the per-factor vertex positions; there are as
    many of them as pure strategy combinations.
    """

    factor: tuple[int, ...]  # cell index per player
    factor_vertices: tuple[tuple[tuple[Scalar, ...], ...], ...]  # per player
    vertex_profiles: tuple[MixedProfile, ...]


def build_product_cell(
    triangulations: Sequence[Triangulation], factor: Sequence[int]
) -> ProductCell:
    factor = tuple(factor)
    factor_vertices = tuple(
        tuple(tri.vertices[v] for v in tri.cells[c])
        for tri, c in zip(triangulations, factor)
    )
    profiles = tuple(
        MixedProfile(tuple(combo))
        for combo in itertools.product(*factor_vertices)
    )
    return ProductCell(
        factor=factor, factor_vertices=factor_vertices, vertex_profiles=profiles
    )


def player_triangulations(
    game: Game, resolutions: Sequence[int] | int
) -> tuple[Triangulation, ...]:
    """One triangulation per player; a single int applies to everyone."""
    if isinstance(resolutions, int):
        resolutions = (resolutions,) * game.num_players
    resolutions = tuple(resolutions)
    if len(resolutions) != game.num_players:
        raise ResolutionZero(
            f"{len(resolutions)} resolutions for {game.num_players} players"
        )
    return tuple(
        triangulate(count - 1, m) for count, m in zip(game.shape, resolutions)
    )


def vertex_profile_count(triangulations: Sequence[Triangulation]) -> int:
    total = 1
    for tri in triangulations:
        total *= len(tri.vertices)
    return total


def product_cells(
    game: Game, resolutions: Sequence[int] | int
) -> Iterator[ProductCell]:
    """Yield every product cell in lexicographic factor order."""
    tris = player_triangulations(game, resolutions)
    for factor in itertools.product(*(range(len(t.cells)) for t in tris)):
        yield build_product_cell(tris, factor)


def distance_squared(a: MixedProfile, b: MixedProfile) -> Scalar:
    total: Scalar = 0
    for va, vb in zip(a.dist, b.dist):
        for pa, pb in zip(va, vb):
            diff = pa - pb
            total = total + diff * diff
    return total


def cell_diameter(cell: ProductCell) -> float:
    """Largest Euclidean distance between two vertex profiles, over the
    concatenated strategy vectors.  Returned as a float: diameters are
    square roots and generally irrational."""
    worst: Scalar = 0
    profiles = cell.vertex_profiles
    for i in range(len(profiles)):
        for j in range(i + 1, len(profiles)):
            d = distance_squared(profiles[i], profiles[j])
            if d > worst:
                worst = d
    return math.sqrt(float(worst))


def simplex_cell_volume(tri: Triangulation, cell_index: int) -> Fraction:
    """Cell volume normalized so the whole simplex has volume one."""
    from .linalg import determinant

    cell = tri.cells[cell_index]
    base = tri.vertices[cell[0]]
    edges = [
        [tri.vertices[v][c] - base[c] for c in range(1, tri.dim + 1)]
        for v in cell[1:]
    ]
    det = determinant(edges)
    return abs(Fraction(det))


def locate_point(tri: Triangulation, point: Sequence[Scalar]) -> list[int]:
    """Indices of cells containing the barycentric ``point``."""
    from .linalg import solve_affine

    hits = []
    for idx, cell in enumerate(tri.cells):
        matrix = [
            [tri.vertices[v][c] for v in cell] for c in range(tri.dim + 1)
        ]
        matrix.append([1] * len(cell))
        rhs = list(point) + [1]
        solved = solve_affine(matrix, rhs)
        if solved is None:
            continue
        weights, basis = solved
        if basis:
            continue  # degenerate cell; cannot happen for a real grid
        if all(w >= 0 for w in weights):
            hits.append(idx)
    return hits
