"""Search for completely labeled cells and the resolution-refinement loop.

A product cell is a certificate when the labels of its vertex profiles
hit every pure strategy combination exactly once.  The scan memoizes one
label per lattice vertex profile (cells share vertices), aborts a cell on
the first repeated label, and walks cells in lexicographic order so the
output order — and therefore every downstream tie-break — is reproducible.

``solve`` refines the grid geometrically, keeps the certificate whose
barycenter has the smallest total gain, and stops once the barycenter's
max regret reaches the target.  A stage with no certificate is recorded
and refinement continues: coarse grids legitimately miss (a two-interval
grid cannot certify matching pennies, whose equilibrium sits exactly on
the one interior lattice point), while finer stages recover.
"""

from __future__ import annotations

import itertools
import os
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from . import scalars
from .errors import BudgetExceeded, NegativeEpsilon, NoPreEquilibriumFound, ParameterOutOfRange, ResolutionZero
from .game import Game, GainTable, MixedProfile, PureProfile, gain_table
from .labeling import root_label
from .scalars import Scalar
from .subdivision import (
    ProductCell,
    Triangulation,
    build_product_cell,
    cell_diameter,
    player_triangulations,
    vertex_profile_count,
)

DEFAULT_BUDGET = 10_000_000

SOME_PLAYER_NOT_UP = "SOME_PLAYER_NOT_UP"
PLAYER_UP_EVERYWHERE = "PLAYER_UP_EVERYWHERE"


def default_budget() -> int:
    raw = os.environ.get("NASH_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ParameterOutOfRange(f"NASH_BUDGET={raw!r} is not an integer") from None
    if value < 1:
        raise ParameterOutOfRange(f"NASH_BUDGET={value} must be >= 1")
    return value


@dataclass(frozen=True)
class PreEquilibriumCert:
    """A completely labeled product cell.

    ``labels[k]`` is the label of ``cell.vertex_profiles[k]``; together
    they exhaust the pure strategy combinations.
    """

    cell: ProductCell
    labels: tuple[PureProfile, ...]
    resolutions: tuple[int, ...]


@dataclass(frozen=True)
class CellClassification:
    """Which side of the two-case argument a cell falls on.

    Either every player fails the ``up`` test somewhere (with one witness
    vertex profile per player), or some player passes it at every vertex.
    """

    case: str
    witnesses: Optional[tuple[MixedProfile, ...]] = None
    player: Optional[int] = None


def _check_resolutions(game: Game, resolutions: Sequence[int] | int) -> tuple[int, ...]:
    if isinstance(resolutions, int):
        resolutions = (resolutions,) * game.num_players
    resolutions = tuple(resolutions)
    for m in resolutions:
        if m < 1:
            raise ResolutionZero(f"resolution {m} must be >= 1")
    return resolutions


def find_pre_equilibria(
    game: Game,
    resolutions: Sequence[int] | int,
    budget: Optional[int] = None,
) -> list[PreEquilibriumCert]:
    """All certificates at the given per-player resolutions, in
    lexicographic cell order.  An empty list is a legitimate outcome."""
    resolutions = _check_resolutions(game, resolutions)
    if budget is None:
        budget = default_budget()
    tris = player_triangulations(game, resolutions)
    needed = vertex_profile_count(tris)
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    certs, _ = _scan(game, tris, resolutions)
    return certs


def _scan(
    game: Game, tris: tuple[Triangulation, ...], resolutions: tuple[int, ...]
) -> tuple[list[PreEquilibriumCert], int]:
    strides = game.strides
    vertices = [t.vertices for t in tris]
    memo: dict[tuple[int, ...], int] = {}

    def label_id(key: tuple[int, ...]) -> int:
        cached = memo.get(key)
        if cached is not None:
            return cached
        profile = MixedProfile(
            tuple(vertices[j][v] for j, v in enumerate(key))
        )
        pure = root_label(game, profile)
        flat = 0
        for stride, s in zip(strides, pure.choices):
            flat += stride * s
        memo[key] = flat
        return flat

    certs: list[PreEquilibriumCert] = []
    cells_per_player = [t.cells for t in tris]
    scanned = 0
    for factor in itertools.product(*(range(len(c)) for c in cells_per_player)):
        scanned += 1
        seen = 0
        for key in itertools.product(
            *(cells_per_player[j][c] for j, c in enumerate(factor))
        ):
            bit = 1 << label_id(key)
            if seen & bit:
                break
            seen |= bit
        else:
            cell = build_product_cell(tris, factor)
            labels = tuple(
                _unflatten(game, label_id(key))
                for key in itertools.product(
                    *(cells_per_player[j][c] for j, c in enumerate(factor))
                )
            )
            certs.append(
                PreEquilibriumCert(cell=cell, labels=labels, resolutions=resolutions)
            )
    return certs, scanned


def _unflatten(game: Game, flat: int) -> PureProfile:
    choices = []
    for stride, count in zip(game.strides, game.shape):
        choices.append((flat // stride) % count)
    return PureProfile(tuple(choices))


def representative(cert: PreEquilibriumCert) -> MixedProfile:
    """Barycenter of the cell: per player, the average of the factor
    cell's vertices (exact in rational mode)."""
    dists = []
    for vertex_group in cert.cell.factor_vertices:
        k = len(vertex_group)
        coords = []
        for c in range(len(vertex_group[0])):
            total: Scalar = 0
            for vertex in vertex_group:
                total = total + vertex[c]
            coords.append(scalars.exact_div(total, k))
        dists.append(tuple(coords))
    return MixedProfile(tuple(dists))


def classify_cell(game: Game, cell: ProductCell) -> CellClassification:
    """Evaluate the ``up`` flags at every vertex profile and report which
    case holds.  Diagnostics only — the search never branches on this."""
    tables = [gain_table(game, profile) for profile in cell.vertex_profiles]
    for i in range(game.num_players):
        if all(table.up[i] for table in tables):
            return CellClassification(case=PLAYER_UP_EVERYWHERE, player=i)
    witnesses = []
    for i in range(game.num_players):
        for profile, table in zip(cell.vertex_profiles, tables):
            if not table.up[i]:
                witnesses.append(profile)
                break
    return CellClassification(case=SOME_PLAYER_NOT_UP, witnesses=tuple(witnesses))


@dataclass(frozen=True)
class StageRecord:
    """Everything the refinement loop learned at one resolution."""

    stage: int
    resolutions: tuple[int, ...]
    cells_scanned: int
    pre_equilibria_found: int
    chosen_cell: Optional[tuple[int, ...]]
    classification: Optional[CellClassification]
    representative: Optional[MixedProfile]
    total_gain: Optional[Scalar]
    max_regret: Optional[Scalar]
    diameter: Optional[float]
    wall_clock_s: float = 0.0


@dataclass(frozen=True)
class SolveReport:
    stages: tuple[StageRecord, ...]
    final_profile: MixedProfile
    final_max_regret: Scalar
    final_gain_table: GainTable
    converged: bool
    eps_target: Scalar
    budget: int


def solve(
    game: Game,
    eps_target: Scalar,
    m0: int = 2,
    refine_factor: int = 2,
    max_stages: int = 6,
    budget: Optional[int] = None,
) -> SolveReport:
    """Refine until some certificate's barycenter is an ``eps_target``
    equilibrium, or stages run out.

    Raises :class:`NoPreEquilibriumFound` only when every stage comes up
    empty — then there is no profile to report at all.
    """
    if isinstance(eps_target, float):
        if eps_target <= 0:
            raise NegativeEpsilon(
                f"eps target {eps_target} must be positive in float mode"
            )
    elif eps_target < 0:
        raise NegativeEpsilon(f"eps target {eps_target} is negative")
    if m0 < 1:
        raise ResolutionZero(f"m0 {m0} must be >= 1")
    if refine_factor < 2:
        raise ParameterOutOfRange(f"refine factor {refine_factor} must be >= 2")
    if max_stages < 1:
        raise ParameterOutOfRange(f"max stages {max_stages} must be >= 1")
    if budget is None:
        budget = default_budget()

    records: list[StageRecord] = []
    best: Optional[tuple[MixedProfile, Scalar, GainTable]] = None
    converged = False
    total_cells = 0
    m = m0
    for stage in range(max_stages):
        start = time.perf_counter()
        resolutions = _check_resolutions(game, m)
        tris = player_triangulations(game, resolutions)
        needed = vertex_profile_count(tris)
        if needed > budget:
            raise BudgetExceeded(needed, budget)
        certs, scanned = _scan(game, tris, resolutions)
        total_cells += scanned
        if not certs:
            records.append(
                StageRecord(
                    stage=stage,
                    resolutions=resolutions,
                    cells_scanned=scanned,
                    pre_equilibria_found=0,
                    chosen_cell=None,
                    classification=None,
                    representative=None,
                    total_gain=None,
                    max_regret=None,
                    diameter=None,
                    wall_clock_s=time.perf_counter() - start,
                )
            )
            m *= refine_factor
            continue
        chosen = None
        chosen_table = None
        chosen_rep = None
        for cert in certs:  # lexicographic order; first minimum wins ties
            rep = representative(cert)
            table = gain_table(game, rep)
            if chosen is None or table.total < chosen_table.total:
                chosen = cert
                chosen_table = table
                chosen_rep = rep
        regret = max(chosen_table.best)
        records.append(
            StageRecord(
                stage=stage,
                resolutions=resolutions,
                cells_scanned=scanned,
                pre_equilibria_found=len(certs),
                chosen_cell=chosen.cell.factor,
                classification=classify_cell(game, chosen.cell),
                representative=chosen_rep,
                total_gain=chosen_table.total,
                max_regret=regret,
                diameter=cell_diameter(chosen.cell),
                wall_clock_s=time.perf_counter() - start,
            )
        )
        best = (chosen_rep, regret, chosen_table)
        if scalars.less_equal(regret, eps_target):
            converged = True
            break
        m *= refine_factor
    if best is None:
        raise NoPreEquilibriumFound(
            stage=len(records) - 1,
            resolutions_tried=[list(r.resolutions) for r in records],
            cells_scanned=total_cells,
        )
    final_profile, _, _ = best
    final_table = gain_table(game, final_profile)  # recomputed from scratch
    return SolveReport(
        stages=tuple(records),
        final_profile=final_profile,
        final_max_regret=max(final_table.best),
        final_gain_table=final_table,
        converged=converged,
        eps_target=eps_target,
        budget=budget,
    )
