"""Independent checks: grid scans, support enumeration, profile audits.

Nothing here reuses the labeling or search machinery — results come from
direct payoff comparisons and small exact linear systems, so they can
vouch for the solver's output rather than echo it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BudgetExceeded, ParameterOutOfRange
from .game import Game, GainTable, MixedProfile, gain_table, is_equilibrium
from .linalg import solve_affine
from .scalars import Scalar
from .search import default_budget
from .subdivision import player_triangulations, vertex_profile_count


@dataclass(frozen=True)
class OracleResult:
    profile: MixedProfile
    max_regret: Scalar
    method: str


def grid_min_regret(
    game: Game,
    resolutions: Sequence[int] | int,
    budget: Optional[int] = None,
) -> OracleResult:
    """Exhaustive scan of every lattice profile, keeping the first
    profile (lexicographic vertex order) with the smallest max regret."""
    if budget is None:
        budget = default_budget()
    tris = player_triangulations(game, resolutions)
    needed = vertex_profile_count(tris)
    if needed > budget:
        raise BudgetExceeded(needed, budget)
    best_profile = None
    best_regret = None
    for combo in itertools.product(*(t.vertices for t in tris)):
        profile = MixedProfile(tuple(combo))
        regret = max(gain_table(game, profile).best)
        if best_regret is None or regret < best_regret:
            best_profile = profile
            best_regret = regret
    return OracleResult(profile=best_profile, max_regret=best_regret, method="GRID")


def verify_profile(
    game: Game, sigma: MixedProfile, eps: Scalar
) -> tuple[bool, GainTable]:
    """Recompute the gain table from scratch and test the regret bound."""
    table = gain_table(game, sigma)
    return is_equilibrium(game, sigma, eps), table


@dataclass(frozen=True)
class SupportEnumerationResult:
    equilibria: tuple[MixedProfile, ...]
    degenerate: bool


def _pure_payoff_matrices(game: Game) -> tuple[list[list[Scalar]], list[list[Scalar]]]:
    # raw entries stay ints; solve_affine coerces at its own boundary
    rows, cols = game.shape
    u1 = [[game.payoff(0, (a, b)) for b in range(cols)] for a in range(rows)]
    u2 = [[game.payoff(1, (a, b)) for b in range(cols)] for a in range(rows)]
    return u1, u2


def _embed(weights: dict[int, Scalar], count: int) -> tuple[Scalar, ...]:
    return tuple(weights.get(s, 0) for s in range(count))


def _mix_candidates(
    payoff_rows: list[list[Scalar]], own: tuple[int, ...], other: tuple[int, ...]
) -> tuple[list[list[Scalar]], bool] | None:
    """Mixtures over ``other`` equalizing ``payoff_rows`` across ``own``.

    Unknowns are the mixture weights plus the common payoff value.  The
    unique solution is returned when the system is regular; a singular but
    consistent system yields the endpoints of its solution family inside
    the probability box (or the particular solution for families of
    dimension two and up) plus a degeneracy marker.  Returns None when
    inconsistent.
    """
    k = len(other)
    if len(own) == 1:
        if k == 1:
            return [[1]], False
        # a single indifference row constrains nothing: the family is the
        # whole simplex, represented by its vertices
        return [
            [1 if i == j else 0 for i in range(k)] for j in range(k)
        ], True
    if k == 1:
        # weights are forced; consistent only when the rows tie
        v0 = payoff_rows[own[0]][other[0]]
        if any(payoff_rows[s][other[0]] != v0 for s in own[1:]):
            return None
        return [[1]], True
    matrix: list[list[Scalar]] = []
    rhs: list[Scalar] = []
    for s in own:
        matrix.append([payoff_rows[s][b] for b in other] + [-1])
        rhs.append(0)
    matrix.append([1] * k + [0])
    rhs.append(1)
    solved = solve_affine(matrix, rhs)
    if solved is None:
        return None
    particular, basis = solved
    if not basis:
        return [particular[:k]], False
    if len(basis) == 1:
        # one-parameter family: walk to both ends of the probability box
        direction = basis[0][:k]
        point = particular[:k]
        lo, hi = None, None
        for p, d in zip(point, direction):
            if d == 0:
                if p < 0:
                    return None
                continue
            bound = -p / d
            if d > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is None or hi is None or lo > hi:
            return None
        ends = {tuple(p + lam * d for p, d in zip(point, direction)) for lam in (lo, hi)}
        return [list(end) for end in sorted(ends)], True
    return [particular[:k]], True


def support_enumeration_2p(game: Game) -> SupportEnumerationResult:
    """Exact equilibria of a two-player game by support enumeration.

    For every support pair, solve the indifference systems for each
    side's mixture, keep solutions that are valid distributions, and
    check that no strategy outside the support does better.  Degenerate
    games (singular systems with solution families) are flagged and
    represented by the family endpoints.
    """
    if game.num_players != 2:
        raise ParameterOutOfRange(
            f"support enumeration needs 2 players, game has {game.num_players}"
        )
    rows, cols = game.shape
    u1, u2 = _pure_payoff_matrices(game)
    u2t = [[u2[a][b] for a in range(rows)] for b in range(cols)]
    found: dict = {}
    degenerate = False
    row_supports = [
        combo
        for size in range(1, rows + 1)
        for combo in itertools.combinations(range(rows), size)
    ]
    col_supports = [
        combo
        for size in range(1, cols + 1)
        for combo in itertools.combinations(range(cols), size)
    ]
    for own in row_supports:
        for other in col_supports:
            q_result = _mix_candidates(u1, own, other)
            if q_result is None:
                continue
            q_list, q_degen = q_result
            p_result = _mix_candidates(u2t, other, own)
            if p_result is None:
                continue
            p_list, p_degen = p_result
            for q_raw in q_list:
                if any(v < 0 for v in q_raw):
                    continue
                q = _embed(dict(zip(other, q_raw)), cols)
                for p_raw in p_list:
                    if any(v < 0 for v in p_raw):
                        continue
                    p = _embed(dict(zip(own, p_raw)), rows)
                    if _is_exact_equilibrium(u1, u2, p, q):
                        # a singular system only signals degeneracy once a
                        # candidate from its family is a real equilibrium
                        if q_degen or p_degen:
                            degenerate = True
                        key = (p, q)
                        if key not in found:
                            found[key] = MixedProfile((p, q))
    ordered = sorted(found)
    return SupportEnumerationResult(
        equilibria=tuple(found[k] for k in ordered), degenerate=degenerate
    )


def _is_exact_equilibrium(
    u1: list[list[Scalar]],
    u2: list[list[Scalar]],
    p: tuple[Scalar, ...],
    q: tuple[Scalar, ...],
) -> bool:
    # direct best-response test against the raw payoff matrices
    row_values = [
        sum(row[b] * q[b] for b in range(len(q)) if q[b]) for row in u1
    ]
    base1 = sum(p[a] * row_values[a] for a in range(len(p)) if p[a])
    if any(v > base1 for v in row_values):
        return False
    col_values = [
        sum(u2[a][b] * p[a] for a in range(len(p)) if p[a])
        for b in range(len(q))
    ]
    base2 = sum(q[b] * col_values[b] for b in range(len(q)) if q[b])
    if any(v > base2 for v in col_values):
        return False
    return True
