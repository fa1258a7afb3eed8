"""Finite normal-form games, mixed profiles, and gain tables.

The gain table is the engine of the whole package: for a profile it
records, per player and pure strategy, how much that player would gain
by deviating to the pure strategy (clamped at zero).  A profile is an
exact equilibrium precisely when the summed best gains vanish, and the
``up`` flags mark players whose best gain exceeds an equal share of the
total — the case split the refinement loop reports for each chosen cell.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import scalars
from .errors import (
    DimensionMismatch,
    EmptySupport,
    IndexOutOfRange,
    InvalidDistribution,
    NegativeEpsilon,
    ShapeError,
)
from .scalars import Scalar


@dataclass(frozen=True)
class Game:
    """Dense payoff tensors over named strategies.

    ``payoffs[i]`` is player ``i``'s tensor flattened row-major with the
    last player's strategy varying fastest.
    """

    strategy_names: tuple[tuple[str, ...], ...]
    payoffs: tuple[tuple[Scalar, ...], ...]  # one flat tensor per player
    name: str = ""

    def __post_init__(self):
        if not self.strategy_names:
            raise ShapeError("a game needs at least one player")
        for names in self.strategy_names:
            if not names:
                raise ShapeError("every player needs at least one strategy")
            if len(set(names)) != len(names):
                raise ShapeError(f"duplicate strategy names in {names}")
        shape = tuple(len(names) for names in self.strategy_names)
        size = 1
        for count in shape:
            size *= count
        if len(self.payoffs) != len(shape):
            raise ShapeError(
                f"expected {len(shape)} payoff tensors, got {len(self.payoffs)}"
            )
        for i, tensor in enumerate(self.payoffs):
            if len(tensor) != size:
                raise ShapeError(
                    f"payoff tensor {i} has {len(tensor)} entries, expected {size}"
                )
        strides = []
        acc = 1
        for count in reversed(shape):
            strides.append(acc)
            acc *= count
        object.__setattr__(self, "_shape", shape)
        object.__setattr__(self, "_strides", tuple(reversed(strides)))

    @property
    def num_players(self) -> int:
        return len(self.strategy_names)

    @property
    def shape(self) -> tuple[int, ...]:
        return self._shape

    @property
    def strides(self) -> tuple[int, ...]:
        return self._strides

    def payoff(self, player: int, pure: Sequence[int]) -> Scalar:
        """Payoff to ``player`` at a pure strategy combination."""
        if not 0 <= player < len(self.payoffs):
            raise IndexOutOfRange(f"player index {player} out of range")
        idx = 0
        for stride, s, count in zip(self._strides, pure, self._shape):
            if not 0 <= s < count:
                raise IndexOutOfRange(f"strategy index {s} out of range")
            idx += stride * s
        return self.payoffs[player][idx]

    def flat_index(self, pure: Sequence[int]) -> int:
        idx = 0
        for stride, s in zip(self._strides, pure):
            idx += stride * s
        return idx


@dataclass(frozen=True)
class PureProfile:
    """One strategy index per player."""

    choices: tuple[int, ...]

    def as_mixed(self, game: Game) -> MixedProfile:
        if len(self.choices) != game.num_players:
            raise DimensionMismatch("pure profile length != player count")
        dists = []
        for s, count in zip(self.choices, game.shape):
            if not 0 <= s < count:
                raise IndexOutOfRange(f"strategy index {s} out of range")
            dists.append(tuple(1 if t == s else 0 for t in range(count)))
        return MixedProfile(tuple(dists))


@dataclass(frozen=True)
class MixedProfile:
    """One probability vector per player; validated on construction."""

    dist: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        for vector in self.dist:
            if not vector:
                raise InvalidDistribution("empty strategy vector")
            for p in vector:
                if not scalars.is_nonnegative(p):
                    raise InvalidDistribution(f"negative probability {p}")
            if not scalars.sums_to_one(vector):
                raise InvalidDistribution(
                    f"probabilities sum to {sum(vector)}, expected 1"
                )

    def support(self, player: int) -> tuple[int, ...]:
        return tuple(
            s
            for s, p in enumerate(self.dist[player])
            if scalars.is_positive(p)
        )


@dataclass(frozen=True)
class GainTable:
    """Per-strategy deviation gains, per-player best gains, their sum,
    and the players whose best gain exceeds an equal share of the sum."""

    gains: tuple[tuple[Scalar, ...], ...]
    best: tuple[Scalar, ...]
    total: Scalar
    up: tuple[bool, ...]


def check_profile(game: Game, sigma: MixedProfile) -> None:
    if len(sigma.dist) != game.num_players:
        raise DimensionMismatch(
            f"profile has {len(sigma.dist)} vectors for {game.num_players} players"
        )
    for vector, count in zip(sigma.dist, game.shape):
        if len(vector) != count:
            raise DimensionMismatch(
                f"strategy vector of length {len(vector)}, expected {count}"
            )


def evaluate_payoff(game: Game, sigma: MixedProfile, player: int) -> Scalar:
    """Expected payoff: the payoff tensor contracted with every player's
    strategy vector.  Zero-probability strategies are skipped, which is
    exact and makes pure profiles cheap."""
    check_profile(game, sigma)
    if not 0 <= player < game.num_players:
        raise IndexOutOfRange(f"player {player} out of range")
    supports = [
        [(s * stride, p) for s, p in enumerate(vector) if p]
        for vector, stride in zip(sigma.dist, game.strides)
    ]
    tensor = game.payoffs[player]
    total: Scalar = 0
    for combo in itertools.product(*supports):
        weight: Scalar = 1
        idx = 0
        for offset, p in combo:
            weight = weight * p
            idx += offset
        total = total + weight * tensor[idx]
    return total


def deviation_profile(game: Game, sigma: MixedProfile, player: int, strategy: int) -> MixedProfile:
    """Copy of ``sigma`` with ``player`` switched to the pure ``strategy``."""
    check_profile(game, sigma)
    if not 0 <= player < game.num_players:
        raise IndexOutOfRange(f"player {player} out of range")
    count = game.shape[player]
    if not 0 <= strategy < count:
        raise IndexOutOfRange(f"strategy {strategy} out of range for player {player}")
    replaced = tuple(1 if t == strategy else 0 for t in range(count))
    dists = tuple(
        replaced if j == player else vector for j, vector in enumerate(sigma.dist)
    )
    return MixedProfile(dists)


def deviation_payoffs(game: Game, sigma: MixedProfile, player: int) -> tuple[Scalar, ...]:
    """Expected payoff to ``player`` after switching to each pure strategy,
    computed in one pass over the other players' supports."""
    check_profile(game, sigma)
    if not 0 <= player < game.num_players:
        raise IndexOutOfRange(f"player {player} out of range")
    others = [
        [(s * stride, p) for s, p in enumerate(vector) if p]
        for j, (vector, stride) in enumerate(zip(sigma.dist, game.strides))
        if j != player
    ]
    tensor = game.payoffs[player]
    stride_i = game.strides[player]
    count = game.shape[player]
    out: list[Scalar] = [0] * count
    for combo in itertools.product(*others):
        weight: Scalar = 1
        base = 0
        for offset, p in combo:
            weight = weight * p
            base += offset
        for s in range(count):
            out[s] = out[s] + weight * tensor[base + s * stride_i]
    return tuple(out)


def gain_table(game: Game, sigma: MixedProfile) -> GainTable:
    """Deviation gains at ``sigma``.

    ``gains[i][s]`` is how much player ``i`` would gain by moving all
    mass to pure strategy ``s`` (never negative); ``best[i]`` is the
    largest such gain, ``total`` their sum over players, and ``up[i]``
    says whether ``best[i]`` strictly exceeds ``total / (n + 1)``.
    """
    n = game.num_players
    gains = []
    best = []
    for i in range(n):
        base = evaluate_payoff(game, sigma, i)
        devs = deviation_payoffs(game, sigma, i)
        row = tuple(max(d - base, 0) for d in devs)
        gains.append(row)
        best.append(max(row))
    total: Scalar = 0
    for b in best:
        total = total + b
    share = scalars.exact_div(total, n + 1)
    up = tuple(scalars.strictly_greater(b, share) for b in best)
    return GainTable(gains=tuple(gains), best=tuple(best), total=total, up=up)


def max_regret(game: Game, sigma: MixedProfile) -> Scalar:
    """Largest single-player deviation gain at ``sigma``."""
    return max(gain_table(game, sigma).best)


def is_equilibrium(game: Game, sigma: MixedProfile, eps: Scalar) -> bool:
    """True when no player can gain more than ``eps`` by a pure deviation.

    Pure deviations suffice: a mixed deviation's payoff is an average of
    pure ones, so its gain never beats the best pure gain.
    """
    if isinstance(eps, float):
        if eps < 0:
            raise NegativeEpsilon(f"eps {eps} is negative")
    elif eps < 0:
        raise NegativeEpsilon(f"eps {eps} is negative")
    return scalars.less_equal(max_regret(game, sigma), eps)


def support_or_raise(sigma: MixedProfile, player: int) -> tuple[int, ...]:
    support = sigma.support(player)
    if not support:
        raise EmptySupport(f"player {player} has an empty support")
    return support
