"""Shared fixtures: the named games, seeded random suites, profile makers.

The random suites are pinned to one seed so every run works the same
corpus; failures therefore name reproducible games.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from cellnash import Game, MixedProfile

FIXTURE_SEED = 104729

MATCHING_PENNIES = Game(
    strategy_names=(("H", "T"), ("H", "T")),
    payoffs=((1, -1, -1, 1), (-1, 1, 1, -1)),
    name="matching-pennies",
)

ROCK_PAPER_SCISSORS = Game(
    strategy_names=(("R", "P", "S"), ("R", "P", "S")),
    payoffs=(
        (0, -1, 1, 1, 0, -1, -1, 1, 0),
        (0, 1, -1, -1, 0, 1, 1, -1, 0),
    ),
    name="rock-paper-scissors",
)

PRISONERS_DILEMMA = Game(
    strategy_names=(("C", "D"), ("C", "D")),
    payoffs=((3, 0, 5, 1), (3, 5, 0, 1)),
    name="prisoners-dilemma",
)

BATTLE_OF_SEXES = Game(
    strategy_names=(("A", "B"), ("A", "B")),
    payoffs=((2, 0, 0, 1), (1, 0, 0, 2)),
    name="battle-of-sexes",
)

NAMED_GAMES = (
    MATCHING_PENNIES,
    ROCK_PAPER_SCISSORS,
    PRISONERS_DILEMMA,
    BATTLE_OF_SEXES,
)

# ten single-player games, 2 and 3 strategies, ties included
ONE_PLAYER_PAYOFFS = (
    (0, 1),
    (1, 0),
    (0, 0),
    (3, 3),
    (-1, 2),
    (0, 1, 2),
    (2, 1, 0),
    (1, 1, 0),
    (0, 0, 0),
    (2, 0, 2),
)


def make_game(shape, payoffs, name=""):
    names = tuple(tuple(f"s{j}" for j in range(k)) for k in shape)
    return Game(strategy_names=names, payoffs=payoffs, name=name)


def random_game(rng, shape, name="", low=-5, high=5):
    size = 1
    for k in shape:
        size *= k
    payoffs = tuple(
        tuple(rng.randint(low, high) for _ in range(size)) for _ in shape
    )
    return make_game(shape, payoffs, name=name)


def fixture_suite():
    """Named games plus 20 random 2x2 and 5 random 2x2x2 games."""
    rng = random.Random(FIXTURE_SEED)
    games = list(NAMED_GAMES)
    for idx in range(20):
        games.append(random_game(rng, (2, 2), name=f"random-2x2-{idx}"))
    for idx in range(5):
        games.append(random_game(rng, (2, 2, 2), name=f"random-2x2x2-{idx}"))
    return games


def one_player_games():
    return [
        make_game((len(p),), (p,), name=f"one-player-{i}")
        for i, p in enumerate(ONE_PLAYER_PAYOFFS)
    ]


def corpus_games(count=50):
    """Random integer games, shapes up to 3x3x3, payoffs in [-5, 5]."""
    shapes = [
        (2, 2), (2, 3), (3, 2), (3, 3), (2, 2, 2),
        (2, 2, 3), (3, 3, 3), (2, 3, 2), (3, 1), (1, 3),
    ]
    rng = random.Random(FIXTURE_SEED)
    return [
        random_game(rng, shapes[i % len(shapes)], name=f"corpus-{i}")
        for i in range(count)
    ]


def random_profile(game, rng, denominator=12):
    """Random rational profile with weights in k/denominator steps."""
    dist = []
    for size in game.shape:
        cuts = sorted(rng.randint(0, denominator) for _ in range(size - 1))
        bounds = [0] + cuts + [denominator]
        weights = [
            Fraction(b - a, denominator) for a, b in zip(bounds, bounds[1:])
        ]
        dist.append(tuple(weights))
    return MixedProfile(tuple(dist))


def payoff_range(game):
    lo = min(min(t) for t in game.payoffs)
    hi = max(max(t) for t in game.payoffs)
    return hi - lo


@pytest.fixture
def mp():
    return MATCHING_PENNIES


@pytest.fixture
def rps():
    return ROCK_PAPER_SCISSORS


@pytest.fixture
def pd():
    return PRISONERS_DILEMMA


@pytest.fixture
def bos():
    return BATTLE_OF_SEXES
