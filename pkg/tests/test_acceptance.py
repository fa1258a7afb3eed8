"""Release gates for the whole package.

Each test covers one gate end to end, prints a single PASS/FAIL line with
its wall-clock cost, and then asserts.  Gates that sweep many sub-cases
collect every miss and put the full map into the failure message instead
of stopping at the first one; a red gate here is a finding, not noise.

All gates run in exact rational mode.  Budgets are generous on purpose:
they catch complexity regressions, not scheduler jitter.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from fractions import Fraction

from cellnash import (
    Game,
    MixedProfile,
    NoPreEquilibriumFound,
    check_root_properties,
    deviation_payoffs,
    evaluate_payoff,
    find_pre_equilibria,
    gain_table,
    is_equilibrium,
    report_json,
    root_label,
    root_motion,
    scalars,
    solve,
    support_enumeration_2p,
    total_volume_polynomial,
    triangulate,
)
from cellnash.gamefile import profile_json
from cellnash.search import representative

from conftest import (
    FIXTURE_SEED,
    MATCHING_PENNIES,
    ROCK_PAPER_SCISSORS,
    corpus_games,
    fixture_suite,
    one_player_games,
    payoff_range,
    random_profile,
)

PROFILES_PER_GAME = 200  # 50 games x 200 profiles = 10^4 samples


def _verdict(number, slug, ok, elapsed, limit, detail=""):
    budget_ok = limit is None or elapsed < limit
    status = "PASS" if ok and budget_ok else "FAIL"
    bound = "" if limit is None else f" / limit {limit}s"
    print(f"CRITERION {number} ({slug}): {status} [{elapsed:.1f}s{bound}]")
    if detail:
        print(detail)
    assert ok, f"criterion {number} ({slug}) failed:\n{detail}"
    assert budget_ok, f"criterion {number} ({slug}) took {elapsed:.1f}s, limit {limit}s"


def _is_exact(value):
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def test_criterion_1_gain_arithmetic():
    """Gain tables satisfy their defining identities exactly on a random corpus."""
    start = time.perf_counter()
    rng = random.Random(FIXTURE_SEED)
    bad = []
    for game in corpus_games(50):
        n = game.num_players
        for _ in range(PROFILES_PER_GAME):
            sigma = random_profile(game, rng)
            table = gain_table(game, sigma)
            total = 0
            for i in range(n):
                base = evaluate_payoff(game, sigma, i)
                devs = deviation_payoffs(game, sigma, i)
                for s in range(game.shape[i]):
                    lift = devs[s] - base
                    want = lift if lift > 0 else 0
                    if table.gains[i][s] != want:
                        bad.append((game.name, sigma.dist, "gain", i, s))
                if table.best[i] != max(table.gains[i]):
                    bad.append((game.name, sigma.dist, "best", i))
                if table.up[i] != (table.best[i] * (n + 1) > table.total):
                    bad.append((game.name, sigma.dist, "up", i))
                # averaging identity: own-mixture average of deviation
                # payoffs recovers the mixed payoff, with no rounding
                if sum(w * d for w, d in zip(sigma.dist[i], devs)) != base:
                    bad.append((game.name, sigma.dist, "average", i))
                if not _is_exact(table.best[i]):
                    bad.append((game.name, sigma.dist, "inexact", i))
                total += table.best[i]
            if table.total != total:
                bad.append((game.name, sigma.dist, "total"))
    elapsed = time.perf_counter() - start
    _verdict(
        1,
        "gain-table arithmetic, 10^4 profiles",
        not bad,
        elapsed,
        60,
        f"{len(bad)} violations, first 5: {bad[:5]}",
    )


def test_criterion_2_root_function_laws():
    """Labels sit in support with zero gain; motion keeps dead strategies dead."""
    start = time.perf_counter()
    rng = random.Random(FIXTURE_SEED)
    t_values = [Fraction(k, 10) for k in range(11)]
    bad = []
    for game in corpus_games(50):
        for _ in range(PROFILES_PER_GAME):
            sigma = random_profile(game, rng)
            label = root_label(game, sigma)
            table = gain_table(game, sigma)
            for i, s in enumerate(label.choices):
                if not sigma.dist[i][s] > 0:
                    bad.append((game.name, sigma.dist, "support", i))
                if table.gains[i][s] != 0:
                    bad.append((game.name, sigma.dist, "gain-at-label", i))
            if not check_root_properties(game, sigma):
                bad.append((game.name, sigma.dist, "checker"))
            for t in t_values:
                moved = root_motion(game, sigma, t)
                for i in range(game.num_players):
                    for s in range(game.shape[i]):
                        if sigma.dist[i][s] == 0 and moved.dist[i][s] != 0:
                            bad.append((game.name, sigma.dist, "zero", i, s, t))
                        if not _is_exact(moved.dist[i][s]):
                            bad.append((game.name, sigma.dist, "inexact", i, s, t))
    elapsed = time.perf_counter() - start
    _verdict(
        2,
        "root labels and motion, 11 t-values each",
        not bad,
        elapsed,
        60,
        f"{len(bad)} violations, first 5: {bad[:5]}",
    )


def test_criterion_3_pure_equilibrium_characterization():
    """Exhaustive 2x2 check: zero-regret agrees with direct best response,
    and enumerated equilibria have exactly zero total gain."""
    start = time.perf_counter()
    values = (-2, -1, 0, 1, 2)
    names = (("s0", "s1"), ("s0", "s1"))
    pures = {
        (a, b): MixedProfile(
            ((1 - a, a), (1 - b, b))
        )
        for a in (0, 1)
        for b in (0, 1)
    }
    mismatches = []
    nonzero = []
    for u1 in itertools.product(values, repeat=4):
        for u2 in itertools.product(values, repeat=4):
            game = Game(names, (u1, u2))
            for (a, b), sigma in pures.items():
                direct = (
                    u1[(1 - a) * 2 + b] <= u1[a * 2 + b]
                    and u2[a * 2 + (1 - b)] <= u2[a * 2 + b]
                )
                if is_equilibrium(game, sigma, 0) != direct:
                    mismatches.append((u1, u2, (a, b)))
            for eq in support_enumeration_2p(game).equilibria:
                if gain_table(game, eq).total != 0:
                    nonzero.append((u1, u2, eq.dist))
    elapsed = time.perf_counter() - start
    _verdict(
        3,
        "exhaustive 2x2 equilibrium characterization",
        not mismatches and not nonzero,
        elapsed,
        300,
        f"{len(mismatches)} best-response mismatches, "
        f"{len(nonzero)} nonzero-gain equilibria, "
        f"first 3 of each: {mismatches[:3]} {nonzero[:3]}",
    )


def _scan_fixture_certificates():
    """Certificates for every fixture at m in {1,2,4,8}, plus the misses.

    Returns a JSON-ready report keyed by fixture and resolution, the list
    of (name, m) pairs with no certificate at all, and the list of pairs
    whose certificates failed independent re-verification.
    """
    report = {}
    misses = []
    broken = []
    for game in fixture_suite():
        full = sorted(itertools.product(*(range(k) for k in game.shape)))
        for m in (1, 2, 4, 8):
            certs = find_pre_equilibria(game, m)
            entries = []
            verified_one = False
            for cert in certs:
                fresh = [
                    root_label(game, p).choices for p in cert.cell.vertex_profiles
                ]
                stored = [label.choices for label in cert.labels]
                if sorted(fresh) == full and fresh == stored:
                    verified_one = True
                rep = representative(cert)
                entries.append(
                    {
                        "cell": list(cert.cell.factor),
                        "labels": [list(c) for c in stored],
                        "representative": profile_json(rep),
                        "total_gain": scalars.format_scalar(
                            gain_table(game, rep).total
                        ),
                    }
                )
            report[f"{game.name}@m={m}"] = entries
            if not certs:
                misses.append((game.name, m))
            elif not verified_one:
                broken.append((game.name, m))
    return report, misses, broken


def test_criterion_4_certificate_existence():
    """Every fixture yields a certificate at every grid, and the
    certificate's label set re-verifies as a bijection."""
    start = time.perf_counter()
    _, misses, broken = _scan_fixture_certificates()
    elapsed = time.perf_counter() - start
    lines = [f"sub-cases with no certificate: {len(misses)} of 116"]
    lines += [f"  {name} at m={m}" for name, m in misses]
    if broken:
        lines.append(f"sub-cases whose certificates failed re-verification: {broken}")
    _verdict(
        4,
        "certificate existence across fixtures",
        not misses and not broken,
        elapsed,
        300,
        "\n".join(lines),
    )


def _solve_sweep():
    """Run the refinement loop on every fixture at eps = range/10.

    Returns JSON-ready reports keyed by fixture name and the list of
    (name, reason) failures.
    """
    reports = {}
    failures = []
    for game in fixture_suite():
        eps = scalars.exact_div(payoff_range(game), 10)
        try:
            result = solve(game, eps, m0=2, refine_factor=2, max_stages=6)
        except NoPreEquilibriumFound as exc:
            reports[game.name] = {
                "error": {
                    "code": exc.code,
                    "resolutions_tried": exc.resolutions_tried,
                    "cells_scanned": exc.cells_scanned,
                }
            }
            failures.append((game.name, "no certificate through the last stage"))
            continue
        reports[game.name] = report_json(result, game)
        if not result.converged:
            failures.append((game.name, "did not converge"))
    return reports, failures


def test_criterion_5_solver_convergence():
    """solve reaches eps = range/10 within six doublings on every fixture,
    and lands near the known unique equilibria where there is one."""
    start = time.perf_counter()
    reports, failures = _solve_sweep()
    for game in (MATCHING_PENNIES, ROCK_PAPER_SCISSORS):
        data = reports[game.name]
        if "error" in data or not data["final"]["converged"]:
            continue
        enum = support_enumeration_2p(game)
        assert len(enum.equilibria) == 1
        target = enum.equilibria[0]
        m_final = data["stages"][-1]["resolutions"][0]
        tol = Fraction(2, m_final)
        final = [
            [scalars.parse_scalar(w) for w in row] for row in data["final"]["profile"]
        ]
        gap = max(
            abs(w - t)
            for row, trow in zip(final, target.dist)
            for w, t in zip(row, trow)
        )
        if gap > tol:
            failures.append((game.name, f"final profile off by {gap} > {tol}"))
    elapsed = time.perf_counter() - start
    lines = [f"fixtures failing: {len(failures)} of 29"]
    lines += [f"  {name}: {reason}" for name, reason in failures]
    _verdict(
        5,
        "solver convergence at eps = range/10",
        not failures,
        elapsed,
        600,
        "\n".join(lines),
    )


def _volume_audit():
    """Volume polynomials for the single-player suite at m in {2,4,8}.

    Returns a JSON-ready report and the list of (name, m, reason) failures.
    """
    report = {}
    failures = []
    for game in one_player_games():
        for m in (2, 4, 8):
            tri = triangulate(game.shape[0] - 1, m)
            result = total_volume_polynomial(game, tri)
            certified = sorted(
                cert.cell.factor[0] for cert in find_pre_equilibria(game, m)
            )
            report[f"{game.name}@m={m}"] = {
                "coefficients": [scalars.format_scalar(c) for c in result.total],
                "nonzero_at_one": list(result.nonzero_cells_at_one),
                "certified": certified,
            }
            if not result.is_constant:
                failures.append((game.name, m, f"nonconstant total {result.total}"))
            if result.value_at(0) != 1 or result.value_at(1) != 1:
                failures.append((game.name, m, "total is not 1"))
            if not set(result.nonzero_cells_at_one) <= set(certified):
                failures.append(
                    (game.name, m, "cell holds volume at t=1 but was not certified")
                )
    return report, failures


def test_criterion_6_volume_identity():
    """Moved-cell volumes sum to exactly 1 at every t, and volume at t=1
    singles out exactly the certified cells."""
    start = time.perf_counter()
    _, failures = _volume_audit()
    elapsed = time.perf_counter() - start
    _verdict(
        6,
        "single-player volume identity",
        not failures,
        elapsed,
        60,
        f"{len(failures)} violations: {failures}",
    )


def test_criterion_7_determinism():
    """Re-running the three sweeps above produces byte-identical reports."""
    start = time.perf_counter()

    def snapshot():
        return json.dumps(
            {
                "certificates": _scan_fixture_certificates()[0],
                "solves": _solve_sweep()[0],
                "volumes": _volume_audit()[0],
            },
            sort_keys=True,
        ).encode()

    first = snapshot()
    second = snapshot()
    ok = first == second
    elapsed = time.perf_counter() - start
    _verdict(
        7,
        "byte-identical reruns of the sweep reports",
        ok,
        elapsed,
        None,
        "" if ok else f"reports differ: {len(first)} vs {len(second)} bytes",
    )
