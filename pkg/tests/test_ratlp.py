from __future__ import annotations

from fractions import Fraction

from foldstab.ratlp import (
    Infeasibility,
    Witness,
    solve_strict_system,
    verify_infeasibility,
)

F = Fraction


def _rows(*rows) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(F(x) for x in row) for row in rows)


def _check(equalities, positives, res) -> None:
    if isinstance(res, Witness):
        for e in equalities:
            assert sum(c * t for c, t in zip(e, res.point)) == 0
        for p in positives:
            assert sum(c * t for c, t in zip(p, res.point)) > 0
    else:
        assert verify_infeasibility(equalities, positives, res)


def test_no_positives_gives_zero_witness() -> None:
    res = solve_strict_system(_rows((1, 1)), (), 2)
    assert isinstance(res, Witness)
    assert res.point == (0, 0)


def test_unconstrained_positive() -> None:
    pos = _rows((1, 0), (0, 1))
    res = solve_strict_system((), pos, 2)
    assert isinstance(res, Witness)
    _check((), pos, res)


def test_feasible_with_equality() -> None:
    eqs = _rows((1, 1, 1))
    pos = _rows((1, -1, 0), (0, 0, 1))
    res = solve_strict_system(eqs, pos, 3)
    assert isinstance(res, Witness)
    _check(eqs, pos, res)


def test_opposite_rows_infeasible() -> None:
    pos = _rows((1, 0), (-1, 0))
    res = solve_strict_system((), pos, 2)
    assert isinstance(res, Infeasibility)
    _check((), pos, res)
    lam = res.positive_multipliers
    assert all(l >= 0 for l in lam)
    assert sum(lam) >= 1
    assert res.equality_multipliers == ()


def test_equality_pins_variable_to_zero() -> None:
    eqs = _rows((1, 0),)
    pos = _rows((1, 0),)
    res = solve_strict_system(eqs, pos, 2)
    assert isinstance(res, Infeasibility)
    _check(eqs, pos, res)
    lam, mu = res.positive_multipliers, res.equality_multipliers
    assert len(mu) == 1
    assert lam[0] * 1 + mu[0] * 1 == 0


def test_full_rank_equalities_kill_everything() -> None:
    eqs = _rows((1, 0), (0, 1))
    pos = _rows((1, 1),)
    res = solve_strict_system(eqs, pos, 2)
    assert isinstance(res, Infeasibility)
    _check(eqs, pos, res)


def test_three_rows_summing_to_zero() -> None:
    pos = _rows((1, -1, 0), (0, 1, -1), (-1, 0, 1))
    res = solve_strict_system((), pos, 3)
    assert isinstance(res, Infeasibility)
    _check((), pos, res)


def test_near_degenerate_feasible() -> None:
    eqs = _rows((1, 1, -2),)
    pos = _rows((1, -1, 0), (F(1, 7), F(2, 7), F(-3, 7)))
    res = solve_strict_system(eqs, pos, 3)
    _check(eqs, pos, res)


def test_witness_is_normalized() -> None:
    pos = _rows((2, 0), (0, 3))
    res = solve_strict_system((), pos, 2)
    assert isinstance(res, Witness)
    assert all(t.denominator == 1 for t in res.point)
    from math import gcd

    g = 0
    for t in res.point:
        g = gcd(g, abs(int(t)))
    assert g == 1


def test_verify_rejects_bad_certificates() -> None:
    eqs = _rows((1, 0),)
    pos = _rows((1, 0),)
    good = solve_strict_system(eqs, pos, 2)
    assert isinstance(good, Infeasibility)
    assert not verify_infeasibility(eqs, pos, Infeasibility((F(-1),), good.equality_multipliers))
    assert not verify_infeasibility(eqs, pos, Infeasibility((F(0),), (F(0),)))
    assert not verify_infeasibility(eqs, pos, Infeasibility((F(1),), (F(5),)))
    assert not verify_infeasibility(eqs, pos, Infeasibility((), ()))


def test_random_systems_always_decided() -> None:
    import random

    rng = random.Random(11)
    for _ in range(200):
        nvars = rng.randint(1, 4)
        eqs = _rows(
            *[
                [rng.randint(-2, 2) for _ in range(nvars)]
                for _ in range(rng.randint(0, 2))
            ]
        )
        pos = _rows(
            *[
                [rng.randint(-2, 2) for _ in range(nvars)]
                for _ in range(rng.randint(1, 4))
            ]
        )
        res = solve_strict_system(eqs, pos, nvars)
        _check(eqs, pos, res)
