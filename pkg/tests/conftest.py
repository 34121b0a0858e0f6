"""Shared fixtures: the flagship example programs and small helpers."""

from __future__ import annotations

from pathlib import Path

import pytest

from aggsem import Interpretation, InterpretationPair, parse_program

PROGRAMS_DIR = Path(__file__).resolve().parent.parent / "programs"


def load_program(name: str):
    return parse_program((PROGRAMS_DIR / name).read_text(encoding="utf-8"))


def interp(universe, atoms=()):
    return Interpretation.of(tuple(universe), atoms)


def pair(universe, lower, upper):
    return InterpretationPair.of(tuple(universe), lower, upper)


@pytest.fixture(scope="session")
def three_rule_sum():
    return load_program("three_rule_sum.lp")


@pytest.fixture(scope="session")
def three_rule_counterpart():
    return load_program("three_rule_counterpart.lp")


@pytest.fixture(scope="session")
def tautology_pair():
    return load_program("tautology_pair.lp")


@pytest.fixture(scope="session")
def nonconvex_loop():
    return load_program("nonconvex_loop.lp")


@pytest.fixture(scope="session")
def nonconvex_loop_counterpart():
    return load_program("nonconvex_loop_counterpart.lp")


@pytest.fixture(scope="session")
def bounds_gap():
    return load_program("bounds_gap.lp")


@pytest.fixture(scope="session")
def wide_aggregate():
    return load_program("wide_aggregate_18.lp")
