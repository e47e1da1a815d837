"""Shared instance construction for the test suite."""

from __future__ import annotations

import pytest

from polytangent import GenSpec, PolygonView, Regime, generate_pair

# Two axis-aligned unit squares: the classic illustration.  Note the
# corner union contains collinear triples, so the oracle refuses it; the
# `gp_triangles` pair below is the general-position workhorse instead.
SQUARE0 = [(0, 0), (1, 0), (1, 1), (0, 1)]
SQUARE1 = [(3, 0), (4, 0), (4, 1), (3, 1)]

# Disjoint triangles in general position (hand-checked: no shared corner,
# no collinear triple in the union).
TRI0 = [(0, 0), (10, 1), (4, 9)]
TRI1 = [(30, 2), (40, 5), (33, 13)]

# A triangle nested deep inside another: hulls not disjoint.
NESTED_OUTER = [(0, 0), (10, 0), (5, 5)]
NESTED_INNER = [(4, 1), (6, 1), (5, 2)]


@pytest.fixture
def squares():
    return PolygonView(SQUARE0, name="sq0"), PolygonView(SQUARE1, name="sq1")


@pytest.fixture
def gp_triangles():
    return PolygonView(TRI0, name="t0"), PolygonView(TRI1, name="t1")


@pytest.fixture
def nested_triangles():
    return PolygonView(NESTED_OUTER), PolygonView(NESTED_INNER)


def make_pair(seed: int, regime: Regime, n0: int = 16, n1: int = 16):
    return generate_pair(GenSpec(seed=seed, n0=n0, n1=n1, regime=regime))


def spread_sizes(i: int, lo: int = 3, hi: int = 64) -> tuple[int, int]:
    """Deterministic corner counts covering [lo, hi] across instance ids."""
    span = hi - lo + 1
    return lo + (i * 7919) % span, lo + (i * 104729 + 17) % span
