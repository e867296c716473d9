"""Shared test utilities: seeded random forms, chains, and simplex points."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import List, Tuple

from sds.forms import Form


def random_form(rng: random.Random, nvars: int, degree: int,
                lo: int = -5, hi: int = 5, density: float = 0.7) -> Form:
    """Random homogeneous polynomial with small integer coefficients."""
    terms = {}
    for combo in combinations_with_replacement(range(nvars), degree):
        if rng.random() > density:
            continue
        exp = [0] * nvars
        for i in combo:
            exp[i] += 1
        c = rng.randint(lo, hi)
        if c:
            terms[tuple(exp)] = Fraction(c)
    if not terms:
        exp = [0] * nvars
        exp[0] = degree
        terms[tuple(exp)] = Fraction(1)
    return Form(nvars, degree, terms)


def random_chain(rng: random.Random, nvars: int, max_len: int) -> Tuple[int, ...]:
    length = rng.randint(0, max_len)
    return tuple(rng.randint(1, factorial(nvars)) for _ in range(length))


def random_point(rng: random.Random, nvars: int, max_den: int = 50) -> Tuple[Fraction, ...]:
    return tuple(
        Fraction(rng.randint(-max_den, max_den), rng.randint(1, max_den))
        for _ in range(nvars)
    )


def random_simplex_point(rng: random.Random, nvars: int, den: int = 60) -> Tuple[Fraction, ...]:
    cuts = sorted(rng.randint(0, den) for _ in range(nvars - 1))
    parts: List[int] = []
    prev = 0
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(den - prev)
    return tuple(Fraction(a, den) for a in parts)
