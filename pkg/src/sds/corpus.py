"""Bundled example forms.

example1 and example2 are quoted verbatim.  The example3 family encodes the
power-mean inequality

    (2/3)*(x^2/(y+z) + y^2/(z+x) + z^2/(x+y)) >= ((x^p + y^p + z^p)/3)^(1/p)

for p = 1..6: both sides are non-negative on the orthant, so raising to the
p-th power and clearing the (y+z)(z+x)(x+y) denominators gives the
degree-4p form

    F_p = 2^p * N^p - 3^(p-1) * (x^p + y^p + z^p) * D^p,

with N = x^2(z+x)(x+y) + y^2(y+z)(x+y) + z^2(y+z)(z+x) and
D = (y+z)(z+x)(x+y).  The expanded forms are stored under corpus_data/
(regenerated by scripts/build_corpus.py) so the shipped corpus is auditable
against this construction.
"""

from __future__ import annotations

from importlib import resources
from typing import Dict, Tuple

from .forms import Form, parse_form

CORPUS_VARS = ("x", "y", "z")

EXAMPLE1_TEXT = "x*(x - y)^5 - y*(-z - y)^5 - z*(x - z)^5"

EXAMPLE2_TEXT = (
    "7*x^3 - 12*x^2*y - 12*x^2*z + 6*x*y^2 + 12*x*y*z + 6*x*z^2"
    " - 9/10*y^3 - 3*y^2*z - 3*y*z^2 - 4/5*z^3"
)

_N_TEXT = "x^2*(z + x)*(x + y) + y^2*(y + z)*(x + y) + z^2*(y + z)*(z + x)"
_D_TEXT = "(y + z)*(z + x)*(x + y)"


def power_mean_gap_text(p: int) -> str:
    """Denominator-cleared source text of F_p (see module docstring)."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    return (
        f"{2 ** p}*({_N_TEXT})^{p}"
        f" - {3 ** (p - 1)}*(x^{p} + y^{p} + z^{p})*({_D_TEXT})^{p}"
    )


def build_power_mean_gap(p: int) -> Form:
    """Construct F_p from scratch (the corpus files are snapshots of this)."""
    return parse_form(power_mean_gap_text(p), CORPUS_VARS)


CORPUS_NAMES = (
    "example1",
    "example2",
    "example3-p1",
    "example3-p2",
    "example3-p3",
    "example3-p4",
    "example3-p5",
    "example3-p6",
)


def corpus_text(name: str) -> str:
    """Source text of a bundled form (expanded text for the example3 family)."""
    if name == "example1":
        return EXAMPLE1_TEXT
    if name == "example2":
        return EXAMPLE2_TEXT
    if name.startswith("example3-p"):
        suffix = name[len("example3-p"):]
        if suffix.isdigit() and 1 <= int(suffix) <= 6:
            data = resources.files("sds").joinpath(f"corpus_data/{name}.txt")
            return data.read_text(encoding="utf-8").strip()
    raise KeyError(f"unknown corpus entry {name!r}; known: {', '.join(CORPUS_NAMES)}")


def corpus_form(name: str) -> Form:
    return parse_form(corpus_text(name), CORPUS_VARS)


def load_corpus() -> Dict[str, Form]:
    return {name: corpus_form(name) for name in CORPUS_NAMES}
