"""Exhaustive basis-tuple identity checking with witness extraction."""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from .linalg import LinearMap, Space, Vector
from .report import Report, Witness


def format_vector(sp: Space, v: Vector) -> str:
    terms = []
    for c, label in zip(v, sp.labels):
        if c == 0:
            continue
        if c == 1:
            terms.append(label)
        else:
            terms.append(f"{c}·{label}")
    return " + ".join(terms) if terms else "0"


def check_identity(report: Report, name: str,
                   factors: Sequence[Space], out_space: Space,
                   lhs: Callable[..., Vector], rhs: Callable[..., Vector]) -> None:
    """Compare lhs(i, j, ...) and rhs(i, j, ...) over all basis index tuples.

    Records a single pass/fail result; on failure the witness carries the
    first violating basis tuple and both evaluated sides.
    """
    for idxs in itertools.product(*(range(sp.dim) for sp in factors)):
        left = lhs(*idxs)
        right = rhs(*idxs)
        if left != right:
            labels = tuple(sp.labels[i] for sp, i in zip(factors, idxs))
            report.record(name, False, Witness(
                labels, format_vector(out_space, left), format_vector(out_space, right)))
            return
    report.record(name, True)


def check_map_equal(report: Report, name: str, f: LinearMap, g: LinearMap) -> None:
    """Matrix-identity version of check_identity for already-built maps."""
    check_identity(report, name, [f.domain], f.codomain,
                   lambda j: f.column(j), lambda j: g.column(j))
