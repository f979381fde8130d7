"""Serialization of instances to and from a JSON structure-constant format.

Every scalar is an exact rational written as a string ("p/q", or just "p"
for integers), so files are human-diffable and round-trip bit-exactly.
A file carries a Hopf (or coalgebra-datum) block, an optional comodule
algebra block, optional named relative-module blocks, and an optional
block of expected results.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InstanceFormatError
from .linalg import LinearMap, Space, Vector, space, tensor_space
from .modules import RelHopfModule
from .structures import (ComoduleAlgebra, HomAlgebra, HomCoalgebra,
                         HomHopfAlgebra)

FORMAT_NAME = "homhopf-instance"
DEFAULT_MAX_DIM = 12


def max_dim() -> int:
    """Dimension cap for parsed instances, from HOMHOPF_MAX_DIM."""
    raw = os.environ.get("HOMHOPF_MAX_DIM", "")
    if not raw:
        return DEFAULT_MAX_DIM
    try:
        value = int(raw)
    except ValueError:
        raise InstanceFormatError(
            f"HOMHOPF_MAX_DIM must be an integer, got {raw!r}")
    if value < 1:
        raise InstanceFormatError("HOMHOPF_MAX_DIM must be positive")
    return value


@dataclass(frozen=True)
class ParsedInstance:
    """The in-memory form of an instance file."""

    name: str
    kind: str                        # "hopf" or "coalgebra-datum"
    description: str
    comodule_algebra: ComoduleAlgebra
    modules: dict[str, RelHopfModule] = field(default_factory=dict)
    expected: dict[str, object] = field(default_factory=dict)

    @property
    def hopf(self) -> HomHopfAlgebra:
        return self.comodule_algebra.hopf


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------

def _scalar(x: Fraction) -> str:
    return str(x)


def _matrix(f: LinearMap) -> list[list[str]]:
    return [[_scalar(x) for x in row] for row in f.matrix]


def _vector(v: Vector) -> list[str]:
    return [_scalar(x) for x in v]


def _hopf_block(H: HomHopfAlgebra) -> dict:
    return {
        "dim": H.dim,
        "basis": list(H.space.labels),
        "mult": _matrix(H.algebra.mult),
        "unit": _vector(H.algebra.unit),
        "comult": _matrix(H.coalgebra.comult),
        "counit": _matrix(H.coalgebra.counit),
        "antipode": _matrix(H.antipode),
        "alpha": _matrix(H.algebra.alpha),
    }


def _comodule_algebra_block(CA: ComoduleAlgebra) -> dict:
    A = CA.algebra
    return {
        "dim": A.dim,
        "basis": list(A.space.labels),
        "mult": _matrix(A.mult),
        "unit": _vector(A.unit),
        "beta": _matrix(A.alpha),
        "coaction": _matrix(CA.coaction),
    }


def _module_block(M: RelHopfModule) -> dict:
    return {
        "dim": M.dim,
        "basis": list(M.space.labels),
        "mu": _matrix(M.mu),
        "action": _matrix(M.action),
        "coaction": _matrix(M.coaction),
    }


def emit_instance(inst) -> str:
    """Serialize an instance (a ParsedInstance or a catalog entry) to the
    canonical file text.  Emission is deterministic: equal instances give
    byte-identical output."""
    doc = {
        "format": FORMAT_NAME,
        "field": "rational",
        "name": inst.name,
        "kind": inst.kind,
        "description": inst.description,
        "hopf": _hopf_block(inst.hopf),
        "comodule_algebra": _comodule_algebra_block(inst.comodule_algebra),
        "modules": {name: _module_block(M)
                    for name, M in sorted(inst.modules.items())},
        "expected": {k: inst.expected[k] for k in sorted(inst.expected)},
    }
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def _get(doc: dict, key: str, types, where: str):
    if key not in doc:
        raise InstanceFormatError(f"missing key {key!r}", where)
    value = doc[key]
    if not isinstance(value, types):
        raise InstanceFormatError(
            f"key {key!r} has wrong type {type(value).__name__}", where)
    return value


def _parse_scalar(x, where: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise InstanceFormatError(f"scalar must be a string or integer, "
                                  f"got {type(x).__name__}", where)
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise InstanceFormatError(f"bad rational {x!r}: {exc}", where)


def _parse_vector(raw, sp: Space, where: str) -> Vector:
    if not isinstance(raw, list) or len(raw) != sp.dim:
        raise InstanceFormatError(
            f"expected a list of {sp.dim} scalars", where)
    return tuple(_parse_scalar(x, f"{where}[{i}]") for i, x in enumerate(raw))


def _parse_matrix(raw, dom: Space, cod: Space, where: str) -> LinearMap:
    if not isinstance(raw, list) or len(raw) != cod.dim:
        raise InstanceFormatError(
            f"expected {cod.dim} rows of {dom.dim} scalars", where)
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != dom.dim:
            raise InstanceFormatError(
                f"expected a row of {dom.dim} scalars", f"{where} row {i}")
        rows.append(tuple(_parse_scalar(x, f"{where}[{i}][{j}]")
                          for j, x in enumerate(row)))
    return LinearMap(dom, cod, tuple(rows))


def _parse_space(block: dict, where: str, cap: Optional[int]) -> Space:
    dim = _get(block, "dim", int, where)
    labels = _get(block, "basis", list, where)
    if dim < 1:
        raise InstanceFormatError("dimension must be positive", where)
    if cap is not None and dim > cap:
        raise InstanceFormatError(
            f"dimension {dim} exceeds the cap {cap} "
            "(raise HOMHOPF_MAX_DIM to override)", where)
    if len(labels) != dim or not all(isinstance(x, str) for x in labels):
        raise InstanceFormatError(
            f"basis must list {dim} label strings", where)
    return space(*labels)


def _invert(f: LinearMap, what: str, where: str) -> LinearMap:
    try:
        return f.inverse()
    except ValueError:
        raise InstanceFormatError(f"{what} is not invertible", where)


def _parse_hopf(block: dict, kind: str, cap: int) -> HomHopfAlgebra:
    where = "hopf"
    sp = _parse_space(block, where, cap)
    sp2 = tensor_space(sp, sp)
    scalars = space("1")
    mult = _parse_matrix(_get(block, "mult", list, where), sp2, sp,
                         f"{where}.mult")
    unit = _parse_vector(_get(block, "unit", list, where), sp,
                         f"{where}.unit")
    comult = _parse_matrix(_get(block, "comult", list, where), sp, sp2,
                           f"{where}.comult")
    counit = _parse_matrix(_get(block, "counit", list, where), sp, scalars,
                           f"{where}.counit")
    antipode = _parse_matrix(_get(block, "antipode", list, where), sp, sp,
                             f"{where}.antipode")
    alpha = _parse_matrix(_get(block, "alpha", list, where), sp, sp,
                          f"{where}.alpha")
    alpha_inv = _invert(alpha, "alpha", f"{where}.alpha")
    algebra = HomAlgebra(sp, mult, unit, alpha, alpha_inv)
    coalgebra = HomCoalgebra(sp, comult, counit, alpha, alpha_inv)
    try:
        antipode_inv: Optional[LinearMap] = antipode.inverse()
    except ValueError:
        if kind == "hopf":
            raise InstanceFormatError("antipode is not invertible",
                                      f"{where}.antipode")
        antipode_inv = None
    return HomHopfAlgebra(algebra, coalgebra, antipode, antipode_inv)


def _parse_comodule_algebra(block: dict, H: HomHopfAlgebra,
                            cap: int) -> ComoduleAlgebra:
    where = "comodule_algebra"
    sp = _parse_space(block, where, cap)
    sp2 = tensor_space(sp, sp)
    mult = _parse_matrix(_get(block, "mult", list, where), sp2, sp,
                         f"{where}.mult")
    unit = _parse_vector(_get(block, "unit", list, where), sp,
                         f"{where}.unit")
    beta = _parse_matrix(_get(block, "beta", list, where), sp, sp,
                         f"{where}.beta")
    beta_inv = _invert(beta, "beta", f"{where}.beta")
    coaction = _parse_matrix(_get(block, "coaction", list, where), sp,
                             tensor_space(sp, H.space), f"{where}.coaction")
    algebra = HomAlgebra(sp, mult, unit, beta, beta_inv)
    return ComoduleAlgebra(algebra, H, coaction)


def _parse_module(name: str, block: dict,
                  CA: ComoduleAlgebra) -> RelHopfModule:
    where = f"modules.{name}"
    # modules inherit validity from the capped base algebras; their own
    # dimension may be a tensor product exceeding the cap
    sp = _parse_space(block, where, None)
    mu = _parse_matrix(_get(block, "mu", list, where), sp, sp, f"{where}.mu")
    mu_inv = _invert(mu, "mu", f"{where}.mu")
    action = _parse_matrix(_get(block, "action", list, where),
                           tensor_space(sp, CA.space), sp, f"{where}.action")
    coaction = _parse_matrix(_get(block, "coaction", list, where), sp,
                             tensor_space(sp, CA.hopf.space),
                             f"{where}.coaction")
    return RelHopfModule(sp, mu, mu_inv, action, coaction, CA)


def parse_instance(text: str) -> ParsedInstance:
    """Parse instance-file text; raise InstanceFormatError on any problem."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(
            f"not valid JSON: {exc.msg}", f"line {exc.lineno} col {exc.colno}")
    if not isinstance(doc, dict):
        raise InstanceFormatError("top level must be an object")
    if doc.get("format") != FORMAT_NAME:
        raise InstanceFormatError(f"format must be {FORMAT_NAME!r}")
    if doc.get("field") != "rational":
        raise InstanceFormatError("field must be 'rational'")
    kind = doc.get("kind", "hopf")
    if kind not in ("hopf", "coalgebra-datum"):
        raise InstanceFormatError(f"unknown kind {kind!r}", "kind")
    name = doc.get("name", "")
    description = doc.get("description", "")
    if not isinstance(name, str) or not isinstance(description, str):
        raise InstanceFormatError("name and description must be strings")
    cap = max_dim()

    H = _parse_hopf(_get(doc, "hopf", dict, "top level"), kind, cap)
    ca_block = doc.get("comodule_algebra")
    if ca_block is None:
        from .structures import regular_comodule_algebra
        CA = regular_comodule_algebra(H)
    else:
        if not isinstance(ca_block, dict):
            raise InstanceFormatError("comodule_algebra must be an object",
                                      "comodule_algebra")
        CA = _parse_comodule_algebra(ca_block, H, cap)

    modules: dict[str, RelHopfModule] = {}
    raw_modules = doc.get("modules", {})
    if not isinstance(raw_modules, dict):
        raise InstanceFormatError("modules must be an object", "modules")
    for mod_name, block in raw_modules.items():
        if not isinstance(block, dict):
            raise InstanceFormatError("module block must be an object",
                                      f"modules.{mod_name}")
        modules[mod_name] = _parse_module(mod_name, block, CA)

    expected = doc.get("expected", {})
    if not isinstance(expected, dict):
        raise InstanceFormatError("expected must be an object", "expected")

    return ParsedInstance(name, kind, description, CA, modules, expected)


def load_instance(path: str) -> ParsedInstance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InstanceFormatError(f"cannot read file: {exc.strerror}", path)
    return parse_instance(text)
