"""File formats: system files, basis files, and LaTeX layouts."""

from __future__ import annotations

import json
from typing import Any

from .laurent import SystemSpec
from .polyring import IdealBasis, Polynomial, Ring

HEADER = "variables C1..Ck stand for C_{-1}..C_{-k}; y is least under lex"


def system_to_json(basis: IdealBasis, spec: SystemSpec | None = None) -> dict:
    return {
        "note": HEADER,
        "spec": spec.to_json() if spec is not None else None,
        "ring": list(basis.ring.names),
        "label": basis.label,
        "generators": [g.to_json() for g in basis],
    }


def basis_to_json(basis: IdealBasis, log: dict | None = None) -> dict:
    out = system_to_json(basis)
    del out["spec"]
    if log is not None:
        out["log"] = log
    return out


def basis_from_json(obj: dict[str, Any]) -> IdealBasis:
    """Read either a system file or a basis file."""
    ring = Ring(obj["ring"])
    gens = [Polynomial.from_json(g, ring) for g in obj["generators"]]
    return IdealBasis(ring, gens, obj.get("label", ""))


def spec_from_json(obj: dict[str, Any]) -> SystemSpec | None:
    s = obj.get("spec")
    return SystemSpec.from_json(s) if s else None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def basis_to_latex(basis: IdealBasis, symbol: str = "E", comment: str | None = None) -> str:
    head = f"% {comment or basis.label}\n% {HEADER}\n"
    return head + basis.to_latex(symbol)


def basis_to_text(basis: IdealBasis, symbol: str = "E") -> str:
    lines = [f"# {basis.label}" if basis.label else "#", f"# {HEADER}"]
    lines += [f"{symbol}_{i} = {g}" for i, g in enumerate(basis, 1)]
    return "\n".join(lines) + "\n"
