"""JSON wire formats.

Rationals travel as decimal strings "p/q" ("/q" omitted when q = 1);
Gaussian rationals as {"re": "p/q", "im": "p/q"}.  All decoders validate
shape and raise ValueError with a diagnostic on malformed input.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List

from .analysis import AmbientElement, LieSubalgebra
from .forms import TwoForm, two_form_from_terms
from .scalars import GaussianRational
from .spinrep import SpinorVector
from .twisted import ScaledSpinor, TwistedCoeffMap


def rational_to_json(x: Fraction) -> str:
    return str(x)


def rational_from_json(s: Any) -> Fraction:
    if not isinstance(s, str):
        raise ValueError(f"expected a rational string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {s!r}: {exc}") from None


def gaussian_to_json(c: GaussianRational) -> Dict[str, str]:
    return {"re": str(c.re), "im": str(c.im)}


def gaussian_from_json(obj: Any) -> GaussianRational:
    if not isinstance(obj, dict) or "re" not in obj or "im" not in obj:
        raise ValueError(f"expected {{'re','im'}}, got {obj!r}")
    return GaussianRational(rational_from_json(obj["re"]), rational_from_json(obj["im"]))


def _eps_from_json(v: Any, what: str) -> tuple:
    if not isinstance(v, list) or any(s not in (1, -1) for s in v):
        raise ValueError(f"{what} must be a list of +-1, got {v!r}")
    return tuple(v)


def spinor_to_json(psi: SpinorVector) -> Dict[str, Any]:
    return {
        "n": psi.n,
        "coeffs": [
            {"eps": list(eps), **gaussian_to_json(c)}
            for eps, c in sorted(psi.coeffs.items())
        ],
    }


def spinor_from_json(obj: Any) -> SpinorVector:
    if not isinstance(obj, dict) or "n" not in obj or "coeffs" not in obj:
        raise ValueError("spinor JSON needs fields 'n' and 'coeffs'")
    coeffs = {}
    for entry in obj["coeffs"]:
        eps = _eps_from_json(entry.get("eps"), "eps")
        coeffs[eps] = gaussian_from_json(entry)
    return SpinorVector(int(obj["n"]), coeffs)


def scaled_spinor_to_json(phi: ScaledSpinor) -> Dict[str, Any]:
    return {
        "n": phi.n,
        "r": phi.r,
        "m": phi.m,
        "scale2": str(phi.scale2),
        "coeffs": [
            {
                "spin": list(spin),
                "twist": [list(t) for t in twist],
                **gaussian_to_json(c),
            }
            for (spin, twist), c in sorted(phi.coeffs.items())
        ],
    }


def scaled_spinor_from_json(obj: Any) -> ScaledSpinor:
    for fieldname in ("n", "r", "m", "scale2", "coeffs"):
        if not isinstance(obj, dict) or fieldname not in obj:
            raise ValueError(f"twisted spinor JSON needs field {fieldname!r}")
    coeffs: TwistedCoeffMap = {}
    for entry in obj["coeffs"]:
        spin = _eps_from_json(entry.get("spin"), "spin")
        twist_raw = entry.get("twist")
        if not isinstance(twist_raw, list):
            raise ValueError(f"twist must be a list of index lists, got {twist_raw!r}")
        twist = tuple(_eps_from_json(t, "twist slot") for t in twist_raw)
        coeffs[(spin, twist)] = gaussian_from_json(entry)
    return ScaledSpinor(
        int(obj["n"]), int(obj["r"]), int(obj["m"]),
        coeffs, rational_from_json(obj["scale2"]),
    )


def two_form_to_json(omega: TwoForm) -> Dict[str, Any]:
    return {
        "n": omega.n,
        "terms": [
            {"a": a, "b": b, "coeff": str(c)} for a, b, c in omega.terms()
        ],
    }


def two_form_from_json(obj: Any) -> TwoForm:
    if not isinstance(obj, dict) or "n" not in obj or "terms" not in obj:
        raise ValueError("2-form JSON needs fields 'n' and 'terms'")
    terms = {}
    for t in obj["terms"]:
        terms[(int(t["a"]), int(t["b"]))] = rational_from_json(t["coeff"])
    return two_form_from_terms(int(obj["n"]), terms)


def ambient_to_json(x: AmbientElement) -> Dict[str, Any]:
    return {
        "a": [{"i": i, "j": j, "coeff": str(c)} for (i, j), c in sorted(x.a.items())],
        "b": [{"k": k, "l": l, "coeff": str(c)} for (k, l), c in sorted(x.b.items())],
    }


def ambient_from_json(n: int, r: int, obj: Any) -> AmbientElement:
    a = {(int(t["i"]), int(t["j"])): rational_from_json(t["coeff"]) for t in obj.get("a", [])}
    b = {(int(t["k"]), int(t["l"])): rational_from_json(t["coeff"]) for t in obj.get("b", [])}
    return AmbientElement(n, r, a, b)


def subalgebra_to_json(alg: LieSubalgebra) -> Dict[str, Any]:
    return {
        "dim": alg.dim,
        "closed": alg.closed,
        "basis": [ambient_to_json(x) for x in alg.basis],
    }


def render_two_form(omega: TwoForm) -> str:
    """Deterministic text rendering: "c * ea^eb" terms, a < b ascending,
    joined by " + " / " - "; unit coefficients drop the "c * "."""
    parts: List[str] = []
    for a, b, c in omega.terms():
        mag = abs(c)
        body = f"e{a}^e{b}" if mag == 1 else f"{mag} * e{a}^e{b}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


def render_ambient(x: AmbientElement) -> str:
    parts: List[str] = []
    for (i, j), c in sorted(x.a.items()):
        mag = abs(c)
        body = f"e{i}^e{j}" if mag == 1 else f"{mag} * e{i}^e{j}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    for (k, l), c in sorted(x.b.items()):
        mag = abs(c)
        body = f"f{k}^f{l}" if mag == 1 else f"{mag} * f{k}^f{l}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"
