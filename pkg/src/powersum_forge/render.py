"""JSON and LaTeX emitters for all value types.

JSON keeps every integer as a decimal string so arbitrary precision
survives any consumer; rationals are ``{"num": "...", "den": "..."}``
objects.  LaTeX output is deliberately plain (no sizing commands):
coefficient 1 is omitted before a symbol, zero terms are skipped, and
term order follows the established display conventions (ascending
exponents for combinations and identity polynomials, descending for the
power-sum polynomial table).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .cubic import BinaryQuadraticForm, CubicQuadruple, FormQuadruple
from .polynomials import Polynomial
from .powersums import CONSTANT_EXP, PowerSumCombo
from .quadratic import PythagoreanQuadruple, SquareFormQuadruple
from .relations import ComboQuadruple, PolyIdentity

__all__ = [
    "fraction_to_json",
    "fraction_from_json",
    "combo_to_json",
    "combo_from_json",
    "poly_to_json",
    "poly_from_json",
    "form_to_json",
    "form_from_json",
    "form_quadruple_to_json",
    "form_quadruple_from_json",
    "combo_quadruple_to_json",
    "poly_identity_to_json",
    "latex_rational",
    "poly_to_latex",
    "combo_to_latex",
    "form_to_latex",
    "power_display",
    "cubic_forms_latex",
    "square_forms_latex",
    "combo_quadruple_latex",
    "poly_identity_latex",
]


# --- JSON ---------------------------------------------------------------


def fraction_to_json(q: Fraction) -> dict:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def fraction_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def combo_to_json(combo: PowerSumCombo) -> dict:
    return {
        "terms": [
            {"exp": e, "num": str(c.numerator), "den": str(c.denominator)}
            for e, c in sorted(combo.terms.items())
        ]
    }


def combo_from_json(obj: dict) -> PowerSumCombo:
    return PowerSumCombo(
        {int(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in obj["terms"]}
    )


def poly_to_json(poly: Polynomial) -> dict:
    return {
        "terms": [
            {"exp": d, "num": str(c.numerator), "den": str(c.denominator)}
            for d, c in sorted(poly.coefficients.items())
        ]
    }


def poly_from_json(obj: dict) -> Polynomial:
    return Polynomial(
        {int(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in obj["terms"]}
    )


def form_to_json(form: BinaryQuadraticForm) -> dict:
    return {"alpha": str(form.alpha), "beta": str(form.beta), "gamma": str(form.gamma)}


def form_from_json(obj: dict) -> BinaryQuadraticForm:
    return BinaryQuadraticForm(int(obj["alpha"]), int(obj["beta"]), int(obj["gamma"]))


def form_quadruple_to_json(
    fq: FormQuadruple | SquareFormQuadruple,
    content: int | None = None,
) -> dict:
    identity = "square" if isinstance(fq, SquareFormQuadruple) else "cubic"
    out: dict = {"identity": identity, "q": [form_to_json(f) for f in fq.forms]}
    if fq.seed is not None:
        out["seed"] = list(fq.seed.as_tuple)
    if content is not None:
        out["content"] = str(content)
    return out


def form_quadruple_from_json(obj: dict) -> FormQuadruple | SquareFormQuadruple:
    forms = [form_from_json(f) for f in obj["q"]]
    seed_values = obj.get("seed")
    if obj.get("identity", "cubic") == "square":
        seed = PythagoreanQuadruple(*seed_values) if seed_values else None
        return SquareFormQuadruple(*forms, seed=seed)
    seed = CubicQuadruple(*seed_values) if seed_values else None
    return FormQuadruple(*forms, seed=seed)


def combo_quadruple_to_json(cq: ComboQuadruple) -> dict:
    out: dict = {
        "mode": cq.mode.label,
        "combos": [combo_to_json(c) for c in cq.combos],
        "common_factor": fraction_to_json(cq.common_factor),
    }
    if cq.forms.seed is not None:
        out["seed"] = list(cq.forms.seed.as_tuple)
    return out


def poly_identity_to_json(pi: PolyIdentity) -> dict:
    return {
        "p": [poly_to_json(p) for p in pi.polys],
        "scale": fraction_to_json(pi.scale),
    }


# --- LaTeX --------------------------------------------------------------


def latex_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def _join_terms(parts: Sequence[tuple[Fraction, str]]) -> str:
    """Signed sum of (coefficient, symbol) terms; symbol may be empty."""
    chunks: list[str] = []
    for coeff, symbol in parts:
        if not coeff:
            continue
        magnitude = abs(coeff)
        if symbol and magnitude == 1:
            body = symbol
        elif symbol:
            body = f"{latex_rational(magnitude)}{symbol}"
        else:
            body = latex_rational(magnitude)
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"{'+' if coeff > 0 else '-'} {body}")
    return " ".join(chunks) if chunks else "0"


def _power_symbol(var: str, degree: int) -> str:
    if degree == 0:
        return ""
    if degree == 1:
        return var
    return f"{var}^{degree}" if degree < 10 else f"{var}^{{{degree}}}"


def poly_to_latex(poly: Polynomial, var: str = "u", order: str = "asc") -> str:
    degrees = sorted(poly.coefficients, reverse=(order == "desc"))
    return _join_terms([(poly.coefficient(d), _power_symbol(var, d)) for d in degrees])


def _subscript_symbol(exp: int) -> str:
    if exp == CONSTANT_EXP:
        return ""
    return f"S_{exp}" if exp < 10 else f"S_{{{exp}}}"


def combo_to_latex(combo: PowerSumCombo) -> str:
    exps = sorted(combo.terms)  # constant slot (-1) sorts first
    return _join_terms([(combo.coefficient(e), _subscript_symbol(e)) for e in exps])


def form_to_latex(form: BinaryQuadraticForm, variables: tuple[str, str] = ("u", "v")) -> str:
    u, v = variables
    return _join_terms(
        [
            (Fraction(form.alpha), f"{u}^2"),
            (Fraction(form.beta), f"{u}{v}"),
            (Fraction(form.gamma), f"{v}^2"),
        ]
    )


def power_display(parts: Sequence[str], exponent: int, split: int | None = None) -> str:
    """``(p1)^e + ... = (pn)^e`` with the last ``split`` parts on the right.

    ``split`` defaults to 1 (a single right-hand side term).
    """
    rhs_count = 1 if split is None else split
    wrapped = [f"({p})^{exponent}" for p in parts]
    lhs = " + ".join(wrapped[: len(wrapped) - rhs_count])
    rhs = " + ".join(wrapped[len(wrapped) - rhs_count:])
    return f"{lhs} = {rhs}"


def cubic_forms_latex(fq: FormQuadruple) -> str:
    return power_display([form_to_latex(f) for f in fq.forms], 3)


def square_forms_latex(sq: SquareFormQuadruple) -> str:
    return power_display([form_to_latex(f) for f in sq.forms], 2)


def combo_quadruple_latex(cq: ComboQuadruple) -> str:
    return power_display([combo_to_latex(c) for c in cq.combos], 3)


def poly_identity_latex(pi: PolyIdentity, var: str = "u") -> str:
    return power_display([poly_to_latex(p, var=var) for p in pi.polys], 3)
