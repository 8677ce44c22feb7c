"""Serialização exata de racionais e polinômios ("num/den", ordem canônica)."""
import re
from typing import Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from algebra.series import gen, to_qq, var_names
from utils.errors import UsageError


def format_rat(value) -> str:
    q = to_qq(value)
    num, den = int(QQ.numer(q)), int(QQ.denom(q))
    return str(num) if den == 1 else f"{num}/{den}"


def parse_rat(text: str):
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            if int(den) == 0:
                raise UsageError(f"zero denominator in {text!r}")
            return QQ(int(num), int(den))
        return QQ(int(text))
    except ValueError as e:
        raise UsageError(f"not an exact rational: {text!r}") from e


def _monomial_text(names: Tuple[str, ...], monom: Tuple[int, ...]) -> str:
    parts = []
    for name, e in zip(names, monom):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(p: PolyElement) -> str:
    """Termos em ordem lexicográfica decrescente dos expoentes (ordem congelada)"""
    if not p:
        return "0"
    names = var_names(p.ring)
    chunks = []
    for monom in sorted(p.keys(), reverse=True):
        c = format_rat(p[monom])
        mono = _monomial_text(names, monom)
        if not mono:
            chunks.append(c)
        elif c == "1":
            chunks.append(mono)
        elif c == "-1":
            chunks.append(f"-{mono}")
        else:
            chunks.append(f"{c}*{mono}")
    return " + ".join(chunks).replace("+ -", "- ")


def format_value(value) -> str:
    if isinstance(value, PolyElement):
        if value.is_ground:
            return format_rat(value.LC if value else 0)
        return format_poly(value)
    return format_rat(value)


def parse_poly(text: str, R):
    """Inverso de format_poly: "3/2*u^2*v - u + 1" no anel R"""
    text = text.strip()
    if text in ("", "0"):
        return R.zero
    out = R.zero
    for sign, body in re.findall(r"([+-]?)\s*([^+-]+)", text.replace(" ", "")):
        coeff = QQ(-1) if sign == "-" else QQ(1)
        term = R.one
        for factor in body.split("*"):
            if not factor:
                raise UsageError(f"malformed polynomial {text!r}")
            if factor[0].isdigit():
                coeff *= parse_rat(factor)
                continue
            name, _, power = factor.partition("^")
            term *= gen(R, name) ** (int(power) if power else 1)
        out += term * coeff
    return out
