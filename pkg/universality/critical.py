# universality/critical.py
"""Ponto crítico de f_N e estimativa do expoente.

Parametrizando por θ, t(θ) = θ(1 - θ)² / f(θ)² e a singularidade dominante é o
menor zero positivo de t'(θ), que se fatora em (1 - 3θ)(1 - 2Nθ + Nθ²). O valor
t_c é exato (polinômio mínimo mais intervalo racional isolante) e aparece como
raiz do discriminante do polinômio em (f, t) obtido eliminando θ.

O expoente é a única conta em ponto flutuante: método das razões com
extrapolação de Richardson, rotulado como estimativa.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

import pandas as pd
import sympy
from sympy.polys.domains import QQ

from algebra.series import to_qq
from config.settings import settings
from universality.system import colored_series
from utils.errors import DomainError, UsageError
from utils.logger import app_logger

theta, f, t = sympy.symbols("theta f t")


def _rational(N) -> sympy.Rational:
    q = to_qq(N)
    if q <= 0:
        raise UsageError(f"N must be positive, got {N}")
    return sympy.Rational(int(q.numerator), int(q.denominator))


def f_of_theta(N) -> sympy.Expr:
    return 1 + _rational(N) * (2 * theta - 3 * theta ** 2)


def eliminate_f(N) -> sympy.Poly:
    """Polinômio em (f, t) anulado por f_N, via resultante em θ (parte livre de quadrados)"""
    Nq = _rational(N)
    first = t * f ** 2 - theta * (1 - theta) ** 2
    second = f - 1 - Nq * (2 * theta - 3 * theta ** 2)
    res = sympy.resultant(first, second, theta)
    poly = sympy.Poly(sympy.sqf_part(sympy.expand(res)), f, t, domain="QQ")
    app_logger.debug(f"eliminated system for N = {Nq}: degree {poly.degree(f)} in f")
    return poly


def critical_polynomial(N) -> sympy.Expr:
    """Numerador de t'(θ) a menos do fator (1 - θ)"""
    Nq = _rational(N)
    return sympy.expand((1 - 3 * theta) * (1 - 2 * Nq * theta + Nq * theta ** 2))


@dataclass
class CriticalPoint:
    N: sympy.Rational
    theta_c: sympy.Expr
    f_c: sympy.Expr
    t_c: sympy.Expr
    minimal_polynomial: sympy.Poly
    interval: Tuple[object, object]
    exponent: Optional[float] = None

    @property
    def is_rational(self) -> bool:
        return self.minimal_polynomial.degree() == 1

    @property
    def phase(self) -> str:
        threshold = sympy.Rational(9, 5)
        if self.N < threshold:
            return "maps"
        if self.N > threshold:
            return "trees"
        return "baby universes"


def _isolating_interval(poly: sympy.Poly, value: sympy.Expr) -> Tuple[object, object]:
    approx = sympy.N(value, 30)
    intervals = [iv for iv, _ in poly.intervals(eps=sympy.Rational(1, 10 ** 12))]
    if not intervals:
        raise DomainError(f"no real root isolated for {value}")
    lo, hi = min(intervals, key=lambda iv: abs((iv[0] + iv[1]) / 2 - approx))
    return QQ(int(lo.p), int(lo.q)), QQ(int(hi.p), int(hi.q))


def discriminant_check(point: CriticalPoint) -> bool:
    """t_c anula o discriminante do polinômio eliminado"""
    disc = sympy.Poly(sympy.discriminant(eliminate_f(point.N).as_expr(), f), t, domain="QQ")
    if disc.is_zero:
        raise DomainError("the eliminated polynomial has a vanishing discriminant")
    return disc.rem(point.minimal_polynomial).is_zero


def critical_point(N, estimate: bool = False, T: Optional[int] = None) -> CriticalPoint:
    """(θ_c, f_c, t_c exato) e, se pedido, a estimativa do expoente até a ordem T"""
    Nq = _rational(N)
    roots = [r for r in sympy.solve(critical_polynomial(Nq), theta) if r.is_real and r.is_positive]
    theta_c = min(roots, key=lambda r: sympy.N(r, 30))
    f_c = sympy.radsimp(sympy.expand(f_of_theta(Nq).subs(theta, theta_c)))
    t_c = sympy.radsimp(sympy.simplify(theta_c * (1 - theta_c) ** 2 / f_c ** 2))
    minpoly = sympy.Poly(sympy.minimal_polynomial(t_c, t), t, domain="QQ")
    point = CriticalPoint(Nq, theta_c, f_c, t_c, minpoly, _isolating_interval(minpoly, t_c))
    app_logger.info(f"N = {Nq}: θ_c = {theta_c}, t_c = {t_c} ({point.phase} phase)")
    if estimate:
        T = settings.EXPONENT_ORDER if T is None else T
        series = colored_series(Nq, T)
        point.exponent = exponent_estimate([c.LC if c else QQ(0) for c in series.coeffs], float(t_c))
    return point


# --- expoente ---

def ratio_estimates(coeffs: List, t_c: float) -> pd.DataFrame:
    """α_n = n (t_c a_n / a_{n-1} - 1) e a extrapolação n α_n - (n-1) α_{n-1}"""
    rows = []
    for n in range(2, len(coeffs)):
        if not coeffs[n - 1]:
            continue
        ratio = float(coeffs[n] / coeffs[n - 1])
        rows.append({"n": n, "ratio": ratio})
    frame = pd.DataFrame(rows)
    if frame.empty:
        raise UsageError("the ratio method needs at least three nonzero coefficients")
    frame["alpha"] = frame["n"] * (t_c * frame["ratio"] - 1)
    frame["richardson"] = frame["n"] * frame["alpha"] - (frame["n"] - 1) * frame["alpha"].shift(1)
    return frame


def exponent_estimate(coeffs: List, t_c: float) -> float:
    """a_n ~ C t_c^{-n} n^α; devolve a última estimativa extrapolada de α"""
    frame = ratio_estimates(coeffs, t_c)
    value = float(frame["richardson"].dropna().iloc[-1])
    app_logger.debug(f"exponent estimate from {len(coeffs)} coefficients: {value:.4f}")
    return value
