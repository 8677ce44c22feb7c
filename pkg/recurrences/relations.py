# recurrences/relations.py
"""Relação de eliminação para as derivadas especializadas de log τ dos mapas não orientados.

θF_λ denota ∂_{p_λ} log τ com todos os p_k trocados por z. A relação exprime
(i+2) θF_{i+2,3^{n3},2^{n2},1^{n1}} / t^2 por vetores de tamanho menor e por
t∂_t θF_{3^{n3},2^{n2},1^{n1}}; aqui os dois lados são calculados a partir de τ.
"""
from functools import lru_cache
from math import comb
from typing import Dict, Mapping, Optional, Tuple

from sympy.polys.domains import QQ

from algebra.series import TSeries, gen, make_ring, pderiv, series_log, series_mul, var_names
from tau.builders import build_tau_family
from utils.errors import UsageError
from utils.logger import app_logger

TERMS = ("pairs", "connected", "shifts", "euler", "low", "diag", "const")

Parts = Tuple[int, ...]


class SpecializedLog:
    """θF_λ sob demanda, com cache por vetor λ ordenado"""

    def __init__(self, T: int):
        tau = build_tau_family("zonal_maps", T)
        F = series_log(tau.series)
        names = var_names(F.ring)
        self.R = make_ring(names + ("z",))
        self.F = F.set_ring(self.R)
        self.z = gen(self.R, "z")
        self.D = max(int(x[1:]) for x in names if x.startswith("p") and x[1:].isdigit())
        self.order = T
        self._theta = {x: self.z for x in names if x.startswith("p") and x[1:].isdigit()}
        self._cache: Dict[Parts, TSeries] = {}

    def __call__(self, *parts: int) -> TSeries:
        key = tuple(sorted(parts, reverse=True))
        if key not in self._cache:
            if any(k > self.D for k in key):
                # p_k carrega t^k: acima de D nada sobrevive até a ordem T
                value = TSeries.zero(self.R, self.order)
            else:
                value = self.F
                for k in key:
                    value = pderiv(value, f"p{k}")
                value = value.substitute(self._theta)
            self._cache[key] = value
        return self._cache[key]


@lru_cache(maxsize=4)
def _specialized(T: int) -> SpecializedLog:
    return SpecializedLog(T)


def _rest(n1: int, n2: int, n3: int) -> Parts:
    return (3,) * n3 + (2,) * n2 + (1,) * n1


def rel_glambda_sides(i: int, n1: int, n2: int, n3: int, T: int,
                      weights: Optional[Mapping[str, object]] = None) -> Tuple[TSeries, TSeries]:
    """(lado esquerdo, lado direito) até a ordem T - 2 em t.

    weights multiplica cada grupo de termos do lado direito (chaves em TERMS);
    o padrão é 1 em todos.
    """
    if i < -1:
        raise UsageError(f"the relation starts at i = -1, got {i}")
    if min(n1, n2, n3) < 0:
        raise UsageError(f"multiplicities must be non-negative, got {(n1, n2, n3)}")
    if T < 2 or i + 2 > T:
        raise UsageError(f"order T = {T} cannot hold a vector with part {i + 2}")
    w = {name: QQ(1) for name in TERMS}
    for name, value in (weights or {}).items():
        if name not in w:
            raise UsageError(f"unknown term {name!r}; expected one of {TERMS}")
        w[name] = QQ(value)

    theta = _specialized(T)
    R, z = theta.R, theta.z
    u = gen(R, "u")
    order = T - 2
    lam = _rest(n1, n2, n3)
    size = n1 + 2 * n2 + 3 * n3

    head = theta(i + 2, *lam)
    lhs = TSeries(R, tuple(head.coeffs[n + 2] * (i + 2) for n in range(order + 1)))

    rhs = TSeries.zero(R, T)
    for a in range(1, i):
        b = i - a
        for l1 in range(n1 + 1):
            for l2 in range(n2 + 1):
                for l3 in range(n3 + 1):
                    c = 2 * a * b * comb(n1, l1) * comb(n2, l2) * comb(n3, l3)
                    left = theta(a, *_rest(l1, l2, l3))
                    right = theta(b, *_rest(n1 - l1, n2 - l2, n3 - l3))
                    rhs = rhs + series_mul(left, right).scale(c * w["pairs"])
        rhs = rhs + theta(a, b, *lam).scale(2 * a * b * w["connected"])
    for j, nj in ((1, n1), (2, n2), (3, n3)):
        if nj and i + j >= 1:
            fewer = _rest(n1 - (j == 1), n2 - (j == 2), n3 - (j == 3))
            rhs = rhs + theta(i + j, *fewer).scale(nj * (i + j) * w["shifts"])
    base = theta(*lam)
    euler = TSeries(R, tuple(c * (n - size) for n, c in enumerate(base.coeffs)))
    rhs = rhs + euler.scale(w["euler"])
    for a in range(1, i + 1):
        rhs = rhs - theta(a, *lam).scale(z * a * w["low"])
    if i >= 1:
        rhs = rhs + theta(i, *lam).scale((2 * u + i + 1) * i * w["diag"])
    if n2 == 0 and n3 == 0:
        const = R.zero
        if i == -1:
            const = R.one if n1 == 1 else (z if n1 == 0 else R.zero)
        elif i == 0 and n1 == 0:
            const = u + 1
        if const:
            constant = TSeries.constant(R, T, const * u * QQ(1, 2))
            rhs = rhs + constant.scale(w["const"])
    return lhs, rhs.truncate(order)


def rel_glambda_check(i: int, n1: int, n2: int, n3: int, T: int,
                      weights: Optional[Mapping[str, object]] = None) -> bool:
    lhs, rhs = rel_glambda_sides(i, n1, n2, n3, T, weights)
    ok = lhs == rhs
    log = app_logger.info if ok else app_logger.warning
    log(f"Elimination relation i={i} n=({n1},{n2},{n3}) up to t^{T - 2}: {'holds' if ok else 'fails'}")
    return ok
