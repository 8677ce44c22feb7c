# hierarchy/kp.py
"""Equação KP e as duas seguintes da hierarquia, escritas para F = log τ.

Dois modos de derivar em p:
  - paramétrico (padrão): t é só um parâmetro, ∂/∂p_k não mexe na potência de t;
  - graduado: F precisa ser homogêneo (grau em t = peso em p) e ∂/∂p_k desce o
    índice em k, de modo que o índice do resultado é o peso em p.
"""
from typing import Dict, Iterable, Tuple

from sympy.polys.domains import QQ

from algebra.series import TSeries, pderiv, series_mul, var_names
from utils.errors import UsageError


def graded_pderiv(F: TSeries, k: int) -> TSeries:
    """[t^w] ∂F/∂p_k = ∂/∂p_k [t^{w+k}] F; a ordem cai de k"""
    if F.order < k:
        raise UsageError(f"a series of order {F.order} has no weight left for ∂/∂p{k}")
    d = pderiv(F, f"p{k}")
    return TSeries(F.ring, d.coeffs[k:])


class Partials:
    """Derivadas parciais de F em p, calculadas sob demanda e guardadas"""

    def __init__(self, F: TSeries, graded: bool = False):
        self.F = F
        self.graded = graded
        self._cache: Dict[Tuple[int, ...], TSeries] = {(): F}

    def __call__(self, *ks: int) -> TSeries:
        key = tuple(sorted(ks, reverse=True))
        if key not in self._cache:
            parent = self(*key[1:])
            k = key[0]
            self._cache[key] = graded_pderiv(parent, k) if self.graded else pderiv(parent, f"p{k}")
        return self._cache[key]


def common_order(series: Iterable[TSeries]) -> int:
    return min(s.order for s in series)


def linear(terms) -> TSeries:
    """Σ c_i S_i, com todos os S_i cortados na menor ordem"""
    terms = list(terms)
    order = common_order(s for _, s in terms)
    out = None
    for c, s in terms:
        s = s.truncate(order).scale(c)
        out = s if out is None else out + s
    return out


def mul(*factors: TSeries) -> TSeries:
    order = common_order(factors)
    out = factors[0].truncate(order)
    for f in factors[1:]:
        out = series_mul(out, f.truncate(order))
    return out


def kp1(d: Partials) -> TSeries:
    """-F_{3,1} + F_{2,2} + ½F_{1,1}² + F_{1,1,1,1}/12"""
    return linear([(-1, d(3, 1)), (1, d(2, 2)), (QQ(1, 2), mul(d(1, 1), d(1, 1))), (QQ(1, 12), d(1, 1, 1, 1))])


def kp2(d: Partials) -> TSeries:
    """-2F_{4,1} + 2F_{3,2} + 2F_{2,1}F_{1,1} + F_{2,1,1,1}/3"""
    return linear([(-2, d(4, 1)), (2, d(3, 2)), (2, mul(d(2, 1), d(1, 1))), (QQ(1, 3), d(2, 1, 1, 1))])


def kp3(d: Partials) -> TSeries:
    f11 = d(1, 1)
    return linear([
        (-6, d(5, 1)),
        (4, d(4, 2)),
        (2, d(3, 3)),
        (4, mul(d(3, 1), f11)),
        (QQ(2, 3), d(3, 1, 1, 1)),
        (4, mul(d(2, 1), d(2, 1))),
        (2, mul(d(2, 2), f11)),
        (1, d(2, 2, 1, 1)),
        (QQ(1, 3), mul(f11, f11, f11)),
        (QQ(1, 6), mul(d(1, 1, 1, 1), f11)),
        (QQ(1, 180), d(1, 1, 1, 1, 1, 1)),
    ])


def kp_residual(F: TSeries) -> TSeries:
    """Lado esquerdo da equação KP; zero exato quando exp(F) é função tau KP"""
    missing = [f"p{k}" for k in range(1, 5) if f"p{k}" not in var_names(F.ring)]
    if missing:
        raise UsageError(f"the KP equation needs p1..p4 in the ring; missing {', '.join(missing)}")
    return kp1(Partials(F))

