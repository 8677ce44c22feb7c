# universality/stuffed.py
"""Mapas recheados: faces substituídas por elementos com vários bordos.

Cada elemento elementar tem perímetros (ℓ_1, ..., ℓ_n) e peso p_{ℓ_1..ℓ_n}.
A série M_k dos discos de perímetro k obedece

    M_k = t Σ_{l=0}^{k-2} M_l M_{k-2-l} + t Σ_ℓ Q_ℓ M_{k+ℓ-2},   M_0 = 1,

com Q_ℓ = Σ p_{ℓ_1..ℓ_n} Σ_{i: ℓ_i = ℓ} Π_{j≠i} M_{ℓ_j} / ℓ_j. Só discos
(n = 1) dão a equação de Tutte usual; pares de perímetros com peso
C(ℓ_1 + ℓ_2, ℓ_1) n / (ℓ_1 + ℓ_2) dão o modelo O(n) em anéis.
"""
from math import comb
from typing import Dict, List, Mapping, Optional, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from algebra.series import TSeries, coefficient_in, gen, make_ring, series_mul, to_qq, var_names
from utils.errors import UsageError
from utils.logger import app_logger

Weights = Mapping[Tuple[int, ...], object]


def disc_weights(s: int, value=1) -> Dict[Tuple[int, ...], object]:
    """p_ℓ = value para faces comuns de grau 1..s"""
    return {(l,): value for l in range(1, s + 1)}


def on_weights(s: int, R=None) -> Dict[Tuple[int, ...], object]:
    """Anéis do modelo O(n), com n simbólico no anel R"""
    R = make_ring(("n",)) if R is None else R
    n = gen(R, "n")
    return {(a, b): n * QQ(comb(a + b, a), a + b) for a in range(1, s + 1) for b in range(1, s + 1)}


def _coerce(R, value) -> PolyElement:
    if isinstance(value, PolyElement):
        return value.set_ring(R)
    return R(to_qq(value))


def _validate(weights: Weights, r: Optional[int], s: Optional[int]) -> Tuple[int, int]:
    if not weights:
        return r or 0, s or 0
    for key in weights:
        if not key or any(int(l) < 1 for l in key):
            raise UsageError(f"perimeters must be positive, got {key}")
    r = max(len(k) for k in weights) if r is None else r
    s = max(max(k) for k in weights) if s is None else s
    for key in weights:
        if len(key) > r or max(key) > s:
            raise UsageError(f"element {key} exceeds r = {r} boundaries or perimeter s = {s}")
    return r, s


def _q_series(weights: Dict[Tuple[int, ...], PolyElement], Ms: List[TSeries], s: int) -> Dict[int, TSeries]:
    R, T = Ms[0].ring, Ms[0].order
    Q = {l: TSeries.zero(R, T) for l in range(1, s + 1)}
    for key, p in weights.items():
        if not p:
            continue
        for i, li in enumerate(key):
            term = TSeries.constant(R, T, p)
            for j, lj in enumerate(key):
                if j != i:
                    term = series_mul(term, Ms[lj]).scale(QQ(1, lj))
            Q[li] = Q[li] + term
    return Q


def _step(Ms: List[TSeries], Q: Dict[int, TSeries], K: int) -> List[TSeries]:
    R, T = Ms[0].ring, Ms[0].order
    out = [Ms[0]]
    for k in range(1, K + 1):
        acc = TSeries.zero(R, T)
        for l in range(k - 1):
            acc = acc + series_mul(Ms[l], Ms[k - 2 - l])
        for l, q in Q.items():
            m = k + l - 2
            if 0 <= m <= K and not q.is_zero():
                acc = acc + series_mul(q, Ms[m])
        out.append(acc.shift(1))
    return out


def stuffed_Mk(weights: Weights, T: int, r: Optional[int] = None, s: Optional[int] = None,
               R=None) -> List[TSeries]:
    """[M_0, ..., M_{2T}] até t^T, por iteração de ponto fixo"""
    if T < 0:
        raise UsageError(f"negative order {T}")
    r, s = _validate(weights, r, s)
    R = make_ring(("n",)) if R is None else R
    coerced = {tuple(int(l) for l in key): _coerce(R, p) for key, p in weights.items()}
    # M_k = O(t^{k/2}); perímetros até 2T + s alimentam os Q_ℓ
    K = 2 * T + s
    Ms = [TSeries.one(R, T)] + [TSeries.zero(R, T) for _ in range(K)]
    for _ in range(T + 1):
        Ms = _step(Ms, _q_series(coerced, Ms, s), K)
    app_logger.debug(f"stuffed maps: {len(coerced)} elements, r = {r}, s = {s}, order {T}")
    return Ms[: 2 * T + 1]


def rooted_total(Ms: List[TSeries]) -> TSeries:
    """Σ_k M_k: discos enraizados de qualquer perímetro"""
    total = TSeries.zero(Ms[0].ring, Ms[0].order)
    for m in Ms:
        total = total + m
    return total


def stuffed_catalytic_check(weights: Weights, Ms: List[TSeries], s: Optional[int] = None) -> bool:
    """M(x) = 1 + t x² M(x)² + t x Σ_ℓ Q_ℓ Δ^{(ℓ-1)} M(x), coeficiente a coeficiente em x^k, k <= 2T"""
    _, s = _validate(weights, None, s)
    R, T = Ms[0].ring, Ms[0].order
    top = len(Ms) - 1
    names = var_names(R)
    X = make_ring(names if "x" in names else names + ("x",))
    x = gen(X, "x")
    coerced = {tuple(int(l) for l in key): _coerce(R, p) for key, p in weights.items()}
    padded = list(Ms) + [TSeries.zero(R, T) for _ in range(max(0, s - top))]
    Q = _q_series(coerced, padded, s)
    lifted = [m.set_ring(X) for m in Ms]

    def from_index(i: int) -> TSeries:
        # Δ^{(i)} M(x) = Σ_{k>=i} M_k x^{k-i}
        acc = TSeries.zero(X, T)
        for k in range(i, top + 1):
            acc = acc + lifted[k].scale(x ** (k - i))
        return acc

    Mx = from_index(0)
    rhs = TSeries.one(X, T) + series_mul(Mx, Mx).scale(x ** 2).shift(1)
    for l, q in Q.items():
        if not q.is_zero():
            rhs = rhs + series_mul(q.set_ring(X), from_index(l - 1)).scale(x).shift(1)
    # M_k = O(t^{k/2}): acima de 2T os M_k somem nesta ordem
    for c_lhs, c_rhs in zip(Mx.coeffs, rhs.coeffs):
        for k in range(top + 1):
            if coefficient_in(c_lhs, "x", k) != coefficient_in(c_rhs, "x", k):
                app_logger.warning(f"catalytic equation fails at x^{k}")
                return False
    return True
