# universality/system.py
"""Sistemas algébricos dos mapas coloridos maximais.

Com N conjuntos de cores de tamanho d/2, a série f_N(t) dos mapas por número
de arestas resolve

    t f² = θ (1 - θ)²,    f = 1 + N (2θ - 3θ²),

e os mapas não separáveis resolvem t = θ (1 - θ)², P = (1 - θ)(1 + 3θ).
As duas soluções saem por Newton em θ, dobrando a precisão a cada passo.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence

from algebra.series import TSeries, gen, make_ring, series_compose, series_inverse, series_mul, to_qq
from colored.bubbles import quartic_bubble
from colored.gluings import GluingEnumerator
from config.settings import settings
from utils.errors import UsageError
from utils.logger import app_logger

KINDS = ("colored", "nonseparable")

# conjuntos com |c| = 2 em d = 4 que contêm a cor 1
HALF_COLOR_SETS = ({1, 2}, {1, 3}, {1, 4})


def _ring():
    return make_ring(("N",))


@dataclass(frozen=True)
class AlgSystem:
    """kind = "colored" com parâmetro N (None deixa N simbólico) ou "nonseparable" """

    kind: str = "colored"
    N: Optional[object] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UsageError(f"unknown system {self.kind!r}; expected one of {KINDS}")
        if self.kind == "colored" and self.N is not None and to_qq(self.N) <= 0:
            raise UsageError(f"N must be positive, got {self.N}")

    def parameter(self, R):
        if self.kind == "nonseparable":
            return R.zero
        return gen(R, "N") if self.N is None else R(to_qq(self.N))


@dataclass
class SystemSolution:
    system: AlgSystem
    theta: TSeries
    value: TSeries

    @property
    def order(self) -> int:
        return self.value.order

    def coefficients(self) -> List:
        return list(self.value.coeffs)


def _lift(s: TSeries, order: int) -> TSeries:
    return TSeries.from_coeffs(s.ring, order, s.coeffs)


def _newton_step(system: AlgSystem, theta: TSeries) -> TSeries:
    R, order = theta.ring, theta.order
    one = TSeries.one(R, order)
    t = TSeries.from_coeffs(R, order, [0, 1])
    rest = one - theta
    if system.kind == "nonseparable":
        G = series_mul(theta, series_mul(rest, rest)) - t
        dG = series_mul(rest, one - theta.scale(3))
    else:
        N = system.parameter(R)
        f = one + (theta.scale(2) - series_mul(theta, theta).scale(3)).scale(N)
        df = (one.scale(2) - theta.scale(6)).scale(N)
        tf = f.shift(1)
        G = series_mul(theta, series_mul(rest, rest)) - series_mul(tf, f)
        dG = series_mul(rest, one - theta.scale(3)) - series_mul(tf, df).scale(2)
    return theta - series_mul(G, series_inverse(dG))


def solve_theta(system: AlgSystem, T: int) -> TSeries:
    """θ(t) até t^T; θ(0) = 0 e cada passo dobra a ordem correta"""
    if T < 0:
        raise UsageError(f"negative order {T}")
    R = _ring()
    theta = TSeries.zero(R, 0)
    prec = 0
    while prec < T:
        prec = min(2 * prec + 1, T)
        theta = _newton_step(system, _lift(theta, prec))
        app_logger.debug(f"{system.kind} system: θ known to order {prec}")
    return theta


def solve_system(system: AlgSystem, T: int) -> SystemSolution:
    """θ e f (ou P) como séries em t até a ordem T"""
    theta = solve_theta(system, T)
    R = theta.ring
    one = TSeries.one(R, T)
    if system.kind == "nonseparable":
        value = series_mul(one - theta, one + theta.scale(3))
    else:
        N = system.parameter(R)
        value = one + (theta.scale(2) - series_mul(theta, theta).scale(3)).scale(N)
    return SystemSolution(system, theta, value)


def colored_series(N, T: Optional[int] = None) -> TSeries:
    T = settings.UNIVERSALITY_ORDER if T is None else T
    return solve_system(AlgSystem("colored", N), T).value


def nonseparable_series(T: int) -> TSeries:
    return solve_system(AlgSystem("nonseparable"), T).value


def maps_quadratic_residual(f: TSeries) -> TSeries:
    """27 t² f² + (1 - 18t) f + 16t - 1, nula quando f conta os mapas planares"""
    R, T = f.ring, f.order
    ff = series_mul(f, f)
    linear = series_mul(TSeries.from_coeffs(R, T, [1, -18]), f)
    return ff.shift(2).scale(27) + linear + TSeries.from_coeffs(R, T, [-1, 16])


def nonseparable_composition_check(T: int, P: Optional[TSeries] = None) -> bool:
    """M = P(t M²) com M a série dos mapas planares (f com N = 1)"""
    M = colored_series(1, T)
    P = nonseparable_series(T) if P is None else P
    if P.order != T:
        raise UsageError(f"P has order {P.order}, expected {T}")
    if T == 0:
        return M.coeff(0) == P.coeff(0)
    return M == series_compose(P, series_mul(M, M).shift(1))


def perturb(s: TSeries, k: int, delta=1) -> TSeries:
    """Soma delta ao coeficiente de t^k"""
    coeffs = list(s.coeffs)
    coeffs[k] = coeffs[k] + s.ring(to_qq(delta))
    return TSeries(s.ring, tuple(coeffs))


# --- contagem direta pelos grafos coloridos ---

def colored_model_counts(N: int, E: int, threads: Optional[int] = None) -> List[int]:
    """[t^k] f_N para k <= E, somando colagens enraizadas de Q(c_1), ..., Q(c_N) em d = 4"""
    if not 1 <= N <= len(HALF_COLOR_SETS):
        raise UsageError(f"d = 4 has {len(HALF_COLOR_SETS)} admissible half color sets, got N = {N}")
    sets = HALF_COLOR_SETS[:N]
    out = [1]
    for edges in range(1, E + 1):
        total = 0
        for counts in _compositions(edges, N):
            bubbles = [(quartic_bubble(c, 4), n) for c, n in zip(sets, counts) if n]
            census = GluingEnumerator(threads).enumerate(bubbles)
            total += census.rooted
        out.append(total)
        app_logger.info(f"colored model N = {N}: {total} rooted maps with {edges} edges")
    return out


def _compositions(total: int, parts: int) -> List[Sequence[int]]:
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        out.extend((first,) + rest for rest in _compositions(total - first, parts - 1))
    return out
