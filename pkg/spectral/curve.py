# spectral/curve.py
"""Mudança de variável Z(x) e as funções disco e cilindro do gênero zero.

Z resolve Z = x^{-1} Π_I A^{(i)}(Z) / Π_J A^{(j)}(Z); com ela

    W_{0,1}(x) = x^{-1} H(Z(x)) - Σ_k p_k x^{k-1},   H = A^{(0)} B^{(0)} - u_0
    W_{0,2}(x1, x2) = y1² y2² ∂_{y1} ∂_{y2} log( (Z(y1) - Z(y2)) / (κ (y1 - y2)) )

com y = 1/x e κ = Π_I u_i / Π_J u_j. A segunda forma é a expansão de
Z'(x1)Z'(x2)/(Z(x1)-Z(x2))² - 1/(x1-x2)² em potências de 1/x1 e 1/x2, sem o polo
aparente em x1 = x2.
"""
from algebra.series import TSeries, gen, pderiv, series_log
from spectral.laurent import LaurentRing
from spectral.system import BOUNDARIES, X, Z, ABSystem
from utils.errors import TruncationError
from utils.logger import app_logger


def _checked(sys: ABSystem, T: int):
    sys._require_solved()
    if T > sys.order:
        raise TruncationError(f"system solved to t^{sys.order}, t^{T} requested")
    return [a.truncate(T) for a in sys.A], [b.truncate(T) for b in sys.B]


def _at(L: LaurentRing, f: TSeries, Zx: TSeries, Wx: TSeries, lo: int, hi: int) -> TSeries:
    return L.substitute(f, Z, Zx, Wx, lo, hi)


def _ratio_at(sys: ABSystem, A, Zx: TSeries, T: int) -> TSeries:
    """Π_I A^{(i)}(Z) / Π_J A^{(j)}(Z)"""
    L = sys.lring
    factors = []
    for c in sys.colors:
        value = _at(L, A[c], Zx, Zx, 0, sys.D2)
        factors.append(value if c < sys.m else L.inverse(value))
    return L.prod(factors, T)


def solve_Z(sys: ABSystem, T: int) -> TSeries:
    """Z(x) em potências de x^{-1}; cada iteração fixa mais uma ordem em t"""
    A, _ = _checked(sys, T)
    L = sys.lring
    x_inv = L.power(X, -1)
    Zx = TSeries.constant(sys.R, T, L.reduce(sys.kappa() * x_inv))
    for _ in range(T + 1):
        Zx = _ratio_at(sys, A, Zx, T).scale(x_inv).map(L.reduce)
    app_logger.debug(f"Z(x) solved to t^{T} for m={sys.m}, s={sys.s}")
    return Zx


def x_of_z(sys: ABSystem, Zx: TSeries) -> TSeries:
    """X(Z) = Z^{-1} Π_I A(Z) / Π_J A(Z); sobre Z(x) devolve x"""
    A, _ = _checked(sys, Zx.order)
    L = sys.lring
    return L.mul(L.inverse(Zx), _ratio_at(sys, A, Zx, Zx.order))


def disc_W01(sys: ABSystem, T: int) -> TSeries:
    A, B = _checked(sys, T)
    L, R = sys.lring, sys.R
    Zx = solve_Z(sys, T)
    Wx = L.inverse(Zx)
    H = L.mul(A[0], B[0]) - TSeries.constant(R, T, sys.vertex(0))
    value = _at(L, H, Zx, Wx, -sys.D1, sys.D2).scale(L.power(X, -1)).map(L.reduce)
    shift = R.zero
    for k, pk in sys.p_weights().items():
        shift += pk * L.power(X, k - 1)
    out = (value - TSeries.constant(R, T, L.reduce(shift))).map(L.reduce)
    app_logger.info(f"Disc function W_(0,1) computed to t^{T}")
    return out


def cylinder_W02(sys: ABSystem, T: int) -> TSeries:
    """Série nas variáveis x1_inv e x2_inv"""
    _checked(sys, T)
    L, R = sys.lring, sys.R
    Zx = solve_Z(sys, T)
    y1, y2 = (gen(R, name) for name in BOUNDARIES)
    top = max((-L.degree(m, X) for c in Zx.coeffs for m in c.keys()), default=1)
    # (Z(y1) - Z(y2)) / (y1 - y2) = Σ_k c_k h_{k-1}(y1, y2)
    quotient = TSeries.zero(R, T)
    for k in range(1, top + 1):
        ck = L.components(Zx, X, -k)
        if ck.is_zero():
            continue
        h = sum((y1 ** a * y2 ** (k - 1 - a) for a in range(k)), R.zero)
        quotient = quotient + ck.scale(h)
    quotient = quotient.scale(L.unit_inverse(sys.kappa())).map(L.reduce)
    log_q = series_log(quotient)
    mixed = pderiv(pderiv(log_q, BOUNDARIES[0]), BOUNDARIES[1])
    out = mixed.scale(y1 ** 2 * y2 ** 2).map(L.reduce)
    app_logger.info(f"Cylinder function W_(0,2) computed to t^{T}")
    return out
