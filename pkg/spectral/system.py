# spectral/system.py
"""Sistema polinomial A/B do gênero zero.

Para cada cor c em I ∪ J (I = 0..m-1, J = m..m+s-1):

    A^{(c)}(z) = u_c + Σ_s q_s t^s { z^s Π_I B^s / Π_J B^s / B^{(c)} }^≥
    B^{(c)}(z) = 1 + Σ_s p_s [ z^{-s} Π_I A^s / Π_J A^s / A^{(c)} ]^<

A é polinomial em z de grau <= D2 e B em 1/z de grau <= D1. Os p_k não
carregam t, então B em t^0 só vale 1 quando p = 0.
"""
from dataclasses import dataclass, field, replace
from typing import Dict, Mapping, Optional, Tuple, Union

from sympy.polys.rings import PolyElement

from algebra.series import TSeries, gen, to_qq
from spectral.laurent import LaurentRing
from utils.errors import DomainError, UsageError
from utils.logger import app_logger

Param = Union[str, object]

Z = "z"
X = "x"
BOUNDARIES = ("x1_inv", "x2_inv")


def _is_symbol(value) -> bool:
    return isinstance(value, str)


@dataclass(frozen=True)
class ABSystem:
    """Dados do sistema e, depois de ``solve_AB``, as séries A^{(c)}, B^{(c)} até a ordem ``order``"""

    m: int
    s: int
    D1: int
    D2: int
    u: Tuple[Param, ...]
    p: Tuple[Tuple[int, Param], ...]
    q: Tuple[Tuple[int, Param], ...]
    lring: LaurentRing = field(repr=False, compare=False)
    A: Tuple[TSeries, ...] = field(default=(), repr=False, compare=False)
    B: Tuple[TSeries, ...] = field(default=(), repr=False, compare=False)
    order: int = -1

    @classmethod
    def create(cls, m: int, s: int = 0, D1: int = 1, D2: int = 1, u: Optional[Tuple[Param, ...]] = None,
               p: Optional[Mapping[int, Param]] = None, q: Optional[Mapping[int, Param]] = None) -> "ABSystem":
        """Pesos ausentes ficam simbólicos: u0..u{m+s-1}, p1..pD1, q1..qD2.

        Um dicionário em p ou q fixa os graus listados e zera os demais.
        """
        if m < 1 or s < 0:
            raise UsageError(f"need m >= 1 and s >= 0, got m={m}, s={s}")
        if D1 < 0 or D2 < 1:
            raise UsageError(f"need D1 >= 0 and D2 >= 1, got D1={D1}, D2={D2}")
        M = m + s
        u = tuple(f"u{c}" for c in range(M)) if u is None else tuple(u)
        if len(u) != M:
            raise UsageError(f"expected {M} vertex weights, got {len(u)}")
        p = {k: f"p{k}" for k in range(1, D1 + 1)} if p is None else dict(p)
        q = {k: f"q{k}" for k in range(1, D2 + 1)} if q is None else dict(q)
        for label, weights, bound in (("p", p, D1), ("q", q, D2)):
            bad = [k for k in weights if not 1 <= k <= bound]
            if bad:
                raise UsageError(f"{label} degrees {bad} outside 1..{bound}")
        u = tuple(x if _is_symbol(x) else to_qq(x) for x in u)
        p_items = tuple(sorted((k, v if _is_symbol(v) else to_qq(v)) for k, v in p.items()))
        q_items = tuple(sorted((k, v if _is_symbol(v) else to_qq(v)) for k, v in q.items()))
        symbols = [x for x in u if _is_symbol(x)]
        names = [v for _, v in p_items if _is_symbol(v)] + [v for _, v in q_items if _is_symbol(v)]
        if len(set(symbols + names)) != len(symbols) + len(names):
            raise UsageError("weight symbols must be distinct")
        lring = LaurentRing(tuple(names) + BOUNDARIES, tuple(symbols) + (Z, X))
        return cls(m, s, D1, D2, u, p_items, q_items, lring)

    @property
    def R(self):
        return self.lring.R

    @property
    def colors(self) -> range:
        return range(self.m + self.s)

    def weight(self, value) -> PolyElement:
        return gen(self.R, value) if _is_symbol(value) else self.R(value)

    def vertex(self, c: int) -> PolyElement:
        return self.weight(self.u[c])

    def kappa(self) -> PolyElement:
        """Π_I u_i / Π_J u_j"""
        value = self.R.one
        for c in self.colors:
            w = self.vertex(c)
            value = value * (w if c < self.m else self.lring.unit_inverse(w))
        return self.lring.reduce(value)

    def p_weights(self) -> Dict[int, PolyElement]:
        return {k: self.weight(v) for k, v in self.p if v != 0}

    def q_weights(self) -> Dict[int, PolyElement]:
        return {k: self.weight(v) for k, v in self.q if v != 0}

    def H(self, c: int = 0) -> TSeries:
        """A^{(c)} B^{(c)} - u_c"""
        self._require_solved()
        product = self.lring.mul(self.A[c], self.B[c])
        return product - TSeries.constant(self.R, self.order, self.vertex(c))

    def _require_solved(self):
        if self.order < 0:
            raise UsageError("the A/B system has not been solved yet")


def _ratio(lring: LaurentRing, values, inverses, m: int, c: int, s: int, order: int) -> TSeries:
    """Π_I V^s / Π_J V^s / V^{(c)}, cancelando V^{(c)} quando c está em I"""
    factors = []
    for i in range(m):
        power = s - 1 if i == c else s
        factors.extend([values[i]] * power)
    for j in range(m, len(values)):
        power = s + 1 if j == c else s
        factors.extend([inverses(j)] * power)
    return lring.prod(factors, order)


def solve_AB(sys: ABSystem, T: int) -> ABSystem:
    """Iteração de ponto fixo: cada volta acerta mais uma ordem em t"""
    if T < 0:
        raise UsageError(f"truncation order must be non-negative, got {T}")
    L, R = sys.lring, sys.R
    colors = list(sys.colors)
    for c in colors[sys.m:]:
        if not sys.vertex(c):
            raise DomainError(f"vertex weight u_{c} vanishes; its inverse enters the system")
    p, q = sys.p_weights(), sys.q_weights()
    A = [TSeries.constant(R, T, sys.vertex(c)) for c in colors]
    B = [TSeries.one(R, T) for _ in colors]

    def update_B(A):
        cache = {}

        def inv(j):
            if j not in cache:
                cache[j] = L.clip(L.inverse(A[j]), Z, 0, sys.D1)
            return cache[j]

        out = []
        for c in colors:
            total = TSeries.one(R, T)
            for k, pk in p.items():
                ratio = L.clip(_ratio(L, A, inv, sys.m, c, k, T), Z, 0, k - 1)
                shifted = ratio.scale(L.power(Z, -k)).map(L.reduce)
                total = total + L.clip(shifted, Z, -k, -1).scale(pk)
            out.append(total)
        return out

    def update_A(B):
        cache = {}

        def inv(j):
            if j not in cache:
                cache[j] = _invert_in_z(L, B[j], sys.D2, T)
            return cache[j]

        out = []
        for c in colors:
            total = TSeries.constant(R, T, sys.vertex(c))
            for k, qk in q.items():
                ratio = L.clip(_ratio(L, B, inv, sys.m, c, k, T), Z, -k, 0)
                shifted = ratio.scale(L.power(Z, k)).map(L.reduce)
                total = total + L.clip(shifted, Z, 0, k).shift(k).scale(qk)
            out.append(total)
        return out

    B = update_B(A)
    for sweep in range(T + 1):
        A_next = update_A(B)
        B_next = update_B(A_next)
        if A_next == A and B_next == B:
            break
        A, B = A_next, B_next
    app_logger.debug(f"A/B system m={sys.m} s={sys.s} solved to t^{T} after {sweep + 1} sweeps")
    return replace(sys, A=tuple(A), B=tuple(B), order=T)


def _invert_in_z(L: LaurentRing, b: TSeries, depth: int, order: int) -> TSeries:
    """1/B com B = 1 + (potências negativas de z), cortada em z^{-depth}"""
    rest = b - TSeries.one(L.R, order)
    out = TSeries.one(L.R, order)
    term = TSeries.one(L.R, order)
    for _ in range(depth):
        term = L.clip(L.mul(term, -rest), Z, -depth, 0)
        if term.is_zero():
            break
        out = out + term
    return out
