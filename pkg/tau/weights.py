# tau/weights.py
"""Função peso G(z) = e^{z/w} Π(u_i + z) / Π(v_r + z) das funções tau hipergeométricas."""
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing

from algebra.series import gen, to_qq
from utils.errors import DomainError, UsageError


class WInfinity(Enum):
    """w = ∞: o fator exponencial desaparece"""

    INFINITY = "inf"


W_INFINITY = WInfinity.INFINITY

Param = Union[str, object]


def _is_symbol(value) -> bool:
    return isinstance(value, str)


@dataclass(frozen=True)
class WeightG:
    """Parâmetros de G

    u_i simbólico: nome da variável do anel.
    v_r simbólico: nome da variável que representa 1/v_r (expoente n + k_r).
    w simbólico: nome da variável que representa 1/w; racional: valor de w.
    """

    u: Tuple[Param, ...] = ()
    v: Tuple[Param, ...] = ()
    w: Union[str, object, WInfinity] = W_INFINITY

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(x if _is_symbol(x) else to_qq(x) for x in self.u))
        object.__setattr__(self, "v", tuple(x if _is_symbol(x) else to_qq(x) for x in self.v))
        if not (self.w is W_INFINITY or _is_symbol(self.w)):
            w = to_qq(self.w)
            if w == 0:
                raise UsageError("w must be non-zero")
            object.__setattr__(self, "w", w)

    @property
    def m(self) -> int:
        return len(self.u)

    @property
    def s(self) -> int:
        return len(self.v)

    def symbols(self) -> Tuple[str, ...]:
        names = [x for x in self.u if _is_symbol(x)] + [x for x in self.v if _is_symbol(x)]
        if _is_symbol(self.w):
            names.append(self.w)
        return tuple(names)

    def inverse_symbols(self) -> Tuple[str, ...]:
        names = [x for x in self.v if _is_symbol(x)]
        if _is_symbol(self.w):
            names.append(self.w)
        return tuple(names)

    def check_poles(self, contents: Iterable):
        """Falha cedo se algum v_r racional anula v_r + c num conteúdo do alcance"""
        for c in contents:
            for v in self.v:
                if not _is_symbol(v) and v + c == 0:
                    raise DomainError(f"G has a pole at content {c} (v = {v})")

    def evaluate(self, c, R: PolyRing, run_order: int, scale: Optional[PolyElement] = None) -> PolyElement:
        """G(c·scale) como polinômio em R; expansões em 1/v e 1/w cortadas em run_order

        Sem variável de grau, w racional daria e^{c/w} irracional: DomainError.
        """
        if scale is None and not (self.w is W_INFINITY or _is_symbol(self.w)):
            raise DomainError(f"e^(z/w) with rational w = {self.w} needs a grading variable")
        z = R(to_qq(c)) if scale is None else scale * to_qq(c)
        value = R.one
        for u in self.u:
            value *= (gen(R, u) if _is_symbol(u) else R(u)) + z
        for v in self.v:
            if _is_symbol(v):
                inv = gen(R, v)
                value *= inv * _geometric(-z * inv, run_order)
            elif scale is None:
                value *= R(QQ(1) / (v + to_qq(c)))
            else:
                inv = QQ(1) / v
                value *= inv * _geometric(-z * inv, run_order)
        if self.w is not W_INFINITY:
            inv = gen(R, self.w) if _is_symbol(self.w) else R(QQ(1) / self.w)
            value *= _exponential(z * inv, run_order)
        return value


def _geometric(x: PolyElement, order: int) -> PolyElement:
    """Σ_{k≤order} x^k, por produto corrente (x pode ser zero)"""
    total, term = x.ring.one, x.ring.one
    for _ in range(order):
        term *= x
        total += term
    return total


def _exponential(x: PolyElement, order: int) -> PolyElement:
    total, term = x.ring.one, x.ring.one
    for j in range(1, order + 1):
        term = term * x * QQ(1, j)
        total += term
    return total


def constellation_weight(m: int, prefix: str = "u") -> WeightG:
    return WeightG(u=tuple(f"{prefix}{c}" for c in range(m)))
