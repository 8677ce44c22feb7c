# algebra/series.py
"""Séries formais truncadas em t com coeficientes polinomiais exatos.

Os coeficientes vivem num anel esparso do sympy (``PolyRing`` sobre QQ);
a série guarda exatamente T+1 coeficientes e nunca lê além da ordem T.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing, ring

from utils.errors import DomainError, TruncationError, UsageError

Monomial = Union[Mapping[str, int], Tuple[int, ...]]


@lru_cache(maxsize=None)
def make_ring(names: Tuple[str, ...]) -> PolyRing:
    """Anel QQ[names]; anéis com os mesmos nomes são compartilhados"""
    if not names:
        raise UsageError("a polynomial ring needs at least one variable")
    if len(set(names)) != len(names):
        raise UsageError(f"duplicated variable names: {names}")
    return ring(",".join(names), QQ)[0]


def power_sums(prefix: str, degree: int) -> Tuple[str, ...]:
    """('p1', ..., 'pD')"""
    return tuple(f"{prefix}{i}" for i in range(1, degree + 1))


def var_names(R: PolyRing) -> Tuple[str, ...]:
    return tuple(str(s) for s in R.symbols)


def gen(R: PolyRing, name: str) -> PolyElement:
    names = var_names(R)
    if name not in names:
        raise UsageError(f"unknown symbol {name!r}; ring has {names}")
    return R.gens[names.index(name)]


def to_qq(value) -> object:
    """Converte int, Fraction, sympy Rational ou elemento de QQ em elemento de QQ"""
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        num, den = value.numerator, value.denominator
        num = num() if callable(num) else num
        den = den() if callable(den) else den
        return QQ(int(num), int(den))
    if hasattr(value, "p") and hasattr(value, "q"):
        return QQ(int(value.p), int(value.q))
    return QQ.convert(value)


def monomial_key(R: PolyRing, monomial: Monomial) -> Tuple[int, ...]:
    if isinstance(monomial, Mapping):
        names = var_names(R)
        exps = [0] * len(names)
        for name, e in monomial.items():
            if name not in names:
                raise UsageError(f"unknown symbol {name!r}; ring has {names}")
            exps[names.index(name)] = int(e)
        return tuple(exps)
    key = tuple(int(e) for e in monomial)
    if len(key) != R.ngens:
        raise UsageError(f"exponent vector of length {len(key)} for a ring with {R.ngens} variables")
    return key


@dataclass(frozen=True, eq=False)
class TSeries:
    """Série em t truncada na ordem T = len(coeffs) - 1"""

    ring: PolyRing
    coeffs: Tuple[PolyElement, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise UsageError("a series keeps at least the t^0 coefficient")

    # --- construção ---

    @classmethod
    def zero(cls, R: PolyRing, order: int) -> "TSeries":
        return cls(R, tuple(R.zero for _ in range(order + 1)))

    @classmethod
    def one(cls, R: PolyRing, order: int) -> "TSeries":
        return cls.constant(R, order, R.one)

    @classmethod
    def constant(cls, R: PolyRing, order: int, value) -> "TSeries":
        coeffs = [R.zero] * (order + 1)
        coeffs[0] = R(value) if not isinstance(value, PolyElement) else value.set_ring(R)
        return cls(R, tuple(coeffs))

    @classmethod
    def from_coeffs(cls, R: PolyRing, order: int, coeffs: Union[Mapping[int, object], Sequence]) -> "TSeries":
        """Coeficientes acima de ``order`` são descartados"""
        out = [R.zero] * (order + 1)
        items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
        for k, c in items:
            if 0 <= k <= order:
                out[k] = c.set_ring(R) if isinstance(c, PolyElement) else R(c)
        return cls(R, tuple(out))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # --- acesso ---

    def coeff(self, k: int) -> PolyElement:
        if k < 0:
            return self.ring.zero
        if k > self.order:
            raise TruncationError(f"t^{k} requested from a series truncated at order {self.order}")
        return self.coeffs[k]

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TSeries(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"

    # --- aritmética ---

    def _check(self, other: "TSeries"):
        if not isinstance(other, TSeries):
            raise UsageError(f"expected a TSeries, got {type(other).__name__}")
        if self.order != other.order:
            raise UsageError(f"truncation orders differ: {self.order} vs {other.order}")
        if self.ring != other.ring:
            raise UsageError(f"variable sets differ: {var_names(self.ring)} vs {var_names(other.ring)}")

    def __add__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        return TSeries(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        return TSeries(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TSeries":
        return TSeries(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "TSeries":
        if isinstance(other, TSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "TSeries":
        c = c if isinstance(c, PolyElement) else self.ring(c)
        return TSeries(self.ring, tuple(a * c for a in self.coeffs))

    def shift(self, k: int) -> "TSeries":
        """Multiplica por t^k mantendo a ordem"""
        zeros = (self.ring.zero,) * k
        return TSeries(self.ring, (zeros + self.coeffs)[: self.order + 1])

    def map(self, fn) -> "TSeries":
        return TSeries(self.ring, tuple(fn(c) for c in self.coeffs))

    def truncate(self, order: int) -> "TSeries":
        if order > self.order:
            raise TruncationError(f"cannot raise order {self.order} to {order}")
        return TSeries(self.ring, self.coeffs[: order + 1])

    def set_ring(self, R: PolyRing) -> "TSeries":
        return TSeries(R, tuple(c.set_ring(R) for c in self.coeffs))

    def substitute(self, values: Mapping[str, object]) -> "TSeries":
        """Substitui variáveis por racionais ou elementos do mesmo anel"""
        pairs = []
        for name, value in values.items():
            x = gen(self.ring, name)
            v = value.set_ring(self.ring) if isinstance(value, PolyElement) else self.ring(to_qq(value))
            pairs.append((x, v))
        if not pairs:
            return self
        return TSeries(self.ring, tuple(c.compose(pairs) for c in self.coeffs))

    def rescale_t(self, factor) -> "TSeries":
        """t -> factor * t"""
        f = factor if isinstance(factor, PolyElement) else self.ring(factor)
        out, power = [], self.ring.one
        for c in self.coeffs:
            out.append(c * power)
            power = power * f
        return TSeries(self.ring, tuple(out))


def series_mul(a: TSeries, b: TSeries) -> TSeries:
    a._check(b)
    R, T = a.ring, a.order
    out: List[PolyElement] = []
    for k in range(T + 1):
        acc = R.zero
        for i in range(k + 1):
            ai = a.coeffs[i]
            if ai:
                bj = b.coeffs[k - i]
                if bj:
                    acc += ai * bj
        out.append(acc)
    return TSeries(R, tuple(out))


def series_pow(a: TSeries, e: int) -> TSeries:
    result = TSeries.one(a.ring, a.order)
    base = a
    while e > 0:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_log(f: TSeries) -> TSeries:
    """log f para f com termo constante 1 (recorrência k g_k = k f_k - sum j g_j f_{k-j})"""
    R = f.ring
    if f.coeffs[0] != R.one:
        raise DomainError(f"log needs constant term 1, got {f.coeffs[0]}")
    g: List[PolyElement] = [R.zero]
    for k in range(1, f.order + 1):
        acc = f.coeffs[k] * k
        for j in range(1, k):
            if g[j] and f.coeffs[k - j]:
                acc -= g[j] * f.coeffs[k - j] * j
        g.append(acc * QQ(1, k))
    return TSeries(R, tuple(g))


def series_exp(g: TSeries) -> TSeries:
    """exp g para g sem termo constante"""
    R = g.ring
    if g.coeffs[0]:
        raise DomainError(f"exp needs zero constant term, got {g.coeffs[0]}")
    h: List[PolyElement] = [R.one]
    for k in range(1, g.order + 1):
        acc = R.zero
        for j in range(1, k + 1):
            if g.coeffs[j] and h[k - j]:
                acc += g.coeffs[j] * h[k - j] * j
        h.append(acc * QQ(1, k))
    return TSeries(R, tuple(h))


def series_inverse(f: TSeries) -> TSeries:
    """1/f quando o termo constante de f é um racional não nulo"""
    R = f.ring
    c0 = f.coeffs[0]
    if not c0 or not c0.is_ground:
        raise DomainError(f"cannot invert a series with constant term {c0}")
    inv0 = QQ(1) / c0.LC
    out: List[PolyElement] = [R(inv0)]
    for k in range(1, f.order + 1):
        acc = R.zero
        for j in range(1, k + 1):
            if f.coeffs[j] and out[k - j]:
                acc += f.coeffs[j] * out[k - j]
        out.append(-acc * inv0)
    return TSeries(R, tuple(out))


def pderiv(f: TSeries, var: str) -> TSeries:
    x = gen(f.ring, var)
    return TSeries(f.ring, tuple(c.diff(x) for c in f.coeffs))


def extract(f: TSeries, t_power: int, monomial: Monomial):
    """Coeficiente exato de t^k * monomial; 0 quando ausente"""
    if t_power > f.order:
        raise TruncationError(f"t^{t_power} requested from a series truncated at order {f.order}")
    if t_power < 0:
        return QQ(0)
    key = monomial_key(f.ring, monomial)
    return f.coeffs[t_power].get(key, QQ(0))


def poly_coeff(p: PolyElement, monomial: Monomial):
    return p.get(monomial_key(p.ring, monomial), QQ(0))


def coefficient_in(p: PolyElement, name: str, power: int) -> PolyElement:
    """Coeficiente de name^power em p, ainda no mesmo anel"""
    idx = var_names(p.ring).index(name) if name in var_names(p.ring) else None
    if idx is None:
        raise UsageError(f"unknown symbol {name!r}")
    R = p.ring
    terms = {}
    for monom, c in p.items():
        if monom[idx] == power:
            m = list(monom)
            m[idx] = 0
            terms[tuple(m)] = c
    return R.from_dict(terms) if terms else R.zero


def truncate_degree(p: PolyElement, names: Iterable[str], max_degree: int) -> PolyElement:
    """Descarta monômios cujo grau total nas variáveis dadas excede max_degree"""
    R = p.ring
    idx = [var_names(R).index(n) for n in names]
    terms = {m: c for m, c in p.items() if sum(m[i] for i in idx) <= max_degree}
    return R.from_dict(terms) if terms else R.zero


def weighted_truncate(p: PolyElement, weights: Dict[str, int], max_weight: int) -> PolyElement:
    """Descarta monômios de peso ponderado acima de max_weight (p_k tem peso k)"""
    R = p.ring
    names = var_names(R)
    w = [weights.get(n, 0) for n in names]
    terms = {m: c for m, c in p.items() if sum(a * b for a, b in zip(m, w)) <= max_weight}
    return R.from_dict(terms) if terms else R.zero


def series_compose(f: TSeries, g: TSeries) -> TSeries:
    """f(g(t)) para g sem termo constante (Horner em t)"""
    f._check(g)
    if g.coeffs[0]:
        raise DomainError(f"composition needs g(0) = 0, got {g.coeffs[0]}")
    out = TSeries.constant(f.ring, f.order, f.coeffs[f.order])
    for k in range(f.order - 1, -1, -1):
        out = series_mul(out, g) + TSeries.constant(f.ring, f.order, f.coeffs[k])
    return out
