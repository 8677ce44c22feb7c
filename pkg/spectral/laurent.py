# spectral/laurent.py
"""Séries em t com coeficientes de Laurent.

Cada variável invertível x ganha uma parceira ``x_inv``; depois de cada produto
os expoentes de x e x_inv se cancelam, de modo que o monômio fica na forma
reduzida x^a ou x_inv^a.
"""
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from algebra.series import TSeries, gen, make_ring, series_mul, var_names
from tau.genus import inverse_name
from utils.errors import DomainError, UsageError


class LaurentRing:
    """Anel QQ[names, units, units^{-1}] com redução dos pares (x, x_inv)"""

    def __init__(self, names: Sequence[str], units: Iterable[str]):
        units = tuple(units)
        full = tuple(names) + tuple(x for u in units for x in (u, inverse_name(u)))
        self.R = make_ring(full)
        self.units = units
        all_names = var_names(self.R)
        self.pairs: List[Tuple[int, int]] = [(all_names.index(u), all_names.index(inverse_name(u))) for u in units]

    # --- polinômios ---

    def reduce(self, p: PolyElement) -> PolyElement:
        if not p or not self.pairs:
            return p
        terms: Dict[Tuple[int, ...], object] = {}
        for monom, c in p.items():
            m = list(monom)
            for i, j in self.pairs:
                k = min(m[i], m[j])
                if k:
                    m[i] -= k
                    m[j] -= k
            key = tuple(m)
            terms[key] = terms.get(key, QQ(0)) + c
        terms = {k: c for k, c in terms.items() if c}
        return self.R.from_dict(terms) if terms else self.R.zero

    def degree(self, monom: Tuple[int, ...], unit: str) -> int:
        """Expoente líquido de ``unit`` num monômio"""
        i, j = self.pairs[self.units.index(unit)]
        return monom[i] - monom[j]

    def power(self, unit: str, k: int) -> PolyElement:
        """unit^k para k inteiro qualquer"""
        if k >= 0:
            return gen(self.R, unit) ** k
        return gen(self.R, inverse_name(unit)) ** (-k)

    def unit_inverse(self, c: PolyElement) -> PolyElement:
        """Inverso de um monômio c·x^a (x unidades); zero ou soma de termos não inverte"""
        if not c:
            raise DomainError("cannot invert a vanishing leading coefficient")
        if len(c) != 1:
            raise DomainError(f"leading coefficient {c} is not a monomial in invertible symbols")
        (monom, coeff), = c.items()
        exps = [0] * len(monom)
        used = set()
        for i, j in self.pairs:
            exps[i], exps[j] = monom[j], monom[i]
            used.update((i, j))
        if any(e for k, e in enumerate(monom) if k not in used):
            raise DomainError(f"leading coefficient {c} involves a non-invertible symbol")
        return self.R.from_dict({tuple(exps): QQ(1) / coeff})

    def slice(self, p: PolyElement, unit: str, lo: int, hi: int) -> PolyElement:
        """Monômios com expoente líquido de unit em [lo, hi]"""
        terms = {m: c for m, c in p.items() if lo <= self.degree(m, unit) <= hi}
        return self.R.from_dict(terms) if terms else self.R.zero

    def component(self, p: PolyElement, unit: str, k: int) -> PolyElement:
        """Coeficiente de unit^k, sem a potência de unit"""
        i, j = self.pairs[self.units.index(unit)]
        terms = {}
        for m, c in p.items():
            if self.degree(m, unit) == k:
                m = list(m)
                m[i] = m[j] = 0
                terms[tuple(m)] = c
        return self.R.from_dict(terms) if terms else self.R.zero

    # --- séries ---

    def normalize(self, f: TSeries) -> TSeries:
        return f.map(self.reduce)

    def mul(self, a: TSeries, b: TSeries) -> TSeries:
        return self.normalize(series_mul(a, b))

    def prod(self, factors: Iterable[TSeries], order: int) -> TSeries:
        out = TSeries.one(self.R, order)
        for f in factors:
            out = self.mul(out, f)
        return out

    def pow(self, a: TSeries, k: int) -> TSeries:
        if k < 0:
            raise UsageError(f"negative power {k}; invert the series first")
        out = TSeries.one(self.R, a.order)
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def inverse(self, a: TSeries) -> TSeries:
        """1/a quando o termo em t^0 é uma unidade"""
        c0 = self.unit_inverse(a.coeffs[0])
        rest = TSeries(self.R, (self.R.zero,) + tuple(self.reduce(c * c0) for c in a.coeffs[1:]))
        # 1/(1 + r) com r = O(t)
        out = TSeries.one(self.R, a.order)
        term = TSeries.one(self.R, a.order)
        for _ in range(a.order):
            term = self.mul(term, -rest)
            out = out + term
        return out.scale(c0).map(self.reduce)

    def clip(self, f: TSeries, unit: str, lo: int, hi: int) -> TSeries:
        return f.map(lambda c: self.slice(c, unit, lo, hi))

    def components(self, f: TSeries, unit: str, k: int) -> TSeries:
        return f.map(lambda c: self.component(c, unit, k))

    def substitute(self, f: TSeries, unit: str, up: TSeries, down: TSeries, lo: int, hi: int) -> TSeries:
        """f(Z) com unit^k -> up^k e unit^{-k} -> down^k, para k em [lo, hi]"""
        out = TSeries.zero(self.R, f.order)
        for k in range(lo, hi + 1):
            part = self.components(f, unit, k)
            if part.is_zero():
                continue
            base = up if k >= 0 else down
            out = out + self.mul(part, self.pow(base, abs(k)))
        return out
