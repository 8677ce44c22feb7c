# tau/builders.py
"""Construtores das funções tau (Schur, zonais e Jack) e extração de números de Hurwitz."""
from dataclasses import dataclass, field
from math import factorial
from typing import Dict, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from algebra.series import TSeries, extract, gen, make_ring, power_sums, to_qq, var_names
from partitions.characters import schur_in_p, specialize, to_poly
from partitions.jack import jack_in_p, jack_norm
from partitions.orthogonal import orthogonal_dim
from partitions.partition import Partition, contents, hook_product, partitions_of
from tau.weights import W_INFINITY, WeightG, constellation_weight
from utils.errors import UsageError
from utils.logger import app_logger

GRADING_VAR = "e"

FAMILIES = ("maps", "bip", "zonal_maps", "zonal_bip", "monotone", "zonal_monotone",
            "constellations", "b_deformed")


@dataclass(frozen=True, eq=False)
class TauFunction:
    """Série tau com os metadados necessários para graduar por gênero e enraizar"""

    series: TSeries
    weight: WeightG
    b: object = QQ(0)
    p_degree: int = 0
    q_degree: int = 0
    q_values: Optional[Tuple[Tuple[int, object], ...]] = None
    graded: bool = False
    run_order: int = 0
    meta: Dict[str, object] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return self.series.order

    @property
    def ring(self):
        return self.series.ring

    def q_length(self, n: int) -> Optional[int]:
        """ℓ(μ) implícito quando q está especializado numa única parte k"""
        if self.q_values is None:
            return None
        parts = [k for k, v in self.q_values if v]
        if len(parts) != 1:
            raise UsageError("genus grading needs q specialized to a single part size")
        return n // parts[0]


def _basis(lam: Partition, b):
    """(expansão em p, normalização j_λ) para a base usada em cada b"""
    if b == 0:
        return schur_in_p(lam), QQ(1)
    alpha = 1 + b
    j = jack_in_p(lam, alpha)
    return j, jack_norm(lam, alpha)


def _prune_runs(poly: PolyElement, names: Sequence[str], n: int, run_order: int, w_name=None) -> PolyElement:
    """Corta monômios com mais de run_order transposições em cada corrida"""
    if not names or not poly:
        return poly
    R = poly.ring
    all_names = var_names(R)
    limits = {}
    for name in names:
        limits[all_names.index(name)] = run_order if name == w_name else n + run_order
    terms = {m: c for m, c in poly.items() if all(m[i] <= lim for i, lim in limits.items())}
    return R.from_dict(terms) if terms else R.zero


def build_tau_G(G: WeightG, T: int, D1: int, D2: int, q_values: Optional[Mapping[int, object]] = None,
                b=0, run_order: Optional[int] = None, graded: bool = False) -> TauFunction:
    """τ_G = Σ_λ t^{|λ|}/j_λ J_λ(p) J_λ(q) Π G(c_b(□))

    Com b = 0 a base é Schur e j_λ = 1. q_values especializa o segundo alfabeto
    (q_k := valor); partes acima de D1 (D2) saem da expansão em p (q).
    """
    if T < 0:
        raise UsageError(f"truncation order must be non-negative, got {T}")
    if D1 < 1:
        raise UsageError(f"D1 must be at least 1, got {D1}")
    b = to_qq(b)
    run_order = T if run_order is None else run_order
    names = list(G.symbols())
    if graded:
        names.append(GRADING_VAR)
    names += list(power_sums("p", D1))
    if q_values is None:
        if D2 < 1:
            raise UsageError(f"D2 must be at least 1 when q is symbolic, got {D2}")
        names += list(power_sums("q", D2))
    R = make_ring(tuple(names))
    scale = gen(R, GRADING_VAR) if graded else None
    G.check_poles(c for n in range(T + 1) for lam in partitions_of(n) for c in contents(lam, b))
    w_name = G.w if isinstance(G.w, str) else None
    coeffs = []
    for n in range(T + 1):
        acc = R.zero
        for lam in partitions_of(n):
            pexp, norm = _basis(lam, b)
            if q_values is None:
                q_part = to_poly(pexp, R, "q", max_part=D2)
            else:
                q_part = R(specialize(pexp, lambda k: to_qq(q_values.get(k, 0))))
            if not q_part:
                continue
            p_part = to_poly(pexp, R, "p", max_part=D1)
            if not p_part:
                continue
            weight = R.one
            for c in contents(lam, b):
                weight = _prune_runs(weight * G.evaluate(c, R, run_order, scale), G.inverse_symbols(), n, run_order, w_name)
            acc += p_part * q_part * weight * (QQ(1) / norm)
        coeffs.append(acc)
        app_logger.debug(f"tau_G: order t^{n} done ({len(acc)} terms)")
    q_items = None if q_values is None else tuple(sorted((k, to_qq(v)) for k, v in q_values.items()))
    return TauFunction(TSeries(R, tuple(coeffs)), G, b, D1, D2 if q_values is None else 0, q_items,
                       graded, run_order)


def build_tau_constellations(m: int, T: int, D: Optional[int] = None, graded: bool = False) -> TauFunction:
    """Σ_λ t^{|λ|}/hook(λ) s_λ(p) Π_c (u_c + c(□))"""
    G = constellation_weight(m)
    return build_tau_G(G, T, D or max(T, 1), 0, q_values={1: 1}, graded=graded)


def build_tau_family(family: str, T: int, D: Optional[int] = None, G: Optional[WeightG] = None, b=0,
                     run_order: Optional[int] = None, graded: bool = False) -> TauFunction:
    """Séries nomeadas: maps, bip, zonal_maps, zonal_bip, monotone, zonal_monotone, constellations, b_deformed"""
    D = D or max(T, 1)
    if family == "maps":
        tau = build_tau_G(WeightG(u=("u",)), T, D, 0, q_values={2: 1}, graded=graded)
    elif family == "bip":
        tau = build_tau_G(WeightG(u=("u", "v")), T, D, 0, q_values={1: 1}, graded=graded)
    elif family == "zonal_maps":
        tau = build_tau_G(WeightG(u=("u",)), T, D, 0, q_values={2: 1}, b=1, graded=graded)
    elif family == "zonal_bip":
        tau = build_tau_G(WeightG(u=("u", "v")), T, D, 0, q_values={1: 1}, b=1, graded=graded)
    elif family in ("monotone", "zonal_monotone"):
        # 1/(u^{-1} + c) = u Σ_k (-uc)^k: a variável u faz o papel de 1/v
        tau = build_tau_G(WeightG(v=("u",)), T, D, 0, q_values={1: 1}, b=1 if family == "zonal_monotone" else b,
                          run_order=T if run_order is None else run_order, graded=graded)
    elif family == "constellations":
        tau = build_tau_constellations(2 if G is None else G.m, T, D, graded=graded)
    elif family == "b_deformed":
        if G is None:
            raise UsageError("b_deformed needs a weight function G")
        tau = build_tau_G(G, T, D, D, b=b, run_order=run_order, graded=graded)
    else:
        raise UsageError(f"unknown family {family!r}; expected one of {FAMILIES}")
    tau.meta["family"] = family
    app_logger.info(f"Built tau family {family} at order {T}")
    return tau


def weighted_hurwitz(G: WeightG, lam: Partition, mu: Partition, ells: Sequence[int], ks: Sequence[int], j: int):
    """H(λ, μ, ℓ, k, j) lido no coeficiente de t^n/n! p_λ q_μ w^{-j}/j! Π u^{n-ℓ} Π v^{-n-k}"""
    n = lam.size
    if mu.size != n:
        raise UsageError(f"|λ| = {n} differs from |μ| = {mu.size}")
    if len(ells) != G.m or len(ks) != G.s:
        raise UsageError(f"expected {G.m} values of ℓ and {G.s} values of k")
    if not all(isinstance(x, str) for x in G.u + G.v):
        raise UsageError("weighted_hurwitz needs symbolic u and v markers")
    if j and G.w is W_INFINITY:
        return QQ(0)
    if j and not isinstance(G.w, str):
        raise UsageError("a transposition count j needs a symbolic w")
    run_order = max(list(ks) + [j, 0])
    tau = build_tau_G(G, n, max(n, 1), max(n, 1), run_order=run_order)
    monomial = {}
    for part, mult in lam.multiplicities().items():
        monomial[f"p{part}"] = monomial.get(f"p{part}", 0) + mult
    for part, mult in mu.multiplicities().items():
        monomial[f"q{part}"] = monomial.get(f"q{part}", 0) + mult
    for name, ell in zip(G.u, ells):
        monomial[name] = monomial.get(name, 0) + n - ell
    for name, k in zip(G.v, ks):
        monomial[name] = monomial.get(name, 0) + n + k
    if isinstance(G.w, str):
        monomial[G.w] = j
    value = extract(tau.series, n, monomial)
    return value * factorial(n) * factorial(j)


def build_monotone_schur_form(T: int, D: Optional[int] = None, run_order: Optional[int] = None) -> TSeries:
    """Σ_λ t^{|λ|} s_λ(p/2) / (hook(λ)² o_λ(1^{1/u})) no mesmo anel de zonal_monotone

    1/o_λ(1^{1/u}) = u^{|λ|}/P(u) com P(u) = u^{|λ|} o_λ(1^{1/u}); a série 1/P é
    cortada no grau run_order, como as corridas monótonas da forma zonal.
    """
    D = D or max(T, 1)
    run_order = T if run_order is None else run_order
    R = make_ring(("u",) + power_sums("p", D))
    u = gen(R, "u")
    coeffs = []
    for n in range(T + 1):
        acc = R.zero
        for lam in partitions_of(n):
            o = orthogonal_dim(lam)
            # P(u) = Σ_k o_k u^{n-k}
            P = [QQ(0)] * (n + 1)
            for (k,), c in o.items():
                P[n - k] += c
            inv = [QQ(1) / P[0]]
            for d in range(1, run_order + 1):
                s = sum((P[i] * inv[d - i] for i in range(1, min(d, n) + 1)), QQ(0))
                inv.append(-s / P[0])
            series_u = sum((u ** (n + d) * c for d, c in enumerate(inv) if c), R.zero)
            s_half = to_poly(schur_in_p(lam), R, "p", max_part=D, weight=lambda k: QQ(1, 2))
            acc += s_half * series_u * QQ(1, hook_product(lam) ** 2)
        coeffs.append(acc)
    return TSeries(R, tuple(coeffs))


def build_tau_monotone_double(T: int, D: Optional[int] = None, run_order: Optional[int] = None) -> TauFunction:
    """Σ_λ t^{|λ|} s_λ(p) s_λ(q) Π u/(1 + u c(□)): números de Hurwitz monótonos duplos"""
    D = D or max(T, 1)
    tau = build_tau_G(WeightG(v=("u",)), T, D, D, run_order=T if run_order is None else run_order)
    tau.meta["family"] = "monotone_double"
    return tau
