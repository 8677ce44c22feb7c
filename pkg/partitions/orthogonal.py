"""Dimensões das representações irredutíveis de O(n): El Samra-King e Weyl."""
from sympy.polys.domains import QQ

from algebra.series import make_ring, to_qq
from partitions.partition import Partition, hook_product
from utils.errors import UsageError


def orthogonal_dim(lam: Partition, n=None):
    """o_λ(1^n) pela fórmula de El Samra-King

    Com n=None devolve um polinômio em QQ[n]; com n racional devolve o valor.
    Aqui (x, y) = (linha, coluna), como na fórmula original.
    """
    R = make_ring(("n",))
    var = R.gens[0] if n is None else R(to_qq(n))
    conj = lam.conjugate()
    value = R.one
    for x, row in enumerate(lam, start=1):
        for y in range(1, row + 1):
            if x <= y:
                lam_y = lam[y - 1] if y <= len(lam) else 0
                value *= var + (lam[x - 1] + lam_y - x - y)
            else:
                cx = conj[x - 1] if x <= len(conj) else 0
                cy = conj[y - 1]
                value *= var + (-cx - cy + x + y - 2)
    value = value * QQ(1, hook_product(lam))
    if n is None:
        return value
    return value.LC if value else QQ(0)


def orthogonal_dim_weyl(lam: Partition, m: int):
    """o_λ(1^{2m}) pela fórmula de Weyl para SO(2m), dobrada quando ℓ(λ) = m"""
    if len(lam) > m:
        raise UsageError(f"Weyl formula needs ℓ(λ) ≤ {m}, got {len(lam)}")
    rho = [(lam[i - 1] if i <= len(lam) else 0) - i for i in range(1, m + 1)]
    value = QQ(1)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            num = (rho[i - 1] - rho[j - 1]) * (rho[i - 1] + rho[j - 1] + 2 * m)
            den = (j - i) * (2 * m - i - j)
            value *= QQ(num, den)
    if len(lam) == m and m > 0:
        value *= 2
    return value

