# meanders/arches.py
"""Configurações de arcos sobre a reta.

Os 2n vértices alternam preto/branco da esquerda para a direita: o preto j
fica na posição 2j e o branco j na posição 2j + 1. Um emparelhamento π liga
o branco i ao preto π(i) por um arco.
"""
from dataclasses import dataclass
from math import comb
from typing import Iterator, List, Optional, Sequence, Tuple

from oracle.permutations import Perm
from utils.errors import UsageError

SIDES = ("upper", "lower")
UP, DOWN = "U", "D"


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def motzkin(n: int) -> int:
    """Σ_k C(n, 2k) Cat_k"""
    return sum(comb(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


def arch_pairs(pairing: Sequence[int]) -> List[Tuple[int, int]]:
    """Arcos como pares de posições (esquerda, direita)"""
    out = []
    for i, j in enumerate(pairing):
        a, b = 2 * i + 1, 2 * j
        out.append((min(a, b), max(a, b)))
    return sorted(out)


def partner_positions(pairing: Sequence[int]) -> List[int]:
    n = len(pairing)
    partner = [0] * (2 * n)
    for a, b in arch_pairs(pairing):
        partner[a], partner[b] = b, a
    return partner


def is_planar(pairing: Sequence[int]) -> bool:
    """Simulação de pilha: cada arco fecha sobre o último aberto"""
    stack: List[int] = []
    for pos, other in enumerate(partner_positions(pairing)):
        if other > pos:
            stack.append(pos)
        elif not stack or stack.pop() != other:
            return False
    return not stack


def has_crossing(pairing: Sequence[int]) -> bool:
    """Teste direto em O(n²): a < c < b < d"""
    arches = arch_pairs(pairing)
    for i, (a, b) in enumerate(arches):
        for c, d in arches[i + 1:]:
            if a < c < b < d or c < a < d < b:
                return True
    return False


def dyck_words(n: int) -> Iterator[str]:
    """Palavras de Dyck em U/D, em ordem lexicográfica (D < U)"""
    def grow(prefix: str, opened: int, height: int) -> Iterator[str]:
        if len(prefix) == 2 * n:
            yield prefix
            return
        if height:
            yield from grow(prefix + DOWN, opened, height - 1)
        if opened < n:
            yield from grow(prefix + UP, opened + 1, height + 1)

    if n < 0:
        raise UsageError(f"negative size {n}")
    yield from grow("", 0, 0)


def pairing_from_dyck(word: str) -> Perm:
    """Cada U casa com o D que o fecha; a paridade das posições dá branco e preto"""
    if len(word) % 2:
        raise UsageError(f"a Dyck word has even length, got {len(word)}")
    n = len(word) // 2
    stack: List[int] = []
    pairing = [0] * n
    for pos, step in enumerate(word):
        if step == UP:
            stack.append(pos)
        elif step == DOWN:
            if not stack:
                raise UsageError(f"{word!r} goes below the axis")
            a = stack.pop()
            white, black = (a, pos) if a % 2 else (pos, a)
            pairing[white // 2] = black // 2
        else:
            raise UsageError(f"unknown step {step!r} in a Dyck word")
    if stack:
        raise UsageError(f"{word!r} does not return to the axis")
    return tuple(pairing)


def dyck_word(pairing: Sequence[int]) -> str:
    if not is_planar(pairing):
        raise UsageError(f"{tuple(pairing)} is not planar")
    return "".join(UP if other > pos else DOWN for pos, other in enumerate(partner_positions(pairing)))


def planar_pairings(n: int) -> List[Perm]:
    """Todos os emparelhamentos planares de n brancos com n pretos (Cat_n)"""
    return sorted(pairing_from_dyck(w) for w in dyck_words(n))


def motzkin_path(pairing: Sequence[int]) -> Optional[str]:
    """Passos de Dyck agrupados por par (j_•, j_∘): DD -> D, UU -> U, UD -> H.

    Devolve None se aparece o padrão DU.
    """
    word = dyck_word(pairing)
    steps = []
    for j in range(0, len(word), 2):
        pair = word[j:j + 2]
        if pair == DOWN + UP:
            return None
        steps.append({DOWN + DOWN: "D", UP + UP: "U", UP + DOWN: "H"}[pair])
    return "".join(steps)


def is_motzkin_path(path: str) -> bool:
    height = 0
    for step in path:
        height += {"U": 1, "D": -1, "H": 0}[step]
        if height < 0:
            return False
    return height == 0


@dataclass(frozen=True)
class ArchConfig:
    pairing: Perm
    side: str = "upper"

    def __post_init__(self):
        if self.side not in SIDES:
            raise UsageError(f"side must be one of {SIDES}, got {self.side!r}")
        p = tuple(int(x) for x in self.pairing)
        if sorted(p) != list(range(len(p))):
            raise UsageError(f"{p} is not a pairing")
        object.__setattr__(self, "pairing", p)

    @property
    def n(self) -> int:
        return len(self.pairing)

    @property
    def planar(self) -> bool:
        return is_planar(self.pairing)
