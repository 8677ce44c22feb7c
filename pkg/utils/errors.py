"""Hierarquia de exceções do enumap.

Cada erro carrega o código de saída usado pela CLI.
"""


class EnumapError(Exception):
    """Erro base de todos os módulos"""

    exit_code = 1


class UsageError(EnumapError):
    """Parâmetros inválidos: ordens diferentes, símbolos desconhecidos, tamanhos incompatíveis"""

    exit_code = 2


class DomainError(EnumapError):
    """Operação fora do domínio matemático (log sem termo constante 1, polo de G, ...)"""

    exit_code = 2


class TruncationError(EnumapError):
    """Leitura além da ordem de truncamento; o chamador deve aumentar T"""

    exit_code = 2


class ResourceError(EnumapError):
    """Busca exaustiva acima do limite configurado"""

    exit_code = 3


def require(condition: bool, message: str, error=UsageError):
    if not condition:
        raise error(message)
