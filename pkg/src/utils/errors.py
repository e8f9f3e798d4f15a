"""
Exceções do laboratório.

Todas derivam de ValueError: são violações de pré-condição ou buscas
esgotadas, nunca falhas de desigualdade (essas viram status no resultado).
"""


class LabError(ValueError):
    """Raiz das exceções do laboratório."""


class DomainError(LabError):
    """Argumento fora do domínio da operação (índice < 1, p <= 0, passo <= 0...)."""


class UnsupportedPathError(DomainError):
    """Caminho de integração que cruza o ramo de sinal de u."""


class MissingCertificateError(DomainError):
    """Sequência de coeficientes sem certificado de pertencimento a ℓ₁."""


class WitnessRejectedError(DomainError):
    """Dados nulos: o campo/elemento zero não admite testemunha."""


class CertificateNotFoundError(LabError):
    """Busca de certificado esgotou o orçamento sem decisão."""

    def __init__(self, message: str, budget: int):
        super().__init__(message)
        self.budget = budget


class ScenarioError(LabError):
    """Arquivo de cenário inválido."""
