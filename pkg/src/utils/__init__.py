"""
Utilitários compartilhados do laboratório.

Hoje contém apenas a hierarquia de erros usada pelos motores e pela CLI.
"""

from src.utils.errors import (
    CertificateNotFoundError,
    DomainError,
    LabError,
    MissingCertificateError,
    ScenarioError,
    UnsupportedPathError,
    WitnessRejectedError,
)

__all__ = [
    "LabError",
    "DomainError",
    "UnsupportedPathError",
    "MissingCertificateError",
    "WitnessRejectedError",
    "CertificateNotFoundError",
    "ScenarioError",
]
