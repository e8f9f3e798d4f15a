"""
Configurações do laboratório usando Pydantic Settings.

Carrega variáveis de ambiente (prefixos LAB_ e APP_) e valida os
parâmetros globais das execuções de certificados.
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LabSettings(BaseSettings):
    """Parâmetros globais dos motores numéricos."""

    model_config = SettingsConfigDict(
        env_prefix="LAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    budget_scale: float = Field(
        default=1.0,
        gt=0,
        description="Multiplicador aplicado a todos os orçamentos inteiros (CI vs local)",
    )
    chunk_size: int = Field(
        default=2**18,
        ge=1,
        description="Tamanho do bloco de avaliação vetorizada nas somas parciais",
    )
    report_timing: bool = Field(
        default=False,
        description="Inclui o tempo de parede no relatório (quebra a reprodutibilidade byte a byte)",
    )
    condensation_max_exponent: int = Field(
        default=400,
        ge=1,
        description="Maior expoente K testado no certificado por condensação (índice 2^K)",
    )

    def scale_budget(self, budget: int) -> int:
        """Aplica o multiplicador de orçamento, nunca abaixo de 1."""
        return max(1, int(round(budget * self.budget_scale)))


class AppSettings(BaseSettings):
    """Configurações gerais da aplicação."""

    model_config = SettingsConfigDict(
        env_prefix="APP_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    env: Literal["development", "staging", "production"] = Field(
        default="development", description="Ambiente da aplicação"
    )
    debug: bool = Field(default=False, description="Modo debug")
    log_level: str = Field(default="INFO", description="Nível de log")


class Settings(BaseSettings):
    """Configurações consolidadas da aplicação."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    lab: LabSettings = Field(default_factory=LabSettings)
    app: AppSettings = Field(default_factory=AppSettings)

    @property
    def is_development(self) -> bool:
        """Verifica se está em ambiente de desenvolvimento."""
        return self.app.env == "development"

    @property
    def is_production(self) -> bool:
        """Verifica se está em ambiente de produção."""
        return self.app.env == "production"


@lru_cache
def get_settings() -> Settings:
    """
    Retorna instância cacheada das configurações.

    Usar esta função ao invés de instanciar Settings diretamente
    para aproveitar o cache e evitar múltiplas leituras do .env.
    """
    return Settings()
