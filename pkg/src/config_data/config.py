"""Configuration module for the δ_C toolkit."""
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from ..numerics import QuadratureRule


class Config(BaseSettings):
    """Main configuration class; every field reads CTD_<NAME> from the environment."""
    model_config = SettingsConfigDict(
        env_prefix="CTD_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"
    )

    quad_tol: float = Field(default=1e-11, gt=0.0, lt=1.0)
    panel_order: int = Field(default=32, ge=2, le=256)
    max_depth: int = Field(default=14, ge=1, le=60)
    log_level: str = "WARNING"
    log_file: Optional[str] = None
    fekete_max_sweeps: int = Field(default=20, ge=0)

    def get_quadrature_rule(self) -> QuadratureRule:
        """Get the quadrature rule built from the tolerance settings."""
        return QuadratureRule(
            panel_order=self.panel_order,
            max_depth=self.max_depth,
            rel_tol=self.quad_tol
        )


def load_config(**overrides) -> Config:
    """Load configuration from environment variables; keyword overrides win."""
    return Config(**{k: v for k, v in overrides.items() if v is not None})
