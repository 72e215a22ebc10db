# ABOUTME: Pydantic settings for application configuration.
# ABOUTME: Numerical defaults (tolerance, expansion guard, seed) read from QG_* env vars or .env.

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class AppSettings(BaseSettings):
    """Pydantic settings for application configuration.
    Every field can be overridden through a QG_-prefixed environment variable."""

    model_config = SettingsConfigDict(
        env_prefix="QG_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Numerical settings
    tol: float = Field(default=1e-9, gt=0, description="Default tolerance for all residuals")
    expansion_guard: int = Field(
        default=1_000_000, gt=0, description="Maximum number of coproduct expansion terms"
    )
    seed: int = Field(default=0, ge=0, description="Default seed for randomized self-tests")

    # Application settings
    app_name: str = Field(default="qgauss", description="Application name")
    log_level: str = Field(default="WARNING", description="Log level for the stderr handler")


_settings: AppSettings | None = None


def get_app_settings() -> AppSettings:
    """Get the application settings instance (created on first access)."""
    global _settings
    if _settings is None:
        _settings = AppSettings()
    return _settings


def init_app_settings(settings: AppSettings | None = None) -> AppSettings:
    """Initialize app settings so every domain reads the same instance.

    Args:
        settings: Optional AppSettings instance or subclass. If None, creates default AppSettings.

    Returns:
        The initialized settings instance.

    Call at app startup.
    """
    global _settings
    _settings = settings if settings is not None else AppSettings()
    return _settings


def _reset_app_settings() -> None:
    """Drop the cached instance so the next access re-reads the environment."""
    global _settings
    _settings = None
