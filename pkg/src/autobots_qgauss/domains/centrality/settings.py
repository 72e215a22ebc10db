# ABOUTME: Centrality domain-specific settings.
# ABOUTME: Extends AppSettings with the convolution-commutator cutoff and default moment order.

from pydantic import Field

from autobots_qgauss.configs.settings import AppSettings, init_app_settings


class CentralitySettings(AppSettings):
    """Centrality domain settings.
    Extends AppSettings with centrality-specific configuration."""

    central_cutoff: int = Field(
        default=2, ge=1, description="Maximal word length of the convolution-commutator sweep"
    )
    default_pmax: int = Field(default=4, ge=1, description="Default largest moment order p")


def get_centrality_settings() -> CentralitySettings:
    """Get centrality settings instance."""
    return CentralitySettings()


def init_centrality_settings() -> CentralitySettings:
    """Initialize centrality settings and install them as the app settings.

    Call at app startup.
    """
    s = get_centrality_settings()
    init_app_settings(s)
    return s
