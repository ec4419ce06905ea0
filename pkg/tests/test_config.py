"""Tests for settings and logging setup."""

import io
import logging

import pytest
from pydantic import ValidationError
from rich.console import Console

from zomatch.config import BenchSettings, GeoSettings, MatcherSettings, Settings, get_settings
from zomatch.core.logging import configure_logging


class TestSettings:
    """Test suite for Settings."""

    def test_defaults(self):
        """Test the default configuration."""
        settings = Settings()
        assert settings.seed == 20240229
        assert settings.strict_invariants is True
        assert settings.log_level == "WARNING"
        assert settings.geo.epsilon == 0.25
        assert settings.geo.early_stop is False
        assert settings.matcher.check_invariants is False
        assert settings.separator.balance_alpha == 3.0

    def test_seed_from_environment(self, monkeypatch):
        """Test that ZOM_SEED reaches the cached settings."""
        monkeypatch.setenv("ZOM_SEED", "7")
        assert get_settings().seed == 7
        assert get_settings() is get_settings()

    def test_nested_sections_from_environment(self, monkeypatch):
        """Test that section prefixes configure nested settings."""
        monkeypatch.setenv("ZOM_GEO_EPSILON", "0.5")
        monkeypatch.setenv("ZOM_MATCHER_CHECK_INVARIANTS", "true")
        monkeypatch.setenv("ZOM_BENCH_SIZES", "[8, 16]")
        settings = Settings()
        assert settings.geo.epsilon == 0.5
        assert settings.matcher.check_invariants is True
        assert settings.bench.sizes == [8, 16]

    @pytest.mark.parametrize("epsilon", [0.0, -0.1, 1.5])
    def test_epsilon_range(self, epsilon):
        """Test that epsilon outside (0, 1] is rejected."""
        with pytest.raises(ValidationError):
            GeoSettings(epsilon=epsilon)

    def test_log_level_normalized(self):
        """Test that log levels are upper-cased and validated."""
        assert Settings(log_level="debug").log_level == "DEBUG"
        with pytest.raises(ValidationError):
            Settings(log_level="chatty")

    def test_phase_limit(self):
        """Test the default and the configured phase limit."""
        assert MatcherSettings().phase_limit(10) == 22
        assert MatcherSettings(max_phases=5).phase_limit(10) == 5

    def test_bench_defaults(self):
        """Test the default benchmark sweep."""
        bench = BenchSettings()
        assert bench.sizes == [64, 128, 256]
        assert bench.weight_one_probability == 1.0

    def test_verify_phases_from_environment(self, monkeypatch):
        """Test that the geometric verify phase cap defaults to 3 and follows the environment."""
        assert GeoSettings().verify_phases == 3
        monkeypatch.setenv("ZOM_GEO_VERIFY_PHASES", "5")
        assert GeoSettings().verify_phases == 5
        with pytest.raises(ValidationError):
            GeoSettings(verify_phases=-1)


class TestLogging:
    """Test suite for configure_logging."""

    def test_single_rich_handler(self):
        """Test that repeated setup keeps one handler and updates the level."""
        console = Console(file=io.StringIO())
        configure_logging("info", console)
        configure_logging("debug", console)
        logger = logging.getLogger("zomatch")
        names = [h.get_name() for h in logger.handlers]
        assert names.count("zomatch-rich") == 1
        assert logger.level == logging.DEBUG
        assert logger.propagate is False
