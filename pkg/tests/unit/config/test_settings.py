"""Tests for settings loading and the service locator."""

import json
import logging
from pathlib import Path

import pytest
from pydantic import ValidationError

from config.settings import Settings, get_settings, reload_settings
from service_locator import service_locator
from startup.initialization import initialize_logging


class TestSettings:
    """Test defaults, environment overrides and JSON files."""

    def test_defaults(self, settings: Settings) -> None:
        """Test the default tolerances and sampling values."""
        assert settings.holds_tolerance == 1e-6
        assert settings.fails_tolerance == 1e-3
        assert settings.divisibility_tolerance == 1e-8
        assert settings.default_samples == 50
        assert settings.threads == 1

    def test_environment_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test RANDERS_LAB_* variables."""
        monkeypatch.setenv("RANDERS_LAB_HOLDS_TOLERANCE", "1e-4")
        monkeypatch.setenv("RANDERS_LAB_THREADS", "4")
        settings = get_settings()
        assert settings.holds_tolerance == 1e-4
        assert settings.threads == 4

    def test_invalid_value_is_rejected(self) -> None:
        """Test field constraints."""
        with pytest.raises(ValidationError):
            Settings(threads=0)
        with pytest.raises(ValidationError):
            Settings(holds_tolerance=-1.0)

    def test_load_json(self, tmp_path: Path) -> None:
        """Test that a JSON file overrides the defaults."""
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"default_samples": 20, "default_seed": 3}))
        settings = Settings.load(path)
        assert settings.default_samples == 20
        assert settings.default_seed == 3

    @pytest.mark.parametrize("content", ["{not json", '{"threads": 0}', "[1, 2]"])
    def test_bad_file_falls_back(self, tmp_path: Path, content: str) -> None:
        """Test that an unreadable or invalid file yields the defaults."""
        path = tmp_path / "settings.json"
        path.write_text(content)
        assert Settings.load(path) == Settings()

    def test_missing_file_falls_back(self, tmp_path: Path) -> None:
        """Test that a missing file yields the defaults."""
        assert Settings.load(tmp_path / "absent.json") == Settings()


class TestServiceLocator:
    """Test the cached settings instance."""

    def test_cached(self) -> None:
        """Test that get_settings returns one instance."""
        assert get_settings() is get_settings()

    def test_reload_replaces(self, tmp_path: Path) -> None:
        """Test that reload_settings registers the new instance."""
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"threads": 3}))
        reloaded = reload_settings(path)
        assert get_settings() is reloaded
        assert get_settings().threads == 3

    def test_wrong_type(self) -> None:
        """Test that a foreign object under the settings name is refused."""
        service_locator.register("settings", object())
        with pytest.raises(TypeError, match="not a Settings"):
            get_settings()

    def test_unknown_name(self) -> None:
        """Test that a missing name without a factory raises."""
        with pytest.raises(KeyError):
            service_locator.get("absent")


class TestLogging:
    """Test logging initialization."""

    def test_verbose_is_debug(self, settings: Settings, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that --verbose selects DEBUG."""
        captured: dict = {}
        monkeypatch.setattr(logging, "basicConfig", lambda **kwargs: captured.update(kwargs))
        initialize_logging(settings, verbose=True)
        assert captured["level"] == logging.DEBUG

    def test_level_from_settings(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test that the configured level name is used."""
        captured: dict = {}
        monkeypatch.setattr(logging, "basicConfig", lambda **kwargs: captured.update(kwargs))
        initialize_logging(Settings(log_level="info"))
        assert captured["level"] == logging.INFO
