from __future__ import annotations

import pytest

from rotoblur.configfile import format_config, parse_config
from rotoblur.controller import ControllerConfig
from rotoblur.errors import InvalidConfig


def test_empty_document_gives_defaults():
    assert parse_config("") == ControllerConfig()


def test_overrides_and_comments():
    text = "# comfort tuning\na_min_deg_s2 = 150\n\nsigma_max_px = 6.5\nactivation_frames = 3\n"
    config = parse_config(text)
    assert config.a_min_deg_s2 == 150.0
    assert config.sigma_max_px == 6.5
    assert config.activation_frames == 3
    assert config.ema_alpha == ControllerConfig().ema_alpha


def test_unknown_key_is_hard_error():
    with pytest.raises(InvalidConfig, match="unknown config key"):
        parse_config("sigma_max = 4\n")


def test_duplicate_key_is_hard_error():
    with pytest.raises(InvalidConfig, match="duplicate"):
        parse_config("sigma_max_px = 4\nsigma_max_px = 5\n")


def test_bad_value_is_hard_error():
    with pytest.raises(InvalidConfig, match="bad value"):
        parse_config("sigma_max_px = four\n")


def test_missing_equals_is_hard_error():
    with pytest.raises(InvalidConfig, match="key = value"):
        parse_config("sigma_max_px 4\n")


def test_out_of_range_value_rejected():
    with pytest.raises(InvalidConfig):
        parse_config("ema_alpha = 0\n")


def test_format_parse_round_trip():
    config = ControllerConfig(a_min_deg_s2=123.25, activation_frames=7, ema_alpha=0.75)
    assert parse_config(format_config(config)) == config
