"""Test Zeno Darwin log stuff."""

from __future__ import annotations

import sys
from unittest.mock import Mock, patch

import pytest
from pythonjsonlogger import json
from rich.logging import RichHandler

from zeno_darwin.log import (
    BASIC_FORMAT,
    DEFAULT_LOG_CONFIG,
    LoggingFormat,
    LogSetup,
    init_logging,
    init_worker_logging,
    resolve_format,
    worker_setup,
)


@pytest.mark.parametrize("log_format", ["auto", "rich"])
@patch("zeno_darwin.log.logging")
def test_init_logging_rich(mock_logging: Mock, log_format: LoggingFormat) -> None:
    """Test init_logging with Rich handler."""

    with patch.object(sys, "stderr") as mock_stderr:
        mock_stderr.isatty = Mock(return_value=log_format == "auto")
        init_logging(logging_format=log_format)

    mock_logging.basicConfig.assert_called_once()
    handlers = mock_logging.basicConfig.call_args_list[0].kwargs["handlers"]
    assert len(handlers) == 1
    assert isinstance(handlers[0], RichHandler) is True


@pytest.mark.parametrize("log_format", ["auto", "json"])
@patch("zeno_darwin.log.logging")
def test_init_logging_json(mock_logging: Mock, log_format: LoggingFormat) -> None:
    """Test init_logging with JSON format handler."""

    mock_handler = Mock()
    mock_logging.StreamHandler = Mock(return_value=mock_handler)

    with patch.object(sys, "stderr") as mock_stderr:
        mock_stderr.isatty = Mock(return_value=log_format != "auto")
        init_logging(logging_format=log_format)

    mock_logging.basicConfig.assert_called_once()
    handlers = mock_logging.basicConfig.call_args_list[0].kwargs["handlers"]
    assert handlers == [mock_handler]

    args = mock_handler.setFormatter.call_args_list[0].args
    assert len(args) == 1
    assert isinstance(args[0], json.JsonFormatter) is True


@patch("zeno_darwin.log.logging")
def test_init_logging_basic(mock_logging: Mock) -> None:
    """Test init_logging with basic format handler."""

    mock_handler = Mock()
    mock_logging.StreamHandler = Mock(return_value=mock_handler)

    init_logging(logging_format="basic")

    mock_logging.basicConfig.assert_called_once()
    handlers = mock_logging.basicConfig.call_args_list[0].kwargs["handlers"]
    assert handlers == [mock_handler]
    mock_handler.setFormatter.assert_called_once_with(
        mock_logging.Formatter.return_value
    )
    mock_logging.Formatter.assert_called_once_with(BASIC_FORMAT)


@patch("zeno_darwin.log.logging")
def test_init_logging_config(mock_logging: Mock) -> None:
    """Test init_logging applies dict config."""

    init_logging(logging_format="basic", config=DEFAULT_LOG_CONFIG)

    mock_logging.config.dictConfig.assert_called_once_with(DEFAULT_LOG_CONFIG)


@pytest.mark.parametrize(("isatty", "expected"), [(True, "rich"), (False, "json")])
def test_resolve_format(isatty: bool, expected: str) -> None:
    """Test auto format follows the terminal."""

    with patch.object(sys, "stderr") as mock_stderr:
        mock_stderr.isatty = Mock(return_value=isatty)
        assert resolve_format("auto") == expected

    assert resolve_format("basic") == "basic"


@patch("zeno_darwin.log.logging")
def test_worker_logging(mock_logging: Mock) -> None:
    """Test worker processes replay the parent setup."""

    init_logging(logging_format="basic", level="DEBUG", config=DEFAULT_LOG_CONFIG)
    setup = worker_setup()
    assert setup == LogSetup("basic", "DEBUG", DEFAULT_LOG_CONFIG)

    mock_logging.reset_mock()
    init_worker_logging(setup)

    mock_logging.basicConfig.assert_called_once()
    assert mock_logging.basicConfig.call_args.kwargs["level"] == "DEBUG"
    mock_logging.config.dictConfig.assert_called_once_with(DEFAULT_LOG_CONFIG)


@patch("zeno_darwin.log.logging")
def test_worker_logging_unset(mock_logging: Mock) -> None:
    """Test workers leave logging alone without a parent setup."""

    init_worker_logging(None)

    mock_logging.basicConfig.assert_not_called()
