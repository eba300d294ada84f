import io

import pytest

from src.utils.logger import Logger, LogLevel


@pytest.fixture(autouse=True)
def restore_quiet():
    previous = Logger.is_quiet()
    yield
    Logger.set_quiet(previous)


def test_prefix_and_icon():
    Logger.set_quiet(False)
    stream = io.StringIO()
    Logger(prefix="Bench", stream=stream).bench("12.5 ns/f")
    line = stream.getvalue()
    assert "[Bench] 12.5 ns/f" in line
    assert Logger.ICONS[LogLevel.BENCH] in line


def test_quiet_keeps_errors_only():
    stream = io.StringIO()
    logger = Logger(stream=stream)
    Logger.set_quiet(True)
    logger.info("hidden")
    logger.verify("hidden")
    logger.error("shown")
    assert stream.getvalue().count("\n") == 1
    assert "shown" in stream.getvalue() and "hidden" not in stream.getvalue()


def test_defaults_to_stderr(capsys):
    Logger.set_quiet(False)
    Logger(prefix="CLI").warning("careful")
    captured = capsys.readouterr()
    assert captured.out == "" and "[CLI] careful" in captured.err
