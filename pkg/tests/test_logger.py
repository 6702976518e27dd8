import logging

from sbe_backend.utils.logger import PACKAGE_LOGGER, get_logger


def test_loggers_share_the_package_handler():
    first = get_logger("sbe_backend.shooting.classify")
    second = get_logger("pc_sweep")
    package = logging.getLogger(PACKAGE_LOGGER)
    assert second.name == "sbe_backend.pc_sweep"
    assert first.handlers == [] and second.handlers == []
    assert len(package.handlers) == 1
    assert not package.propagate


def test_level_argument_relevels_the_package():
    package = logging.getLogger(PACKAGE_LOGGER)
    previous = package.level
    try:
        child = get_logger("sbe_backend.app.main", level="DEBUG")
        assert child.getEffectiveLevel() == logging.DEBUG
        get_logger("sbe_backend.app.main", level="warning")
        assert get_logger("sbe_backend.theory.exponents").getEffectiveLevel() == logging.WARNING
        assert len(package.handlers) == 1
    finally:
        package.setLevel(previous)
