from functools import lru_cache

from sweepscope import io
from sweepscope import pointconfig as pc
from sweepscope.sweep import SweepOrientedMatroid

CORPUS = io.CORPUS_CONFIGS
DISTINCT = [name for name in CORPUS if not io.load_config(name).has_repeated_points()]


@lru_cache(maxsize=None)
def config(name):
    return io.load_config(name)


@lru_cache(maxsize=None)
def sweep(name) -> SweepOrientedMatroid:
    return SweepOrientedMatroid(pc.sweep_om(config(name)))


@lru_cache(maxsize=None)
def little(name):
    return pc.little_om(config(name))


@lru_cache(maxsize=None)
def big(name):
    from sweepscope import bigom

    return bigom.big_om(sweep(name))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
