"""Shared fixtures plus the acceptance summary hook.

Catalog instances are built once per session; everything here is exact
arithmetic, so caching is about convenience, not numerics.
"""

from typing import Dict, List, Tuple

import pytest
from hypothesis import settings

from axial import (
    NORTON_SAKUMA_NAMES,
    QQ,
    Algebra,
    flip_subalgebra,
    hw_periodic_quotient,
    matsuo,
    norton_sakuma,
    spin_factor,
    split_spin_factor,
)
from axial.catalog import ThreeTranspositionGroup
from axial.perms import parse_cycles

settings.register_profile("pkg", deadline=None, max_examples=60)
settings.load_profile("pkg")


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(n, title): acceptance criterion, reported in the summary"
    )


_CRITERIA: Dict[int, Tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if report.when == "call":
        _CRITERIA[n] = ("PASS" if report.passed else "FAIL", title)
    elif report.when == "setup" and report.failed:
        _CRITERIA[n] = ("FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for n in sorted(_CRITERIA):
        verdict, title = _CRITERIA[n]
        terminalreporter.write_line(f"[criterion {n:2d}] {verdict}  {title}")


# -- catalog fixtures -------------------------------------------------------

_NS_CACHE: Dict[str, Algebra] = {}


@pytest.fixture(scope="session")
def ns():
    def get(name: str) -> Algebra:
        if name not in _NS_CACHE:
            _NS_CACHE[name] = norton_sakuma(name)
        return _NS_CACHE[name]

    return get


@pytest.fixture(scope="session")
def s3_quarter() -> Algebra:
    return matsuo(ThreeTranspositionGroup.symmetric(3), QQ.parse("1/4"))


@pytest.fixture(scope="session")
def s4_quarter() -> Algebra:
    return matsuo(ThreeTranspositionGroup.symmetric(4), QQ.parse("1/4"))


@pytest.fixture(scope="session")
def s4_flip():
    sigma = parse_cycles("(1 2)(3 4)", 4)
    return flip_subalgebra(
        ThreeTranspositionGroup.symmetric(4), QQ.parse("1/4"), sigma
    )


@pytest.fixture(scope="session")
def golden(ns) -> List[Tuple[str, Algebra]]:
    """Every catalog family at small size, used for catalog-wide properties."""
    quarter = QQ.parse("1/4")
    out: List[Tuple[str, Algebra]] = []
    for name in NORTON_SAKUMA_NAMES:
        out.append((f"ns:{name}", ns(name)))
    out.append(("matsuo:S3:1/4", matsuo(ThreeTranspositionGroup.symmetric(3), quarter)))
    out.append(("matsuo:S4:1/4", matsuo(ThreeTranspositionGroup.symmetric(4), quarter)))
    out.append(("matsuo:S3:2", matsuo(ThreeTranspositionGroup.symmetric(3), QQ.parse("2"))))
    out.append(("matsuo:S3:-1", matsuo(ThreeTranspositionGroup.symmetric(3), QQ.parse("-1"))))
    out.append(("spin:[[2]]", spin_factor([[2]]).algebra))
    out.append(("spin:2I2", spin_factor([[2, 0], [0, 2]]).algebra))
    out.append(("splitspin:I2:1/3", split_spin_factor([[1, 0], [0, 1]], QQ.parse("1/3")).algebra))
    out.append(("splitspin:[[1]]:1/3", split_spin_factor([[1]], QQ.parse("1/3")).algebra))
    out.append(("splitspin:I2:-1", split_spin_factor([[1, 0], [0, 1]], QQ.parse("-1")).algebra))
    sigma = parse_cycles("(1 2)(3 4)", 4)
    out.append(
        ("flip:S4", flip_subalgebra(ThreeTranspositionGroup.symmetric(4), quarter, sigma).algebra)
    )
    for period in (2, 3, 4, 5):
        out.append((f"hw:{period}", hw_periodic_quotient(period)))
    return out
