# Copyright 2026 mctsynth authors.
# See LICENSE file for licensing details.

import pytest


def pytest_addoption(parser: pytest.Parser) -> None:
    """Add options to the pytest command line.

    This is a pytest hook that is called when the pytest command line is being parsed.

    Args:
      parser: The pytest command line parser.
    """
    parser.addoption(
        "--max-table-size",
        action="store",
        type=int,
        default=10,
        help="Largest gate size the cost-table command is exercised with",
    )


def pytest_configure(config: pytest.Config) -> None:
    """Validate the options provided by the user.

    This is a pytest hook that is called after command line options have been parsed.

    Args:
      config: The pytest configuration object.
    """
    max_table_size = config.getoption("--max-table-size")
    if max_table_size < 1:
        pytest.exit(f"--max-table-size must be at least 1, got {max_table_size}")


@pytest.fixture(scope="module")
def max_table_size(request: pytest.FixtureRequest) -> int:
    """Largest gate size passed to `cost-table`."""
    return request.config.getoption("--max-table-size")
