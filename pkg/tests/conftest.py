import pytest
from typer.testing import CliRunner

from grundylab.models import RuleSequence


@pytest.fixture
def half() -> RuleSequence:
    return RuleSequence.half(2**16)


@pytest.fixture
def sqrt() -> RuleSequence:
    return RuleSequence.sqrt(2**16)


@pytest.fixture
def pow2() -> RuleSequence:
    return RuleSequence.pow2(2**16)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()
