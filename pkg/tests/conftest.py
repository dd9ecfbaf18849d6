import pytest

from orelt.cli.syntax import parse_presentation, parse_word


def pres(text):
    """``"a b; (a b)^2 | b^3"`` style shorthand for a presentation."""
    gens, _, rels = text.partition(";")
    lines = [f"gens: {gens.strip()}"] + [f"rel: {r.strip()}" for r in rels.split("|") if r.strip()]
    return parse_presentation("\n".join(lines))


def word(text, names=("a", "b")):
    return parse_word(text, names)


@pytest.fixture
def ab2():
    return pres("a b; (a b)^2")


@pytest.fixture
def comm2():
    return pres("a b; [a, b]^2")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
