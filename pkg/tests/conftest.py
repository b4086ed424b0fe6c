import random

import pytest

from suffixient.text import load_text

EXAMPLE_T = "0100101001001010010100100101001001"
EXAMPLE_P = "1001001010010010100100101001010010"
EXAMPLE_SET = (14, 20, 33, 35)


@pytest.fixture
def example_text():
    return load_text(EXAMPLE_T)


@pytest.fixture
def example_pattern():
    return EXAMPLE_P.encode()


def random_body(rng: random.Random, n: int, sigma: int) -> bytes:
    return bytes(rng.choice(b"ACGTNRYK"[:sigma]) for _ in range(n))


def random_instances(seed: int, count: int, max_n: int, max_m: int, sigmas=(2, 4)):
    """(body, pattern) pairs; patterns mix noise with spliced text substrings."""
    from suffixient.verify import random_pattern

    rng = random.Random(seed)
    for _ in range(count):
        sigma = rng.choice(sigmas)
        body = random_body(rng, rng.randint(1, max_n), sigma)
        yield body, random_pattern(rng, body, b"ACGTNRYK"[:sigma], rng.randint(0, max_m))


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
