import random

import pytest
from hypothesis import settings, strategies as st

from cliquesum.graph import Graph, erdos_renyi

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


def oracle_graphs(count=200):
    """The seeded Erdős–Rényi family: n in [6, 18], p in {0.2, 0.5, 0.8}."""
    ps = (0.2, 0.5, 0.8)
    return [erdos_renyi(6 + i % 13, ps[i % 3], seed=i) for i in range(count)]


def mixed_graphs(count=500):
    """Random graphs up to 200 vertices, half of them oracle-sized."""
    out = []
    for i in range(count):
        rng = random.Random(10_000 + i)
        n = rng.randint(1, 18) if i % 2 == 0 else rng.randint(19, 200)
        p = rng.choice((0.02, 0.05, 0.1, 0.3)) if n > 18 else rng.choice((0.1, 0.3, 0.5, 0.7, 0.9))
        out.append(erdos_renyi(n, p, seed=i))
    return out


CRITERIA: list[tuple[str, bool | None, str]] = []


@pytest.fixture
def criterion():
    def record(name: str, ok: bool | None, detail: str = "") -> None:
        CRITERIA.append((name, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in CRITERIA:
        status = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
        terminalreporter.write_line(f"{status}  {name}  {detail}")
