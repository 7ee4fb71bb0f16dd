import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from momentseq.poly import MultiPoly


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion number")


_results: dict[int, list] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    n = getattr(report, "criterion", None)
    if n is None:
        return
    _results.setdefault(n[0], [n[1], []])[1].append((report.nodeid, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        rep.criterion = (marker.args[0], marker.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        text, runs = _results[n]
        failed = [nid.split("::")[-1] for nid, out in runs if out != "passed"]
        status = "PASS" if not failed else "FAIL"
        line = f"criterion {n:2d}: {status}  {text}"
        if failed:
            line += f"  (failing: {', '.join(failed)})"
        terminalreporter.write_line(line)


# ---------------------------------------------------------------------------
# random inputs

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def polys(draw, num_vars=None, max_degree=6, max_terms=6):
    d = draw(st.integers(1, 4)) if num_vars is None else num_vars
    exps = st.lists(st.integers(0, max_degree), min_size=d, max_size=d).filter(
        lambda e: sum(e) <= max_degree
    )
    terms = draw(st.dictionaries(exps.map(tuple), small_fractions, max_size=max_terms))
    return MultiPoly(d, terms)


def random_poly(rng: random.Random, d: int, max_degree: int = 6, max_terms: int = 6) -> MultiPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_degree)
        exp = [0] * d
        for _ in range(deg):
            exp[rng.randrange(d)] += 1
        terms[tuple(exp)] = terms.get(tuple(exp), 0) + Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return MultiPoly(d, terms)


def random_prefix(rng: random.Random, length: int):
    return tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 7)) for _ in range(length))


def leibniz_det(rows):
    """Brute-force determinant over all permutations (works for any ring)."""
    import itertools

    n = len(rows)
    total = None
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = rows[0][perm[0]]
        for i in range(1, n):
            term = term * rows[i][perm[i]]
        term = term if inversions % 2 == 0 else -term
        total = term if total is None else total + term
    return total


def atomic_moments(atoms, weights, length):
    return tuple(sum(w * x ** n for x, w in zip(atoms, weights)) for n in range(length))
