from functools import lru_cache

from typeb_contraction.adapted_pair import build_certificate
from typeb_contraction.contraction import build_contraction
from typeb_contraction.rootspace import build_context

MAX_N = 12
ALL_CASES = [(n, s) for n in range(2, MAX_N + 1) for s in range(2, n + 1, 2)]
PROPER_CASES = [(n, s) for n, s in ALL_CASES if n > s]
SMALL_CASES = [(n, s) for n, s in ALL_CASES if n <= 7]


@lru_cache(maxsize=None)
def context(n, s):
    return build_context(n, s)


@lru_cache(maxsize=None)
def certificate(n, s):
    return build_certificate(context(n, s))


@lru_cache(maxsize=None)
def contraction(n, s):
    return build_contraction(context(n, s))


# criterion number -> (title, passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def record(number: int, title: str, ok: bool, detail: str) -> None:
    """Combine results for one criterion (several tests may contribute) and print the line."""
    if number in ACCEPTANCE:
        _, prev_ok, prev_detail = ACCEPTANCE[number]
        ok, detail = prev_ok and ok, f"{prev_detail}; {detail}"
    ACCEPTANCE[number] = (title, ok, detail)
    print(acceptance_line(number))


def acceptance_line(number: int) -> str:
    title, ok, detail = ACCEPTANCE[number]
    return f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(acceptance_line(k))
