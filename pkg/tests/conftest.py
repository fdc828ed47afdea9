import pytest

from ademops.cli import load_fixture


@pytest.fixture(scope="session")
def fixture_complex():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_fixture(name)
        return cache[name]
    return get


@pytest.fixture
def report(capsys):
    """Print one acceptance line straight to the terminal, then assert."""
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail
    return emit
