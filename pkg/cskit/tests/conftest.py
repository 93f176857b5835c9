import pytest

from cskit import config
from cskit.services.group_table import _memory_table
from cskit.services.rootsys import build
from cskit.services.weyl import from_one_line, from_word


@pytest.fixture(autouse=True)
def no_cache_dir(monkeypatch):
    """Keep tests off any cache directory configured in the environment."""
    monkeypatch.delenv("CSKIT_CACHE_DIR", raising=False)
    monkeypatch.setattr(config, "CACHE_DIR", None)
    yield
    _memory_table.cache_clear()


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    path = tmp_path / "cache"
    monkeypatch.setenv("CSKIT_CACHE_DIR", str(path))
    _memory_table.cache_clear()
    return path


@pytest.fixture(scope="session")
def a2():
    return build("A", 2)


@pytest.fixture(scope="session")
def a3():
    return build("A", 3)


@pytest.fixture(scope="session")
def a4():
    return build("A", 4)


@pytest.fixture(scope="session")
def a5():
    return build("A", 5)


@pytest.fixture(scope="session")
def b2():
    return build("B", 2)


@pytest.fixture(scope="session")
def b3():
    return build("B", 3)


@pytest.fixture(scope="session")
def g2():
    return build("G", 2)


@pytest.fixture(scope="session")
def d4():
    return build("D", 4)


@pytest.fixture(scope="session")
def w4231(a3):
    return from_one_line(a3, [4, 2, 3, 1])


@pytest.fixture(scope="session")
def w513624(a5):
    return from_word(a5, [2, 4, 5, 3, 4, 2, 1])
