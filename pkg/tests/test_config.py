import pytest

from classforge._config import Budgets, kernel_backend, parse_budget


def test_parse_budget():
    assert parse_budget(None) == Budgets()
    assert parse_budget("5000").classes == 5000
    b = parse_budget("r3=10, rho=7")
    assert (b.r3, b.rho, b.classes) == (10, 7, Budgets().classes)
    with pytest.raises(ValueError):
        parse_budget("bogus=1")


def test_kernel_backend_env(monkeypatch):
    monkeypatch.setenv("CLASSFORGE_KERNELS", "numpy")
    assert kernel_backend() == "numpy"
    monkeypatch.setenv("CLASSFORGE_KERNELS", "fortran")
    with pytest.raises(ValueError):
        kernel_backend()
