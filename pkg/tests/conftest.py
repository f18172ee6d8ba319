import pytest

from nscatalan.exactpoly import LaurentPoly
from nscatalan.keybasis import KeyExpansion


def mono(*exp, q=0, c=1):
    """c * q^q * x^exp."""
    return LaurentPoly.monomial(exp, q=q, coeff=c)


def keys(ell, spec):
    """KeyExpansion from {(q, "011"): coeff} with single-digit alpha strings."""
    return KeyExpansion(ell, {(a, tuple(int(ch) for ch in al)): c for (a, al), c in spec.items()})


@pytest.fixture
def mono_fn():
    return mono
