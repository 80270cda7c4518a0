import json

import pytest

from psiumbral import psi as psimod
from psiumbral.errors import InvalidPsi
from psiumbral.scalar import ONE, Q, ZERO, Scalar


def test_q_numbers():
    q = psimod.q_natural()
    assert q.number(3) == 1 + Q + Q ** 2
    assert q.number(0) == ZERO
    assert q.factorial(3) == (1 + Q) * (1 + Q + Q ** 2)
    assert q.factorial(0) == ONE
    assert q.falling(3, 2) == (1 + Q + Q ** 2) * (1 + Q)
    assert q.binomial(4, 2) == 1 + Q + 2 * Q ** 2 + Q ** 3 + Q ** 4
    assert q.binomial(2, 1) == 1 + Q


def test_classical_numbers():
    c = psimod.classical()
    assert c.number(5) == 5
    assert c.factorial(4) == 24
    assert c.falling(4, 5) == ZERO
    assert c.binomial(3, 5) == ZERO
    assert c.binomial(7, 0) == ONE


def test_squares_family():
    s = psimod.squares()
    assert s.number(2) == 4
    assert s.factorial(3) == 36
    assert s.tag == "custom:nsq.json"


def test_r_deformed_matches_q():
    r = psimod.r_deformed("(1-x)/(1-q)")
    q = psimod.q_natural()
    assert all(r.number(n) == q.number(n) for n in range(1, 8))


def test_custom_validation(tmp_path):
    with pytest.raises(InvalidPsi):
        psimod.custom([1, 0] + [1] * 20)
    with pytest.raises(InvalidPsi):
        psimod.custom([1, 2, 3])
    path = tmp_path / "ones.json"
    path.write_text(json.dumps({"n_psi": ["1"] * 24}))
    c = psimod.load_custom(str(path))
    assert c.factorial(10) == ONE
    with pytest.raises(InvalidPsi):
        c.number(30)


def test_parse_psi():
    assert psimod.parse_psi("q").family == "q_natural"
    assert psimod.parse_psi("classical").tag == "classical"
    assert psimod.parse_psi("custom:nsq.json").number(3) == 9
    with pytest.raises(InvalidPsi):
        psimod.parse_psi("bogus")


def test_specialize():
    q = psimod.q_natural().specialize(2)
    assert q.number(3) == 7
    assert q.binomial(3, 1) == 7


def test_wrappers():
    q = psimod.q_natural()
    assert psimod.psi_number(q, 2) == 1 + Q
    assert psimod.psi_factorial(q, 2) == 1 + Q
    assert psimod.psi_falling(q, 2, 2) == 1 + Q
    assert psimod.psi_binomial(q, 3, 3) == ONE


def test_binomial_pascal_like(family):
    # binom(n, k) * k! * (n-k)! == n!
    for n in range(7):
        for k in range(n + 1):
            assert family.binomial(n, k) * family.factorial(k) * family.factorial(n - k) == family.factorial(n)


def test_binomial_q_pascal():
    q = psimod.q_natural()
    for n in range(1, 7):
        for k in range(1, n):
            assert q.binomial(n, k) == q.binomial(n - 1, k - 1) + Q ** k * q.binomial(n - 1, k)
