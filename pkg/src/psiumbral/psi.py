"""psi-sequences, exposed through the deformed integers n_psi.

Everything downstream consumes n_psi, n_psi!, falling products and psi-binomials,
so a family is fully described by the map n -> n_psi.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path

from .errors import InvalidPsi, ParseError
from .scalar import ONE, Q, ZERO, Scalar, evaluate_expression

# n_psi is checked nonzero up to this index when a family is built
WORKING_BOUND = 20

DATA_DIR = Path(__file__).parent / "data"


class PsiSequence:
    """A psi-family given by its deformed integers n_psi (n >= 1)."""

    def __init__(self, family: str, tag: str, number_fn, limit: int | None = None):
        self.family = family
        self.tag = tag
        self._fn = number_fn
        self.limit = limit
        self._lock = threading.RLock()
        self._numbers: dict[int, Scalar] = {}
        self._factorials: list[Scalar] = [ONE]

    def __repr__(self):
        return f"PsiSequence({self.tag!r})"

    def __eq__(self, other):
        return isinstance(other, PsiSequence) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def validate(self, bound: int = WORKING_BOUND):
        top = bound if self.limit is None else min(bound, self.limit)
        for n in range(1, top + 1):
            if self.number(n).is_zero():
                raise InvalidPsi(f"{self.tag}: n_psi vanishes at n = {n}")
        return self

    def number(self, n: int) -> Scalar:
        if n <= 0:
            return ZERO
        v = self._numbers.get(n)
        if v is not None:
            return v
        if self.limit is not None and n > self.limit:
            raise InvalidPsi(f"{self.tag}: n_psi only given up to n = {self.limit}")
        v = Scalar(self._fn(n))
        with self._lock:
            self._numbers[n] = v
        return v

    def factorial(self, n: int) -> Scalar:
        if n < 0:
            raise ValueError("factorial of a negative index")
        facts = self._factorials
        if n < len(facts):
            return facts[n]
        with self._lock:
            while len(facts) <= n:
                facts.append(facts[-1] * self.number(len(facts)))
        return facts[n]

    def falling(self, n: int, k: int) -> Scalar:
        """n_psi (n-1)_psi ... (n-k+1)_psi; zero once an index <= 0 enters."""
        if k < 0:
            raise ValueError("negative length")
        if k == 0:
            return ONE
        if n - k + 1 <= 0:
            return ZERO
        return self.factorial(n) / self.factorial(n - k)

    def binomial(self, n: int, k: int) -> Scalar:
        if k < 0 or k > n:
            return ZERO
        return self.factorial(n) / (self.factorial(k) * self.factorial(n - k))

    def specialize(self, q0) -> PsiSequence:
        """Same family with q fixed to the rational q0 (numeric mode)."""
        if self.family == "classical":
            return self
        top = WORKING_BOUND if self.limit is None else self.limit
        vals = [Scalar(self.number(n).eval(q0)) for n in range(1, top + 1)]
        return custom(vals, tag=f"{self.tag}@q={q0}")


def classical() -> PsiSequence:
    return PsiSequence("classical", "classical", lambda n: n)


def _q_integer(n: int) -> Scalar:
    out, p = ZERO, ONE
    for _ in range(n):
        out = out + p
        p = p * Q
    return out


def q_natural() -> PsiSequence:
    return PsiSequence("q_natural", "q", _q_integer)


def r_deformed(R) -> PsiSequence:
    """n_psi = R(q^n); R is a callable or an expression in x (and q)."""
    if isinstance(R, str):
        text = R
        fn = lambda n: evaluate_expression(text, {"x": Q ** n})
        tag = f"r:{text}"
    else:
        fn = lambda n: R(Q ** n)
        tag = f"r:{getattr(R, '__name__', 'R')}"
    return PsiSequence("r_deformed", tag, fn).validate()


def custom(values, tag: str = "custom") -> PsiSequence:
    vals = [Scalar(v) for v in values]
    if len(vals) < WORKING_BOUND:
        raise InvalidPsi(f"custom psi needs at least {WORKING_BOUND} entries, got {len(vals)}")
    for i, v in enumerate(vals, 1):
        if v.is_zero():
            raise InvalidPsi(f"custom psi entry n = {i} is zero")
    return PsiSequence("custom", tag, lambda n: vals[n - 1], limit=len(vals))


def load_custom(path) -> PsiSequence:
    p = Path(path)
    if not p.exists() and not p.is_absolute() and (DATA_DIR / p).exists():
        p = DATA_DIR / p
    try:
        doc = json.loads(p.read_text(encoding="utf-8"))
    except (OSError, ValueError) as e:
        raise InvalidPsi(f"cannot read custom psi file {path}: {e}") from e
    raw = doc.get("n_psi") if isinstance(doc, dict) else None
    if not isinstance(raw, list):
        raise InvalidPsi(f"{path}: expected an object with an 'n_psi' list")
    try:
        vals = [Scalar(str(v)) for v in raw]
    except ParseError as e:
        raise InvalidPsi(f"{path}: {e}") from e
    return custom(vals, tag=f"custom:{p.name}")


def squares() -> PsiSequence:
    """n_psi = n^2, the stock non-q example."""
    return load_custom(DATA_DIR / "nsq.json")


def parse_psi(text: str) -> PsiSequence:
    """'q' | 'classical' | 'custom:<file>' | 'r:<expr in x>'"""
    if text in ("q", "q_natural"):
        return q_natural()
    if text == "classical":
        return classical()
    if text.startswith("custom:"):
        return load_custom(text[len("custom:"):])
    if text.startswith("r:"):
        return r_deformed(text[2:])
    raise InvalidPsi(f"unknown psi family {text!r}")


def psi_number(psi: PsiSequence, n: int) -> Scalar:
    return psi.number(n)


def psi_factorial(psi: PsiSequence, n: int) -> Scalar:
    return psi.factorial(n)


def psi_falling(psi: PsiSequence, n: int, k: int) -> Scalar:
    return psi.falling(n, k)


def psi_binomial(psi: PsiSequence, n: int, k: int) -> Scalar:
    return psi.binomial(n, k)
