"""Dual shifts, the mutator q_hat, and the two-variable plane construction."""

from __future__ import annotations

from .errors import TruncationExceeded
from .poly import BiPoly, Poly
from .scalar import ONE, ZERO, Scalar
from .sequences import CheckResult, PolySeq, expand_in_basis, shift_bivariate


class BasisOp:
    """Linear map given by its matrix in the basis p_0..p_n of a sequence.

    columns[j] lists the coordinates of the image of p_j.  Raising maps leave
    the top basis element without an image, so their domain is one degree
    short of the basis.
    """

    def __init__(self, basis: PolySeq, columns, name: str = ""):
        self.basis = basis
        self.columns = [[Scalar(c) for c in col] for col in columns]
        self.name = name

    @property
    def domain(self) -> int:
        return len(self.columns) - 1

    def apply(self, p: Poly) -> Poly:
        if p.degree > self.domain:
            raise TruncationExceeded(f"{self.name}: degree {p.degree} outside domain {self.domain}")
        if p.is_zero():
            return Poly()
        coords = expand_in_basis(p, self.basis)
        out = Poly()
        for j, c in enumerate(coords):
            if c.is_zero():
                continue
            for i, m in enumerate(self.columns[j]):
                if not m.is_zero():
                    out = out + self.basis.polys[i].scale(c * m)
        return out

    __call__ = apply

    def matrix(self):
        size = len(self.basis.polys)
        return [[self.columns[j][i] if i < len(self.columns[j]) else ZERO for j in range(len(self.columns))]
                for i in range(size)]


def dual_shift(seq: PolySeq) -> BasisOp:
    """x_Q p_n = p_(n+1)."""
    n = seq.n_max
    cols = []
    for j in range(n):
        col = [ZERO] * (n + 1)
        col[j + 1] = ONE
        cols.append(col)
    return BasisOp(seq, cols, "x_Q")


def mutator_weight(psi, n: int) -> Scalar:
    """((n+1)_psi - 1)/n_psi, with 0_psi read as 1 at n = 0."""
    den = psi.number(n) if n > 0 else ONE
    return (psi.number(n + 1) - ONE) / den


def q_mutator_weights(psi, seq: PolySeq) -> BasisOp:
    n = seq.n_max
    cols = []
    for j in range(n + 1):
        col = [ZERO] * (n + 1)
        col[j] = mutator_weight(psi, j)
        cols.append(col)
    return BasisOp(seq, cols, "q_hat")


def identity_op(seq: PolySeq) -> BasisOp:
    n = seq.n_max
    return BasisOp(seq, [[ONE if i == j else ZERO for i in range(n + 1)] for j in range(n + 1)], "id")


def commutation_check(Q, seq: PolySeq, q_hat: BasisOp | None = None, n_max: int | None = None) -> CheckResult:
    """Q x_Q p_n - q_hat x_Q Q p_n = p_n for n < len(seq) - 1."""
    psi = Q.psi
    xq = dual_shift(seq)
    qh = q_hat if q_hat is not None else q_mutator_weights(psi, seq)
    top = seq.n_max - 1 if n_max is None else n_max
    if top > seq.n_max - 1:
        raise TruncationExceeded("commutation check needs p_(n+1)")
    for n in range(top + 1):
        p = seq.polys[n]
        lhs = Q.apply(xq(p)) - qh(xq(Q.apply(p)))
        if lhs != p:
            return CheckResult(False, n, f"mutator identity fails at n = {n}")
    return CheckResult(True)


def qplane_weights(psi, n_max: int) -> list[Scalar]:
    """b_n = prod_{k<=n} ((k+1)_psi - 1)/k_psi, with b_0 = 1 (empty product)."""
    b = [ONE]
    for k in range(1, n_max + 1):
        b.append(b[-1] * mutator_weight(psi, k))
    return b


def _apply_A(p: BiPoly) -> BiPoly:
    return BiPoly({(i + 1, j): c for (i, j), c in p.terms.items()})


def _apply_B(p: BiPoly, b) -> BiPoly:
    return BiPoly({(i, j + 1): c * b[i] for (i, j), c in p.terms.items()})


def plane_power(psi, n: int, b=None) -> BiPoly:
    """(A + B)^n [1]."""
    b = b if b is not None else qplane_weights(psi, n)
    p = BiPoly({(0, 0): ONE})
    for _ in range(n):
        p = _apply_A(p) + _apply_B(p, b)
    return p


def plane_binomial(psi, n: int, b=None) -> BiPoly:
    """sum_k binom_psi(n,k) A^k B^(n-k) [1]."""
    b = b if b is not None else qplane_weights(psi, n)
    out = BiPoly()
    for k in range(n + 1):
        p = BiPoly({(0, 0): ONE})
        for _ in range(n - k):
            p = _apply_B(p, b)
        for _ in range(k):
            p = _apply_A(p)
        out = out + p * psi.binomial(n, k)
    return out


def plane_commutes(psi, n_max: int) -> bool:
    """B A - q_hat A B vanishes on x^0..x^n_max (q_hat acting on the x-degree)."""
    b = qplane_weights(psi, n_max + 1)
    for m in range(n_max + 1):
        x = BiPoly({(m, 0): ONE})
        ba = _apply_B(_apply_A(x), b)
        ab = _apply_A(_apply_B(x, b))
        w = mutator_weight(psi, m + 1)
        if ba != ab * w:
            return False
    return True


def qplane_binomial_obstruction(psi, n_max: int):
    """Per-degree comparison of (A+B)^n[1] with the psi-binomial expansion.

    Returns (rows, first_violation) where rows are report dicts.
    """
    b = qplane_weights(psi, n_max)
    rows = []
    first = None
    for n in range(n_max + 1):
        lhs = plane_power(psi, n, b)
        rhs = plane_binomial(psi, n, b)
        eq = lhs == rhs
        if not eq and first is None:
            first = n
        rows.append({"psi": psi.tag, "n": n, "lhs": str(lhs), "rhs": str(rhs), "equal": eq})
    return rows, first


def plane_substitute(psi, p: Poly, b=None) -> BiPoly:
    """p(A + B)[1]."""
    b = b if b is not None else qplane_weights(psi, max(p.degree, 0))
    out = BiPoly()
    power = BiPoly({(0, 0): ONE})
    for c in p.coeffs:
        out = out + power * c
        power = _apply_A(power) + _apply_B(power, b)
    return out


def qplane_identity_check(seq: PolySeq) -> CheckResult:
    """p_n(x +_psi y) = p_n(A + B)[1] for each member of the sequence."""
    psi = seq.psi
    b = qplane_weights(psi, seq.n_max)
    for n, p in enumerate(seq.polys):
        if shift_bivariate(psi, p) != plane_substitute(psi, p, b):
            return CheckResult(False, n, f"plane identity fails at n = {n}")
    return CheckResult(True)
