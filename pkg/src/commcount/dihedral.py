"""Closed-form f_3 and t_3 data for dihedral groups of order 2n.

These formulas are evaluated straight from n, independent of the generic
character machinery, so the two paths cross-validate each other.  For the
order-2n dihedral group the coefficient of f_3 (or t_3) on every linear
character is a single number, and the coefficient on the degree-2 character
psi_j depends only on the parity of j; rotation values split by n mod 4.
"""
from __future__ import annotations

from dataclasses import dataclass

from .chars import build_table
from .counts import ClassCounts, _certified_int
from .cyclo import Cyclo
from .groups import GroupTable, conjugacy_classes


@dataclass(frozen=True)
class DihedralCoeffs:
    """Coefficients of a count function on the order-2n dihedral group:
    one shared value for the linear characters and one value per psi_j."""

    n: int
    linear_coeff: int
    psi_coeffs: tuple[int, ...]
    congruence_case: int

    def __post_init__(self):
        expected = (self.n - 1) // 2 if self.n % 2 else (self.n - 2) // 2
        if len(self.psi_coeffs) != expected:
            raise ValueError(
                f"need {expected} psi coefficients for n={self.n}, "
                f"got {len(self.psi_coeffs)}"
            )
        if self.congruence_case != self.n % 4:
            raise ValueError("congruence_case must be n mod 4")
        if self.linear_coeff <= 0 or any(c <= 0 for c in self.psi_coeffs):
            raise ValueError("dihedral coefficients are positive")

    def as_row_tuple(self) -> tuple[int, ...]:
        """Coefficients aligned with the closed-form character table order
        (linear characters first, then psi_1, psi_2, ...)."""
        linear = 2 if self.n % 2 else 4
        return (self.linear_coeff,) * linear + self.psi_coeffs


def _require_n(n: int) -> None:
    if n < 3:
        raise ValueError("dihedral parameter n must be at least 3")


def f3_coeffs_closed(n: int) -> DihedralCoeffs:
    """Closed-form coefficients of f_3 on the order-2n dihedral group."""
    _require_n(n)
    half = (n - 1) // 2 if n % 2 else (n - 2) // 2
    js = range(1, half + 1)
    if n % 2:
        linear = (n * n + 2 * n + 5) // 2
        psis = tuple(n * n + 5 for _ in js)
    elif n % 4 == 0:
        linear = (n * n + 4 * n + 24) // 2
        psis = tuple(n * n + (16 if j % 2 else 24) for j in js)
    else:
        linear = (n * n + 4 * n + 20) // 2
        psis = tuple(n * n + 20 for _ in js)
    return DihedralCoeffs(n, linear, psis, n % 4)


def t3_coeffs_closed(n: int) -> DihedralCoeffs:
    """Closed-form coefficients of t_3 on the order-2n dihedral group."""
    _require_n(n)
    half = (n - 1) // 2 if n % 2 else (n - 2) // 2
    if n % 2:
        linear, psi = n * n + 3 * n, n * n + 2 * n
    else:
        linear, psi = n * n + 6 * n, n * n + 4 * n
    return DihedralCoeffs(n, linear, (psi,) * half, n % 4)


def f3_value_closed(n: int, s: int | None = None) -> int:
    """f_3 at the identity (s is None) or at the rotation a^(2s).

    Only the derived subgroup, generated by a^2, supports f_3; s indexes
    its non-trivial elements with 0 < s < n/2.
    """
    _require_n(n)
    if s is None:
        return n**3 + 7 * n if n % 2 else n**3 + 28 * n
    if not 0 < 2 * s < n:
        raise ValueError(f"rotation exponent parameter s={s} not in (0, n/2)")
    if n % 2:
        return 2 * n
    return 12 * n if 4 * s == n else 8 * n


def f3_class_counts_closed(G: GroupTable) -> ClassCounts:
    """f_3 on a dihedral group table, assembled from the closed-form values
    alone: rotations a^(2s) get their formula value, everything outside the
    derived subgroup gets 0."""
    n = _dihedral_parameter(G)
    part = conjugacy_classes(G)
    vals = []
    for rep in part.reps:
        if rep == 0:
            vals.append(f3_value_closed(n))
        elif rep < n:
            r = rep
            if n % 2:
                vals.append(2 * n)
            elif r % 2:
                vals.append(0)
            else:
                vals.append(12 * n if 2 * r == n else 8 * n)
        else:
            vals.append(0)
    return ClassCounts(G, tuple(vals), "f", 3)


def t3_class_counts_closed(G: GroupTable) -> ClassCounts:
    """t_3 on a dihedral group table: the closed-form coefficients evaluated
    against the closed-form character table, certified integral."""
    n = _dihedral_parameter(G)
    coeffs = t3_coeffs_closed(n).as_row_tuple()
    T = build_table(G)
    part = conjugacy_classes(G)
    vals = []
    for c in range(len(part)):
        total = Cyclo.zero()
        for q, chi in zip(coeffs, T.irreducibles):
            total = total + q * chi.values[c]
        vals.append(_certified_int(total, f"t_3 at class {c}"))
    return ClassCounts(G, tuple(vals), "t", 3)


def _dihedral_parameter(G: GroupTable) -> int:
    if G.family != "dihedral":
        raise ValueError("closed dihedral formulas need a dihedral: group")
    return int(G.spec.split(":")[1])
