"""Counting solutions of simultaneous commutator equations.

For a finite group G and n >= 2, f_n(g) is the number of n-tuples
(x_1, ..., x_n) with [x_i, x_j] = g for all i < j, where
[x, y] = x^-1 y^-1 x y.  The relaxed count is
t_n(g) = sum over pairs with [x, y] = g of |C(x)|^(n-2); it agrees
with f_n at n = 2 and dominates f_3 away from the identity.

Everything here is exact: brute-force tallies are plain integers, and
character-formula values are certified to be non-negative integers
before they are returned.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .chars import (
    CharacterTable,
    ClassFunction,
    TableProviderError,
    TableValidationError,
    build_table,
)
from .cyclo import Cyclo, NotRationalError
from .groups import GroupTable, SubgroupRef, center_and_derived, conjugacy_classes

DEFAULT_BUDGET = 10**9


class BudgetExceededError(RuntimeError):
    """A brute-force search would exceed the operation budget."""

    def __init__(self, projected: int, budget: int):
        self.projected = projected
        self.budget = budget
        super().__init__(
            f"projected cost {projected} exceeds budget {budget}; "
            "raise the budget to force the computation"
        )


@dataclass(frozen=True, eq=False)
class ClassCounts:
    """A count function, stored as one integer per conjugacy class.

    ``kind`` is "f" (all pairwise commutators equal g) or "t" (the
    star-shaped system); ``n`` is the tuple length.  Equality compares
    the counted values, not the provenance metadata.
    """

    group: GroupTable
    values: tuple[int, ...]
    kind: str = "f"
    n: int = 2

    def __eq__(self, other):
        return (
            isinstance(other, ClassCounts)
            and self.group is other.group
            and self.values == other.values
        )

    def at(self, g: int) -> int:
        return self.values[conjugacy_classes(self.group).class_of[g]]

    def total(self) -> int:
        """Sum over all group elements (class sizes times class values)."""
        part = conjugacy_classes(self.group)
        return sum(s * v for s, v in zip(part.sizes, self.values))

    def support(self) -> frozenset[int]:
        """All elements g with a positive count."""
        part = conjugacy_classes(self.group)
        out = []
        for cls, v in zip(part.classes, self.values):
            if v:
                out.extend(cls)
        return frozenset(out)


def _check_budget(m: int, n: int, budget: int) -> None:
    projected = m**n * (n * (n - 1) // 2)
    if projected > budget:
        raise BudgetExceededError(projected, budget)


def _pair_commutator_index(G: GroupTable, members) -> dict[int, dict[int, set]]:
    """R[x][g] = set of y in members with [x, y] = g."""
    comm = G.comm
    R: dict[int, dict[int, set]] = {}
    for x in members:
        row: dict[int, set] = {}
        for y in members:
            row.setdefault(comm(x, y), set()).add(y)
        R[x] = row
    return R


def _fn_element_counts(
    G: GroupTable, members, n: int, budget: int
) -> dict[int, int]:
    if n < 2:
        raise ValueError("n must be at least 2")
    members = list(members)
    _check_budget(len(members), n, budget)
    comm = G.comm
    counts: dict[int, int] = defaultdict(int)
    if n == 2:
        for x in members:
            for y in members:
                counts[comm(x, y)] += 1
        return dict(counts)

    R = _pair_commutator_index(G, members)
    empty: set = set()

    def extend(cands: set, picked: int, g: int) -> int:
        if picked == n - 1:
            return len(cands)
        total = 0
        for x in cands:
            nxt = cands & R[x].get(g, empty)
            if nxt:
                total += extend(nxt, picked + 1, g)
        return total

    for x1 in members:
        row1 = R[x1]
        for g, second in row1.items():
            base = row1[g]
            for x2 in second:
                cands = base & R[x2].get(g, empty)
                if n == 3:
                    counts[g] += len(cands)
                elif cands:
                    counts[g] += extend(cands, 2, g)
    return dict(counts)


def _as_class_counts(
    G: GroupTable, counts: dict[int, int], kind: str, n: int
) -> ClassCounts:
    part = conjugacy_classes(G)
    vals = []
    for cls in part.classes:
        v = counts.get(cls[0], 0)
        for e in cls[1:]:
            if counts.get(e, 0) != v:
                raise RuntimeError(
                    f"count is not constant on the class of element {cls[0]}"
                )
        vals.append(v)
    return ClassCounts(G, tuple(vals), kind, n)


def brute_f_n(
    G: GroupTable,
    n: int,
    H: SubgroupRef | None = None,
    budget: int = DEFAULT_BUDGET,
) -> ClassCounts | dict[int, int]:
    """f_n by exhaustive search (with candidate-set pruning for n >= 3).

    Without H: counts over all of G, as ClassCounts.  With a subgroup H:
    counts tuples drawn from H, returned as a map member -> count (zero
    values omitted) since the result is only an H-class function.
    """
    if H is None:
        counts = _fn_element_counts(G, range(G.order), n, budget)
        return _as_class_counts(G, counts, "f", n)
    if H.parent is not G:
        raise ValueError("subgroup reference belongs to a different group")
    return _fn_element_counts(G, H.members, n, budget)


def naive_f_n(
    G: GroupTable, n: int, budget: int = DEFAULT_BUDGET
) -> ClassCounts:
    """f_n by literal enumeration of all |G|^n tuples.  Ground truth for
    the optimized search; only viable for small groups."""
    if n < 2:
        raise ValueError("n must be at least 2")
    _check_budget(G.order, n, budget)
    order = G.order
    ct = G.comm_table()
    counts: dict[int, int] = defaultdict(int)
    if n == 2:
        for x in range(order):
            row = ct[x]
            for y in range(order):
                counts[row[y]] += 1
    elif n == 3:
        rng = range(order)
        for x in rng:
            rowx = ct[x]
            for y in rng:
                g = rowx[y]
                rowy = ct[y]
                counts[g] += sum(
                    1 for z in rng if rowx[z] == g and rowy[z] == g
                )
    else:
        from itertools import product

        for tup in product(range(order), repeat=n):
            g = ct[tup[0]][tup[1]]
            if all(
                ct[tup[i]][tup[j]] == g
                for i in range(n)
                for j in range(i + 1, n)
                if (i, j) != (0, 1)
            ):
                counts[g] += 1
    return _as_class_counts(G, dict(counts), "f", n)


def f3_parametrized(G: GroupTable, budget: int = DEFAULT_BUDGET) -> ClassCounts:
    """f_3 via the coset parametrization: for each pair (c, z) with
    [c, z] = g, count x with x in C(cz)z and x in C(c)."""
    _check_budget(G.order, 2, budget)
    mul = G.mul
    comm = G.comm
    cents = G.centralizer_lists()
    cent_sets = G.centralizer_sets()
    counts: dict[int, int] = defaultdict(int)
    for c in range(G.order):
        cc = cent_sets[c]
        mc = mul[c]
        for z in range(G.order):
            hits = 0
            for u in cents[mc[z]]:
                if mul[u][z] in cc:
                    hits += 1
            counts[comm(c, z)] += hits
    return _as_class_counts(G, dict(counts), "f", 3)


def brute_t_n(G: GroupTable, n: int, budget: int = DEFAULT_BUDGET) -> ClassCounts:
    """t_n on all of G: each pair [x, y] = g contributes |C(x)|^(n-2)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    _check_budget(G.order, 2, budget)
    comm = G.comm
    cents = G.centralizer_lists()
    weight = [len(c) ** (n - 2) for c in cents]
    counts: dict[int, int] = defaultdict(int)
    for x in range(G.order):
        w = weight[x]
        for y in range(G.order):
            counts[comm(x, y)] += w
    return _as_class_counts(G, dict(counts), "t", n)


# -- character formulas --------------------------------------------------------


def _certified_int(value: Cyclo, what: str, nonneg: bool = True) -> int:
    try:
        q = value.to_rational()
    except NotRationalError:
        raise ValueError(f"{what} is irrational: {value}") from None
    if q.denominator != 1:
        raise ValueError(f"{what} is not an integer: {q}")
    if nonneg and q < 0:
        raise ValueError(f"{what} is negative: {q}")
    return int(q)


def f2_coeffs(T: CharacterTable) -> tuple[Fraction, ...]:
    """Coefficients of f_2 in the irreducible basis: |G|/chi(1)."""
    order = T.group.order
    return tuple(Fraction(order, d) for d in T.degrees)


def f2_from_characters(G: GroupTable, T: CharacterTable | None = None) -> ClassCounts:
    """f_2 via the classical class-equation formula, certified integral."""
    T = T or build_table(G)
    part = conjugacy_classes(G)
    coeffs = f2_coeffs(T)
    vals = []
    for c in range(len(part)):
        total = Cyclo.zero()
        for q, chi in zip(coeffs, T.irreducibles):
            total = total + q * chi.values[c]
        vals.append(_certified_int(total, f"f_2 at class {c}"))
    return ClassCounts(G, tuple(vals), "f", 2)


def _theta_weights(G: GroupTable, a: int) -> list[int]:
    """w[c] = sum over b with [a, b] in class c of |C(ab) b  intersect  C(a)|."""
    part = conjugacy_classes(G)
    mul = G.mul
    comm = G.comm
    cents = G.centralizer_lists()
    cent_sets = G.centralizer_sets()
    ca = cent_sets[a]
    w = [0] * len(part)
    for b in range(G.order):
        ab = mul[a][b]
        hits = 0
        for c in cents[ab]:
            if mul[c][b] in ca:
                hits += 1
        w[part.class_of[comm(a, b)]] += hits
    return w


def _aggregated_theta_weights(G: GroupTable) -> list[list[int]]:
    """Per a-class weight vectors, cached on the group."""
    key = "theta-weights"
    cached = G._extra.get(key)
    if cached is None:
        part = conjugacy_classes(G)
        cached = [_theta_weights(G, rep) for rep in part.reps]
        G._extra[key] = cached
    return cached


def theta_class_function(G: GroupTable, chi: ClassFunction) -> ClassFunction:
    """theta_chi as a class function of a (it is conjugation-invariant)."""
    if chi.group is not G:
        raise ValueError("character belongs to a different group")
    weights = _aggregated_theta_weights(G)
    vals = []
    for w in weights:
        total = Cyclo.zero()
        for cnt, v in zip(w, chi.values):
            if cnt:
                total = total + cnt * v
        vals.append(total)
    return ClassFunction(G, tuple(vals))


def theta_chi(G: GroupTable, chi: ClassFunction, a: int) -> Cyclo:
    """theta_chi(a) = sum_b |C(ab) b  intersect  C(a)| * chi([a, b])."""
    return theta_class_function(G, chi).at(a)


def tau_chi(G: GroupTable, chi: ClassFunction, b: int) -> Cyclo:
    """tau_chi(b) = sum_a |C(ab) b  intersect  C(a)| * chi([a, b]) — the
    same summand as theta_chi with the roles of a and b swapped."""
    if chi.group is not G:
        raise ValueError("character belongs to a different group")
    part = conjugacy_classes(G)
    mul = G.mul
    comm = G.comm
    cents = G.centralizer_lists()
    cent_sets = G.centralizer_sets()
    w = [0] * len(part)
    for a in range(G.order):
        ab = mul[a][b]
        ca = cent_sets[a]
        hits = 0
        for u in cents[ab]:
            if mul[u][b] in ca:
                hits += 1
        w[part.class_of[comm(a, b)]] += hits
    total = Cyclo.zero()
    for cnt, v in zip(w, chi.values):
        if cnt:
            total = total + cnt * v
    return total


def m_chi(G: GroupTable, chi: ClassFunction) -> Cyclo:
    """m_chi = sum_a theta_chi(a), certified real."""
    part = conjugacy_classes(G)
    th = theta_class_function(G, chi)
    total = Cyclo.zero()
    for size, v in zip(part.sizes, th.values):
        if v:
            total = total + size * v
    if total.conj() != total:
        raise ValueError(f"m_chi is not real ({total}); table is inconsistent")
    return total


def f3_coeffs(G: GroupTable, T: CharacterTable | None = None) -> tuple[Fraction, ...]:
    """Coefficients of f_3 in the irreducible basis: m_chi / |G|, certified
    rational."""
    T = T or build_table(G)
    out = []
    for chi, label in zip(T.irreducibles, T.labels):
        m = m_chi(G, chi)
        try:
            q = m.to_rational()
        except NotRationalError:
            raise ValueError(
                f"m_{label} is irrational ({m}); the f_3 expansion has no "
                "rational coefficient here"
            ) from None
        out.append(q / G.order)
    return tuple(out)


def f3_from_characters(G: GroupTable, T: CharacterTable | None = None) -> ClassCounts:
    T = T or build_table(G)
    part = conjugacy_classes(G)
    coeffs = f3_coeffs(G, T)
    vals = []
    for c in range(len(part)):
        total = Cyclo.zero()
        for q, chi in zip(coeffs, T.irreducibles):
            if q:
                total = total + q * chi.values[c]
        vals.append(_certified_int(total, f"f_3 at class {c}"))
    return ClassCounts(G, tuple(vals), "f", 3)


@dataclass(frozen=True)
class ConjectureRecord:
    """Integrality evidence for one irreducible: is m_chi / |G| a
    non-negative integer?"""

    label: str
    value: str
    is_rational: bool
    is_integer: bool
    is_nonnegative: bool

    @property
    def ok(self) -> bool:
        return self.is_rational and self.is_integer and self.is_nonnegative


def conjecture_report(
    G: GroupTable, T: CharacterTable | None = None
) -> list[ConjectureRecord]:
    T = T or build_table(G)
    out = []
    for chi, label in zip(T.irreducibles, T.labels):
        m = m_chi(G, chi) / G.order
        rational = m.is_rational()
        integer = False
        nonneg = False
        if rational:
            q = m.to_rational()
            integer = q.denominator == 1
            nonneg = q >= 0
        out.append(ConjectureRecord(label, str(m), rational, integer, nonneg))
    return out


def t_coeffs(
    G: GroupTable, n: int, T: CharacterTable | None = None
) -> tuple[Fraction, ...]:
    """Coefficients of t_n in the irreducible basis:
    (1/chi(1)) * sum over classes of size * |C|^(n-2) * |chi|^2.

    Equivalently |G|/chi(1) times the multiplicity of chi in theta^(n-2) chi,
    where theta is the conjugation character; that multiplicity is checked to
    be a non-negative integer.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    T = T or build_table(G)
    part = conjugacy_classes(G)
    cent_orders = [G.order // s for s in part.sizes]
    out = []
    for chi, d, label in zip(T.irreducibles, T.degrees, T.labels):
        total = Cyclo.zero()
        for c, size in enumerate(part.sizes):
            v = chi.values[c]
            if v:
                total = total + (size * cent_orders[c] ** (n - 2)) * (v * v.conj())
        try:
            q = total.to_rational() / d
        except NotRationalError:
            raise ValueError(
                f"t_{n} coefficient for {label} is irrational ({total}); "
                "table is inconsistent"
            ) from None
        mult = q * d / G.order
        if mult.denominator != 1 or mult < 0:
            raise ValueError(
                f"multiplicity of {label} in theta^{n-2}*{label} is {mult}, "
                "not a non-negative integer; table is inconsistent"
            )
        out.append(q)
    return tuple(out)


def t_from_characters(
    G: GroupTable, n: int, T: CharacterTable | None = None
) -> ClassCounts:
    T = T or build_table(G)
    part = conjugacy_classes(G)
    coeffs = t_coeffs(G, n, T)
    vals = []
    for c in range(len(part)):
        total = Cyclo.zero()
        for q, chi in zip(coeffs, T.irreducibles):
            if q:
                total = total + q * chi.values[c]
        vals.append(_certified_int(total, f"t_{n} at class {c}"))
    return ClassCounts(G, tuple(vals), "t", n)


# -- commuting-tuple recursion for f_n(1) --------------------------------------


def recursive_fn1(G: GroupTable, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """f_n(1), the number of pairwise-commuting n-tuples, by the centralizer
    recursion f_n(1) = sum_g f_(n-1) of C(g) at 1.

    The budget bounds the number of set intersections performed; memoisation
    on (member set, level) keeps the real cost far below the worst case."""
    if n < 2:
        raise ValueError("n must be at least 2")
    cent_sets = G.centralizer_sets()
    memo: dict[tuple[frozenset, int], int] = {}
    work = 0

    def fn1(members: frozenset, level: int) -> int:
        nonlocal work
        if level == 1:
            return len(members)
        key = (members, level)
        got = memo.get(key)
        if got is None:
            work += len(members)
            if work > budget:
                raise BudgetExceededError(work, budget)
            got = sum(
                fn1(members & cent_sets[g], level - 1) for g in members
            )
            memo[key] = got
        return got

    return fn1(frozenset(range(G.order)), n)


def tc_check_and_formula(G: GroupTable, n: int) -> tuple[bool, int | None]:
    """Whether every non-central element of G has abelian centralizer, and if
    so the value of f_n(1) from the closed recursion

        f_n(1) = |G| * sum over non-central class reps of |C(x)|^(n-2)
                 + |Z| * f_(n-1)(1),   with f_2(1) = k(G) * |G|.

    Returns (False, None) when the centralizer condition fails."""
    if n < 2:
        raise ValueError("n must be at least 2")
    part = conjugacy_classes(G)
    center = center_and_derived(G)[0].member_set
    cents = G.centralizer_lists()
    noncentral_reps = [r for r in part.reps if r not in center]
    for r in noncentral_reps:
        if not _is_abelian_subset(G, cents[r]):
            return False, None
    value = len(part) * G.order
    for level in range(3, n + 1):
        value = (
            G.order
            * sum(len(cents[r]) ** (level - 2) for r in noncentral_reps)
            + len(center) * value
        )
    return True, value


def _is_abelian_subset(G: GroupTable, members) -> bool:
    mul = G.mul
    mem = list(members)
    return all(
        mul[x][y] == mul[y][x] for i, x in enumerate(mem) for y in mem[i + 1 :]
    )


# -- solution sets -------------------------------------------------------------


def ore_set(
    G: GroupTable,
    n: int,
    method: str = "auto",
    budget: int = DEFAULT_BUDGET,
) -> frozenset[int]:
    """All g with f_n(g) > 0."""
    counts = count_f_n(G, n, method=method, budget=budget)
    return counts.support()


def count_f_n(
    G: GroupTable,
    n: int,
    method: str = "auto",
    budget: int = DEFAULT_BUDGET,
) -> ClassCounts:
    """f_n by the requested method: ``brute``, ``character`` (n = 2 or 3),
    or ``auto`` (characters when a table provider exists, else brute)."""
    if method == "brute":
        return brute_f_n(G, n, budget=budget)
    if method == "character":
        if n == 2:
            return f2_from_characters(G)
        if n == 3:
            return f3_from_characters(G)
        raise ValueError("character formulas cover n = 2 and n = 3 only")
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if n in (2, 3):
        try:
            return count_f_n(G, n, method="character", budget=budget)
        except (TableProviderError, TableValidationError):
            pass
    return brute_f_n(G, n, budget=budget)


def count_t_n(
    G: GroupTable,
    n: int,
    method: str = "auto",
    budget: int = DEFAULT_BUDGET,
) -> ClassCounts:
    """t_n by the requested method: ``brute``, ``character`` or ``auto``."""
    if method == "brute":
        return brute_t_n(G, n, budget)
    if method == "character":
        return t_from_characters(G, n)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    try:
        return t_from_characters(G, n)
    except (TableProviderError, TableValidationError):
        return brute_t_n(G, n, budget)


def centralizer_subgroup(G: GroupTable, g: int) -> SubgroupRef:
    """C_G(g) as a subgroup reference."""
    return SubgroupRef(G, tuple(G.centralizer_lists()[g]))
