"""Class functions and character tables.

Tables are never computed by a generic algorithm: each one comes from a
closed-form provider (cyclic, dihedral), the rim-hook recursion for
symmetric groups, a bundled data file (a4, a5, q8), a tensor product of
factor tables, or an explicit file.  Every table is validated exactly
before use: class count, degrees, degree-square sum, row and column
orthogonality, and the product identity
chi(g)*chi(h) = (chi(1)/|G|) * sum_z chi(g * h^z).
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .cyclo import Cyclo, cyclo_root, format_cyclo, parse_cyclo
from .groups import ClassPartition, GroupTable, conjugacy_classes

_EQ21_SAMPLE = 50
_EQ21_SEED = 12345
_FULL_CHECK_MAX_ORDER = 24


class TableProviderError(ValueError):
    """No provider can build a table for this group."""


class TableValidationError(ValueError):
    """A candidate table failed validation; carries the report."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        bad = ", ".join(c.name for c in report.checks if not c.passed)
        super().__init__(f"character table rejected: {bad}")


@dataclass(frozen=True)
class ClassFunction:
    """Exact class function: one cyclotomic value per conjugacy class, in
    the canonical class order of the group."""

    group: GroupTable
    values: tuple[Cyclo, ...]

    def __post_init__(self):
        k = len(conjugacy_classes(self.group))
        if len(self.values) != k:
            raise ValueError(f"expected {k} class values, got {len(self.values)}")

    def at(self, g: int) -> Cyclo:
        """Value at an element index."""
        return self.values[conjugacy_classes(self.group).class_of[g]]

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and self.group is other.group
            and all(a == b for a, b in zip(self.values, other.values))
        )


def class_function_from_element_values(G: GroupTable, vals) -> ClassFunction:
    """Build a ClassFunction from per-element values, checking constancy
    on classes."""
    part = conjugacy_classes(G)
    out = []
    for cls in part.classes:
        v = vals[cls[0]]
        if not isinstance(v, Cyclo):
            v = Cyclo.rational(v)
        for e in cls[1:]:
            w = vals[e]
            if not isinstance(w, Cyclo):
                w = Cyclo.rational(w)
            if w != v:
                raise ValueError(
                    f"values are not constant on the class of element {cls[0]}"
                )
        out.append(v)
    return ClassFunction(G, tuple(out))


def inner_product(f: ClassFunction, h: ClassFunction) -> Cyclo:
    """<f, h> = (1/|G|) * sum_g f(g) * conj(h(g)), computed classwise."""
    if f.group is not h.group:
        raise ValueError("class functions live on different groups")
    part = conjugacy_classes(f.group)
    total = Cyclo.rational(0)
    for size, a, b in zip(part.sizes, f.values, h.values):
        if a and b:
            total = total + size * (a * b.conj())
    return total / f.group.order


def conjugation_character(G: GroupTable) -> ClassFunction:
    """The permutation character of G acting on itself by conjugation:
    g -> |C_G(g)|."""
    part = conjugacy_classes(G)
    order = G.order
    return ClassFunction(
        G, tuple(Cyclo.rational(order // s) for s in part.sizes)
    )


@dataclass
class CharacterTable:
    group: GroupTable
    irreducibles: tuple[ClassFunction, ...]
    degrees: tuple[int, ...]
    labels: tuple[str, ...]
    provenance: str
    validated: bool = False

    def __len__(self) -> int:
        return len(self.irreducibles)


def decompose(f: ClassFunction, T: CharacterTable) -> tuple[Fraction, ...]:
    """Multiplicities <f, chi> for each irreducible, as exact rationals."""
    return tuple(inner_product(f, chi).to_rational() for chi in T.irreducibles)


def reconstruct(T: CharacterTable, coeffs) -> ClassFunction:
    """sum_i coeffs[i] * chi_i as a ClassFunction."""
    part = conjugacy_classes(T.group)
    vals = []
    for c in range(len(part)):
        total = Cyclo.rational(0)
        for q, chi in zip(coeffs, T.irreducibles):
            if q:
                total = total + q * chi.values[c]
        vals.append(total)
    return ClassFunction(T.group, tuple(vals))


# -- validation ---------------------------------------------------------------


@dataclass(frozen=True)
class CheckRecord:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckRecord, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]


def validate_table(T: CharacterTable) -> ValidationReport:
    """Run every exact consistency check; mark the table validated only if
    all of them pass.  Failures are reported as data, never raised."""
    G = T.group
    part = conjugacy_classes(G)
    k = len(part)
    checks: list[CheckRecord] = []

    ok = len(T.irreducibles) == k
    checks.append(
        CheckRecord(
            "class-count", ok, f"{len(T.irreducibles)} irreducibles vs {k} classes"
        )
    )
    if not ok:
        report = ValidationReport(tuple(checks))
        T.validated = False
        return report

    bad = [
        i for i, (chi, d) in enumerate(zip(T.irreducibles, T.degrees))
        if chi.values[0] != d or d < 1
    ]
    checks.append(
        CheckRecord(
            "degrees-match-identity-column",
            not bad,
            f"rows {bad}" if bad else "",
        )
    )

    sq = sum(d * d for d in T.degrees)
    checks.append(
        CheckRecord(
            "degree-square-sum",
            sq == G.order,
            f"sum of squares {sq} vs order {G.order}",
        )
    )

    bad_rows = []
    for i in range(k):
        for j in range(i, k):
            got = inner_product(T.irreducibles[i], T.irreducibles[j])
            want = 1 if i == j else 0
            if got != want:
                bad_rows.append((i, j))
    checks.append(
        CheckRecord(
            "row-orthogonality",
            not bad_rows,
            f"failing row pairs {bad_rows}" if bad_rows else "",
        )
    )

    bad_cols = []
    for c in range(k):
        for d in range(c, k):
            total = Cyclo.rational(0)
            for chi in T.irreducibles:
                a, b = chi.values[c], chi.values[d]
                if a and b:
                    total = total + a * b.conj()
            want = G.order // part.sizes[c] if c == d else 0
            if total != want:
                bad_cols.append((c, d))
    checks.append(
        CheckRecord(
            "column-orthogonality",
            not bad_cols,
            f"failing class pairs {bad_cols}" if bad_cols else "",
        )
    )

    checks.append(_check_product_identity(T, part))

    report = ValidationReport(tuple(checks))
    T.validated = report.passed
    return report


def _check_product_identity(T: CharacterTable, part: ClassPartition) -> CheckRecord:
    # chi(g) chi(h) = (chi(1)/|G|) sum_z chi(g * h^z); checked as
    # |G| * chi(g) chi(h) = chi(1) * sum over classes of count * chi(c).
    G = T.group
    n = G.order
    if n <= _FULL_CHECK_MAX_ORDER:
        pairs = [(g, h) for g in part.reps for h in part.reps]
        scope = "all class-rep pairs"
    else:
        rng = random.Random(_EQ21_SEED)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(_EQ21_SAMPLE)]
        scope = f"{_EQ21_SAMPLE} seeded pairs"
    mul = G.mul
    bad = []
    for g, h in pairs:
        counts = [0] * len(part)
        for z in range(n):
            counts[part.class_of[mul[g][G.conj(h, z)]]] += 1
        for idx, chi in enumerate(T.irreducibles):
            lhs = n * (chi.at(g) * chi.at(h))
            rhs = Cyclo.rational(0)
            for c, cnt in enumerate(counts):
                if cnt:
                    rhs = rhs + cnt * chi.values[c]
            if lhs != T.degrees[idx] * rhs:
                bad.append((g, h, idx))
        if bad:
            break
    return CheckRecord(
        "product-identity",
        not bad,
        f"fails at (g, h, row) {bad}" if bad else scope,
    )


# -- providers ----------------------------------------------------------------


def build_table(G: GroupTable, provider: str = "auto") -> CharacterTable:
    """Build and validate the character table of G.

    Providers: ``auto``, ``cyclic-closed-form``, ``dihedral-closed-form``,
    ``symmetric-mn``, ``product-tensor``, ``bundled:a4|a5|q8``,
    ``file:<path>``.  A table that fails validation is rejected.
    """
    key = ("table", provider)
    cached = G._extra.get(key)
    if cached is not None:
        return cached
    T = _build_unvalidated(G, provider)
    report = validate_table(T)
    if not report.passed:
        raise TableValidationError(report)
    G._extra[key] = T
    return T


def _build_unvalidated(G: GroupTable, provider: str) -> CharacterTable:
    if provider == "auto":
        return _build_unvalidated(G, _auto_provider(G))
    if provider == "cyclic-closed-form":
        return _cyclic_table(G)
    if provider == "dihedral-closed-form":
        return _dihedral_table(G)
    if provider == "symmetric-mn":
        return _symmetric_table(G)
    if provider == "product-tensor":
        return _tensor_table(G)
    if provider.startswith("bundled:"):
        name = provider.split(":", 1)[1]
        text = (
            resources.files("commcount")
            .joinpath("data")
            .joinpath(f"{name}_chartable.json")
            .read_text()
        )
        return table_from_document(G, json.loads(text), provider)
    if provider.startswith("file:"):
        path = provider.split(":", 1)[1]
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        return table_from_document(G, doc, provider)
    raise TableProviderError(f"unknown character-table provider {provider!r}")


def _auto_provider(G: GroupTable) -> str:
    fam = G.family
    if fam == "cyclic":
        return "cyclic-closed-form"
    if fam == "dihedral":
        return "dihedral-closed-form"
    if fam == "symmetric":
        return "symmetric-mn"
    if fam == "quaternion":
        return "bundled:q8"
    if fam == "alternating":
        n = int(G.spec.split(":")[1])
        if n <= 3:
            return "cyclic-closed-form"
        if n == 4:
            return "bundled:a4"
        if n == 5:
            return "bundled:a5"
        raise TableProviderError(
            f"no built-in table for {G.spec}; import one with file:<path>"
        )
    if fam == "product":
        return "product-tensor"
    if _cyclic_generator(G) is not None:
        return "cyclic-closed-form"
    raise TableProviderError(
        f"no automatic provider for family {fam!r}; import with file:<path>"
    )


def _cyclic_generator(G: GroupTable) -> int | None:
    orders = G.element_orders()
    return next((g for g in range(G.order) if orders[g] == G.order), None)


def _cyclic_table(G: GroupTable) -> CharacterTable:
    n = G.order
    if G.family == "cyclic":
        # element index is already the exponent
        log = range(n)
    else:
        gen = _cyclic_generator(G)
        if gen is None:
            raise TableProviderError(
                f"cyclic-closed-form requires a cyclic group; no element of "
                f"{G.spec or 'the group'} has order {n}"
            )
        # cyclic groups are abelian, so class index == element index
        log = [0] * n
        x, k, mul = 0, 0, G.mul
        while True:
            log[x] = k
            x = mul[x][gen]
            k += 1
            if x == 0:
                break
    rows = []
    for j in range(n):
        vals = tuple(cyclo_root(n, j * log[r]) for r in range(n))
        rows.append(ClassFunction(G, vals))
    labels = tuple(f"chi{j}" for j in range(n))
    return CharacterTable(G, tuple(rows), (1,) * n, labels, "cyclic-closed-form")


def _dihedral_table(G: GroupTable) -> CharacterTable:
    if G.family != "dihedral":
        raise TableProviderError("dihedral-closed-form requires a dihedral: group")
    n = int(G.spec.split(":")[1])
    part = conjugacy_classes(G)
    two = Cyclo.rational(2)

    def rot_exponent(rep: int) -> int | None:
        return rep if rep < n else None

    rows: list[tuple[str, int, list[Cyclo]]] = []
    if n % 2:
        half = (n - 1) // 2
        rows.append(("chi1", 1, [Cyclo.rational(1)] * len(part)))
        rows.append(
            (
                "chi2",
                1,
                [
                    Cyclo.rational(1 if rep < n else -1)
                    for rep in part.reps
                ],
            )
        )
        for j in range(1, half + 1):
            vals = []
            for rep in part.reps:
                r = rot_exponent(rep)
                if r is None:
                    vals.append(Cyclo.rational(0))
                elif r == 0:
                    vals.append(two)
                else:
                    vals.append(cyclo_root(n, j * r) + cyclo_root(n, -j * r))
            rows.append((f"psi{j}", 2, vals))
    else:
        half = n // 2
        signs = {
            "chi1": (lambda r: 1, lambda rep: 1),
            "chi2": (lambda r: 1, lambda rep: -1),
            "chi3": (lambda r: (-1) ** r, lambda rep: 1 if (rep - n) % 2 == 0 else -1),
            "chi4": (lambda r: (-1) ** r, lambda rep: -1 if (rep - n) % 2 == 0 else 1),
        }
        for name, (on_rot, on_ref) in signs.items():
            vals = []
            for rep in part.reps:
                r = rot_exponent(rep)
                vals.append(
                    Cyclo.rational(on_rot(r) if r is not None else on_ref(rep))
                )
            rows.append((name, 1, vals))
        for j in range(1, half):
            vals = []
            for rep in part.reps:
                r = rot_exponent(rep)
                if r is None:
                    vals.append(Cyclo.rational(0))
                elif r == 0:
                    vals.append(two)
                else:
                    vals.append(cyclo_root(n, j * r) + cyclo_root(n, -j * r))
            rows.append((f"psi{j}", 2, vals))

    return CharacterTable(
        G,
        tuple(ClassFunction(G, tuple(vals)) for _, _, vals in rows),
        tuple(d for _, d, _ in rows),
        tuple(name for name, _, _ in rows),
        "dihedral-closed-form",
    )


# -- symmetric groups: rim-hook (Murnaghan-Nakayama) recursion ----------------


def partitions_of(n: int) -> list[tuple[int, ...]]:
    """All partitions of n as descending tuples, ascending lex order."""
    out: list[tuple[int, ...]] = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return sorted(out)


@lru_cache(maxsize=None)
def rimhook_character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """chi_lam evaluated at cycle type mu, by rim-hook removal on beta
    numbers."""
    if sum(lam) != sum(mu):
        raise ValueError("partition sizes differ")
    if not mu:
        return 1
    hook, rest = mu[0], mu[1:]
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    beta_set = set(beta)
    total = 0
    for pos, b in enumerate(beta):
        nb = b - hook
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((c for c in beta if c != b), reverse=True)
        new_beta.append(nb)
        new_beta.sort(reverse=True)
        new_lam = [v - (len(new_beta) - 1 - i) for i, v in enumerate(new_beta)]
        new_lam = tuple(v for v in new_lam if v > 0)
        total += (-1) ** height * rimhook_character(new_lam, rest)
    return total


def _symmetric_table(G: GroupTable) -> CharacterTable:
    if G.family != "symmetric" or G.perm_list is None:
        raise TableProviderError("symmetric-mn requires a symmetric: group")
    n = len(G.perm_list[0])
    part = conjugacy_classes(G)
    from .perms import cycle_type

    types = [cycle_type(G.perm_list[rep]) for rep in part.reps]
    ident = tuple([1] * n)
    lams = partitions_of(n)
    entries = []
    for lam in lams:
        deg = rimhook_character(lam, ident)
        entries.append((deg, lam))
    entries.sort()
    rows, degrees, labels = [], [], []
    for deg, lam in entries:
        vals = tuple(
            Cyclo.rational(rimhook_character(lam, mu)) for mu in types
        )
        rows.append(ClassFunction(G, vals))
        degrees.append(deg)
        labels.append("(" + ",".join(str(p) for p in lam) + ")")
    return CharacterTable(
        G, tuple(rows), tuple(degrees), tuple(labels), "symmetric-mn"
    )


def _tensor_table(G: GroupTable) -> CharacterTable:
    if G.family != "product" or G.product_parts is None:
        raise TableProviderError("product-tensor requires a product: group")
    A, B = G.product_parts
    TA, TB = build_table(A), build_table(B)
    part = conjugacy_classes(G)
    pa, pb = conjugacy_classes(A), conjugacy_classes(B)
    nb = B.order
    pair_of_class = [
        (pa.class_of[rep // nb], pb.class_of[rep % nb]) for rep in part.reps
    ]
    rows, degrees, labels = [], [], []
    for i, ca in enumerate(TA.irreducibles):
        for j, cb in enumerate(TB.irreducibles):
            vals = tuple(
                ca.values[x] * cb.values[y] for x, y in pair_of_class
            )
            rows.append(ClassFunction(G, vals))
            degrees.append(TA.degrees[i] * TB.degrees[j])
            labels.append(f"{TA.labels[i]}*{TB.labels[j]}")
    return CharacterTable(
        G, tuple(rows), tuple(degrees), tuple(labels), "product-tensor"
    )


def table_from_document(G: GroupTable, doc: dict, provenance: str) -> CharacterTable:
    """Build a table from a chartable document, aligning it against the
    group's canonical classes.  Misalignment is a hard error."""
    part = conjugacy_classes(G)
    if doc.get("group_order") != G.order:
        raise ValueError(
            f"table document is for order {doc.get('group_order')}, "
            f"group has order {G.order}"
        )
    sizes = tuple(doc.get("class_sizes", ()))
    if sizes != part.sizes:
        for i, (a, b) in enumerate(zip(sizes, part.sizes)):
            if a != b:
                raise ValueError(
                    f"class_sizes mismatch at class {i}: file {a}, group {b}"
                )
        raise ValueError(
            f"class_sizes length {len(sizes)} vs {len(part.sizes)} classes"
        )
    rep_orders = tuple(doc.get("class_rep_orders", ()))
    actual = tuple(G.element_orders()[r] for r in part.reps)
    if rep_orders != actual:
        raise ValueError(
            f"class_rep_orders mismatch: file {rep_orders}, group {actual}"
        )
    raw = doc.get("irreducibles", [])
    rows = []
    for row in raw:
        vals = tuple(parse_cyclo(s) for s in row)
        rows.append(ClassFunction(G, vals))
    degrees = tuple(r.values[0].to_rational() for r in rows)
    if any(d.denominator != 1 or d <= 0 for d in degrees):
        raise ValueError("character degrees must be positive integers")
    labels = tuple(
        doc.get("labels") or (f"chi{i+1}" for i in range(len(rows)))
    )
    return CharacterTable(
        G,
        tuple(rows),
        tuple(int(d) for d in degrees),
        labels,
        provenance,
    )


def table_to_document(T: CharacterTable) -> dict:
    part = conjugacy_classes(T.group)
    return {
        "group_order": T.group.order,
        "class_sizes": list(part.sizes),
        "class_rep_orders": [T.group.element_orders()[r] for r in part.reps],
        "labels": list(T.labels),
        "irreducibles": [
            [format_cyclo(v) for v in chi.values] for chi in T.irreducibles
        ],
    }
