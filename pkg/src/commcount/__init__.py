"""Exact counting of commutator-equation solutions in finite groups.

Everything is integer, rational or cyclotomic arithmetic: counts of tuples
with prescribed pairwise commutators (f_n) and star-shaped systems (t_n),
character-theoretic formulas with certified integrality, dihedral closed
forms, the induced probability distributions with exact bound reports, and
a constructive solver for triple systems in symmetric groups.
"""

from .chars import (
    CharacterTable,
    ClassFunction,
    build_table,
    decompose,
    inner_product,
    validate_table,
)
from .counts import (
    BudgetExceededError,
    ClassCounts,
    brute_f_n,
    brute_t_n,
    conjecture_report,
    count_f_n,
    count_t_n,
    f2_coeffs,
    f2_from_characters,
    f3_coeffs,
    f3_from_characters,
    m_chi,
    naive_f_n,
    ore_set,
    recursive_fn1,
    t_coeffs,
    t_from_characters,
    tau_chi,
    tc_check_and_formula,
    theta_chi,
)
from .cyclo import Cyclo, NotRationalError, cyclo_root, format_cyclo, parse_cyclo
from .dihedral import (
    DihedralCoeffs,
    f3_class_counts_closed,
    f3_coeffs_closed,
    f3_value_closed,
    t3_class_counts_closed,
    t3_coeffs_closed,
)
from .distributions import (
    BoundsReport,
    GroupDistribution,
    bounds_report,
    convolve,
    convolve_power,
    distribution_from_counts,
    first_saturating_k,
    l1_to_uniform,
    p_n,
    q3,
    uniform,
)
from .fileio import (
    CountReport,
    DocumentError,
    load_chartable,
    load_group,
    load_report,
    save_chartable,
    save_group,
    save_report,
)
from .groups import (
    GroupLawError,
    GroupSpecError,
    GroupTable,
    SubgroupRef,
    center_and_derived,
    centralizer,
    conjugacy_classes,
    make_group,
    subgroup_generated,
)
from .realcmp import abs_as_cyclo, compare, real_cyclo_sign, sqrt_rational_as_cyclo
from .triples import (
    TripleSearchError,
    combine_disjoint_triples,
    decompose_cycles,
    ore_triple_symmetric,
)
from .verify import CheckResult, run_suite, sweep_specs

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "BudgetExceededError",
    "CharacterTable",
    "CheckResult",
    "ClassCounts",
    "ClassFunction",
    "CountReport",
    "Cyclo",
    "DihedralCoeffs",
    "DocumentError",
    "GroupDistribution",
    "GroupLawError",
    "GroupSpecError",
    "GroupTable",
    "NotRationalError",
    "SubgroupRef",
    "TripleSearchError",
    "abs_as_cyclo",
    "bounds_report",
    "brute_f_n",
    "brute_t_n",
    "build_table",
    "center_and_derived",
    "centralizer",
    "combine_disjoint_triples",
    "compare",
    "conjecture_report",
    "conjugacy_classes",
    "convolve",
    "convolve_power",
    "count_f_n",
    "count_t_n",
    "cyclo_root",
    "decompose",
    "decompose_cycles",
    "distribution_from_counts",
    "f2_coeffs",
    "f2_from_characters",
    "f3_class_counts_closed",
    "f3_coeffs",
    "f3_coeffs_closed",
    "f3_from_characters",
    "f3_value_closed",
    "first_saturating_k",
    "format_cyclo",
    "inner_product",
    "l1_to_uniform",
    "load_chartable",
    "load_group",
    "load_report",
    "m_chi",
    "make_group",
    "naive_f_n",
    "ore_set",
    "ore_triple_symmetric",
    "p_n",
    "parse_cyclo",
    "q3",
    "real_cyclo_sign",
    "recursive_fn1",
    "run_suite",
    "save_chartable",
    "save_group",
    "save_report",
    "sqrt_rational_as_cyclo",
    "subgroup_generated",
    "sweep_specs",
    "t3_class_counts_closed",
    "t3_coeffs_closed",
    "t_coeffs",
    "t_from_characters",
    "tau_chi",
    "tc_check_and_formula",
    "theta_chi",
    "uniform",
    "validate_table",
]
