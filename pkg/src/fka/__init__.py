"""Finite-model workbench for Kleene algebras with test operators.

Everything operates on explicit operation tables over carriers {0..n-1}:
axiom suites, the .fka file format, term translation, brute-force equation
checking, relational model generation, expansion constructions, and
exhaustive expansion search.
"""

from .constructions import (
    d_from_a,
    expand_ka_to_kat1,
    expand_ka_to_residuated_kat1,
    expand_kat_to_kat1,
    negcone_boolean_candidates,
    residual_table,
)
from .errors import (
    BudgetError,
    ClosureCapError,
    EvaluationError,
    FkaError,
    MissingTableError,
    ParseError,
    PreconditionError,
    SortError,
)
from .fkafile import load_fixture, parse_algebra, print_algebra
from .model import (
    AxiomReport,
    AxiomResult,
    FiniteKleeneAlgebra,
    TwoSortedKat,
    UnaryExpansion,
)
from .relational import (
    Relation,
    format_relation,
    generate_relational_model,
    parse_relation,
    rel_compose,
    rel_empty,
    rel_full,
    rel_identity,
    rel_star,
    rel_t,
    rel_tprime,
    rel_union,
)
from .search import SearchResult, SearchSpec, enumerate_expansions, enumerate_small_kleene_algebras
from .semantics import (
    EquationVerdict,
    TranslationVerdict,
    Valuation,
    check_translation_equivalence,
    equation_holds,
    evaluate,
)
from .terms import (
    Equation,
    parse_equation,
    parse_kat1_term,
    parse_kat_term,
    print_term,
    translate,
)
from .theories import (
    SUITE_IDS,
    SUITES,
    T_LOCALITY,
    check_axioms,
    check_boolean_on_subset,
    check_boolean_test_image,
    check_kleene,
    check_suite,
    check_two_sorted_kat,
    derive_two_sorted,
    recheck,
    test_image,
)

__all__ = [
    "AxiomReport",
    "AxiomResult",
    "BudgetError",
    "ClosureCapError",
    "Equation",
    "EquationVerdict",
    "EvaluationError",
    "FiniteKleeneAlgebra",
    "FkaError",
    "MissingTableError",
    "ParseError",
    "PreconditionError",
    "Relation",
    "SearchResult",
    "SearchSpec",
    "SortError",
    "SUITE_IDS",
    "SUITES",
    "T_LOCALITY",
    "TranslationVerdict",
    "TwoSortedKat",
    "UnaryExpansion",
    "Valuation",
    "check_axioms",
    "check_boolean_on_subset",
    "check_boolean_test_image",
    "check_kleene",
    "check_suite",
    "check_translation_equivalence",
    "check_two_sorted_kat",
    "d_from_a",
    "derive_two_sorted",
    "enumerate_expansions",
    "enumerate_small_kleene_algebras",
    "equation_holds",
    "evaluate",
    "expand_ka_to_kat1",
    "expand_ka_to_residuated_kat1",
    "expand_kat_to_kat1",
    "format_relation",
    "generate_relational_model",
    "load_fixture",
    "negcone_boolean_candidates",
    "parse_algebra",
    "parse_equation",
    "parse_kat1_term",
    "parse_kat_term",
    "parse_relation",
    "print_algebra",
    "print_term",
    "recheck",
    "rel_compose",
    "rel_empty",
    "rel_full",
    "rel_identity",
    "rel_star",
    "rel_t",
    "rel_tprime",
    "rel_union",
    "residual_table",
    "test_image",
    "translate",
]
