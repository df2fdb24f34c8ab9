"""Forgetting in disjunctive logic programs under SE semantics."""

from ._core import (
    DecodeError,
    EmptyRule,
    Error,
    InvalidAtom,
    Program,
    Rule,
    SignatureMismatch,
    SignatureTooLarge,
    SyntaxError,
    answer_sets,
    forget,
    forget_clauses,
    se_entails,
    se_models,
    strongly_equivalent,
)

__all__ = [
    "DecodeError",
    "EmptyRule",
    "Error",
    "InvalidAtom",
    "Program",
    "Rule",
    "SignatureMismatch",
    "SignatureTooLarge",
    "SyntaxError",
    "answer_sets",
    "forget",
    "forget_clauses",
    "se_entails",
    "se_models",
    "strongly_equivalent",
]
