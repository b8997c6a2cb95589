"""Streaming string transducers, two-way transducers and FO transductions
on ultimately periodic words."""

from ._omegatrans import (
    AperiodicReport,
    BoundedReport,
    Machine,
    OmegaTransError,
    Outcome,
    Word,
    compare,
    compile_2wst_to_sst,
    eliminate_lookaround,
    eval_formula,
    load_machine,
    parse_machine,
    read_corpus,
)

__all__ = [
    "AperiodicReport",
    "BoundedReport",
    "Machine",
    "OmegaTransError",
    "Outcome",
    "Word",
    "compare",
    "compile_2wst_to_sst",
    "eliminate_lookaround",
    "eval_formula",
    "load_machine",
    "parse_machine",
    "read_corpus",
]
