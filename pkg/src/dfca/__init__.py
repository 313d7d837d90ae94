"""Defeasible conditional reasoning over formal contexts.

The package brings preferential and rational-closure reasoning, usually
studied over propositional logic, to formal concept analysis: contexts
carry compound attributes, objects carry preference orders or rankings,
and a conditional knowledge base induces a least ranking under which
plausible queries can be answered.
"""

from .closure import ClosureSession, add_conditional, crc_entails, entailment_diff
from .context import (
    AttributeImplication,
    FormalContext,
    closure_under,
    implication_follows,
    implication_holds,
    set_satisfies,
)
from .errors import (
    BindingError,
    CapacityError,
    DfcaError,
    FileFormatError,
    FormulaSyntaxError,
    ModularityError,
    StructureError,
    UnsupportedStateError,
    ValidityError,
)
from .fileio import (
    ContextDocument,
    format_cxt,
    load_conditionals,
    load_context,
    load_document,
    load_order,
    load_prop_statements,
    load_ranks,
    parse_csv_context,
    parse_cxt,
    save_context,
)
from .formula import (
    And,
    Atom,
    Conditional,
    Not,
    Or,
    atom_names,
    bind,
    extension,
    format_formula,
    materialise,
    parse_conditional,
    parse_formula,
)
from .order import (
    PreferentialContext,
    RankedContext,
    RankingFunction,
    StrictOrder,
    minimise,
    order_from_ranks,
    ranks_from_order,
    satisfies_conditional,
)
from .ranking import (
    KnowledgeBase,
    PreferenceComparison,
    RankPartition,
    context_preference,
    delta_valid,
    enumerate_ranked_models,
    object_rank,
)

__version__ = "0.1.0"

__all__ = [
    "AttributeImplication",
    "And",
    "Atom",
    "BindingError",
    "CapacityError",
    "ClosureSession",
    "Conditional",
    "ContextDocument",
    "DfcaError",
    "FileFormatError",
    "FormalContext",
    "FormulaSyntaxError",
    "KnowledgeBase",
    "ModularityError",
    "Not",
    "Or",
    "PreferenceComparison",
    "PreferentialContext",
    "RankPartition",
    "RankedContext",
    "RankingFunction",
    "StrictOrder",
    "StructureError",
    "UnsupportedStateError",
    "ValidityError",
    "add_conditional",
    "atom_names",
    "bind",
    "closure_under",
    "context_preference",
    "crc_entails",
    "delta_valid",
    "entailment_diff",
    "enumerate_ranked_models",
    "extension",
    "format_cxt",
    "format_formula",
    "implication_follows",
    "implication_holds",
    "load_conditionals",
    "load_context",
    "load_document",
    "load_order",
    "load_prop_statements",
    "load_ranks",
    "materialise",
    "minimise",
    "object_rank",
    "order_from_ranks",
    "parse_conditional",
    "parse_csv_context",
    "parse_cxt",
    "parse_formula",
    "ranks_from_order",
    "satisfies_conditional",
    "save_context",
    "set_satisfies",
]
