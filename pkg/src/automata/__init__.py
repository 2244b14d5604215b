from src.automata.classify import classify, minimal_forbidden_factors
from src.automata.construct import (
    beta_shift_automaton,
    build_asmax_automaton,
    build_asmin_automaton,
    build_shift_automaton,
)
from src.automata.entropy import adjacency_matrix, entropy, spectral_radius
from src.automata.export import AutomatonDocument, from_document, from_dot, to_document, to_dot
from src.automata.models import Automaton, Classification, ShiftKind
from src.automata.ops import accepts, cover, full_automaton, is_isomorphic, language, minimize, product, trim

__all__ = [
    "Automaton",
    "AutomatonDocument",
    "Classification",
    "ShiftKind",
    "accepts",
    "adjacency_matrix",
    "beta_shift_automaton",
    "build_asmax_automaton",
    "build_asmin_automaton",
    "build_shift_automaton",
    "classify",
    "cover",
    "entropy",
    "from_document",
    "from_dot",
    "full_automaton",
    "is_isomorphic",
    "language",
    "minimal_forbidden_factors",
    "minimize",
    "product",
    "spectral_radius",
    "to_document",
    "to_dot",
    "trim",
]
