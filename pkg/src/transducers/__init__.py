from src.transducers.export import TransducerDocument, from_document, from_dot, to_document, to_dot
from src.transducers.integer import build_int_converter, convert_int
from src.transducers.models import OnlineState, Transducer, TransducerEdge, TransducerKind
from src.transducers.online import (
    build_online_transducer,
    iter_online,
    online_bounds,
    online_convert,
    online_delay,
    online_state_within_bounds,
    run_online,
)
from src.transducers.quadratic import build_quadratic_converter, convert_quadratic
from src.transducers.redundancy import (
    accepts_pair,
    alternate_signs,
    build_normalization_transducer,
    build_pos_normalization_transducer,
    build_pos_redundancy_transducer,
    build_redundancy_transducer,
    convert_neg_to_pos,
    normalize,
    normalize_exact,
    normalize_with_transducer,
)
from src.transducers.sequential import run_sequential, run_sequential_ep

__all__ = [
    "OnlineState",
    "Transducer",
    "TransducerDocument",
    "TransducerEdge",
    "TransducerKind",
    "accepts_pair",
    "alternate_signs",
    "build_int_converter",
    "build_normalization_transducer",
    "build_online_transducer",
    "build_pos_normalization_transducer",
    "build_pos_redundancy_transducer",
    "build_quadratic_converter",
    "build_redundancy_transducer",
    "convert_int",
    "convert_neg_to_pos",
    "convert_quadratic",
    "from_document",
    "from_dot",
    "iter_online",
    "normalize",
    "normalize_exact",
    "normalize_with_transducer",
    "online_bounds",
    "online_convert",
    "online_delay",
    "online_state_within_bounds",
    "run_online",
    "run_sequential",
    "run_sequential_ep",
    "to_document",
    "to_dot",
]
