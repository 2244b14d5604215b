"""
Exact orbit iteration with repeat detection, shared by both transformations.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from src.config import get_settings
from src.expansion.models import OrbitResult, OrbitStatus
from src.numberfield.models import FieldElement
from src.words.models import Digit, EpWord, canonicalize

logger = logging.getLogger(__name__)

Step = Callable[[FieldElement], Tuple[Digit, FieldElement]]


def resolve_cap(cap: Optional[int]) -> int:
    return cap if cap is not None else get_settings().expansion.orbit_cap


def run_orbit(x: FieldElement, step: Step, cap: Optional[int] = None) -> OrbitResult:
    """Apply ``step`` until a point repeats; points are hashed on their exact coordinates."""
    cap = resolve_cap(cap)
    seen: Dict[FieldElement, int] = {}
    points: List[FieldElement] = []
    digits: List[Digit] = []
    while x not in seen:
        if len(points) >= cap:
            logger.warning(f"orbit not periodic after {cap} steps")
            return OrbitResult(OrbitStatus.CAP_EXCEEDED, tuple(digits), tuple(points))
        seen[x] = len(points)
        points.append(x)
        digit, x = step(x)
        digits.append(digit)
    m = seen[x]
    word = canonicalize(EpWord(tuple(digits[:m]), tuple(digits[m:])))
    logger.debug(f"orbit periodic with m={word.m}, p={word.p}")
    return OrbitResult(OrbitStatus.PERIODIC, word, tuple(points))
