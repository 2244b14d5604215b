from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple, Union

from src.numberfield.models import FieldElement
from src.words.models import EpWord, FiniteWord


class OrbitStatus(str, Enum):
    PERIODIC = "periodic"
    CAP_EXCEEDED = "cap_exceeded"


@dataclass(frozen=True)
class OrbitResult:
    """
    Outcome of iterating a beta-transformation on an exact point.

    When periodic, ``digits`` is the canonical EpWord and ``points`` holds the
    m + p distinct orbit points; otherwise ``digits`` is the finite prefix
    produced before the cap was hit.
    """

    status: OrbitStatus
    digits: Union[EpWord, FiniteWord]
    points: Tuple[FieldElement, ...] = field(default=(), repr=False)

    @property
    def is_periodic(self) -> bool:
        return self.status == OrbitStatus.PERIODIC

    @property
    def preperiod_length(self) -> Optional[int]:
        return self.digits.m if self.is_periodic else None

    @property
    def period_length(self) -> Optional[int]:
        return self.digits.p if self.is_periodic else None
