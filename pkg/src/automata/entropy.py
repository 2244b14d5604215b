"""
Topological entropy of a sofic shift: log of the spectral radius of the
count matrix of its (trim) automaton.
"""

import logging
import math
from typing import Optional

import numpy as np

from src.automata.models import Automaton
from src.automata.ops import nontrivial_components, trim
from src.config import get_settings
from src.utils.errors import EmptyAutomaton, NoConvergence

logger = logging.getLogger(__name__)


def adjacency_matrix(a: Automaton) -> np.ndarray:
    """Entry (i, j) counts the edges from state i to state j."""
    position = {q: i for i, q in enumerate(a.states)}
    m = np.zeros((len(a.states), len(a.states)), dtype=float)
    for src, _, dst in a.edges():
        m[position[src], position[dst]] += 1
    return m


def spectral_radius(m: np.ndarray, tol: Optional[float] = None, max_iter: Optional[int] = None) -> float:
    """
    Power iteration on m + I.

    The shift by the identity makes an irreducible non-negative matrix
    primitive, so the iteration converges even on periodic graphs.
    """
    settings = get_settings().automata
    tol = tol if tol is not None else settings.entropy_tolerance
    max_iter = max_iter if max_iter is not None else settings.entropy_max_iterations
    n = m.shape[0]
    shifted = m + np.eye(n)
    x = np.ones(n) / n
    estimate = 0.0
    for i in range(max_iter):
        y = shifted @ x
        new_estimate = y.sum() / x.sum()
        x = y / y.sum()
        if abs(new_estimate - estimate) <= tol * new_estimate:
            logger.debug(f"power iteration converged after {i + 1} steps")
            return new_estimate - 1.0
        estimate = new_estimate
    raise NoConvergence(f"power iteration did not converge in {max_iter} iterations")


def entropy(a: Automaton) -> float:
    """Natural logarithm of the spectral radius of the trimmed automaton."""
    a = trim(a)
    components = nontrivial_components(a)
    if not components:
        raise EmptyAutomaton("no cycle: the shift is empty")
    m = adjacency_matrix(a)
    position = {q: i for i, q in enumerate(a.states)}
    radius = 0.0
    for component in components:
        idx = sorted(position[q] for q in component)
        radius = max(radius, spectral_radius(m[np.ix_(idx, idx)]))
    return math.log(radius)
