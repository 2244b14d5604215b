import functools
import logging
import time
from typing import Any, Callable, TypeVar

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

_MAX_REPR = 200


def _short(value: Any) -> str:
    text = repr(value)
    if len(text) > _MAX_REPR:
        return text[: _MAX_REPR - 3] + "..."
    return text


def log_io(func: F) -> F:
    """
    A decorator that logs the parameters, result and wall time of a builder.

    Args:
        func: The operation to be decorated

    Returns:
        The wrapped function with input/output logging
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        func_name = func.__qualname__
        params = ", ".join(
            [*(_short(arg) for arg in args), *(f"{k}={_short(v)}" for k, v in kwargs.items())]
        )
        logger.debug(f"{func_name} called with parameters: {params}")

        started = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            logger.debug(f"{func_name} raised {type(e).__name__} after {time.perf_counter() - started:.3f}s")
            raise

        logger.debug(f"{func_name} returned {_short(result)} in {time.perf_counter() - started:.3f}s")
        return result

    return wrapper  # type: ignore[return-value]
