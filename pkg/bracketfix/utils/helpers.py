"""Helper functions shared across bracketfix"""

import logging
from typing import Iterator, Optional

logger = logging.getLogger(__name__)


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _exact_log2(n: int) -> Optional[int]:
    """log2(n) when n is a power of two, else None"""
    if not _is_power_of_two(n):
        return None
    return n.bit_length() - 1


def _iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, lowest first"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _build_error_response(error_msg: str, traceback_info: str = None) -> dict:
    """Build standardized error response"""
    response = {
        "status": "error",
        "error": error_msg
    }
    if traceback_info:
        response["traceback"] = traceback_info
    return response
