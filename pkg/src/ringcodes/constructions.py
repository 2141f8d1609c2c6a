"""Ready-made code families: the all-ones MDS pair."""

from __future__ import annotations

from typing import Tuple

from .codes import LinearCode, code_from_generator_element
from .fields import GF
from .groups import AbelianGroup
from .groupring import all_ones

__all__ = ["mds_pair"]


def mds_pair(field: GF, group: AbelianGroup) -> Tuple[LinearCode, LinearCode]:
    """The [n,1,n] repetition code generated by the sum of all group elements
    and its [n,n-1,2] dual."""
    code = code_from_generator_element(all_ones(field, group))
    return code, code.dual()
