"""Checkable codes from finite abelian group rings."""

from .fields import GF, FieldElement, field_make
from .groups import AbelianGroup, parse_group
from .groupring import GroupRingElement, all_ones, from_string
from .linalg import MatrixGF
from .codes import (
    LinearCode,
    annihilator_code,
    code_from_generator_element,
    code_from_submodule,
    full_code,
    zero_code,
)
from .mindist import Budgets, DistanceResult, min_distance
from .classify import (
    ClassificationReport,
    classify_code,
    enumerate_ideals_bruteforce,
    find_check_element,
    is_lcd,
    is_reversible,
    mds_check,
    ring_is_code_checkable,
    verify_check_element,
)

__version__ = "0.1.0"
