"""Exact computations with the two A1-quiver COHA representations on Grassmannian cohomology."""

from .exterior import ExteriorElement, d_left, d_right, parse_element, wedge
from .localization import lower_via_transpose, raise_localized, shuffle_sum
from .operators import (
    GradedOperator,
    chevalley_generators,
    grading_h,
    lower,
    projected_generators,
    raise_,
    twisted_lower,
)
from .partitions import BoxShape, Partition, WedgeIndex
from .relations import cartan_D, check_clifford, check_serre, extract_cartan
from .symfunc import MultiPoly, SchurClass, coinvariant_reduce, schur

__version__ = "0.1.0"
