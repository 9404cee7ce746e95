"""Enumeration and exact counting of order-preserving, order-reversing and
order-decreasing partial injective contractions of the chain {1..n}."""

from .dual import theta, theta_inverse
from .enumerators import (
    count_by_height,
    count_by_height_fix,
    count_odci_profile,
    count_odci_profile_fix,
    count_with_image,
    enumerate_direct,
    enumerate_filtered,
)
from .guards import GuardError
from .pmap import (
    FamilyId,
    PartialInjection,
    StatProfile,
    compose,
    gap_of_domain,
    gap_of_image,
    in_family,
    is_contraction,
    is_contraction_via_gaps,
    is_isometry,
    is_order_decreasing,
    is_order_preserving,
    is_order_reversing,
    new_pmap,
    stat_profile,
)
from .tables import CountTable
from .verify import VerificationReport, check_sequence, run_suite

__version__ = "0.1.0"
