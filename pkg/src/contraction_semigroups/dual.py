"""The order-reversing dual of an order-preserving contraction.

``theta`` keeps the first domain point, lays the domain gaps down in reverse
order, and starts the image at the old last image, stepping down by the image
gaps in reverse. Maps of height <= 1 are fixed.
"""

from itertools import accumulate

from .pmap import (
    FamilyId,
    PartialInjection,
    gap_of_domain,
    gap_of_image,
    in_family,
)


def theta(alpha: PartialInjection) -> PartialInjection:
    if not in_family(alpha, FamilyId.OCI):
        raise ValueError(f"theta needs an order-preserving contraction, got {alpha}")
    if alpha.height <= 1:
        return alpha
    t = gap_of_domain(alpha)
    d = gap_of_image(alpha)
    a1 = alpha.domain[0]
    top = alpha.image[-1]
    dom = accumulate(reversed(t), initial=a1)
    im = accumulate((-x for x in reversed(d)), initial=top)
    return PartialInjection._trusted(alpha.n, tuple(zip(dom, im)))


def theta_inverse(beta: PartialInjection) -> PartialInjection:
    if not in_family(beta, FamilyId.OCIplus):
        raise ValueError(f"theta_inverse needs an order-reversing contraction, got {beta}")
    if beta.height <= 1:
        return beta
    # beta has domain gaps t reversed and image gaps -d reversed
    t = tuple(reversed(gap_of_domain(beta)))
    d = tuple(-x for x in reversed(gap_of_image(beta)))
    a1 = beta.domain[0]
    bottom = beta.image[-1]
    dom = accumulate(t, initial=a1)
    im = accumulate(d, initial=bottom)
    return PartialInjection._trusted(beta.n, tuple(zip(dom, im)))
