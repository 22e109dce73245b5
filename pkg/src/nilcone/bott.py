"""Line-bundle cohomology on the flag variety of K, Bott style.

Convention, pinned operationally: a K-dominant input weight lam gives
H^0 = ch V_lam and nothing else; if lam + rho_K lies on a wall everything
vanishes; otherwise the unique w making w(lam + rho_K) strictly dominant
contributes ch V_{w.lam} in degree length(w).  Euler characteristics of
weight multisets are the signed sums of these contributions, which is the
additive extension of the Weyl character formula numerator.
"""

from dataclasses import dataclass, field

from .rootdata import VirtualCharacter, make_dominant


@dataclass
class CohomologyResult:
    """Cohomology of one line bundle: at most one nonzero degree."""

    per_degree: dict = field(default_factory=dict)

    @property
    def is_zero(self):
        return not self.per_degree

    def degree(self):
        return next(iter(self.per_degree)) if self.per_degree else None

    def total_dimension(self, sub):
        return sum(vc.dimension(sub) for vc in self.per_degree.values())


def line_cohomology(lam, kd):
    w, dom, singular = make_dominant(kd, lam)
    if singular:
        return CohomologyResult({})
    return CohomologyResult({w.length: VirtualCharacter.irreducible(dom)})


def euler_of_weights(weights, kd):
    """Signed Bott contribution summed over a weight multiset."""
    total = VirtualCharacter()
    for lam in weights:
        w, dom, singular = make_dominant(kd, lam)
        if singular:
            continue
        term = VirtualCharacter.irreducible(dom, 1 if w.length % 2 == 0 else -1)
        total = total + term
    return total
