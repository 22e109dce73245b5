"""Gradings by a semisimple element H and the parabolic they cut out.

A grading element assigns every root the degree sum(c_i * h_i).  The
nonnegative part is a parabolic q = l + u; intersecting with the +-1 root
signs of the involution gives u \cap p and u \cap k, whose weight sums
2rho(u cap p) and 2rho(u cap k) drive everything downstream, in particular
the canonical-bundle weight 2rho(u cap p) - 2rho(u cap k).

Dominant H (h_i >= 0) is the main case and makes q contain the standard
Borel.  Non-dominant H is accepted so that opposite-chamber components of
a reducible nilpotent cone can be handled; the Borel-containment invariant
is only asserted when H is dominant.
"""

from dataclasses import dataclass
from itertools import product

from .errors import ConsistencyError, InputError, OddGradingError
from .realform import cartan_decomposition, k_root_datum
from .rootdata import zero_weight

__all__ = [
    "GradingElement", "GradedDecomposition", "ParabolicData", "SearchHit",
    "grade", "parabolic", "conormal_canonical_weight", "is_QK_dominant",
    "search_even_gradings",
]


@dataclass(frozen=True)
class GradingElement:
    """Values h_i = alpha_i(H) per simple root."""

    h_values: tuple

    @property
    def is_dominant(self):
        return all(h >= 0 for h in self.h_values)


class GradedDecomposition:
    """Roots sorted by (degree, sign); degree 0 also carries the Cartan."""

    def __init__(self, rs, eps, H, layers):
        self.rs = rs
        self.eps = eps
        self.H = H
        self.layers = layers  # degree -> (tuple of k roots, tuple of p roots)
        self._check_symmetry()

    def _check_symmetry(self):
        for deg, (k_roots, p_roots) in self.layers.items():
            mk, mp = self.layers.get(-deg, ((), ()))
            if len(k_roots) != len(mk) or len(p_roots) != len(mp):
                raise ConsistencyError("graded dims asymmetric at degree %d" % deg)

    def degree_of(self, root):
        return sum(c * h for c, h in zip(root.coords, self.H.h_values))

    def dims(self, deg):
        """(dim k_deg, dim p_deg), counting the Cartan inside k_0."""
        k_roots, p_roots = self.layers.get(deg, ((), ()))
        kdim = len(k_roots) + (self.rs.rank if deg == 0 else 0)
        return kdim, len(p_roots)

    @property
    def degrees(self):
        return sorted(self.layers)

    def _select(self, side, predicate):
        idx = 0 if side == "k" else 1
        out = []
        for deg in self.degrees:
            if predicate(deg):
                out.extend(self.layers[deg][idx])
        return tuple(out)

    @property
    def u_cap_p(self):
        return self._select("p", lambda d: d > 0)

    @property
    def u_cap_k(self):
        return self._select("k", lambda d: d > 0)

    @property
    def u_roots(self):
        return self._select("k", lambda d: d > 0) + self._select("p", lambda d: d > 0)

    @property
    def l_roots(self):
        return self._select("k", lambda d: d == 0) + self._select("p", lambda d: d == 0)

    @property
    def p2_roots(self):
        return self._select("p", lambda d: d == 2)

    @property
    def g2plus_roots(self):
        return self._select("k", lambda d: d >= 2) + self._select("p", lambda d: d >= 2)

    def u_cap_p_weights(self):
        return [self.rs.root_fw(r) for r in self.u_cap_p]

    def k_root_datum(self):
        return k_root_datum(cartan_decomposition(self.rs, self.eps))


@dataclass
class ParabolicData:
    q_roots: tuple
    two_rho_u_p: object
    two_rho_u_k: object
    canonical_weight: object
    simple_l_k_roots: tuple
    gd: GradedDecomposition


def grade(rs, eps, H, require_even=True):
    """Sort every root into its degree layer and sign.

    With require_even (the main, in-scope case) any odd root degree raises
    OddGradingError.
    """
    if isinstance(H, (tuple, list)):
        H = GradingElement(tuple(int(h) for h in H))
    if len(H.h_values) != rs.rank:
        raise InputError("grading element length %d != rank %d"
                         % (len(H.h_values), rs.rank))
    layers = {}
    for r in rs.all_roots():
        deg = sum(c * h for c, h in zip(r.coords, H.h_values))
        if require_even and deg % 2:
            raise OddGradingError("odd orbit out of scope: root %r has degree %d"
                                  % (r.coords, deg))
        k_roots, p_roots = layers.setdefault(deg, ([], []))
        (k_roots if eps.sign(r) == 1 else p_roots).append(r)
    layers = {d: (tuple(k), tuple(p)) for d, (k, p) in layers.items()}
    if 0 not in layers:
        layers[0] = ((), ())
    return GradedDecomposition(rs, eps, H, layers)


def parabolic(gd):
    """The theta-stable parabolic data of a graded decomposition."""
    rs = gd.rs
    q_roots = gd.l_roots + gd.u_roots
    if gd.H.is_dominant:
        q_set = {r.coords for r in q_roots}
        for r in rs.positive_roots:
            if r.coords not in q_set:
                raise ConsistencyError("q does not contain the positive root %r" % (r,))
    two_rho_u_p = zero_weight(rs.rank)
    for r in gd.u_cap_p:
        two_rho_u_p = two_rho_u_p + rs.root_fw(r)
    two_rho_u_k = zero_weight(rs.rank)
    for r in gd.u_cap_k:
        two_rho_u_k = two_rho_u_k + rs.root_fw(r)
    kd = gd.k_root_datum()
    simple_l_k = tuple(b for b in kd.simple_roots if gd.degree_of(b) == 0)
    return ParabolicData(
        q_roots=q_roots,
        two_rho_u_p=two_rho_u_p,
        two_rho_u_k=two_rho_u_k,
        canonical_weight=two_rho_u_p - two_rho_u_k,
        simple_l_k_roots=simple_l_k,
        gd=gd,
    )


def conormal_canonical_weight(rs, eps, H):
    """2rho(u cap p) - 2rho(u cap k) for any grading, odd degrees allowed.

    Identical arithmetic to parabolic().canonical_weight; exposed separately
    because the conormal-bundle statement does not need an even grading.
    """
    gd = grade(rs, eps, H, require_even=False)
    return parabolic(gd).canonical_weight


def is_QK_dominant(lam, pd, kd):
    """Membership in the cone of weights whose highest-weight line is Q cap K stable.

    The line in the irreducible V_lam is automatically stable under the
    Borel of K; stability under the Levi part needs lam to kill the coroots
    of the degree-zero compact simple roots.
    """
    for b in kd.simple_roots:
        if kd.rs.pairing(lam, b) < 0:
            return False
    for b in pd.simple_l_k_roots:
        if kd.rs.pairing(lam, b) != 0:
            return False
    return True


@dataclass
class SearchHit:
    H: GradingElement
    confirmed: bool


def search_even_gradings(rs, eps, max_h=2, confirm=None):
    """All dominant H with entries in 0..max_h, even root degrees, and p_2 != 0.

    Results are in lexicographic order of h_values; hits are flagged
    confirmed only when the supplied matrix-level density check passes.
    Weyl-equivalent duplicates are not removed.
    """
    hits = []
    for h in product(range(max_h + 1), repeat=rs.rank):
        if not any(h):
            continue
        try:
            gd = grade(rs, eps, h)
        except OddGradingError:
            continue
        if not gd.p2_roots:
            continue
        confirmed = bool(confirm(gd)) if confirm is not None else False
        hits.append(SearchHit(GradingElement(h), confirmed))
    return hits
