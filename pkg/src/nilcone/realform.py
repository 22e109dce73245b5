"""Equal-rank Cartan involutions as multiplicative signs on roots.

theta acts trivially on the Cartan subalgebra, so the whole involution is
a choice of sign per simple root; the sign of any root is the product over
its simple coordinates.  +1 roots span k, -1 roots span p.  The positive
system of K is inherited from the ambient positive roots, which realizes a
theta-stable Borel with B \cap K Borel in K.
"""

import re
from dataclasses import dataclass

from .errors import ConsistencyError, InputError, OutOfScopeError
from .rootdata import Subsystem, build_root_system

# Forms whose principal nilpotent admits a dominant even grading in the
# listed sign convention.  The catalog entry for a form is its standard
# (Vogan-diagram / matrix-model) convention, which for some forms differs
# from the principal-aligned one; keep both.
_PRINCIPAL_PRESENTATIONS = {
    "su(1,1)": ((-1,), (2,)),
    "su(2,1)": ((-1, -1), (2, 2)),
    "su(2,2)": ((-1, -1, -1), (2, 2, 2)),
    "sp(4,R)": ((-1, -1), (2, 2)),
}


@dataclass(frozen=True)
class EqualRankInvolution:
    """Signs per simple root; -1 marks a noncompact simple root."""

    epsilon: tuple

    def __post_init__(self):
        if not self.epsilon or any(e not in (1, -1) for e in self.epsilon):
            raise InputError("epsilon must be a nonempty vector of +-1")

    def sign(self, root):
        odd = sum(c for c, e in zip(root.coords, self.epsilon) if e == -1)
        return -1 if odd % 2 else 1


@dataclass
class CartanDecomposition:
    rs: object
    eps: EqualRankInvolution
    k_roots: tuple  # all roots with sign +1, both signs of the root
    p_roots: tuple
    k_dim: int
    p_dim: int


class KRootDatum(Subsystem):
    """Root datum of K: the +1 roots with the inherited positive system."""

    def __init__(self, rs, eps, positive_k_roots):
        super().__init__(rs, positive_k_roots)
        self.eps = eps

    @property
    def rho_K(self):
        return self.rho

    @property
    def simple_k_roots(self):
        return self.simple_roots


def cartan_decomposition(rs, eps):
    """Split all roots into compact (k) and noncompact (p) ones."""
    if len(eps.epsilon) != rs.rank:
        raise InputError("epsilon length %d != rank %d" % (len(eps.epsilon), rs.rank))
    k_roots, p_roots = [], []
    for r in rs.all_roots():
        (k_roots if eps.sign(r) == 1 else p_roots).append(r)
    return CartanDecomposition(rs, eps, tuple(k_roots), tuple(p_roots),
                               k_dim=rs.rank + len(k_roots), p_dim=len(p_roots))


def k_root_datum(cd):
    """The inherited positive system on the compact roots, with rho_K."""
    positives = [r for r in cd.k_roots if r.is_positive]
    try:
        kd = KRootDatum(cd.rs, cd.eps, positives)
    except InputError as exc:  # should be impossible: inherited positives are valid
        raise ConsistencyError("inherited K positive system invalid: %s" % exc) from exc
    return kd


def k_root_datum_for(rs, eps):
    return k_root_datum(cartan_decomposition(rs, eps))


def _normalize_name(name):
    name = name.strip().replace(" ", "")
    name = name.replace("ℝ", "R").replace("ℂ", "C").replace("ℍ", "H")
    return name


_OUT_OF_SCOPE_PATTERNS = (
    (r"^sl\(\d+,R\)$", "split special linear forms are not equal rank"),
    (r"^(sl|gl|psl)\(\d+,H\)$", "quaternionic linear forms are not equal rank"),
    (r"^\w+\(\d+,C\)$", "complex groups viewed as real groups are not equal rank"),
    (r"^so\(\d+,\d+\)$", "indefinite orthogonal forms are outside this catalog"),
    (r"^e6", "exceptional forms are outside this catalog"),
)


def standard_form_catalog(name):
    """Named equal-rank real forms: su(p,q), sp(p,q), sp(2n,R), so*(2n).

    Returns (RootSystem, EqualRankInvolution) in a pinned sign convention.
    Non-equal-rank or unrecognized names raise OutOfScopeError.
    """
    norm = _normalize_name(name)
    for pattern, why in _OUT_OF_SCOPE_PATTERNS:
        if re.match(pattern, norm, re.IGNORECASE):
            raise OutOfScopeError("out of scope: %s (%s)" % (name, why))

    m = re.match(r"^su\((\d+),(\d+)\)$", norm)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if p < 1 or q < 1:
            raise InputError("su(p,q) needs p, q >= 1")
        rank = p + q - 1
        rs = build_root_system("A", rank)
        if (p, q) == (2, 1):
            # principal-aligned convention pinned for this form
            eps = (-1, -1)
        else:
            eps = tuple(-1 if i == p else 1 for i in range(1, rank + 1))
        return rs, EqualRankInvolution(eps)

    m = re.match(r"^sp\((\d+),R\)$", norm, re.IGNORECASE)
    if m:
        two_n = int(m.group(1))
        if two_n % 2 or two_n < 4:
            raise InputError("sp(2n,R) needs even 2n >= 4")
        n = two_n // 2
        rs = build_root_system("C", n)
        eps = tuple([1] * (n - 1) + [-1])  # long simple root noncompact
        return rs, EqualRankInvolution(eps)

    m = re.match(r"^sp\((\d+),(\d+)\)$", norm)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if p < 1 or q < 1:
            raise InputError("sp(p,q) needs p, q >= 1")
        n = p + q
        if n < 2:
            raise InputError("sp(p,q) needs rank >= 2")
        rs = build_root_system("C", n)
        eps = tuple(-1 if i == p else 1 for i in range(1, n + 1))
        return rs, EqualRankInvolution(eps)

    m = re.match(r"^so\*\((\d+)\)$", norm)
    if m:
        two_n = int(m.group(1))
        if two_n % 2 or two_n < 6:
            raise InputError("so*(2n) needs even 2n >= 6")
        n = two_n // 2
        rs = build_root_system("D", n)
        eps = tuple([1] * (n - 1) + [-1])
        return rs, EqualRankInvolution(eps)

    raise OutOfScopeError("out of scope: unrecognized form %r" % (name,))


def principal_presentation(name):
    """Sign convention and grading element aligned with the principal orbit.

    Returns (RootSystem, EqualRankInvolution, h_values).  Only pinned for
    the forms whose principal data this package ships; other forms should
    go through the even-grading search.
    """
    norm = _normalize_name(name)
    if norm not in _PRINCIPAL_PRESENTATIONS:
        raise OutOfScopeError("no pinned principal presentation for %r" % (name,))
    eps, h = _PRINCIPAL_PRESENTATIONS[norm]
    rs, catalog_eps = standard_form_catalog(norm)
    del catalog_eps
    return rs, EqualRankInvolution(eps), h


def pinned_forms():
    return tuple(sorted(_PRINCIPAL_PRESENTATIONS))


def parse_form_config(config):
    """Config dicts: {"form": "su(2,1)"} or {"type": "A", "rank": 2, "epsilon": [-1,-1]}."""
    if "form" in config:
        return standard_form_catalog(config["form"])
    try:
        rs = build_root_system(config["type"], int(config["rank"]))
        eps = EqualRankInvolution(tuple(int(e) for e in config["epsilon"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("malformed form config: %r" % (config,)) from exc
    if len(eps.epsilon) != rs.rank:
        raise InputError("epsilon length %d != rank %d" % (len(eps.epsilon), rs.rank))
    return rs, eps
