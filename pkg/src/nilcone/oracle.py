"""Independent ground truth from exact rational matrix models.

Each catalog form gets a concrete realization of (g, theta) inside gl(n,Q):
a basis of g, the involution as an entrywise sign mask (conjugation by a
diagonal fourth root of unity, which acts rationally even when the element
itself is imaginary), and the diagonal Cartan.  Everything downstream is
exact nullspace / rank arithmetic: Jacobson-Morozov triples, orbit and cone
dimensions, density checks, and Hilbert functions of orbit closures by
evaluation rank at sampled rational orbit points.

Randomness is always driven by an explicit seed and every probabilistic
certificate (genericity, rank stabilization) is reproducible from it.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

from . import linalg as la
from .errors import ConsistencyError, DiagnosticError, InputError, OutOfScopeError
from .realform import (EqualRankInvolution, cartan_decomposition,
                       standard_form_catalog)
from .rootdata import Weight

F = Fraction


def _e_coords_of_root(rs, root):
    """Euclidean coordinates of a root in the standard realization."""
    c = root.coords
    n = rs.rank
    t = rs.type_label
    if t == "A":
        v = [F(0)] * (n + 1)
        for i in range(n):  # alpha_i = e_i - e_{i+1}
            v[i] += c[i]
            v[i + 1] -= c[i]
        return tuple(v)
    if t == "C":
        v = [F(0)] * n
        for i in range(n - 1):
            v[i] += c[i]
            v[i + 1] -= c[i]
        v[n - 1] += 2 * c[n - 1]
        return tuple(v)
    if t == "D":
        v = [F(0)] * n
        for i in range(n - 1):
            v[i] += c[i]
            v[i + 1] -= c[i]
        v[n - 2] += c[n - 1]
        v[n - 1] += c[n - 1]
        return tuple(v)
    raise OutOfScopeError("no matrix model for type %s" % t)


class ClassicalRealization:
    """Matrix model of (g, theta) with exact rational arithmetic throughout."""

    def __init__(self, name, rs, eps, family, msize, tau):
        self.name = name
        self.rs = rs
        self.eps = eps
        self.family = family
        self.msize = msize
        self._tau = tau  # exponent of i per matrix index; involution data
        self._build_basis()
        self._build_theta()
        self._validate()

    # -- construction ---------------------------------------------------------------

    def _unit(self, a, b):
        m = la.zeros(self.msize, self.msize)
        m[a][b] = F(1)
        return m

    def _build_basis(self):
        rs = self.rs
        n_e = rs.rank + 1 if rs.type_label == "A" else rs.rank
        self.n_e = n_e
        self.cartan_mats = []
        if self.family == "sl":
            for i in range(n_e - 1):
                m = la.zeros(self.msize, self.msize)
                m[i][i] = F(1)
                m[i + 1][i + 1] = F(-1)
                self.cartan_mats.append(m)
        else:
            for j in range(n_e):
                m = la.zeros(self.msize, self.msize)
                m[j][j] = F(1)
                m[n_e + j][n_e + j] = F(-1)
                self.cartan_mats.append(m)
        self._root_mats = {}
        for r in rs.all_roots():
            self._root_mats[r.coords] = self._root_matrix(_e_coords_of_root(rs, r))
        self.roots_order = list(rs.all_roots())
        self.basis = list(self.cartan_mats) + [self._root_mats[r.coords]
                                               for r in self.roots_order]
        self.dim = len(self.basis)
        self._span = la.Span([la.flatten(m) for m in self.basis])
        if self._span.dim != self.dim:
            raise ConsistencyError("realization basis is dependent")

    def _root_matrix(self, ev):
        n = self.n_e
        if self.family == "sl":
            a = next(i for i, x in enumerate(ev) if x == 1)
            b = next(i for i, x in enumerate(ev) if x == -1)
            return self._unit(a, b)
        support = [i for i, x in enumerate(ev) if x]
        if self.family in ("sp", "so"):
            if len(support) == 1:  # +-2e_a, only in sp
                a = support[0]
                if ev[a] == 2:
                    return self._unit(a, n + a)
                return self._unit(n + a, a)
            a, b = support
            if ev[a] == 1 and ev[b] == -1:
                m = self._unit(a, b)
                m = la.mat_sub(m, self._unit(n + b, n + a))
                return m
            if ev[a] == -1 and ev[b] == 1:
                m = self._unit(b, a)
                m = la.mat_sub(m, self._unit(n + a, n + b))
                return m
            sign = 1 if self.family == "sp" else -1
            if ev[a] == 1 and ev[b] == 1:  # e_a + e_b, a < b
                m = self._unit(a, n + b)
                m2 = self._unit(b, n + a)
                return la.mat_add(m, la.mat_scale(sign, m2))
            # -(e_a + e_b)
            m = self._unit(n + a, b)
            m2 = self._unit(n + b, a)
            return la.mat_add(m, la.mat_scale(sign, m2))
        raise ConsistencyError("unknown family %s" % self.family)

    def _build_theta(self):
        size = self.msize
        tau = self._tau
        self._mask = [[None] * size for _ in range(size)]
        for a in range(size):
            for b in range(size):
                diff = (tau[a] - tau[b]) % 4
                if diff % 2:
                    raise ConsistencyError("involution mask not real")
                self._mask[a][b] = 1 if diff == 0 else -1
        theta_cols = [self.coords(self.theta(m)) for m in self.basis]
        self._theta_mat = [list(row) for row in zip(*theta_cols)]
        ident = la.identity(self.dim)
        self.k_basis = la.nullspace(la.mat_sub(self._theta_mat, ident))
        self.p_basis = la.nullspace(la.mat_add(self._theta_mat, ident))
        self.k_dim = len(self.k_basis)
        self.p_dim = len(self.p_basis)
        self._p_span = la.Span(self.p_basis) if self.p_basis else None
        self._k_span = la.Span(self.k_basis) if self.k_basis else None

    def _validate(self):
        # theta is an involution and preserves g
        for m in self.basis:
            tm = self.theta(self.theta(m))
            if not la.mat_eq(tm, m):
                raise ConsistencyError("theta squared is not the identity")
        # brackets close in g
        for a in self.basis:
            for b in self.basis:
                if self.coords(la.commutator(a, b)) is None:
                    raise ConsistencyError("bracket left the span of the basis")
        cd = cartan_decomposition(self.rs, self.eps)
        if self.k_dim != cd.k_dim or self.p_dim != cd.p_dim:
            raise ConsistencyError("matrix k/p dims (%d, %d) disagree with the "
                                   "combinatorial ones (%d, %d)"
                                   % (self.k_dim, self.p_dim, cd.k_dim, cd.p_dim))
        # trace form nondegenerate on g
        gram = [[_trace(la.mat_mul(x, y)) for y in self.basis] for x in self.basis]
        if la.rank(gram) != self.dim:
            raise ConsistencyError("trace form degenerate on the realization")

    # -- primitives -----------------------------------------------------------------

    def theta(self, m):
        return [[self._mask[a][b] * m[a][b] for b in range(self.msize)]
                for a in range(self.msize)]

    def coords(self, m):
        return self._span.coords(la.flatten(m))

    def from_coords(self, vec):
        out = la.zeros(self.msize, self.msize)
        for c, b in zip(vec, self.basis):
            if c:
                out = la.mat_add(out, la.mat_scale(c, b))
        return out

    def ad_matrix(self, z):
        cols = [self.coords(la.commutator(z, b)) for b in self.basis]
        for col in cols:
            if col is None:
                raise InputError("element does not normalize g")
        return [list(row) for row in zip(*cols)]

    def in_p(self, m):
        return la.mat_eq(self.theta(m), la.mat_scale(-1, m))

    def in_k(self, m):
        return la.mat_eq(self.theta(m), m)

    def p_coords(self, m):
        return self._p_span.coords(self.coords(m))

    def root_vector(self, root):
        return self._root_mats[root.coords]

    def noncompact_roots(self):
        return [r for r in self.roots_order if self.eps.sign(r) == -1]

    def compact_roots(self):
        return [r for r in self.roots_order if self.eps.sign(r) == 1]

    def cartan_element_from_h(self, h_values):
        """Diagonal H with alpha_i(H) = h_i, rational entries."""
        n = self.n_e
        t = self.rs.type_label
        h = [F(x) for x in h_values]
        if t == "A":
            a = [F(0)] * n
            for j in range(n - 2, -1, -1):
                a[j] = a[j + 1] + h[j]
            mean = sum(a) / n
            a = [x - mean for x in a]
        elif t == "C":
            a = [F(0)] * n
            a[n - 1] = h[n - 1] / 2
            for j in range(n - 2, -1, -1):
                a[j] = a[j + 1] + h[j]
        elif t == "D":
            a = [F(0)] * n
            a[n - 2] = (h[n - 2] + h[n - 1]) / 2
            a[n - 1] = (h[n - 1] - h[n - 2]) / 2
            for j in range(n - 3, -1, -1):
                a[j] = a[j + 1] + h[j]
        else:
            raise OutOfScopeError("no matrix model for type %s" % t)
        m = la.zeros(self.msize, self.msize)
        if self.family == "sl":
            for j in range(n):
                m[j][j] = a[j]
        else:
            for j in range(n):
                m[j][j] = a[j]
                m[n + j][n + j] = -a[j]
        return m

    def weight_from_cartan_functional(self, values):
        """Weight (fw coords) of the functional with the given cartan-basis values."""
        t = self.rs.type_label
        vals = [F(v) for v in values]
        if t == "A":
            return Weight(tuple(vals))  # H_i is the i-th simple coroot
        n = self.n_e
        fw = []
        for i in range(n - 1):
            fw.append(vals[i] - vals[i + 1])
        if t == "C":
            fw.append(vals[n - 1])
        elif t == "D":
            fw[-1] = vals[n - 2] - vals[n - 1]
            fw.append(vals[n - 2] + vals[n - 1])
        return Weight(tuple(fw))


def _trace(m):
    return sum(m[i][i] for i in range(len(m)))


def _tau_for_sl(eps):
    """Fourth-root-of-unity exponents realizing eps as a diagonal conjugation."""
    tau = [0]
    for e in eps.epsilon:
        tau.append((tau[-1] + (0 if e == 1 else 2)) % 4)
    return tau


def _mask_sign(tau, rs, eps):
    for r in rs.positive_roots:
        ev = _e_coords_of_root(rs, r)
        exp = sum(int(c) * tau[j] for j, c in enumerate(ev)) % 4
        if exp % 2:
            return False
        if (1 if exp == 0 else -1) != eps.sign(r):
            return False
    return True


_REALIZE_CACHE = {}


def realize(name, eps=None):
    """Matrix model of a named catalog form, optionally in another sign convention."""
    rs, catalog_eps = standard_form_catalog(name)
    if eps is None:
        eps = catalog_eps
    elif not isinstance(eps, EqualRankInvolution):
        eps = EqualRankInvolution(tuple(eps))
    key = (name, eps.epsilon)
    if key in _REALIZE_CACHE:
        return _REALIZE_CACHE[key]
    real = _realize_uncached(name, rs, eps)
    _REALIZE_CACHE[key] = real
    return real


def _realize_uncached(name, rs, eps):
    t = rs.type_label
    if t == "A":
        return ClassicalRealization(name, rs, eps, "sl", rs.rank + 1,
                                    _tau_for_sl(eps))
    if t == "C":
        tau = _tau_for_bc(rs, eps)
        return ClassicalRealization(name, rs, eps, "sp", 2 * rs.rank, tau)
    if t == "D":
        tau = _tau_for_bc(rs, eps)
        return ClassicalRealization(name, rs, eps, "so", 2 * rs.rank, tau)
    raise OutOfScopeError("no matrix model for type %s" % t)


def _tau_for_bc(rs, eps):
    n = rs.rank
    for start in (0, 1):
        tau = [start]
        for e in eps.epsilon[: n - 1]:
            tau.append((tau[-1] + (0 if e == 1 else 2)) % 4)
        full = tau + [(-t) % 4 for t in tau]
        if _mask_sign(full, rs, eps):
            return full
    raise InputError("epsilon %r is not realizable by a diagonal involution"
                     % (eps.epsilon,))


# ---------------------------------------------------------------------------
# sl(2) triples
# ---------------------------------------------------------------------------

@dataclass
class SL2Triple:
    H: list
    X: list
    Y: list

    def bracket_identities_hold(self, real):
        br = la.commutator
        return (la.mat_eq(br(self.H, self.X), la.mat_scale(2, self.X))
                and la.mat_eq(br(self.X, self.Y), self.H)
                and la.mat_eq(br(self.H, self.Y), la.mat_scale(-2, self.Y)))

    def normalized_identities_hold(self, real):
        return (self.bracket_identities_hold(real)
                and real.in_k(self.H)
                and real.in_p(self.X)
                and real.in_p(self.Y))


def _is_nilpotent(real, x):
    power = la.identity(real.msize)
    for _ in range(real.msize):
        power = la.mat_mul(power, x)
    return la.is_zero_matrix(power)


def jm_triple(real, x):
    """Complete a nonzero nilpotent to an sl(2) triple by two exact solves."""
    if la.is_zero_matrix(x):
        raise InputError("cannot build an sl(2) triple over zero")
    if not _is_nilpotent(real, x):
        raise InputError("element is not nilpotent")
    xc = real.coords(x)
    if xc is None:
        raise InputError("element is not in g")
    adx = real.ad_matrix(x)
    adx2 = la.mat_mul(adx, adx)
    # H must lie in the image of ad X:  -(ad X)^2 w = 2 x, H = [X, w]
    w = la.solve(la.mat_scale(-1, adx2), [2 * c for c in xc])
    if w is None:
        raise InputError("Jacobson-Morozov system inconsistent")
    hc = [sum(adx[i][j] * w[j] for j in range(real.dim)) for i in range(real.dim)]
    h = real.from_coords(hc)
    adh = real.ad_matrix(h)
    # Y solves [X, Y] = H and [H, Y] = -2 Y simultaneously.
    stacked = [adx[i] for i in range(real.dim)]
    shifted = la.mat_add(adh, la.mat_scale(2, la.identity(real.dim)))
    stacked = stacked + [shifted[i] for i in range(real.dim)]
    rhs = list(hc) + [F(0)] * real.dim
    yc = la.solve(stacked, rhs)
    if yc is None:
        raise ConsistencyError("no completing Y found for a nilpotent element")
    triple = SL2Triple(H=h, X=x, Y=real.from_coords(yc))
    if not triple.bracket_identities_hold(real):
        raise ConsistencyError("triple fails its bracket identities")
    return triple


def ks_normalize(real, triple):
    """Move a triple with X in p to one with H in k and X, Y in p.

    Replacing H by its k-part keeps [H, X] = 2X because the p-part of H
    brackets X into k; Y is then re-solved inside p.  All six identities
    are re-checked exactly.
    """
    if not real.in_p(triple.X):
        raise InputError("normalization needs X in p")
    hk = la.mat_scale(F(1, 2), la.mat_add(triple.H, real.theta(triple.H)))
    if not la.mat_eq(la.commutator(hk, triple.X), la.mat_scale(2, triple.X)):
        raise ConsistencyError("k-part of H lost the [H, X] = 2X relation")
    adx = real.ad_matrix(triple.X)
    adhk = real.ad_matrix(hk)
    hk_c = real.coords(hk)
    p_cols = [list(col) for col in zip(*real.p_basis)]  # dim x p_dim
    top = la.mat_mul(adx, p_cols)
    bottom = la.mat_mul(la.mat_add(adhk, la.mat_scale(2, la.identity(real.dim))), p_cols)
    stacked = top + bottom
    rhs = list(hk_c) + [F(0)] * real.dim
    c = la.solve(stacked, rhs)
    if c is None:
        raise ConsistencyError("no Y in p completes the normalized triple")
    yc = [sum(real.p_basis[j][i] * c[j] for j in range(real.p_dim))
          for i in range(real.dim)]
    out = SL2Triple(H=hk, X=triple.X, Y=real.from_coords(yc))
    if not out.normalized_identities_hold(real):
        raise ConsistencyError("normalized triple fails an identity")
    return out


# ---------------------------------------------------------------------------
# Gradings, orbits, cone dimensions
# ---------------------------------------------------------------------------

def _eigen_layer(real, adh, deg, side=None):
    """Basis of the ad H eigenspace at deg, optionally intersected with k or p."""
    shift = la.mat_sub(adh, la.mat_scale(deg, la.identity(real.dim)))
    rows = list(shift)
    if side == "k":
        rows = rows + list(la.mat_sub(real._theta_mat, la.identity(real.dim)))
    elif side == "p":
        rows = rows + list(la.mat_add(real._theta_mat, la.identity(real.dim)))
    return la.nullspace(rows)


def ad_grading_dims(real, h):
    """Exact (dim k_i, dim p_i) per ad H eigenvalue i.

    Scans integer eigenvalues up to a Gershgorin bound and insists the
    eigenspace dimensions sum to dim g; a deficit means ad H is not
    semisimple with integer spectrum, i.e. a wrong H.
    """
    adh = real.ad_matrix(h)
    bound = 0
    for row in adh:
        s = sum(abs(x) for x in row)
        bound = max(bound, s)
    bound = int(bound) + 1
    layers = {}
    total = 0
    for d in range(-bound, bound + 1):
        kdim = len(_eigen_layer(real, adh, d, "k"))
        pdim = len(_eigen_layer(real, adh, d, "p"))
        if kdim or pdim:
            layers[d] = (kdim, pdim)
            total += kdim + pdim
    if total != real.dim:
        raise InputError("ad H is not semisimple with integer eigenvalues")
    return layers


def orbit_dimension(real, x):
    """dim K.x = dim k - dim ker(ad x: k -> p), by exact rank."""
    if not real.in_p(x):
        raise InputError("orbit_dimension expects x in p")
    if la.is_zero_matrix(x):
        return 0
    adx = real.ad_matrix(x)
    cols = []
    for v in real.k_basis:
        cols.append([sum(adx[i][j] * v[j] for j in range(real.dim))
                     for i in range(real.dim)])
    return la.rank(cols)


def dense_orbit_check(real, h, x):
    """Density of the parabolic orbit of x in the degree >= 2 part of p.

    True iff ad x maps the degree-0 part of k onto the degree-2 part of p
    and bracketing x with the positive-degree part of k spans the
    degree >= 3 part of p.
    """
    adh = real.ad_matrix(h)
    p2 = _eigen_layer(real, adh, 2, "p")
    if p2:
        sp2 = la.Span(p2)
        if sp2.coords(real.coords(x)) is None:
            raise InputError("x is not in the degree-2 part of p")
    elif not la.is_zero_matrix(x):
        raise InputError("x is not in the degree-2 part of p")
    k0 = _eigen_layer(real, adh, 0, "k")
    adx = real.ad_matrix(x)

    def image(vectors):
        return [[sum(adx[i][j] * v[j] for j in range(real.dim))
                 for i in range(real.dim)] for v in vectors]

    rank_k0 = la.rank(image(k0)) if k0 else 0
    if rank_k0 != len(p2):
        return False
    bound = int(max(sum(abs(e) for e in row) for row in adh)) + 1
    uk = []
    p_high = []
    for d in range(1, bound + 1):
        uk.extend(_eigen_layer(real, adh, d, "k"))
        if d >= 3:
            p_high.extend(_eigen_layer(real, adh, d, "p"))
    rank_uk = la.rank(image(uk)) if uk else 0
    return rank_uk == len(p_high)


def nilcone_dimension(real, seed):
    """dim p minus the dimension of a Cartan subspace of p.

    The Cartan subspace is found as the p-centralizer of a random rational
    element certified regular semisimple by a squarefree minimal polynomial;
    three certified trials must agree (the minimum is taken).
    """
    rng = random.Random("%s-nilcone" % (seed,))
    if real.p_dim == 0:
        return 0
    found = []
    for _ in range(80):
        coeffs = [F(rng.randint(-4, 4)) for _ in range(real.p_dim)]
        s = real.from_coords([sum(real.p_basis[j][i] * coeffs[j]
                                  for j in range(real.p_dim))
                              for i in range(real.dim)])
        if la.is_zero_matrix(s):
            continue
        if not _squarefree_minpoly(real, s):
            continue
        ads = real.ad_matrix(s)
        cols = []
        for v in real.p_basis:
            cols.append([sum(ads[i][j] * v[j] for j in range(real.dim))
                         for i in range(real.dim)])
        cent = real.p_dim - la.rank(cols)
        found.append(cent)
        if len(found) >= 3:
            return real.p_dim - min(found)
    raise DiagnosticError("no regular semisimple p-element found in budget",
                          partial=found)


def _squarefree_minpoly(real, s):
    powers = [la.flatten(la.identity(real.msize))]
    cur = la.identity(real.msize)
    coeffs = None
    for _ in range(real.msize + 1):
        cur = la.mat_mul(cur, s)
        span = la.Span(powers)
        c = span.coords(la.flatten(cur))
        if c is not None:
            coeffs = [-x for x in c] + [F(1)]  # monic minimal polynomial
            break
        powers.append(la.flatten(cur))
    if coeffs is None:
        raise ConsistencyError("minimal polynomial not found")
    deriv = [i * coeffs[i] for i in range(1, len(coeffs))]
    return _poly_gcd_degree(coeffs, deriv) == 0


def _poly_gcd_degree(a, b):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    while b:
        a, b = b, _poly_trim(_poly_mod(a, b))
    return len(a) - 1


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mod(a, b):
    a = list(a)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        a = _poly_trim(a)
        if not a:
            break
    return a


def random_nilpotent(real, rng):
    """Seeded random nilpotent in p: noncompact root vectors in a half-space."""
    noncompact = real.noncompact_roots()
    if not noncompact:
        raise InputError("p = 0: the form has no nilpotent directions")
    patterns = [_e_coords_of_root(real.rs, r) for r in noncompact]
    while True:
        xi = [rng.randint(-6, 6) for _ in range(real.n_e)]
        vals = [sum(F(x) * e for x, e in zip(xi, pat)) for pat in patterns]
        if any(v == 0 for v in vals):
            continue
        x = la.zeros(real.msize, real.msize)
        used = 0
        for r, v in zip(noncompact, vals):
            if v > 0:
                c = rng.randint(-2, 2)
                if c:
                    x = la.mat_add(x, la.mat_scale(c, real.root_vector(r)))
                    used += 1
        if used == 0:
            continue
        if not _is_nilpotent(real, x):
            raise ConsistencyError("half-space sample was not nilpotent")
        return x


def principal_nilpotent_search(real, seed, trials=120):
    """A nilpotent in p of maximal K-orbit dimension, certified against the cone."""
    if real.p_dim == 0:
        raise InputError("p = 0: no principal nilpotent exists")
    target = nilcone_dimension(real, seed)
    rng = random.Random("%s-principal" % (seed,))
    best = None
    best_dim = -1
    for _ in range(trials):
        x = random_nilpotent(real, rng)
        d = orbit_dimension(real, x)
        if d > best_dim:
            best, best_dim = x, d
        if best_dim == target:
            return best
    raise DiagnosticError("principal search stalled at orbit dimension %d < %d"
                          % (best_dim, target), partial=best)


# ---------------------------------------------------------------------------
# Orbit sampling and coordinate rings
# ---------------------------------------------------------------------------

def _exp_nilpotent(m):
    size = len(m)
    out = la.identity(size)
    term = la.identity(size)
    for i in range(1, size + 1):
        term = la.mat_mul(term, m)
        if la.is_zero_matrix(term):
            break
        out = la.mat_add(out, la.mat_scale(F(1, factorial(i)), term))
    return out


_TORUS_VALUES = (F(2), F(3), F(5), F(1, 2), F(1, 3), F(2, 3), F(3, 2), F(5, 2))


def _random_group_factor(real, rng):
    kind = rng.random()
    if kind < 0.6 and real.compact_roots():
        r = rng.choice(real.compact_roots())
        c = F(rng.choice([1, 2, 3, 4]) * rng.choice([1, -1]), rng.randint(1, 3))
        g = _exp_nilpotent(la.mat_scale(c, real.root_vector(r)))
        gi = _exp_nilpotent(la.mat_scale(-c, real.root_vector(r)))
        return g, gi
    # rational torus element of K
    n = real.n_e
    entries = [rng.choice(_TORUS_VALUES) for _ in range(n)]
    g = la.zeros(real.msize, real.msize)
    gi = la.zeros(real.msize, real.msize)
    if real.family == "sl":
        prod = F(1)
        for e in entries[:-1]:
            prod *= e
        entries[-1] = 1 / prod  # determinant one
        for j in range(n):
            g[j][j] = entries[j]
            gi[j][j] = 1 / entries[j]
    else:
        for j in range(n):
            g[j][j] = entries[j]
            g[n + j][n + j] = 1 / entries[j]
            gi[j][j] = 1 / entries[j]
            gi[n + j][n + j] = entries[j]
    return g, gi


def sample_orbit_points(real, x, count, rng):
    """Rational points Ad(g) x with g random words in unipotents and the torus."""
    pts = []
    for _ in range(count):
        g = la.identity(real.msize)
        gi = la.identity(real.msize)
        for _ in range(rng.randint(2, 5)):
            f, fi = _random_group_factor(real, rng)
            g = la.mat_mul(g, f)
            gi = la.mat_mul(fi, gi)
        pt = la.mat_mul(g, la.mat_mul(x, gi))
        pc = real.p_coords(pt)
        if pc is None:
            raise ConsistencyError("orbit sample left p")
        pts.append(pc)
    return pts


def _monomials(nvars, deg):
    return list(combinations_with_replacement(range(nvars), deg))


def _eval_rows(points, nvars, deg):
    mons = _monomials(nvars, deg)
    rows = []
    for pt in points:
        row = []
        for mon in mons:
            val = F(1)
            for i in mon:
                val *= pt[i]
            row.append(val)
        rows.append(row)
    return rows


def coordinate_ring_dims(real, x, k_max, seed, max_batches=30):
    """Hilbert function of the orbit closure by evaluation rank, degrees 0..k_max.

    Points are added in batches until every degree's rank is unchanged for
    two consecutive batches; elimination state is kept incrementally so each
    new point costs one row reduction per degree.
    """
    rng = random.Random("%s-coordring" % (seed,))
    if la.is_zero_matrix(x):
        return [1] + [0] * k_max
    trackers = {d: la.IncrementalRank(len(_monomials(real.p_dim, d)))
                for d in range(1, k_max + 1)}
    seen = set()

    def feed(points):
        for pt in points:
            key = tuple(pt)
            if key in seen:
                continue
            seen.add(key)
            for d in range(1, k_max + 1):
                trackers[d].add(_eval_rows([pt], real.p_dim, d)[0])

    feed([real.p_coords(x)])
    dims_prev = None
    stable = 0
    batch = max(8, (len(_monomials(real.p_dim, k_max)) + 7) // 8)
    for _ in range(max_batches):
        feed(sample_orbit_points(real, x, batch, rng))
        dims = [1] + [trackers[d].rank for d in range(1, k_max + 1)]
        if dims == dims_prev:
            stable += 1
            if stable >= 2:
                return dims
        else:
            stable = 0
        dims_prev = dims
    raise DiagnosticError("evaluation ranks did not stabilize", partial=dims_prev)


def not_in_closure_certificate(real, x_ref, x_other, max_deg, seed):
    """True certifies x_other outside the closure of K.x_ref.

    Saturates the evaluation rank on the reference orbit, then checks whether
    adding points of the other orbit raises it: a raise exhibits a polynomial
    vanishing on the reference orbit but not on the other one.  False is
    evidence only (no separating polynomial up to max_deg was found).
    """
    rng = random.Random("%s-closure" % (seed,))
    ref = [real.p_coords(x_ref)]
    other = [real.p_coords(x_other)] + sample_orbit_points(real, x_other, 4, rng)
    prev = None
    stable = 0
    for _ in range(10):
        ref.extend(sample_orbit_points(real, x_ref, 12, rng))
        ranks = [la.rank(_eval_rows(ref, real.p_dim, d))
                 for d in range(1, max_deg + 1)]
        if ranks == prev:
            stable += 1
            if stable >= 2:
                break
        else:
            stable = 0
        prev = ranks
    for d in range(1, max_deg + 1):
        base = la.rank(_eval_rows(ref, real.p_dim, d))
        joint = la.rank(_eval_rows(ref + other, real.p_dim, d))
        if joint > base:
            return True
    return False


# ---------------------------------------------------------------------------
# Aggregated evidence and cross-checks
# ---------------------------------------------------------------------------

def canonical_weight_from_matrices(real, h):
    """Torus weight of the top exterior power of (u cap p) + (u cap k)*.

    Computed purely from traces of the Cartan action on the positive ad H
    eigenspaces; independent of the root-sum bookkeeping it cross-checks.
    """
    adh = real.ad_matrix(h)
    bound = int(max(sum(abs(e) for e in row) for row in adh)) + 1
    up, uk = [], []
    for d in range(1, bound + 1):
        up.extend(_eigen_layer(real, adh, d, "p"))
        uk.extend(_eigen_layer(real, adh, d, "k"))
    values = []
    for t in real.cartan_mats:
        adt = real.ad_matrix(t)
        values.append(_trace_on(adt, up) - _trace_on(adt, uk))
    return real.weight_from_cartan_functional(values)


def _trace_on(admat, vectors):
    if not vectors:
        return F(0)
    span = la.Span(vectors)
    total = F(0)
    dim = len(admat)
    for j, v in enumerate(vectors):
        img = [sum(admat[i][m] * v[m] for m in range(dim)) for i in range(dim)]
        c = span.coords(img)
        if c is None:
            raise ConsistencyError("Cartan action left the graded piece")
        total += c[j]
    return total


def verify_grading_dims(real, h, gd):
    """Exact agreement of matrix and combinatorial graded dimensions."""
    matrix_side = ad_grading_dims(real, h)
    degrees = set(matrix_side) | set(gd.degrees)
    detail = {}
    ok = True
    for d in sorted(degrees):
        ms = matrix_side.get(d, (0, 0))
        cs = gd.dims(d)
        detail[d] = {"matrix": ms, "combinatorial": cs}
        if ms != cs:
            ok = False
    return ok, detail


def dense_confirmer(real, seed=0):
    """Matrix-level density check usable as the grading-search confirmer."""

    def confirm(gd):
        h = real.cartan_element_from_h(gd.H.h_values)
        rng = random.Random("%s-confirm-%s" % (seed, gd.H.h_values))
        for attempt in range(4):
            x = la.zeros(real.msize, real.msize)
            for r in gd.p2_roots:
                c = 1 if attempt == 0 else rng.randint(1, 5)
                x = la.mat_add(x, la.mat_scale(c, real.root_vector(r)))
            if la.is_zero_matrix(x):
                return False
            if dense_orbit_check(real, h, x):
                return True
        return False

    return confirm


def pinned_principal(real, h_values):
    """The pinned principal pair (H, X): H from h-values, X the sum of the
    degree-2 noncompact root vectors."""
    h = real.cartan_element_from_h(h_values)
    x = la.zeros(real.msize, real.msize)
    for r in real.noncompact_roots():
        deg = sum(F(e) * hv for e, hv in
                  zip(_e_coords_of_root(real.rs, r), _diag_values(real, h)))
        if deg == 2:
            x = la.mat_add(x, real.root_vector(r))
    return h, x


def _diag_values(real, h):
    return [h[j][j] for j in range(real.n_e)]


def even_grading_orbit_dims(real, seed=0, max_h=2):
    """Orbit dimension of the dense element of every confirmed even grading.

    These are exactly the orbits whose resolutions the package constructs;
    the even-dimension condition is only meaningful (and checkable) there.
    """
    from .grading import search_even_gradings
    confirm = dense_confirmer(real, seed)
    out = []
    for hit in search_even_gradings(real.rs, real.eps, max_h=max_h, confirm=confirm):
        if not hit.confirmed:
            continue
        h = real.cartan_element_from_h(hit.H.h_values)
        adh = real.ad_matrix(h)
        p2 = _eigen_layer(real, adh, 2, "p")
        x = real.from_coords([sum(v[i] for v in p2) for i in range(real.dim)])
        out.append((hit.H.h_values, orbit_dimension(real, x)))
    return out


def qct_evidence(real, seed, n_samples=14, closure_deg=2):
    """Sampled evidence for the single-closure and even-dimension conditions."""
    if real.p_dim == 0:
        return {"degenerate": True, "seed": seed}
    cone_dim = nilcone_dimension(real, seed)
    principal = principal_nilpotent_search(real, seed)
    rng = random.Random("%s-qct" % (seed,))
    samples = [principal]
    for _ in range(n_samples):
        samples.append(random_nilpotent(real, rng))
    dims = [orbit_dimension(real, s) for s in samples]
    reps = [principal]
    for s, d in zip(samples[1:], dims[1:]):
        if d != cone_dim:
            continue
        new = True
        for r in reps:
            if not not_in_closure_certificate(real, r, s, closure_deg, seed):
                new = False
                break
        if new:
            reps.append(s)
    return {
        "degenerate": False,
        "seed": seed,
        "nilcone_dim": cone_dim,
        "principal_orbit_dim": orbit_dimension(real, principal),
        "component_count": len(reps),
        "sampled_orbit_dims": dims,
        "even_grading_orbit_dims": even_grading_orbit_dims(real, seed),
    }
