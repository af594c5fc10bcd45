"""
Twisted Quantum Double
D^omega(G) on the basis e(g) (x) x: product, coproduct, associator, antipode,
quasi-Hopf axiom verification and the group Gamma^omega of group-likes
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

import config
from cocycles import (CocycleParams, Cochain3, gamma_exponent, theta_exponent,
                      verify_3cocycle)
from errors import NotACocycle, OutOfRange, TqdError
from exactmath import (RootOfUnity, is_zero_scalar, scalar_add, scalar_mul,
                       scalar_to_json, scalars_equal)
from groups import Character, FiniteGroup, cyclic

logger = logging.getLogger(__name__)


def accumulate_term(terms, key, coeff):
    if key in terms:
        total = scalar_add(terms[key], coeff)
        if is_zero_scalar(total):
            del terms[key]
        else:
            terms[key] = total
    else:
        terms[key] = coeff


def tensors_equal(left, right):
    """Sparse dicts key -> scalar, compared exactly"""
    left = {k: v for k, v in left.items() if not is_zero_scalar(v)}
    right = {k: v for k, v in right.items() if not is_zero_scalar(v)}
    if left.keys() != right.keys():
        return False
    return all(scalars_equal(left[k], right[k]) for k in left)


class TqdElement:
    """Class for a sparse linear combination of basis elements (g, x) = e(g) (x) x"""

    def __init__(self, terms=None):
        self.terms = {}
        for key, coeff in (terms or {}).items():
            accumulate_term(self.terms, key, coeff)

    @classmethod
    def basis(cls, g, x, coeff=None):
        return cls({(g, x): coeff if coeff is not None else RootOfUnity.one()})

    def __add__(self, other):
        result = TqdElement(self.terms)
        for key, coeff in other.terms.items():
            accumulate_term(result.terms, key, coeff)
        return result

    def scale(self, s):
        return TqdElement({k: scalar_mul(v, s) for k, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def canonical_key(self):
        """Hashable form; valid when all coefficients are RootOfUnity"""
        return tuple(sorted(self.terms.items()))

    def __eq__(self, other):
        return isinstance(other, TqdElement) and tensors_equal(self.terms, other.terms)

    __hash__ = None

    def to_json(self, group=None):
        name = group.name if group is not None else str
        return [{'g': name(g), 'x': name(x), 'coeff': scalar_to_json(c)}
                for (g, x), c in sorted(self.terms.items())]

    def __repr__(self):
        return f"TqdElement({self.terms})"


class TqdAlgebra:
    """Class to hold D^omega(G) for a finite group and a verified 3-cocycle"""

    def __init__(self, group, omega, verify=True):
        """
        Args:
            group: FiniteGroup
            omega: Cochain3 on group
            verify: Run verify_3cocycle when |G| allows
        """
        self.group = group
        self.omega = omega
        self.order = omega.order
        if verify and group.order <= config.MAX_COCYCLE_CHECK_ORDER:
            ok, witness = verify_3cocycle(omega)
            if not ok:
                raise NotACocycle(f"omega fails {witness[0]} at {witness[1]}", witness=witness)

        n = group.order
        self._theta = np.zeros((n, n, n), dtype=np.int64)
        self._gamma = np.zeros((n, n, n), dtype=np.int64)
        for g, x, y in itertools.product(range(n), repeat=3):
            self._theta[g, x, y] = theta_exponent(omega, g, x, y)
            self._gamma[g, x, y] = gamma_exponent(omega, g, x, y)
        self.basis = [(g, x) for g in range(n) for x in range(n)]

    @classmethod
    def from_params(cls, params):
        return cls(params.group, Cochain3.from_params(params))

    # Structure constants

    def theta(self, g, x, y):
        return RootOfUnity.of(int(self._theta[g, x, y]), self.order)

    def gamma(self, g, x, y):
        return RootOfUnity.of(int(self._gamma[g, x, y]), self.order)

    def omega_value(self, a, b, c):
        return self.omega.value(a, b, c)

    def conj(self, g, x):
        return self.group.conjugate(g, x)

    # Algebra

    def unit(self):
        e = self.group.identity
        return TqdElement({(g, e): RootOfUnity.one() for g in self.group.elements()})

    def mul_basis(self, b1, b2):
        """(e(g) x)(e(h) y) = theta_g(x,y) delta_{g^x,h} e(g) xy; None when zero"""
        (g, x), (h, y) = b1, b2
        if h != self.conj(g, x):
            return None
        return (g, self.group.mul(x, y)), self.theta(g, x, y)

    def mul(self, u, v):
        by_group = {}
        for (h, y), d in v.terms.items():
            by_group.setdefault(h, []).append((y, d))
        result = {}
        for (g, x), c in u.terms.items():
            for y, d in by_group.get(self.conj(g, x), ()):
                coeff = scalar_mul(scalar_mul(c, d), self.theta(g, x, y))
                accumulate_term(result, (g, self.group.mul(x, y)), coeff)
        return TqdElement(result)

    # Coalgebra

    def comul_basis(self, b):
        """Delta(e(g) x) = sum_{hk=g} gamma_x(h,k) e(h) x (x) e(k) x"""
        g, x = b
        G = self.group
        terms = {}
        for h in G.elements():
            k = G.mul(G.inv(h), g)
            terms[((h, x), (k, x))] = self.gamma(x, h, k)
        return terms

    def comul(self, u):
        result = {}
        for b, c in u.terms.items():
            for key, coeff in self.comul_basis(b).items():
                accumulate_term(result, key, scalar_mul(c, coeff))
        return result

    def counit_basis(self, b):
        return 1 if b[0] == self.group.identity else 0

    def counit(self, u):
        total = 0
        for b, c in u.terms.items():
            if self.counit_basis(b):
                total = scalar_add(total, c)
        return total

    def associator(self, inverse=False):
        """Phi = sum omega(a,b,c)^-1 e(a) (x) e(b) (x) e(c); inverse=True gives Phi^-1"""
        e = self.group.identity
        n = self.group.order
        terms = {}
        for a, b, c in itertools.product(range(n), repeat=3):
            w = self.omega_value(a, b, c)
            terms[((a, e), (b, e), (c, e))] = w if inverse else w.inverse()
        return terms

    def beta(self):
        G = self.group
        e = G.identity
        return TqdElement({(g, e): self.omega_value(g, G.inv(g), g) for g in G.elements()})

    def alpha(self):
        return self.unit()

    def antipode_basis(self, b):
        """S(e(g) x) = theta_{g^-1}(x,x^-1)^-1 gamma_x(g,g^-1)^-1 e(x^-1 g^-1 x) x^-1"""
        g, x = b
        G = self.group
        gi, xi = G.inv(g), G.inv(x)
        coeff = (self.theta(gi, x, xi) * self.gamma(x, g, gi)).inverse()
        return (G.conjugate(gi, x), xi), coeff

    def antipode(self, u):
        result = {}
        for b, c in u.terms.items():
            key, coeff = self.antipode_basis(b)
            accumulate_term(result, key, scalar_mul(c, coeff))
        return TqdElement(result)


def tqd_mul(A, u, v):
    return A.mul(u, v)


def tqd_comul(A, b):
    return A.comul_basis(b)


def tqd_antipode(A, u):
    return A.antipode(u)


def tensor_mul(A, left, right):
    """Componentwise product of sparse tensors of equal arity over D^omega(G)"""
    index = {}
    for key, d in right.items():
        index.setdefault(tuple(h for h, _ in key), []).append((key, d))
    result = {}
    for key, c in left.items():
        needed = tuple(A.conj(g, x) for g, x in key)
        for rkey, d in index.get(needed, ()):
            coeff = scalar_mul(c, d)
            new_key = []
            for (g, x), (_, y) in zip(key, rkey):
                coeff = scalar_mul(coeff, A.theta(g, x, y))
                new_key.append((g, A.group.mul(x, y)))
            accumulate_term(result, tuple(new_key), coeff)
    return result


def _comul_left(A, b):
    """(Delta (x) id) Delta(b)"""
    result = {}
    for (b1, b2), c in A.comul_basis(b).items():
        for (c1, c2), d in A.comul_basis(b1).items():
            accumulate_term(result, (c1, c2, b2), scalar_mul(c, d))
    return result


def _comul_right(A, b):
    """(id (x) Delta) Delta(b)"""
    result = {}
    for (b1, b2), c in A.comul_basis(b).items():
        for (c1, c2), d in A.comul_basis(b2).items():
            accumulate_term(result, (b1, c1, c2), scalar_mul(c, d))
    return result


def _tuples(sizes, full, rng, sample_size):
    if full:
        return itertools.product(*[range(s) for s in sizes])
    draws = rng.integers(0, sizes, size=(sample_size, len(sizes)))
    return (tuple(int(v) for v in row) for row in draws)


def verify_quasi_hopf(A, full=None, seed=None, sample_size=None):
    """
    Check the quasi-Hopf axioms of D^omega(G)

    Args:
        A: TqdAlgebra
        full: Enumerate every basis tuple; defaults to |G| <= FULL_ENUMERATION_MAX_ORDER
        seed: Sampling seed when not full
        sample_size: Tuples per axiom when sampling

    Returns:
        Dict with 'passed', 'mode' and per-axiom entries {axiom, status, witness}
    """
    G = A.group
    n = G.order
    if full is None:
        full = n <= config.FULL_ENUMERATION_MAX_ORDER
    rng = np.random.default_rng(config.DEFAULT_SEED if seed is None else seed)
    sample_size = sample_size or config.DEFAULT_SAMPLE_SIZE
    tuples = lambda k: _tuples([n] * k, full, rng, sample_size)
    basis = lambda pair: TqdElement.basis(*pair)
    axioms = []

    def record(name, witness):
        status = 'pass' if witness is None else 'fail'
        axioms.append({'axiom': name, 'status': status, 'witness': witness})
        if witness is None:
            logger.info(f"[OK] {name}")
        else:
            logger.warning(f"[FAIL] {name} at {witness}")

    # Unit
    unit = A.unit()
    witness = None
    for g, x in tuples(2):
        b = basis((g, x))
        if A.mul(unit, b) != b or A.mul(b, unit) != b:
            witness = {'basis': [g, x]}
            break
    record('unit', witness)

    # Associativity on composable triples; all other triples vanish on both sides
    witness = None
    for g, x, y, z in tuples(4):
        b1 = (g, x)
        b2 = (A.conj(g, x), y)
        b3 = (A.conj(g, G.mul(x, y)), z)
        left_ab = A.mul_basis(b1, b2)
        right_bc = A.mul_basis(b2, b3)
        left = A.mul_basis(left_ab[0], b3)
        right = A.mul_basis(b1, right_bc[0])
        if left[0] != right[0] or left[1] * left_ab[1] != right[1] * right_bc[1]:
            witness = {'triple': [list(b1), list(b2), list(b3)]}
            break
    record('associativity', witness)

    # Delta is an algebra map
    witness = None
    for g, x, y in tuples(3):
        b1, b2 = (g, x), (A.conj(g, x), y)
        prod_b, coeff = A.mul_basis(b1, b2)
        lhs = {k: scalar_mul(v, coeff) for k, v in A.comul_basis(prod_b).items()}
        rhs = tensor_mul(A, A.comul_basis(b1), A.comul_basis(b2))
        if not tensors_equal(lhs, rhs):
            witness = {'pair': [list(b1), list(b2)]}
            break
    record('comultiplicativity', witness)

    # Counit laws
    witness = None
    for g, x in tuples(2):
        b = (g, x)
        left, right = {}, {}
        for (b1, b2), c in A.comul_basis(b).items():
            if A.counit_basis(b1):
                accumulate_term(left, b2, c)
            if A.counit_basis(b2):
                accumulate_term(right, b1, c)
        target = {b: RootOfUnity.one()}
        if not tensors_equal(left, target) or not tensors_equal(right, target):
            witness = {'basis': [g, x]}
            break
    record('counit', witness)

    # (id (x) eps (x) id) Phi = 1 (x) 1
    collapsed = {}
    for (p1, p2, p3), c in A.associator().items():
        if A.counit_basis(p2):
            accumulate_term(collapsed, (p1, p3), c)
    e = G.identity
    one_one = {((a, e), (b, e)): RootOfUnity.one() for a in range(n) for b in range(n)}
    record('associator_counit', None if tensors_equal(collapsed, one_one) else {'associator': 'middle counit'})

    # (id (x) Delta) Delta = Phi (Delta (x) id) Delta Phi^-1
    phi, phi_inv = A.associator(), A.associator(inverse=True)
    witness = None
    for g, x in tuples(2):
        lhs = _comul_right(A, (g, x))
        rhs = tensor_mul(A, tensor_mul(A, phi, _comul_left(A, (g, x))), phi_inv)
        if not tensors_equal(lhs, rhs):
            witness = {'basis': [g, x]}
            break
    record('quasi_coassociativity', witness)

    # Pentagon for Phi is the cocycle identity
    if n <= config.MAX_COCYCLE_CHECK_ORDER:
        ok, bad = verify_3cocycle(A.omega)
        record('pentagon', None if ok else {'cocycle': list(bad[1])})

    # Antipode identities with alpha = 1
    beta = A.beta()
    witness_a = witness_b = None
    for g, x in tuples(2):
        b = (g, x)
        eps = A.counit_basis(b)
        sum_a, sum_b = TqdElement(), TqdElement()
        for (b1, b2), c in A.comul_basis(b).items():
            term_a = A.mul(A.antipode(basis(b1)), basis(b2)).scale(c)
            term_b = A.mul(A.mul(basis(b1), beta), A.antipode(basis(b2))).scale(c)
            sum_a, sum_b = sum_a + term_a, sum_b + term_b
        target_a = A.unit() if eps else TqdElement()
        target_b = beta if eps else TqdElement()
        if witness_a is None and sum_a != target_a:
            witness_a = {'basis': [g, x]}
        if witness_b is None and sum_b != target_b:
            witness_b = {'basis': [g, x]}
        if witness_a and witness_b:
            break
    record('antipode_alpha', witness_a)
    record('antipode_beta', witness_b)

    total = TqdElement()
    for (p1, p2, p3), c in phi.items():
        term = A.mul(A.mul(A.mul(basis(p1), beta), A.antipode(basis(p2))), basis(p3))
        total = total + term.scale(c)
    record('antipode_associator', None if total == A.unit() else {'associator': 'X1 beta S(X2) X3'})

    total = TqdElement()
    for (p1, p2, p3), c in phi_inv.items():
        term = A.mul(A.mul(A.mul(A.antipode(basis(p1)), basis(p2)), beta), A.antipode(basis(p3)))
        total = total + term.scale(c)
    record('antipode_associator_inverse',
           None if total == A.unit() else {'associator': 'S(x1) x2 beta S(x3)'})

    passed = all(a['status'] == 'pass' for a in axioms)
    return {'passed': passed, 'mode': 'full' if full else 'sampled', 'axioms': axioms}


def _non_commuting_pair(A):
    for b1 in A.basis:
        for b2 in A.basis:
            if A.mul_basis(b1, b2) != A.mul_basis(b2, b1):
                return b1, b2
    return None


def is_commutative(A):
    """True iff all basis pairs commute"""
    return _non_commuting_pair(A) is None


def commutativity_witness(A):
    return _non_commuting_pair(A)


# Group-likes for cyclic groups with omega_a

def cyclic_algebra(m, a):
    """D^omega_a(Z_m)"""
    G = cyclic(m)
    return TqdAlgebra.from_params(CocycleParams(G, (a % m,)))


def _cyclic_data(A):
    params = getattr(A.omega, 'params', None)
    if params is None or params.group.rank != 1:
        raise TqdError("group-likes are implemented for the cyclic omega_a family")
    return params.group.factors[0], params.a[0]


def tau(A, x, g):
    """tau_{g^x}(g^i) = zeta_{m^2}^{a x i}"""
    m, a = _cyclic_data(A)
    return RootOfUnity(Fraction(a * x * g, m * m))


def grouplike(A, alpha, x):
    """
    sigma_tau(alpha, x) = sum_g alpha(g) tau_x(g) e(g) (x) x

    Args:
        A: Cyclic TqdAlgebra with omega_a
        alpha: Character of Z_m or its integer exponent c (alpha(g^i) = zeta_m^{ci})
        x: Element index (exponent) of Z_m

    Returns:
        TqdElement
    """
    m, _ = _cyclic_data(A)
    c = alpha.exponents[0] if isinstance(alpha, Character) else int(alpha)
    return TqdElement({(i, x): RootOfUnity(Fraction(c * i, m)) * tau(A, x, i) for i in range(m)})


def verify_grouplike(A, u):
    """Delta(u) = u (x) u and eps(u) = 1"""
    square = {}
    for b1, c1 in u.terms.items():
        for b2, c2 in u.terms.items():
            accumulate_term(square, (b1, b2), scalar_mul(c1, c2))
    return tensors_equal(A.comul(u), square) and scalars_equal(A.counit(u), 1)


@dataclass
class GrouplikeGroup:
    """Class for Gamma^omega: element c*m + k is sigma_tau(chi^c, g^k)"""

    algebra: TqdAlgebra
    m: int
    a: int
    elements: list
    table: FiniteGroup
    projection: list

    @property
    def s(self):
        return self.index(1, 0)

    @property
    def t(self):
        return self.index(0, 1)

    def index(self, c, k):
        return (c % self.m) * self.m + (k % self.m)

    def label(self, idx):
        c, k = divmod(idx, self.m)
        return f"sigma(chi^{c}, g^{k})"

    def kernel(self):
        e = self.algebra.group.identity
        return [i for i, p in enumerate(self.projection) if p == e]


def _coefficient_exponents(m, a, N):
    """Row c*m + k: exponent over N of the coefficient of e(g^i) in sigma_tau(chi^c, g^k)"""
    i = np.arange(m)
    rows = [((c * i * m + a * k * i) * (N // (m * m))) % N for c in range(m) for k in range(m)]
    return np.array(rows, dtype=np.int64)


def grouplike_group(A):
    """
    All m^2 group-likes sigma_tau(chi^c, g^k) with their multiplication table

    The table is assembled from the theta exponents of A; every product with
    s or t is recomputed through tqd_mul and must land on the same element.

    Returns:
        GrouplikeGroup
    """
    m, a = _cyclic_data(A)
    if m > config.MAX_EXPLICIT_M:
        raise OutOfRange(f"group-like tables are limited to m <= {config.MAX_EXPLICIT_M}")
    elements = [grouplike(A, c, k) for c in range(m) for k in range(m)]
    n = m * m

    N = int(np.lcm(m * m, A.order))
    coeffs = _coefficient_exponents(m, a, N)
    ks = np.array([k for c in range(m) for k in range(m)], dtype=np.int64)
    theta = A._theta * (N // A.order)
    lookup = {(int(ks[p]), coeffs[p].tobytes()): p for p in range(n)}

    table = np.zeros((n, n), dtype=np.int64)
    for p in range(n):
        # theta_g(x_p, x_q) for every g (rows) and q (columns)
        twist = theta[:, ks[p], ks].T
        products = (coeffs[p][None, :] + coeffs + twist) % N
        xs = (ks[p] + ks) % m
        for q in range(n):
            key = (int(xs[q]), products[q].tobytes())
            if key not in lookup:
                raise TqdError(f"product of group-likes {p}, {q} left the family")
            table[p, q] = lookup[key]

    keys = [u.canonical_key() for u in elements]
    for p in range(n):
        for q in (m, 1):
            if A.mul(elements[p], elements[q]).canonical_key() != keys[table[p, q]]:
                raise TqdError(f"tqd_mul disagrees with the group-like table at {p}, {q}")

    group = FiniteGroup(table)
    projection = [k for c in range(m) for k in range(m)]
    logger.debug(f"Gamma^omega for m={m}, a={a} has order {n}")
    return GrouplikeGroup(A, m, a, elements, group, projection)


def verify_relations(GG):
    """Relations of the presentation <s, t | t^{m^2/(m,2a)} = s^m = 1, s^{2a} = t^m, st = ts>"""
    G, m, a = GG.table, GG.m, GG.a
    s, t, e = GG.s, GG.t, G.identity
    d = gcd(2 * a, m)
    return {
        's^m = 1': G.power(s, m) == e,
        't^(m^2/(2a,m)) = 1': G.power(t, m * m // d) == e,
        's^(2a) = t^m': G.power(s, 2 * a) == G.power(t, m),
        'st = ts': G.mul(s, t) == G.mul(t, s),
    }


def verify_extension(GG):
    """pi is a surjective homomorphism onto Z_m with kernel {sigma(alpha, 1)}"""
    base = GG.algebra.group
    hom = GG.table.is_homomorphism_to(base, GG.projection)
    onto = set(GG.projection) == set(base.elements())
    kernel = GG.kernel() == [GG.index(c, 0) for c in range(GG.m)]
    return hom and onto and kernel


def beta_extension_cocycle(A, x, y):
    """beta(g^x, g^y) = chi^{2a floor((x+y)/m)} as a Character of Z_m"""
    m, a = _cyclic_data(A)
    return Character(A.group, ((2 * a * ((x + y) // m)) % m,))


def beta_from_tau(A, x, y):
    """Direct evaluation g -> tau_x(g) tau_y(g) / tau_{xy}(g) * omega_g(x, y)"""
    m, _ = _cyclic_data(A)
    xy = (x + y) % m
    values = []
    for g in range(m):
        w = A.omega_value(g, x, y) * A.omega_value(x, y, g) / A.omega_value(x, g, y)
        values.append(tau(A, x, g) * tau(A, y, g) / tau(A, xy, g) * w)
    return values
