"""
Group 3-Cocycles
The omega_a family on finite abelian groups, general 3-cochains, derived
2-cochains theta/gamma/omega_g, inflation and the F3 coboundary decision
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

import config
from errors import (NotAbelian, NotGenerating, NotHomomorphism, NotSurjective,
                    OutOfRange, TooLarge)
from exactmath import RootOfUnity, nth_root_solutions
from groups import FiniteAbelianGroup, build_abelian

logger = logging.getLogger(__name__)


def _key(text):
    """'(1,2)' -> (1, 2)"""
    return tuple(int(p) for p in text.strip("() ").split(",") if p.strip())


@dataclass(frozen=True)
class CocycleParams:
    """
    Parameter vector a of the cocycle family on Z_m1 x ... x Z_mn

    Indices in a2 / a3 keys are 1-based generator positions; zero entries are not stored.
    """

    group: FiniteAbelianGroup
    a: tuple
    a2: dict = field(default_factory=dict)
    a3: dict = field(default_factory=dict)

    def __post_init__(self):
        m = self.group.factors
        n = len(m)
        if len(self.a) != n:
            raise OutOfRange(f"expected {n} entries a_l, got {len(self.a)}")
        for l, v in enumerate(self.a):
            if not 0 <= v < m[l]:
                raise OutOfRange(f"a_{l + 1} = {v} outside [0, {m[l]})")
        for (s, t), v in self.a2.items():
            if not 1 <= s < t <= n:
                raise OutOfRange(f"bad pair index ({s},{t})")
            if not 0 <= v < gcd(m[s - 1], m[t - 1]):
                raise OutOfRange(f"a_{s}{t} = {v} out of range")
        for (r, s, t), v in self.a3.items():
            if not 1 <= r < s < t <= n:
                raise OutOfRange(f"bad triple index ({r},{s},{t})")
            if not 0 <= v < gcd(m[r - 1], m[s - 1], m[t - 1]):
                raise OutOfRange(f"a_{r}{s}{t} = {v} out of range")
        object.__setattr__(self, 'a', tuple(self.a))
        object.__setattr__(self, 'a2', {k: v for k, v in sorted(self.a2.items()) if v})
        object.__setattr__(self, 'a3', {k: v for k, v in sorted(self.a3.items()) if v})

    def __hash__(self):
        return hash((self.group.factors, self.a, tuple(self.a2.items()), tuple(self.a3.items())))

    def __eq__(self, other):
        return (isinstance(other, CocycleParams) and self.group.factors == other.group.factors
                and self.a == other.a and self.a2 == other.a2 and self.a3 == other.a3)

    @classmethod
    def zero(cls, group):
        return cls(group, (0,) * group.rank)

    @classmethod
    def from_sequence(cls, group, values):
        """Flat order: a_1..a_n, then a_st (s<t), then a_rst (r<s<t), lexicographic"""
        n = group.rank
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        triples = list(itertools.combinations(range(1, n + 1), 3))
        values = list(values)
        if len(values) != n + len(pairs) + len(triples):
            raise OutOfRange(f"expected {n + len(pairs) + len(triples)} values, got {len(values)}")
        return cls(group, tuple(values[:n]),
                   dict(zip(pairs, values[n:n + len(pairs)])),
                   dict(zip(triples, values[n + len(pairs):])))

    def to_sequence(self):
        n = self.group.rank
        pairs = itertools.combinations(range(1, n + 1), 2)
        triples = itertools.combinations(range(1, n + 1), 3)
        return (list(self.a) + [self.a2.get(p, 0) for p in pairs]
                + [self.a3.get(t, 0) for t in triples])

    def to_json(self):
        return {
            'factors': list(self.group.factors),
            'a': list(self.a),
            'a2': {f"({s},{t})": v for (s, t), v in self.a2.items()},
            'a3': {f"({r},{s},{t})": v for (r, s, t), v in self.a3.items()},
        }

    @classmethod
    def from_json(cls, data, group=None):
        group = group or build_abelian(data['factors'])
        a = data.get('a', [0] * group.rank)
        return cls(group, tuple(a),
                   {_key(k): v for k, v in data.get('a2', {}).items()},
                   {_key(k): v for k, v in data.get('a3', {}).items()})


def enumerate_params(group):
    """Every parameter vector in the bounded space, in flat lexicographic order"""
    m = group.factors
    n = len(m)
    bounds = list(m)
    bounds += [gcd(m[s], m[t]) for s, t in itertools.combinations(range(n), 2)]
    bounds += [gcd(m[r], m[s], m[t]) for r, s, t in itertools.combinations(range(n), 3)]
    for values in itertools.product(*[range(b) for b in bounds]):
        yield CocycleParams.from_sequence(group, values)


def is_abelian(params):
    """Abelian cocycle iff no triple parameter is set"""
    return not any(params.a3.values())


def eval_omega(params, u, v, w):
    """
    Closed-form value of omega_a(u, v, w)

    Args:
        params: CocycleParams
        u, v, w: Element indices of params.group

    Returns:
        RootOfUnity
    """
    G = params.group
    m = G.factors
    i, j, k = G.vector(u), G.vector(v), G.vector(w)
    e = Fraction(0)
    for l, a in enumerate(params.a):
        if a:
            e += Fraction(a * i[l] * ((j[l] + k[l]) // m[l]), m[l])
    for (s, t), a in params.a2.items():
        e += Fraction(a * k[s - 1] * ((i[t - 1] + j[t - 1]) // m[t - 1]), m[s - 1])
    for (r, s, t), a in params.a3.items():
        e += Fraction(a * k[r - 1] * j[s - 1] * i[t - 1], gcd(m[r - 1], m[s - 1], m[t - 1]))
    return RootOfUnity(e)


def omega_table(params):
    """
    Exponent table of omega_a over all triples, values zeta_N^table with N = m_n

    Returns:
        (numpy array of shape (n, n, n), N)
    """
    G = params.group
    m = G.factors
    N = m[-1] if m else 1
    V = np.array(G.vectors, dtype=np.int64).reshape(G.order, G.rank)
    I = V[:, None, None, :]
    J = V[None, :, None, :]
    K = V[None, None, :, :]

    E = np.zeros((G.order,) * 3, dtype=np.int64)
    for l, a in enumerate(params.a):
        if a:
            E += a * (N // m[l]) * I[..., l] * ((J[..., l] + K[..., l]) // m[l])
    for (s, t), a in params.a2.items():
        E += a * (N // m[s - 1]) * K[..., s - 1] * ((I[..., t - 1] + J[..., t - 1]) // m[t - 1])
    for (r, s, t), a in params.a3.items():
        g = gcd(m[r - 1], m[s - 1], m[t - 1])
        E += a * (N // g) * K[..., r - 1] * J[..., s - 1] * I[..., t - 1]
    return E % N, N


class Cochain3:
    """
    Class for a C*-valued 3-cochain with root-of-unity values zeta_order^k

    Backed either by an exponent table or by an evaluator (u, v, w) -> k.
    """

    def __init__(self, group, order, table=None, evaluator=None):
        if (table is None) == (evaluator is None):
            raise ValueError("exactly one of table / evaluator is required")
        self.group = group
        self.order = int(order)
        self.table = None if table is None else np.asarray(table, dtype=np.int64) % self.order
        self._evaluator = evaluator
        self._abelian = None

    @classmethod
    def from_params(cls, params):
        table, N = omega_table(params)
        cochain = cls(params.group, N, table=table)
        cochain.params = params
        return cochain

    @classmethod
    def trivial(cls, group):
        return cls(group, 1, table=np.zeros((group.order,) * 3, dtype=np.int64))

    def exponent(self, u, v, w):
        if self.table is not None:
            return int(self.table[u, v, w])
        return self._evaluator(u, v, w) % self.order

    def value(self, u, v, w):
        return RootOfUnity.of(self.exponent(u, v, w), self.order)

    __call__ = value

    def as_table(self):
        if self.table is not None:
            return self.table
        n = self.group.order
        return np.array([[[self.exponent(u, v, w) for w in range(n)] for v in range(n)]
                         for u in range(n)], dtype=np.int64)

    def inverse(self):
        if self.table is not None:
            return Cochain3(self.group, self.order, table=-self.table)
        return Cochain3(self.group, self.order, evaluator=lambda u, v, w: -self._evaluator(u, v, w))

    def with_value(self, u, v, w, root):
        """Copy with one entry replaced; root must lie in the ambient order"""
        table = self.as_table().copy()
        order = np.lcm(self.order, root.order)
        table = table * (order // self.order)
        table[u, v, w] = root.numerator * (order // root.order)
        return Cochain3(self.group, int(order), table=table)

    @property
    def group_is_abelian(self):
        if self._abelian is None:
            self._abelian = self.group.is_abelian()
        return self._abelian

    def to_json(self):
        N = self.order
        return [[[str(Fraction(int(k), N)) for k in row] for row in plane] for plane in self.as_table()]


def verify_3cocycle(c):
    """
    Check normalization and delta c = 1 over all quadruples

    Args:
        c: Cochain3 on a group of order <= config.MAX_COCYCLE_CHECK_ORDER

    Returns:
        (bool, witness) where witness names the failing arguments
    """
    G = c.group
    n = G.order
    if n > config.MAX_COCYCLE_CHECK_ORDER:
        raise TooLarge(f"cocycle check limited to |G| <= {config.MAX_COCYCLE_CHECK_ORDER}")
    T = c.as_table()
    e = G.identity
    for axis in range(3):
        face = np.take(T, e, axis=axis)
        if np.any(face):
            a, b = (int(x) for x in np.argwhere(face)[0])
            args = [a, b]
            args.insert(axis, e)
            return False, ('normalization', tuple(args))

    M = G.table
    ar = np.arange(n)
    g1 = ar[:, None, None, None]
    g2 = ar[None, :, None, None]
    g3 = ar[None, None, :, None]
    g4 = ar[None, None, None, :]
    delta = (T[g2, g3, g4] + T[g1, M[g2, g3], g4] + T[g1, g2, g3]
             - T[M[g1, g2], g3, g4] - T[g1, g2, M[g3, g4]]) % c.order
    if np.any(delta):
        quad = tuple(int(x) for x in np.argwhere(delta)[0])
        return False, ('cocycle', quad)
    return True, None


def coboundary(group, f2, order):
    """
    delta f for a 2-cochain given as an exponent table (values zeta_order^f)

    Returns:
        Cochain3
    """
    F = np.asarray(f2, dtype=np.int64)
    M = group.table
    ar = np.arange(group.order)
    x, y, z = ar[:, None, None], ar[None, :, None], ar[None, None, :]
    table = F[y, z] + F[x, M[y, z]] - F[M[x, y], z] - F[x, y]
    return Cochain3(group, order, table=table)


def theta_exponent(c, g, x, y):
    G = c.group
    xy = G.mul(x, y)
    return (c.exponent(g, x, y) + c.exponent(x, y, G.conjugate(g, xy))
            - c.exponent(x, G.conjugate(g, x), y)) % c.order


def gamma_exponent(c, g, x, y):
    G = c.group
    y_g = G.conjugate(y, g)
    return (c.exponent(x, y, g) + c.exponent(g, G.conjugate(x, g), y_g)
            - c.exponent(x, g, y_g)) % c.order


def theta(c, g, x, y):
    """theta_g(x,y) = w(g,x,y) w(x,y,(xy)^-1 g xy) / w(x, x^-1 g x, y)"""
    return RootOfUnity.of(theta_exponent(c, g, x, y), c.order)


def gamma(c, g, x, y):
    """gamma_g(x,y) = w(x,y,g) w(g, g^-1 x g, g^-1 y g) / w(x, g, g^-1 y g)"""
    return RootOfUnity.of(gamma_exponent(c, g, x, y), c.order)


def omega_g(c, g, x, y):
    """omega_g(x,y) = w(g,x,y) w(x,y,g) / w(x,g,y), abelian groups only"""
    if not c.group_is_abelian:
        raise NotAbelian("omega_g is defined for abelian groups")
    k = c.exponent(g, x, y) + c.exponent(x, y, g) - c.exponent(x, g, y)
    return RootOfUnity.of(k, c.order)


def inflate(c, E, pi):
    """
    Pull a cochain back along a surjective homomorphism pi: E -> c.group

    Args:
        c: Cochain3 on G
        E: FiniteGroup
        pi: Sequence of G-indices, one per element of E

    Returns:
        Cochain3 on E evaluating c(pi(u), pi(v), pi(w))
    """
    pi = [int(p) for p in pi]
    if len(pi) != E.order or not E.is_homomorphism_to(c.group, pi):
        raise NotHomomorphism("pi is not a homomorphism")
    if set(pi) != set(c.group.elements()):
        raise NotSurjective("pi is not surjective")
    if pi == list(range(E.order)) and E is c.group:
        return c
    return Cochain3(E, c.order, evaluator=lambda u, v, w: c.exponent(pi[u], pi[v], pi[w]))


@dataclass
class PsiValues:
    """Values of a 3-cochain on the Psi generators; generator indices are 1-based"""

    orders: tuple
    lll: dict
    iij: dict
    ijj: dict
    rst: dict

    def to_json(self):
        fmt = lambda d: {"(" + ",".join(str(i) for i in k) + ")": v.to_json() for k, v in d.items()}
        return {'orders': list(self.orders), 'lll': fmt(self.lll), 'iij': fmt(self.iij),
                'ijj': fmt(self.ijj), 'rst': fmt(self.rst)}

    @classmethod
    def from_json(cls, data):
        parse = lambda d: {tuple(int(i) for i in k.strip('()').split(',')): RootOfUnity.from_json(v)
                           for k, v in d.items()}
        return cls(tuple(data['orders']), parse(data['lll']), parse(data['iij']),
                   parse(data['ijj']), parse(data['rst']))


def f3_pullback(c, generators, orders=None):
    """
    Evaluate c on the images of the Psi generators under the F3 chain map

    Args:
        c: Cochain3 on an abelian group E
        generators: Element indices g_1..g_k generating E as a direct product
        orders: Stated orders n_1..n_k (defaults to the element orders)

    Returns:
        PsiValues
    """
    E = c.group
    if not c.group_is_abelian:
        raise NotAbelian("F3 pullback needs an abelian group")
    gens = [int(g) for g in generators]
    if orders is None:
        orders = [E.element_order(g) for g in gens]
    orders = tuple(int(n) for n in orders)
    for g, n in zip(gens, orders):
        if E.element_order(g) != n:
            raise NotGenerating(f"generator {E.name(g)} has order {E.element_order(g)}, not {n}")
    if len(E.subgroup_generated(gens)) != E.order or int(np.prod(orders)) != E.order:
        raise NotGenerating("generators do not decompose the group as a direct product")

    N = c.order
    powers = [[E.power(g, l) for l in range(n)] for g, n in zip(gens, orders)]
    ex = c.exponent
    k = len(gens)
    root = lambda e: RootOfUnity.of(e % N, N)

    lll, iij, ijj, rst = {}, {}, {}, {}
    for r in range(k):
        g = gens[r]
        lll[(r + 1,) * 3] = root(sum(ex(g, p, g) for p in powers[r]))
    for r, s in itertools.combinations(range(k), 2):
        gr, gs = gens[r], gens[s]
        iij[(r + 1, r + 1, s + 1)] = root(sum(
            ex(p, gr, gs) - ex(p, gs, gr) + ex(gs, p, gr) for p in powers[r]))
        ijj[(r + 1, s + 1, s + 1)] = root(sum(
            ex(gr, p, gs) - ex(p, gr, gs) + ex(p, gs, gr) for p in powers[s]))
    for r, s, t in itertools.combinations(range(k), 3):
        a, b, d = gens[r], gens[s], gens[t]
        rst[(r + 1, s + 1, t + 1)] = root(
            ex(a, b, d) - ex(b, a, d) - ex(a, d, b) + ex(d, a, b) + ex(b, d, a) - ex(d, b, a))
    return PsiValues(orders, lll, iij, ijj, rst)


def is_coboundary(psi):
    """
    Decide whether the Psi values come from a coboundary

    Returns:
        (bool, witness dict (i, j) -> g_ij) ; witness is None when false
    """
    if any(not v.is_one() for v in psi.lll.values()):
        return False, None
    if any(not v.is_one() for v in psi.rst.values()):
        return False, None

    witness = {}
    for (i, _, j), v_iij in psi.iij.items():
        v_ijj = psi.ijj[(i, j, j)]
        n_i, n_j = psi.orders[i - 1], psi.orders[j - 1]
        found = next((g for g in nth_root_solutions(n_i, v_iij) if g ** (-n_j) == v_ijj), None)
        if found is None:
            return False, None
        witness[(i, j)] = found
    return True, witness


def verify_coboundary_witness(psi, witness):
    """Check g_ij^{n_i} = v_iij and g_ij^{-n_j} = v_ijj for a supplied witness"""
    if any(not v.is_one() for v in list(psi.lll.values()) + list(psi.rst.values())):
        return False
    for (i, j), g in witness.items():
        if g ** psi.orders[i - 1] != psi.iij[(i, i, j)]:
            return False
        if g ** (-psi.orders[j - 1]) != psi.ijj[(i, j, j)]:
            return False
    return True
