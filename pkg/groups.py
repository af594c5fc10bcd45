"""
Finite Groups
Cayley-table groups, invariant-factor abelian groups, characters,
monomial representations, central extensions and isomorphism testing
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import prod

import numpy as np

import config
from errors import (BadFactor, ChainViolation, NotACharacter, NotACocycle,
                    NotAbelian, NotAGroup, NotGenerating, TooLarge)
from exactmath import RootOfUnity

logger = logging.getLogger(__name__)


class FiniteGroup:
    """Class to hold a finite group as a validated Cayley table"""

    def __init__(self, table, names=None):
        """
        Initialize and verify the group law

        Args:
            table: n x n array, table[a, b] = index of a*b
            names: Optional element labels
        """
        self.table = np.asarray(table, dtype=np.int64)
        self.order = int(self.table.shape[0])
        self.names = list(names) if names is not None else None
        self._orders = None
        self._validate()

    def _validate(self):
        n = self.order
        if self.table.shape != (n, n) or self.table.min() < 0 or self.table.max() >= n:
            raise NotAGroup("table must be square with entries in range")

        ar = np.arange(n)
        identity = [e for e in range(n)
                    if np.array_equal(self.table[e], ar) and np.array_equal(self.table[:, e], ar)]
        if not identity:
            raise NotAGroup("no identity element")
        self.identity = identity[0]

        inverse = np.full(n, -1, dtype=np.int64)
        for a in range(n):
            hits = np.flatnonzero(self.table[a] == self.identity)
            if len(hits) != 1 or self.table[hits[0], a] != self.identity:
                raise NotAGroup(f"element {a} has no two-sided inverse")
            inverse[a] = hits[0]
        self.inverse = inverse

        # (ab)c == a(bc), one row of a at a time
        for a in range(n):
            left = self.table[self.table[a][:, None], ar[None, :]]
            right = self.table[a][self.table]
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")

    def __len__(self):
        return self.order

    def elements(self):
        return range(self.order)

    def mul(self, a, b):
        return int(self.table[a, b])

    def mul_many(self, *elements):
        result = self.identity
        for g in elements:
            result = int(self.table[result, g])
        return result

    def inv(self, a):
        return int(self.inverse[a])

    def power(self, a, k):
        base = a if k >= 0 else self.inv(a)
        result = self.identity
        for _ in range(abs(k)):
            result = int(self.table[result, base])
        return result

    def element_order(self, a):
        if self._orders is None:
            orders = []
            for g in range(self.order):
                k, x = 1, g
                while x != self.identity:
                    x = int(self.table[x, g])
                    k += 1
                orders.append(k)
            self._orders = orders
        return self._orders[a]

    def conjugate(self, g, x):
        """g^x = x^-1 g x"""
        return self.mul_many(self.inv(x), g, x)

    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def commute(self, a, b):
        return self.table[a, b] == self.table[b, a]

    def center(self):
        return [z for z in range(self.order) if np.array_equal(self.table[z], self.table[:, z])]

    def centralizer(self, s):
        return [g for g in range(self.order) if self.commute(g, s)]

    def conjugacy_class(self, s):
        return sorted({self.mul_many(g, s, self.inv(g)) for g in range(self.order)})

    def subgroup_generated(self, gens):
        span = {self.identity}
        queue = deque([self.identity])
        while queue:
            a = queue.popleft()
            for g in gens:
                b = int(self.table[a, g])
                if b not in span:
                    span.add(b)
                    queue.append(b)
        return sorted(span)

    def commutator_subgroup(self):
        commutators = {self.mul_many(self.inv(a), self.inv(b), a, b)
                       for a in range(self.order) for b in range(self.order)}
        return self.subgroup_generated(sorted(commutators))

    def name(self, a):
        return self.names[a] if self.names is not None else str(a)

    def index_of(self, name):
        if self.names is None or name not in self.names:
            raise KeyError(f"unknown element name {name!r}")
        return self.names.index(name)

    def is_homomorphism_to(self, other, mapping):
        """mapping: sequence of indices in other, one per element of self"""
        phi = np.asarray(mapping, dtype=np.int64)
        return bool(np.array_equal(phi[self.table], other.table[phi[:, None], phi[None, :]]))

    def to_json(self):
        return {'table': self.table.tolist(), 'names': self.names}


class FiniteAbelianGroup(FiniteGroup):
    """Class to hold Z_m1 x ... x Z_mn with m_i | m_{i+1}, elements as exponent vectors"""

    def __init__(self, factors):
        self.factors = tuple(int(m) for m in factors)
        self.rank = len(self.factors)
        self._strides = tuple(prod(self.factors[l + 1:]) for l in range(self.rank))
        self.vectors = [tuple(v) for v in itertools.product(*[range(m) for m in self.factors])]

        n = len(self.vectors)
        table = np.zeros((n, n), dtype=np.int64)
        for a, u in enumerate(self.vectors):
            for b, v in enumerate(self.vectors):
                table[a, b] = self.index([x + y for x, y in zip(u, v)])
        super().__init__(table, names=[self._label(v) for v in self.vectors])

    def index(self, vector):
        return sum((int(v) % m) * s for v, m, s in zip(vector, self.factors, self._strides))

    def vector(self, a):
        return self.vectors[a]

    def generator(self, l):
        """Index of g_{l+1} (0-based l)"""
        return self.index([1 if i == l else 0 for i in range(self.rank)])

    @staticmethod
    def _label(vector):
        parts = []
        for l, e in enumerate(vector):
            if e == 1:
                parts.append(f"g{l + 1}")
            elif e > 1:
                parts.append(f"g{l + 1}^{e}")
        return " ".join(parts) or "1"

    def to_json(self):
        return {'abelian': list(self.factors)}


def build_abelian(factors):
    """
    Build an abelian group in invariant-factor form

    Args:
        factors: Invariant factors m_1 | m_2 | ... (may be empty for the trivial group)

    Returns:
        FiniteAbelianGroup
    """
    factors = list(factors)
    for m in factors:
        if m < 2:
            raise BadFactor(f"invariant factor {m} < 2")
    for m, n in zip(factors, factors[1:]):
        if n % m:
            raise ChainViolation(f"{m} does not divide {n}")
    return FiniteAbelianGroup(factors)


def cyclic(m):
    return build_abelian([m])


D8_NAMES = ["1", "x", "x^2", "x^3", "y", "xy", "x^2y", "x^3y"]


def dihedral8():
    """
    Dihedral group of order 8 = <x, y | y^2 = x^4 = 1, yxy = x^-1>

    Element x^i y^j has index i + 4j.
    """
    table = np.zeros((8, 8), dtype=np.int64)
    for i, j, k, l in itertools.product(range(4), range(2), range(4), range(2)):
        # y^j x^k = x^((-1)^j k) y^j
        table[i + 4 * j, k + 4 * l] = (i + (-1) ** j * k) % 4 + 4 * ((j + l) % 2)
    return FiniteGroup(table, names=D8_NAMES)


@dataclass(frozen=True)
class Character:
    """Class for a character of a FiniteAbelianGroup: g^v -> prod zeta_{m_l}^{c_l v_l}"""

    group: FiniteAbelianGroup
    exponents: tuple

    def value(self, a):
        v = self.group.vector(a)
        return RootOfUnity(sum(Fraction(c * x, m)
                               for c, x, m in zip(self.exponents, v, self.group.factors)))

    def __mul__(self, other):
        return Character(self.group, tuple((c + d) % m for c, d, m in
                                           zip(self.exponents, other.exponents, self.group.factors)))


def characters(group):
    """All characters of an abelian group, in exponent-vector order"""
    return [Character(group, tuple(v)) for v in group.vectors]


def abelian_subgroup_characters(group, elements):
    """
    Characters of the abelian subgroup formed by `elements` of any FiniteGroup

    Returns:
        List of dicts element -> RootOfUnity, deterministic order
    """
    elements = sorted(elements)
    for a in elements:
        for b in elements:
            if not group.commute(a, b):
                raise NotAbelian(f"{group.name(a)} and {group.name(b)} do not commute")

    gens, span = [], [group.identity]
    for a in elements:
        if a not in span:
            gens.append(a)
            span = group.subgroup_generated(gens)

    result = []
    for ks in itertools.product(*[range(group.element_order(g)) for g in gens]):
        values = {group.identity: RootOfUnity.one()}
        images = [RootOfUnity.of(k, group.element_order(g)) for k, g in zip(ks, gens)]
        queue, consistent = deque([group.identity]), True
        while queue and consistent:
            a = queue.popleft()
            for g, img in zip(gens, images):
                b = group.mul(a, g)
                val = values[a] * img
                if b in values:
                    if values[b] != val:
                        consistent = False
                        break
                else:
                    values[b] = val
                    queue.append(b)
        if consistent:
            result.append(values)
    return result


class MonomialRep:
    """
    Class for a monomial representation of a subgroup of a FiniteGroup

    Each element maps basis vector k to scalar * basis vector perm[k].
    Degree-1 characters are the special case of degree 1.
    """

    def __init__(self, group, elements, images):
        self.group = group
        self.elements = sorted(elements)
        self.images = dict(images)
        self.degree = len(next(iter(self.images.values()))[0])
        self._verify()

    @classmethod
    def from_character(cls, group, elements, values):
        """values: dict element -> RootOfUnity on every element of the subgroup"""
        return cls(group, elements, {g: ((0,), (values[g],)) for g in elements})

    @classmethod
    def from_generators(cls, group, elements, generator_images):
        """
        Extend images of generators to the generated subgroup

        Args:
            group: FiniteGroup
            elements: Subgroup elements
            generator_images: dict generator -> (perm tuple, scalar tuple)
        """
        degree = len(next(iter(generator_images.values()))[0])
        images = {group.identity: (tuple(range(degree)), (RootOfUnity.one(),) * degree)}
        queue = deque([group.identity])
        while queue:
            a = queue.popleft()
            for g, img in generator_images.items():
                b = group.mul(a, g)
                composed = _compose(images[a], img)
                if b in images:
                    if images[b] != composed:
                        raise NotACharacter(f"relation violated at {group.name(b)}")
                else:
                    images[b] = composed
                    queue.append(b)
        if sorted(images) != sorted(elements):
            raise NotGenerating("generator images do not generate the given subgroup")
        return cls(group, elements, images)

    @classmethod
    def from_generator_values(cls, group, elements, generator_values):
        """Degree-1 version of from_generators: dict generator -> RootOfUnity"""
        return cls.from_generators(group, elements,
                                   {g: ((0,), (v,)) for g, v in generator_values.items()})

    def _verify(self):
        if sorted(self.images) != self.elements:
            raise NotACharacter("representation must be defined on the whole subgroup")
        for a in self.elements:
            for b in self.elements:
                if self.images[self.group.mul(a, b)] != _compose(self.images[a], self.images[b]):
                    raise NotACharacter(
                        f"not multiplicative at ({self.group.name(a)}, {self.group.name(b)})")

    def act(self, g, k):
        """rho(g) v_k = scalar * v_k'; returns (k', scalar)"""
        perm, scalars = self.images[g]
        return perm[k], scalars[k]

    def character_value(self, g):
        """Only meaningful for degree 1"""
        return self.images[g][1][0]


def _compose(first, second):
    """Images of rho(a) and rho(b); returns the image of rho(ab) = rho(a) rho(b)"""
    perm_a, sc_a = first
    perm_b, sc_b = second
    perm = tuple(perm_a[perm_b[k]] for k in range(len(perm_b)))
    scalars = tuple(sc_b[k] * sc_a[perm_b[k]] for k in range(len(perm_b)))
    return perm, scalars


def central_extension(K, Hhat, Fhat):
    """
    Build Hhat x_F K with (rho1,k1)(rho2,k2) = (rho1 rho2 F(k1,k2), k1 k2)

    Args:
        K: FiniteAbelianGroup
        Hhat: FiniteAbelianGroup (character group of H)
        Fhat: |K| x |K| array of Hhat indices

    Returns:
        FiniteGroup; element (rho, k) has index rho * |K| + k
    """
    F = np.asarray(Fhat, dtype=np.int64)
    nK, nH = K.order, Hhat.order
    e = K.identity
    if np.any(F[e, :] != Hhat.identity) or np.any(F[:, e] != Hhat.identity):
        raise NotACocycle("F is not normalized")

    ar = np.arange(nK)
    K1, K2, K3 = ar[:, None, None], ar[None, :, None], ar[None, None, :]
    Hm, Km = Hhat.table, K.table
    lhs = Hm[F[K1, K2], F[Km[K1, K2], K3]]
    rhs = Hm[F[K2, K3], F[K1, Km[K2, K3]]]
    if not np.array_equal(lhs, rhs):
        witness = tuple(int(i) for i in np.argwhere(lhs != rhs)[0])
        raise NotACocycle(f"2-cocycle identity fails at {witness}", witness=witness)

    n = nH * nK
    table = np.zeros((n, n), dtype=np.int64)
    for r1, k1, r2, k2 in itertools.product(range(nH), range(nK), range(nH), range(nK)):
        rho = Hm[Hm[r1, r2], F[k1, k2]]
        table[r1 * nK + k1, r2 * nK + k2] = rho * nK + Km[k1, k2]
    names = [f"({Hhat.name(r)}|{K.name(k)})" for r in range(nH) for k in range(nK)]
    logger.debug(f"central extension of order {n} built")
    return FiniteGroup(table, names=names)


def fingerprint(G):
    return (G.order,
            tuple(sorted(G.element_order(a) for a in G.elements())),
            len(G.center()),
            G.is_abelian(),
            len(G.commutator_subgroup()))


def _generating_set(G):
    ranked = sorted(G.elements(), key=lambda a: (-G.element_order(a), a))
    gens, span = [], [G.identity]
    for a in ranked:
        if len(span) == G.order:
            break
        if a not in span:
            gens.append(a)
            span = G.subgroup_generated(gens)
    return gens


def _extend(G1, G2, gens, images):
    """Extend generator images along the Cayley graph; None on conflict"""
    phi = {G1.identity: G2.identity}
    queue = deque([G1.identity])
    while queue:
        a = queue.popleft()
        for g, img in zip(gens, images):
            b = G1.mul(a, g)
            val = G2.mul(phi[a], img)
            if b in phi:
                if phi[b] != val:
                    return None
            else:
                phi[b] = val
                queue.append(b)
    if len(set(phi.values())) != len(phi):
        return None
    return phi


def is_isomorphic(G1, G2):
    """
    Decide isomorphism of two small groups

    Args:
        G1, G2: FiniteGroup of order <= config.MAX_ISOMORPHISM_ORDER

    Returns:
        (bool, witness dict element of G1 -> element of G2 or None)
    """
    bound = config.MAX_ISOMORPHISM_ORDER
    if G1.order > bound or G2.order > bound:
        raise TooLarge(f"isomorphism testing is limited to order {bound}")
    if fingerprint(G1) != fingerprint(G2):
        return False, None

    gens = _generating_set(G1)
    candidates = [[b for b in G2.elements() if G2.element_order(b) == G1.element_order(g)]
                  for g in gens]

    def search(depth, images):
        phi = _extend(G1, G2, gens[:depth], images)
        if phi is None:
            return None
        if depth == len(gens):
            return phi
        for b in candidates[depth]:
            found = search(depth + 1, images + [b])
            if found is not None:
                return found
        return None

    phi = search(0, [])
    if phi is None or len(phi) != G1.order:
        return False, None
    mapping = [phi[a] for a in G1.elements()]
    if not G1.is_homomorphism_to(G2, mapping):
        return False, None
    return True, phi


def invariant_factors_of(G):
    """
    Invariant factors of an abelian group given by its table, unit factors dropped
    """
    if not G.is_abelian():
        raise NotAbelian("invariant factors need an abelian group")
    n = G.order
    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    orders = [G.element_order(a) for a in G.elements()]

    exponent_lists = []
    for p in primes:
        # |G[p^k]| = p^(sum_i min(k, e_i))
        logs, k = [0], 0
        while True:
            k += 1
            count = sum(1 for o in orders if (p ** k) % o == 0)
            logs.append(round(np.log(count) / np.log(p)))
            if logs[-1] == logs[-2]:
                break
        at_least = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
        exps = [sum(1 for r in at_least if r >= i) for i in range(1, at_least[0] + 1)] if at_least else []
        exponent_lists.append((p, sorted(exps, reverse=True)))

    width = max((len(e) for _, e in exponent_lists), default=0)
    factors = []
    for i in range(width):
        factors.append(prod(p ** exps[i] for p, exps in exponent_lists if i < len(exps)))
    return sorted(f for f in factors if f > 1)


@dataclass(frozen=True)
class ConjugacyData:
    class_elements: tuple
    coset_reps: tuple
    centralizer: tuple


def conjugacy_data(G, s):
    """
    Class of s, coset representatives g_i with g_i s g_i^-1 = t_i, and the centralizer

    t_1 = s; remaining class elements by index; each g_i is the least index conjugator.
    """
    others = [t for t in G.conjugacy_class(s) if t != s]
    class_elements = [s] + others
    reps = []
    for t in class_elements:
        reps.append(next(g for g in G.elements() if G.mul_many(g, s, G.inv(g)) == t))
    return ConjugacyData(tuple(class_elements), tuple(reps), tuple(G.centralizer(s)))


def group_from_json(data):
    """
    Group description: {"abelian": [...]}, {"named": "D8"} or
    {"central_extension": {"K": [...], "Hhat": [...], "Fhat": table}}
    """
    if 'abelian' in data:
        return build_abelian(data['abelian'])
    if 'named' in data:
        if data['named'].upper() != 'D8':
            raise KeyError(f"unknown named group {data['named']!r}")
        return dihedral8()
    if 'central_extension' in data:
        spec = data['central_extension']
        return central_extension(build_abelian(spec['K']), build_abelian(spec['Hhat']), spec['Fhat'])
    raise KeyError("group description needs 'abelian', 'named' or 'central_extension'")
