"""
Nichols Algebra Data over D8
Yetter-Drinfeld modules M(O, rho) with monomial action, their braidings,
diagonal-type restriction with generalized Dynkin diagrams, the quantum
symmetrizer oracle, adjoint powers, Cartan matrices, skeletons and the
decision pipeline for triples of simple modules
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import config
from errors import (DegreeTooHigh, NotACharacter, NotAbelianSupport,
                    NotASkeleton, TqdError)
from exactmath import (RootOfUnity, cyclotomic_rank, is_zero_scalar,
                       scalar_mul, scalar_to_json)
from groups import (MonomialRep, abelian_subgroup_characters, conjugacy_data,
                    dihedral8)
from tqd import accumulate_term, tensors_equal

logger = logging.getLogger(__name__)


class YDModule:
    """
    Class for the simple Yetter-Drinfeld module M(O_s, rho)

    Basis vector i * deg(rho) + k is g_i v_k, with g_i the coset representative
    sending s to the i-th class element t_i. Its degree is t_i.
    """

    def __init__(self, group, s, rho, names=None, name=None):
        data = conjugacy_data(group, s)
        if list(rho.elements) != sorted(data.centralizer):
            raise NotACharacter("representation must live on the centralizer of the class representative")
        self.group = group
        self.s = s
        self.rho = rho
        self.name = name or f"M({group.name(s)})"
        self.class_elements = list(data.class_elements)
        self.coset_reps = list(data.coset_reps)
        self.dim = len(self.class_elements) * rho.degree

        names = list(names) if names else [f"v{k + 1}" for k in range(rho.degree)]
        self.labels = []
        for g in self.coset_reps:
            for k in range(rho.degree):
                self.labels.append(f"{group.name(g)}{names[k]}")

    @property
    def support(self):
        return list(self.class_elements)

    def degree(self, b):
        return self.class_elements[b // self.rho.degree]

    def act(self, g, b):
        """g > (g_i v_k) = g_j rho(g_j^-1 g g_i) v_k; returns (basis index, scalar)"""
        G = self.group
        i, k = divmod(b, self.rho.degree)
        t = G.mul_many(g, self.class_elements[i], G.inv(g))
        j = self.class_elements.index(t)
        gamma = G.mul_many(G.inv(self.coset_reps[j]), g, self.coset_reps[i])
        k2, scalar = self.rho.act(gamma, k)
        return j * self.rho.degree + k2, scalar

    def verify_yd(self):
        """degree(g > b) = g degree(b) g^-1 for all g and basis b"""
        G = self.group
        for g in G.elements():
            for b in range(self.dim):
                image, _ = self.act(g, b)
                if self.degree(image) != G.mul_many(g, self.degree(b), G.inv(g)):
                    return False, (G.name(g), self.labels[b])
        return True, None

    def to_json(self):
        return {'name': self.name, 'class_rep': self.group.name(self.s), 'dim': self.dim,
                'labels': self.labels, 'rho_degree': self.rho.degree}


def yd_module(G, s, rho, names=None, name=None):
    """
    Args:
        G: FiniteGroup
        s: Class representative
        rho: MonomialRep of the centralizer, or dict centralizer element -> RootOfUnity
    """
    if not isinstance(rho, MonomialRep):
        rho = MonomialRep.from_character(G, G.centralizer(s), rho)
    return YDModule(G, s, rho, names=names, name=name)


# The six simple modules of D8 used below, as JSON specs

D8_MODULE_SPECS = {
    'M1': {'group': 'D8', 'class_rep': 'x^2', 'names': ['u1', 'u2'],
           'rep': {'x': {'perm': [1, 0], 'scalars': ['0', '1/2']},
                   'y': {'perm': [1, 0], 'scalars': ['1/2', '1/2']}}},
    'M2': {'group': 'D8', 'class_rep': 'x', 'names': ['v'], 'character': {'x': '1/2'}},
    'M3': {'group': 'D8', 'class_rep': 'y', 'names': ['w1'], 'character': {'y': '1/2', 'x^2': '1/2'}},
    'M4': {'group': 'D8', 'class_rep': 'y', 'names': ['w2'], 'character': {'y': '1/2', 'x^2': '0'}},
    'M5': {'group': 'D8', 'class_rep': 'xy', 'names': ['w3'], 'character': {'xy': '1/2', 'x^2': '1/2'}},
    'M6': {'group': 'D8', 'class_rep': 'xy', 'names': ['w4'], 'character': {'xy': '1/2', 'x^2': '0'}},
}


@lru_cache(maxsize=None)
def _d8():
    return dihedral8()


def module_from_json(data, name=None):
    """
    Module spec {"group": "D8", "class_rep": ..., "character" | "rep": ..., "names": [...]}

    Character values and scalars are exponent fractions "k/N" of zeta_N^k,
    given on generators of the centralizer.
    """
    if data.get('group', 'D8').upper() != 'D8':
        raise KeyError(f"unsupported group {data.get('group')!r}")
    G = _d8()
    s = G.index_of(data['class_rep'])
    elements = G.centralizer(s)
    if 'character' in data:
        values = {G.index_of(g): RootOfUnity(Fraction(v)) for g, v in data['character'].items()}
        rho = MonomialRep.from_generator_values(G, elements, values)
    elif 'rep' in data:
        images = {G.index_of(g): (tuple(img['perm']),
                                  tuple(RootOfUnity(Fraction(v)) for v in img['scalars']))
                  for g, img in data['rep'].items()}
        rho = MonomialRep.from_generators(G, elements, images)
    else:
        raise KeyError("module spec needs 'character' or 'rep'")
    return YDModule(G, s, rho, names=data.get('names'), name=name or data.get('name'))


def d8_module(name):
    """One of M1..M6"""
    if name not in D8_MODULE_SPECS:
        raise KeyError(f"unknown D8 module {name!r}")
    return module_from_json(D8_MODULE_SPECS[name], name=name)


class BraidedSpace:
    """Class for the direct sum of YD modules with c(a (x) b) = (deg(a) > b) (x) a"""

    def __init__(self, modules):
        if not modules:
            raise ValueError("need at least one module")
        self.modules = list(modules)
        self.group = modules[0].group
        for M in modules[1:]:
            if M.group is not self.group and not (M.group.table == self.group.table).all():
                raise ValueError("modules must live over the same group")
        self.offsets = []
        self.basis, self.labels, self.degrees = [], [], []
        for mi, M in enumerate(self.modules):
            self.offsets.append(len(self.basis))
            for b in range(M.dim):
                self.basis.append((mi, b))
                self.labels.append(M.labels[b])
                self.degrees.append(M.degree(b))

    @property
    def dim(self):
        return len(self.basis)

    def module_basis(self, i):
        return list(range(self.offsets[i], self.offsets[i] + self.modules[i].dim))

    def index_of(self, label):
        if label not in self.labels:
            raise KeyError(f"unknown basis label {label!r}")
        return self.labels.index(label)

    def act(self, g, v):
        mi, b = self.basis[v]
        image, scalar = self.modules[mi].act(g, b)
        return self.offsets[mi] + image, scalar

    def c(self, v, w):
        """c(v (x) w) = scalar * (w' (x) v)"""
        image, scalar = self.act(self.degrees[v], w)
        return (image, v), scalar

    def c_squared(self, v, w):
        (w2, v2), s1 = self.c(v, w)
        (v3, w3), s2 = self.c(w2, v2)
        return (v3, w3), s1 * s2


def _apply_c_word(space, word, pos):
    (a, b), scalar = space.c(word[pos], word[pos + 1])
    return word[:pos] + (a, b) + word[pos + 2:], scalar


def apply_c(space, tensor, pos):
    """c acting in positions (pos, pos+1) of a sparse tensor"""
    result = {}
    for word, coeff in tensor.items():
        new_word, scalar = _apply_c_word(space, word, pos)
        accumulate_term(result, new_word, scalar_mul(coeff, scalar))
    return result


def verify_braid_equation(space):
    """(c x id)(id x c)(c x id) = (id x c)(c x id)(id x c) on every basis triple"""
    n = space.dim
    for triple in itertools.product(range(n), repeat=3):
        left, right = triple, triple
        s_left = s_right = RootOfUnity.one()
        for pos in (0, 1, 0):
            left, s = _apply_c_word(space, left, pos)
            s_left = s_left * s
        for pos in (1, 0, 1):
            right, s = _apply_c_word(space, right, pos)
            s_right = s_right * s
        if left != right or s_left != s_right:
            return False, [space.labels[v] for v in triple]
    return True, None


def braiding(modules):
    """
    Braided space of a list of modules over one group, braid equation checked

    Returns:
        BraidedSpace
    """
    space = BraidedSpace(modules)
    images = {space.c(v, w)[0] for v in range(space.dim) for w in range(space.dim)}
    if len(images) != space.dim ** 2:
        raise TqdError("braiding is not invertible")
    ok, witness = verify_braid_equation(space)
    if not ok:
        raise TqdError(f"braid equation fails at {witness}")
    logger.debug(f"braiding on {space.dim} basis vectors verified")
    return space


def braiding_defect(space, a, b):
    """
    (id - c^2)(a (x) b) for basis vectors given by index or label

    Returns:
        Sparse dict pair -> scalar, empty when c^2 fixes a (x) b
    """
    a = space.index_of(a) if isinstance(a, str) else a
    b = space.index_of(b) if isinstance(b, str) else b
    result = {(a, b): RootOfUnity.one()}
    pair, scalar = space.c_squared(a, b)
    accumulate_term(result, pair, -scalar)
    return result


def defect_witness(space, i, j):
    """First basis tensor of M_i (x) M_j with nonzero (id - c^2) image, or None"""
    for a in space.module_basis(i):
        for b in space.module_basis(j):
            if braiding_defect(space, a, b):
                return space.labels[a], space.labels[b]
    return None


def is_braid_indecomposable(modules):
    """
    (id - c^2)(M_i (x) M_j) != 0 for every pair of modules; one module is paired with itself

    Returns:
        (bool, witness) with witness {"(i,j)": [label, label]} on success,
        or {"pair": [i, j]} naming the first vanishing pair
    """
    if len(modules) == 1:
        space = braiding(list(modules) * 2)
        pairs = [(0, 1)]
    else:
        space = braiding(modules)
        pairs = list(itertools.combinations(range(len(modules)), 2))
    witnesses = {}
    for i, j in pairs:
        found = defect_witness(space, i, j)
        if found is None:
            return False, {'pair': [i, j]}
        witnesses[f"({i},{j})"] = list(found)
    return True, witnesses


# Diagonal type

@dataclass
class Eigenvector:
    label: str
    coeffs: dict
    degree: int
    character: dict

    def to_json(self, space):
        return {'label': self.label,
                'coeffs': {space.labels[v]: c.to_json() for v, c in sorted(self.coeffs.items())}}


@dataclass
class DynkinDiagram:
    """Class for a generalized Dynkin diagram: vertex labels q_ii, edge labels q_ij q_ji != 1"""

    vertices: list
    edges: dict
    labels: list = field(default_factory=list)

    @property
    def rank(self):
        return len(self.vertices)

    def to_json(self):
        names = self.labels or [str(i) for i in range(self.rank)]
        return {
            'vertices': [{'label': names[i], 'q': q.to_json()} for i, q in enumerate(self.vertices)],
            'edges': [{'pair': [names[i], names[j]], 'q': q.to_json()}
                      for (i, j), q in sorted(self.edges.items())],
        }


def diagram_from_matrix(matrix, labels=None):
    n = len(matrix)
    edges = {}
    for i, j in itertools.combinations(range(n), 2):
        q = matrix[i][j] * matrix[j][i]
        if not q.is_one():
            edges[(i, j)] = q
    return DynkinDiagram([matrix[i][i] for i in range(n)], edges, list(labels or []))


def dynkin_isomorphic(d1, d2):
    """Labeled-graph isomorphism by vertex permutation; returns (bool, permutation)"""
    if d1.rank != d2.rank or len(d1.edges) != len(d2.edges):
        return False, None
    if sorted(d1.vertices) != sorted(d2.vertices):
        return False, None
    edge2 = lambda i, j: d2.edges.get((min(i, j), max(i, j)))
    for perm in itertools.permutations(range(d1.rank)):
        if any(d1.vertices[i] != d2.vertices[perm[i]] for i in range(d1.rank)):
            continue
        if all(edge2(perm[i], perm[j]) == q for (i, j), q in d1.edges.items()):
            return True, list(perm)
    return False, None


def _acting_subgroup(space):
    G = space.group
    support = sorted(set(space.degrees))
    A = G.subgroup_generated(support)
    for a, b in itertools.combinations(A, 2):
        if not G.commute(a, b):
            raise NotAbelianSupport(f"supports generate a nonabelian subgroup ({G.name(a)}, {G.name(b)})")
    return sorted(A)


def _eigenbasis(space, A, psis):
    eigen, covered, counter = [], set(), 0
    for v0 in range(space.dim):
        if v0 in covered:
            continue
        images = [(a,) + space.act(a, v0) for a in A]
        lam = {a: s for a, w, s in images if w == v0}
        reps = {}
        for a, w, s in images:
            reps.setdefault(w, (a, s))
        orbit = sorted(reps)
        covered.update(orbit)

        vectors = []
        for psi in psis:
            if any(psi[a] != lam[a] for a in lam):
                continue
            coeffs = {w: psi[a].inverse() * s for w, (a, s) in reps.items()}
            key = tuple(coeffs[w].exponent for w in orbit if w != v0)
            vectors.append((key, coeffs, psi))
        vectors.sort(key=lambda item: item[0])
        for _, coeffs, psi in vectors:
            if len(orbit) == 1:
                label = space.labels[v0]
            else:
                counter += 1
                label = f"t{counter}"
            eigen.append(Eigenvector(label, coeffs, space.degrees[v0], psi))
    return eigen


def _transport_check(space, eigen, matrix):
    """c(v_i (x) v_j) = q_ij v_j (x) v_i, evaluated through the original braiding"""
    for i, vi in enumerate(eigen):
        for j, vj in enumerate(eigen):
            lhs, rhs = {}, {}
            for p, cp in vi.coeffs.items():
                for q, cq in vj.coeffs.items():
                    pair, s = space.c(p, q)
                    accumulate_term(lhs, pair, cp * cq * s)
                    accumulate_term(rhs, (q, p), cp * cq * matrix[i][j])
            if not tensors_equal(lhs, rhs):
                raise TqdError(f"eigenbasis does not diagonalize c at ({vi.label}, {vj.label})")


def diagonalize_braiding(modules):
    """
    Simultaneous eigenbasis of the action of the abelian group generated by the supports

    Returns:
        (matrix of RootOfUnity q_ij, list of Eigenvector, DynkinDiagram)
    """
    space = braiding(modules)
    G = space.group
    A = _acting_subgroup(space)
    psis = abelian_subgroup_characters(G, A)
    eigen = _eigenbasis(space, A, psis)
    matrix = [[vj.character[vi.degree] for vj in eigen] for vi in eigen]
    _transport_check(space, eigen, matrix)
    labels = [v.label for v in eigen]
    logger.info(f"[OK] diagonal braiding on {labels}")
    return matrix, eigen, diagram_from_matrix(matrix, labels)


def matrix_to_json(matrix):
    return [[q.to_json() for q in row] for row in matrix]


def matrix_from_json(rows):
    return [[RootOfUnity(Fraction(q)) for q in row] for row in rows]


# Quantum symmetrizer

@lru_cache(maxsize=None)
def _reduced_words(n):
    """Bubble-sort reduced words, one per permutation of n letters"""
    words = []
    for perm in itertools.permutations(range(n)):
        p, word = list(perm), []
        for end in range(n - 1, 0, -1):
            for i in range(end):
                if p[i] > p[i + 1]:
                    p[i], p[i + 1] = p[i + 1], p[i]
                    word.append(i)
        words.append(tuple(word))
    return tuple(words)


def _degree(tensor):
    degrees = {len(word) for word in tensor}
    if len(degrees) > 1:
        raise ValueError("tensor is not homogeneous")
    return degrees.pop() if degrees else 0


def symmetrize(space, tensor):
    """Sum over S_n of the braided lifts of reduced words"""
    n = _degree(tensor)
    if n > config.MAX_SYMMETRIZER_DEGREE:
        raise DegreeTooHigh(f"symmetrizer is limited to degree {config.MAX_SYMMETRIZER_DEGREE}")
    total = {}
    for word in _reduced_words(n):
        image = dict(tensor)
        for pos in reversed(word):
            image = apply_c(space, image, pos)
        for key, coeff in image.items():
            accumulate_term(total, key, coeff)
    return {k: v for k, v in total.items() if not is_zero_scalar(v)}


def is_zero_in_nichols(space, tensor):
    """Degree-n element of T(V) vanishes in the Nichols algebra iff its symmetrizer image is zero"""
    return not symmetrize(space, tensor)


def symmetrizer_rank(space, tensors):
    """Dimension of the span of the images of homogeneous tensors in the Nichols algebra"""
    return cyclotomic_rank(symmetrize(space, t) for t in tensors)


# Braided adjoint

def act_tensor(space, g, tensor):
    result = {}
    for word, coeff in tensor.items():
        scalar, new_word = RootOfUnity.one(), []
        for v in word:
            image, s = space.act(g, v)
            scalar = scalar * s
            new_word.append(image)
        accumulate_term(result, tuple(new_word), scalar_mul(coeff, scalar))
    return result


def ad(space, x, z):
    """ad x(z) = x z - (deg(x) > z) x for a basis vector x"""
    result = {}
    for word, coeff in z.items():
        accumulate_term(result, (x,) + word, coeff)
    for word, coeff in act_tensor(space, space.degrees[x], z).items():
        accumulate_term(result, word + (x,), -coeff)
    return result


@dataclass
class AdjointPower:
    nonzero: bool
    rank: int
    elements: list


def adjoint_power(space, i, j, m):
    """
    (ad M_i)^m (M_j) spanned by ad x_1 ... ad x_m (y) over basis x_l of M_i, y of M_j

    Returns:
        AdjointPower with the Nichols-algebra rank of the span
    """
    if m + 1 > config.MAX_SYMMETRIZER_DEGREE:
        raise DegreeTooHigh(f"ad^{m} needs degree {m + 1} > {config.MAX_SYMMETRIZER_DEGREE}")
    xs = space.module_basis(i)
    current = [{(y,): RootOfUnity.one()} for y in space.module_basis(j)]
    for _ in range(m):
        current = [ad(space, x, z) for x in xs for z in current]
    images = [symmetrize(space, t) for t in current]
    rank = cyclotomic_rank(images)
    return AdjointPower(rank > 0, rank, current)


def cartan_entry(space, i, j, cap):
    """-max{m : ad^m != 0}, or the string '<=-cap' when ad^cap still survives"""
    ranks = []
    for m in range(1, cap + 1):
        result = adjoint_power(space, i, j, m)
        ranks.append(result.rank)
        if not result.nonzero:
            return -(m - 1), ranks
    return f"<=-{cap}", ranks


def cartan_data(modules, cap=None):
    """
    Generalized Cartan matrix with the ad ranks certifying each entry

    Returns:
        (matrix, certificates dict "(i,j)" -> ranks of ad^1..ad^m)
    """
    cap = cap or config.DEFAULT_CARTAN_CAP
    if cap + 1 > config.MAX_SYMMETRIZER_DEGREE:
        raise DegreeTooHigh(f"cap {cap} needs symmetrizer degree {cap + 1}")
    space = braiding(modules)
    n = len(modules)
    matrix = [[2 if i == j else None for j in range(n)] for i in range(n)]
    certificates = {}
    for i, j in itertools.permutations(range(n), 2):
        matrix[i][j], certificates[f"({i},{j})"] = cartan_entry(space, i, j, cap)
    return matrix, certificates


def cartan_matrix(modules, cap=None):
    return cartan_data(modules, cap)[0]


# Skeletons

@dataclass
class Skeleton:
    """Class for the decorated graph of a tuple of simple modules"""

    vertices: list
    edges: list
    violations: list = field(default_factory=list)

    @property
    def is_skeleton(self):
        return not self.violations

    def signature(self):
        """Vertex count with the sorted (count, style) edge list, for comparison with published figures"""
        return len(self.vertices), tuple(sorted((e['count'], e['style']) for e in self.edges))

    def to_json(self):
        return {'vertices': self.vertices, 'edges': self.edges, 'violations': self.violations}


def _entry_value(a):
    """Numeric stand-in for '<=-cap'"""
    return a if isinstance(a, int) else -int(a.split('-')[-1]) - 1


def skeleton(modules, cartan=None, strict=True):
    """
    Skeleton of simple modules: |supp M_i| points per vertex, a_ij a_ji edges per pair,
    solid when the supports commute elementwise

    Args:
        modules: YDModules over one group
        cartan: Precomputed generalized Cartan matrix
        strict: Raise on a pair with neither a_ij nor a_ji equal to -1; otherwise
            keep the edge and list the pair under violations

    Raises:
        NotASkeleton in strict mode when a connected pair has neither a_ij nor a_ji equal to -1
    """
    cartan = cartan or cartan_matrix(modules)
    G = modules[0].group
    vertices = []
    for M in modules:
        label = M.rho.character_value(M.s).to_json() if M.rho.degree == 1 else None
        vertices.append({'module': M.name, 'points': len(M.support), 'dim': M.dim, 'label': label})

    edges, violations = [], []
    for i, j in itertools.combinations(range(len(modules)), 2):
        aij, aji = _entry_value(cartan[i][j]), _entry_value(cartan[j][i])
        if aij == 0 and aji == 0:
            continue
        Mi, Mj = modules[i], modules[j]
        if aij != -1 and aji != -1:
            if strict:
                raise NotASkeleton(f"neither a_{i}{j} nor a_{j}{i} is -1")
            violations.append({'pair': [Mi.name, Mj.name], 'a_ij': cartan[i][j], 'a_ji': cartan[j][i]})
            logger.warning(f"[WARN] {Mi.name}-{Mj.name} has a_ij = {cartan[i][j]}, a_ji = {cartan[j][i]}")
        solid = all(G.commute(a, b) for a in Mi.support for b in Mj.support)
        label = None
        if (solid and Mi.rho.degree == 1 and Mj.rho.degree == 1
                and Mj.s in Mi.rho.elements and Mi.s in Mj.rho.elements):
            label = (Mi.rho.character_value(Mj.s) * Mj.rho.character_value(Mi.s)).to_json()
        oriented = None
        if aij != aji and -1 in (aij, aji):
            oriented = [i, j] if aij == -1 else [j, i]
        edges.append({'pair': [Mi.name, Mj.name], 'count': aij * aji,
                      'style': 'solid' if solid else 'dashed', 'oriented': oriented, 'label': label})
    return Skeleton(vertices, edges, violations)


# Published data for the triple pipeline

PUBLISHED_MATRICES = {
    'm1-m2-braiding-matrix': {
        'modules': ['M1', 'M2'],
        'labels': ['t1', 't2', '1v', 'yv'],
        'matrix': [['1/2', '1/2', '0/1', '0/1'],
                   ['1/2', '1/2', '0/1', '0/1'],
                   ['3/4', '1/4', '1/2', '1/2'],
                   ['1/4', '3/4', '1/2', '1/2']],
    },
    'm1-m3-m4-braiding-matrix': {
        'modules': ['M1', 'M3', 'M4'],
        'labels': ['t1', 't2', '1w1', 'xw1', '1w2', 'xw2'],
        # first row as forced by x^2 > 1w1 = -1w1
        'matrix': [['1/2', '1/2', '1/2', '1/2', '0/1', '0/1'],
                   ['1/2', '1/2', '1/2', '1/2', '0/1', '0/1'],
                   ['1/2', '0/1', '1/2', '0/1', '1/2', '1/2'],
                   ['0/1', '1/2', '0/1', '1/2', '1/2', '1/2'],
                   ['1/2', '0/1', '1/2', '0/1', '1/2', '1/2'],
                   ['0/1', '1/2', '0/1', '1/2', '1/2', '1/2']],
    },
}

PUBLISHED_SKELETONS = {
    'two-solid-triangle': (3, ((1, 'dashed'), (1, 'solid'), (1, 'solid'))),
    'one-solid-triangle': (3, ((1, 'dashed'), (1, 'dashed'), (1, 'solid'))),
    'dashed-triangle': (3, ((1, 'dashed'), (1, 'dashed'), (1, 'dashed'))),
}


def published_diagram(name):
    entry = PUBLISHED_MATRICES[name]
    return diagram_from_matrix(matrix_from_json(entry['matrix']), entry['labels'])


def _support_abelian(modules):
    G = modules[0].group
    support = sorted({t for M in modules for t in M.support})
    span = G.subgroup_generated(support)
    return all(G.commute(a, b) for a, b in itertools.combinations(span, 2))


def _match_diagram(diagram):
    for name in PUBLISHED_MATRICES:
        if dynkin_isomorphic(diagram, published_diagram(name))[0]:
            return name
    return None


def _off_simply_laced(modules, cartan):
    """Pairs whose Cartan entries are not both -1, as expected for the skeleton-route triples"""
    pairs = []
    for i, j in itertools.combinations(range(len(modules)), 2):
        if (cartan[i][j], cartan[j][i]) != (-1, -1):
            pairs.append({'pair': [modules[i].name, modules[j].name],
                          'a_ij': cartan[i][j], 'a_ji': cartan[j][i]})
    return pairs


def classify_triple(i, j, k, cap=None):
    """
    Route a triple of D8 modules (1-based numbers) to the diagonal-type or skeleton check

    Returns:
        Dict with route (diagonal, skeleton or not-a-skeleton), matched published figure,
        verdict and the computed data; skeleton-side routes carry a discrepancy list
    """
    names = [f"M{n}" for n in sorted((i, j, k))]
    modules = [d8_module(n) for n in names]
    report = {'triple': names}
    indecomposable, witness = is_braid_indecomposable(modules)
    report['braid_indecomposable'] = indecomposable
    report['indecomposability_witness'] = witness

    diagonal = None
    if _support_abelian(modules):
        diagonal = modules
    else:
        for pair in itertools.combinations(modules, 2):
            if _support_abelian(list(pair)):
                matrix, _, diagram = diagonalize_braiding(list(pair))
                if _match_diagram(diagram):
                    diagonal = list(pair)
                    break

    if diagonal is not None:
        matrix, _, diagram = diagonalize_braiding(diagonal)
        matched = _match_diagram(diagram)
        report.update({'route': 'diagonal', 'diagonal_modules': [M.name for M in diagonal],
                       'braiding_matrix': matrix_to_json(matrix), 'diagram': diagram.to_json()})
    else:
        cartan, certificates = cartan_data(modules, cap)
        sk = skeleton(modules, cartan, strict=False)
        matched = None
        if sk.is_skeleton:
            sig = sk.signature()
            matched = next((n for n, s in PUBLISHED_SKELETONS.items() if s == sig), None)
        report.update({'route': 'skeleton' if sk.is_skeleton else 'not-a-skeleton',
                       'cartan': cartan, 'certificates': certificates, 'skeleton': sk.to_json(),
                       'discrepancy': _off_simply_laced(modules, cartan)})

    report['matched'] = matched
    report['verdict'] = 'infinite-dimensional' if matched and indecomposable else 'undetermined'
    logger.info(f"{'[OK]' if matched else '[WARN]'} {'/'.join(names)}: {report['verdict']} "
                f"via {report['route']}")
    return report


def tensor_to_json(space, tensor):
    return [{'word': [space.labels[v] for v in word], 'coeff': scalar_to_json(c)}
            for word, c in sorted(tensor.items())]
