"""
Genuineness of D^omega(Z_m)
Closed-form gcd and 2-adic criteria plus the explicit oracle through the
group-likes Gamma^omega, the F3 pullback and the coboundary test
"""

import logging
import multiprocessing
from dataclasses import asdict, dataclass, field
from math import gcd

import pandas as pd

import config
from cocycles import Cochain3, f3_pullback, inflate, is_coboundary
from errors import NoComplementFound, OutOfRange
from groups import invariant_factors_of
from tqd import cyclic_algebra, grouplike_group

logger = logging.getLogger(__name__)


def _check_range(m, a):
    if m < 2 or not 1 <= a < m:
        raise OutOfRange(f"need m >= 2 and 1 <= a < m, got m={m}, a={a}")


def decide_gcd(m, a):
    """Genuine iff (m, 2a) does not divide (m, a)"""
    _check_range(m, a)
    return gcd(m, a) % gcd(m, 2 * a) != 0


def valuation2(n):
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


def decide_valuation(m, a):
    """Genuine iff v2(a) < v2(m)"""
    _check_range(m, a)
    return valuation2(a) < valuation2(m)


def _complement_generator(GG, d):
    """First sigma(chi^c, g^b), (c, b) lexicographic, of order d meeting <t> trivially"""
    G = GG.table
    t_span = set(G.subgroup_generated([GG.t]))
    for c in range(GG.m):
        for b in range(GG.m):
            u = GG.index(c, b)
            if G.element_order(u) != d:
                continue
            if set(G.subgroup_generated([u])) & t_span == {G.identity}:
                return u, c, b
    raise NoComplementFound(f"no complement of <t> in Gamma^omega for m={GG.m}, a={GG.a}")


def decide_explicit(m, a):
    """
    Decide genuineness from the group-likes

    Builds Gamma^omega, picks t = sigma(1, g) and a complement generator u,
    pulls omega_a^-1 back along the projection and evaluates the Psi values.

    Args:
        m: Order of the cyclic group, m <= config.MAX_EXPLICIT_M
        a: Cocycle parameter, 1 <= a < m

    Returns:
        (genuine bool, trace dict)
    """
    _check_range(m, a)
    if m > config.MAX_EXPLICIT_M:
        raise OutOfRange(f"explicit oracle is limited to m <= {config.MAX_EXPLICIT_M}")

    A = cyclic_algebra(m, a)
    GG = grouplike_group(A)
    d = gcd(2 * a, m)
    trace = {'gamma_type': invariant_factors_of(GG.table), 't': GG.label(GG.t)}

    if d == 1:
        generators, orders = [GG.t], [m * m]
        trace.update({'u': None, 'b': None})
    else:
        u, c, b = _complement_generator(GG, d)
        generators, orders = [GG.t, u], [m * m // d, d]
        # m | b d and m | d + 2a (b d / m)
        constraints = (b * d) % m == 0 and (d + 2 * a * (b * d // m)) % m == 0
        if not constraints:
            logger.warning(f"[WARN] complement exponent b={b} breaks the divisibility constraints "
                           f"for m={m}, a={a}")
        trace.update({'u': GG.label(u), 'b': b, 'constraints_hold': constraints})

    omega = Cochain3.from_params(A.omega.params).inverse()
    pulled = inflate(omega, GG.table, GG.projection)
    psi = f3_pullback(pulled, generators, orders)
    coboundary, witness = is_coboundary(psi)
    trace['psi'] = psi.to_json()
    trace['coboundary_witness'] = (None if witness is None else
                                   {f"({i},{j})": g.to_json() for (i, j), g in witness.items()})
    return not coboundary, trace


@dataclass
class GenuinenessReport:
    """Class to hold the three genuineness verdicts for (m, a)"""

    m: int
    a: int
    gcd_criterion: bool
    valuation_criterion: bool
    explicit_oracle: object = "skipped"
    gamma_type: list = field(default_factory=list)
    generator_choice: dict = field(default_factory=dict)

    @property
    def agree(self):
        verdicts = [self.gcd_criterion, self.valuation_criterion]
        if self.explicit_oracle != "skipped":
            verdicts.append(self.explicit_oracle)
        return len(set(verdicts)) == 1

    @property
    def genuine(self):
        return self.gcd_criterion

    def to_json(self):
        data = asdict(self)
        data['genuine'] = self.genuine
        data['agree'] = self.agree
        return data


def genuineness_report(m, a, explicit=False):
    report = GenuinenessReport(m, a, decide_gcd(m, a), decide_valuation(m, a))
    if explicit:
        verdict, trace = decide_explicit(m, a)
        report.explicit_oracle = verdict
        report.gamma_type = trace['gamma_type']
        report.generator_choice = {'t': trace['t'], 'u': trace['u'], 'b': trace['b']}
    if not report.agree:
        logger.error(f"[FAIL] genuineness criteria disagree at m={m}, a={a}")
    return report


def _report_row(job):
    m, a, explicit = job
    return genuineness_report(m, a, explicit).to_json()


def sweep(ms, explicit=False, workers=None):
    """
    Reports for every (m, a) with m in ms and 1 <= a < m

    Args:
        ms: Iterable of group orders
        explicit: Run the explicit oracle (m must respect MAX_EXPLICIT_M)
        workers: Process count; 1 runs in-process

    Returns:
        DataFrame sorted by (m, a)
    """
    workers = workers or config.SWEEP_WORKERS
    jobs = [(m, a, explicit) for m in sorted(set(ms)) for a in range(1, m)]
    logger.info(f"Sweeping {len(jobs)} (m, a) pairs with {workers} worker(s)")
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            rows = pool.map(_report_row, jobs)
    else:
        rows = [_report_row(job) for job in jobs]
    df = pd.DataFrame(rows)
    if df.empty:
        return df
    return df.sort_values(['m', 'a']).reset_index(drop=True)
