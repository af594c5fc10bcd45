"""
Report Rendering
Banner-style text for terminal output; JSON stays the primary format
"""

import json

import pandas as pd


def _banner(title):
    return f"\n{'='*60}\n{title}\n{'='*60}\n"


def _status(ok):
    return "✅" if ok else "❌"


def to_json(data):
    """Deterministic JSON for reports"""
    return json.dumps(data, indent=2, sort_keys=True, default=str)


def format_checks(title, checks, key='axiom'):
    """
    Render a list of {<key>, status, witness} entries

    Args:
        title: Banner title
        checks: Per-check dicts from verify_quasi_hopf / verify_witness
        key: Field holding the check name
    """
    report = _banner(title)
    for i, check in enumerate(checks, 1):
        ok = check['status'] == 'pass'
        report += f"  {i}. {_status(ok)} {check[key]}\n"
        if not ok:
            report += f"       witness: {check['witness']}\n"
    report += f"{'='*60}\n"
    return report


def format_matrix(matrix, labels):
    """Braiding or Cartan matrix as an aligned table"""
    df = pd.DataFrame(matrix, index=labels, columns=labels)
    return df.to_string()


def format_genuineness(report):
    report = dict(report)
    text = _banner(f"GENUINENESS: D^omega(Z_{report['m']}), a = {report['a']}")
    text += f"Genuine: {report['genuine']}\n"
    text += f"  gcd criterion:       {report['gcd_criterion']}\n"
    text += f"  valuation criterion: {report['valuation_criterion']}\n"
    text += f"  explicit oracle:     {report['explicit_oracle']}\n"
    if report.get('gamma_type'):
        text += f"\nGamma^omega invariant factors: {report['gamma_type']}\n"
        choice = report.get('generator_choice') or {}
        text += f"  t = {choice.get('t')}\n"
        if choice.get('u'):
            text += f"  u = {choice.get('u')} (b = {choice.get('b')})\n"
    text += f"\n{_status(report['agree'])} criteria agree\n"
    text += f"{'='*60}\n"
    return text


def format_sweep(df):
    """Genuineness sweep table"""
    if df.empty:
        return "No (m, a) pairs in range"
    columns = [c for c in ('m', 'a', 'gcd_criterion', 'valuation_criterion',
                           'explicit_oracle', 'agree') if c in df.columns]
    summary = _banner(f"GENUINENESS SWEEP: {len(df)} pairs")
    summary += df[columns].to_string(index=False) + "\n"
    summary += f"\nGenuine: {int(df['gcd_criterion'].sum())} / {len(df)}\n"
    return summary


def format_morita(result):
    text = _banner("MORITA DUAL")
    text += f"Condition sets: {result['condition_sets']}\n"
    text += f"Theorem conditions hold: {result['theorem12']}\n"
    dual = result.get('dual_group')
    if dual:
        text += f"\nDual group order: {dual['order']}\n"
        text += f"  abelian: {dual['abelian']}\n"
        if 'invariant_factors' in dual:
            text += f"  invariant factors: {dual['invariant_factors']}\n"
        else:
            text += f"  isomorphism class: {dual['iso_class']}\n"
    if result.get('witness_report'):
        text += format_checks("WITNESS EQUATIONS", result['witness_report']['checks'], key='check')
    else:
        text += f"{'='*60}\n"
    return text


def format_triple(report):
    text = _banner(f"TRIPLE {', '.join(report['triple'])}")
    text += f"Route: {report['route']}\n"
    text += f"Braid-indecomposable: {report['braid_indecomposable']}\n"
    if report['route'] in ('skeleton', 'not-a-skeleton'):
        names = [v['module'] for v in report['skeleton']['vertices']]
        text += "\nCartan matrix:\n" + format_matrix(report['cartan'], names) + "\n"
        text += "\nSkeleton edges:\n"
        for edge in report['skeleton']['edges']:
            text += f"  {edge['pair'][0]} - {edge['pair'][1]}: {edge['count']} {edge['style']}\n"
        for d in report['discrepancy']:
            text += f"  ⚠️ {d['pair'][0]}-{d['pair'][1]}: a_ij = {d['a_ij']}, a_ji = {d['a_ji']}\n"
    else:
        labels = [v['label'] for v in report['diagram']['vertices']]
        text += "\nBraiding matrix:\n" + format_matrix(report['braiding_matrix'], labels) + "\n"
    text += f"\nMatched figure: {report['matched']}\n"
    text += f"Verdict: {report['verdict']}\n"
    text += f"{'='*60}\n"
    return text


def format_generic(title, data):
    """Fallback: key/value lines"""
    text = _banner(title)
    if isinstance(data, dict):
        for key, value in data.items():
            text += f"{key}: {value}\n"
    else:
        text += f"{data}\n"
    text += f"{'='*60}\n"
    return text
