"""Regenerate the frozen reference values under ../data.

Formulas are evaluated with mpmath at 50 digits, rainbow connection numbers
by exhaustive search over colorings with networkx path enumeration, and the
Wilson interval with statsmodels. Run from any directory:

    python3 crates/core/tests/oracle/gen_fixtures.py
"""

import itertools
import json
import random
from fractions import Fraction
from math import factorial
from pathlib import Path

import mpmath as mp
import networkx as nx
from statsmodels.stats.proportion import proportion_confint

mp.mp.dps = 50
DATA = Path(__file__).resolve().parent.parent / "data"


def p1(m, n, d):
    m, n, d = mp.mpf(m), mp.mpf(n), mp.mpf(d)
    return mp.log(m * n) ** (1 / d) / (m * n) ** ((d - 1) / (2 * d))


def p2(m, n, d):
    m, n, d = mp.mpf(m), mp.mpf(n), mp.mpf(d)
    return mp.log(n) ** (1 / d) / (mp.sqrt(m) * n ** ((d - 2) / (2 * d)))


def criterion(m, n, p, d):
    m, n, p = mp.mpf(m), mp.mpf(n), mp.mpf(p)
    if d % 2 == 1:
        return p**d * (m * n) ** (mp.mpf(d - 1) / 2) - mp.log(m * n)
    return p**d * m ** (mp.mpf(d) / 2) * n ** (mp.mpf(d) / 2 - 1) - 2 * mp.log(n)


def q_exact(d, length):
    base = d + 1 if length == d + 1 else d
    return Fraction(factorial(base), base**base)


def failure_ln(k, d, c0, n):
    big_n = mp.mpf(2) ** (10 * d) * c0 * mp.log(n)
    q = min(q_exact(d, d + 1), q_exact(d, d))
    q = mp.mpf(q.numerator) / q.denominator
    j = mp.mpf(k - 1)
    binom = 0 if k == 1 else j * mp.log(big_n * mp.e / j)
    return binom + (big_n - j) * mp.log(1 - q)


def formula_grid(rng):
    points = []
    mults = [0.5, 0.8, 1.25, 2.0, 3.0]
    while len(points) < 100:
        d = rng.randint(2, 8)
        m = int(10 ** rng.uniform(1, 6))
        n = int(10 ** rng.uniform(1, 6))
        mult = rng.choice(mults)
        thr = p1(m, n, d) if d % 2 == 1 else p2(m, n, d)
        p = float(mult * thr)
        c0 = round(rng.uniform(1, 4), 3)
        k = rng.randint(1, 40)
        mean = round(rng.uniform(1, 400), 3)
        frac = round(rng.uniform(0.05, 0.95), 3)
        q1, q2 = q_exact(d, d + 1), q_exact(d, d)
        points.append({
            "m": m, "n": n, "d": d, "p": p, "k": k, "c0": c0, "mean": mean, "frac": frac,
            "threshold": float(thr),
            "criterion": float(criterion(m, n, p, d)),
            "q1": [str(q1.numerator), str(q1.denominator)],
            "q2": [str(q2.numerator), str(q2.denominator)],
            "failure_ln": float(failure_ln(k, d, c0, n)),
            "chernoff": float(mp.exp(-mp.mpf(frac) ** 2 * mean / 2)),
        })
    return points


CASES = ["odd_left_pair", "odd_right_pair", "odd_cross_pair",
         "even_left_pair", "even_right_pair", "even_cross_pair"]


def raw_branchings(case, m, n, p, d):
    m, n, p = mp.mpf(m), mp.mpf(n), mp.mpf(p)
    pm, pn = p * m, p * n
    if case == "odd_left_pair":
        return pn / mp.log(n), pm / mp.log(m)
    if case == "odd_right_pair":
        e = mp.mpf(2) / (d - 1)
        return pm / mp.log(m) ** e, pn / mp.log(n) ** e
    if case in ("odd_cross_pair", "even_left_pair"):
        return pn / 10, pm / 10
    if case == "even_right_pair":
        return pm / 10, pn / 10
    return pm / mp.log(m), pn / mp.log(n)


def near_integer(x):
    return abs(x - mp.nint(x)) < mp.mpf("1e-6")


def lemma_cases(rng):
    out = []
    while len(out) < 20:
        odd = len(out) % 2 == 0
        d = rng.choice([3, 5, 7] if odd else [2, 4, 6])
        case = rng.choice(CASES[:3] if odd else CASES[3:])
        m, n = rng.randint(20, 5000), rng.randint(20, 5000)
        p = round(rng.uniform(0.01, 1.0), 6)
        s, t = raw_branchings(case, m, n, p, d)
        if near_integer(s) or near_integer(t):
            continue
        out.append({
            "case": case, "m": m, "n": n, "p": p, "d": d,
            "s": max(1, int(mp.floor(s))), "t": max(1, int(mp.floor(t))),
        })
    return out


def has_rainbow_path(g, colors, a, b):
    for path in nx.all_simple_paths(g, a, b):
        used = [colors[frozenset(e)] for e in zip(path, path[1:])]
        if len(set(used)) == len(used):
            return True
    return False


def rc(edges):
    g = nx.Graph()
    g.add_edges_from(edges)
    keys = [frozenset(e) for e in edges]
    nodes = sorted(g.nodes)
    for c in range(1, len(edges) + 1):
        for assignment in itertools.product(range(c), repeat=len(edges)):
            if len(set(assignment)) != c:
                continue
            colors = dict(zip(keys, assignment))
            if all(has_rainbow_path(g, colors, a, b) for a, b in itertools.combinations(nodes, 2)):
                return c
    return None


def rc_graphs():
    # Left vertices are ("U", i), right vertices ("V", j); edges stored as [i, j].
    graphs = {
        "path4": (2, 2, [(0, 0), (1, 0), (1, 1)]),
        "cycle4": (2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]),
        "cycle6": (3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (0, 2)]),
        "star3": (1, 3, [(0, 0), (0, 1), (0, 2)]),
        "k23": (2, 3, [(i, j) for i in range(2) for j in range(3)]),
        "path6": (3, 3, [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)]),
        "k22_pendant": (3, 2, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 1)]),
    }
    out = []
    for name, (m, n, edges) in graphs.items():
        labelled = [(("U", u), ("V", v)) for u, v in edges]
        out.append({"name": name, "m": m, "n": n, "edges": edges, "rc": rc(labelled)})
    return out


def wilson():
    out = []
    for s, n in [(0, 200), (200, 200), (37, 200), (1, 10), (5, 9)]:
        lo, hi = proportion_confint(s, n, alpha=0.05, method="wilson")
        out.append({"successes": s, "trials": n, "low": lo, "high": hi})
    return out


def main():
    rng = random.Random(20240601)
    DATA.mkdir(exist_ok=True)
    fixtures = {
        "formulas.json": formula_grid(rng),
        "lemma_branchings.json": lemma_cases(rng),
        "rc.json": rc_graphs(),
        "wilson.json": wilson(),
    }
    for name, value in fixtures.items():
        (DATA / name).write_text(json.dumps(value, indent=1) + "\n")


if __name__ == "__main__":
    main()
