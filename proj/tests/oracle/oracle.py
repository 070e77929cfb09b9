#!/usr/bin/env python3
"""Independent reference values for the C++ tests, computed with sympy.

Writes tests/data/oracle.json, or with --check compares a fresh computation
against an existing file and exits nonzero on any difference.
"""

import argparse
import json
import math
import sys

import sympy as sp

t = sp.symbols("t")
MAX_Q = 20


def alexander(p, q):
    quotient = sp.cancel((t ** (p * q) - 1) * (t - 1) / ((t ** p - 1) * (t ** q - 1)))
    shifted = sp.expand(quotient * t ** sp.Rational(-(p - 1) * (q - 1), 2))
    return terms(shifted)


def terms(expr):
    expr = sp.expand(expr)
    lead = sp.Poly(sp.expand(expr * t ** 1000), t)
    return sorted((int(m[0]) - 1000, int(c)) for m, c in zip(lead.monoms(), lead.coeffs()))


def hfk_generators(poly_terms):
    # Walk the whole staircase from the top exponent down; no symmetry used.
    desc = sorted(poly_terms, key=lambda tc: -tc[0])
    gens = []
    m = 0
    for j, (s, _) in enumerate(desc):
        if j > 0:
            gap = desc[j - 1][0] - s
            m = m - 2 * gap + 1 if j % 2 == 1 else m - 1
        gens.append((s, m))
    return gens


def width(poly_terms):
    deltas = [s - m for s, m in hfk_generators(poly_terms)]
    return max(deltas), min(deltas), max(deltas) - min(deltas) + 1


def printed_even_plus(p, n):
    # The even-p, q = pn+1 expansion exactly as printed, sign factor included.
    k = p // 2
    s = 0
    for e in (1, -1):
        for i in range(1, k):
            for j in range(n):
                s += (-1) ** (n + 1) * t ** (e * (p * ((k - i + 1) * n - j) - k * n - i)) * (t ** (e * i) - 1)
        for i in range(1, n):
            s += (-1) ** (n - i - 1) * t ** (e * i * k)
    return terms(s)


def build():
    alex = []
    widths = []
    for p in range(2, MAX_Q + 1):
        for q in range(p + 1, MAX_Q + 1):
            if math.gcd(p, q) != 1:
                continue
            poly = alexander(p, q)
            alex.append({"p": p, "q": q, "terms": poly})
            dmax, dmin, w = width(poly)
            widths.append({"p": p, "q": q, "delta_max": dmax, "delta_min": dmin, "width": w})
    printed = []
    for p, n in ((4, 1), (4, 2), (6, 1)):
        printed.append({"p": p, "q": p * n + 1, "printed_terms": printed_even_plus(p, n),
                        "rational_terms": alexander(p, p * n + 1)})
    t45 = hfk_generators(alexander(4, 5))
    return {"alexander": alex, "widths": widths, "printed_even_plus": printed,
            "hfk_T45": [list(g) for g in t45], "torus_cycle_types": torus_cycle_types()}


def torus_cycle_types():
    # Cycle type of the permutation of (12...p-1)^q, composed from transpositions.
    from sympy.combinatorics import Permutation
    out = []
    for p in range(2, 7):
        for q in range(1, 13):
            perm = Permutation(list(range(p)))
            for _ in range(q):
                for i in range(p - 1):
                    perm = perm * Permutation(i, i + 1, size=p)
            out.append({"p": p, "q": q, "cycles": sorted(len(c) for c in perm.full_cyclic_form)})
    return out


def normalize(obj):
    return json.loads(json.dumps(obj))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--check", metavar="FILE")
    ap.add_argument("--write", metavar="FILE")
    args = ap.parse_args()
    data = normalize(build())
    if args.check:
        with open(args.check) as f:
            frozen = json.load(f)
        if frozen != data:
            for key in data:
                if frozen.get(key) != data[key]:
                    print(f"oracle mismatch in '{key}'", file=sys.stderr)
            return 1
        print(f"oracle matches {args.check}: {len(data['alexander'])} polynomials")
        return 0
    out = args.write or "oracle.json"
    with open(out, "w") as f:
        json.dump(data, f, separators=(",", ":"))
        f.write("\n")
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
