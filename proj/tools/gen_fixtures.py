#!/usr/bin/env python3
# Copyright 2026 The halfiter Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/fixtures/*.json and data/corpus.json.

Right-hand sides are Taylor-expanded with sympy. Expected prefixes are
computed by undetermined coefficients against the full 2^e-fold iterate
(plain truncated substitution, no composita tables), so they are
independent of the C++ solver.
"""

import json
import math
import pathlib
from fractions import Fraction

import sympy as sp

ROOT = pathlib.Path(__file__).resolve().parent.parent
X = sp.symbols("x")


def rat(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def taylor(expr, order):
    poly = sp.series(expr, X, 0, order + 1).removeO()
    out = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        c = sp.Rational(poly.coeff(X, n))
        out[n] = Fraction(int(c.p), int(c.q))
    assert sp.simplify(poly.coeff(X, 0)) == 0
    return out


def mul(a, b, order):
    r = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(order + 1 - i):
            if b[j]:
                r[i + j] += ai * b[j]
    return r


def substitute(a, b, order):
    acc = [Fraction(0)] * (order + 1)
    acc[0] = a[order]
    for i in range(order - 1, 0, -1):
        acc = mul(acc, b, order)
        acc[0] += a[i]
    return mul(acc, b, order)


def iterate(a, times, order):
    r = a
    for _ in range(times - 1):
        r = substitute(a, r, order)
    return r


def root(f, exponent, order):
    """a(1)=1 branch of A^(2^exponent) = F, one coefficient at a time."""
    assert f[1] == 1
    m = 2**exponent
    a = [Fraction(0)] * (order + 1)
    a[1] = Fraction(1)
    for j in range(2, order + 1):
        # with a(1)=1, a(j) enters [x^j] A^m linearly with weight m
        a[j] = (f[j] - iterate(a, m, order)[j]) / m
    assert iterate(a, m, order) == f
    return a


def convert(a, convention, terms):
    idx = range(1, len(a))
    if terms == "odd":
        idx = [n for n in idx if n % 2 == 1]
    out = []
    for n in idx:
        v = a[n]
        if convention.startswith("egf"):
            v = v * math.factorial(n)
        if convention.endswith("numerator"):
            v = Fraction(v.numerator)
        elif convention.endswith("denominator"):
            v = Fraction(v.denominator)
        out.append(v)
    return out


TABLE = [
    ("A030274", "A(A(x)) = x/(1-x)^2", X / (1 - X) ** 2),
    ("A097088", "A(A(x)) = x + x^2", X + X**2),
    ("A097090", "A(A(x)) = x(1+2x)^2", X * (1 + 2 * X) ** 2),
    ("A048607", "A(A(x)) = ln(1+x)", sp.log(1 + X)),
    ("A072350", "A(A(x)) = tan(x)", sp.tan(X)),
    ("A199822", "A(A(x)) = (1-4x-sqrt(1-8x))/(8x)", (1 - 4 * X - sp.sqrt(1 - 8 * X)) / (8 * X)),
    ("A199823", "A(A(x)) = (x+2x^2)/(1-2x-4x^2)", (X + 2 * X**2) / (1 - 2 * X - 4 * X**2)),
    ("A199852", "A(A(x)) = x exp(2x)", X * sp.exp(2 * X)),
    ("A199917", "A(A(x)) = (2-2cos(x))/x", (2 - 2 * sp.cos(X)) / X),
    ("A213422", "A(A(x)) = (1-sqrt(1-16x))/8", (1 - sp.sqrt(1 - 16 * X)) / 8),
]


def catalog_series(name, order):
    if name == "sin":
        return taylor(sp.sin(X), order)
    if name == "expm1":
        return taylor(sp.exp(X) - 1, order)
    if name == "catalan":
        return [Fraction(0)] + [Fraction(math.comb(2 * n - 2, n - 1), n) for n in range(1, order + 1)]
    if name.startswith("quadratic:"):
        c = Fraction(name.split(":", 1)[1])
        return [Fraction(0), Fraction(1), c] + [Fraction(0)] * (order - 2)
    raise ValueError(name)


def main():
    order = 12
    cases = []
    fixtures = ROOT / "data" / "fixtures"
    fixtures.mkdir(parents=True, exist_ok=True)

    for oeis_id, desc, expr in TABLE:
        f = taylor(expr, order)
        doc = {"order": order, "coeffs": {str(n): rat(f[n]) for n in range(1, order + 1)}}
        (fixtures / f"{oeis_id}.json").write_text(json.dumps(doc, indent=2) + "\n")
        a = root(f, 1, order)
        cases.append({
            "id": oeis_id,
            "description": desc,
            "rhs": {"fixture": oeis_id},
            "iteration_exponent": 1,
            "order": order,
            "coefficient_convention": "ordinary",
            "terms": "all",
            "expected_prefix": [rat(v) for v in convert(a, "ordinary", "all")],
        })

    catalog_cases = [
        ("A048602", "A(A(x)) = sin(x), numerators of odd-index coefficients", "sin", False, 1, 15, "numerator", "odd"),
        ("A048603", "A(A(x)) = sin(x), denominators of odd-index coefficients", "sin", False, 1, 15, "denominator", "odd"),
        ("A052104", "A(A(x)) = exp(x)-1, numerators of n! a(n)", "expm1", False, 1, 10, "egf_numerator", "all"),
        ("A052105", "A(A(x)) = exp(x)-1, denominators of n! a(n)", "expm1", False, 1, 10, "egf_denominator", "all"),
        ("A052122", "A(A(x)) = exp(x)-1, n! a(n)", "expm1", False, 1, 10, "egf", "all"),
        ("A213422-catalog", "A(A(x)) = C(4x)/4 with C the Catalan generating function", "catalan", True, 1, 10, "ordinary", "all"),
        ("A141119", "A(A(A(A(x)))) = x + 16x^2", "quadratic:16", False, 2, 10, "ordinary", "all"),
    ]
    for oeis_id, desc, name, scaled, exponent, n_ord, conv, terms in catalog_cases:
        f = catalog_series(name, n_ord)
        if scaled:
            f = [v * Fraction(4) ** max(n - 1, 0) for n, v in enumerate(f)]
        a = root(f, exponent, n_ord)
        case = {
            "id": oeis_id,
            "description": desc,
            "rhs": {"catalog": name},
            "iteration_exponent": exponent,
            "order": n_ord,
            "coefficient_convention": conv,
            "terms": terms,
            "expected_prefix": [rat(v) for v in convert(a, conv, terms)],
        }
        if scaled:
            case["scaled"] = True
        cases.append(case)

    cases.append({
        "id": "identity",
        "description": "A(A(x)) = x",
        "rhs": {"series": {"order": 6, "coeffs": {"1": "1"}}},
        "iteration_exponent": 1,
        "order": 6,
        "coefficient_convention": "ordinary",
        "terms": "all",
        "expected_prefix": ["1", "0", "0", "0", "0", "0"],
    })

    (ROOT / "data" / "corpus.json").write_text(json.dumps(cases, indent=2) + "\n")


if __name__ == "__main__":
    main()
