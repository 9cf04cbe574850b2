# Copyright 2026 The actionconv Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent Levy-Prokhorov oracle used to freeze values in the C++ tests.

Exact Fractions throughout; distances are exact when squared distances are
perfect squares, which all frozen cases are chosen to satisfy.  The search
scans candidate epsilons in increasing order and checks every subset of each
support against the closed eps-neighbourhood in the other measure.
"""

from fractions import Fraction as F
from itertools import combinations
import math


def dist(p, q):
    s = sum((F(a) - F(b)) ** 2 for a, b in zip(p, q))
    r = math.isqrt(s.numerator) , math.isqrt(s.denominator)
    if F(r[0] * r[0], r[1] * r[1]) == s:
        return F(r[0], r[1])
    return math.sqrt(s)  # inexact; callers avoid this


def feasible(mu, nu, eps):
    for a, b in ((mu, nu), (nu, mu)):
        pts = list(a)
        for r in range(1, len(pts) + 1):
            for sub in combinations(pts, r):
                mass = sum(a[p] for p in sub)
                cover = sum(w for q, w in b.items()
                            if any(dist(p, q) <= eps for p in sub))
                if mass > cover + eps:
                    return False
    return True


def lp(mu, nu):
    cands = {F(0), F(1)}
    for p in mu:
        for q in nu:
            d = dist(p, q)
            if d <= 1:
                cands.add(d)
    for a in (mu, nu):
        ws = list(a.values())
        for r in range(len(ws) + 1):
            for sub in combinations(ws, r):
                for b in (mu, nu):
                    for r2 in range(len(b) + 1):
                        for sub2 in combinations(list(b.values()), r2):
                            x = sum(sub) - sum(sub2)
                            if 0 <= x <= 1:
                                cands.add(F(x))
    for e in sorted(cands):
        if feasible(mu, nu, e):
            return e
    return F(1)


def m(*pairs):
    return {tuple(F(c) for c in p): F(w) for p, w in pairs}


CASES = {
    "dirac_half": (m(((0, 0), 1)), m(((0, F(1, 2)), 1))),
    "dirac_far": (m(((0,), 1)), m(((7,), 1))),
    "split_vs_dirac": (m(((0,), F(1, 2)), ((1,), F(1, 2))), m(((0,), 1))),
    "thirds": (m(((0,), F(1, 3)), ((1,), F(2, 3))),
               m(((F(1, 4),), F(1, 2)), ((2,), F(1, 2)))),
    "pythagorean": (m(((0, 0), F(3, 4)), ((3, 4), F(1, 4))),
                    m(((F(3, 10), F(2, 5)), F(1, 2)), ((3, 4), F(1, 2)))),
    "mass_limited": (m(((0,), F(9, 10)), ((5,), F(1, 10))),
                     m(((F(1, 20),), 1))),
}

if __name__ == "__main__":
    for name, (mu, nu) in CASES.items():
        v = lp(mu, nu)
        assert v == lp(nu, mu)
        print(f"{name}: {v} = {float(v)!r}")
