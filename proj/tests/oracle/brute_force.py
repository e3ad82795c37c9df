#!/usr/bin/env python3
# Copyright 2026 The PTE Workbench Authors
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

"""Brute-force reference values for the C++ unit tests.

Written independently of the C++ library: every quantity below is obtained
by scanning the full profile grid. Run it to regenerate the frozen constants
used in tests/*_test.cc.
"""

import itertools

G1 = {
    "counts": [2, 2],
    "labels": [["A", "B"], ["X", "Y"]],
    # (A,X) (A,Y) (B,X) (B,Y)
    "u": [[3, 0, 1, 2], [0, 3, 2, 1]],
}

PD = {
    "counts": [2, 2],
    "labels": [["C", "D"], ["C", "D"]],
    "u": [[2, 0, 3, 1], [2, 3, 0, 1]],
}


def profiles(game):
    return list(itertools.product(*[range(n) for n in game["counts"]]))


def payoff(game, prof, i):
    return game["u"][i][profiles(game).index(tuple(prof))]


def threshold(game, surviving, i):
    if not surviving:
        return None
    best = None
    for t in range(game["counts"][i]):
        vals = [payoff(game, p, i) for p in surviving if p[i] == t]
        if vals:
            m = min(vals)
            best = m if best is None else max(best, m)
    return best


def levels(game):
    sets = [set(profiles(game))]
    thresholds = [None]
    while True:
        prev = sets[-1]
        th = [threshold(game, prev, i) for i in range(len(game["counts"]))]
        nxt = set()
        if prev:
            nxt = {p for p in prev
                   if all(payoff(game, p, i) >= th[i] for i in range(len(th)))}
        sets.append(nxt)
        thresholds.append(th)
        if nxt == prev or not nxt:
            return sets, thresholds


def nash(game):
    out = []
    for p in profiles(game):
        ok = True
        for i, n in enumerate(game["counts"]):
            for s in range(n):
                q = list(p)
                q[i] = s
                if payoff(game, q, i) > payoff(game, p, i):
                    ok = False
        if ok:
            out.append(p)
    return out


def closest(game, sets, prof, level, i, s):
    if level == 0:
        q = list(prof)
        q[i] = s
        return tuple(q), 0
    if prof[i] == s:
        return tuple(prof), level
    cands = [p for p in sets_at(sets, level - 1) if p[i] == s]
    if cands:
        best = min(cands, key=lambda p: payoff(game, p, i))
        return best, level - 1
    q = list(prof)
    q[i] = s
    return tuple(q), level - 1


def sets_at(sets, k):
    return sets[min(k, len(sets) - 1)]


def name(game, p):
    return "(" + ",".join(game["labels"][i][s] for i, s in enumerate(p)) + ")"


def report(title, game):
    sets, ths = levels(game)
    print(f"== {title}")
    for k, s in enumerate(sets):
        print(f"  S_{k} = {sorted(name(game, p) for p in s)} thresholds={ths[k]}")
    print("  nash =", [name(game, p) for p in nash(game)])


if __name__ == "__main__":
    report("G1", G1)
    report("PD", PD)
    sets, _ = levels(G1)
    for args in [((1, 0), 2, 0, 1), ((1, 0), 2, 0, 0), ((1, 1), 1, 1, 0)]:
        w, lvl = closest(G1, sets, *args)
        print("  f", args, "->", name(G1, w), lvl)
