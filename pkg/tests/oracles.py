"""Independent reference implementations used to check the real ones.

The distance oracle enumerates every global alignment (equivalently,
every monotone matching between sequence positions) and takes the
cheapest, instead of running a dynamic program.  It is exponential and
only usable for short sequences, which is the point: it shares no code
or recurrence with the implementation under test.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from skillvet.arpabet import GAP, SYMBOL_INDEX


def enumerate_min_cost(p1, p2, matrix) -> float:
    """Cheapest alignment by explicit enumeration, pure Python.

    Every alignment pairs some subset of p1 positions with an
    equal-sized subset of p2 positions in order (matches/substitutions)
    and leaves the rest as deletions/insertions.
    """
    m, n = len(p1), len(p2)
    del_costs = [matrix.cost(a, GAP) for a in p1]
    ins_costs = [matrix.cost(b, GAP) for b in p2]
    best = math.inf
    for k in range(min(m, n) + 1):
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                cost = sum(matrix.cost(p1[i], p2[j]) for i, j in zip(rows, cols))
                cost += sum(del_costs) - sum(del_costs[i] for i in rows)
                cost += sum(ins_costs) - sum(ins_costs[j] for j in cols)
                best = min(best, cost)
    return best


def enumerate_min_cost_fast(p1, p2, matrix) -> float:
    """Same enumeration as :func:`enumerate_min_cost`, vectorized.

    Still materializes every monotone matching; numpy only batches the
    cost sums so that 1,000 length-8 pairs finish within the acceptance
    budget.
    """
    m, n = len(p1), len(p2)
    values = matrix.values
    gap = SYMBOL_INDEX[GAP]
    i1 = np.array([SYMBOL_INDEX[a] for a in p1], dtype=np.intp)
    i2 = np.array([SYMBOL_INDEX[b] for b in p2], dtype=np.intp)
    del_costs = values[i1, gap] if m else np.zeros(0)
    ins_costs = values[i2, gap] if n else np.zeros(0)
    total_indel = float(del_costs.sum() + ins_costs.sum())
    best = total_indel
    for k in range(1, min(m, n) + 1):
        rows = np.array(list(itertools.combinations(range(m), k)), dtype=np.intp)
        cols = np.array(list(itertools.combinations(range(n), k)), dtype=np.intp)
        sub = values[i1[rows][:, None, :], i2[cols][None, :, :]].sum(axis=2)
        saved_del = del_costs[rows].sum(axis=1)
        saved_ins = ins_costs[cols].sum(axis=1)
        totals = total_indel + sub - saved_del[:, None] - saved_ins[None, :]
        best = min(best, float(totals.min()))
    return best
