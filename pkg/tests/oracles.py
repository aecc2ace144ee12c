"""Independent brute-force oracles used to freeze expected test values.

These deliberately avoid the library's own code paths: everything here is
plain sorting, linear scanning, and counting, so a bug in the package
cannot hide behind an identically-buggy expectation.
"""

from __future__ import annotations


def sorted_levels(values):
    """Distinct non-missing values in Unicode code point order."""
    seen = set()
    for v in values:
        if v is not None:
            seen.add(v)
    return sorted(seen)


def file_order_levels(values):
    """Distinct non-missing values in first-appearance order."""
    out = []
    for v in values:
        if v is not None and v not in out:
            out.append(v)
    return out


def positional_encode(values, levels, base, missing_code):
    """Encode by linear search of the level list; missing -> missing_code."""
    codes = []
    for v in values:
        if v is None:
            codes.append(missing_code)
        else:
            codes.append(base + levels.index(v))
    return codes


def tq_value_scan(triples, t):
    """Value at time t by scanning every triple; None when uncovered."""
    for s, f, v in triples:
        if s <= t < f:
            return v
    return None


def tq_overlaps(triples):
    """All-pairs interval intersection scan; True when any two overlap."""
    for i in range(len(triples)):
        for j in range(i + 1, len(triples)):
            s1, f1 = triples[i][0], triples[i][1]
            s2, f2 = triples[j][0], triples[j][1]
            if max(s1, s2) < min(f1, f2):
                return True
    return False


def tq_covered_points(triples):
    """Count integer t in [min s, max f) where some triple covers t."""
    if not triples:
        return 0
    lo = min(s for s, _, _ in triples)
    hi = max(f for _, f, _ in triples)
    return sum(1 for t in range(lo, hi) if tq_value_scan(triples, t) is not None)
