"""Measured dimensions of the mod-3 codes and their duals relative to n.

Two published k-ranges differ in their upper end, (n+6)/3 against 2(n+6)/3;
this prints the measured k next to both so the reader can compare.
"""

import argparse
from dataclasses import dataclass

from cyclicfam.znsets import mod3_set


@dataclass(frozen=True)
class RangeExperiment:
    m_lo: int = 4
    m_hi: int = 20


def main(cfg: RangeExperiment):
    print(f"{'m':>3} {'n':>8} {'family':<10} {'k':>8} {'(n-6)/3':>10} {'(n+6)/3':>10} {'2(n+6)/3':>10}")
    for m in range(cfg.m_lo, cfg.m_hi + 1):
        n = (1 << m) - 1
        for i in range(3):
            size = len(mod3_set(i, m))
            for name, k in ((f"C({i})", n - size), (f"C({i})^perp", size)):
                print(f"{m:>3} {n:>8} {name:<10} {k:>8} {(n - 6) / 3:>10.1f} {(n + 6) / 3:>10.1f} {2 * (n + 6) / 3:>10.1f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--m-lo", type=int, default=4)
    p.add_argument("--m-hi", type=int, default=20)
    a = p.parse_args()
    main(RangeExperiment(a.m_lo, a.m_hi))
