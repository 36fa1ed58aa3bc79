"""Distance sandwiches at n = 127: certificate lower bounds against randomized upper bounds.

For each code the search target is lowered one step at a time from the
starting target until a fixed iteration budget finds nothing.
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from cyclicfam import cycliccode as cc
from cyclicfam import distance as ds
from cyclicfam.families import build_family_code, family_members, member_label
from cyclicfam.field import make_field


@dataclass(frozen=True)
class SearchExperiment:
    seed: int = 42
    iterations: int = 2000
    families: tuple = ("duadic", "duadic-dual", "prm", "prm-dual")


def probe(code, seed, iterations):
    """Smallest weight reached by descending targets under the budget."""
    best, target = None, code.n
    while target > 0:
        word = ds.low_weight_search(code, target, iterations, seed)
        if word is None:
            break
        best = word.bit_count()
        target = best - 1
    return best


def main(cfg: SearchExperiment):
    f = make_field(7)
    rows = []
    for family in cfg.families:
        members = family_members(family, 7)
        if family.startswith("prm"):
            members = [3]
        for member in members:
            code = build_family_code(family, 7, member, f)
            t0 = time.perf_counter()
            lo = cc.best_bch_certificate(code).bound
            up = probe(code, cfg.seed, cfg.iterations)
            rows.append({"code": member_label(family, 7, member), "k": code.k, "d_lower": lo, "d_upper": up,
                         "seconds": round(time.perf_counter() - t0, 2)})
            print(json.dumps(rows[-1]))
    print(json.dumps({"config": asdict(cfg)}))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--iterations", type=int, default=2000)
    a = p.parse_args()
    main(SearchExperiment(a.seed, a.iterations))
