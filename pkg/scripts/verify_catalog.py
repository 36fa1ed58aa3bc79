"""Run the lemma, dimension and certificate-bound suites and save their JSON reports."""

import argparse
import json
import time
from dataclasses import dataclass
from pathlib import Path

from cyclicfam import families


@dataclass(frozen=True)
class CatalogExperiment:
    lemma_m_max: int = 25
    dimension_m_max: int = 20
    bound_m_max: int = 15
    out_dir: Path = Path("results/catalog")


def main(cfg: CatalogExperiment) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    suites = {
        "lemmas": lambda: families.lemma_report(cfg.lemma_m_max),
        "dimensions": lambda: families.dimension_report(cfg.dimension_m_max),
        "bounds": lambda: families.bound_report(cfg.bound_m_max),
    }
    failed = 0
    for name, run in suites.items():
        t0 = time.perf_counter()
        rows = run()
        bad = [r for r in rows if r["status"] != "pass"]
        failed += len(bad)
        (cfg.out_dir / f"{name}.json").write_text(json.dumps(rows, indent=1))
        print(f"{name:<11} {len(rows) - len(bad)}/{len(rows)} pass  ({time.perf_counter() - t0:.1f} s)")
    return 1 if failed else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--lemma-m-max", type=int, default=25)
    p.add_argument("--dimension-m-max", type=int, default=20)
    p.add_argument("--bound-m-max", type=int, default=15)
    p.add_argument("--out-dir", type=Path, default=Path("results/catalog"))
    a = p.parse_args()
    raise SystemExit(main(CatalogExperiment(a.lemma_m_max, a.dimension_m_max, a.bound_m_max, a.out_dir)))
