"""Tabulate depth (|kappa|) and base charges of the triple decomposition over all small vertices."""
import argparse
from collections import Counter
from dataclasses import dataclass

from fockcrystal.decomposition import decompose
from fockcrystal.partitions import all_charged, format_charge, format_partition, parse_charge


@dataclass
class Config:
    e: int = 2
    charge: str = "(0,1,1)"
    max_rank: int = 6


def main(cfg: Config) -> None:
    s = parse_charge(cfg.charge)
    by_sigma, by_base, total = Counter(), Counter(), 0
    for v in all_charged(s, cfg.max_rank):
        d = decompose(v, cfg.e)
        by_sigma[format_partition(d.sigma)] += 1
        by_base[format_charge(d.base_charge)] += 1
        total += 1
    print(f"{total} vertices, e={cfg.e}, charge {format_charge(s)}, rank <= {cfg.max_rank}")
    print("sigma counts:")
    for k, n in sorted(by_sigma.items(), key=lambda x: (-x[1], x[0])):
        print(f"  {k:<10} {n}")
    print("base charges:")
    for k, n in sorted(by_base.items()):
        print(f"  {k:<14} {n}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--e", type=int, default=Config.e)
    p.add_argument("--charge", default=Config.charge)
    p.add_argument("--max-rank", type=int, default=Config.max_rank)
    main(Config(**vars(p.parse_args())))
