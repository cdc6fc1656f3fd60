"""Count FLOTW multipartitions by rank and compare with the crystal component of the empty vertex."""
import argparse
import time
from dataclasses import dataclass

from fockcrystal.decomposition import enumerate_flotw, flotw_by_crystal
from fockcrystal.partitions import format_charge, parse_charge


@dataclass
class Config:
    e: int = 4
    charge: str = "(0,1)"
    max_rank: int = 6
    compare: bool = True


def main(cfg: Config) -> None:
    s = parse_charge(cfg.charge)
    print(f"e={cfg.e} charge={format_charge(s)}")
    print("rank  flotw  component  seconds")
    for n in range(cfg.max_rank + 1):
        t = time.perf_counter()
        count = len(enumerate_flotw(cfg.e, s, n))
        t = time.perf_counter() - t
        bfs = len(flotw_by_crystal(cfg.e, s, n)) if cfg.compare else "-"
        print(f"{n:>4}  {count:>5}  {bfs:>9}  {t:7.3f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--e", type=int, default=Config.e)
    p.add_argument("--charge", default=Config.charge)
    p.add_argument("--max-rank", type=int, default=Config.max_rank)
    p.add_argument("--no-compare", dest="compare", action="store_false")
    main(Config(**vars(p.parse_args())))
