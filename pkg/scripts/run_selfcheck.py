"""Run an invariant suite and write the report to stdout (and optionally a file)."""
import argparse
from dataclasses import dataclass
from pathlib import Path

from fockcrystal.selfcheck import format_report, timed_suite


@dataclass
class Config:
    profile: str = "full"
    seed: int = 0
    out: str | None = None


def main(cfg: Config) -> int:
    results, seconds = timed_suite(cfg.profile, cfg.seed)
    text = format_report(results) + f"elapsed {seconds:.1f} s\n"
    print(text, end="")
    if cfg.out:
        Path(cfg.out).write_text(text)
    return 0 if all(r.passed for r in results) else 2


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--profile", choices=("quick", "full"), default=Config.profile)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--out")
    raise SystemExit(main(Config(**vars(p.parse_args()))))
