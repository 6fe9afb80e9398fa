"""Kernel dimensions of the tensor-space action against the shape formula.

    python3 scripts/kernel_table.py --max-n 4 --max-m 2 [--mod-p 2 3 5]

Each row runs the full theorem check (annihilation, dimension and joint
rank). ``--mod-p`` adds the kernel dimension over each F_p; it is reported only.
"""

import argparse
import json
import time

from brauerlab.config import KernelConfig
from brauerlab.tensor import ResourceLimitError, kernel_rank_mod_p, verify_kernel_theorem


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-m", type=int, default=2)
    ap.add_argument("--mod-p", type=int, nargs="*", default=[])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    rows = []
    for n in range(2, args.max_n + 1):
        for m in range(1, args.max_m + 1):
            cfg = KernelConfig(n, m, check_theorem=True)
            start = time.perf_counter()
            try:
                rep = verify_kernel_theorem(cfg.n, cfg.m, cfg.max_columns)
            except ResourceLimitError as exc:
                rows.append({"n": n, "m": m, "skipped": str(exc)})
                continue
            row = {"n": n, "m": m, "columns": cfg.columns, "kernel_dim": rep["detail"]["kernel_dim"],
                   "formula": rep["detail"]["formula"], "module": rep["detail"]["module_shape"],
                   "pass": rep["pass"], "seconds": round(time.perf_counter() - start, 2)}
            for p in args.mod_p:
                row.setdefault("kernel_dim_mod_p", {})[p] = kernel_rank_mod_p(n, m, p)["kernel_dim"]
            rows.append(row)

    if args.json:
        print(json.dumps(rows, indent=1))
        return
    print(f"{'n':>2} {'m':>2} {'columns':>10} {'dim':>5} {'formula':>7} {'module':>12} {'pass':>5} {'sec':>7}")
    for r in rows:
        if "skipped" in r:
            print(f"{r['n']:>2} {r['m']:>2} skipped: {r['skipped']}")
            continue
        print(f"{r['n']:>2} {r['m']:>2} {r['columns']:>10} {r['kernel_dim']:>5} {r['formula']:>7} "
              f"{str(r['module']):>12} {str(r['pass']):>5} {r['seconds']:>7}"
              + "".join(f"  F_{p}: {d}" for p, d in r.get("kernel_dim_mod_p", {}).items()))


if __name__ == "__main__":
    main()
