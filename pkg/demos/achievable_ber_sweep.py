#!/usr/bin/env python3
"""Reproduce the achievable-BER waterfall comparison.

Sweeps SNR x MPI ratio x linewidth, simulating the genie-mitigated link at
one million bits per point, and checks the closed form against the counted
errors. Writes the full table to sweep.csv next to this script; render it
with the frontend plotter:

    node frontend/dist/cli.js ber_curves --in demos/out/sweep.csv --out demos/out
"""

import pathlib
import time

from pam4mpi import SWEEP_COLUMNS, SweepSpec, compare, rows_to_csv, run_sweep

out_dir = pathlib.Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

spec = SweepSpec()  # defaults: SNR 12..22 dB, MPI {-30,-27,-24,-21} dB, 1 & 10 MHz
print(f"running {len(spec)} grid points at {spec.base.n_bits:.0e} bits each ...")
t0 = time.time()
rows = run_sweep(spec)
print(f"done in {time.time() - t0:.1f} s")

csv_path = out_dir / "sweep.csv"
csv_path.write_text(rows_to_csv(rows, SWEEP_COLUMNS))
print(f"table -> {csv_path}")

report = compare(rows)
print(
    f"\n{report['n_qualifying']} of {report['n_points']} points have analytic "
    f"BER above 1e-4 and are checked against the 95% binomial interval:"
)
print(f"  outside interval : {report['n_outside_ci']}")
print(f"  max |log10 dev|  : {report['max_log10_deviation']:.4f}")

print("\nworst qualifying points by log deviation:")
quals = [p for p in report["points"] if p.get("qualifying")]
for p in sorted(quals, key=lambda p: -p["log10_deviation"])[:5]:
    print(
        f"  snr {p['snr_db']:4.1f} dB  mpi {p['mpi_db']:6.1f} dB  "
        f"lw {p['linewidth_hz']:.0e}  analytic {p['analytic']:.3e}  "
        f"simulated {p['ber_sim']:.3e}  in-CI {p['within_ci']}"
    )

print(
    "\nNote: at 1 MHz linewidth the beat envelope decorrelates over ~17k"
    "\nsymbols, so a 5e5-symbol frame carries extra scatter beyond the"
    "\nbinomial interval; expect a few flagged points for arbitrary seeds."
)
