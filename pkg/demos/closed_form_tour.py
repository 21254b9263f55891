#!/usr/bin/env python3
"""Walk through the closed-form pieces at the reference operating point.

No simulation here: just the bias/ER conversion, the residual-variance sum
and the BER waterfall, evaluated where the other demos run.
"""

import numpy as np

from pam4mpi import bias_from_er, pam4_ber, residual_mpi_variance

v_b = bias_from_er(4.0)
print(f"ER 4 dB -> bias V_b = {v_b:.4f} (normalized volts, k = 1)")
print("lowest / highest optical power:", v_b - 3, "/", v_b + 3)

print("\nresidual MPI variance after ideal mitigation (B2bar = 1/2):")
for mpi_db in (-30, -27, -24, -21, -18):
    sigma2 = residual_mpi_variance(10.0 ** (mpi_db / 10.0), v_b, 0.5)
    print(f"  {mpi_db:4d} dB -> {sigma2:.4e}  (residual floor BER "
          f"{pam4_ber(np.inf, sigma2):.2e})")

print("\nBER waterfall, AWGN only vs with -21 dB MPI residual:")
sigma2_21 = residual_mpi_variance(10.0 ** (-2.1), v_b, 0.5)
print(f"{'SNR dB':>7} {'no MPI':>12} {'-21 dB MPI':>12} {'penalty':>9}")
for snr_db in range(12, 23):
    snr = 10.0 ** (snr_db / 10.0)
    clean = pam4_ber(snr, 0.0)
    mpi = pam4_ber(snr, sigma2_21)
    print(f"{snr_db:7d} {clean:12.3e} {mpi:12.3e} {mpi / clean:9.2f}x")
