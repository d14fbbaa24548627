"""Two constructions, one law.

Compressing a uniformly rotated rank-q_tilde projector onto a fixed rank-q
subspace of C^n gives the same eigenvalue distribution as the Wishart ratio
(X+X')^{-1/2} X (X+X')^{-1/2}.  This script pools spectra from both routes
and prints the KS distance plus a coarse histogram comparison.
"""

import numpy as np

from jrmt import EmpiricalSample, SeededStream, ks_distance, sample_spectrum

N, Q, QT = 48, 12, 18
TRIALS = 1000

proj = np.concatenate(
    [sample_spectrum(SeededStream(1, t), N, Q, QT, "projector") for t in range(TRIALS)]
)
wish = np.concatenate(
    [sample_spectrum(SeededStream(2, t), N, Q, QT, "wishart") for t in range(TRIALS)]
)

d = ks_distance(EmpiricalSample.from_values(proj), EmpiricalSample.from_values(wish))
print(f"ambient n={N}, ranks q={Q}, q_tilde={QT}, {TRIALS} draws per route")
print(f"KS distance between pooled spectra: {d:.4f}\n")

edges = np.linspace(0, 1, 11)
hp, _ = np.histogram(proj, edges, density=True)
hw, _ = np.histogram(wish, edges, density=True)
print("bin        projector   wishart")
for i in range(10):
    bar = "#" * int(12 * hp[i])
    print(f"[{edges[i]:.1f},{edges[i+1]:.1f})   {hp[i]:8.3f}  {hw[i]:8.3f}   {bar}")
