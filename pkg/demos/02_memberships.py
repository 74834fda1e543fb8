# Fuzzy slack weights on imbalanced, noisy data.
#
# Both weighting schemes should give low weight to mislabelled points and
# multiply the minority class by the imbalance ratio.

import numpy as np

from fuzzytwin import Dataset, KernelSpec, class_stats, generate_crossplane
from fuzzytwin.membership import ifma_weights, pfma_scores, pfma_weights

clean = generate_crossplane(80, 20, noise_scale=0.05, seed=0)
rng = np.random.default_rng(0)
flipped = rng.choice(clean.n_samples, size=10, replace=False)
labels = clean.labels.copy()
labels[flipped] *= -1
d = Dataset(clean.features, labels, "crossplane-flipped")

stats = class_stats(d)
print(f"p={stats.p} q={stats.q} IR={stats.ir:.2f} majority={stats.majority_label:+d}")

h = pfma_scores(d)
print(f"PFMA scores lie in [{h.min():.4f}, {h.max():.4f}]; 1/e = {np.exp(-1):.4f}")

is_flipped = np.zeros(d.n_samples, bool)
is_flipped[flipped] = True
print("mean PFMA score, flipped points:", f"{h[is_flipped].mean():.3f}")
print("mean PFMA score, other points:  ", f"{h[~is_flipped].mean():.3f}")

for name, w in (("IFMA", ifma_weights(d, KernelSpec("gaussian", 0.5))), ("PFMA", pfma_weights(d))):
    print(f"{name}: class +1 weights in [{w.s1.min():.3f}, {w.s1.max():.3f}], "
          f"class -1 weights in [{w.s2.min():.3f}, {w.s2.max():.3f}]")
