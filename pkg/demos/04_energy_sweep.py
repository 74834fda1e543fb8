# How the energy parameters move the cross-validated AUC.

import numpy as np

from fuzzytwin import KernelSpec, SolverParams, generate_crossplane, stratified_kfold
from fuzzytwin.evaluation import cross_val_auc

d = generate_crossplane(60, 30, noise_scale=0.1, seed=4)
folds = stratified_kfold(d, 5, seed=0)
grid = [0.6, 0.7, 0.8, 0.9, 1.0]

surface = np.empty((5, 5))
for i, e1 in enumerate(grid):
    for j, e2 in enumerate(grid):
        params = SolverParams(c1=0.1, c2=0.1, c3=1e-3, c4=1e-3, e1=e1, e2=e2)
        surface[i, j] = cross_val_auc(d, "f_relstsvm", params, KernelSpec("gaussian", 0.5), folds).mean()

print("rows: e1, columns: e2")
print("      " + " ".join(f"{e:6.1f}" for e in grid))
for e1, row in zip(grid, surface):
    print(f"{e1:4.1f}  " + " ".join(f"{v:6.3f}" for v in row))
