# Twin planes on the crossplane problem.
#
# Two classes sit on two lines that cross inside the unit square, so no
# single line separates them.  Each twin model fits one line per class and
# labels a point by whichever line it is closer to.

import numpy as np

from fuzzytwin import SolverParams, auc, generate_crossplane, train
from fuzzytwin.models import MODEL_IDS

train_set = generate_crossplane(75, 75, noise_scale=0.0, seed=1)
test_set = generate_crossplane(75, 75, noise_scale=0.0, seed=2)
print(train_set.name, train_set.features.shape)

# small penalties keep each plane close to its own class
params = SolverParams(c1=1e-5, c2=1e-5, c3=1e-5, c4=1e-5, e1=0.8, e2=0.8)

for model_id in MODEL_IDS:
    model = train(model_id, train_set, params)
    score = auc(test_set.labels, model.predict(test_set.features))
    # slope of plane i: w_i[0] x + w_i[1] y + b_i = 0  ->  y = -(w_i[0] x + b_i) / w_i[1]
    slopes = [-w[0] / w[1] for w in (model.w1, model.w2)]
    print(f"{model_id:12s} AUC={score:.3f} rule={model.rule:13s} "
          f"slopes=({slopes[0]:+.3f}, {slopes[1]:+.3f})")

# the generating lines have slopes -0.6 and +0.7

# with noise the task gets harder and the penalty matters
noisy = generate_crossplane(75, 75, noise_scale=0.15, seed=3)
for c in (1e-5, 1e-2, 1.0, 100.0):
    m = train("relstsvm", noisy, SolverParams(c, c, 1e-3, 1e-3, 0.8, 0.8))
    print(f"c={c:g}: training AUC {auc(noisy.labels, m.predict(noisy.features)):.3f}")
