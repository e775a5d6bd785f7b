"""The two-stream fusion network and its illumination gate.

Builds the default model, walks a batch through it, and shows what the
illumination feature does inside one fusion layer: at F_i = 1 the vibration
branch drops out of the squeeze vector entirely.
"""

import numpy as np

from imf.coach import parameter_counts
from imf.imfnet import FusionLayer, IMFNet, ModelConfig
from imf.ndgrad import Tensor, no_grad

rng = np.random.default_rng(0)

# %% shapes through the stem at full resolution
model = IMFNet(ModelConfig()).eval()
x = Tensor(rng.random((1, 3, 256, 256), dtype=np.float32))
with no_grad():
    print("stem:", model.stem_e(x).shape)
    out = model(x, x)
print("class probs:", out.probs.data.round(3), "F_i:", out.illum_feature.data.ravel())

# %% gate extremes
layer = FusionLayer(8, 4, np.random.default_rng(1))
layer.eval()
f_e, f_p = rng.standard_normal((2, 8, 5, 5)), rng.standard_normal((2, 8, 5, 5))
for level in (1.0, 0.5, 0.0):
    layer(Tensor(f_e), Tensor(f_p), np.full((2, 1), level))
    s_e, s_p = layer.last_trace["S_e"].data, layer.last_trace["S_p"].data
    print(f"F_i={level}: |S_e|={np.abs(s_e).sum():.3f} |S_p|={np.abs(s_p).sum():.3f}")

# %% parameter budgets
for kind in ("layers", "baseline", "ablation"):
    print(kind, parameter_counts(kind, ModelConfig()))
