"""From a vibration trace to scalogram images.

A synthetic acceleration stream is cut into 500-sample windows (50% overlap),
each window goes through the cgau8 continuous wavelet transform and the
magnitude is encoded as a viridis RGB image. A tire-style periodic trace is
segmented peak to peak instead.
"""

from pathlib import Path

import numpy as np

from imf import dsp
from imf.corpus import save_image

out = Path("demo-output/scalograms")
out.mkdir(parents=True, exist_ok=True)
rng = np.random.default_rng(1)
rate = 500.0

# %% a stream whose dominant frequency jumps from 12 Hz to 60 Hz halfway
t = np.arange(2000) / rate
trace = np.where(t < 2.0, np.sin(2 * np.pi * 12 * t), np.sin(2 * np.pi * 60 * t))
trace += 0.2 * rng.standard_normal(t.size)

windows = dsp.slide_windows(trace, window=500, step=250, rate=rate, source="demo")
print(f"{len(windows)} windows, starts {[w.start_index for w in windows]}")

# %% scalograms: the ridge moves to small scales once the tone gets faster
scales = dsp.default_scales(128)
for w in windows:
    sg = dsp.window_to_image(w, size=128, scales=scales)
    ridge = scales[sg.magnitude.mean(axis=1).argmax()]
    save_image(out / f"{w.window_id}.png", sg.image)
    print(f"{w.window_id}: t0={w.start_time:.2f}s ridge scale {ridge:.1f}")

# %% tire cycles: one segment per revolution, resampled to the window length
period = 173
tire = np.sin(2 * np.pi * np.arange(3000) / period) + 0.05 * rng.standard_normal(3000)
cycles = dsp.segment_cycles(tire, rate, min_period=0.25, prominence=0.5)
lengths = [b - a for a, b in cycles]
print(f"{len(cycles)} cycles, lengths {min(lengths)}..{max(lengths)} (true period {period})")
fixed = dsp.resample_to_length(tire[cycles[0][0]:cycles[0][1]], 500)
print("resampled cycle:", fixed.shape)
