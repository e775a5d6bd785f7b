"""Reverse-mode autodiff with imf.ndgrad.

Fits a tiny two-layer classifier to a noisy XOR problem after checking one
gradient against a finite difference. The plateau scheduler watches the loss
and would halve the learning rate if it stopped improving.
"""

import numpy as np

from imf.ndgrad import Adam, Linear, Module, PlateauScheduler, Tensor, default_dtype, ops

rng = np.random.default_rng(0)

# %% data: four noisy clusters, label = xor of the quadrant signs
centres = np.array([[1, 1], [-1, -1], [1, -1], [-1, 1]], dtype=float)
x = np.repeat(centres, 50, axis=0) + 0.3 * rng.standard_normal((200, 2))
y = np.repeat([0, 0, 1, 1], 50)


class MLP(Module):
    def __init__(self):
        super().__init__()
        self.fc1 = Linear(2, 16, rng)
        self.fc2 = Linear(16, 2, rng)

    def forward(self, x):
        return self.fc2(ops.relu(self.fc1(x)))


# %% gradient check in double precision
with default_dtype(np.float64):
    net = MLP()
    loss = ops.cross_entropy(net(Tensor(x)), y)
    loss.backward()
    w = net.fc1.weight
    h = 1e-6
    w.data[0, 0] += h
    up = float(ops.cross_entropy(net(Tensor(x)), y).data)
    w.data[0, 0] -= 2 * h
    down = float(ops.cross_entropy(net(Tensor(x)), y).data)
    w.data[0, 0] += h
    print(f"analytic {w.grad[0, 0]:.8f}  numeric {(up - down) / (2 * h):.8f}")

# %% training loop
net = MLP()
opt = Adam(net.parameters(), lr=0.05, weight_decay=5e-4)
sched = PlateauScheduler(opt, patience=5, factor=0.5)
for epoch in range(60):
    opt.zero_grad()
    logits = net(Tensor(x))
    loss = ops.cross_entropy(logits, y)
    loss.backward()
    opt.step()
    sched.step(float(loss.data))
    if epoch % 10 == 0:
        acc = (logits.data.argmax(axis=1) == y).mean()
        print(f"epoch {epoch:2d} loss {float(loss.data):.4f} acc {acc:.2f} lr {opt.lr:.4f}")
