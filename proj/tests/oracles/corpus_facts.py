"""Dense-grid oracles for registered corpus facts and breakpoint clearance.

Run: python3 tests/oracles/corpus_facts.py
The printed values are frozen into src/testbed.cpp and tests/.
"""
import numpy as np


def grid_variation(g, n=4096):
    x = np.cos(np.linspace(0.0, np.pi, n))[::-1]
    v = g(x)
    return np.abs(np.diff(v)).sum()


def kink_dx(x):          # partial derivative of (x-0.3)|x-0.3|/2
    return np.abs(x - 0.3)


def kink_dy(y):          # partial derivative of (y+0.4)|y+0.4|/2
    return np.abs(y + 0.4)


def kink_dtilde_x(x):    # d/dphi of the x-part pulled back: -sin(phi)|x-0.3|
    return -np.sqrt(np.clip(1 - x * x, 0, None)) * np.abs(x - 0.3)


def kink_dtilde_y(y):
    return -np.sqrt(np.clip(1 - y * y, 0, None)) * np.abs(y + 0.4)


def exact_dtilde_variation(c):
    # h(x) = -sqrt(1-x^2)|x-c| vanishes at -1, c, 1; variation = 2(|min left| + |min right|)
    from scipy.optimize import minimize_scalar
    f = lambda x: np.sqrt(1 - x * x) * abs(x - c)
    left = minimize_scalar(lambda x: -f(x), bounds=(-1, c), method="bounded", options={"xatol": 1e-14})
    right = minimize_scalar(lambda x: -f(x), bounds=(c, 1), method="bounded", options={"xatol": 1e-14})
    return 2 * (f(left.x) + f(right.x))


print("V1(f_x)        grid:", repr(grid_variation(kink_dx)))
print("V2(f_y)        grid:", repr(grid_variation(kink_dy)))
print("V1(Dt10 f)     grid:", repr(grid_variation(kink_dtilde_x)), " exact:", repr(exact_dtilde_variation(0.3)))
print("V2(Dt01 f)     grid:", repr(grid_variation(kink_dtilde_y)), " exact:", repr(exact_dtilde_variation(-0.4)))

for b in (0.37, -0.21, 0.3, -0.4):
    best = min(abs(np.cos(k * np.pi / m) - b) for m in range(1, 130) for k in range(m + 1))
    print("breakpoint", b, "min CGL distance (m<=129):", best)
