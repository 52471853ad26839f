"""Walk through the two-parameter entropy family on small distributions.

The family S(p) = sum_i p_i[(lam - ln p_i)**sigma - lam**sigma] has two
knobs: sigma in (0, 1] bends the logarithm into a fractional power, and
lam >= 0 tempers it.  This script shows the landmarks: the sigma = 1
collapse to Shannon, the lam = 0 one-parameter special case, and how
tempering always lowers the value.
"""

import numpy as np

from tempent import (
    EntropyParams,
    entropy,
    make_dist,
    max_entropy,
    shannon_entropy,
    ubriaco_entropy,
)


def main():
    p = make_dist([0.2, 0.3, 0.5])

    # --- 1. one distribution across the parameter plane -----------------
    print("S(0.2, 0.3, 0.5) over (sigma, lam):")
    print(f"{'':>8}", *[f"lam={l:<6}" for l in (0.0, 0.5, 1.0, 5.0)])
    for sigma in (0.25, 0.5, 0.75, 1.0):
        row = [entropy(p, EntropyParams(sigma, lam)) for lam in (0.0, 0.5, 1.0, 5.0)]
        print(f"sigma={sigma:<4}", *[f"{v:<9.5f}" for v in row])
    print()

    # --- 2. sigma = 1 is Shannon for every lam ---------------------------
    sh = shannon_entropy(p)
    print(f"shannon           : {sh:.12f}")
    for lam in (0.0, 1.0, 10.0):
        v = entropy(p, EntropyParams(1.0, lam))
        print(f"sigma=1, lam={lam:<4}: {v:.12f}   gap {abs(v - sh):.1e}")
    print()

    # --- 3. lam = 0 is the one-parameter fractional form ----------------
    for alpha in (0.3, 0.7):
        a = entropy(p, EntropyParams(alpha, 0.0))
        b = ubriaco_entropy(p, alpha)
        print(f"alpha={alpha}: two-parameter {a:.12f}  direct {b:.12f}  equal={a == b}")
    print()

    # --- 4. tempering only lowers entropy; uniform attains the max ------
    lams = np.linspace(0.0, 8.0, 9)
    vals = [entropy(p, EntropyParams(0.5, float(l))) for l in lams]
    drops = all(b <= a for a, b in zip(vals, vals[1:]))
    print(f"S at sigma=0.5 falls monotonically in lam: {drops}")
    print(f"  lam=0: {vals[0]:.6f}   lam=8: {vals[-1]:.6f}")
    u = make_dist([1.0 / 3.0] * 3)
    print(
        f"uniform hits the bound: S(u)={entropy(u, EntropyParams(0.5, 1.0)):.12f}"
        f"  max_entropy={max_entropy(3, EntropyParams(0.5, 1.0)):.12f}"
    )


if __name__ == "__main__":
    main()
