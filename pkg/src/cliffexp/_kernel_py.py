"""Pure-Python blade kernel.

Blades are int bitmasks: bit ``i - 1`` set means generator ``e_i`` is present.
``neg_mask`` has the bits of the generators squaring to -1.  Coefficient
dicts map masks to scalars of any field type (Fraction, Decimal, ...).
"""


def _popcount(x):
    return bin(x).count("1")


def blade_sign(a, b, neg_mask):
    """Sign of ``e_a * e_b`` relative to the canonical blade ``e_(a ^ b)``."""
    swaps = 0
    x = a >> 1
    while x:
        swaps += _popcount(x & b)
        x >>= 1
    swaps += _popcount(a & b & neg_mask)
    return -1 if swaps & 1 else 1


def geometric_product(xs, ys, neg_mask):
    out = {}
    for a, ca in xs.items():
        for b, cb in ys.items():
            c = ca * cb
            if blade_sign(a, b, neg_mask) < 0:
                c = -c
            m = a ^ b
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
    return {m: c for m, c in out.items() if c != 0}


def outer_product(xs, ys):
    out = {}
    for a, ca in xs.items():
        for b, cb in ys.items():
            if a & b:
                continue
            c = ca * cb
            if blade_sign(a, b, 0) < 0:
                c = -c
            m = a | b
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
    return {m: c for m, c in out.items() if c != 0}
