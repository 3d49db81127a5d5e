"""
Full-size randomized sweeps comparing the exact pipeline with the oracle.

    python scripts/acceptance_sweep.py [--seed 42] [--only dimension,lines]

Each sweep prints one line; the exit code is 1 if any sweep fails.
"""

import argparse
import os
import random
import sys
import time

# Add src to python path
sys.path.append(os.path.join(os.path.dirname(__file__), "../src"))

from cremona_locus.core.baselocus import (
    base_locus,
    classify_standard,
    is_standard_up_to_order,
    transport_cross_check,
)
from cremona_locus.core.cremona import cremona_divisor, cremona_minus_one
from cremona_locus.core.lattice import (
    PAIRS,
    anticanonical_degree,
    intersect,
    iter_minus_one_ids,
    make_divisor,
    minus_one_curve,
    minus_one_excess,
    pair_excess,
)
from cremona_locus.core.reduction import dimension, fixed_components, is_empty, reduce_to_standard
from cremona_locus.models.report import StandardCase
from cremona_locus.services.oracle import (
    anticanonical_curve_points,
    divisor_kernel,
    eighth_point,
    h0_interpolation,
    isolated_point,
    lies_on_anticanonical_curve,
    line_vanishing_order,
    make_configuration,
    vanishes_at,
)

PRIME = 2**31 - 1
BASES = [
    (1, 2, 3, 4),
    (1, 5, 6, 7),
    (2, 4, 6, 8),
    (5, 6, 7, 8),
    (1, 3, 5, 8),
]


def sweep_dimension(rng, cfg):
    """200 classes, d <= 10, m_i <= 6: reduction h0 equals interpolation h0."""
    bad = []
    for _ in range(200):
        d = rng.randint(0, 10)
        divisor = make_divisor(d, [rng.randint(0, min(6, d + 1)) for _ in range(8)])
        exact = dimension(divisor)
        found = h0_interpolation(divisor.degree, divisor.mults, cfg)
        if exact != found:
            bad.append(f"{divisor}: {exact} vs {found}")
    return bad


def sweep_invariance(rng, cfg):
    """1000 involution and pairing checks; t_a^{b,c} <= 0 on standard classes."""
    bad = []
    for _ in range(1000):
        d = rng.randint(-3, 25)
        divisor = make_divisor(d, [rng.randint(-3, 15) for _ in range(8)])
        basis = rng.choice(BASES)
        image = cremona_divisor(divisor, basis)
        if cremona_divisor(image, basis) != divisor:
            bad.append(f"involution fails on {divisor}")
        if anticanonical_degree(image) != anticanonical_degree(divisor):
            bad.append(f"K changes on {divisor}")
        curve_id = rng.choice(list(iter_minus_one_ids(3)))
        if curve_id.a == 0 and set(curve_id.pair) <= set(basis):
            continue
        moved = minus_one_curve(cremona_minus_one(curve_id, basis))
        if intersect(image, moved) != intersect(divisor, minus_one_curve(curve_id)):
            bad.append(f"pairing of {divisor} with {curve_id} changes")

    ids = [i for i in iter_minus_one_ids(6) if i.a >= 1]
    checked = 0
    while checked < 200:
        d = rng.randint(1, 20)
        divisor = make_divisor(d, sorted((rng.randint(0, d) for _ in range(8)), reverse=True))
        if 2 * d < sum(divisor.mults[:4]):
            continue
        checked += 1
        for curve_id in ids:
            if minus_one_excess(divisor, curve_id) > 0:
                bad.append(f"{curve_id} in the base locus of standard {divisor}")
    return bad


def _fixed_free_non_standard(rng):
    while True:
        d = rng.randint(2, 20)
        divisor = make_divisor(d, [rng.randint(0, d) for _ in range(8)])
        if is_empty(divisor):
            continue
        _, residual = fixed_components(divisor)
        if not is_standard_up_to_order(residual):
            return residual


def sweep_transport(rng, cfg):
    """100 fixed-free non-standard classes with d <= 20."""
    bad = []
    for _ in range(100):
        residual = _fixed_free_non_standard(rng)
        if not transport_cross_check(residual):
            bad.append(str(residual))
    return bad


def sweep_lines(rng, cfg):
    """50 standard classes of the lines case: order along l_{i,j} = max(0, t)."""
    bad = []
    checked = 0
    while checked < 50:
        d = rng.randint(2, 8)
        divisor = make_divisor(d, sorted((rng.randint(0, d) for _ in range(8)), reverse=True))
        if not is_standard_up_to_order(divisor) or is_empty(divisor):
            continue
        if classify_standard(divisor) is not StandardCase.LINES:
            continue
        checked += 1
        kernel = divisor_kernel(divisor, cfg)
        for i, j in PAIRS:
            expected = max(0, pair_excess(divisor, i, j))
            found = line_vanishing_order(kernel, cfg, i, j)
            if found != expected:
                bad.append(f"{divisor} l_{i},{j}: t={expected} order={found}")
    return bad


def sweep_point(rng, cfg):
    """L3(2m; m^7, m-1) for m = 1..3: every member vanishes at the isolated point."""
    bad = []
    eighth = eighth_point(cfg, range(1, 8))
    for m in (1, 2, 3):
        divisor = make_divisor(2 * m, [m] * 7 + [m - 1])
        locus = base_locus(divisor)
        if locus.point is None or locus.point.mult != m:
            bad.append(f"{divisor}: point {locus.point}")
            continue
        kernel = divisor_kernel(divisor, cfg)
        if m == 1 and kernel.dimension != 3:
            bad.append(f"net of quadrics has dimension {kernel.dimension}")
        trace = reduce_to_standard(locus.residual).trace
        point = isolated_point(locus.point, trace, cfg)
        if not vanishes_at(kernel, point):
            bad.append(f"{divisor} does not vanish at its isolated point")
        if not lies_on_anticanonical_curve(cfg, point):
            bad.append(f"isolated point of {divisor} is off D_Q8")
        if m > 1 and point == eighth:
            bad.append(f"isolated point of {divisor} did not move off the eighth point")
    return bad


def sweep_anticanonical(rng, cfg):
    """L3(2m; m^8) = m D_Q8 for m = 1..5; sampled points of D_Q8 for m = 1."""
    bad = []
    for m in range(1, 6):
        locus = base_locus(make_divisor(2 * m, [m] * 8))
        if locus.dq8_mult != m or locus.curves or locus.point is not None:
            bad.append(f"L3({2 * m}; {m}^8): dq8_mult {locus.dq8_mult}")
    kernel = divisor_kernel(make_divisor(2, [1] * 8), cfg)
    for point in anticanonical_curve_points(cfg, limit=10):
        if not vanishes_at(kernel, point):
            bad.append(f"{point} on D_Q8 is not a base point of L3(2; 1^8)")
    return bad


def sweep_k_one(rng, cfg):
    """50 fixed-free classes with K = 1 end at L3(2m; m^7, m-1)."""
    bad = []
    found = 0
    while found < 50:
        d = rng.randint(1, 16)
        mults = [rng.randint(0, d) for _ in range(7)]
        last = 4 * d - 1 - sum(mults)
        if not 0 <= last <= d:
            continue
        divisor = make_divisor(d, mults + [last])
        if is_empty(divisor):
            continue
        fixed, _ = fixed_components(divisor)
        if not fixed.is_empty:
            continue
        found += 1
        standard = reduce_to_standard(divisor).standard
        m = standard.mult(1)
        if m < 1 or standard != make_divisor(2 * m, [m] * 7 + [m - 1]):
            bad.append(f"{divisor} ends at {standard}")
    return bad


SWEEPS = {
    "dimension": sweep_dimension,
    "invariance": sweep_invariance,
    "transport": sweep_transport,
    "lines": sweep_lines,
    "point": sweep_point,
    "anticanonical": sweep_anticanonical,
    "k_one": sweep_k_one,
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--only", default="", help="comma-separated sweep names")
    args = parser.parse_args()

    names = [name for name in args.only.split(",") if name] or list(SWEEPS)
    cfg = make_configuration(PRIME, args.seed)
    failed = False
    for name in names:
        rng = random.Random(f"{args.seed}:{name}")
        start = time.perf_counter()
        bad = SWEEPS[name](rng, cfg)
        elapsed = time.perf_counter() - start
        status = "ok  " if not bad else "FAIL"
        print(f"{status} {name:14} {elapsed:7.2f}s")
        for line in bad[:10]:
            print(f"       {line}")
        failed = failed or bool(bad)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
