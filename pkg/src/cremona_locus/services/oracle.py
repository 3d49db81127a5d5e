"""
Finite-field interpolation oracle.

Eight random points of P^3 over F_p stand in for general points. The
oracle computes h^0 of L3(d; m) from the rank of the vanishing conditions,
measures the order of a system along a line, finds the eighth base point of
the net of quadrics through seven points, and moves points through the
coordinate cubic Cremona map so that (-1)-curves and the isolated base
point can be sampled and tested for membership in the base locus.
"""

import logging
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from ..core.cremona import check_basis, lowering_word
from ..core.lattice import POINT_LABELS
from ..exceptions import OracleError, PreconditionError
from ..models.classes import NUM_POINTS, DivisorClass, MinusOneCurveId
from ..models.oracle import KernelBasis, Point, PointConfiguration
from ..models.report import PointSpec
from ..models.trace import ReductionTrace
from .finite_field import (
    MAX_PRIME,
    cross,
    inverse,
    inverse_mod,
    mat_vec,
    normalize,
    nullspace,
    rank,
    solve,
)

logger = logging.getLogger(__name__)

MIN_PRIME = 10**6
MAX_ATTEMPTS = 100
RESAMPLE_ATTEMPTS = 10

# Unordered coordinate pairs of P^3, the monomials y_j*y_k of a quadric
# through the four vertices of the coordinate simplex.
_SIMPLEX_PAIRS: Tuple[Tuple[int, int], ...] = tuple(combinations(range(4), 2))
_PAIR_INDEX = {pair: n for n, pair in enumerate(_SIMPLEX_PAIRS)}


# ---------------------------------------------------------------------------
# configurations
# ---------------------------------------------------------------------------


def _in_general_position(points: np.ndarray, p: int) -> bool:
    """No four of the points coplanar (hence no three collinear, no two equal)."""
    return all(rank(points[list(quad)], p) == 4 for quad in combinations(range(len(points)), 4))


def make_configuration(p: int, seed: int) -> PointConfiguration:
    """
    Draw 8 points of P^3 over F_p from `seed`.

    Raises:
        PreconditionError: if p is not a prime in (10^6, 2^31) or seed < 0.
        OracleError: if no sample in general position turns up.
    """
    if p <= MIN_PRIME:
        raise PreconditionError(f"prime too small: {p} (need p > {MIN_PRIME})")
    if p >= MAX_PRIME:
        raise PreconditionError(f"prime too large: {p} (need p < 2^31)")
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")
    if seed < 0:
        raise PreconditionError(f"seed must be non-negative, got {seed}")

    rng = np.random.default_rng(seed)
    for attempt in range(MAX_ATTEMPTS):
        points = rng.integers(0, p, size=(NUM_POINTS, 4), dtype=np.int64)
        if _in_general_position(points, p):
            return PointConfiguration(
                prime=p,
                seed=seed,
                points=tuple(tuple(int(v) for v in row) for row in points),
            )
        logger.warning("degenerate sample %d for seed %d, redrawing", attempt, seed)
    raise OracleError(f"no configuration in general position after {MAX_ATTEMPTS} draws")


def _rng(cfg: PointConfiguration, *tags: int) -> np.random.Generator:
    return np.random.default_rng([cfg.seed, *tags])


def _scalar(rng: np.random.Generator, p: int) -> int:
    return int(rng.integers(1, p))


def _combine(weights: Sequence[int], vectors: Sequence[np.ndarray], p: int) -> np.ndarray:
    """sum w_k v_k mod p, reducing each product."""
    total = np.zeros(4, dtype=np.int64)
    for weight, vector in zip(weights, vectors):
        total = (total + (int(weight) * vector) % p) % p
    return total


# ---------------------------------------------------------------------------
# monomials and vanishing conditions
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def monomials(d: int) -> Tuple[Tuple[int, int, int, int], ...]:
    """Exponent vectors of the degree-d monomials in x_0..x_3, graded-lex order."""
    exps = [e for e in product(range(d + 1), repeat=4) if sum(e) == d]
    return tuple(sorted(exps, reverse=True))


@lru_cache(maxsize=None)
def _exponent_array(d: int) -> np.ndarray:
    return np.array(monomials(d), dtype=np.int64).reshape(-1, 4)


def _power_table(point: Sequence[int], d: int, p: int) -> np.ndarray:
    """table[i, k] = x_i^k mod p."""
    table = np.ones((4, d + 1), dtype=np.int64)
    x = np.array(point, dtype=np.int64) % p
    for k in range(1, d + 1):
        table[:, k] = (table[:, k - 1] * x) % p
    return table


def _falling_factorials(d: int, p: int) -> np.ndarray:
    """table[e, a] = e (e-1) ... (e-a+1) mod p, zero for a > e."""
    table = np.zeros((d + 1, d + 1), dtype=np.int64)
    for e in range(d + 1):
        value = 1
        for a in range(e + 1):
            table[e, a] = value
            value = value * (e - a) % p
    return table


def monomial_values(point: Sequence[int], d: int, p: int) -> np.ndarray:
    """All degree-d monomials evaluated at `point`."""
    exps = _exponent_array(d)
    powers = _power_table(point, d, p)
    values = np.ones(len(exps), dtype=np.int64)
    for i in range(4):
        values = (values * powers[i, exps[:, i]]) % p
    return values


def _compositions(total: int) -> List[Tuple[int, int, int, int]]:
    return [a for a in product(range(total + 1), repeat=4) if sum(a) == total]


def point_conditions(point: Sequence[int], m: int, d: int, p: int) -> np.ndarray:
    """
    Rows asking a degree-d form to vanish to order m at `point`.

    For a homogeneous form (and p > d) this is the vanishing of every partial
    derivative of order m-1, binom(m+2, 3) rows. m > d+1 is treated as d+1.
    """
    exps = _exponent_array(d)
    m = min(m, d + 1)
    if m <= 0:
        return np.zeros((0, len(exps)), dtype=np.int64)
    powers = _power_table(point, d, p)
    falling = _falling_factorials(d, p)
    rows = []
    for alpha in _compositions(m - 1):
        alpha = np.array(alpha, dtype=np.int64)
        rest = exps - alpha
        valid = (rest >= 0).all(axis=1)
        kept, left = exps[valid], rest[valid]
        values = np.ones(len(kept), dtype=np.int64)
        for i in range(4):
            values = (values * falling[kept[:, i], alpha[i]]) % p
            values = (values * powers[i, left[:, i]]) % p
        row = np.zeros(len(exps), dtype=np.int64)
        row[valid] = values
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def _check_degree(d: int, p: int) -> None:
    if d < 0:
        raise PreconditionError(f"degree must be non-negative, got {d}")
    if p <= d:
        raise PreconditionError(f"need p > d for derivative conditions, got p={p}, d={d}")


def conditions_matrix(d: int, mults: Sequence[int], cfg: PointConfiguration) -> np.ndarray:
    """Stack the vanishing conditions of all points; columns are monomials(d)."""
    _check_degree(d, cfg.prime)
    if len(mults) > NUM_POINTS:
        raise PreconditionError(f"at most {NUM_POINTS} multiplicities, got {len(mults)}")
    blocks = [
        point_conditions(cfg.points[i], m, d, cfg.prime)
        for i, m in enumerate(mults)
        if m > 0
    ]
    n_monomials = comb(d + 3, 3)
    if not blocks:
        return np.zeros((0, n_monomials), dtype=np.int64)
    matrix = np.concatenate(blocks, axis=0)
    logger.debug("conditions matrix for d=%d, m=%s: %s", d, list(mults), matrix.shape)
    return matrix


def h0_interpolation(d: int, mults: Sequence[int], cfg: PointConfiguration) -> int:
    """binom(d+3, 3) minus the rank of the conditions matrix."""
    matrix = conditions_matrix(d, mults, cfg)
    return comb(d + 3, 3) - rank(matrix, cfg.prime)


def kernel_basis(d: int, mults: Sequence[int], cfg: PointConfiguration) -> KernelBasis:
    """Basis of the degree-d forms with multiplicity >= m_i at P_i."""
    matrix = conditions_matrix(d, mults, cfg)
    basis = nullspace(matrix, cfg.prime, cols=comb(d + 3, 3))
    return KernelBasis(
        degree=d,
        prime=cfg.prime,
        mults=tuple(int(m) for m in mults),
        vectors=tuple(tuple(int(v) for v in row) for row in basis),
    )


def divisor_kernel(divisor: DivisorClass, cfg: PointConfiguration) -> KernelBasis:
    return kernel_basis(divisor.degree, divisor.mults, cfg)


def evaluate_kernel(kb: KernelBasis, point: Sequence[int]) -> Tuple[int, ...]:
    """Values of every basis form at `point`."""
    if kb.dimension == 0:
        return ()
    values = mat_vec(kb.as_array(), monomial_values(point, kb.degree, kb.prime), kb.prime)
    return tuple(int(v) for v in values)


def vanishes_at(kb: KernelBasis, point: Sequence[int]) -> bool:
    return all(v == 0 for v in evaluate_kernel(kb, point))


def _random_member(kb: KernelBasis, rng: np.random.Generator) -> np.ndarray:
    p = kb.prime
    weights = rng.integers(1, p, size=kb.dimension, dtype=np.int64)
    return ((weights[:, None] * kb.as_array()) % p).sum(axis=0) % p


# ---------------------------------------------------------------------------
# lines
# ---------------------------------------------------------------------------


def line_vanishing_order(
    kb: KernelBasis, cfg: PointConfiguration, i: int, j: int, trials: int = 3
) -> int:
    """
    Order of vanishing of the system along the line P_i P_j.

    A random member f is restricted to a random line through a random point
    Q of P_i P_j; the lowest nonzero coefficient of f(Q + tau w) is the
    multiplicity of f at Q. The minimum over `trials` draws is returned;
    d+1 means every draw vanished identically.
    """
    if kb.dimension == 0:
        raise OracleError("line order needs a non-empty system")
    if i == j:
        raise PreconditionError("a line needs two distinct points")
    p, d = cfg.prime, kb.degree
    rng = _rng(cfg, 1, i, j)
    vandermonde = np.array(
        [[pow(tau, n, p) for n in range(d + 1)] for tau in range(d + 1)], dtype=np.int64
    )
    order = d + 1
    for _ in range(trials):
        member = _random_member(kb, rng)
        q = _combine((_scalar(rng, p), _scalar(rng, p)), (cfg.point(i), cfg.point(j)), p)
        w = rng.integers(0, p, size=4, dtype=np.int64)
        restricted = [
            int(mat_vec(member, monomial_values((q + tau * w) % p, d, p), p))
            for tau in range(d + 1)
        ]
        coefficients = solve(vandermonde, restricted, p)
        nonzero = np.nonzero(coefficients)[0]
        order = min(order, int(nonzero[0]) if nonzero.size else d + 1)
    return order


# ---------------------------------------------------------------------------
# conics through three vertices, eighth point, anticanonical curve
# ---------------------------------------------------------------------------


def _fourth_conic_point(first: Tuple[int, int, int], second: Tuple[int, int, int], p: int):
    """
    Fourth common point of two conics through the three coordinate vertices.

    A conic alpha*st + beta*su + gamma*tu through the vertices is the line
    gamma/s + beta/t + alpha/u = 0 in the inverted coordinates, so the point
    is the entrywise inverse of a cross product.
    """
    u = cross((first[2], first[1], first[0]), (second[2], second[1], second[0]), p)
    if np.count_nonzero(u) < 3:
        raise OracleError("conics through the vertices do not meet in a fourth general point")
    return tuple(inverse_mod(v, p) for v in u)


def _conic_from_quadric_products(
    W: List[List[int]],
    left: Tuple[Tuple[int, int], ...],
    right: Tuple[Tuple[int, int], ...],
    p: int,
) -> Tuple[int, int, int]:
    """Coefficients of c0c1, c0c2, c1c2 in w_A w_B - w_C w_D with w = W c."""
    (a, b), (c, d) = [_PAIR_INDEX[x] for x in left], [_PAIR_INDEX[x] for x in right]
    coefficients = []
    for i, l in ((0, 1), (0, 2), (1, 2)):
        value = W[a][i] * W[b][l] + W[a][l] * W[b][i] - W[c][i] * W[d][l] - W[c][l] * W[d][i]
        coefficients.append(value % p)
    return tuple(coefficients)


def _eighth_point_in_frame(
    cfg: PointConfiguration, frame: Tuple[int, ...], others: Tuple[int, ...]
) -> Point:
    """
    Move `frame` to the coordinate simplex; quadrics through it are
    sum w_jk y_j y_k. A base point y of the net has (y_j y_k) in the span of
    the three columns of W, and those products satisfy
    w01 w23 = w02 w13 = w03 w12. The columns themselves give the three other
    points; the fourth solution is the eighth point.
    """
    p = cfg.prime
    M = cfg.frame(frame)
    A = inverse(M, p)
    W = [[0, 0, 0] for _ in _SIMPLEX_PAIRS]
    for n, label in enumerate(others):
        y = [int(v) for v in mat_vec(A, cfg.point(label), p)]
        for (j, k), row in _PAIR_INDEX.items():
            W[row][n] = y[j] * y[k] % p

    first = _conic_from_quadric_products(W, ((0, 1), (2, 3)), ((0, 2), (1, 3)), p)
    second = _conic_from_quadric_products(W, ((0, 1), (2, 3)), ((0, 3), (1, 2)), p)
    c = _fourth_conic_point(first, second, p)
    w = [sum(W[row][n] * c[n] for n in range(3)) % p for row in range(len(_SIMPLEX_PAIRS))]
    w01, w02, w12, w13 = (w[_PAIR_INDEX[x]] for x in ((0, 1), (0, 2), (1, 2), (1, 3)))
    if w01 == 0 or w02 == 0:
        raise OracleError("eighth point lies on a coordinate plane of the frame")
    x = [
        1,
        w12 * inverse_mod(w02, p) % p,
        w12 * inverse_mod(w01, p) % p,
        w13 * inverse_mod(w01, p) % p,
    ]
    return normalize(mat_vec(M, x, p), p)


_FRAMES = ((0, 1, 2, 3), (3, 4, 5, 6), (0, 2, 4, 6))


def eighth_point(cfg: PointConfiguration, seven: Sequence[int]) -> Point:
    """
    The eighth base point of the net of quadrics through seven of the points.

    Computed in three different coordinate frames; the answers must agree
    and differ from the seven inputs.
    """
    seven = tuple(sorted(set(int(i) for i in seven)))
    if len(seven) != 7 or any(i not in POINT_LABELS for i in seven):
        raise PreconditionError(f"need 7 distinct labels in 1..{NUM_POINTS}, got {seven}")
    answers = set()
    for frame in _FRAMES:
        frame_labels = tuple(seven[k] for k in frame)
        others = tuple(i for i in seven if i not in frame_labels)
        answers.add(_eighth_point_in_frame(cfg, frame_labels, others))
    if len(answers) != 1:
        raise OracleError(f"eighth point depends on the frame: {sorted(answers)}")
    point = answers.pop()
    if point in {normalize(cfg.points[i - 1], cfg.prime) for i in seven}:
        raise OracleError("eighth point coincides with one of the seven")
    return point


def quadric_pencil(cfg: PointConfiguration) -> KernelBasis:
    """The pencil of quadrics through all eight points."""
    pencil = kernel_basis(2, [1] * NUM_POINTS, cfg)
    if pencil.dimension != 2:
        raise OracleError(f"quadrics through 8 points: dimension {pencil.dimension}, expected 2")
    return pencil


def _quadric_value(vector: np.ndarray, point: np.ndarray, p: int) -> int:
    return int(mat_vec(vector, monomial_values(point % p, 2, p), p))


def anticanonical_curve_points(
    cfg: PointConfiguration, limit: Optional[int] = None
) -> List[Point]:
    """
    Points of D_Q8, the base curve of the quadric pencil through the 8 points.

    The plane through P_i, P_j, P_k meets D_Q8 in those three points and one
    more; in plane coordinates x = s P_i + t P_j + u P_k each quadric q of the
    pencil restricts to q(P_i+P_j) st + q(P_i+P_k) su + q(P_j+P_k) tu.
    """
    p = cfg.prime
    pencil = quadric_pencil(cfg).as_array()
    found: List[Point] = []
    for i, j, k in combinations(POINT_LABELS, 3):
        Pi, Pj, Pk = cfg.point(i), cfg.point(j), cfg.point(k)
        conics = [
            tuple(_quadric_value(q, A + B, p) for A, B in ((Pi, Pj), (Pi, Pk), (Pj, Pk)))
            for q in pencil
        ]
        try:
            s, t, u = _fourth_conic_point(conics[0], conics[1], p)
        except OracleError:
            logger.warning("plane through P%d P%d P%d is degenerate, skipped", i, j, k)
            continue
        found.append(normalize(_combine((s, t, u), (Pi, Pj, Pk), p), p))
        if limit is not None and len(found) >= limit:
            break
    return found


def lies_on_anticanonical_curve(cfg: PointConfiguration, point: Sequence[int]) -> bool:
    return vanishes_at(quadric_pencil(cfg), point)


# ---------------------------------------------------------------------------
# coordinate Cremona map
# ---------------------------------------------------------------------------


def cremona_point_map(
    points: Sequence[Sequence[int]], basis: Sequence[int], cfg: PointConfiguration
) -> List[Point]:
    """
    Apply the cubic Cremona map based at the points of `basis`.

    With M the matrix of the basis points, y = M^{-1} x is sent to
    (y1y2y3 : y0y2y3 : y0y1y3 : y0y1y2) and back through M. Points with two
    or more zero coordinates lie on an edge of the tetrahedron and are
    rejected.
    """
    p = cfg.prime
    M = cfg.frame(check_basis(basis))
    A = inverse(M, p)
    images: List[Point] = []
    for x in points:
        y = [int(v) for v in mat_vec(A, x, p)]
        if sum(1 for v in y if v == 0) >= 2:
            raise OracleError(f"{tuple(x)} lies in the indeterminacy locus of the map")
        z = [
            y[1] * y[2] % p * y[3] % p,
            y[0] * y[2] % p * y[3] % p,
            y[0] * y[1] % p * y[3] % p,
            y[0] * y[1] % p * y[2] % p,
        ]
        images.append(normalize(mat_vec(M, z, p), p))
    return images


def transport_configuration(cfg: PointConfiguration, basis: Sequence[int]) -> PointConfiguration:
    """Basis points stay; the other points go through cremona_point_map."""
    basis = check_basis(basis)
    moved = [i for i in POINT_LABELS if i not in basis]
    images = dict(zip(moved, cremona_point_map([cfg.points[i - 1] for i in moved], basis, cfg)))
    points = tuple(images.get(i, cfg.points[i - 1]) for i in POINT_LABELS)
    return cfg.model_copy(update={"points": points})


def configurations_along(
    cfg: PointConfiguration, bases: Sequence[Sequence[int]]
) -> List[PointConfiguration]:
    """[cfg, after step 1, after step 2, ...]."""
    configs = [cfg]
    for basis in bases:
        configs.append(transport_configuration(configs[-1], basis))
    return configs


def _pull_back(
    points: List[Point], bases: Sequence[Sequence[int]], configs: List[PointConfiguration]
) -> List[Point]:
    for index in range(len(bases) - 1, -1, -1):
        points = cremona_point_map(points, bases[index], configs[index])
    return points


# ---------------------------------------------------------------------------
# membership checks
# ---------------------------------------------------------------------------


def sample_minus_one_curve(
    curve_id: MinusOneCurveId, cfg: PointConfiguration, count: int
) -> List[Point]:
    """
    Points of C_a^{b,c}: lower the curve to a line, sample the line in the
    transported configuration and map the samples back.
    """
    p = cfg.prime
    word, line = lowering_word(curve_id)
    configs = configurations_along(cfg, word)
    end = configs[-1]
    rng = _rng(cfg, 2, curve_id.a, curve_id.b, curve_id.c)
    for attempt in range(RESAMPLE_ATTEMPTS):
        samples = [
            normalize(
                _combine(
                    (_scalar(rng, p), _scalar(rng, p)), (end.point(line.b), end.point(line.c)), p
                ),
                p,
            )
            for _ in range(count)
        ]
        try:
            return _pull_back(samples, word, configs)
        except OracleError as exc:
            logger.warning("resampling %s (attempt %d): %s", curve_id, attempt, exc)
    raise OracleError(f"could not sample {curve_id} away from the indeterminacy locus")


def curve_membership_check(
    divisor: DivisorClass,
    curve_id: MinusOneCurveId,
    cfg: PointConfiguration,
    kernel: Optional[KernelBasis] = None,
) -> bool:
    """True iff every member of the system vanishes on sampled points of C_a^{b,c}."""
    if curve_id.a > 2:
        raise PreconditionError(f"curve containment is supported for a <= 2, got {curve_id}")
    kb = kernel or divisor_kernel(divisor, cfg)
    if kb.dimension == 0:
        raise OracleError(f"{divisor} is empty over F_{cfg.prime}")
    samples = sample_minus_one_curve(curve_id, cfg, 2 * curve_id.a + 4)
    return all(vanishes_at(kb, point) for point in samples)


def _polar(q: np.ndarray, x: np.ndarray, y: np.ndarray, p: int) -> int:
    """Symmetric bilinear form of the quadric q, so that B(x, x) = q(x)."""
    total = _quadric_value(q, (x + y) % p, p) - _quadric_value(q, x, p) - _quadric_value(q, y, p)
    return total * inverse_mod(2, p) % p


def _tangent_vector(pencil: np.ndarray, point: np.ndarray, p: int) -> np.ndarray:
    """A second point on the tangent line of D_Q8 at `point`."""
    unit = np.eye(4, dtype=np.int64)
    gradients = [[_polar(q, point, unit[i], p) for i in range(4)] for q in pencil]
    if rank(gradients, p) != 2:
        raise OracleError(f"D_Q8 is singular at {normalize(point, p)}")
    for vector in nullspace(gradients, p):
        if rank([point, vector], p) == 2:
            return vector % p
    raise OracleError(f"no tangent direction at {normalize(point, p)}")


def _poly_mul(f: Sequence[int], g: Sequence[int], p: int) -> List[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return out


def _section_on_conic(
    first: np.ndarray, second: np.ndarray, plane: Sequence[np.ndarray], p: int
) -> Optional[np.ndarray]:
    """
    Fourth point of the section, parametrized along the conic of `first`.

    plane = (a, b, b + c) with a, b and c on D_Q8 (b may be a tangent vector
    at a). Lines through a and (0, 1, x) meet the conic of `first` again at
    (alpha(x), beta(x), x beta(x)); `second` pulls back to a quartic in x
    whose roots are the four points of the section. b sits at x = 0, c at
    x = -1 and a at the root of beta, so the root sum gives the fourth.
    """
    C1 = [[_polar(first, u, v, p) for v in plane] for u in plane]
    C2 = [[_polar(second, u, v, p) for v in plane] for u in plane]
    if C1[0][2] == 0:
        return None
    coordinates = (
        [C1[1][1], 2 * C1[1][2] % p, C1[2][2]],
        [-2 * C1[0][1] % p, -2 * C1[0][2] % p],
        [0, -2 * C1[0][1] % p, -2 * C1[0][2] % p],
    )
    quartic = [0] * 5
    for i in range(3):
        for j in range(3):
            for k, value in enumerate(_poly_mul(coordinates[i], coordinates[j], p)):
                quartic[k] = (quartic[k] + C2[i][j] * value) % p
    if quartic[4] == 0:
        return None
    x_a = -C1[0][1] * inverse_mod(C1[0][2], p) % p
    # roots x_a, 0, -1 and x
    x = (-quartic[3] * inverse_mod(quartic[4], p) - x_a + 1) % p
    alpha, beta = (
        sum(c * pow(x, k, p) for k, c in enumerate(coordinates[0])) % p,
        sum(c * pow(x, k, p) for k, c in enumerate(coordinates[1])) % p,
    )
    return _combine((alpha, beta, beta * x % p), plane, p)


def _plane_section_point(
    pencil: np.ndarray, a: np.ndarray, b: np.ndarray, c: np.ndarray, p: int
) -> np.ndarray:
    """
    The fourth point of D_Q8 on the plane through a, b and c, the class
    H - a - b - c on the curve. b equal to a takes the tangent line at a.
    """
    a, b, c = (np.asarray(v, dtype=np.int64) % p for v in (a, b, c))
    if normalize(c, p) in (normalize(a, p), normalize(b, p)):
        raise OracleError("plane section needs c apart from a and b")
    if normalize(a, p) == normalize(b, p):
        b = _tangent_vector(pencil, a, p)
    plane = (a, b, (b + c) % p)
    if rank(list(plane), p) != 3:
        raise OracleError("plane section points are collinear")
    q0, q1 = pencil[0], pencil[1]
    for first, second in ((q0, q1), (q1, q0), ((q0 + q1) % p, q1)):
        point = _section_on_conic(first, second, plane, p)
        if point is not None and np.any(point) and _quadric_value(second, point, p) == 0:
            return point
    raise OracleError("no smooth conic parametrizes the plane section")


def _point_on_anticanonical_curve(
    end: PointConfiguration, spec: PointSpec, eighth: Point
) -> Point:
    """
    m P' - (m-1) Q on D_Q8, for P' the eighth point and Q the point off the
    seven. Starting from Q, each step R -> R + P' - Q is two plane sections
    through an auxiliary point Z: (R, P', Z) and then (that point, Q, Z).
    """
    p = end.prime
    pencil = quadric_pencil(end).as_array()
    (other,) = [i for i in POINT_LABELS if i not in spec.seven]
    start, shift = end.point(other), np.array(eighth, dtype=np.int64)
    for auxiliary in spec.seven:
        z = end.point(auxiliary)
        try:
            current = start
            for _ in range(spec.mult):
                middle = _plane_section_point(pencil, current, shift, z, p)
                current = _plane_section_point(pencil, middle, start, z, p)
        except OracleError as exc:
            logger.warning("isolated point through P%d failed: %s", auxiliary, exc)
            continue
        return normalize(current, p)
    raise OracleError(f"could not place the isolated point of multiplicity {spec.mult}")


def isolated_point(spec: PointSpec, trace: ReductionTrace, cfg: PointConfiguration) -> Point:
    """
    Coordinates of the isolated base point.

    At the end of the trace the system is L3(2m; m^7, m-1). Its point is the
    eighth point of `spec.seven` for m = 1 and moves along D_Q8 with m; it is
    found in the end configuration and carried back to `cfg`.
    """
    bases = trace.bases
    configs = configurations_along(cfg, bases)
    point = eighth_point(configs[-1], spec.seven)
    if spec.mult > 1:
        point = _point_on_anticanonical_curve(configs[-1], spec, point)
    return _pull_back([point], bases, configs)[0]


def point_membership_check(
    divisor: DivisorClass,
    spec: PointSpec,
    trace: ReductionTrace,
    cfg: PointConfiguration,
    kernel: Optional[KernelBasis] = None,
) -> bool:
    """True iff every member of the system vanishes at the isolated base point."""
    kb = kernel or divisor_kernel(divisor, cfg)
    if kb.dimension == 0:
        raise OracleError(f"{divisor} is empty over F_{cfg.prime}")
    return vanishes_at(kb, isolated_point(spec, trace, cfg))
