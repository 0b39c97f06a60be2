"""Dimensions of multigraded components of a free graded Lie superalgebra
over the rationals, the derived bracket-map multiplicities, necklace (Witt)
counts, and the small Diophantine enumerations that drive everything else.

Conventions used throughout the package:

* a generator system is a tuple of positive integer weights, one per
  generator; a generator is odd or even according to its weight parity,
  and only those parities influence dimensions;
* a multidegree x is an integer tuple of the same length counting how many
  times each generator occurs;
* the component of the all-zero multidegree has dimension 1 by convention,
  and any negative coordinate gives dimension 0.

All arithmetic is exact.  Dimension values are asserted to come out as
nonnegative integers; a failure of that assertion is an internal bug, not
bad input.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import divisors, gcd_multi, moebius, multinomial
from .errors import InternalConsistencyError, InvalidInputError


@dataclass(frozen=True)
class GeneratorSystem:
    """An ordered list of generator weights (positive integers)."""

    weights: tuple

    def __post_init__(self):
        weights = tuple(int(a) for a in self.weights)
        if not weights:
            raise InvalidInputError("a generator system needs at least one generator")
        if any(a < 1 for a in weights):
            raise InvalidInputError(f"generator weights must be positive, got {weights}")
        object.__setattr__(self, "weights", weights)

    def __len__(self):
        return len(self.weights)

    def parities(self):
        return tuple(a % 2 for a in self.weights)


def _as_system(gs):
    if isinstance(gs, GeneratorSystem):
        return gs
    return GeneratorSystem(tuple(gs))


def _as_multidegree(gs, x):
    x = tuple(int(v) for v in x)
    if len(x) != len(gs.weights):
        raise InvalidInputError(
            f"multidegree {x} has {len(x)} entries but the system has "
            f"{len(gs.weights)} generators")
    return x


def weighted_degree(gs, x):
    """Total weight sum(a_k * x_k) of a multidegree."""
    gs = _as_system(gs)
    x = _as_multidegree(gs, x)
    return sum(a * v for a, v in zip(gs.weights, x))


@lru_cache(maxsize=1 << 18)
def _dim_by_parity(parities, x):
    # Divisor-sum dimension count.  Callers guarantee every entry of x is
    # nonnegative and at least one is positive.  Zero entries contribute
    # nothing to the gcd, the multinomial or the sign.
    total = sum(x)
    sign_parity = sum(p * v for p, v in zip(parities, x)) % 2
    acc = 0
    for i in divisors(gcd_multi(x)):
        mu = moebius(i)
        if mu == 0:
            continue
        xi = tuple(v // i for v in x)
        term = mu * multinomial(xi)
        if sum(p * v for p, v in zip(parities, xi)) % 2:
            term = -term
        acc += term
    # (-1)^degree * acc / total must come out a nonnegative integer
    if sign_parity:
        acc = -acc
    value, remainder = divmod(acc, total)
    if remainder or value < 0:
        raise InternalConsistencyError(
            f"dimension formula gave {Fraction(acc, total)} for parities "
            f"{parities} and multidegree {x}")
    return value


def lie_component_dim(gs, x):
    """Dimension of the multidegree-x component of the free Lie superalgebra.

    Example: one generator of odd weight, x = (2,) -> 1, the self-bracket.
    """
    gs = _as_system(gs)
    x = _as_multidegree(gs, x)
    if any(v < 0 for v in x):
        return 0
    if all(v == 0 for v in x):
        return 1
    return _dim_by_parity(gs.parities(), x)


def multiplicity(gs, x):
    """sum_k dim(x - e_k) minus dim(x): the corank of the bracket-with-a-
    generator map landing in the multidegree-x component."""
    gs = _as_system(gs)
    x = _as_multidegree(gs, x)
    acc = -lie_component_dim(gs, x)
    for k in range(len(x)):
        lowered = x[:k] + (x[k] - 1,) + x[k + 1:]
        acc += lie_component_dim(gs, lowered)
    return acc


def witt(t, r):
    """Necklace count (1/t) sum_{i|t} mu(i) r^(t/i) for t, r >= 1."""
    if t < 1 or r < 1:
        raise InvalidInputError(f"witt(t, r) needs t >= 1 and r >= 1, got t={t}, r={r}")
    acc = 0
    for i in divisors(t):
        mu = moebius(i)
        if mu:
            acc += mu * r ** (t // i)
    value, remainder = divmod(acc, t)
    if remainder or value < 0:
        raise InternalConsistencyError(f"necklace count gave {Fraction(acc, t)} for t={t}, r={r}")
    return value


def witt_super(t, s, r):
    """Super variant of the necklace count.

    t may be any rational; a non-integral or nonpositive t contributes 0.
    For odd s and t congruent to 2 mod 4 the count picks up the extra
    witt(t/2, r) term coming from the odd part of the grading.
    """
    if s < 1 or r < 1:
        raise InvalidInputError(f"witt_super needs s >= 1 and r >= 1, got s={s}, r={r}")
    t = Fraction(t)
    if t.denominator != 1 or t < 1:
        return 0
    t = int(t)
    if s % 2 == 1 and t % 4 == 2:
        return witt(t, r) + witt(t // 2, r)
    return witt(t, r)


def enumerate_diophantine(weights, target, lower_bounds):
    """All solutions x of sum(weights[k] * x[k]) == target with
    x[k] >= lower_bounds[k], in lexicographic order.

    weights must be positive; each lower bound is 0 or 1.

    Example: weights (3, 1), target 7, bounds (1, 1) -> [(1, 4), (2, 1)].
    """
    weights = tuple(int(a) for a in weights)
    if not weights:
        raise InvalidInputError("enumerate_diophantine needs at least one weight")
    if any(a < 1 for a in weights):
        raise InvalidInputError(f"weights must be positive, got {weights}")
    lower_bounds = tuple(int(b) for b in lower_bounds)
    if len(lower_bounds) != len(weights):
        raise InvalidInputError(
            f"{len(lower_bounds)} lower bounds for {len(weights)} weights")
    if any(b not in (0, 1) for b in lower_bounds):
        raise InvalidInputError(f"lower bounds must each be 0 or 1, got {lower_bounds}")
    target = int(target)

    r = len(weights)
    # tail_min[k] = least weight the coordinates from k on must consume
    tail_min = [0] * (r + 1)
    for k in range(r - 1, -1, -1):
        tail_min[k] = tail_min[k + 1] + weights[k] * lower_bounds[k]

    out = []

    def extend(k, prefix, remaining):
        if k == r:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        v = lower_bounds[k]
        while weights[k] * v + tail_min[k + 1] <= remaining:
            prefix.append(v)
            extend(k + 1, prefix, remaining - weights[k] * v)
            prefix.pop()
            v += 1

    if target >= 0:
        extend(0, [], target)
    return out


def _squarefree_divisor_count(x):
    # square-free divisors > 1 of x and of x - 1 counted together; x = 1
    # contributes nothing (x - 1 = 0 has no meaningful divisor list)
    if x < 1:
        raise InvalidInputError(f"needs a positive integer, got {x}")
    count = 0
    for y in (x - 1, x):
        if y < 2:
            continue
        for d in divisors(y):
            if d > 1 and moebius(d) != 0:
                count += 1
    return count


def multiplicity_lower_bound(gs, x):
    """An exact-rational lower bound for multiplicity(gs, x) on all-positive
    multidegrees, useful as a growth certificate: once it is positive the
    component is guaranteed nontrivial.

    Returns a Fraction (it may be negative, in which case it certifies
    nothing).  Needs sum(x) >= 2.
    """
    gs = _as_system(gs)
    x = _as_multidegree(gs, x)
    if any(v < 1 for v in x):
        raise InvalidInputError(f"the bound needs every coordinate positive, got {x}")
    total = sum(x)
    if total < 2:
        raise InvalidInputError("the bound needs at least two letters in total")
    floors = [v // 2 for v in x]
    half = total // 2
    capped = multinomial(floors + [half - sum(floors)])
    numerator = multinomial(x) - _squarefree_divisor_count(x[0]) * total * capped
    return Fraction(numerator, total * (total - 1))
