"""Binary cyclic codes as ideals of F_2[x]/(x^n - 1).

A code is identified by its length n and a generator polynomial h that
divides x^n - 1 exactly, with dim = n - deg(h).  Codewords are n-bit
integers under the identification bit i <-> coefficient of x^i.

The module covers: BCH generators over F_{2^m} (least common multiple
of minimal polynomials of consecutive powers of a primitive element),
the odd-to-even length-doubling transform with its interleaving map,
dual generators via reciprocal polynomials, exact and sampled minimum
distance, and the combined rate/distance threshold check used by the
headline inner-code instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import gf2poly
from .errors import CheckFailure, ConstructionError
from .fields import FiniteField, factorize, primitive_element

EXACT_DISTANCE_MAX_DIM = 24


@dataclass(frozen=True)
class CyclicCode:
    """Ideal of F_2[x]/(x^n - 1) generated by h (integer encoding)."""

    n: int
    h: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("length must be positive")
        if self.h == 0:
            raise ConstructionError("zero generator polynomial")
        if gf2poly.degree(self.h) >= self.n:
            raise ConstructionError("deg h must be < n (the zero ideal is excluded)")
        if gf2poly.mod(gf2poly.x_pow_n_minus_1(self.n), self.h) != 0:
            raise ConstructionError(
                f"h (encoding {self.h:#x}) does not divide x^{self.n} - 1"
            )

    @property
    def dim(self) -> int:
        return self.n - gf2poly.degree(self.h)

    @property
    def rate(self) -> Fraction:
        return Fraction(self.dim, self.n)

    def basis(self) -> list[int]:
        """Shift basis {h, xh, ..., x^(k-1) h}; degrees stay below n."""
        return [self.h << i for i in range(self.dim)]

    def contains(self, word: int) -> bool:
        """Membership: a degree < n polynomial is in the ideal iff h divides it."""
        if word < 0 or word >> self.n:
            raise ValueError("word does not fit in n bits")
        return gf2poly.mod(word, self.h) == 0

    def shift(self, word: int, amount: int = 1) -> int:
        return gf2poly.cyclic_shift(word, self.n, amount)

    def random_codeword(self, rng: random.Random) -> int:
        word = 0
        mask = rng.getrandbits(self.dim)
        basis = self.basis()
        while mask:
            low = (mask & -mask).bit_length() - 1
            word ^= basis[low]
            mask &= mask - 1
        return word


@dataclass(frozen=True)
class CodeParams:
    """Reported parameters of a code; d_lower is a proven bound,
    d_upper the best observed codeword weight, d_exact only when an
    exhaustive search has run."""

    n: int
    k: int
    d_lower: int
    d_exact: Optional[int] = None
    d_upper: Optional[int] = None

    def __post_init__(self):
        if not 0 < self.k <= self.n:
            raise ValueError("need 0 < k <= n")
        if self.d_exact is not None:
            if not self.d_lower <= self.d_exact:
                raise ValueError("d_lower must not exceed d_exact")
            if self.d_upper is not None and self.d_exact > self.d_upper:
                raise ValueError("d_exact must not exceed d_upper")

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    @property
    def delta_lower(self) -> Fraction:
        return Fraction(self.d_lower, self.n)


# ---------------------------------------------------------------------------
# BCH construction over F_{2^m}
# ---------------------------------------------------------------------------

def bch_field(m: int) -> tuple[FiniteField, "object"]:
    """F_{2^m} with its deterministic modulus and primitive element."""
    field = FiniteField(2, m)
    return field, primitive_element(field)


def bch_generator(m: int, r: int) -> int:
    """Generator of the BCH(m, r) code: lcm of the minimal polynomials
    of w, w^2, ..., w^r for a primitive w in F_{2^m}.

    Minimal polynomials of conjugate powers coincide, so the lcm is the
    product over distinct Frobenius orbits (each minimal polynomial is
    irreducible and squarefree).
    """
    if m < 2:
        raise ValueError("need m >= 2")
    n = (1 << m) - 1
    if not 1 <= r <= n:
        raise ValueError(f"designed root count r must be in 1..{n}, got {r}")
    field, w = bch_field(m)
    from .fields import minimal_polynomial

    h = 1
    seen: set[int] = set()
    for i in range(1, r + 1):
        if i in seen:
            continue
        j = i
        while j not in seen:
            seen.add(j)
            j = (2 * j) % n
        h = gf2poly.mul(h, minimal_polynomial(w**i))
    return h


def bch_code(m: int, r: int) -> CyclicCode:
    return CyclicCode((1 << m) - 1, bch_generator(m, r))


def bch_designed_params(m: int, r: int) -> CodeParams:
    """Parameters with k from the actual generator degree and the
    Vandermonde designed-distance bound d >= r + 1."""
    code = bch_code(m, r)
    return CodeParams(n=code.n, k=code.dim, d_lower=r + 1)


def code_from_generator(n: int, h: int) -> CyclicCode:
    return CyclicCode(n, h)


# ---------------------------------------------------------------------------
# Odd-to-even doubling
# ---------------------------------------------------------------------------

def interleave(a: int, b: int, n: int) -> int:
    """The doubling interleaver: length-n words a, b (n odd) map to the
    2n-bit word taking a at even positions below n, b at odd positions
    below n, then roles swapped on the upper half.

    Equivalently a_even(x^2) + x^(n+1) a_odd(x^2) + x b_odd(x^2)
    + x^n b_even(x^2); it is linear and injective, and the image weight
    is weight(a) + weight(b).
    """
    if n % 2 == 0:
        raise ValueError("interleaving is defined for odd n")
    if a >> n or b >> n or a < 0 or b < 0:
        raise ValueError("inputs must be n-bit words")
    out = 0
    for i in range(n):
        src = a if i % 2 == 0 else b
        if (src >> i) & 1:
            out |= 1 << i
        src = b if i % 2 == 0 else a
        if (src >> i) & 1:
            out |= 1 << (n + i)
    return out


def double_length(code: CyclicCode) -> CyclicCode:
    """Cyclic code of length 2n generated by h^2, for odd n.

    Its codeword set is exactly the interleaved image of code x code,
    so the dimension doubles, the rate is preserved, and the minimum
    distance equals that of the input (the normalized distance halves).
    """
    if code.n % 2 == 0:
        raise ValueError("doubling requires odd length (x^n - 1 squarefree)")
    return CyclicCode(2 * code.n, gf2poly.mul(code.h, code.h))


# ---------------------------------------------------------------------------
# Duality
# ---------------------------------------------------------------------------

def dual_generator(code: CyclicCode) -> int:
    """Generator of the dual code: the reciprocal of (x^n - 1)/h.

    Its cyclic shifts span the dual; the first n - k shifts are a basis
    (their leading terms form a staircase).  For the full space (h = 1)
    the dual is {0} and 0 is returned.
    """
    g, rem = gf2poly.divmod_(gf2poly.x_pow_n_minus_1(code.n), code.h)
    assert rem == 0
    if gf2poly.degree(g) >= code.n:  # h == 1, dual of the full space
        return 0
    return gf2poly.reciprocal(g)


def dual_basis_rows(code: CyclicCode) -> list[int]:
    """n - k independent shifts of the dual generator (empty for h = 1)."""
    d = dual_generator(code)
    if d == 0:
        return []
    return [d << j for j in range(code.n - code.dim)]


# ---------------------------------------------------------------------------
# Minimum distance measurement
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistanceReport:
    mode: str                  # "exact" or "sampled"
    value: Optional[int]       # exact distance, or best observed weight
    witness: Optional[int]     # a codeword achieving `value`
    trials: int = 0


def min_distance(code: CyclicCode, mode: str = "exact", trials: int = 10000,
                 seed: int = 0) -> DistanceReport:
    """Minimum weight of a nonzero codeword.

    exact: Gray-code walk over all 2^k - 1 nonzero codewords; capped at
    dim <= EXACT_DISTANCE_MAX_DIM to stay under a minute.
    sampled: best weight over seeded random codewords, an upper bound
    only (never usable to certify a lower bound).  Per-trial seeds are
    derived by counter so any future trial-level parallelism keeps
    results reproducible.
    """
    k = code.dim
    if mode == "exact":
        if k > EXACT_DISTANCE_MAX_DIM:
            raise ValueError(
                f"exact enumeration capped at dim {EXACT_DISTANCE_MAX_DIM}, code has {k}"
            )
        basis = code.basis()
        best = None
        witness = None
        word = 0
        for i in range(1, 1 << k):
            word ^= basis[(i & -i).bit_length() - 1]
            w = word.bit_count()
            if best is None or w < best:
                best, witness = w, word
        return DistanceReport("exact", best, witness)
    if mode == "sampled":
        best = None
        witness = None
        for t in range(trials):
            rng = random.Random((seed << 20) ^ t)
            mask = rng.getrandbits(k)
            if mask == 0:
                continue
            word = 0
            basis = code.basis()
            while mask:
                low = (mask & -mask).bit_length() - 1
                word ^= basis[low]
                mask &= mask - 1
            w = word.bit_count()
            if best is None or w < best:
                best, witness = w, word
        return DistanceReport("sampled", best, witness, trials=trials)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# The even-length inner code with guaranteed rate and distance
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InnerCodeCheck:
    code: CyclicCode           # the doubled code of length q + 1
    base: CyclicCode           # the BCH code of odd length (q + 1)/2
    r: int                     # designed root count used
    params: CodeParams         # of the doubled code, with designed d_lower
    rate_ok: bool              # rate >= 1/2 + 1/a (exact rational)
    distance_ok: bool          # delta_lower > 2 sqrt(q)/(q+1) (exact rational)

    @property
    def passed(self) -> bool:
        return self.rate_ok and self.distance_ok


def _is_prime_power(n: int) -> bool:
    return len(factorize(n)) == 1


def check_good_inner_code(q: int, m: int, a: int) -> InnerCodeCheck:
    """Build the even-length inner code for parameters tied by
    q + 1 = 2(2^m - 1) and check its guaranteed thresholds.

    The designed root count is r = floor((n/m)(1 - 2/a)) with
    n = 2^m - 1.  The rate threshold is 1/2 + 1/a and the distance
    threshold is 2 sqrt(q)/(q+1), both compared in exact rational
    arithmetic (the distance comparison is squared to avoid the
    irrational right-hand side).
    """
    if a <= 2:
        raise ValueError("need a > 2")
    if m < 10:
        raise ValueError("the guarantee requires m >= 10")
    if not _is_prime_power(q):
        raise ConstructionError(f"q = {q} is not a prime power")
    n = (1 << m) - 1
    if q + 1 != 2 * n:
        raise ConstructionError(f"constraint q + 1 = 2(2^{m} - 1) fails for q = {q}")
    r = int(Fraction(n, m) * (1 - Fraction(2, a)))
    base = bch_code(m, r)
    doubled = double_length(base)
    # doubling preserves the minimum distance, so d >= r + 1 carries over
    params = CodeParams(n=doubled.n, k=doubled.dim, d_lower=r + 1)
    rate_ok = params.rate >= Fraction(1, 2) + Fraction(1, a)
    delta = params.delta_lower
    distance_ok = delta > 0 and delta * delta * (q + 1) ** 2 > 4 * q
    return InnerCodeCheck(doubled, base, r, params, rate_ok, distance_ok)


def require_inner_thresholds(result: InnerCodeCheck) -> None:
    """Raise CheckFailure when a threshold is not met (CLI exit 1)."""
    if not result.passed:
        raise CheckFailure(
            f"inner-code thresholds not met: rate_ok={result.rate_ok}, "
            f"distance_ok={result.distance_ok} "
            f"(rate={result.params.rate}, delta_lower={result.params.delta_lower})"
        )


# ---------------------------------------------------------------------------
# Text file format: line 1 "n k", line 2 generator polynomial as a hex
# bit string (least significant nibble = lowest-degree coefficients).
# ---------------------------------------------------------------------------

def dumps_code(code: CyclicCode) -> str:
    return f"{code.n} {code.dim}\n{gf2poly.to_hex(code.h)}\n"


def loads_code(text: str) -> CyclicCode:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ValueError("code file must have exactly two lines")
    try:
        n, k = (int(tok) for tok in lines[0].split())
        h = gf2poly.from_hex(lines[1].strip())
    except ValueError as exc:
        raise ValueError(f"malformed code file: {exc}") from exc
    code = CyclicCode(n, h)
    if code.dim != k:
        raise ValueError(f"header says k = {k} but deg(h) gives k = {code.dim}")
    return code


def save_code(code: CyclicCode, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_code(code))


def load_code(path) -> CyclicCode:
    with open(path) as fh:
        return loads_code(fh.read())
