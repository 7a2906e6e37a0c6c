"""Monte Carlo factorization-degree filter.

A polynomial whose splitting field sits inside the compositum of all cubic
fields has Galois group of exponent dividing 6, so modulo any prime of good
reduction every irreducible factor has degree dividing 6 (Frobenius cycle
lengths are element orders).  Sampling primes and factoring therefore gives
a one-sided test: a factor of degree not dividing 6 certainly rules the
polynomial out; never finding one proves nothing.
"""
import random
from dataclasses import dataclass

from ..exact.polyq import PolyQ
from ..exact.factor import ddf_degrees
from ..exact.rational import is_probable_prime
from ..exact.zx import zx_yun
from ..exact.polyfp import fp_from_zx

PRIME_LOW = 10 ** 3
PRIME_HIGH = 10 ** 5

RULED_OUT = "ruled-out"
PLAUSIBLE = "plausible"


@dataclass(frozen=True)
class FilterResult:
    verdict: str
    witness_prime: int | None
    witness_degree: int | None
    trials: int
    seed: int

    @property
    def ruled_out(self) -> bool:
        return self.verdict == RULED_OUT

    def to_json(self):
        return {
            "verdict": self.verdict,
            "witness_prime": self.witness_prime,
            "witness_degree": self.witness_degree,
            "trials": self.trials,
            "seed": self.seed,
        }


def _squarefree_int_part(g: PolyQ):
    """Primitive integer coefficients of the squarefree part of g."""
    _, zs = g.primitive_integer()
    out = [1]
    for fac, _ in zx_yun(zs):
        if len(fac) > 1:
            acc = [0] * (len(out) + len(fac) - 1)
            for i, a in enumerate(out):
                for j, b in enumerate(fac):
                    acc[i + j] += a * b
            out = acc
    return out


def _uniform_prime(rng: random.Random) -> int:
    while True:
        x = rng.randrange(PRIME_LOW, PRIME_HIGH + 1)
        if is_probable_prime(x):
            return x


def mc_s3_filter(g: PolyQ, trials: int, seed: int) -> FilterResult:
    """Sample `trials` primes of good reduction for g, uniform in
    [10^3, 10^5]; ruled-out iff some irreducible factor mod p has degree
    not dividing 6. One-sided: plausible is not a proof."""
    if not isinstance(g, PolyQ):
        g = PolyQ(g)
    if g.is_zero():
        raise ValueError("polynomial must be nonzero")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    seed = int(seed)
    rng = random.Random(seed)
    zs = _squarefree_int_part(g)
    if len(zs) <= 1:
        return FilterResult(PLAUSIBLE, None, None, trials, seed)
    sampled = 0
    rejected = 0
    while sampled < trials:
        p = _uniform_prime(rng)
        # bad prime: leading coefficient drops or gbar not squarefree
        fbar = fp_from_zx(zs, p)
        if len(fbar) != len(zs) or _has_repeated_root(fbar, p):
            rejected += 1
            if rejected > 10000 * trials:
                raise ArithmeticError("internal error: cannot find good primes")
            continue
        sampled += 1
        for d, _count in ddf_degrees(PolyQ(zs), p):
            if 6 % d != 0:
                return FilterResult(RULED_OUT, p, d, trials, seed)
    return FilterResult(PLAUSIBLE, None, None, trials, seed)


def _has_repeated_root(fbar, p):
    from ..exact.polyfp import fp_gcd, fp_derivative
    der = fp_derivative(fbar, p)
    if not der:
        return True
    return len(fp_gcd(fbar, der, p)) > 1
