"""Reduction-based soundness harness for claimed torsion shapes.

Every torsion point rational over the compositum of all cubic fields lives
in a subfield whose Galois closure has exponent dividing 6, so at a prime
of good reduction it reduces into E(F_{p^6}).  The prime-to-p part of the
claimed group must therefore divide #E(F_{p^6}).  A failure falsifies the
claimed shape; passes are only evidence.
"""
from dataclasses import dataclass

from ..shapes import TorsionShape
from ..curves.local import ap, order_ext


@dataclass(frozen=True)
class LocalCheckEntry:
    prime: int
    status: str  # "pass" | "fail" | "skipped"
    checked_order: int | None
    group_order: int | None
    note: str | None

    def to_json(self):
        return {
            "prime": self.prime,
            "status": self.status,
            "checked_order": self.checked_order,
            "group_order": self.group_order,
            "note": self.note,
        }


@dataclass(frozen=True)
class LocalCheckReport:
    shape: TorsionShape
    entries: tuple

    @property
    def all_pass(self) -> bool:
        return all(e.status != "fail" for e in self.entries)

    def to_json(self):
        return {
            "torsion": self.shape.to_wire(),
            "all_pass": self.all_pass,
            "entries": [e.to_json() for e in self.entries],
        }


def _prime_to_p_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def local_injection_check(E, T: TorsionShape, primes) -> LocalCheckReport:
    """For each prime: pass iff the prime-to-p part of |T| divides
    #E(F_{p^6}). Bad-reduction primes are skipped with a note."""
    if not isinstance(T, TorsionShape):
        T = TorsionShape(*T)
    entries = []
    for p in primes:
        p = int(p)
        if p < 5:
            raise ValueError("primes must be at least 5")
        local = ap(E, p)
        if not local.good_reduction:
            entries.append(LocalCheckEntry(p, "skipped", None, None,
                                           "bad reduction"))
            continue
        want = _prime_to_p_part(T.m1 * T.m2, p)
        have = order_ext(local.ap, p, 6)
        status = "pass" if have % want == 0 else "fail"
        entries.append(LocalCheckEntry(p, status, want, have, None))
    return LocalCheckReport(T, tuple(entries))
