"""Prime field descriptors.

A field is described by its characteristic only; elements are canonical
residues in [0, p) held as plain ints.  Primality is checked once at
construction with a deterministic Miller-Rabin test (exact for p < 2^31).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidField

MAX_PRIME = (1 << 31) - 1

# Witness set proven deterministic for n < 3_215_031_751 (> 2^31).
_MR_WITNESSES = (2, 3, 5, 7)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for small in (2, 3, 5, 7):
        if n == small:
            return True
        if n % small == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The prime field F_p, 2 <= p < 2^31."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or self.p > MAX_PRIME:
            raise InvalidField(f"characteristic must be an integer in [2, 2^31), got {self.p!r}")
        if not is_prime(self.p):
            raise InvalidField(f"characteristic {self.p} is not prime")

    def inv(self, a: int) -> int:
        """Multiplicative inverse of a nonzero residue."""
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p})"
