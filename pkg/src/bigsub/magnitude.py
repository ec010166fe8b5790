"""Decimal magnitudes stored as base-10^18 limbs.

A magnitude is an unsigned integer held as a sequence of limbs, most
significant first.  Each limb packs 18 decimal digits, so every stored
limb is below 10^18 and any transient produced during subtraction
(limb + 10^18) stays below 2^63 and fits a 64-bit signed word.
"""

from dataclasses import dataclass

from .errors import EmptyInput, InvalidDigit, LengthUnderflow

LIMB_DIGITS = 18
LIMB_BASE = 10**LIMB_DIGITS

_DIGITS = frozenset("0123456789")


@dataclass(frozen=True)
class DecimalMagnitude:
    """Canonical unsigned integer: no leading zero limbs, zero is (0,).

    Instances are immutable and safe to share across threads.
    """

    limbs: tuple[int, ...]

    def __post_init__(self):
        if len(self.limbs) == 0:
            raise ValueError("magnitude needs at least one limb")
        if len(self.limbs) > 1 and self.limbs[0] == 0:
            raise ValueError("leading zero limb in a multi-limb magnitude")
        for limb in self.limbs:
            if not 0 <= limb < LIMB_BASE:
                raise ValueError(f"limb {limb} outside [0, 10^{LIMB_DIGITS})")

    @property
    def limb_count(self) -> int:
        return len(self.limbs)

    def is_zero(self) -> bool:
        return self.limbs == (0,)

    def __str__(self) -> str:
        return format_magnitude(self)


def canonical_limbs(limbs: list[int]) -> tuple[int, ...]:
    """Strip leading zero limbs, keeping at least one."""
    k = 0
    last = len(limbs) - 1
    while k < last and limbs[k] == 0:
        k += 1
    return tuple(limbs[k:])


def parse_magnitude(s: str) -> DecimalMagnitude:
    """Parse a decimal digit string into limbs, most significant first.

    Limbs are the right-to-left 18-digit slices of the string; leading
    zeros are absorbed so the result is canonical.
    """
    if len(s) == 0:
        raise EmptyInput("empty operand")
    if not (s.isascii() and s.isdigit()):
        for pos, ch in enumerate(s):
            if ch not in _DIGITS:
                raise InvalidDigit(pos, ch)
    s = s.lstrip("0")
    if not s:
        return DecimalMagnitude((0,))
    head = len(s) % LIMB_DIGITS or LIMB_DIGITS
    limbs = [int(s[:head])]
    limbs.extend(int(s[i : i + LIMB_DIGITS]) for i in range(head, len(s), LIMB_DIGITS))
    return DecimalMagnitude(tuple(limbs))


def format_magnitude(m: DecimalMagnitude) -> str:
    """Render a magnitude as a decimal string.

    The most-significant limb is rendered bare; every inner limb is
    zero-padded to 18 characters so concatenation is value-correct.
    """
    if m.limb_count == 1:
        return "%d" % m.limbs[0]
    return "%d" % m.limbs[0] + "".join("%018d" % limb for limb in m.limbs[1:])


def compare_magnitude(a: DecimalMagnitude, b: DecimalMagnitude) -> int:
    """Three-way compare of canonical magnitudes: -1 less, 0 equal, 1 greater.

    Limb count decides first; equal counts fall back to lexicographic
    comparison of limbs, most significant first.
    """
    if a.limb_count != b.limb_count:
        return -1 if a.limb_count < b.limb_count else 1
    if a.limbs == b.limbs:
        return 0
    return -1 if a.limbs < b.limbs else 1


def pad_to_length(m: DecimalMagnitude, n: int) -> list[int]:
    """Return m's limbs with zero limbs prepended up to length n.

    The output is generally not canonical; it exists so subtraction can
    run over aligned, equal-length limb sequences.
    """
    if n < m.limb_count:
        raise LengthUnderflow(f"cannot pad {m.limb_count} limbs down to {n}")
    return [0] * (n - m.limb_count) + list(m.limbs)
