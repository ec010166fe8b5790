"""Built-in sanity suite behind the `selftest` CLI command.

Smaller and faster than the full test suite: checks both algorithms
against the digit-wise reference and confirms the iteration bounds of
the parallel scheme on its extreme inputs.
"""

from .magnitude import compare_magnitude, format_magnitude, parse_magnitude
from .oracle import subtract_digitwise
from .parallel import subtract_parallel
from .rng import SplitMix64
from .sequential import subtract_sequential

_SEED = 20260810
_WORKER_CYCLE = (1, 2, 3, 4, 8)


def _directed_pairs() -> list[tuple[str, str]]:
    pairs = [
        ("1" + "0" * 54, "1"),
        ("1" + "0" * 90, "9" * 18),
        ("9" * 60, "9" * 60),
        ("9" * 60, "1"),
        ("12345678909876543211234567890987654321", "0"),
        ("1000000000000000000", "1"),
        ("1000000000000000000", "999999999999999999"),
        ("7", "7"),
        ("10", "9"),
    ]
    for k in (19, 37, 54, 72, 180):
        pairs.append(("1" + "0" * k, "1"))
        pairs.append(("5" + "0" * k + "3", "4"))
    return pairs


def _random_pairs(count: int, max_digits: int) -> list[tuple[str, str]]:
    from .bench import gen_ordered_pair

    rng = SplitMix64(_SEED)
    pairs = []
    for _ in range(count):
        digits = 1 + int(rng.next_u64()) % max_digits
        pairs.append(gen_ordered_pair(digits, rng))
    return pairs


def run_selftest(echo=print) -> bool:
    ok = True

    pairs = _directed_pairs() + _random_pairs(300, 600)
    checked = 0
    for idx, (a_text, b_text) in enumerate(pairs):
        a = parse_magnitude(a_text)
        b = parse_magnitude(b_text)
        if compare_magnitude(a, b) < 0:
            a, b = b, a
        want = subtract_digitwise(format_magnitude(a), format_magnitude(b))
        got_seq = format_magnitude(subtract_sequential(a, b))
        if got_seq != want:
            echo(f"FAIL oracle equivalence (sequential) on pair {idx}")
            ok = False
            continue
        workers = _WORKER_CYCLE[idx % len(_WORKER_CYCLE)]
        got_par, _ = subtract_parallel(a, b, workers)
        if format_magnitude(got_par) != want:
            echo(f"FAIL oracle equivalence (parallel, workers={workers}) on pair {idx}")
            ok = False
            continue
        checked += 1
    if checked == len(pairs):
        echo(f"ok: oracle equivalence on {checked} pairs")

    for n in (2, 4, 16, 256):
        a = parse_magnitude("1" + "0" * (18 * (n - 1)))
        b = parse_magnitude("1")
        result, stats = subtract_parallel(a, b, 4)
        if stats.iterations != n or format_magnitude(result) != "9" * (18 * (n - 1)):
            echo(f"FAIL worst-case iteration bound at {n} limbs")
            ok = False
    echo("ok: worst-case ripple takes limb_count - 1 resolution passes")

    rng = SplitMix64(_SEED + 1)
    for i in range(50):
        digits = 1 + int(rng.next_u64()) % 200
        big = "".join(chr(ord("5") + int(v) % 5) for v in rng.next_block(digits))
        small = "".join(chr(ord("1") + int(v) % 4) for v in rng.next_block(digits))
        _, stats = subtract_parallel(
            parse_magnitude(big), parse_magnitude(small), _WORKER_CYCLE[i % len(_WORKER_CYCLE)]
        )
        if stats.iterations != 1:
            echo(f"FAIL borrow-free input took {stats.iterations} passes")
            ok = False
    echo("ok: borrow-free inputs finish in a single pass")

    echo("selftest passed" if ok else "selftest FAILED")
    return ok
