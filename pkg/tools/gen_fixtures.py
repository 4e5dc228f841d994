"""Regenerate the committed b-file fixtures under fixtures/.

Deliberately independent of the wlocube package: every term is computed
here from first principles (popcounts, sorts, math.comb/factorial) so the
fixtures can serve as an oracle for the library.
"""

import math
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "fixtures"

WLO_ROWS = 10  # flattened triangle rows for A294648
MASK_ROWS = 8  # flattened rows for A305860 (values have 2^n bits)
A051459_TERMS = 10  # later terms exceed sensible decimal size
A000142_TERMS = 20
A001142_TERMS = 20
A000120_TERMS = 256


def write_bfile(name: str, pairs) -> None:
    path = OUT / f"b{name[1:]}.txt"
    path.write_text("".join(f"{i} {v}\n" for i, v in pairs))
    print(f"wrote {path}")


def wlo_row(n: int) -> list[int]:
    return sorted(range(1 << n), key=lambda s: (s.bit_count(), s))


def mask_serial(n: int, k: int) -> int:
    size = 1 << n
    return sum(1 << (size - 1 - i) for i in range(size) if i.bit_count() == k)


def main() -> None:
    OUT.mkdir(exist_ok=True)

    terms = [v for n in range(1, WLO_ROWS + 1) for v in wlo_row(n)]
    write_bfile("A294648", enumerate(terms, start=1))

    terms = [mask_serial(n, k) for n in range(1, MASK_ROWS + 1) for k in range(n + 1)]
    write_bfile("A305860", enumerate(terms, start=1))

    write_bfile("A000120", ((i, i.bit_count()) for i in range(A000120_TERMS)))
    write_bfile("A000142", ((n, math.factorial(n)) for n in range(1, A000142_TERMS + 1)))
    write_bfile(
        "A001142",
        ((n, math.prod(math.comb(n, k) for k in range(n + 1))) for n in range(1, A001142_TERMS + 1)),
    )
    write_bfile(
        "A051459",
        ((n, math.prod(math.factorial(math.comb(n, k)) for k in range(n + 1))) for n in range(1, A051459_TERMS + 1)),
    )


if __name__ == "__main__":
    main()
