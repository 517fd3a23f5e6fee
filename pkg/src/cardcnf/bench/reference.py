"""Published clause and auxiliary counts for at-most-2 encodings.

Rows are keyed by n; columns by encoder registry name.
"""

from dataclasses import dataclass
from typing import Any

REFERENCE_K = 2
REFERENCE_ENCODERS = ("seqcounter", "gp", "dgp", "dgc")

# n: (seqcounter, gp, dgp, dgc)
_CLAUSES: dict[int, tuple[int, int, int, int]] = {
    200_000: (999_993, 654_117, 462_163, 448_996),
    400_000: (1_999_993, 1_273_908, 897_953, 877_578),
    600_000: (2_999_993, 1_892_916, 1_329_347, 1_301_906),
    800_000: (3_999_993, 2_506_839, 1_754_915, 1_723_022),
    1_000_000: (4_999_993, 3_120_159, 2_179_177, 2_143_170),
    1_200_000: (5_999_993, 3_737_979, 2_605_203, 2_561_360),
    1_400_000: (6_999_993, 4_349_103, 3_024_873, 2_979_142),
    1_600_000: (7_999_993, 4_959_408, 3_445_443, 3_395_660),
    1_800_000: (8_999_993, 5_571_486, 3_866_913, 3_811_884),
    2_000_000: (9_999_993, 6_181_791, 4_284_737, 4_227_056),
    2_200_000: (10_999_993, 6_793_356, 4_707_827, 4_641_736),
    2_400_000: (11_999_993, 7_401_942, 5_122_113, 5_056_372),
    2_600_000: (12_999_993, 8_011_734, 5_541_665, 5_470_200),
    2_800_000: (13_999_993, 8_622_291, 5_956_707, 5_883_808),
    3_000_000: (14_999_993, 9_232_587, 6_377_267, 6_297_534),
}

_AUX: dict[int, tuple[int, int, int, int]] = {
    200_000: (399_998, 20_955, 31_205, 24_656),
    400_000: (799_998, 27_552, 49_130, 38_981),
    600_000: (1_199_998, 33_888, 64_849, 51_173),
    800_000: (1_599_998, 38_529, 77_649, 61_751),
    1_000_000: (1_999_998, 42_969, 89_794, 71_837),
    1_200_000: (2_399_998, 48_909, 102_821, 80_954),
    1_400_000: (2_799_998, 52_617, 112_666, 89_867),
    1_600_000: (3_199_998, 56_052, 122_961, 98_132),
    1_800_000: (3_599_998, 60_078, 133_706, 106_250),
    2_000_000: (3_999_998, 63_513, 142_626, 113_840),
    2_200_000: (4_399_998, 67_368, 154_181, 121_202),
    2_400_000: (4_799_998, 70_230, 161_330, 128_534),
    2_600_000: (5_199_998, 73_494, 171_114, 135_446),
    2_800_000: (5_599_998, 77_013, 178_641, 142_262),
    3_000_000: (5_999_998, 80_445, 188_929, 149_129),
}


@dataclass(frozen=True)
class ReferenceCounts:
    """Published counts for one (encoder, n) at k = 2."""

    encoder: str
    n: int
    clauses: int
    aux: int


def reference_sizes() -> list[int]:
    return sorted(_CLAUSES)


def reference_counts(encoder: str, n: int, k: int = REFERENCE_K) -> ReferenceCounts | None:
    """Published counts, or None when the table has no such row."""
    if k != REFERENCE_K or encoder not in REFERENCE_ENCODERS or n not in _CLAUSES:
        return None
    column = REFERENCE_ENCODERS.index(encoder)
    return ReferenceCounts(encoder, n, _CLAUSES[n][column], _AUX[n][column])


def deviation(emitted: int, reference: int) -> float:
    """Relative deviation (emitted - reference) / reference."""
    return (emitted - reference) / reference


def compare(encoder: str, n: int, clauses: int, aux: int, k: int = REFERENCE_K) -> dict[str, Any]:
    """Emitted counts next to the published ones and their relative deviations.

    Without a published row only the emitted counts are returned.
    """
    row: dict[str, Any] = {"encoder": encoder, "n": n, "clauses": clauses, "aux": aux}
    ref = reference_counts(encoder, n, k)
    if ref is not None:
        row.update(
            ref_clauses=ref.clauses,
            ref_aux=ref.aux,
            clause_deviation=round(deviation(clauses, ref.clauses), 4),
            aux_deviation=round(deviation(aux, ref.aux), 4),
        )
    return row
