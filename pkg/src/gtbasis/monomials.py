"""Monomial families: mirrored lowering words applied to the highest pattern.

Each pattern's raising word, read backwards with raises turned into lowers,
is a lowering monomial; applying all of them to β and measuring the exact
rank of the resulting columns decides whether the family is a basis.
Duplicate words are kept, not deduplicated — the family is whatever the
schedule produces, and the rank check measures exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .operators import InternalConsistencyError, ModuleVector, OperatorMatrix
from .patterns import GTPattern, Partition, enumerate_patterns, highest_pattern
from .raising import (
    GeneratorWord,
    alternate_row_order,
    apply_word,
    canonical_row_order,
    raising_word,
)


class UnsupportedScheduleError(ValueError):
    """Asked for a sweep schedule that does not exist for this n."""


def resolve_schedule(n: int, schedule) -> tuple[str, list[int]]:
    """Normalize a schedule descriptor to (name, application row order)."""
    if schedule == "canonical":
        return "canonical", canonical_row_order(n)
    if schedule == "alternate":
        if n != 3:
            raise UnsupportedScheduleError(
                "alternate schedule needs n=3, got n=%d" % n
            )
        return "alternate", alternate_row_order(n)
    if isinstance(schedule, (list, tuple)):
        order = [int(r) for r in schedule]
        if not all(1 <= r <= n - 1 for r in order):
            raise UnsupportedScheduleError(
                "custom schedule rows must lie in 1..%d: %r" % (n - 1, order)
            )
        return "custom", order
    raise UnsupportedScheduleError("unknown schedule %r" % (schedule,))


def monomial_word(xi: GTPattern, schedule="canonical") -> GeneratorWord:
    """The lowering monomial for ξ: its raising word mirrored."""
    _, order = resolve_schedule(xi.n, schedule)
    return raising_word(xi, order).mirror()


@dataclass
class MonomialFamily:
    """One lowering word per pattern, in canonical enumeration order."""

    partition: Partition
    schedule: str
    patterns: list[GTPattern]
    words: list[GeneratorWord]
    duplicate_of: list[int | None]

    @property
    def distinct_count(self) -> int:
        return sum(1 for d in self.duplicate_of if d is None)

    @property
    def duplicates(self) -> list[tuple[int, int]]:
        """(index, first-occurrence index) pairs for repeated words."""
        return [(i, d) for i, d in enumerate(self.duplicate_of) if d is not None]


def monomial_family(partition: Partition, schedule="canonical") -> MonomialFamily:
    """Build the family for a schedule, flagging duplicated words."""
    name, order = resolve_schedule(partition.n, schedule)
    basis = enumerate_patterns(partition)
    words = [raising_word(pat, order).mirror() for pat in basis]
    seen: dict[GeneratorWord, int] = {}
    duplicate_of: list[int | None] = []
    for i, word in enumerate(words):
        if word in seen:
            duplicate_of.append(seen[word])
        else:
            seen[word] = i
            duplicate_of.append(None)
    return MonomialFamily(partition, name, basis, words, duplicate_of)


def basis_matrix(family: MonomialFamily) -> OperatorMatrix:
    """Column i = word_i applied to β, over the canonical pattern basis."""
    basis = enumerate_patterns(family.partition)
    index = {pat: i for i, pat in enumerate(basis)}
    beta = highest_pattern(family.partition)
    d = len(basis)
    from .scalars import RadicalScalar

    z = RadicalScalar.zero()
    entries = [[z] * d for _ in range(d)]
    for c, word in enumerate(family.words):
        image = apply_word(word, ModuleVector.unit(beta))
        for pat, coeff in image.terms.items():
            entries[index[pat]][c] = coeff
    return OperatorMatrix(entries)


def rank(mat: OperatorMatrix) -> int:
    """Exact rank by Gaussian elimination, cross-checked in floating point.

    Pivots prefer entries with few radical terms to keep the arithmetic
    small; division is exact via RadicalScalar.invert.  The float check
    counts singular values above 1e-9, and any disagreement is an internal
    error — the two computations share no code.
    """
    import numpy as np

    rows = [list(r) for r in mat.entries]
    d = mat.dim
    r = 0
    for c in range(d):
        pivot_at = None
        for i in range(r, d):
            if not rows[i][c].is_zero():
                if pivot_at is None or len(rows[i][c].terms) < len(
                    rows[pivot_at][c].terms
                ):
                    pivot_at = i
        if pivot_at is None:
            continue
        rows[r], rows[pivot_at] = rows[pivot_at], rows[r]
        inv = rows[r][c].invert()
        for i in range(r + 1, d):
            if rows[i][c].is_zero():
                continue
            factor = rows[i][c] * inv
            rows[i] = [
                a - factor * b if j >= c else a
                for j, (a, b) in enumerate(zip(rows[i], rows[r]))
            ]
        r += 1
        if r == d:
            break
    exact = r

    sv = np.linalg.svd(np.array(mat.to_float_array(), dtype=float), compute_uv=False)
    approx = int((sv > 1e-9).sum()) if sv.size else 0
    if approx != exact:
        raise InternalConsistencyError(
            "exact rank %d disagrees with float rank %d" % (exact, approx)
        )
    return exact


def family_to_json(family: MonomialFamily, family_rank: int | None = None) -> dict:
    """Documented schema with words, duplicate flags, rank, basis verdict."""
    if family_rank is None:
        family_rank = rank(basis_matrix(family))
    return {
        "partition": list(family.partition.parts),
        "schedule": family.schedule,
        "entries": [
            {
                "pattern": pat.to_string(),
                "word": word.to_text(),
                "duplicate_of": dup,
            }
            for pat, word, dup in zip(
                family.patterns, family.words, family.duplicate_of
            )
        ],
        "rank": family_rank,
        "is_basis": family_rank == len(family.patterns),
    }


def family_from_json(data: dict) -> MonomialFamily:
    """Rebuild a family from its JSON document (structure only)."""
    partition = Partition(data["partition"])
    patterns = [
        GTPattern.from_string(item["pattern"], partition) for item in data["entries"]
    ]
    words = [GeneratorWord.from_text(item["word"]) for item in data["entries"]]
    duplicate_of = [item["duplicate_of"] for item in data["entries"]]
    return MonomialFamily(partition, data["schedule"], patterns, words, duplicate_of)
