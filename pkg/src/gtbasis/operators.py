"""Generator actions on patterns, matrix realizations, bracket verification.

The raising generator for row k bumps one entry of row(k) by 1; the
coefficient attached to bumping position j is a square root of a rational
built from the shifted entries l[i][r] = row(r)[i] - i.  Lowering mirrors it
with all shifts reversed, and diagonal generators act by the row-content
differences.  Invalid targets are skipped before any formula is evaluated;
for a valid target the denominator is provably nonzero (shifted entries
within a row are strictly decreasing) and the radicand is positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .patterns import GTPattern, Partition, enumerate_patterns
from .scalars import RadicalScalar, sqrt_rational


class InternalConsistencyError(RuntimeError):
    """A formula produced something impossible (zero denominator, bad sign)."""


class ModuleVector:
    """Sparse linear combination of patterns with RadicalScalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[GTPattern, RadicalScalar] | None = None):
        clean = {}
        if terms:
            for pat, coeff in terms.items():
                if not coeff.is_zero():
                    clean[pat] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ModuleVector is immutable")

    @classmethod
    def unit(cls, pattern: GTPattern) -> "ModuleVector":
        return cls({pattern: RadicalScalar.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, pattern: GTPattern) -> RadicalScalar:
        return self.terms.get(pattern, RadicalScalar.zero())

    def support(self) -> set[GTPattern]:
        return set(self.terms)

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        if not isinstance(other, ModuleVector):
            return NotImplemented
        out = dict(self.terms)
        for pat, coeff in other.terms.items():
            acc = out.get(pat)
            acc = coeff if acc is None else acc + coeff
            if acc.is_zero():
                out.pop(pat, None)
            else:
                out[pat] = acc
        res = ModuleVector.__new__(ModuleVector)
        object.__setattr__(res, "terms", out)
        return res

    def scale(self, c: RadicalScalar) -> "ModuleVector":
        if c.is_zero():
            return ModuleVector()
        res = ModuleVector.__new__(ModuleVector)
        object.__setattr__(res, "terms", {p: v * c for p, v in self.terms.items()})
        return res

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "ModuleVector(0)"
        bits = [
            "(%s)*%s" % (coeff, pat.to_string())
            for pat, coeff in sorted(self.terms.items(), key=lambda kv: kv[0].key())
        ]
        return "ModuleVector(%s)" % " + ".join(bits)


def _shifted(pattern: GTPattern, r: int) -> list[int]:
    """l[i][r] = row(r)[i] - i for i = 1..r (returned 0-based)."""
    return [e - i for i, e in enumerate(pattern.row(r), start=1)]


def act_raise(k: int, xi: GTPattern) -> ModuleVector:
    """Action of the raising generator on row k: sum over bumpable entries."""
    n = xi.n
    if not 1 <= k <= n - 1:
        raise ValueError("raise row index %d out of range for n=%d" % (k, n))
    out: dict[GTPattern, RadicalScalar] = {}
    lk = _shifted(xi, k)
    lku = _shifted(xi, k + 1)
    lkd = _shifted(xi, k - 1) if k > 1 else []
    for j in range(1, k + 1):
        target = xi.replace(k, j, xi.entry(k, j) + 1)
        if target is None:
            continue
        ljk = lk[j - 1]
        num = Fraction(-1)
        for li in lku:
            num *= li - ljk
        for li in lkd:
            num *= li - ljk - 1
        den = Fraction(1)
        for i, li in enumerate(lk, start=1):
            if i != j:
                den *= (li - ljk) * (li - ljk - 1)
        if den == 0:
            raise InternalConsistencyError(
                "zero denominator raising row %d of %s at position %d"
                % (k, xi.to_string(), j)
            )
        radicand = num / den
        if radicand <= 0:
            raise InternalConsistencyError(
                "nonpositive radicand %s raising row %d of %s at position %d"
                % (radicand, k, xi.to_string(), j)
            )
        out[target] = sqrt_rational(radicand)
    return ModuleVector(out)


def act_lower(k: int, xi: GTPattern) -> ModuleVector:
    """Action of the lowering generator on row k (adjoint of act_raise)."""
    n = xi.n
    if not 1 <= k <= n - 1:
        raise ValueError("lower row index %d out of range for n=%d" % (k, n))
    out: dict[GTPattern, RadicalScalar] = {}
    lk = _shifted(xi, k)
    lku = _shifted(xi, k + 1)
    lkd = _shifted(xi, k - 1) if k > 1 else []
    for j in range(1, k + 1):
        target = xi.replace(k, j, xi.entry(k, j) - 1)
        if target is None:
            continue
        ljk = lk[j - 1]
        num = Fraction(-1)
        for li in lku:
            num *= li - ljk + 1
        for li in lkd:
            num *= li - ljk
        den = Fraction(1)
        for i, li in enumerate(lk, start=1):
            if i != j:
                den *= (li - ljk + 1) * (li - ljk)
        if den == 0:
            raise InternalConsistencyError(
                "zero denominator lowering row %d of %s at position %d"
                % (k, xi.to_string(), j)
            )
        radicand = num / den
        if radicand <= 0:
            raise InternalConsistencyError(
                "nonpositive radicand %s lowering row %d of %s at position %d"
                % (radicand, k, xi.to_string(), j)
            )
        out[target] = sqrt_rational(radicand)
    return ModuleVector(out)


def act_diag(i: int, xi: GTPattern) -> tuple[int, GTPattern]:
    """Diagonal generator: eigenvalue sum(row(i)) - sum(row(i-1))."""
    if not 1 <= i <= xi.n:
        raise ValueError("diag index %d out of range for n=%d" % (i, xi.n))
    return xi.content(i) - xi.content(i - 1), xi


@dataclass(frozen=True)
class GeneratorSpec:
    """One of the distinguished generators: raise/lower row k, diag i, cartan i."""

    kind: str  # "raise" | "lower" | "diag" | "cartan"
    index: int

    def __post_init__(self):
        if self.kind not in ("raise", "lower", "diag", "cartan"):
            raise ValueError("unknown generator kind %r" % (self.kind,))

    def check_range(self, n: int):
        hi = n if self.kind == "diag" else n - 1
        if not 1 <= self.index <= hi:
            raise ValueError(
                "%s index %d out of range 1..%d" % (self.kind, self.index, hi)
            )


class OperatorMatrix:
    """Dense square matrix of RadicalScalars over the canonical pattern basis.

    Column j holds the image of the j-th pattern in ascending enumeration
    order.  ``meta`` optionally remembers (partition, generator label, index)
    for serialization.
    """

    __slots__ = ("dim", "entries", "meta")

    def __init__(self, entries, meta=None):
        entries = tuple(tuple(row) for row in entries)
        dim = len(entries)
        if any(len(row) != dim for row in entries):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "meta", meta)

    def __setattr__(self, name, value):
        raise AttributeError("OperatorMatrix is immutable")

    @classmethod
    def zero(cls, dim: int) -> "OperatorMatrix":
        z = RadicalScalar.zero()
        return cls([[z] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim: int) -> "OperatorMatrix":
        z, one = RadicalScalar.zero(), RadicalScalar.one()
        return cls([[one if r == c else z for c in range(dim)] for r in range(dim)])

    def nonzeros(self):
        """Yield (row, col, value) for every nonzero entry."""
        for r, row in enumerate(self.entries):
            for c, v in enumerate(row):
                if not v.is_zero():
                    yield r, c, v

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.entries for v in row)

    def trace(self) -> RadicalScalar:
        acc = RadicalScalar.zero()
        for i in range(self.dim):
            acc = acc + self.entries[i][i]
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, OperatorMatrix)
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch: %d vs %d" % (self.dim, other.dim))
        return OperatorMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ]
        )

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch: %d vs %d" % (self.dim, other.dim))
        d = self.dim
        z = RadicalScalar.zero()
        # sparse-friendly: only walk nonzero entries
        left_by_col: list[list[tuple[int, RadicalScalar]]] = [[] for _ in range(d)]
        for r, c, v in self.nonzeros():
            left_by_col[c].append((r, v))
        out = [[z] * d for _ in range(d)]
        for k, row in enumerate(other.entries):
            for c, bv in enumerate(row):
                if bv.is_zero():
                    continue
                for r, av in left_by_col[k]:
                    out[r][c] = out[r][c] + av * bv
        return OperatorMatrix(out)

    def to_float_array(self):
        """Entries as a nested list of floats (numpy-friendly)."""
        return [[v.to_float() for v in row] for row in self.entries]

    def __repr__(self):
        label = ""
        if self.meta:
            label = " %s" % (self.meta,)
        return "OperatorMatrix(dim=%d%s)" % (self.dim, label)


def operator_matrix(spec: GeneratorSpec, partition: Partition) -> OperatorMatrix:
    """Matrix of a generator over the ascending pattern basis."""
    spec.check_range(partition.n)
    basis = enumerate_patterns(partition)
    index = {pat: i for i, pat in enumerate(basis)}
    d = len(basis)
    z = RadicalScalar.zero()
    cols: list[dict[int, RadicalScalar]] = []
    for pat in basis:
        if spec.kind == "raise":
            image = act_raise(spec.index, pat)
            cols.append({index[p]: v for p, v in image.terms.items()})
        elif spec.kind == "lower":
            image = act_lower(spec.index, pat)
            cols.append({index[p]: v for p, v in image.terms.items()})
        elif spec.kind == "diag":
            ev, _ = act_diag(spec.index, pat)
            cols.append({index[pat]: RadicalScalar.from_rational(ev)} if ev else {})
        else:  # cartan
            ev1, _ = act_diag(spec.index, pat)
            ev2, _ = act_diag(spec.index + 1, pat)
            ev = ev1 - ev2
            cols.append({index[pat]: RadicalScalar.from_rational(ev)} if ev else {})
    entries = [[z] * d for _ in range(d)]
    for c, col in enumerate(cols):
        for r, v in col.items():
            entries[r][c] = v
    kind_label = {"raise": "E", "lower": "F", "diag": "H", "cartan": "cartan"}
    meta = (partition, kind_label[spec.kind], spec.index)
    return OperatorMatrix(entries, meta=meta)


def commutator(a: OperatorMatrix, b: OperatorMatrix) -> OperatorMatrix:
    """A@B - B@A, exact."""
    return (a @ b) - (b @ a)


def general_element(i: int, j: int, partition: Partition) -> OperatorMatrix:
    """Matrix of E_{i,j} (i != j); non-adjacent indices via nested brackets.

    E_{i,j} with |i-j| = 1 is a plain raising/lowering generator; otherwise
    E_{i,j} = [E_{i,k}, E_{k,j}] with k one step from i toward j.
    """
    n = partition.n
    if i == j:
        raise ValueError("diagonal element requested; use diag/cartan")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("indices (%d,%d) out of range for n=%d" % (i, j, n))
    if j == i + 1:
        return operator_matrix(GeneratorSpec("raise", i), partition)
    if j == i - 1:
        return operator_matrix(GeneratorSpec("lower", j), partition)
    k = i + 1 if j > i else i - 1
    return commutator(
        general_element(i, k, partition), general_element(k, j, partition)
    )


class RelationReport:
    """Outcome of verify_sln_relations: named checks with pass/fail detail."""

    def __init__(self, partition: Partition):
        self.partition = partition
        self.checks: list[tuple[str, bool, str]] = []

    def record(self, name: str, ok: bool, detail: str = ""):
        self.checks.append((name, ok, detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self) -> list[tuple[str, str]]:
        return [(name, detail) for name, ok, detail in self.checks if not ok]

    def __repr__(self):
        return "RelationReport(%s: %d checks, %s)" % (
            self.partition,
            len(self.checks),
            "PASS" if self.passed else "FAIL",
        )


def _first_difference(a: OperatorMatrix, b: OperatorMatrix) -> str:
    for r in range(a.dim):
        for c in range(a.dim):
            if a.entries[r][c] != b.entries[r][c]:
                return "first difference at (%d,%d): %s vs %s" % (
                    r,
                    c,
                    a.entries[r][c],
                    b.entries[r][c],
                )
    return ""


def verify_sln_relations(partition: Partition) -> RelationReport:
    """Exhaustively check the defining bracket relations on this module.

    Covers [E_{i,j}, E_{j,l}] = E_{i,l}, [E_{i,j}, E_{j,i}] = H_i - H_j,
    vanishing brackets for disjoint index pairs, zero traces of all E_{i,j},
    and zero traces of the cartan differences.
    """
    n = partition.n
    report = RelationReport(partition)
    mats: dict[tuple[int, int], OperatorMatrix] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                mats[(i, j)] = general_element(i, j, partition)
    diags = {
        i: operator_matrix(GeneratorSpec("diag", i), partition)
        for i in range(1, n + 1)
    }

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for l in range(1, n + 1):
                if l == j or l == i:
                    continue
                got = commutator(mats[(i, j)], mats[(j, l)])
                want = mats[(i, l)]
                ok = got == want
                report.record(
                    "[E(%d,%d),E(%d,%d)] = E(%d,%d)" % (i, j, j, l, i, l),
                    ok,
                    "" if ok else _first_difference(got, want),
                )

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            got = commutator(mats[(i, j)], mats[(j, i)])
            want = diags[i] - diags[j]
            ok = got == want
            report.record(
                "[E(%d,%d),E(%d,%d)] = H(%d)-H(%d)" % (i, j, j, i, i, j),
                ok,
                "" if ok else _first_difference(got, want),
            )

    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for i1, j1 in pairs:
        for i2, j2 in pairs:
            if j1 == i2 or i1 == j2:
                continue
            got = commutator(mats[(i1, j1)], mats[(i2, j2)])
            ok = got.is_zero()
            report.record(
                "[E(%d,%d),E(%d,%d)] = 0" % (i1, j1, i2, j2),
                ok,
                "" if ok else _first_difference(got, OperatorMatrix.zero(got.dim)),
            )

    for (i, j), mat in sorted(mats.items()):
        tr = mat.trace()
        report.record(
            "trace E(%d,%d) = 0" % (i, j), tr.is_zero(), "" if tr.is_zero() else str(tr)
        )
    for i in range(1, n):
        tr = (diags[i] - diags[i + 1]).trace()
        report.record(
            "trace cartan(%d) = 0" % i, tr.is_zero(), "" if tr.is_zero() else str(tr)
        )
    return report


# -- serialization -------------------------------------------------------------


def matrix_to_json(mat: OperatorMatrix) -> dict:
    """Documented schema: partition, generator, index, dim, entries."""
    if mat.meta is None:
        raise ValueError("matrix has no generator metadata to serialize")
    partition, generator, index = mat.meta
    return {
        "partition": list(partition.parts),
        "generator": generator,
        "index": index,
        "dim": mat.dim,
        "entries": [[v.to_json() for v in row] for row in mat.entries],
    }


def matrix_from_json(data: dict) -> OperatorMatrix:
    entries = [
        [RadicalScalar.from_json(cell) for cell in row] for row in data["entries"]
    ]
    meta = (Partition(data["partition"]), data["generator"], data["index"])
    mat = OperatorMatrix(entries, meta=meta)
    if mat.dim != data["dim"]:
        raise ValueError("dim field %r does not match entries" % (data["dim"],))
    return mat


def matrix_market(mat: OperatorMatrix, threshold: float = 1e-12) -> str:
    """Coordinate-format text of the floating-point image.

    Entries with |value| below the threshold are omitted; the header comment
    records the partition and generator when available.
    """
    lines = ["%%MatrixMarket matrix coordinate real general"]
    if mat.meta is not None:
        partition, generator, index = mat.meta
        lines.append("%% partition %s generator %s index %d" % (partition, generator, index))
    coords = []
    for r, c, v in mat.nonzeros():
        x = v.to_float()
        if abs(x) >= threshold:
            coords.append((r + 1, c + 1, x))
    coords.sort()
    lines.append("%d %d %d" % (mat.dim, mat.dim, len(coords)))
    for r, c, x in coords:
        lines.append("%d %d %.16g" % (r, c, x))
    return "\n".join(lines) + "\n"
