"""Weights of patterns: eigenvalue vectors, epsilon strings, decomposition.

The diagonal generator H_i acts on a pattern by the integer
kappa_i = sum(row(i)) - sum(row(i-1)), so each pattern is a weight vector
with weight sum(kappa_i * eps_i) subject to eps_1 + ... + eps_n = 0.  The
shift-invariant form pairs the weight with the cartan differences:
d_i = kappa_i - kappa_{i+1}.
"""

from __future__ import annotations

from .patterns import GTPattern, Partition, enumerate_patterns, highest_pattern


class WeightVector:
    """The vector of H-eigenvalues (kappa_1, ..., kappa_n)."""

    __slots__ = ("kappa",)

    def __init__(self, kappa):
        object.__setattr__(self, "kappa", tuple(int(k) for k in kappa))

    def __setattr__(self, name, value):
        raise AttributeError("WeightVector is immutable")

    @property
    def n(self) -> int:
        return len(self.kappa)

    def __eq__(self, other):
        return isinstance(other, WeightVector) and self.kappa == other.kappa

    def __hash__(self):
        return hash(self.kappa)

    def __repr__(self):
        return "WeightVector(%r)" % (list(self.kappa),)

    def epsilon_string(self) -> str:
        """Render as a combination of eps_i, e.g. "ε_2 + 2ε_3"."""
        parts = []
        for i, k in enumerate(self.kappa, start=1):
            if k == 0:
                continue
            if k == 1:
                text = "ε_%d" % i
            elif k == -1:
                text = "-ε_%d" % i
            else:
                text = "%dε_%d" % (k, i)
            parts.append(text)
        if not parts:
            return "0"
        out = parts[0]
        for text in parts[1:]:
            if text.startswith("-"):
                out += " - " + text[1:]
            else:
                out += " + " + text
        return out

    def to_json(self) -> dict:
        return {
            "kappa": list(self.kappa),
            "fundamental": fundamental_coords(self),
            "epsilon_string": self.epsilon_string(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "WeightVector":
        w = cls(data["kappa"])
        if list(data.get("fundamental", fundamental_coords(w))) != fundamental_coords(w):
            raise ValueError("inconsistent fundamental coordinates in %r" % (data,))
        return w


def weight_of(xi: GTPattern) -> WeightVector:
    """kappa_i = sum(row(i)) - sum(row(i-1)) for i = 1..n."""
    return WeightVector(
        xi.content(i) - xi.content(i - 1) for i in range(1, xi.n + 1)
    )


def fundamental_coords(w: WeightVector) -> list[int]:
    """Pairings with the cartan differences: d_i = kappa_i - kappa_{i+1}."""
    return [w.kappa[i] - w.kappa[i + 1] for i in range(w.n - 1)]


def fundamental_string(w: WeightVector) -> str:
    """Render the fundamental coordinates as a combination of ω_i."""
    parts = []
    for i, d in enumerate(fundamental_coords(w), start=1):
        if d == 0:
            continue
        if d == 1:
            text = "ω_%d" % i
        elif d == -1:
            text = "-ω_%d" % i
        else:
            text = "%dω_%d" % (d, i)
        parts.append(text)
    if not parts:
        return "0"
    out = parts[0]
    for text in parts[1:]:
        if text.startswith("-"):
            out += " - " + text[1:]
        else:
            out += " + " + text
    return out


def highest_weight(partition: Partition) -> WeightVector:
    """The weight of the highest pattern; its kappa equals the partition."""
    return weight_of(highest_pattern(partition))


def weight_decomposition(partition: Partition) -> dict[WeightVector, list[GTPattern]]:
    """Group the canonical enumeration by weight, preserving order."""
    blocks: dict[WeightVector, list[GTPattern]] = {}
    for pat in enumerate_patterns(partition):
        blocks.setdefault(weight_of(pat), []).append(pat)
    return blocks
