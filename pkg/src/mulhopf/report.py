"""Law verdicts with exact witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

from .exactlin import first_difference, format_vector


@dataclass(frozen=True)
class Witness:
    """Where a law failed: a basis index of the domain and the exact defect vector."""

    index: int | None = None
    basis: str | None = None
    vector: dict | None = None
    text: str = ""

    def to_json(self, fieldobj=None):
        out = {"text": self.text}
        if self.index is not None:
            out["index"] = self.index
        if self.basis is not None:
            out["basis"] = self.basis
        if self.vector is not None:
            fmt = fieldobj.format if fieldobj is not None else str
            out["vector"] = [[int(k), fmt(v)] for k, v in sorted(self.vector.items())]
        return out


@dataclass(frozen=True)
class LawResult:
    law_id: str
    passed: bool
    witness: Witness | None = None

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError("a passing law carries no witness")
        if not self.passed and self.witness is None:
            raise ValueError("a failing law needs a witness")


@dataclass
class CheckReport:
    laws: list = field(default_factory=list)
    field: object = None

    def add(self, result):
        self.laws.append(result)
        return result

    def extend(self, other, prefix=""):
        for r in other.laws:
            self.laws.append(LawResult(prefix + r.law_id, r.passed, r.witness))
        if self.field is None:
            self.field = other.field
        return self

    def equal(self, law_id, lhs, rhs):
        """Record whether two maps agree exactly."""
        if self.field is None:
            self.field = lhs.field
        return self.add(compare(law_id, lhs, rhs))

    def holds(self, law_id, ok, text="condition fails", vector=None, sig=None):
        if ok:
            return self.add(LawResult(law_id, True))
        wit = Witness(vector=vector, text=text)
        if vector is not None and sig is not None and self.field is not None:
            wit = Witness(vector=vector, text=f"{text}: {format_vector(sig, vector, self.field)}")
        return self.add(LawResult(law_id, False, wit))

    @property
    def passed(self):
        return all(r.passed for r in self.laws)

    @property
    def failures(self):
        return [r for r in self.laws if not r.passed]

    def get(self, law_id):
        for r in self.laws:
            if r.law_id == law_id:
                return r
        raise KeyError(law_id)

    def ids(self):
        return [r.law_id for r in self.laws]

    def __bool__(self):
        return self.passed

    def __repr__(self):
        bad = ", ".join(r.law_id for r in self.failures)
        return f"CheckReport({len(self.laws)} laws, failures: [{bad}])"


def compare(law_id, lhs, rhs):
    diff = first_difference(lhs, rhs)
    if diff is None:
        return LawResult(law_id, True)
    j, vec = diff
    basis = lhs.dom.basis_label(j)
    text = f"at {basis}: lhs - rhs = {format_vector(lhs.cod, vec, lhs.field)}"
    return LawResult(law_id, False, Witness(index=j, basis=basis, vector=vec, text=text))
