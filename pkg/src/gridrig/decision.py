"""Shared result type for the three rigidity decision procedures."""

from dataclasses import dataclass, field


@dataclass
class RigidityDecision:
    """Outcome of a rigidity test, with enough context to explain it."""

    verdict: str                    # "rigid" | "flexible"
    method: str                     # "combinatorial" | "rank" | "oracle"
    branch: str = None              # norm class the decision ran under
    rank: int = None
    required: int = None
    nullity: int = None
    required_nullity: int = None
    exceptional: bool = False
    reason: str = None
    lambdas: dict = field(default_factory=dict)   # cell -> (lambda, lambda')
    extra: dict = field(default_factory=dict)

    @property
    def rigid(self):
        return self.verdict == "rigid"

    def to_json(self):
        doc = {"verdict": self.verdict, "method": self.method,
               "exceptional": self.exceptional}
        if self.branch is not None:
            doc["branch"] = self.branch
        if self.rank is not None:
            doc["rank"] = self.rank
        if self.required is not None:
            doc["required"] = self.required
        if self.nullity is not None:
            doc["nullity"] = self.nullity
        if self.required_nullity is not None:
            doc["required_nullity"] = self.required_nullity
        if self.reason is not None:
            doc["reason"] = self.reason
        if self.lambdas:
            doc["lambda"] = {"%d,%d" % cell: [lam, lam_p]
                             for cell, (lam, lam_p) in sorted(self.lambdas.items())}
        doc.update(self.extra)
        return doc
