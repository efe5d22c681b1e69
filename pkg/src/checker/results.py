"""Condition results, verdicts and their JSON form."""

from dataclasses import dataclass, field
from enum import StrEnum

SHA_CAVEAT = "sha-finiteness-assumed"
HEEGNER_CAVEAT = "heegner-point-hypotheses-assumed"
STANDING_CAVEATS = (SHA_CAVEAT, HEEGNER_CAVEAT)


class Status(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    NOT_APPLICABLE = "not_applicable"


class Conclusion(StrEnum):
    VERIFIED = "verified_conditional_on_sha"
    SC_VERIFIED = "sc_verified"
    NOT_VERIFIED = "not_verified"
    INCONCLUSIVE = "inconclusive"


class Mode(StrEnum):
    ORDINARY = "ordinary"
    SUPERSINGULAR = "supersingular"
    SC = "sc"


# machine-readable reasons for inconclusive conditions
REASON_PRECISION = "precision"
REASON_CERTIFICATE = "certificate-not-found"
REASON_SKIPPED = "skipped"


@dataclass
class ConditionResult:
    """Outcome of one checklist condition.

    Attributes:
        id: Condition id such as "ord.3" or "sc.3p"
        status: Pass, fail, inconclusive or not applicable
        evidence: JSON-ready values from which the predicate can be recomputed
        precision: Precision the evidence was computed at (empty when exact)
        reason: Machine-readable reason, required when inconclusive
    """

    id: str
    status: Status
    evidence: dict = field(default_factory=dict)
    precision: dict = field(default_factory=dict)
    reason: str = ""

    def __post_init__(self) -> None:
        self.status = Status(self.status)
        if self.status is Status.INCONCLUSIVE and not self.reason:
            raise ValueError(f"inconclusive condition {self.id} needs a reason")

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "status": str(self.status),
            "evidence": self.evidence,
            "precision": self.precision,
            "reason": self.reason,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ConditionResult":
        return cls(
            data["id"], Status(data["status"]), data["evidence"], data.get("precision", {}), data.get("reason", "")
        )


@dataclass
class Verdict:
    """Result of running one checklist on a triple (E, K, p).

    Attributes:
        curve: Curve label
        d: K = Q(sqrt(-d))
        p: Prime
        mode: Which checklist was run
        conditions: Results in checklist order
        conclusion: Overall outcome
        narrative: Human-readable inference steps
        caveats: Standing hypotheses that are assumed, never computed
        config: The run configuration used
        supplementary: Evidence outside the checklist (root numbers, torsion)
    """

    curve: str
    d: int
    p: int
    mode: Mode
    conditions: list[ConditionResult]
    conclusion: Conclusion
    narrative: list[str] = field(default_factory=list)
    caveats: list[str] = field(default_factory=lambda: list(STANDING_CAVEATS))
    config: dict = field(default_factory=dict)
    supplementary: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.mode = Mode(self.mode)
        self.conclusion = Conclusion(self.conclusion)
        if SHA_CAVEAT not in self.caveats:
            self.caveats = [SHA_CAVEAT, *self.caveats]

    def condition(self, condition_id: str) -> ConditionResult:
        for result in self.conditions:
            if result.id == condition_id:
                return result
        raise KeyError(condition_id)

    @property
    def verified(self) -> bool:
        return self.conclusion in (Conclusion.VERIFIED, Conclusion.SC_VERIFIED)

    def to_dict(self) -> dict:
        return {
            "triple": {"curve": self.curve, "d": self.d, "p": self.p},
            "mode": str(self.mode),
            "config": self.config,
            "conditions": [c.to_dict() for c in self.conditions],
            "conclusion": str(self.conclusion),
            "caveats": list(self.caveats),
            "narrative": list(self.narrative),
            "supplementary": self.supplementary,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Verdict":
        triple = data["triple"]
        return cls(
            curve=triple["curve"],
            d=triple["d"],
            p=triple["p"],
            mode=Mode(data["mode"]),
            conditions=[ConditionResult.from_dict(c) for c in data["conditions"]],
            conclusion=Conclusion(data["conclusion"]),
            narrative=list(data.get("narrative", [])),
            caveats=list(data["caveats"]),
            config=data.get("config", {}),
            supplementary=data.get("supplementary", {}),
        )


def conclude(conditions: list[ConditionResult], required: list[str], success: Conclusion) -> Conclusion:
    """success when every required condition passes, not_verified on a failure, otherwise inconclusive."""
    by_id = {c.id: c for c in conditions}
    statuses = [by_id[i].status for i in required]
    if all(s is Status.PASS for s in statuses):
        return success
    if any(s is Status.FAIL for s in statuses):
        return Conclusion.NOT_VERIFIED
    return Conclusion.INCONCLUSIVE
