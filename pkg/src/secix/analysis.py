"""Existence decisions, impossibility certificates, length bounds, and
small-scale exhaustive search for secure index codes.

The decision logic pivots on two scalars: the smallest amount of side
information any receiver holds, and the largest set the eavesdropper
might hold.  When every receiver knows strictly more than the
eavesdropper can access, the MDS broadcast is secure; when some access
set covers a receiver's entire knowledge while that receiver wants
something outside it, no code can help; and for the classical-looking
instances (acyclic side-information graph, every message wanted), the
codeword alone already reveals everything.  Everything in between is
reported honestly as unknown.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .codes import LinearCode, code_to_dict, construct_mds_code, single_access_code
from .gf import FieldMatrix
from .model import AccessStructure, Instance, build_graph, every_message_wanted
from .oracle import DEFAULT_BUDGET, BudgetExceededError, check_decodability, check_security

__all__ = [
    "ANSWER_YES",
    "ANSWER_NO",
    "ANSWER_UNKNOWN",
    "CompromisedReceiverCertificate",
    "AcyclicCertificate",
    "ExistenceVerdict",
    "min_side_info",
    "max_access",
    "decide_t_level",
    "decide",
    "length_bounds",
    "search_linear",
]

ANSWER_YES = "yes"
ANSWER_NO = "no"
ANSWER_UNKNOWN = "unknown"


@dataclass(frozen=True)
class CompromisedReceiverCertificate:
    """Impossibility witness: an access set covering everything receiver
    `receiver` knows, while that receiver wants a message outside it.
    Whatever the receiver decodes, an eavesdropper holding the access
    set decodes too."""

    receiver: int
    access: frozenset

    def to_dict(self) -> dict:
        return {
            "type": "compromised_receiver",
            "receiver": self.receiver,
            "access": sorted(self.access),
        }


@dataclass(frozen=True)
class AcyclicCertificate:
    """Impossibility witness: the receiver/message graph is acyclic and
    every message is wanted, so any working codeword determines all
    messages even without side information."""

    def to_dict(self) -> dict:
        return {"type": "acyclic"}


@dataclass(frozen=True)
class ExistenceVerdict:
    """Outcome of an existence decision.

    `yes` always carries a concrete code; `no` carries a
    machine-checkable certificate.  Bounds on the optimal secure
    codelength are attached when the structural conditions for them
    hold.
    """

    answer: str
    code: LinearCode | None = None
    certificate: object = None
    lower: int | None = None
    upper: int | None = None

    def to_dict(self) -> dict:
        if self.answer == ANSWER_YES:
            certificate = code_to_dict(self.code)
        elif self.certificate is not None:
            certificate = self.certificate.to_dict()
        else:
            certificate = None
        return {
            "answer": self.answer,
            "certificate": certificate,
            "bounds": {"lower": self.lower, "upper": self.upper},
        }


def _require_normalized(inst: Instance) -> None:
    if inst.n < 1:
        raise ValueError("analysis needs at least one receiver")
    if not inst.is_normalized():
        raise ValueError("analysis needs a normalized instance; call normalize() first")


def min_side_info(inst: Instance) -> int:
    """Smallest number of messages any receiver knows."""
    _require_normalized(inst)
    return min(len(r.knows) for r in inst.receivers)


def max_access(acc: AccessStructure, m: int) -> int:
    """Largest access set size (symbolic for t-level structures)."""
    return acc.max_size(m)


def decide_t_level(inst: Instance, t: int, b: int = 1) -> ExistenceVerdict:
    """Existence of codes secure against every size-t access set.

    Secure codes (protecting blocks of b messages jointly, b=1 by
    default) exist iff t <= K - b where K is the least side-information
    size.  Yes comes with the MDS construction.  No comes with a
    compromised-receiver certificate: for t >= K the certificate set
    covers a minimal receiver's knowledge outright; for K - b < t < K
    it sits inside that knowledge, and the eavesdropper's missing
    symbols plus the receiver's wanted one form a readable block of at
    most b messages.
    """
    _require_normalized(inst)
    if not 0 <= t <= inst.m - 1:
        raise ValueError(f"access level must satisfy 0 <= t <= {inst.m - 1}, got {t}")
    if b < 1:
        raise ValueError(f"block size must be >= 1, got {b}")
    least = min_side_info(inst)
    if t <= least - b:
        lower, upper = length_bounds(inst, AccessStructure.t_level(t))
        return ExistenceVerdict(ANSWER_YES, code=construct_mds_code(inst), lower=lower, upper=upper)
    idx, rec = min(enumerate(inst.receivers, start=1), key=lambda pair: len(pair[1].knows))
    j = min(rec.wants - rec.knows)
    known = sorted(rec.knows)
    if t >= least:
        padding = [v for v in inst.messages() if v not in rec.knows and v != j]
        access = frozenset(known) | frozenset(padding[: t - least])
    else:
        access = frozenset(known[:t])
    return ExistenceVerdict(
        ANSWER_NO, certificate=CompromisedReceiverCertificate(idx, access)
    )


def decide(inst: Instance, acc: AccessStructure) -> ExistenceVerdict:
    """Existence decision for an arbitrary access structure.

    Impossibility is checked first (the graph-level certificate before
    the per-receiver one, since the former condemns the instance as a
    whole); then the two constructive sufficient conditions; remaining
    cases are genuinely open and reported as unknown.
    """
    _require_normalized(inst)
    expanded = acc.expand(inst.m)
    lower, upper = length_bounds(inst, acc)

    if not acc.is_classical(inst.m) and every_message_wanted(inst) and build_graph(inst, acc).is_acyclic():
        return ExistenceVerdict(ANSWER_NO, certificate=AcyclicCertificate(), lower=lower, upper=upper)

    for a in expanded:
        for i, rec in enumerate(inst.receivers, start=1):
            if rec.knows <= a and rec.wants - a:
                return ExistenceVerdict(
                    ANSWER_NO,
                    certificate=CompromisedReceiverCertificate(i, a),
                    lower=lower,
                    upper=upper,
                )

    if max_access(acc, inst.m) < min_side_info(inst):
        return ExistenceVerdict(ANSWER_YES, code=construct_mds_code(inst), lower=lower, upper=upper)

    if len(expanded) == 1:
        code = single_access_code(inst, expanded[0])
        return ExistenceVerdict(ANSWER_YES, code=code, lower=lower, upper=upper)

    return ExistenceVerdict(ANSWER_UNKNOWN, lower=lower, upper=upper)


def length_bounds(inst: Instance, acc: AccessStructure):
    """(lower, upper) bounds on the optimal secure codelength at this q.

    When the eavesdropper always accesses fewer messages than every
    receiver knows, the MDS construction gives upper = m - K.  If
    additionally some minimally informed receiver wants exactly the
    messages it lacks, counting symbols forces lower = m - K as well.
    A bound is None when its condition does not hold.
    """
    _require_normalized(inst)
    least = min_side_info(inst)
    if max_access(acc, inst.m) >= least:
        return None, None
    upper = inst.m - least
    full = frozenset(inst.messages())
    complementary = any(
        len(r.knows) == least and (r.knows | r.wants) == full for r in inst.receivers
    )
    lower = upper if complementary else None
    return lower, upper


def search_linear(
    inst: Instance,
    acc: AccessStructure,
    length: int,
    b: int = 1,
    budget: int = DEFAULT_BUDGET,
):
    """Exhaustive search over all m x length generators over GF(q).

    Returns the first (in lexicographic order of the row-major entries)
    deterministic linear code that both decodes for every receiver and
    passes the exact security check, or None when no generator of this
    length works.  Independent of the constructions above, so it can
    confirm their optimality at tiny scale and settle instances the
    structural decision leaves unknown.
    """
    _require_normalized(inst)
    if length < 0:
        raise ValueError(f"code length must be >= 0, got {length}")
    q, m = inst.q, inst.m
    candidates = q ** (m * length)
    if candidates > budget:
        raise BudgetExceededError(
            f"{candidates} candidate generators exceed the budget of {budget}"
        )
    for entries in itertools.product(range(q), repeat=m * length):
        generator = FieldMatrix(q, np.array(entries, dtype=np.int64).reshape(m, length))
        code = LinearCode(generator)
        if not all(check_decodability(code, inst, budget=budget)):
            continue
        report = check_security(code, inst, acc, b=b, budget=budget, stop_on_failure=True)
        if report.secure:
            return code
    return None
