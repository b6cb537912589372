"""Ground-truth verification by exact exhaustive counting.

Messages are independent and uniform over GF(q); keys, when a code has
them, are uniform over their alphabet and independent of the messages.
The joint space is therefore uniform over q^m * |keys| states, and both
decodability and security reduce to integer counting over that space:

* a receiver can decode iff its wanted values are a function of
  (codeword, side information) -- no two states may agree on those and
  disagree on a wanted value;
* an eavesdropper holding the messages in A learns nothing about a
  block B of other messages iff, for every (codeword, values of A) of
  positive probability, the conditional distribution of the B-values is
  exactly uniform.

Verdicts come from these count comparisons alone, so they are exact;
the entropies attached to reports are decimal renderings for humans,
never inputs to a verdict.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .model import AccessStructure, Instance

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "InfeasibleBlockError",
    "PairCheck",
    "SecurityReport",
    "check_decodability",
    "check_security",
    "entropy_bits",
    "state_count",
]

# Joint (message, key) states enumerated per verification, unless overridden.
DEFAULT_BUDGET = 2 ** 22


class BudgetExceededError(RuntimeError):
    """The requested enumeration is larger than the configured budget."""


class InfeasibleBlockError(ValueError):
    """Block size exceeds the number of messages outside some access set."""


def state_count(code) -> int:
    return code.q ** code.m * code.key_count


def _check_budget(code, budget: int) -> None:
    total = state_count(code)
    if total > budget:
        raise BudgetExceededError(
            f"{total} joint states exceed the budget of {budget}; raise the budget to force the enumeration"
        )


def _check_code_matches(code, inst: Instance) -> None:
    # the code's field may legitimately differ from the instance's when a
    # construction had to move to a bigger prime; the code's field then
    # governs the message alphabet, and only the message count must agree
    if code.m != inst.m:
        raise ValueError(f"code is for {code.m} messages, instance has {inst.m}")


def _states(code):
    """Yield (message tuple, key index, codeword tuple) for every state."""
    for x in itertools.product(range(code.q), repeat=code.m):
        for key in range(code.key_count):
            yield x, key, code.encode_state(x, key)


def check_decodability(code, inst: Instance, budget: int = DEFAULT_BUDGET) -> list:
    """Per-receiver verdicts: True iff the receiver's wanted values are a
    function of the codeword and its side information.

    Randomized codes must decode for every key value, since receivers
    never see the key; the joint enumeration enforces exactly that.
    """
    _check_code_matches(code, inst)
    _check_budget(code, budget)
    verdicts = []
    for r in inst.receivers:
        known = tuple(sorted(r.knows))
        wanted = tuple(sorted(r.wants))
        known_idx = tuple(j - 1 for j in known)
        wanted_idx = tuple(j - 1 for j in wanted)
        seen = {}
        ok = True
        for x, _key, c in _states(code):
            view = (c, tuple(x[i] for i in known_idx))
            target = tuple(x[i] for i in wanted_idx)
            prev = seen.get(view)
            if prev is None:
                seen[view] = target
            elif prev != target:
                ok = False
                break
        verdicts.append(ok)
    return verdicts


@dataclass(frozen=True)
class PairCheck:
    """Exact verdict for one (access set, block) pair."""

    access: tuple
    block: tuple
    uniform: bool
    block_entropy_bits: float
    conditional_entropy_bits: float

    def to_dict(self) -> dict:
        return {
            "A": list(self.access),
            "B": list(self.block),
            "uniform": self.uniform,
            "H_B_bits": self.block_entropy_bits,
            "H_B_given_CA_bits": self.conditional_entropy_bits,
        }


@dataclass(frozen=True)
class SecurityReport:
    """All pair verdicts plus the overall conjunction."""

    checks: tuple
    block_size: int
    complete: bool

    @property
    def secure(self) -> bool:
        return all(p.uniform for p in self.checks)

    def to_dict(self) -> dict:
        return {
            "pairs": [p.to_dict() for p in self.checks],
            "secure": self.secure,
            "block_size": self.block_size,
            "assumptions": "messages and keys uniform and independent",
        }


def check_security(
    code,
    inst: Instance,
    acc: AccessStructure,
    b: int = 1,
    budget: int = DEFAULT_BUDGET,
    stop_on_failure: bool = False,
) -> SecurityReport:
    """Exact block-security verdict for every (A, B) pair.

    For each access set A (except the full message set, against which
    no block exists and nothing can leak) and each size-b subset B of
    the remaining messages, tests conditional uniformity of the B
    values given every (codeword, A values) of positive probability.

    With stop_on_failure the report is truncated at the first failing
    pair (its `complete` flag records this); the overall verdict is
    unaffected since one failure already decides it.
    """
    _check_code_matches(code, inst)
    if b < 1:
        raise ValueError(f"block size must be >= 1, got {b}")
    _check_budget(code, budget)
    full = frozenset(inst.messages())
    pairs = []
    for a in acc.expand(inst.m):
        if a == full:
            continue  # nothing outside A: vacuously leak-free
        outside = sorted(full - a)
        if b > len(outside):
            raise InfeasibleBlockError(
                f"block size {b} exceeds the {len(outside)} messages outside access set {sorted(a)}"
            )
        for block in itertools.combinations(outside, b):
            pairs.append((tuple(sorted(a)), block))

    q = code.q
    block_entropy = b * math.log2(q)
    uniform_count = q ** b
    checks = []
    truncated = False
    for access, block in pairs:
        access_idx = tuple(j - 1 for j in access)
        block_idx = tuple(j - 1 for j in block)
        groups = {}
        for x, _key, c in _states(code):
            view = (c, tuple(x[i] for i in access_idx))
            target = tuple(x[i] for i in block_idx)
            counts = groups.get(view)
            if counts is None:
                groups[view] = {target: 1}
            else:
                counts[target] = counts.get(target, 0) + 1
        uniform = True
        for counts in groups.values():
            if len(counts) != uniform_count or len(set(counts.values())) != 1:
                uniform = False
                break
        total = state_count(code)
        conditional = sum(
            (sum(counts.values()) / total) * entropy_bits(counts.values())
            for counts in groups.values()
        )
        checks.append(PairCheck(access, block, uniform, block_entropy, conditional))
        if stop_on_failure and not uniform:
            truncated = len(checks) < len(pairs)
            break
    return SecurityReport(tuple(checks), b, complete=not truncated)


def entropy_bits(counts) -> float:
    """Shannon entropy in bits of an exact count distribution.

    Accepts an iterable of positive counts or a mapping to counts.
    Rendering only: verdicts never compare these floats.
    """
    if hasattr(counts, "values"):
        counts = counts.values()
    counts = [c for c in counts if c]
    if not counts:
        raise ValueError("entropy of an empty distribution is undefined")
    total = sum(counts)
    return -sum((c / total) * math.log2(c / total) for c in counts)
