"""Secure index-coding instances and their directed bipartite graph view.

An instance is (q, m, receivers): one sender holds m messages over
GF(q); each receiver knows a subset of them and wants another subset.
The eavesdropper is described separately by an access structure: either
an explicit collection of message subsets, or "t-level" access meaning
every proper subset of size t.  Message and receiver indices are
1-based in every public interface, matching the usual broadcast
notation.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .gf import is_prime

__all__ = [
    "Receiver",
    "Instance",
    "AccessStructure",
    "BipartiteGraph",
    "validate",
    "normalize",
    "every_message_wanted",
    "cooperate",
    "strip_unwanted",
    "build_graph",
    "parse_instance",
    "instance_to_dict",
    "load_instance",
    "save_instance",
]


@dataclass(frozen=True)
class Receiver:
    """One receiver: the messages it knows and the messages it wants."""

    knows: frozenset
    wants: frozenset

    def __post_init__(self):
        object.__setattr__(self, "knows", frozenset(int(v) for v in self.knows))
        object.__setattr__(self, "wants", frozenset(int(v) for v in self.wants))

    def missing_wants(self) -> frozenset:
        """Wanted messages not already known."""
        return self.wants - self.knows


@dataclass(frozen=True)
class Instance:
    """A secure index-coding instance: field size, message count, receivers."""

    q: int
    m: int
    receivers: tuple

    def __post_init__(self):
        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "receivers", tuple(self.receivers))

    @property
    def n(self) -> int:
        return len(self.receivers)

    def messages(self) -> range:
        return range(1, self.m + 1)

    def is_normalized(self) -> bool:
        return all(r.missing_wants() for r in self.receivers)


def validate(inst: Instance) -> list:
    """Check all structural invariants; return a list of violations.

    An empty list means the instance is well formed and normalized.
    Each violation names the receiver or index at fault.
    """
    violations = []
    if inst.m < 1:
        violations.append(f"message count must be >= 1, got {inst.m}")
    if not is_prime(inst.q):
        violations.append(f"field size must be prime, got {inst.q}")
    if inst.n < 1:
        violations.append("instance has no receivers")
    for i, r in enumerate(inst.receivers, start=1):
        for label, indices in (("knows", r.knows), ("wants", r.wants)):
            for j in sorted(indices):
                if not 1 <= j <= inst.m:
                    violations.append(f"receiver {i}: {label} index {j} out of range [1, {inst.m}]")
        if r.wants and not r.missing_wants():
            violations.append(f"receiver {i}: wants is a subset of knows (expungeable)")
        if not r.wants:
            violations.append(f"receiver {i}: wants nothing (expungeable)")
    return violations


def normalize(inst: Instance) -> Instance:
    """Drop receivers that want nothing beyond what they know.

    Messages wanted by no receiver are retained: they can still serve
    as keys that protect other messages.  Idempotent.
    """
    kept = tuple(r for r in inst.receivers if r.missing_wants())
    if len(kept) == len(inst.receivers):
        return inst
    return Instance(inst.q, inst.m, kept)


def every_message_wanted(inst: Instance) -> bool:
    wanted = set()
    for r in inst.receivers:
        wanted |= r.wants
    return all(j in wanted for j in inst.messages())


def cooperate(inst: Instance, i: int, j: int) -> Instance:
    """Let receivers i and j (1-based) pool their side information.

    Both end up knowing the union of their knows-sets; wants-sets,
    q, and m are unchanged.
    """
    if i == j:
        raise ValueError("cooperation needs two distinct receivers")
    for idx in (i, j):
        if not 1 <= idx <= inst.n:
            raise ValueError(f"receiver index {idx} out of range [1, {inst.n}]")
    union = inst.receivers[i - 1].knows | inst.receivers[j - 1].knows
    updated = list(inst.receivers)
    updated[i - 1] = Receiver(union, inst.receivers[i - 1].wants)
    updated[j - 1] = Receiver(union, inst.receivers[j - 1].wants)
    return Instance(inst.q, inst.m, tuple(updated))


def strip_unwanted(inst: Instance, acc: "AccessStructure | None" = None):
    """Remove messages wanted by no receiver, renumbering the rest.

    This is the classical simplification; for secure instances it can
    destroy feasibility because unwanted messages may act as keys, so
    it is never applied implicitly.  With an access structure given,
    returns (instance, remapped access structure); explicit access sets
    are intersected with the surviving messages and renumbered.
    """
    wanted = set()
    for r in inst.receivers:
        wanted |= r.wants
    kept = sorted(j for j in inst.messages() if j in wanted)
    remap = {old: new for new, old in enumerate(kept, start=1)}
    receivers = tuple(
        Receiver(
            frozenset(remap[j] for j in r.knows if j in remap),
            frozenset(remap[j] for j in r.wants),
        )
        for r in inst.receivers
    )
    stripped = Instance(inst.q, len(kept), receivers)
    if acc is None:
        return stripped
    if acc.kind == AccessStructure.KIND_T_LEVEL:
        if acc.t > len(kept) - 1:
            raise ValueError(f"access level {acc.t} infeasible with {len(kept)} messages")
        return stripped, acc
    remapped = [frozenset(remap[j] for j in a if j in remap) for a in acc.sets]
    return stripped, AccessStructure.explicit(remapped)


class AccessStructure:
    """The collection of message subsets the eavesdropper might hold.

    Two kinds: explicit (a concrete list of subsets, deduplicated) and
    t-level (all proper subsets of size t, kept symbolic until
    expansion so size-based analysis never materializes them).
    """

    KIND_T_LEVEL = "t_level"
    KIND_EXPLICIT = "explicit"

    __slots__ = ("kind", "t", "sets")

    def __init__(self, kind, t=None, sets=None):
        self.kind = kind
        self.t = t
        self.sets = sets

    @classmethod
    def t_level(cls, t: int) -> "AccessStructure":
        t = int(t)
        if t < 0:
            raise ValueError(f"access level must be >= 0, got {t}")
        return cls(cls.KIND_T_LEVEL, t=t)

    @classmethod
    def explicit(cls, sets) -> "AccessStructure":
        deduped = []
        seen = set()
        for a in sets:
            fa = frozenset(int(v) for v in a)
            if fa not in seen:
                seen.add(fa)
                deduped.append(fa)
        return cls(cls.KIND_EXPLICIT, sets=tuple(deduped))

    @classmethod
    def classical(cls, m: int) -> "AccessStructure":
        """The no-security-constraint structure {[m]}."""
        return cls.explicit([range(1, m + 1)])

    def expand(self, m: int) -> list:
        """All access sets for an instance with m messages.

        t-level expands to every size-t proper subset in lexicographic
        order; explicit sets pass through (already deduplicated) after
        a range check.
        """
        if self.kind == self.KIND_T_LEVEL:
            if not 0 <= self.t <= m - 1:
                raise ValueError(f"access level must satisfy 0 <= t <= {m - 1}, got {self.t}")
            return [frozenset(c) for c in itertools.combinations(range(1, m + 1), self.t)]
        for a in self.sets:
            for j in a:
                if not 1 <= j <= m:
                    raise ValueError(f"access set index {j} out of range [1, {m}]")
        return list(self.sets)

    def max_size(self, m: int) -> int:
        """Largest access set size, without materializing t-level sets."""
        if self.kind == self.KIND_T_LEVEL:
            if not 0 <= self.t <= m - 1:
                raise ValueError(f"access level must satisfy 0 <= t <= {m - 1}, got {self.t}")
            return self.t
        return max((len(a) for a in self.sets), default=0)

    def is_classical(self, m: int) -> bool:
        """True for exactly {[m]}: an eavesdropper who already has everything."""
        if self.kind != self.KIND_EXPLICIT:
            return False
        return self.sets == (frozenset(range(1, m + 1)),)

    def to_dict(self) -> dict:
        if self.kind == self.KIND_T_LEVEL:
            return {"type": "t_level", "t": self.t}
        return {"type": "explicit", "sets": [sorted(a) for a in self.sets]}

    @classmethod
    def from_dict(cls, obj) -> "AccessStructure":
        if not isinstance(obj, dict) or "type" not in obj:
            raise ValueError("adversary must be an object with a 'type' field")
        kind = obj["type"]
        if kind == "t_level":
            if "t" not in obj:
                raise ValueError("t_level adversary needs a 't' field")
            return cls.t_level(obj["t"])
        if kind == "explicit":
            sets = obj.get("sets")
            if not isinstance(sets, list):
                raise ValueError("explicit adversary needs a 'sets' list")
            return cls.explicit(sets)
        raise ValueError(f"unknown adversary type {kind!r}")

    def __eq__(self, other):
        return (
            isinstance(other, AccessStructure)
            and other.kind == self.kind
            and other.t == self.t
            and other.sets == self.sets
        )

    def __repr__(self):
        if self.kind == self.KIND_T_LEVEL:
            return f"AccessStructure.t_level({self.t})"
        return f"AccessStructure.explicit({[sorted(a) for a in self.sets]})"


@dataclass(frozen=True)
class BipartiteGraph:
    """Directed bipartite view: receivers and eavesdroppers on one side,
    messages on the other.

    Arcs: r_i -> j when receiver i knows message j; j -> r_i when it
    wants j; v_k -> j for every j in the k-th access set.  Vertex
    labels are "r1"..., "v1"..., and bare message numbers.
    """

    receiver_count: int
    message_count: int
    access_sets: tuple
    arcs: tuple

    def vertices(self) -> list:
        names = [str(j) for j in range(1, self.message_count + 1)]
        names += [f"r{i}" for i in range(1, self.receiver_count + 1)]
        names += [f"v{k}" for k in range(1, len(self.access_sets) + 1)]
        return names

    def is_acyclic(self) -> bool:
        """True iff the receiver/message subgraph has no directed cycle.

        Eavesdropper vertices have no incoming arcs, so leaving them out
        cannot hide a cycle.
        """
        adjacency = {}
        for u, v in self.arcs:
            if u.startswith("v"):
                continue
            adjacency.setdefault(u, []).append(v)
        WHITE, GRAY, BLACK = 0, 1, 2
        color = {}
        for start in list(adjacency):
            if color.get(start, WHITE) != WHITE:
                continue
            stack = [(start, iter(adjacency.get(start, ())))]
            color[start] = GRAY
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    c = color.get(nxt, WHITE)
                    if c == GRAY:
                        return False
                    if c == WHITE:
                        color[nxt] = GRAY
                        stack.append((nxt, iter(adjacency.get(nxt, ()))))
                        advanced = True
                        break
                if not advanced:
                    color[node] = BLACK
                    stack.pop()
        return True

    def to_dot(self) -> str:
        """DOT text: receivers prefixed r, eavesdroppers v, messages bare."""
        lines = ["digraph secure_index_instance {"]
        for name in self.vertices():
            lines.append(f"  {name};")
        for u, v in self.arcs:
            lines.append(f"  {u} -> {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(inst: Instance, acc: AccessStructure) -> BipartiteGraph:
    """Directed bipartite graph of an instance plus its access structure."""
    access_sets = tuple(acc.expand(inst.m))
    arcs = []
    for i, r in enumerate(inst.receivers, start=1):
        for j in sorted(r.knows):
            arcs.append((f"r{i}", str(j)))
        for j in sorted(r.wants):
            arcs.append((str(j), f"r{i}"))
    for k, a in enumerate(access_sets, start=1):
        for j in sorted(a):
            arcs.append((f"v{k}", str(j)))
    return BipartiteGraph(inst.n, inst.m, access_sets, tuple(arcs))


# ---- JSON instance files -------------------------------------------------

def parse_instance(obj):
    """Build (Instance, AccessStructure | None) from a parsed JSON object.

    Schema: {"q": int, "m": int,
             "receivers": [{"knows": [int...], "wants": [int...]}...],
             "adversary": {"type": "t_level", "t": int}
                        | {"type": "explicit", "sets": [[int...]...]}}
    Indices are 1-based.  The adversary field is optional; commands fall
    back to the classical structure (access to everything) when absent.
    """
    if not isinstance(obj, dict):
        raise ValueError("instance file must contain a JSON object")
    for key in ("q", "m", "receivers"):
        if key not in obj:
            raise ValueError(f"instance file missing required field {key!r}")
    if not isinstance(obj["receivers"], list):
        raise ValueError("'receivers' must be a list")
    receivers = []
    for pos, r in enumerate(obj["receivers"], start=1):
        if not isinstance(r, dict) or "knows" not in r or "wants" not in r:
            raise ValueError(f"receiver {pos} must be an object with 'knows' and 'wants'")
        receivers.append(Receiver(frozenset(r["knows"]), frozenset(r["wants"])))
    inst = Instance(obj["q"], obj["m"], tuple(receivers))
    acc = AccessStructure.from_dict(obj["adversary"]) if "adversary" in obj else None
    return inst, acc


def instance_to_dict(inst: Instance, acc: AccessStructure | None = None) -> dict:
    obj = {
        "q": inst.q,
        "m": inst.m,
        "receivers": [
            {"knows": sorted(r.knows), "wants": sorted(r.wants)} for r in inst.receivers
        ],
    }
    if acc is not None:
        obj["adversary"] = acc.to_dict()
    return obj


def load_instance(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    return parse_instance(obj)


def save_instance(path, inst: Instance, acc: AccessStructure | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(inst, acc), fh, indent=2)
        fh.write("\n")
