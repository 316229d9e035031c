"""The ready-simulation refinement preorder and its universal variants.

A stable pair (t, s) belongs to a stable ready simulation when: both states
are stable; if t is consistent then s is consistent and offers the same
ready set; and every weak consistent a-step of t is matched by one of s with
the targets again related. Inconsistent t make every clause vacuous, so such
pairs hold trivially.

`largest_stable_sim` runs the textbook pair-deletion greatest fixpoint over
a whole graph. `refines` answers single queries through an incremental
engine that closes the candidate pair space reachable from the query and
deletes locally, memoizing proofs and refutations for the life of the graph
(the two routes are checked against each other in the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .llts import LltsGraph
from .syntax import Term, print_term


@dataclass(frozen=True)
class SimRelation:
    pairs: frozenset[tuple[int, int]]

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs))


@dataclass
class Counterexample:
    trace: list[tuple[Term, str | None]]
    clause: str

    def to_json(self) -> dict:
        return {
            "trace": [
                {"state": print_term(t), "action": a} for t, a in self.trace
            ],
            "clause": self.clause,
        }


@dataclass
class RefinementVerdict:
    holds: bool
    witness: SimRelation | None = None
    counterexample: Counterexample | None = None

    def to_json(self) -> dict:
        if self.holds:
            return {
                "holds": True,
                "witnessSize": len(self.witness) if self.witness else 0,
            }
        return {"holds": False, "counterexample": self.counterexample.to_json()}


class SimEngine:
    """Incremental decision procedure for the stable simulation relation."""

    def __init__(self, g: LltsGraph):
        self.g = g
        self.proven: set[tuple[int, int]] = set()
        self.refuted: dict[tuple[int, int], tuple] = {}

    def _base_reason(self, u: int, v: int):
        g = self.g
        if v in g.inconsistent:
            return ("RS2",)
        if g.ready[u] != g.ready[v]:
            return ("RS4",)
        return None

    def simulated(self, u: int, v: int) -> bool:
        pair = (u, v)
        if pair in self.proven:
            return True
        if pair in self.refuted:
            return False
        g = self.g
        # close the candidate space under the matching obligations
        obligations: dict[tuple[int, int], list[tuple[str, int, tuple[int, ...]]]] = {}
        stack = [pair]
        while stack:
            x, y = stack.pop()
            p = (x, y)
            if p in self.proven or p in self.refuted or p in obligations:
                continue
            if x in g.inconsistent:
                self.proven.add(p)  # every clause is vacuous
                continue
            reason = self._base_reason(x, y)
            if reason is not None:
                self.refuted[p] = reason
                continue
            obl = []
            for a in sorted(g.ready[x]):
                for u2 in g.act_stable_from_stable(x, a):
                    vs = g.act_stable_from_stable(y, a)
                    obl.append((a, u2, vs))
                    for v2 in vs:
                        stack.append((u2, v2))
            obligations[p] = obl
        # pair deletion down to the greatest fixpoint over the closed space
        alive = set(obligations)
        changed = True
        while changed:
            changed = False
            for p in list(alive):
                for a, u2, vs in obligations[p]:
                    if not any(
                        (u2, v2) in self.proven or (u2, v2) in alive for v2 in vs
                    ):
                        alive.discard(p)
                        self.refuted[p] = ("RS3", a, u2)
                        changed = True
                        break
        self.proven.update(alive)
        return pair in self.proven

    def refutation_chain(self, u: int, v: int) -> tuple[list[tuple[Term, str | None]], str]:
        """Linear cause chain for a refuted pair, following first candidates."""
        g = self.g
        trace: list[tuple[Term, str | None]] = [(g.terms[u], None)]
        seen = set()
        x, y = u, v
        while (x, y) not in seen:
            seen.add((x, y))
            reason = self.refuted[(x, y)]
            if reason[0] != "RS3":
                return trace, reason[0]
            _, a, u2 = reason
            trace.append((g.terms[u2], a))
            vs = g.act_stable_from_stable(y, a)
            if not vs:
                return trace, "RS3"
            x, y = u2, vs[0]
        return trace, "RS3"


def _engine(g: LltsGraph) -> SimEngine:
    if g._sim is None:
        g._sim = SimEngine(g)
    return g._sim


def _resolve(g: LltsGraph, s) -> int:
    return s if isinstance(s, int) else g.state_of(s)


def _reach(g: LltsGraph, s: int) -> set[int]:
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        for _, j in g.edges[u]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    return seen


def largest_stable_sim(g: LltsGraph) -> SimRelation:
    """Greatest fixpoint by pair deletion over all stable states of g."""
    stables = [i for i in range(len(g.terms)) if g.stable[i]]
    relation: set[tuple[int, int]] = set()
    for t in stables:
        for s in stables:
            if t in g.inconsistent:
                relation.add((t, s))
            elif s not in g.inconsistent and g.ready[t] == g.ready[s]:
                relation.add((t, s))
    changed = True
    while changed:
        changed = False
        for t, s in list(relation):
            if t in g.inconsistent:
                continue
            for a in sorted(g.ready[t]):
                ok = all(
                    any((u, v) in relation for v in g.act_stable_from_stable(s, a))
                    for u in g.act_stable_from_stable(t, a)
                )
                if not ok:
                    relation.discard((t, s))
                    changed = True
                    break
    return SimRelation(frozenset(relation))


def simulated_by(g: LltsGraph, u, v) -> bool:
    """Membership of a stable pair in the largest stable ready simulation."""
    return _engine(g).simulated(_resolve(g, u), _resolve(g, v))


def refines_bool(g: LltsGraph, p, q) -> bool:
    pid, qid = _resolve(g, p), _resolve(g, q)
    eng = _engine(g)
    vs = g.eps_stable(qid)
    return all(any(eng.simulated(u, v) for v in vs) for u in g.eps_stable(pid))


def refines(g: LltsGraph, p, q) -> RefinementVerdict:
    pid, qid = _resolve(g, p), _resolve(g, q)
    eng = _engine(g)
    vs = g.eps_stable(qid)
    for u in g.eps_stable(pid):
        if not any(eng.simulated(u, v) for v in vs):
            if not vs:
                trace = [(g.terms[u], None)]
                clause = "eps-closure"
            else:
                trace, clause = eng.refutation_chain(u, vs[0])
            return RefinementVerdict(False, None, Counterexample(trace, clause))
    scope = _reach(g, pid) | _reach(g, qid)
    witness = frozenset(
        (u, v) for (u, v) in eng.proven if u in scope and v in scope
    )
    return RefinementVerdict(True, SimRelation(witness), None)


def equiv(g: LltsGraph, p, q) -> bool:
    return refines_bool(g, p, q) and refines_bool(g, q, p)


def refines_from_stable(g: LltsGraph, u: int, t) -> bool:
    """u is stable; decide u refines t (the eps-closure of u is {u})."""
    if u in g.inconsistent:
        return True
    eng = _engine(g)
    return any(eng.simulated(u, v) for v in g.eps_stable(_resolve(g, t)))


def refines_forall(g: LltsGraph, p, t) -> bool:
    """Every stable state reachable from p by visible stable steps refines t."""
    pid = _resolve(g, p)
    tid = _resolve(g, t)
    return all(refines_from_stable(g, u, tid) for u in g.walk_stable(pid))


def refines_forall_until(g: LltsGraph, p, t1, t2) -> bool:
    """Along every visible stable path from p, states refine t1 until
    (optionally) one refines t2."""
    pid, t1id, t2id = _resolve(g, p), _resolve(g, t1), _resolve(g, t2)
    seen: set[int] = set()
    stack = list(g.eps_stable(pid))
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        if refines_from_stable(g, u, t2id):
            continue
        if not refines_from_stable(g, u, t1id):
            return False
        stack.extend(g.stable_step_neighbors(u))
    return True
