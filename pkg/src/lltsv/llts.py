"""Reachable state graphs with the inconsistency predicate.

A graph holds every state reachable from its roots plus the auxiliary
component states the inconsistency rules need (the operands of external
choice, parallel composition and conjunction, and the principal components
of the temporal bookkeeping operators): those components are not generally
reachable, yet their status feeds the propagation rules. The public view
(`reachable`, `export`) stays restricted to root-reachable states.

Inconsistency is the least fixpoint of the predicate rules, computed by
chaotic iteration with a worklist:

* bot is inconsistent;
* a prefix, a disjunction, an unless and a recursive constant are
  inconsistent when all their successors are;
* an external choice or parallel composition is inconsistent when either
  operand is;
* a conjunction is inconsistent when some conjunct is, or when it is stable
  and two conjuncts offer different ready sets;
* the always/trace/history operators are inconsistent when their principal
  component is;
* a state whose topmost operator is a conjunction or one of the temporal
  operators is inconsistent when some enabled label has all its successors
  inconsistent.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .errors import StateLimitExceeded
from .sos import StepSemantics
from .syntax import (
    TAU,
    Alphabet,
    And,
    Always,
    Bot,
    ExtChoice,
    Nil,
    Odot,
    Parallel,
    Prefix,
    Or,
    RecUnless,
    Term,
    Tri,
    Tru,
    Unless,
    conjuncts,
    normalize,
    print_term,
)


@dataclass(frozen=True)
class BuildLimits:
    max_states: int = 50_000
    max_alphabet_pow: int = 64


@dataclass
class ValidationReport:
    tau_pure: bool
    lts1_holds: bool
    lts2_holds: bool
    counterexamples: list[tuple[Term, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.tau_pure and self.lts1_holds and self.lts2_holds


_RP16_KINDS = (And, Always, Tri, Odot)
_ALL_SUCC_KINDS = (Prefix, Or, Unless, RecUnless)
_COMPONENT_KINDS = (ExtChoice, Parallel)


class LltsGraph:
    """State store shared by every analysis in one session.

    Roots can be added incrementally; states already explored never change,
    so the inconsistency fixpoint and all closure caches stay valid across
    additions.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        limits: BuildLimits | None = None,
        normalized: bool = True,
    ):
        self.alphabet = alphabet
        self.limits = limits or BuildLimits()
        self.normalized = normalized
        self.semantics = StepSemantics(
            alphabet, normalized=normalized, max_alphabet_pow=self.limits.max_alphabet_pow
        )
        self.terms: list[Term] = []
        self.index: dict[Term, int] = {}
        self.edges: list[tuple[tuple[str, int], ...]] = []
        self.deps: list[tuple[int, ...]] = []
        self.stable: list[bool] = []
        self.ready: list[frozenset[str]] = []
        self.inconsistent: set[int] = set()
        self.roots: list[int] = []
        self._parents: list[list[int]] = []
        self._eps: dict[int, tuple[int, ...]] = {}
        self._act: dict[tuple[int, str], tuple[int, ...]] = {}
        self._walk: dict[int, tuple[int, ...]] = {}
        self._sim = None  # lazily created refinement engine
        self._sat_memo: dict = {}  # model-checking cache

    # -- construction --------------------------------------------------

    def _intern(self, t: Term, pending: deque) -> int:
        i = self.index.get(t)
        if i is not None:
            return i
        i = len(self.terms)
        if i >= self.limits.max_states:
            raise StateLimitExceeded(self.limits.max_states, len(pending), t)
        self.index[t] = i
        self.terms.append(t)
        self.edges.append(())
        self.deps.append(())
        self.stable.append(True)
        self.ready.append(frozenset())
        self._parents.append([])
        pending.append(i)
        return i

    def _component_terms(self, t: Term) -> tuple[Term, ...]:
        cls = type(t)
        if cls in _COMPONENT_KINDS:
            return (t.left, t.right)
        if cls is And:
            return tuple(conjuncts(t)) if self.normalized else (t.left, t.right)
        if cls is Always:
            return (t.body,)
        if cls is Tri:
            return (t.left,)
        if cls is Odot:
            return (t.body,)
        return ()

    def add_roots(self, roots: list[Term], max_new_states: int | None = None) -> list[int]:
        """Explore the given roots into the store and update the fixpoint.

        On overflow (the global limit or `max_new_states`) the store is
        rolled back to its previous contents before the error propagates,
        so a failed addition never poisons the graph.
        """
        n0 = len(self.terms)
        touched_old: set[int] = set()
        pending: deque[int] = deque()
        try:
            ids = []
            for r in roots:
                t = normalize(r) if self.normalized else r
                ids.append(self._intern(t, pending))
            new_states = []
            while pending:
                i = pending.popleft()
                new_states.append(i)
                t = self.terms[i]
                steps = self.semantics.successors(t)
                self.edges[i] = tuple(
                    (lab, self._intern(tgt, pending)) for lab, tgt in steps
                )
                self.deps[i] = tuple(
                    self._intern(c, pending) for c in self._component_terms(t)
                )
                if max_new_states is not None and len(self.terms) - n0 > max_new_states:
                    raise StateLimitExceeded(max_new_states, len(pending), t)
                self.stable[i] = not any(lab == TAU for lab, _ in self.edges[i])
                self.ready[i] = frozenset(lab for lab, _ in self.edges[i])
                for _, j in self.edges[i]:
                    self._parents[j].append(i)
                    if j < n0:
                        touched_old.add(j)
                for j in self.deps[i]:
                    self._parents[j].append(i)
                    if j < n0:
                        touched_old.add(j)
        except Exception:
            self._rollback(n0, touched_old)
            raise
        self.roots.extend(ids)
        self._update_f(new_states)
        return ids

    def _rollback(self, n0: int, touched_old: set[int]) -> None:
        for t in self.terms[n0:]:
            del self.index[t]
        del self.terms[n0:]
        del self.edges[n0:]
        del self.deps[n0:]
        del self.stable[n0:]
        del self.ready[n0:]
        del self._parents[n0:]
        for j in touched_old:
            self._parents[j] = [p for p in self._parents[j] if p < n0]

    def try_add_roots(self, roots: list[Term], max_new_states: int) -> list[int] | None:
        """add_roots that reports overflow as None instead of raising."""
        try:
            return self.add_roots(roots, max_new_states)
        except StateLimitExceeded:
            return None

    # -- inconsistency fixpoint -----------------------------------------

    def _f_rule(self, i: int) -> bool:
        t = self.terms[i]
        cls = type(t)
        if cls is Bot:
            return True
        if cls in (Nil, Tru):
            return False
        f = self.inconsistent
        if cls in _ALL_SUCC_KINDS:
            return all(j in f for _, j in self.edges[i])
        if cls in _COMPONENT_KINDS:
            return any(j in f for j in self.deps[i])
        # conjunction and the temporal bookkeeping operators
        if any(j in f for j in self.deps[i]):
            return True
        if cls is And and self.stable[i]:
            readies = {self.ready[j] for j in self.deps[i]}
            if len(readies) > 1:
                return True
        return self._some_label_all_inconsistent(i)

    def _some_label_all_inconsistent(self, i: int) -> bool:
        f = self.inconsistent
        edges = self.edges[i]
        if not edges:
            return False
        by_label: dict[str, bool] = {}
        for lab, j in edges:
            by_label[lab] = by_label.get(lab, True) and j in f
        return any(by_label.values())

    def _update_f(self, new_states: list[int]) -> None:
        work = deque(new_states)
        queued = set(new_states)
        while work:
            i = work.popleft()
            queued.discard(i)
            if i in self.inconsistent:
                continue
            if self._f_rule(i):
                self.inconsistent.add(i)
                for p in self._parents[i]:
                    if p not in self.inconsistent and p not in queued:
                        work.append(p)
                        queued.add(p)

    def recompute_f(self, strategy: str = "worklist") -> frozenset[int]:
        """Recompute the fixpoint from scratch; used to check order independence."""
        saved = self.inconsistent
        self.inconsistent = set()
        try:
            n = len(self.terms)
            if strategy == "worklist":
                self._update_f(list(range(n)))
            elif strategy == "round_robin":
                changed = True
                while changed:
                    changed = False
                    for i in range(n):
                        if i not in self.inconsistent and self._f_rule(i):
                            self.inconsistent.add(i)
                            changed = True
            else:
                raise ValueError(f"unknown strategy {strategy!r}")
            return frozenset(self.inconsistent)
        finally:
            self.inconsistent = saved

    # -- lookups ---------------------------------------------------------

    def state_of(self, t: Term) -> int:
        s = normalize(t) if self.normalized else t
        i = self.index.get(s)
        if i is None:
            raise KeyError(f"term not built into this graph: {print_term(t)}")
        return i

    def term_of(self, i: int) -> Term:
        return self.terms[i]

    @property
    def reachable(self) -> list[int]:
        seen = set(self.roots)
        order = list(self.roots)
        k = 0
        while k < len(order):
            for _, j in self.edges[order[k]]:
                if j not in seen:
                    seen.add(j)
                    order.append(j)
            k += 1
        return order

    # -- weak, inconsistency-avoiding closures ---------------------------

    def eps_stable(self, s: int) -> tuple[int, ...]:
        """All stable consistent states reachable from s along consistent
        silent paths (s included when stable); empty iff s is inconsistent."""
        out = self._eps.get(s)
        if out is not None:
            return out
        if s in self.inconsistent:
            out = ()
        else:
            seen = {s}
            stack = [s]
            acc = []
            while stack:
                u = stack.pop()
                if self.stable[u]:
                    acc.append(u)
                    continue
                for lab, j in self.edges[u]:
                    if lab == TAU and j not in seen and j not in self.inconsistent:
                        seen.add(j)
                        stack.append(j)
            out = tuple(sorted(acc))
        self._eps[s] = out
        return out

    def act_stable_from_stable(self, u: int, a: str) -> tuple[int, ...]:
        """One a-step from a stable consistent state, closed under eps_stable."""
        key = (u, a)
        out = self._act.get(key)
        if out is not None:
            return out
        acc: set[int] = set()
        for lab, j in self.edges[u]:
            if lab == a and j not in self.inconsistent:
                acc.update(self.eps_stable(j))
        out = tuple(sorted(acc))
        self._act[key] = out
        return out

    def act_stable(self, s: int, a: str) -> tuple[int, ...]:
        acc: set[int] = set()
        for u in self.eps_stable(s):
            acc.update(self.act_stable_from_stable(u, a))
        return tuple(sorted(acc))

    def stable_step_neighbors(self, u: int) -> tuple[int, ...]:
        acc: set[int] = set()
        for a in sorted(self.ready[u]):
            if a != TAU:
                acc.update(self.act_stable_from_stable(u, a))
        return tuple(sorted(acc))

    def walk_stable(self, s: int) -> tuple[int, ...]:
        """States reachable from eps_stable(s) under visible stable steps."""
        out = self._walk.get(s)
        if out is not None:
            return out
        seen = set(self.eps_stable(s))
        queue = deque(seen)
        while queue:
            u = queue.popleft()
            for v in self.stable_step_neighbors(u):
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        out = tuple(sorted(seen))
        self._walk[s] = out
        return out


def build_graph(
    roots: list[Term],
    alphabet: Alphabet,
    limits: BuildLimits | None = None,
    normalized: bool = True,
) -> LltsGraph:
    g = LltsGraph(alphabet, limits, normalized)
    g.add_roots(roots)
    return g


def compute_F(g: LltsGraph) -> frozenset[int]:
    """The inconsistency fixpoint over the whole store."""
    return frozenset(g.inconsistent)


def eps_stable(g: LltsGraph, s) -> tuple[int, ...]:
    return g.eps_stable(s if isinstance(s, int) else g.state_of(s))


def act_stable(g: LltsGraph, s, a: str) -> tuple[int, ...]:
    return g.act_stable(s if isinstance(s, int) else g.state_of(s), a)


def validate(g: LltsGraph) -> ValidationReport:
    """Check tau-purity, backward inconsistency propagation and the
    divergence axiom over every state in the store."""
    report = ValidationReport(True, True, True, [])
    for i in range(len(g.terms)):
        labels = g.ready[i]
        if TAU in labels and len(labels) > 1:
            report.tau_pure = False
            report.counterexamples.append((g.terms[i], "tau-purity"))
        if i not in g.inconsistent:
            if g._some_label_all_inconsistent(i):
                report.lts1_holds = False
                report.counterexamples.append((g.terms[i], "LTS1"))
            if not g.eps_stable(i):
                report.lts2_holds = False
                report.counterexamples.append((g.terms[i], "LTS2"))
    return report


def export(g: LltsGraph, fmt: str = "json") -> str:
    order = g.reachable
    pub = {i: k for k, i in enumerate(order)}
    if fmt == "json":
        doc = {
            "alphabet": list(g.alphabet),
            "states": [{"id": pub[i], "term": print_term(g.terms[i])} for i in order],
            "edges": [
                {"from": pub[i], "label": lab, "to": pub[j]}
                for i in order
                for lab, j in g.edges[i]
            ],
            "f": sorted(pub[i] for i in order if i in g.inconsistent),
            "roots": sorted(set(pub[i] for i in g.roots)),
        }
        return json.dumps(doc, indent=2)
    if fmt == "dot":
        lines = ["digraph llts {"]
        for i in order:
            label = print_term(g.terms[i]).replace('"', '\\"')
            extra = ", peripheries=2" if i in g.inconsistent else ""
            lines.append(f'  n{pub[i]} [label="{label}"{extra}];')
        for i in order:
            for lab, j in g.edges[i]:
                style = ", style=dashed" if lab == TAU else ""
                lines.append(f'  n{pub[i]} -> n{pub[j]} [label="{lab}"{style}];')
        lines.append("}")
        return "\n".join(lines)
    raise ValueError(f"unknown export format {fmt!r}")
