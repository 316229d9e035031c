"""Independent rule-level oracles used to cross-check the main algorithms.

`NaiveSemantics` implements the transition rule schemas literally on raw
terms (no normalization, no canonical ordering). `NaiveF` saturates the
inconsistency predicate rules over a budgeted support closure of raw terms:
derivations only ever shrink toward the axioms, so a term is reported
inconsistent exactly when a finite derivation exists within the materialized
support. Raw derivative spaces can be infinite (visible steps through the
history operators keep growing conjunction chains), hence the budget; terms
beyond it count as consistent premises, which can only under-approximate.
`naive_satisfies` re-decides the two path operators by brute-force path
enumeration up to the pigeonhole length instead of reachability.
"""

from __future__ import annotations

from collections import deque

from .llts import LltsGraph
from .syntax import (
    TAU,
    Alphabet,
    And,
    Always,
    AlwaysF,
    Bot,
    Box,
    Dis,
    En,
    ExtChoice,
    FAnd,
    FOr,
    Ff,
    Formula,
    Nil,
    Odot,
    Or,
    Parallel,
    Prefix,
    RecUnless,
    Term,
    Tri,
    Tru,
    Tt,
    Unless,
    action_menu,
    eta,
)


class NaiveSemantics:
    """Literal reading of the transition rule schemas."""

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self._memo: dict[Term, frozenset[tuple[str, Term]]] = {}

    def steps(self, t: Term) -> frozenset[tuple[str, Term]]:
        out = self._memo.get(t)
        if out is not None:
            return out
        acc: set[tuple[str, Term]] = set()
        cls = type(t)
        if cls is Prefix:
            acc.add((t.label, t.body))
        elif cls is Tru:
            for subset in self.alphabet.subsets():
                acc.add((TAU, action_menu(subset)))
        elif cls is Or:
            acc.add((TAU, t.left))
            acc.add((TAU, t.right))
        elif cls is ExtChoice:
            ls, rs = self.steps(t.left), self.steps(t.right)
            left_stable = self.stable(t.left)
            right_stable = self.stable(t.right)
            for lab, s in ls:
                if lab == TAU:
                    acc.add((TAU, ExtChoice(s, t.right)))
                elif right_stable:
                    acc.add((lab, s))
            for lab, s in rs:
                if lab == TAU:
                    acc.add((TAU, ExtChoice(t.left, s)))
                elif left_stable:
                    acc.add((lab, s))
        elif cls is And:
            ls, rs = self.steps(t.left), self.steps(t.right)
            for lab, s in ls:
                if lab == TAU:
                    acc.add((TAU, And(s, t.right)))
            for lab, s in rs:
                if lab == TAU:
                    acc.add((TAU, And(t.left, s)))
            for lab, s in ls:
                if lab != TAU:
                    for lab2, s2 in rs:
                        if lab2 == lab:
                            acc.add((lab, And(s, s2)))
        elif cls is Parallel:
            ls, rs = self.steps(t.left), self.steps(t.right)
            left_stable = self.stable(t.left)
            right_stable = self.stable(t.right)
            for lab, s in ls:
                if lab == TAU:
                    acc.add((TAU, Parallel(s, t.sync, t.right)))
                elif lab not in t.sync and right_stable:
                    acc.add((lab, Parallel(s, t.sync, t.right)))
            for lab, s in rs:
                if lab == TAU:
                    acc.add((TAU, Parallel(t.left, t.sync, s)))
                elif lab not in t.sync and left_stable:
                    acc.add((lab, Parallel(t.left, t.sync, s)))
            for lab, s in ls:
                if lab in t.sync:
                    for lab2, s2 in rs:
                        if lab2 == lab:
                            acc.add((lab, Parallel(s, t.sync, s2)))
        elif cls is Always:
            for lab, s in self.steps(t.body):
                if lab == TAU:
                    acc.add((TAU, Tri(s, t.body)))
                else:
                    acc.add((lab, Tri(And(s, t.body), t.body)))
        elif cls is Tri:
            for lab, s in self.steps(t.left):
                if lab == TAU:
                    acc.add((TAU, Tri(s, t.right)))
                else:
                    acc.add((lab, Tri(And(s, t.right), t.right)))
        elif cls is Unless:
            acc.add((TAU, Odot(t.left, t.left, t.right)))
            acc.add((TAU, t.right))
        elif cls is Odot:
            for lab, s in self.steps(t.body):
                if lab == TAU:
                    acc.add((TAU, Odot(s, t.u_left, t.u_right)))
                else:
                    acc.add((lab, And(s, t.u_right)))
                    acc.add((lab, Odot(And(s, t.u_left), t.u_left, t.u_right)))
        elif cls is RecUnless:
            acc.update(self.steps(eta(t.left, t.right, t, self.alphabet)))
        out = frozenset(acc)
        self._memo[t] = out
        return out

    def stable(self, t: Term) -> bool:
        return not any(lab == TAU for lab, _ in self.steps(t))

    def visible(self, t: Term) -> frozenset[str]:
        return frozenset(lab for lab, _ in self.steps(t) if lab != TAU)


_RP16_NAIVE = (And, Always, Tri, Odot)


class NaiveF:
    """Saturation of the inconsistency predicate rules on raw terms."""

    def __init__(self, alphabet: Alphabet, budget: int = 4000):
        self.alphabet = alphabet
        self.budget = budget
        self.sem = NaiveSemantics(alphabet)
        self.support: set[Term] = set()
        self.f: set[Term] = set()
        self.truncated: set[Term] = set()  # roots whose support hit the budget
        self._deps: dict[Term, tuple[Term, ...]] = {}
        self._parents: dict[Term, set[Term]] = {}
        self._dirty: deque[Term] = deque()

    def _dep_terms(self, t: Term) -> tuple[Term, ...]:
        out = self._deps.get(t)
        if out is not None:
            return out
        cls = type(t)
        if cls is Prefix:
            deps: tuple[Term, ...] = (t.body,)
        elif cls in (Or, And, ExtChoice, Parallel):
            deps = (t.left, t.right)
        elif cls is Unless:
            deps = (t.right, Odot(t.left, t.left, t.right))
        elif cls is Always:
            deps = (t.body,)
        elif cls is Tri:
            deps = (t.left,)
        elif cls is Odot:
            deps = (t.body,)
        elif cls is RecUnless:
            deps = (eta(t.left, t.right, t, self.alphabet),)
        else:
            deps = ()
        if cls in _RP16_NAIVE:
            deps = deps + tuple(s for _, s in self.sem.steps(t))
        self._deps[t] = deps
        return deps

    def add_root(self, t: Term, budget: int | None = None) -> None:
        budget = self.budget if budget is None else budget
        queue = deque([t])
        fresh = 0
        while queue:
            u = queue.popleft()
            if u in self.support:
                continue
            if fresh >= budget:
                self.truncated.add(t)
                return
            fresh += 1
            self.support.add(u)
            self._dirty.append(u)
            for d in self._dep_terms(u):
                self._parents.setdefault(d, set()).add(u)
                queue.append(d)
        self.truncated.discard(t)

    def _holds(self, t: Term) -> bool:
        cls = type(t)
        if cls is Bot:
            return True
        if cls in (Nil, Tru):
            return False
        f = self.f
        if cls is Prefix:
            return t.body in f
        if cls is Or:
            return t.left in f and t.right in f
        if cls in (ExtChoice, Parallel):
            return t.left in f or t.right in f
        if cls is Unless:
            return t.right in f and Odot(t.left, t.left, t.right) in f
        if cls is RecUnless:
            return self._dep_terms(t)[0] in f
        if cls is And:
            if t.left in f or t.right in f:
                return True
            if self.sem.stable(t):
                if self.sem.visible(t.left) != self.sem.visible(t.right):
                    return True
            return self._rp16(t)
        if cls is Always:
            return t.body in f or self._rp16(t)
        if cls is Tri:
            return t.left in f or self._rp16(t)
        if cls is Odot:
            return t.body in f or self._rp16(t)
        return False

    def _rp16(self, t: Term) -> bool:
        by_label: dict[str, bool] = {}
        for lab, s in self.sem.steps(t):
            by_label[lab] = by_label.get(lab, True) and s in self.f
        return any(by_label.values())

    def saturate(self) -> None:
        work = self._dirty
        self._dirty = deque()
        queued = set(work)
        while work:
            t = work.popleft()
            queued.discard(t)
            if t in self.f:
                continue
            if self._holds(t):
                self.f.add(t)
                for p in self._parents.get(t, ()):
                    if p in self.support and p not in self.f and p not in queued:
                        work.append(p)
                        queued.add(p)

    def in_f(self, t: Term) -> bool:
        return t in self.f


def naive_inconsistent(t: Term, alphabet: Alphabet, budget: int = 4000) -> bool:
    oracle = NaiveF(alphabet, budget)
    oracle.add_root(t)
    oracle.saturate()
    return oracle.in_f(t)


# -- brute-force satisfaction ------------------------------------------------


def naive_satisfies(g: LltsGraph, p, f: Formula) -> bool:
    """Path-enumeration reading of the satisfaction clauses (small graphs)."""
    pid = p if isinstance(p, int) else g.state_of(p)
    bound = sum(1 for i in range(len(g.terms)) if g.stable[i]) + 1
    return all(_nsat(g, u, f, bound) for u in g.eps_stable(pid))


def _nsat(g: LltsGraph, u: int, f: Formula, bound: int) -> bool:
    cls = type(f)
    if cls is Tt:
        return True
    if cls is Ff:
        return u in g.inconsistent
    if cls is En:
        return f.action in g.ready[u]
    if cls is Dis:
        return f.action not in g.ready[u]
    if cls is FOr:
        return _nsat(g, u, f.left, bound) or _nsat(g, u, f.right, bound)
    if cls is FAnd:
        return _nsat(g, u, f.left, bound) and _nsat(g, u, f.right, bound)
    if cls is Box:
        return all(
            _nsat(g, w, f.body, bound) for w in g.act_stable_from_stable(u, f.action)
        )
    if cls is AlwaysF:
        return not _exists_path(
            g, u, bound, lambda w: not _nsat(g, w, f.body, bound), None
        )
    # WeakUntil: a violating path stays out of the release side and ends
    # where the hold side fails
    return not _exists_path(
        g,
        u,
        bound,
        lambda w: not _nsat(g, w, f.left, bound),
        lambda w: _nsat(g, w, f.right, bound),
    )


def _exists_path(g, start, bound, bad, stop) -> bool:
    """Is there a stable-step path (length < bound) from start, never passing
    a stop-state, that ends in a bad state? Literal path enumeration."""

    def dfs(u: int, length: int) -> bool:
        if stop is not None and stop(u):
            return False
        if bad(u):
            return True
        if length + 1 >= bound:
            return False
        return any(dfs(v, length + 1) for v in g.stable_step_neighbors(u))

    return dfs(start, 0)
