"""Single-step transition semantics.

Successor sets are computed by syntax-directed recursion on the (normalized)
state term. Silent steps take priority over visible ones at external choice
and parallel composition: a component's visible branches are offered only
while the sibling is stable. The loosest process `true` steps silently to
every action menu over the declared alphabet.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, NamedTuple

from .errors import AlphabetTooLarge
from .syntax import (
    TAU,
    Alphabet,
    And,
    Always,
    Bot,
    ExtChoice,
    Nil,
    Odot,
    Or,
    Parallel,
    Prefix,
    RecUnless,
    Term,
    Tri,
    Tru,
    Unless,
    action_menu,
    ceil,
    conjuncts,
    gen_conj,
    normalize,
    term_key,
)


class Step(NamedTuple):
    label: str
    target: Term


def _step_sort_key(step: Step):
    return (step.label != TAU, step.label, term_key(step.target))


class StepSemantics:
    """Successor oracle for one alphabet.

    With ``normalized=True`` every produced target is in conjunction-normal
    form, which keeps the derivative spaces of the temporal operators finite.
    ``normalized=False`` reproduces the raw rule-level targets for
    cross-checking on terms whose raw graph is finite.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        normalized: bool = True,
        max_alphabet_pow: int = 64,
    ):
        self.alphabet = alphabet
        self.normalized = normalized
        self.max_alphabet_pow = max_alphabet_pow
        self._succ: dict[Term, tuple[Step, ...]] = {}

    # -- public surface ----------------------------------------------------

    def successors(self, t: Term) -> tuple[Step, ...]:
        out = self._succ.get(t)
        if out is None:
            steps = set(self._raw_steps(t))
            out = tuple(sorted(steps, key=_step_sort_key))
            self._succ[t] = out
        return out

    def is_stable(self, t: Term) -> bool:
        succ = self.successors(t)
        return not (succ and succ[0].label == TAU)

    def ready_set(self, t: Term) -> frozenset[str]:
        return frozenset(s.label for s in self.successors(t))

    # -- rule dispatch -----------------------------------------------------

    def _n(self, t: Term) -> Term:
        return normalize(t) if self.normalized else t

    def _raw_steps(self, t: Term) -> Iterable[Step]:
        cls = type(t)
        if cls in (Nil, Bot):
            return ()
        if cls is Tru:
            return self._true_steps()
        if cls is Prefix:
            return ((Step(t.label, self._n(t.body)),))
        if cls is Or:
            return (Step(TAU, self._n(t.left)), Step(TAU, self._n(t.right)))
        if cls is Unless:
            left = self._n(t.left)
            right = self._n(t.right)
            return (Step(TAU, right), Step(TAU, Odot(left, left, right)))
        if cls is RecUnless:
            return self._rec_steps(t)
        if cls is ExtChoice:
            return self._ext_steps(t)
        if cls is And:
            return self._and_steps(t)
        if cls is Parallel:
            return self._par_steps(t)
        if cls is Always:
            return self._always_steps(t)
        if cls is Tri:
            return self._tri_steps(t)
        return self._odot_steps(t)

    def _true_steps(self):
        if 1 << len(self.alphabet) > self.max_alphabet_pow:
            raise AlphabetTooLarge(
                f"unfolding true needs 2^{len(self.alphabet)} menus, "
                f"exceeding the bound {self.max_alphabet_pow}"
            )
        return tuple(Step(TAU, action_menu(a)) for a in self.alphabet.subsets())

    def _rec_steps(self, t: RecUnless):
        self.alphabet.require_nonempty("unfolding rec")
        guard = gen_conj(
            ceil(a, t, self.alphabet, self.max_alphabet_pow) for a in self.alphabet
        )
        return (
            Step(TAU, self._n(t.right)),
            Step(TAU, self._n(And(t.left, guard))),
        )

    def _ext_steps(self, t: ExtChoice):
        ls, rs = self.successors(t.left), self.successors(t.right)
        steps = []
        for lab, tgt in ls:
            if lab == TAU:
                steps.append(Step(TAU, self._n(ExtChoice(tgt, t.right))))
        for lab, tgt in rs:
            if lab == TAU:
                steps.append(Step(TAU, self._n(ExtChoice(t.left, tgt))))
        if self.is_stable(t.right):
            steps.extend(s for s in ls if s.label != TAU)
        if self.is_stable(t.left):
            steps.extend(s for s in rs if s.label != TAU)
        return steps

    def _and_steps(self, t: And):
        if not self.normalized:
            return self._and_steps_binary(t)
        cs = conjuncts(t)
        succ = [self.successors(c) for c in cs]
        steps = []
        for i, si in enumerate(succ):
            for lab, tgt in si:
                if lab == TAU:
                    parts = list(cs)
                    parts[i] = tgt
                    steps.append(Step(TAU, normalize(gen_conj(parts))))
        labels = set()
        for si in succ:
            labels.update(lab for lab, _ in si if lab != TAU)
        for a in labels:
            per = [[tgt for lab, tgt in si if lab == a] for si in succ]
            if all(per):
                for combo in product(*per):
                    steps.append(Step(a, normalize(gen_conj(combo))))
        return steps

    def _and_steps_binary(self, t: And):
        ls, rs = self.successors(t.left), self.successors(t.right)
        steps = []
        for lab, tgt in ls:
            if lab == TAU:
                steps.append(Step(TAU, And(tgt, t.right)))
        for lab, tgt in rs:
            if lab == TAU:
                steps.append(Step(TAU, And(t.left, tgt)))
        for lab, tgt in ls:
            if lab != TAU:
                for lab2, tgt2 in rs:
                    if lab2 == lab:
                        steps.append(Step(lab, And(tgt, tgt2)))
        return steps

    def _par_steps(self, t: Parallel):
        ls, rs = self.successors(t.left), self.successors(t.right)
        sync = t.sync
        steps = []
        for lab, tgt in ls:
            if lab == TAU:
                steps.append(Step(TAU, self._n(Parallel(tgt, sync, t.right))))
        for lab, tgt in rs:
            if lab == TAU:
                steps.append(Step(TAU, self._n(Parallel(t.left, sync, tgt))))
        right_stable = self.is_stable(t.right)
        left_stable = self.is_stable(t.left)
        for lab, tgt in ls:
            if lab != TAU and lab not in sync and right_stable:
                steps.append(Step(lab, self._n(Parallel(tgt, sync, t.right))))
        for lab, tgt in rs:
            if lab != TAU and lab not in sync and left_stable:
                steps.append(Step(lab, self._n(Parallel(t.left, sync, tgt))))
        for lab, tgt in ls:
            if lab in sync:
                for lab2, tgt2 in rs:
                    if lab2 == lab:
                        steps.append(Step(lab, self._n(Parallel(tgt, sync, tgt2))))
        return steps

    def _always_steps(self, t: Always):
        steps = []
        for lab, tgt in self.successors(t.body):
            if lab == TAU:
                steps.append(Step(TAU, Tri(tgt, t.body)))
            else:
                steps.append(Step(lab, Tri(self._n(And(tgt, t.body)), t.body)))
        return steps

    def _tri_steps(self, t: Tri):
        steps = []
        for lab, tgt in self.successors(t.left):
            if lab == TAU:
                steps.append(Step(TAU, Tri(tgt, t.right)))
            else:
                steps.append(Step(lab, Tri(self._n(And(tgt, t.right)), t.right)))
        return steps

    def _odot_steps(self, t: Odot):
        steps = []
        for lab, tgt in self.successors(t.body):
            if lab == TAU:
                steps.append(Step(TAU, Odot(tgt, t.u_left, t.u_right)))
            else:
                steps.append(Step(lab, self._n(And(tgt, t.u_right))))
                steps.append(
                    Step(lab, Odot(self._n(And(tgt, t.u_left)), t.u_left, t.u_right))
                )
        return steps


def transitions(s: Term, alphabet: Alphabet, normalized: bool = True) -> tuple[Step, ...]:
    """Successor steps of a single state, in canonical (label, term) order."""
    return StepSemantics(alphabet, normalized=normalized).successors(s)


def is_stable(s: Term, alphabet: Alphabet) -> bool:
    return StepSemantics(alphabet).is_stable(s)


def ready_set(s: Term, alphabet: Alphabet) -> frozenset[str]:
    return StepSemantics(alphabet).ready_set(s)
