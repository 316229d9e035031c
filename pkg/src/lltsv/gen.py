"""Seeded random terms and formulas for the law suites.

Sizes are AST node counts. Parallel composition and unless are down-weighted
to keep the derived state spaces small, and parallel nesting is capped
(conjunction growth under nested parallel can still explode).
"""

from __future__ import annotations

import random
from typing import Iterator

from .syntax import (
    BOT,
    NIL,
    TAU,
    TRUE,
    Alphabet,
    AlwaysF,
    And,
    Always,
    Box,
    Dis,
    En,
    ExtChoice,
    FAnd,
    FOr,
    FF,
    TT,
    Formula,
    Odot,
    Or,
    Parallel,
    Prefix,
    RecUnless,
    Term,
    Tri,
    Unless,
    WeakUntil,
)

_LEAVES = (NIL, BOT, TRUE)

# (name, weight, min extra size)
_UNARY = (("prefix", 8, 1), ("always", 2, 1))
_BINARY = (
    ("ext", 4),
    ("or", 4),
    ("and", 4),
    ("unless", 1),
    ("parallel", 1),
    ("tri", 1),
    ("rec", 1),
)


class TermGen:
    """Reproducible generator of alphabet-closed terms."""

    def __init__(
        self,
        alphabet: Alphabet,
        seed: int = 0,
        max_par_nesting: int = 1,
        allow_rec: bool = True,
        allow_internal: bool = True,
    ):
        self.alphabet = alphabet
        self.rng = random.Random(seed)
        self.max_par_nesting = max_par_nesting
        self.allow_rec = allow_rec
        self.allow_internal = allow_internal

    def _label(self) -> str:
        if self.alphabet.actions and self.rng.random() > 0.2:
            return self.rng.choice(self.alphabet.actions)
        return TAU

    def term(self, size: int, _par_depth: int = 0) -> Term:
        rng = self.rng
        if size <= 1:
            return rng.choice(_LEAVES)
        choices: list[tuple[str, int]] = [("prefix", 8), ("always", 2)]
        if size >= 3:
            for name, w in _BINARY:
                if name == "parallel" and _par_depth >= self.max_par_nesting:
                    continue
                if name == "rec" and not self.allow_rec:
                    continue
                if name == "tri" and not self.allow_internal:
                    continue
                choices.append((name, w))
        if size >= 4 and self.allow_internal:
            choices.append(("odot", 1))
        total = sum(w for _, w in choices)
        pick = rng.randrange(total)
        for name, w in choices:
            pick -= w
            if pick < 0:
                break
        if name == "prefix":
            return Prefix(self._label(), self.term(size - 1, _par_depth))
        if name == "always":
            return Always(self.term(size - 1, _par_depth))
        if name == "odot":
            budget = size - 1
            a = rng.randint(1, budget - 2)
            b = rng.randint(1, budget - a - 1)
            return Odot(
                self.term(a, _par_depth),
                self.term(b, _par_depth),
                self.term(budget - a - b, _par_depth),
            )
        left_size = rng.randint(1, size - 2)
        right_size = size - 1 - left_size
        if name == "parallel":
            sync = tuple(
                sorted(
                    a for a in self.alphabet if rng.random() < 0.5
                )
            )
            return Parallel(
                self.term(left_size, _par_depth + 1),
                sync,
                self.term(right_size, _par_depth + 1),
            )
        left = self.term(left_size, _par_depth)
        right = self.term(right_size, _par_depth)
        ctor = {
            "ext": ExtChoice,
            "or": Or,
            "and": And,
            "unless": Unless,
            "tri": Tri,
            "rec": RecUnless,
        }[name]
        return ctor(left, right)

    def terms(self, count: int, size: int) -> Iterator[Term]:
        for _ in range(count):
            yield self.term(size)

    def fragment_term(self, size: int) -> Term:
        """A term from the restricted grammar that admits characteristic
        formulas: no parallel, no silent prefixes, no bookkeeping operators."""
        rng = self.rng
        acts = self.alphabet.actions
        if size <= 1:
            if acts and rng.random() < 0.3:
                from .syntax import action_menu

                menu = tuple(a for a in acts if rng.random() < 0.5)
                return action_menu(menu)
            return rng.choice(_LEAVES)
        if not acts or rng.random() < 0.55:
            kind = rng.randrange(4)
            if kind == 0 and acts:
                return Prefix(rng.choice(acts), self.fragment_term(size - 1))
            if kind == 1:
                return Always(self.fragment_term(size - 1))
            if kind == 2 and acts:
                from .syntax import guarded_menu

                a = rng.choice(acts)
                menu = tuple(b for b in acts if b != a and rng.random() < 0.5)
                return guarded_menu(menu, a, self.fragment_term(size - 1))
            return Always(self.fragment_term(size - 1))
        left = rng.randint(1, size - 2) if size >= 3 else 1
        right = max(size - 1 - left, 1)
        ctor = rng.choice((Or, And, Unless))
        return ctor(self.fragment_term(left), self.fragment_term(right))

    def formula(self, depth: int) -> Formula:
        rng = self.rng
        if depth <= 1 or not self.alphabet.actions:
            if not self.alphabet.actions:
                return rng.choice((TT, FF))
            a = rng.choice(self.alphabet.actions)
            return rng.choice((TT, FF, En(a), Dis(a)))
        kind = rng.randrange(6)
        if kind == 0:
            return Box(rng.choice(self.alphabet.actions), self.formula(depth - 1))
        if kind == 1:
            return AlwaysF(self.formula(depth - 1))
        if kind == 2:
            return WeakUntil(self.formula(depth - 1), self.formula(depth - 1))
        if kind == 3:
            return FOr(self.formula(depth - 1), self.formula(depth - 1))
        if kind == 4:
            return FAnd(self.formula(depth - 1), self.formula(depth - 1))
        return self.formula(1)


def enumerate_terms(max_size: int, alphabet: Alphabet) -> list[Term]:
    """Every term of the full grammar up to the given node count, in a
    deterministic order. Grows steeply with size; meant for sizes <= 5."""
    labels = list(alphabet) + [TAU]
    syncs = list(alphabet.subsets())
    by_size: list[list[Term]] = [[], list(_LEAVES)]
    for n in range(2, max_size + 1):
        bucket: list[Term] = []
        for body in by_size[n - 1]:
            for lab in labels:
                bucket.append(Prefix(lab, body))
            bucket.append(Always(body))
        for left_n in range(1, n - 1):
            right_n = n - 1 - left_n
            for left in by_size[left_n]:
                for right in by_size[right_n]:
                    bucket.append(ExtChoice(left, right))
                    bucket.append(Or(left, right))
                    bucket.append(And(left, right))
                    bucket.append(Unless(left, right))
                    bucket.append(Tri(left, right))
                    bucket.append(RecUnless(left, right))
                    for sync in syncs:
                        bucket.append(Parallel(left, sync, right))
        for a_n in range(1, n - 2):
            for b_n in range(1, n - 1 - a_n):
                c_n = n - 1 - a_n - b_n
                for x in by_size[a_n]:
                    for y in by_size[b_n]:
                        for z in by_size[c_n]:
                            bucket.append(Odot(x, y, z))
        by_size.append(bucket)
    return [t for bucket in by_size[1 : max_size + 1] for t in bucket]


def enumerate_formulas(max_depth: int, alphabet: Alphabet) -> list[Formula]:
    """Every formula up to the given connective depth."""
    atoms: list[Formula] = [TT, FF]
    for a in alphabet:
        atoms.append(En(a))
        atoms.append(Dis(a))
    by_depth: list[list[Formula]] = [atoms]
    for _ in range(max_depth - 1):
        prev = [f for level in by_depth for f in level]
        level: list[Formula] = []
        last = by_depth[-1]
        for body in last:
            for a in alphabet:
                level.append(Box(a, body))
            level.append(AlwaysF(body))
        seen = set()
        for left in prev:
            for right in prev:
                if left in last or right in last:
                    for f in (FOr(left, right), FAnd(left, right), WeakUntil(left, right)):
                        if f not in seen:
                            seen.add(f)
                            level.append(f)
        by_depth.append(level)
    return [f for level in by_depth for f in level]
