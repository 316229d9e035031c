"""Characteristic processes of formulas and characteristic formulas of
processes, with helpers to verify the adjunction between the two preorders.

The process translation sends ff to bot, tt to true, is homomorphic on the
connectives, turns en(a)/dis(a) into the disjunction of all action menus
containing/omitting a, and maps the modal operators onto the corresponding
process operators. The formula translation is its lower adjoint on the
restricted fragment: a translated process's formula is satisfied by exactly
the process's refinements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotInFragmentError
from .llts import BuildLimits, build_graph
from .syntax import (
    Alphabet,
    AlwaysF,
    And,
    Always,
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
    Or,
    Prefix,
    TAU,
    TRUE,
    BOT,
    TT,
    FF,
    Term,
    Tru,
    Tt,
    Unless,
    WeakUntil,
    action_menu,
    ceil,
    fragment_offender,
    gen_disj,
    split_choice_tree,
)


def char_process(f: Formula, alphabet: Alphabet, max_pow: int = 64) -> Term:
    """The loosest process refined by exactly the satisfiers of f."""
    cls = type(f)
    if cls is Ff:
        return BOT
    if cls is Tt:
        return TRUE
    if cls is FAnd:
        return And(char_process(f.left, alphabet, max_pow), char_process(f.right, alphabet, max_pow))
    if cls is FOr:
        return Or(char_process(f.left, alphabet, max_pow), char_process(f.right, alphabet, max_pow))
    if cls is En:
        alphabet.require_nonempty("en translation")
        return gen_disj(
            action_menu(s) for s in alphabet.subsets() if f.action in s
        )
    if cls is Dis:
        return gen_disj(
            action_menu(s) for s in alphabet.subsets() if f.action not in s
        )
    if cls is Box:
        return ceil(f.action, char_process(f.body, alphabet, max_pow), alphabet, max_pow)
    if cls is AlwaysF:
        return Always(char_process(f.body, alphabet, max_pow))
    # WeakUntil
    return Unless(char_process(f.left, alphabet, max_pow), char_process(f.right, alphabet, max_pow))


def _conj_formula(parts: list[Formula]) -> Formula:
    if not parts:
        return TT
    acc = parts[0]
    for p in parts[1:]:
        acc = FAnd(acc, p)
    return acc


def char_formula(t: Term, alphabet: Alphabet) -> Formula:
    """The strongest formula satisfied by exactly the refinements of t.

    Defined on the restricted fragment only; other terms raise
    NotInFragmentError naming the offending subterm.
    """
    offender = fragment_offender(t)
    if offender is not None:
        raise NotInFragmentError(offender)
    return _char_formula(t, alphabet)


def _menu_formula(actions: tuple[str, ...], alphabet: Alphabet) -> Formula:
    menu = set(actions)
    parts: list[Formula] = [En(a) for a in sorted(menu)]
    parts += [Dis(a) for a in alphabet if a not in menu]
    return _conj_formula(parts)


def _char_formula(t: Term, alphabet: Alphabet) -> Formula:
    cls = type(t)
    if cls is Bot:
        return FF
    if cls is Tru:
        return TT
    if cls is Nil:
        return _conj_formula([Dis(a) for a in alphabet])
    if cls is Prefix:
        parts: list[Formula] = [En(t.label), Box(t.label, _char_formula(t.body, alphabet))]
        parts += [Dis(b) for b in alphabet if b != t.label]
        return _conj_formula(parts)
    if cls is And:
        return FAnd(_char_formula(t.left, alphabet), _char_formula(t.right, alphabet))
    if cls is Or:
        return FOr(_char_formula(t.left, alphabet), _char_formula(t.right, alphabet))
    if cls is Always:
        return AlwaysF(_char_formula(t.body, alphabet))
    if cls is Unless:
        return WeakUntil(_char_formula(t.left, alphabet), _char_formula(t.right, alphabet))
    # external choice tree: plain menu or a menu with one guarded branch
    shape = split_choice_tree(t)
    if shape[0] == "menu":
        return _menu_formula(shape[1], alphabet)
    _, menu, a, body = shape
    return FAnd(
        _menu_formula(menu + (a,), alphabet),
        Box(a, _char_formula(body, alphabet)),
    )


@dataclass
class GaloisReport:
    cancellation1: list[tuple[Term, bool]] = field(default_factory=list)
    cancellation2: list[tuple[Formula, bool]] = field(default_factory=list)
    adjunction: list[tuple[Term, Formula, bool, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            all(h for _, h in self.cancellation1)
            and all(h for _, h in self.cancellation2)
            and all(l == r for _, _, l, r in self.adjunction)
        )


def verify_galois(
    processes: list[Term],
    formulas: list[Formula],
    alphabet: Alphabet,
    limits: BuildLimits | None = None,
) -> GaloisReport:
    """Check both cancellation laws and the adjunction on the given samples.

    Processes must lie in the restricted fragment. The adjunction lists each
    (p, f) with the truth of the two sides; the report is ok when every pair
    agrees and both cancellations hold everywhere.
    """
    from .refine import refines_bool

    report = GaloisReport()
    proc_chars = {p: char_process(char_formula(p, alphabet), alphabet) for p in processes}
    form_chars = {f: char_process(f, alphabet) for f in formulas}
    form_round = {
        f: char_process(char_formula(form_chars[f], alphabet), alphabet) for f in formulas
    }
    roots = list(processes)
    roots += list(proc_chars.values())
    roots += list(form_chars.values())
    roots += list(form_round.values())
    g = build_graph(roots, alphabet, limits)
    for p in processes:
        report.cancellation1.append((p, refines_bool(g, p, proc_chars[p])))
    for f in formulas:
        report.cancellation2.append((f, refines_bool(g, form_round[f], form_chars[f])))
    for p in processes:
        for f in formulas:
            left = refines_bool(g, proc_chars[p], form_chars[f])
            right = refines_bool(g, p, form_chars[f])
            report.adjunction.append((p, f, left, right))
    return report
