"""Process terms, logic formulas, and the derived term-building combinators.

The term constructors follow the calculus grammar: deadlock 0, the
inconsistent process bot, the loosest process true, action prefix, external
choice, CSP-style parallel composition, disjunction, conjunction, the
temporal operators # (always) and W (unless), their bookkeeping companions
^ and @, and the recursive unless constant rec(p,q).

States of the transition system are terms in conjunction-normal form: nested
conjunctions are flattened, sorted and deduplicated (see `normalize`), which
is what keeps the state spaces of #, ^ and @ finite.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    AlphabetTooLarge,
    EmptyListError,
    ParseError,
    UnknownActionError,
)

TAU = "tau"  # the silent label; never a member of an Alphabet

_IDENT_RE = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
RESERVED_WORDS = frozenset({"tt", "ff", "en", "dis", "AG", "W", "rec", "bot", "true"})


def is_action_name(name: str) -> bool:
    return bool(_IDENT_RE.match(name)) and name not in RESERVED_WORDS and name != TAU


class Alphabet:
    """Ordered, duplicate-free set of visible action names."""

    MAX_SIZE = 6

    __slots__ = ("actions", "_members")

    def __init__(self, actions: Iterable[str], max_size: int = MAX_SIZE):
        seen = []
        for a in actions:
            if not is_action_name(a):
                raise UnknownActionError(a)
            if a not in seen:
                seen.append(a)
        if len(seen) > max_size:
            raise AlphabetTooLarge(
                f"alphabet of size {len(seen)} exceeds the bound {max_size}"
            )
        self.actions = tuple(seen)
        self._members = frozenset(seen)

    def __contains__(self, a: str) -> bool:
        return a in self._members

    def __iter__(self) -> Iterator[str]:
        return iter(self.actions)

    def __len__(self) -> int:
        return len(self.actions)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.actions == other.actions

    def __hash__(self) -> int:
        return hash(self.actions)

    def __repr__(self) -> str:
        return f"Alphabet({','.join(self.actions)})"

    def require_nonempty(self, what: str) -> None:
        if not self.actions:
            raise EmptyListError(f"{what} needs a nonempty alphabet")

    def subsets(self) -> Iterator[tuple[str, ...]]:
        """All subsets in canonical power-set order (binary counting)."""
        n = len(self.actions)
        for mask in range(1 << n):
            yield tuple(a for i, a in enumerate(self.actions) if mask >> i & 1)


# --------------------------------------------------------------------------
# Terms
# --------------------------------------------------------------------------


class Term:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Nil(Term):
    pass


@dataclass(frozen=True, slots=True)
class Bot(Term):
    pass


@dataclass(frozen=True, slots=True)
class Tru(Term):
    pass


@dataclass(frozen=True, slots=True)
class Prefix(Term):
    label: str  # a visible action or TAU
    body: Term


@dataclass(frozen=True, slots=True)
class ExtChoice(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Parallel(Term):
    left: Term
    sync: tuple[str, ...]  # sorted tuple of visible actions
    right: Term


@dataclass(frozen=True, slots=True)
class Or(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class And(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Always(Term):
    body: Term


@dataclass(frozen=True, slots=True)
class Unless(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Tri(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Odot(Term):
    body: Term
    u_left: Term
    u_right: Term


@dataclass(frozen=True, slots=True)
class RecUnless(Term):
    left: Term
    right: Term


NIL = Nil()
BOT = Bot()
TRUE = Tru()

_TAG = {
    Nil: 0,
    Bot: 1,
    Tru: 2,
    Prefix: 3,
    ExtChoice: 4,
    Parallel: 5,
    Or: 6,
    And: 7,
    Always: 8,
    Unless: 9,
    Tri: 10,
    Odot: 11,
    RecUnless: 12,
}

_key_cache: dict[Term, tuple] = {}


def term_key(t: Term) -> tuple:
    """Total structural order on terms, used for every canonical ordering."""
    k = _key_cache.get(t)
    if k is not None:
        return k
    cls = type(t)
    tag = _TAG[cls]
    if cls in (Nil, Bot, Tru):
        k = (tag,)
    elif cls is Prefix:
        k = (tag, t.label, term_key(t.body))
    elif cls is Parallel:
        k = (tag, t.sync, term_key(t.left), term_key(t.right))
    elif cls is Odot:
        k = (tag, term_key(t.body), term_key(t.u_left), term_key(t.u_right))
    elif cls is Always:
        k = (tag, term_key(t.body))
    else:
        k = (tag, term_key(t.left), term_key(t.right))
    _key_cache[t] = k
    return k


def children(t: Term) -> tuple[Term, ...]:
    cls = type(t)
    if cls in (Nil, Bot, Tru):
        return ()
    if cls in (Prefix, Always):
        return (t.body,)
    if cls is Odot:
        return (t.body, t.u_left, t.u_right)
    return (t.left, t.right)


def term_size(t: Term) -> int:
    return 1 + sum(term_size(c) for c in children(t))


def term_actions(t: Term) -> frozenset[str]:
    """All visible action names occurring in a term (labels and sync sets)."""
    acc: set[str] = set()
    stack = [t]
    while stack:
        s = stack.pop()
        if type(s) is Prefix and s.label != TAU:
            acc.add(s.label)
        elif type(s) is Parallel:
            acc.update(s.sync)
        stack.extend(children(s))
    return frozenset(acc)


# --------------------------------------------------------------------------
# Conjunction-normal form
# --------------------------------------------------------------------------


def conjuncts(t: Term) -> list[Term]:
    """Leaves of the conjunction tree rooted at t, left to right."""
    if type(t) is not And:
        return [t]
    return conjuncts(t.left) + conjuncts(t.right)


def _rebuild_conj(parts: list[Term]) -> Term:
    acc = parts[0]
    for p in parts[1:]:
        acc = And(acc, p)
    return acc


_norm_cache: dict[Term, Term] = {}


def normalize(t: Term) -> Term:
    """Quotient by the idempotent/commutative/associative laws of conjunction.

    Conjunction trees are flattened into a duplicate-free, term-order-sorted,
    left-nested chain; every other constructor is rebuilt with normalized
    children. Idempotent: normalize(normalize(t)) == normalize(t).
    """
    out = _norm_cache.get(t)
    if out is not None:
        return out
    cls = type(t)
    if cls in (Nil, Bot, Tru):
        out = t
    elif cls is Prefix:
        out = Prefix(t.label, normalize(t.body))
    elif cls is Always:
        out = Always(normalize(t.body))
    elif cls is And:
        parts: list[Term] = []
        for side in (t.left, t.right):
            for c in conjuncts(normalize(side)):
                if c not in parts:
                    parts.append(c)
        parts.sort(key=term_key)
        out = _rebuild_conj(parts)
    elif cls is ExtChoice:
        out = ExtChoice(normalize(t.left), normalize(t.right))
    elif cls is Parallel:
        out = Parallel(normalize(t.left), t.sync, normalize(t.right))
    elif cls is Or:
        out = Or(normalize(t.left), normalize(t.right))
    elif cls is Unless:
        out = Unless(normalize(t.left), normalize(t.right))
    elif cls is Tri:
        out = Tri(normalize(t.left), normalize(t.right))
    elif cls is Odot:
        out = Odot(normalize(t.body), normalize(t.u_left), normalize(t.u_right))
    else:  # RecUnless
        out = RecUnless(normalize(t.left), normalize(t.right))
    _norm_cache[t] = out
    return out


# --------------------------------------------------------------------------
# Formulas
# --------------------------------------------------------------------------


class Formula:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Tt(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Ff(Formula):
    pass


@dataclass(frozen=True, slots=True)
class En(Formula):
    action: str


@dataclass(frozen=True, slots=True)
class Dis(Formula):
    action: str


@dataclass(frozen=True, slots=True)
class FOr(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class FAnd(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Box(Formula):
    action: str
    body: Formula


@dataclass(frozen=True, slots=True)
class AlwaysF(Formula):
    body: Formula


@dataclass(frozen=True, slots=True)
class WeakUntil(Formula):
    left: Formula
    right: Formula


TT = Tt()
FF = Ff()


def formula_actions(f: Formula) -> frozenset[str]:
    acc: set[str] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        cls = type(g)
        if cls in (En, Dis):
            acc.add(g.action)
        elif cls is Box:
            acc.add(g.action)
            stack.append(g.body)
        elif cls is AlwaysF:
            stack.append(g.body)
        elif cls in (FOr, FAnd, WeakUntil):
            stack.append(g.left)
            stack.append(g.right)
    return frozenset(acc)


def formula_depth(f: Formula) -> int:
    cls = type(f)
    if cls in (Tt, Ff, En, Dis):
        return 1
    if cls in (Box, AlwaysF):
        return 1 + formula_depth(f.body)
    return 1 + max(formula_depth(f.left), formula_depth(f.right))


# --------------------------------------------------------------------------
# Combinators
# --------------------------------------------------------------------------


def gen_ext_choice(items: Iterable[Term]) -> Term:
    """Generalized external choice: [] -> 0, [t] -> t, otherwise left-nested."""
    parts = list(items)
    if not parts:
        return NIL
    acc = parts[0]
    for p in parts[1:]:
        acc = ExtChoice(acc, p)
    return acc


def gen_disj(items: Iterable[Term]) -> Term:
    parts = list(items)
    if not parts:
        raise EmptyListError("generalized disjunction of an empty sequence")
    acc = parts[0]
    for p in parts[1:]:
        acc = Or(acc, p)
    return acc


def gen_conj(items: Iterable[Term]) -> Term:
    parts = list(items)
    if not parts:
        raise EmptyListError("generalized conjunction of an empty sequence")
    acc = parts[0]
    for p in parts[1:]:
        acc = And(acc, p)
    return acc


def action_menu(actions: Iterable[str]) -> Term:
    """The process offering exactly the given actions, each followed by true."""
    return gen_ext_choice(Prefix(a, TRUE) for a in actions)


def guarded_menu(others: Iterable[str], a: str, body: Term) -> Term:
    """Menu over `others` extended with the guarded branch a.body."""
    return gen_ext_choice([Prefix(b, TRUE) for b in others] + [Prefix(a, body)])


def delta(ready: Iterable[str], t: Term, a: str) -> Term:
    """Single-step skeleton of a state with the given ready set.

    If a is not offered the result is the plain action menu of `ready`;
    otherwise the a-branch continues as t while every other offered action
    leads to true.
    """
    rs = sorted(set(ready))
    if a not in rs:
        return action_menu(rs)
    return guarded_menu([b for b in rs if b != a], a, t)


def ceil(a: str, x: Term, alphabet: Alphabet, max_pow: int = 64) -> Term:
    """`along a-labelled steps, necessarily x`: the disjunction over all
    ready-set menus, with every a-branch continuing as x."""
    if a not in alphabet:
        raise UnknownActionError(a)
    if 1 << len(alphabet) > max_pow:
        raise AlphabetTooLarge(
            f"2^{len(alphabet)} subsets exceed the bound {max_pow}"
        )
    with_a = []
    without_a = []
    for subset in alphabet.subsets():
        if a in subset:
            with_a.append(guarded_menu([b for b in subset if b != a], a, x))
        else:
            without_a.append(action_menu(subset))
    return Or(gen_disj(with_a), gen_disj(without_a))


def eta(p: Term, q: Term, x: Term, alphabet: Alphabet, max_pow: int = 64) -> Term:
    """One unfolding of the unless body: q or (p and, along every action,
    necessarily x)."""
    alphabet.require_nonempty("eta")
    return Or(q, And(p, gen_conj(ceil(a, x, alphabet, max_pow) for a in alphabet)))


# --------------------------------------------------------------------------
# The translatable fragment
# --------------------------------------------------------------------------


def _choice_leaves(t: Term) -> list[Term]:
    if type(t) is not ExtChoice:
        return [t]
    return _choice_leaves(t.left) + _choice_leaves(t.right)


def split_choice_tree(t: Term):
    """Classify an external-choice tree against the fragment grammar.

    Returns ("menu", actions) for a plain action menu, ("guarded", menu_actions,
    a, body) for a menu with one guarded branch, or None if the tree fits
    neither shape. Association and order of the binary encoding are ignored.
    """
    leaves = _choice_leaves(t)
    menu: list[str] = []
    guard = None
    for leaf in leaves:
        if type(leaf) is not Prefix or leaf.label == TAU:
            return None
        if type(leaf.body) is Tru:
            menu.append(leaf.label)
        elif guard is None:
            guard = (leaf.label, leaf.body)
        else:
            return None
    if guard is None:
        if len(set(menu)) != len(menu):
            return None
        return ("menu", tuple(menu))
    a, body = guard
    if a in menu or len(set(menu)) != len(menu):
        return None
    return ("guarded", tuple(menu), a, body)


def fragment_offender(t: Term) -> Term | None:
    """First subterm (outside-in) that falls outside the fragment, or None."""
    cls = type(t)
    if cls in (Nil, Bot, Tru):
        return None
    if cls is Prefix:
        if t.label == TAU:
            return t
        return fragment_offender(t.body)
    if cls in (Or, And, Unless):
        return fragment_offender(t.left) or fragment_offender(t.right)
    if cls is Always:
        return fragment_offender(t.body)
    if cls is ExtChoice:
        shape = split_choice_tree(t)
        if shape is None:
            return t
        if shape[0] == "guarded":
            return fragment_offender(shape[3])
        return None
    return t  # Parallel, Tri, Odot, RecUnless


def in_minus_fragment(t: Term) -> bool:
    """Whether t admits a characteristic formula (the restricted grammar)."""
    return fragment_offender(t) is None


# --------------------------------------------------------------------------
# Printing
# --------------------------------------------------------------------------

_LVL_W = 1
_LVL_OR = 2
_LVL_AND = 3
_LVL_EXT = 4
_LVL_PAR = 5
_LVL_TRI = 6
_LVL_UNARY = 7


def _pt(t: Term) -> tuple[str, int]:
    cls = type(t)
    if cls is Nil:
        return "0", _LVL_UNARY
    if cls is Bot:
        return "bot", _LVL_UNARY
    if cls is Tru:
        return "true", _LVL_UNARY
    if cls is Prefix:
        return f"{t.label}.{_wrap(t.body, _LVL_UNARY)}", _LVL_UNARY
    if cls is Always:
        return f"#{_wrap(t.body, _LVL_UNARY)}", _LVL_UNARY
    if cls is RecUnless:
        return f"rec({_wrap(t.left, _LVL_W)}, {_wrap(t.right, _LVL_W)})", _LVL_UNARY
    if cls is Unless:
        return f"{_wrap(t.left, _LVL_W + 1)} W {_wrap(t.right, _LVL_W)}", _LVL_W
    if cls is Or:
        return f"{_wrap(t.left, _LVL_OR)} \\/ {_wrap(t.right, _LVL_OR + 1)}", _LVL_OR
    if cls is And:
        return f"{_wrap(t.left, _LVL_AND)} /\\ {_wrap(t.right, _LVL_AND + 1)}", _LVL_AND
    if cls is ExtChoice:
        return f"{_wrap(t.left, _LVL_EXT)} [] {_wrap(t.right, _LVL_EXT + 1)}", _LVL_EXT
    if cls is Parallel:
        names = ",".join(t.sync)
        return (
            f"{_wrap(t.left, _LVL_PAR)} |{{{names}}}| {_wrap(t.right, _LVL_PAR + 1)}",
            _LVL_PAR,
        )
    if cls is Tri:
        return f"{_wrap(t.left, _LVL_TRI)} ^ {_wrap(t.right, _LVL_TRI + 1)}", _LVL_TRI
    # Odot
    inner = f"{_wrap(t.u_left, _LVL_OR)} W {_wrap(t.u_right, _LVL_W)}"
    return f"{_wrap(t.body, _LVL_TRI)} @({inner})", _LVL_TRI


def _wrap(t: Term, minimum: int) -> str:
    s, lvl = _pt(t)
    if lvl < minimum:
        return f"({s})"
    return s


def print_term(t: Term) -> str:
    return _pt(t)[0]


def _pf(f: Formula) -> tuple[str, int]:
    cls = type(f)
    if cls is Tt:
        return "tt", _LVL_UNARY
    if cls is Ff:
        return "ff", _LVL_UNARY
    if cls is En:
        return f"en({f.action})", _LVL_UNARY
    if cls is Dis:
        return f"dis({f.action})", _LVL_UNARY
    if cls is Box:
        return f"[{f.action}]{_wrapf(f.body, _LVL_UNARY)}", _LVL_UNARY
    if cls is AlwaysF:
        return f"AG {_wrapf(f.body, _LVL_UNARY)}", _LVL_UNARY
    if cls is WeakUntil:
        return f"{_wrapf(f.left, _LVL_W + 1)} W {_wrapf(f.right, _LVL_W)}", _LVL_W
    if cls is FOr:
        return f"{_wrapf(f.left, _LVL_OR)} \\/ {_wrapf(f.right, _LVL_OR + 1)}", _LVL_OR
    # FAnd
    return f"{_wrapf(f.left, _LVL_AND)} /\\ {_wrapf(f.right, _LVL_AND + 1)}", _LVL_AND


def _wrapf(f: Formula, minimum: int) -> str:
    s, lvl = _pf(f)
    if lvl < minimum:
        return f"({s})"
    return s


def print_formula(f: Formula) -> str:
    return _pf(f)[0]


# --------------------------------------------------------------------------
# Parsing
# --------------------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<op>\\/|/\\|\[\]|\|\{|\}\||[().,#^@\[\]])
  | (?P<word>[a-zA-Z][a-zA-Z0-9_]*)
  | (?P<zero>0)
    """,
    re.VERBOSE,
)


def _lex(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup == "op":
            tokens.append(("op", m.group(), pos))
        elif m.lastgroup == "word":
            tokens.append(("word", m.group(), pos))
        elif m.lastgroup == "zero":
            tokens.append(("zero", "0", pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet):
        self.tokens = _lex(text)
        self.pos = 0
        self.alphabet = alphabet

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.peek()
        if val != value or kind == "eof":
            raise ParseError(f"got {val!r}" if kind != "eof" else "unexpected end of input", pos, (value,))
        return self.next()

    def fail(self, expected: tuple[str, ...]):
        kind, val, pos = self.peek()
        msg = "unexpected end of input" if kind == "eof" else f"got {val!r}"
        raise ParseError(msg, pos, expected)

    def action(self, allow_tau: bool = False) -> str:
        kind, val, pos = self.peek()
        if kind != "word":
            self.fail(("action name",))
        if val == TAU:
            if allow_tau:
                self.next()
                return TAU
            raise UnknownActionError(val, pos)
        if not is_action_name(val):
            raise ParseError(f"reserved word {val!r} cannot name an action", pos)
        if val not in self.alphabet:
            raise UnknownActionError(val, pos)
        self.next()
        return val

    # term grammar, loosest to tightest

    def term(self) -> Term:
        left = self.disj()
        if self.peek()[1] == "W":
            self.next()
            return Unless(left, self.term())
        return left

    def disj(self) -> Term:
        t = self.conj()
        while self.peek()[1] == "\\/":
            self.next()
            t = Or(t, self.conj())
        return t

    def conj(self) -> Term:
        t = self.extchoice()
        while self.peek()[1] == "/\\":
            self.next()
            t = And(t, self.extchoice())
        return t

    def extchoice(self) -> Term:
        t = self.par()
        while self.peek()[1] == "[]":
            self.next()
            t = ExtChoice(t, self.par())
        return t

    def par(self) -> Term:
        t = self.triodot()
        while self.peek()[1] == "|{":
            self.next()
            names = []
            if self.peek()[1] != "}|":
                names.append(self.action())
                while self.peek()[1] == ",":
                    self.next()
                    names.append(self.action())
            self.expect("}|")
            t = Parallel(t, tuple(sorted(set(names))), self.triodot())
        return t

    def triodot(self) -> Term:
        t = self.prefixed()
        while True:
            val = self.peek()[1]
            if val == "^":
                self.next()
                t = Tri(t, self.prefixed())
            elif val == "@":
                self.next()
                self.expect("(")
                left = self.disj()
                self.expect("W")
                right = self.term()
                self.expect(")")
                t = Odot(t, left, right)
            else:
                return t

    def prefixed(self) -> Term:
        kind, val, pos = self.peek()
        if val == "#":
            self.next()
            return Always(self.prefixed())
        if val == "rec":
            self.next()
            self.expect("(")
            left = self.term()
            self.expect(",")
            right = self.term()
            self.expect(")")
            return RecUnless(left, right)
        if kind == "word" and val not in RESERVED_WORDS or val == TAU:
            if self.tokens[self.pos + 1][1] == ".":
                label = self.action(allow_tau=True)
                self.expect(".")
                return Prefix(label, self.prefixed())
            self.fail((".",))
        return self.atom()

    def atom(self) -> Term:
        kind, val, pos = self.peek()
        if val == "0":
            self.next()
            return NIL
        if val == "bot":
            self.next()
            return BOT
        if val == "true":
            self.next()
            return TRUE
        if val == "(":
            self.next()
            t = self.term()
            self.expect(")")
            return t
        self.fail(("0", "bot", "true", "(", "action prefix"))

    # formula grammar

    def formula(self) -> Formula:
        left = self.fdisj()
        if self.peek()[1] == "W":
            self.next()
            return WeakUntil(left, self.formula())
        return left

    def fdisj(self) -> Formula:
        f = self.fconj()
        while self.peek()[1] == "\\/":
            self.next()
            f = FOr(f, self.fconj())
        return f

    def fconj(self) -> Formula:
        f = self.funary()
        while self.peek()[1] == "/\\":
            self.next()
            f = FAnd(f, self.funary())
        return f

    def funary(self) -> Formula:
        kind, val, pos = self.peek()
        if val == "[":
            self.next()
            a = self.action()
            self.expect("]")
            return Box(a, self.funary())
        if val == "AG":
            self.next()
            return AlwaysF(self.funary())
        return self.fatom()

    def fatom(self) -> Formula:
        kind, val, pos = self.peek()
        if val == "tt":
            self.next()
            return TT
        if val == "ff":
            self.next()
            return FF
        if val in ("en", "dis"):
            self.next()
            self.expect("(")
            a = self.action()
            self.expect(")")
            return En(a) if val == "en" else Dis(a)
        if val == "(":
            self.next()
            f = self.formula()
            self.expect(")")
            return f
        self.fail(("tt", "ff", "en", "dis", "[", "AG", "("))

    def finish(self, value):
        kind, val, pos = self.peek()
        if kind != "eof":
            raise ParseError(f"trailing input {val!r}", pos)
        return value


def parse_term(text: str, alphabet: Alphabet) -> Term:
    p = _Parser(text, alphabet)
    return p.finish(p.term())


def parse_formula(text: str, alphabet: Alphabet) -> Formula:
    p = _Parser(text, alphabet)
    return p.finish(p.formula())


def scan_action_names(text: str) -> list[str]:
    """Action identifiers occurring in a term/formula text, in first-seen order.

    Used for alphabet inference before real parsing.
    """
    names = []
    for kind, val, _ in _lex(text):
        if kind == "word" and is_action_name(val) and val not in names:
            names.append(val)
    return names
