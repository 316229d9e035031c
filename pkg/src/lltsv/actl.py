"""Model checking the safety fragment over built graphs.

Every connective quantifies over the consistent stable closure of the state
under scrutiny, so satisfaction is vacuous for inconsistent states. The two
path operators are decided by reachability in the stable-step graph instead
of path enumeration: on a finite graph "every path stays in X" is the same
as "every reachable-through-X state lies in X" (a brute-force path oracle
cross-checks this reduction in the tests).
"""

from __future__ import annotations

from .llts import BuildLimits, LltsGraph, build_graph
from .syntax import (
    Alphabet,
    AlwaysF,
    Box,
    Dis,
    En,
    FAnd,
    FOr,
    Ff,
    Formula,
    Tt,
    WeakUntil,
)


def _sat(g: LltsGraph, u: int, f: Formula, memo: dict) -> bool:
    """Satisfaction at a stable consistent state."""
    key = (u, f)
    if key in memo:
        return memo[key]
    out: bool
    cls = type(f)
    if cls is Tt:
        out = True
    elif cls is Ff:
        out = False
    elif cls is En:
        out = f.action in g.ready[u]
    elif cls is Dis:
        out = f.action not in g.ready[u]
    elif cls is FOr:
        out = _sat(g, u, f.left, memo) or _sat(g, u, f.right, memo)
    elif cls is FAnd:
        out = _sat(g, u, f.left, memo) and _sat(g, u, f.right, memo)
    elif cls is Box:
        out = all(_sat(g, w, f.body, memo) for w in g.act_stable_from_stable(u, f.action))
    elif cls is AlwaysF:
        out = all(_sat(g, w, f.body, memo) for w in g.walk_stable(u))
    else:  # WeakUntil: follow paths while the release side fails
        out = True
        seen: set[int] = set()
        stack = [u]
        while stack:
            w = stack.pop()
            if w in seen:
                continue
            seen.add(w)
            if _sat(g, w, f.right, memo):
                continue
            if not _sat(g, w, f.left, memo):
                out = False
                break
            stack.extend(g.stable_step_neighbors(w))
    memo[key] = out
    return out


def satisfies(g: LltsGraph, p, f: Formula) -> bool:
    pid = p if isinstance(p, int) else g.state_of(p)
    return all(_sat(g, u, f, g._sat_memo) for u in g.eps_stable(pid))


def consequence(
    f: Formula,
    gphi: Formula,
    alphabet: Alphabet,
    limits: BuildLimits | None = None,
) -> bool:
    """Logic consequence, decided through the characteristic processes."""
    from .refine import refines_bool
    from .translate import char_process

    left = char_process(f, alphabet)
    right = char_process(gphi, alphabet)
    g = build_graph([left, right], alphabet, limits)
    return refines_bool(g, left, right)
