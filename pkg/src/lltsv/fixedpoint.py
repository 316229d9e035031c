"""Executable checks of the unfolding theory behind the unless operator:
approximation chains, the greatest-fixpoint equation, and the equivalence
between the recursive constant and the operator form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .llts import BuildLimits, build_graph
from .refine import refines_bool, equiv as _equiv
from .syntax import (
    TRUE,
    Alphabet,
    RecUnless,
    Term,
    Unless,
    ceil,
    eta,
)


@dataclass
class ApproximantChain:
    terms: list[Term]  # successive unfoldings applied to true
    verdicts: list[bool]  # verdicts[i]: terms[i+1] refines terms[i]

    @property
    def decreasing(self) -> bool:
        return all(self.verdicts)


def eta_iterate(
    p: Term,
    q: Term,
    k: int,
    alphabet: Alphabet,
    limits: BuildLimits | None = None,
) -> ApproximantChain:
    """The first k+1 unfolding approximants of p-unless-q, starting at true,
    with each refinement step of the decreasing chain verified."""
    terms = [TRUE]
    for _ in range(k):
        terms.append(eta(p, q, terms[-1], alphabet))
    g = build_graph(list(terms), alphabet, limits)
    verdicts = [refines_bool(g, terms[i + 1], terms[i]) for i in range(k)]
    return ApproximantChain(terms, verdicts)


def check_fixed_point(
    p: Term,
    q: Term,
    alphabet: Alphabet,
    limits: BuildLimits | None = None,
) -> bool:
    """p W q is a fixed point of its own unfolding, up to mutual refinement."""
    u = Unless(p, q)
    unfolded = eta(p, q, u, alphabet)
    g = build_graph([u, unfolded], alphabet, limits)
    return _equiv(g, u, unfolded)


def check_rec_equiv(
    p: Term,
    q: Term,
    alphabet: Alphabet,
    limits: BuildLimits | None = None,
) -> bool:
    """The recursive constant and the unless operator are interchangeable."""
    r = RecUnless(p, q)
    u = Unless(p, q)
    g = build_graph([r, u], alphabet, limits)
    return _equiv(g, r, u)


def gpf_check(
    t: Term,
    p: Term,
    q: Term,
    alphabet: Alphabet,
    limits: BuildLimits | None = None,
) -> bool:
    """Soundness instance of the greatest-post-fixpoint rule: if t refines
    its own unfolding then t refines p W q."""
    unfolded = eta(p, q, t, alphabet)
    u = Unless(p, q)
    g = build_graph([t, unfolded, u], alphabet, limits)
    if not refines_bool(g, t, unfolded):
        return True  # premise fails, rule instance holds vacuously
    return refines_bool(g, t, u)


def ceil_characterization(
    p: Term,
    a: str,
    t: Term,
    alphabet: Alphabet,
    limits: BuildLimits | None = None,
) -> bool:
    """Agreement between refining ceil(a, t) and the direct condition that
    every weak consistent a-step from p lands in a refinement of t."""
    from .refine import refines_from_stable

    c = ceil(a, t, alphabet)
    g = build_graph([p, c, t], alphabet, limits)
    pid, tid = g.state_of(p), g.state_of(t)
    lhs = refines_bool(g, pid, g.state_of(c))
    rhs = all(
        refines_from_stable(g, p1, tid)
        for p0 in g.eps_stable(pid)
        for p1 in g.act_stable_from_stable(p0, a)
    )
    return lhs == rhs
