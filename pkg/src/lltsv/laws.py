"""Named law suites: every algebraic/metatheoretic property the package
promises, run on seeded samples so failures are reproducible.

Samples whose state graphs overflow the per-law build cap are skipped and
counted (conjunction growth under parallel composition can explode); a law
passes when every checked sample passes. Failing samples are greedily
shrunk toward subterms before reporting.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .actl import consequence, satisfies
from .errors import AlphabetTooLarge, LltsvError, StateLimitExceeded
from .fixedpoint import (
    ceil_characterization,
    check_fixed_point,
    check_rec_equiv,
    eta_iterate,
    gpf_check,
)
from .gen import TermGen
from .llts import BuildLimits, LltsGraph, build_graph, validate
from .oracles import NaiveF, NaiveSemantics, naive_satisfies
from .refine import (
    equiv,
    largest_stable_sim,
    refines,
    refines_bool,
    refines_forall,
    refines_forall_until,
    simulated_by,
)
from .sos import StepSemantics
from .syntax import (
    BOT,
    NIL,
    TAU,
    TRUE,
    Alphabet,
    And,
    Always,
    Box,
    Dis,
    En,
    ExtChoice,
    FAnd,
    FOr,
    FF,
    Odot,
    Or,
    Parallel,
    Prefix,
    RecUnless,
    Term,
    Tri,
    Unless,
    WeakUntil,
    action_menu,
    ceil,
    children,
    delta,
    eta,
    in_minus_fragment,
    normalize,
    parse_formula,
    parse_term,
    print_formula,
    print_term,
)
from .translate import char_formula, char_process


@dataclass
class LawConfig:
    alphabet: Alphabet
    seed: int = 0
    size: int = 4
    count: int = 50
    cap: int = 20_000  # per-sample state budget

    def limits(self) -> BuildLimits:
        return BuildLimits(max_states=max(self.cap * 4, 50_000))


@dataclass
class LawResult:
    suite: str
    law: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" skipped={self.skipped}" if self.skipped else ""
        ce = f"  counterexample: {self.counterexample}" if self.counterexample else ""
        return f"{status} {self.suite}/{self.law} ({self.passed} checked{extra}){ce}"


@dataclass
class SuiteReport:
    results: list[LawResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]


def _shrink(terms: tuple[Term, ...], failing) -> tuple[Term, ...]:
    """Greedy minimization: try replacing each slot by a subterm or leaf."""
    current = tuple(terms)
    improved = True
    while improved:
        improved = False
        for i, t in enumerate(current):
            for cand in list(children(t)) + [NIL]:
                if cand == t:
                    continue
                trial = current[:i] + (cand,) + current[i + 1 :]
                try:
                    if failing(*trial):
                        current = trial
                        improved = True
                        break
                except LltsvError:
                    continue
            if improved:
                break
    return current


def _run_samples(cfg: LawConfig, suite: str, law: str, sampler, prop) -> LawResult:
    """Check `prop` on `cfg.count` samples from `sampler(rng_index)`."""
    res = LawResult(suite, law)
    for k in range(cfg.count):
        sample = sampler(k)
        try:
            ok = prop(*sample)
        except (StateLimitExceeded, AlphabetTooLarge):
            res.skipped += 1
            continue
        if ok:
            res.passed += 1
        else:
            res.failed += 1
            if res.counterexample is None:

                def failing(*ts):
                    return not prop(*ts)

                small = _shrink(sample, failing)
                res.counterexample = " | ".join(print_term(t) for t in small)
    return res


def _gen(cfg: LawConfig, salt: int, **kw) -> TermGen:
    return TermGen(cfg.alphabet, seed=cfg.seed * 7919 + salt, **kw)


# -- suites ------------------------------------------------------------------


def suite_syntax(cfg: LawConfig) -> list[LawResult]:
    out = []
    tg = _gen(cfg, 1)
    res = LawResult("syntax", "parse-print-roundtrip")
    for _ in range(max(cfg.count, 500)):
        t = tg.term(cfg.size + 3)
        if parse_term(print_term(t), cfg.alphabet) == t:
            res.passed += 1
        else:
            res.failed += 1
            res.counterexample = print_term(t)
    out.append(res)

    res = LawResult("syntax", "formula-roundtrip")
    for _ in range(cfg.count):
        f = tg.formula(4)
        if parse_formula(print_formula(f), cfg.alphabet) == f:
            res.passed += 1
        else:
            res.failed += 1
            res.counterexample = print_formula(f)
    out.append(res)

    res = LawResult("syntax", "normalize-idempotent")
    for _ in range(cfg.count):
        t = tg.term(cfg.size + 2)
        n = normalize(t)
        if normalize(n) == n:
            res.passed += 1
        else:
            res.failed += 1
            res.counterexample = print_term(t)
    out.append(res)

    res = LawResult("syntax", "charproc-in-fragment")
    for _ in range(cfg.count):
        f = tg.formula(3)
        try:
            if in_minus_fragment(char_process(f, cfg.alphabet)):
                res.passed += 1
            else:
                res.failed += 1
                res.counterexample = print_formula(f)
        except AlphabetTooLarge:
            res.skipped += 1
    out.append(res)
    return out


def suite_transitions(cfg: LawConfig) -> list[LawResult]:
    out = []
    tg = _gen(cfg, 2, allow_rec=False)
    naive = NaiveSemantics(cfg.alphabet)
    raw = StepSemantics(cfg.alphabet, normalized=False)
    res = LawResult("transitions", "rule-table-agreement")
    for _ in range(max(cfg.count, 300)):
        t = tg.term(min(cfg.size + 3, 7))
        mine = {(lab, tgt) for lab, tgt in raw.successors(t)}
        theirs = set(naive.steps(t))
        if mine == theirs:
            res.passed += 1
        else:
            res.failed += 1
            res.counterexample = print_term(t)
    out.append(res)

    res = LawResult("transitions", "rec-unfolds-like-eta")
    sem = StepSemantics(cfg.alphabet)
    tg2 = _gen(cfg, 3)
    for _ in range(cfg.count):
        p, q = tg2.term(3), tg2.term(3)
        r = RecUnless(p, q)
        if sem.successors(normalize(r)) == sem.successors(
            normalize(eta(p, q, r, cfg.alphabet))
        ):
            res.passed += 1
        else:
            res.failed += 1
            res.counterexample = f"{print_term(p)} | {print_term(q)}"
    out.append(res)

    res = LawResult("transitions", "delta-ready-set")
    sem = StepSemantics(cfg.alphabet)
    actions = list(cfg.alphabet)
    tg3 = _gen(cfg, 4)
    for k in range(cfg.count):
        if not actions:
            break
        ready = frozenset(a for i, a in enumerate(actions) if (k >> i) & 1)
        a = actions[k % len(actions)]
        d = delta(ready, tg3.term(2), a)
        expect = ready | {a} if a in ready else ready
        if sem.ready_set(normalize(d)) == expect:
            res.passed += 1
        else:
            res.failed += 1
            res.counterexample = print_term(d)
    out.append(res)
    return out


def suite_wellformed(cfg: LawConfig) -> list[LawResult]:
    out = []
    tg = _gen(cfg, 5)
    res_v = LawResult("wellformed", "llts-axioms")
    res_f = LawResult("wellformed", "pointwise-f-laws")
    res_e = LawResult("wellformed", "eps-nonempty-iff-consistent")
    for _ in range(cfg.count):
        t = tg.term(cfg.size)
        g = LltsGraph(cfg.alphabet, cfg.limits())
        if g.try_add_roots([t], cfg.cap) is None:
            res_v.skipped += 1
            continue
        rep = validate(g)
        if rep.ok:
            res_v.passed += 1
        else:
            res_v.failed += 1
            res_v.counterexample = res_v.counterexample or print_term(t)
        if _pointwise_f_laws(g):
            res_f.passed += 1
        else:
            res_f.failed += 1
            res_f.counterexample = res_f.counterexample or print_term(t)
        if all(
            (len(g.eps_stable(i)) > 0) == (i not in g.inconsistent)
            for i in range(len(g.terms))
        ):
            res_e.passed += 1
        else:
            res_e.failed += 1
            res_e.counterexample = res_e.counterexample or print_term(t)
    out.extend([res_v, res_f, res_e])
    return out


def _pointwise_f_laws(g: LltsGraph) -> bool:
    """The compositional inconsistency facts, checked per state."""
    from .syntax import Bot, Nil, Or as OrT, Prefix as PrefixT, Tru, Unless as UnlessT

    F = g.inconsistent
    for i in range(len(g.terms)):
        t = g.terms[i]
        cls = type(t)
        inf = i in F
        if cls is Bot and not inf:
            return False
        if cls in (Nil, Tru) and inf:
            return False
        if cls in (OrT, UnlessT, PrefixT):
            if inf != all(j in F for _, j in g.edges[i]):
                return False
        if cls in (ExtChoice, Parallel):
            if inf != any(j in F for j in g.deps[i]):
                return False
        if cls in (Always, Tri, Odot):
            if g.deps[i][0] in F and not inf:
                return False
        if cls is And and any(j in F for j in g.deps[i]) and not inf:
            return False
        # a silent step exists: inconsistent iff every silent successor is
        if TAU in g.ready[i]:
            taus = [j for lab, j in g.edges[i] if lab == TAU]
            if inf != all(j in F for j in taus):
                return False
    return True


def suite_foracle(cfg: LawConfig) -> list[LawResult]:
    tg = _gen(cfg, 6)
    oracle = NaiveF(cfg.alphabet, budget=3000)
    res = LawResult("foracle", "predicate-rule-agreement")
    for _ in range(cfg.count):
        t = tg.term(min(cfg.size, 5))
        g = LltsGraph(cfg.alphabet, cfg.limits())
        if g.try_add_roots([t], cfg.cap) is None:
            res.skipped += 1
            continue
        mine = g.state_of(t) in g.inconsistent
        oracle.add_root(t)
        oracle.saturate()
        theirs = oracle.in_f(t)
        if mine != theirs and mine and t in oracle.truncated:
            oracle.add_root(t, budget=100_000)
            oracle.saturate()
            theirs = oracle.in_f(t)
        if mine == theirs:
            res.passed += 1
        else:
            res.failed += 1
            res.counterexample = res.counterexample or print_term(t)
    return [res]


def _build_for(cfg: LawConfig, roots: list[Term]) -> LltsGraph | None:
    g = LltsGraph(cfg.alphabet, cfg.limits())
    if g.try_add_roots(roots, cfg.cap) is None:
        return None
    return g


def suite_always(cfg: LawConfig) -> list[LawResult]:
    out = []
    tg = _gen(cfg, 7)

    def sample(_k):
        return (tg.term(cfg.size), tg.term(max(cfg.size - 1, 2)))

    def thm_always(p, t):
        g = _build_for(cfg, [p, Always(t), t])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return refines_bool(g, p, Always(t)) == refines_forall(g, p, t)

    out.append(_run_samples(cfg, "always", "forall-characterization", sample, thm_always))

    def tri_lower(p, t):
        g = _build_for(cfg, [Tri(p, t), p])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return refines_bool(g, Tri(p, t), p)

    out.append(_run_samples(cfg, "always", "trace-lower-bound", sample, tri_lower))

    def mono_always(t, r):
        s = And(t, r)  # refines t by the conjunction lower bound
        g = _build_for(cfg, [Always(s), Always(t), s, t])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, t)
        if not refines_bool(g, s, t):
            return True
        return refines_bool(g, Always(s), Always(t))

    out.append(_run_samples(cfg, "always", "monotonicity", sample, mono_always))

    def mono_tri(p, t):
        p2, t2 = And(p, t), TRUE
        g = _build_for(cfg, [Tri(p2, p), Tri(p, t2), p2, p, t2])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        if not (refines_bool(g, p2, p) and refines_bool(g, p, t2)):
            return True
        return refines_bool(g, Tri(p2, p), Tri(p, t2))

    out.append(_run_samples(cfg, "always", "trace-monotonicity", sample, mono_tri))
    return out


def suite_unless(cfg: LawConfig) -> list[LawResult]:
    out = []
    tg = _gen(cfg, 8)
    small = max(cfg.size - 1, 2)

    def sample3(_k):
        return (tg.term(small), tg.term(small), tg.term(small))

    def thm_unless(p, t1, t2):
        g = _build_for(cfg, [p, Unless(t1, t2), t1, t2])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return refines_bool(g, p, Unless(t1, t2)) == refines_forall_until(g, p, t1, t2)

    out.append(_run_samples(cfg, "unless", "forall-until-characterization", sample3, thm_unless))

    def odot_lower(t, p, q):
        g = _build_for(cfg, [Odot(t, p, q), t])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, t)
        return refines_bool(g, Odot(t, p, q), t)

    out.append(_run_samples(cfg, "unless", "history-lower-bound", sample3, odot_lower))

    def path_preservation(p, t1, t2):
        u = Unless(t1, t2)
        g = _build_for(cfg, [p, u, t1, t2])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        if not refines_bool(g, p, u):
            return True
        uid = g.state_of(u)
        t2id = g.state_of(t2)
        seen = set()
        stack = list(g.eps_stable(g.state_of(p)))
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            from .refine import refines_from_stable

            if refines_from_stable(g, x, t2id):
                continue
            if not refines_from_stable(g, x, uid):
                return False
            stack.extend(g.stable_step_neighbors(x))
        return True

    out.append(_run_samples(cfg, "unless", "path-preservation", sample3, path_preservation))

    def mono_unless(t1, t2, r):
        s1, s2 = And(t1, r), t2
        g = _build_for(cfg, [Unless(s1, s2), Unless(t1, t2), s1, t1, t2])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, t1)
        if not refines_bool(g, s1, t1):
            return True
        return refines_bool(g, Unless(s1, s2), Unless(t1, t2))

    out.append(_run_samples(cfg, "unless", "monotonicity", sample3, mono_unless))

    def mono_odot(u, r, s):
        u2 = And(u, r)
        g = _build_for(cfg, [Odot(u2, r, s), Odot(u, r, s), u2, u])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, u)
        if not refines_bool(g, u2, u):
            return True
        return refines_bool(g, Odot(u2, r, s), Odot(u, r, s))

    out.append(_run_samples(cfg, "unless", "history-monotonicity", sample3, mono_odot))
    return out


def suite_ceil(cfg: LawConfig) -> list[LawResult]:
    out = []
    tg = _gen(cfg, 9)
    actions = list(cfg.alphabet)
    if not actions:
        return out

    def sample(_k):
        return (tg.term(cfg.size - 1), tg.term(2))

    def characterization(p, t):
        a = actions[0]
        ok = ceil_characterization(p, a, t, cfg.alphabet, cfg.limits())
        return ok

    out.append(_run_samples(cfg, "ceil", "step-characterization", sample, characterization))

    a = actions[0]

    def law1(_p, _t):
        g = _build_for(cfg, [ceil(a, TRUE, cfg.alphabet), TRUE])
        return g is not None and equiv(g, ceil(a, TRUE, cfg.alphabet), TRUE)

    def law2(p, q):
        lhs = ceil(a, And(p, q), cfg.alphabet)
        rhs = And(ceil(a, p, cfg.alphabet), ceil(a, q, cfg.alphabet))
        g = _build_for(cfg, [lhs, rhs])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return equiv(g, lhs, rhs)

    def law3(p, q):
        lhs, rhs = Always(And(p, q)), And(Always(p), Always(q))
        g = _build_for(cfg, [lhs, rhs])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return equiv(g, lhs, rhs)

    def law4(p, _q):
        lhs, rhs = Always(p), Unless(p, BOT)
        g = _build_for(cfg, [lhs, rhs])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return equiv(g, lhs, rhs)

    def law5(p, _q):
        rhs = And(p, normalize(_gen_conj_ceil(cfg, Always(p))))
        g = _build_for(cfg, [Always(p), rhs])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return equiv(g, Always(p), rhs)

    def law6(p, _q):
        g = _build_for(cfg, [And(TRUE, p), And(p, TRUE), p])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return (
            equiv(g, And(TRUE, p), p)
            and equiv(g, And(p, TRUE), p)
            and equiv(g, And(TRUE, p), And(p, TRUE))
        )

    for name, law in [
        ("top-absorption", law1),
        ("conjunction-distribution", law2),
        ("always-conjunction", law3),
        ("always-as-unless-bottom", law4),
        ("always-unfolding", law5),
        ("true-unit", law6),
    ]:
        out.append(_run_samples(cfg, "ceil", name, sample, law))

    def mono_ceil(p, q):
        s = And(p, q)
        lhs, rhs = ceil(a, s, cfg.alphabet), ceil(a, p, cfg.alphabet)
        g = _build_for(cfg, [lhs, rhs, s, p])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        if not refines_bool(g, s, p):
            return True
        return refines_bool(g, lhs, rhs)

    out.append(_run_samples(cfg, "ceil", "monotonicity", sample, mono_ceil))
    return out


def _gen_conj_ceil(cfg: LawConfig, x: Term) -> Term:
    from .syntax import gen_conj

    return gen_conj(ceil(b, x, cfg.alphabet) for b in cfg.alphabet)


def suite_fixedpoint(cfg: LawConfig) -> list[LawResult]:
    out = []
    tg = _gen(cfg, 10)
    small = min(cfg.size, 3)

    def sample(_k):
        return (tg.term(small), tg.term(small))

    def fp(p, q):
        return check_fixed_point(p, q, cfg.alphabet, cfg.limits())

    out.append(_run_samples(cfg, "fixedpoint", "unless-fixed-point", sample, fp))

    def chain(p, q):
        ch = eta_iterate(p, q, 3, cfg.alphabet, cfg.limits())
        if not ch.decreasing:
            return False
        u = Unless(p, q)
        roots = [u] + ch.terms
        g = _build_for(cfg, roots)
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return all(refines_bool(g, u, t) for t in ch.terms)

    out.append(_run_samples(cfg, "fixedpoint", "approximation-chain", sample, chain))

    def sharp_chain(p, _q):
        ch = eta_iterate(p, BOT, 3, cfg.alphabet, cfg.limits())
        roots = [Always(p)] + ch.terms
        g = _build_for(cfg, roots)
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return all(refines_bool(g, Always(p), t) for t in ch.terms)

    out.append(_run_samples(cfg, "fixedpoint", "always-approximants", sample, sharp_chain))

    def gpf(p, q):
        t = tg.term(small)
        return gpf_check(t, p, q, cfg.alphabet, cfg.limits())

    out.append(_run_samples(cfg, "fixedpoint", "greatest-post-fixpoint-rule", sample, gpf))

    def rec_eq(p, q):
        return check_rec_equiv(p, q, cfg.alphabet, cfg.limits())

    out.append(_run_samples(cfg, "fixedpoint", "recursive-constant", sample, rec_eq))

    def rec_sharp(p, _q):
        g = _build_for(cfg, [Always(p), RecUnless(p, BOT)])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return equiv(g, Always(p), RecUnless(p, BOT))

    out.append(_run_samples(cfg, "fixedpoint", "recursive-always", sample, rec_sharp))

    def stable_menu(p, _q):
        g = _build_for(cfg, [p])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        for u in g.eps_stable(g.state_of(p)):
            menu = action_menu(sorted(g.ready[u]))
            g2 = _build_for(cfg, [g.terms[u], menu])
            if g2 is None:
                raise StateLimitExceeded(cfg.cap, 0, p)
            if not simulated_by(g2, g.terms[u], menu):
                return False
        return True

    out.append(_run_samples(cfg, "fixedpoint", "stable-menu-simulation", sample, stable_menu))
    return out


def suite_refinemeta(cfg: LawConfig) -> list[LawResult]:
    out = []
    tg = _gen(cfg, 11)

    def sample2(_k):
        return (tg.term(cfg.size), tg.term(cfg.size))

    def reflexive(p, _q):
        g = _build_for(cfg, [p])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return refines_bool(g, p, p)

    out.append(_run_samples(cfg, "refinemeta", "reflexivity", sample2, reflexive))

    def transitive(p, q):
        r = And(p, q)
        g = _build_for(cfg, [r, p, TRUE])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        if refines_bool(g, r, p) and refines_bool(g, p, TRUE):
            return refines_bool(g, r, TRUE)
        return True

    out.append(_run_samples(cfg, "refinemeta", "transitivity", sample2, transitive))

    def consistency_preservation(p, q):
        g = _build_for(cfg, [p, q])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        if refines_bool(g, p, q) and g.state_of(q) in g.inconsistent:
            return g.state_of(p) in g.inconsistent
        return True

    out.append(
        _run_samples(cfg, "refinemeta", "consistency-preservation", sample2, consistency_preservation)
    )

    def glb(p, q):
        r = tg.term(cfg.size - 1)
        g = _build_for(cfg, [r, And(p, q), p, q])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        both = refines_bool(g, r, p) and refines_bool(g, r, q)
        return refines_bool(g, r, And(p, q)) == both

    out.append(_run_samples(cfg, "refinemeta", "conjunction-glb", sample2, glb))

    def disj_law(p, q):
        g = _build_for(cfg, [p, q, Or(p, q)])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        if refines_bool(g, p, p):  # warm
            pass
        if refines_bool(g, p, q) or refines_bool(g, p, p):
            if not refines_bool(g, p, Or(p, q)):
                return False
        pid = g.state_of(p)
        if g.stable[pid] and refines_bool(g, p, Or(p, q)):
            return refines_bool(g, p, p) or refines_bool(g, p, q)
        return True

    out.append(_run_samples(cfg, "refinemeta", "disjunction-bounds", sample2, disj_law))

    actions = list(cfg.alphabet)

    def contexts(p, q):
        t = And(p, q)  # t refines p by construction
        r = tg.term(max(cfg.size - 2, 1))
        pairs = [
            (Prefix(actions[0], t), Prefix(actions[0], p)) if actions else None,
            (ExtChoice(t, r), ExtChoice(p, r)),
            (Parallel(t, tuple(actions[:1]), r), Parallel(p, tuple(actions[:1]), r)),
            (Or(t, r), Or(p, r)),
            (And(t, r), And(p, r)),
        ]
        roots = [t, p]
        for pr in pairs:
            if pr:
                roots.extend(pr)
        g = _build_for(cfg, roots)
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        if not refines_bool(g, t, p):
            return True
        return all(refines_bool(g, a_, b_) for a_, b_ in pairs if a_ is not None)

    out.append(_run_samples(cfg, "refinemeta", "context-monotonicity", sample2, contexts))

    def counterexample_replay(p, q):
        g = _build_for(cfg, [p, q])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        v = refines(g, p, q)
        if v.holds:
            return True
        head = v.counterexample.trace[0][0]
        uid = g.state_of(head)
        return uid in g.eps_stable(g.state_of(p)) and not any(
            simulated_by(g, uid, vv) for vv in g.eps_stable(g.state_of(q))
        )

    out.append(_run_samples(cfg, "refinemeta", "counterexample-replay", sample2, counterexample_replay))

    def lazy_matches_deletion(p, q):
        g = _build_for(cfg, [p, q])
        if g is None or len(g.terms) > 60:
            raise StateLimitExceeded(cfg.cap, 0, p)
        rel = largest_stable_sim(g)
        for u in range(len(g.terms)):
            for v in range(len(g.terms)):
                if g.stable[u] and g.stable[v]:
                    if simulated_by(g, u, v) != ((u, v) in rel):
                        return False
        return True

    out.append(_run_samples(cfg, "refinemeta", "engine-agreement", sample2, lazy_matches_deletion))
    return out


def suite_actl(cfg: LawConfig) -> list[LawResult]:
    out = []
    tg = _gen(cfg, 12)

    def sample(_k):
        return (tg.term(cfg.size),)

    def closure_decomposition(p):
        f = tg.formula(3)
        g = _build_for(cfg, [p])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        pid = g.state_of(p)
        whole = satisfies(g, pid, f)
        split = all(satisfies(g, u, f) for u in g.eps_stable(pid))
        return whole == split

    out.append(_run_samples(cfg, "actl", "closure-decomposition", sample, closure_decomposition))

    def downward(p):
        q = tg.term(cfg.size)
        f = tg.formula(3)
        pq = And(p, q)
        g = _build_for(cfg, [pq, p])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        if satisfies(g, p, f) and refines_bool(g, pq, p):
            return satisfies(g, pq, f)
        return True

    out.append(_run_samples(cfg, "actl", "downward-preservation", sample, downward))

    def weak_until_unfold(p):
        f1, f2 = tg.formula(2), tg.formula(2)
        g = _build_for(cfg, [p])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        w = WeakUntil(f1, f2)
        unfold = FOr(f2, _fand_all(cfg, f1, w))
        return satisfies(g, p, w) == satisfies(g, p, unfold)

    out.append(_run_samples(cfg, "actl", "weak-until-unfolding", sample, weak_until_unfold))

    def always_as_until(p):
        f = tg.formula(2)
        g = _build_for(cfg, [p])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        from .syntax import AlwaysF

        return satisfies(g, p, AlwaysF(f)) == satisfies(g, p, WeakUntil(f, FF))

    out.append(_run_samples(cfg, "actl", "always-as-weak-until", sample, always_as_until))

    def oracle_agreement(p):
        f = tg.formula(3)
        g = _build_for(cfg, [p])
        if g is None or len(g.terms) > 12:
            raise StateLimitExceeded(cfg.cap, 0, p)
        return satisfies(g, p, f) == naive_satisfies(g, p, f)

    out.append(_run_samples(cfg, "actl", "path-enumeration-agreement", sample, oracle_agreement))
    return out


def _fand_all(cfg: LawConfig, f1, w) -> object:
    acc = f1
    for a in cfg.alphabet:
        acc = FAnd(acc, Box(a, w))
    return acc


def suite_galois(cfg: LawConfig) -> list[LawResult]:
    out = []
    tg = _gen(cfg, 13)

    def sampleqf(_k):
        return (tg.term(cfg.size),)

    def char_proc_law(q):
        f = tg.formula(2)
        cp = char_process(f, cfg.alphabet)
        g = _build_for(cfg, [q, cp])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, q)
        return satisfies(g, q, f) == refines_bool(g, q, cp)

    out.append(_run_samples(cfg, "galois", "characteristic-process", sampleqf, char_proc_law))

    def char_form_law(q):
        p = tg.fragment_term(cfg.size)
        pf = char_formula(p, cfg.alphabet)
        g = _build_for(cfg, [q, p])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, q)
        return refines_bool(g, q, p) == satisfies(g, q, pf)

    out.append(_run_samples(cfg, "galois", "characteristic-formula", sampleqf, char_form_law))

    def cancellations(q):
        p = tg.fragment_term(cfg.size)
        f = tg.formula(2)
        cp = char_process(f, cfg.alphabet)
        pf = char_formula(p, cfg.alphabet)
        g = _build_for(cfg, [p, char_process(pf, cfg.alphabet), cp])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        if not refines_bool(g, p, char_process(pf, cfg.alphabet)):
            return False
        if not satisfies(g, cp, f):  # [f] satisfies f
            return False
        return satisfies(g, p, pf)  # p satisfies its own formula

    out.append(_run_samples(cfg, "galois", "cancellation-laws", sampleqf, cancellations))

    def adjunction(q):
        p = tg.fragment_term(cfg.size)
        f = tg.formula(2)
        cp = char_process(f, cfg.alphabet)
        pf = char_formula(p, cfg.alphabet)
        cpf = char_process(pf, cfg.alphabet)
        g = _build_for(cfg, [p, cp, cpf])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, p)
        left = refines_bool(g, cpf, cp)  # p* entails f
        right = refines_bool(g, p, cp)
        return left == right

    out.append(_run_samples(cfg, "galois", "adjunction", sampleqf, adjunction))

    def consequence_sound(q):
        f1, f2 = tg.formula(2), tg.formula(2)
        if not consequence(f1, f2, cfg.alphabet, cfg.limits()):
            return True
        g = _build_for(cfg, [q])
        if g is None:
            raise StateLimitExceeded(cfg.cap, 0, q)
        if satisfies(g, q, f1):
            return satisfies(g, q, f2)
        return True

    out.append(_run_samples(cfg, "galois", "consequence-soundness", sampleqf, consequence_sound))
    return out


SUITES = {
    "syntax": suite_syntax,
    "transitions": suite_transitions,
    "wellformed": suite_wellformed,
    "foracle": suite_foracle,
    "always": suite_always,
    "unless": suite_unless,
    "ceil": suite_ceil,
    "fixedpoint": suite_fixedpoint,
    "refinemeta": suite_refinemeta,
    "actl": suite_actl,
    "galois": suite_galois,
}


def run_suites(cfg: LawConfig, names: list[str] | None = None) -> SuiteReport:
    report = SuiteReport()
    for name in names or list(SUITES):
        report.results.extend(SUITES[name](cfg))
    return report
