"""Brute-force verification sweeps for every inequality the library encodes.

Each check sweeps an explicit parameter range, evaluates both sides of its
inequality independently, and collects counterexamples instead of aborting:
if an implementation bug exists, the violating tuples are the useful output.
All sweeps are deterministic given their ranges and seed.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from .bounds import FreeModuleShape, module_bound, rank2_bound, scaled_bound
from .macaulay import binomial, kappa, macaulay_rep
from .monomials import (
    MonomialModule,
    enumerate_monomials,
    hilbert_value_module,
    lex_segment,
    random_monomial_module,
)
from .oracle import DEFAULT_PRIME, DEFAULT_TRIALS, generic_restriction_dim


@dataclass
class VerificationOutcome:
    """Result of one sweep: ranges, case count and any violations found."""

    statement: str
    ranges: dict
    cases: int = 0
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json_dict(self) -> dict:
        return {
            "statement": self.statement,
            "ranges": self.ranges,
            "cases": self.cases,
            "counterexamples": self.counterexamples,
        }


def _record(outcome: VerificationOutcome, inputs: dict, lhs, rhs) -> None:
    # Counterexamples are stored with both sides so they re-verify on replay.
    outcome.counterexamples.append({**inputs, "lhs": lhs, "rhs": rhs})


def check_kappa_lemma(a_max: int, d_max: int) -> VerificationOutcome:
    """Superadditivity kappa(a,d)+kappa(b,d) <= kappa(a+b,d) and degree
    monotonicity kappa(a,d+1) <= kappa(a,d), exhaustively for a,b <= a_max
    and d <= d_max."""
    if a_max < 1 or d_max < 1:
        raise ValueError("a_max and d_max must be positive")
    out = VerificationOutcome("kappa-lemma", {"a_max": a_max, "d_max": d_max})
    tables = {
        d: np.array([kappa(a, d) for a in range(2 * a_max + 1)], dtype=np.int64)
        for d in range(1, d_max + 2)
    }
    idx = np.arange(a_max + 1)
    pair_sums = idx[:, None] + idx[None, :]
    for d in range(1, d_max + 1):
        table = tables[d]
        head = table[: a_max + 1]
        lhs = head[:, None] + head[None, :]
        rhs = table[pair_sums]
        for a, b in np.argwhere(lhs > rhs):
            _record(
                out,
                {"a": int(a), "b": int(b), "d": d, "part": "superadditive"},
                kappa(int(a), d) + kappa(int(b), d),
                kappa(int(a) + int(b), d),
            )
        for (a,) in np.argwhere(tables[d + 1][: a_max + 1] > head):
            _record(
                out,
                {"a": int(a), "d": d, "part": "degree-monotone"},
                kappa(int(a), d + 1),
                kappa(int(a), d),
            )
        out.cases += (a_max + 1) ** 2 + (a_max + 1)
    return out


def check_herz_tail(a_max: int, d_max: int) -> VerificationOutcome:
    """kappa(a-1,d) = kappa(a,d) exactly when the base-d representation of a
    terminates with numerator equal to its degree."""
    if a_max < 2:
        raise ValueError("a_max must be at least 2")
    out = VerificationOutcome("herz", {"a_max": a_max, "d_max": d_max})
    for d in range(1, d_max + 1):
        prev = kappa(0, d)
        for a in range(1, a_max + 1):
            cur = kappa(a, d)
            stalls = prev == cur
            tail_hits = macaulay_rep(a, d).ends_at_delta()
            if stalls != tail_hits:
                _record(out, {"a": a, "d": d, "ends_at_delta": tail_hits}, prev, cur)
            prev = cur
            out.cases += 1
    return out


def check_rank2(n: int, d1: int, d2: int) -> VerificationOutcome:
    """kappa(a,d1)+kappa(b,d2) <= rank2_bound(a,b,d1,d2,n), exhaustively over
    all admissible a, b."""
    if d1 < d2 or d2 < 1:
        raise ValueError(f"need d1 >= d2 >= 1, got d1={d1}, d2={d2}")
    out = VerificationOutcome("rank2", {"n": n, "d1": d1, "d2": d2})
    n1 = binomial(n + d1 - 1, d1)
    n2 = binomial(n + d2 - 1, d2)
    for a in range(n1 + 1):
        ka = kappa(a, d1)
        for b in range(n2 + 1):
            lhs = ka + kappa(b, d2)
            rhs = rank2_bound(a, b, d1, d2, n)
            if lhs > rhs:
                _record(out, {"a": a, "b": b, "d1": d1, "d2": d2, "n": n}, lhs, rhs)
            out.cases += 1
    return out


def _higher_rhs(values: tuple[int, ...], degrees: tuple[int, ...], n: int) -> int:
    # Shift the degree tuple into a free-module shape at m = max degree and
    # reuse the piecewise bound; the pivot condition is identical.
    m = degrees[0]
    shape = FreeModuleShape(n=n, degrees=tuple(m - d for d in degrees))
    return module_bound(sum(values), m, shape).total


def check_higher(
    n: int,
    degree_tuples: list[tuple[int, ...]],
    samples: int,
    seed: int = 0,
) -> VerificationOutcome:
    """sum kappa(a_i, d_i) <= piecewise bound over random and corner tuples.

    Every boundary corner (each a_i in {0, N_i}) is always included;
    piecewise formulas break at boundaries, so uniform sampling alone
    would under-test them.
    """
    out = VerificationOutcome(
        "higher",
        {"n": n, "tuples": len(degree_tuples), "samples": samples, "seed": seed},
    )
    rng = random.Random(seed)
    for degrees in degree_tuples:
        degrees = tuple(degrees)
        if any(d < 1 for d in degrees) or any(
            d2 > d1 for d1, d2 in zip(degrees, degrees[1:])
        ):
            raise ValueError(f"degree tuple must be non-increasing and >= 1: {degrees}")
        caps = [binomial(n + d - 1, d) for d in degrees]
        corner_values = itertools.product(*[(0, c) for c in caps])
        sampled = (
            tuple(rng.randint(0, c) for c in caps) for _ in range(samples)
        )
        for values in itertools.chain(corner_values, sampled):
            lhs = sum(kappa(a, d) for a, d in zip(values, degrees))
            rhs = _higher_rhs(values, degrees, n)
            if lhs > rhs:
                _record(out, {"values": list(values), "degrees": list(degrees), "n": n}, lhs, rhs)
            out.cases += 1
    return out


def nonincreasing_tuples(d_max: int, r: int) -> list[tuple[int, ...]]:
    """All non-increasing tuples of length r with entries in 1..d_max."""
    return [
        tuple(sorted(tup, reverse=True))
        for tup in itertools.combinations_with_replacement(range(1, d_max + 1), r)
    ]


def check_lex_restriction(n: int, d: int) -> VerificationOutcome:
    """Restricting a lex segment to one fewer variable drops its codimension
    exactly to kappa of the codimension, for every segment size."""
    out = VerificationOutcome("lex-restriction", {"n": n, "d": d})
    all_monomials = enumerate_monomials(n, d)
    dim = len(all_monomials)
    ambient_free = sum(1 for mono in all_monomials if mono[-1] == 0)
    for k in range(dim + 1):
        segment = lex_segment(n, d, k)
        specialized_codim = ambient_free - sum(1 for mono in segment if mono[-1] == 0)
        expected = kappa(dim - k, d) if d >= 1 else dim - k
        if specialized_codim != expected:
            _record(out, {"n": n, "d": d, "k": k}, specialized_codim, expected)
        out.cases += 1
    return out


def check_scaled_corollary(
    n_max: int = 3,
    r_max: int = 3,
    d_max: int = 5,
    samples: int = 3,
    p: int = DEFAULT_PRIME,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> VerificationOutcome:
    """Sampled restriction of F/M stays under (n-1)/(n+d-1) of its dimension
    for modules presented over free modules generated in degree zero."""
    out = VerificationOutcome(
        "scaled",
        {
            "n_max": n_max,
            "r_max": r_max,
            "d_max": d_max,
            "samples": samples,
            "p": p,
            "trials": trials,
            "seed": seed,
        },
    )
    rng = random.Random(seed)
    for n in range(1, n_max + 1):
        for r in range(1, r_max + 1):
            shape = FreeModuleShape(n=n, degrees=(0,) * r)
            modules = [MonomialModule.zero(shape)] + [
                random_monomial_module(rng, shape, max_gens=3, max_degree=d_max)
                for _ in range(samples)
            ]
            for module in modules:
                for d in range(d_max + 1):
                    if n + d - 1 < 1:
                        continue  # no ambient ring to restrict to
                    report = generic_restriction_dim(
                        module, d, p=p, trials=trials, seed=rng.randrange(2**30)
                    )
                    lhs = report.generic_dim
                    rhs = scaled_bound(hilbert_value_module(module, d), n, d)
                    if lhs > rhs:
                        _record(
                            out,
                            {
                                "n": n,
                                "r": r,
                                "d": d,
                                "generators": [
                                    [list(g) for g in ideal.gens]
                                    for ideal in module.components
                                ],
                            },
                            lhs,
                            str(rhs),
                        )
                    out.cases += 1
    return out
