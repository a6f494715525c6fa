"""Random and exhaustive generation of m-primary monomial ideals in m^2."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .errors import SamplingBudgetError
from .monomials import Monomial, MonomialIdeal, divides, is_generic


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int
    max_exponent: int = 6
    n_range: tuple[int, int] = (4, 8)
    generic_only: bool = False

    def __post_init__(self):
        if self.max_exponent < 2:
            raise ValueError("max_exponent must be at least 2")
        if self.n_range[0] < 3 or self.n_range[0] > self.n_range[1]:
            raise ValueError("n_range must be an interval with lower bound >= 3")


def _sample_mixed(rng: random.Random, a: int, b: int, c: int) -> Monomial | None:
    for _ in range(60):
        m = Monomial(rng.randrange(a), rng.randrange(b), rng.randrange(c))
        if len(m.support()) >= 2:
            return m
    return None


def random_ideal(cfg: GeneratorConfig) -> MonomialIdeal:
    """Deterministic sampler: same config, same ideal.

    Pure powers of every variable are always present, so the result is
    m-primary; mixed generators are drawn under the pure-power staircase.
    With generic_only, rejection is followed by exponent perturbation."""
    rng = random.Random(cfg.seed)
    lo, hi = cfg.n_range
    for _ in range(400):
        n = rng.randint(lo, hi)
        a = rng.randint(2, cfg.max_exponent)
        b = rng.randint(2, cfg.max_exponent)
        c = rng.randint(2, cfg.max_exponent)
        pures = [Monomial(a, 0, 0), Monomial(0, b, 0), Monomial(0, 0, c)]
        mixed: list[Monomial] = []
        for _ in range(n - 3):
            m = _sample_mixed(rng, a, b, c)
            if m is not None and m not in mixed:
                mixed.append(m)
        ideal = MonomialIdeal.from_monomials(pures + mixed)
        if ideal.n != n:
            continue
        if not cfg.generic_only:
            return ideal
        if is_generic(ideal):
            return ideal
        ideal = _perturb_to_generic(rng, ideal, a, b, c)
        if ideal is not None:
            return ideal
    raise SamplingBudgetError(f"sampling budget exhausted for {cfg}")


def _perturb_to_generic(
    rng: random.Random, ideal: MonomialIdeal, a: int, b: int, c: int
) -> MonomialIdeal | None:
    n = ideal.n
    gens = list(ideal.generators)
    bounds = (a, b, c)
    for _ in range(60):
        mixed_positions = [
            k for k, g in enumerate(gens) if g.pure_power_variable() is None
        ]
        if not mixed_positions:
            return None
        k = rng.choice(mixed_positions)
        var = rng.randrange(3)
        delta = rng.choice((-1, 1))
        e = list(gens[k])
        e[var] += delta
        if not (0 <= e[var] < bounds[var]):
            continue
        cand = Monomial(*e)
        if len(cand.support()) < 2:
            continue
        new_gens = gens[:k] + [cand] + gens[k + 1 :]
        trial = MonomialIdeal.from_monomials(new_gens)
        if trial.n != n:
            continue
        gens = list(trial.generators)
        if is_generic(trial):
            return trial
    return None


def random_generic_ideal(cfg: GeneratorConfig) -> MonomialIdeal:
    if not cfg.generic_only:
        cfg = GeneratorConfig(
            seed=cfg.seed,
            max_exponent=cfg.max_exponent,
            n_range=cfg.n_range,
            generic_only=True,
        )
    return random_ideal(cfg)


def _mixed_candidates(a: int, b: int, c: int) -> list[Monomial]:
    out = []
    for e in product(range(a), range(b), range(c)):
        m = Monomial(*e)
        if len(m.support()) >= 2:
            out.append(m)
    return out


def iter_primary_ideals_n4(max_exponent: int):
    """All m-primary ideals in m^2 with exactly 4 minimal generators and
    every exponent bounded by max_exponent, in deterministic order."""
    rng = range(2, max_exponent + 1)
    for a, b, c in product(rng, rng, rng):
        pures = (Monomial(a, 0, 0), Monomial(0, b, 0), Monomial(0, 0, c))
        for m in _mixed_candidates(a, b, c):
            yield MonomialIdeal(pures + (m,))


def iter_primary_ideals_n5(max_exponent: int):
    """All m-primary ideals in m^2 with exactly 5 minimal generators."""
    rng = range(2, max_exponent + 1)
    for a, b, c in product(rng, rng, rng):
        pures = (Monomial(a, 0, 0), Monomial(0, b, 0), Monomial(0, 0, c))
        cands = _mixed_candidates(a, b, c)
        for m1, m2 in combinations(cands, 2):
            if divides(m1, m2) or divides(m2, m1):
                continue
            yield MonomialIdeal(pures + (m1, m2))
