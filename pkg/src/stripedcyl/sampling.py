"""Seeded random words and relation-rewritten twin pairs."""

from __future__ import annotations

import random
from functools import lru_cache

from .relations import RelationInstance, instances
from .words import Birth, Death, Generator, GeneratorWord, Tw, TwInv, concat


def _max_arity(w: GeneratorWord) -> int:
    cur = top = w.n_in
    for g in w.gens:
        cur = g.target
        top = max(top, cur)
    return top


def random_word(
    rng: random.Random,
    length: int,
    n_in: int | None = None,
    n_out: int | None = None,
    max_arity: int = 10,
    inverses: bool = False,
) -> GeneratorWord:
    """A uniformly-ish random typed word of exactly ``length`` generators.

    If ``n_out`` is given the walk is steered so that it ends there; it
    must have the parity of ``n_in`` and be reachable in ``length`` steps.
    """
    if n_in is None:
        if n_out is None:
            n_in = rng.randrange(max_arity + 1)
        else:
            lo, hi = max(0, n_out - 2 * length), min(max_arity, n_out + 2 * length)
            n_in = rng.choice([x for x in range(lo, hi + 1) if (x - n_out) % 2 == 0])
    if n_out is not None and ((n_in - n_out) % 2 or abs(n_in - n_out) > 2 * length):
        raise ValueError(f"cannot walk {n_in} -> {n_out} in {length} steps")
    gens: list[Generator] = []
    k = n_in
    for step in range(length):
        left = length - step - 1

        def ok(target: int) -> bool:
            return 0 <= target <= max_arity and (n_out is None or abs(target - n_out) <= 2 * left)

        choices: list[Generator] = [Tw(k)] if ok(k) else []
        if inverses and ok(k):
            choices.append(TwInv(k))
        if ok(k + 2):
            choices += [Birth(k, i) for i in range(k + 2)]
        if k >= 2 and ok(k - 2):
            choices += [Death(k, i) for i in range(k)]
        # weight the three moves evenly rather than by slot count
        buckets = [[g for g in choices if g.target == t] for t in (k, k + 2, k - 2)]
        buckets = [b for b in buckets if b]
        g = rng.choice(rng.choice(buckets))
        gens.append(g)
        k = g.target
    return GeneratorWord(gens, n_in)


@lru_cache(maxsize=None)
def _relation_pool(max_k: int, max_arity: int) -> tuple[tuple[RelationInstance, GeneratorWord, GeneratorWord], ...]:
    pool = []
    for inst in instances(max_k):
        lhs, rhs, _ = inst.sides()
        if max(_max_arity(lhs), _max_arity(rhs)) <= max_arity:
            pool.append((inst, lhs, rhs))
    return tuple(pool)


def twin_pair(
    rng: random.Random, max_len: int = 20, max_arity: int = 10, max_k: int = 8
) -> tuple[GeneratorWord, GeneratorWord, RelationInstance]:
    """Two words differing by one relation applied somewhere inside a random context."""
    inst, lhs, rhs = rng.choice(_relation_pool(max_k, max_arity))
    if rng.random() < 0.5:
        lhs, rhs = rhs, lhs
    room = max(0, max_len - max(len(lhs), len(rhs)))
    a = rng.randint(0, room)
    b = rng.randint(0, room - a)
    prefix = random_word(rng, a, n_out=lhs.n_in, max_arity=max_arity) if a else GeneratorWord.identity(lhs.n_in)
    suffix = random_word(rng, b, n_in=lhs.n_out, max_arity=max_arity)
    return concat([prefix, lhs, suffix]), concat([prefix, rhs, suffix]), inst


def independent_pair(
    rng: random.Random, max_len: int = 20, max_arity: int = 10
) -> tuple[GeneratorWord, GeneratorWord]:
    """Two independently drawn words that share a signature."""
    u = random_word(rng, rng.randint(0, max_len), max_arity=max_arity)
    need = abs(u.n_in - u.n_out) // 2
    v = random_word(rng, rng.randint(need, max_len), n_in=u.n_in, n_out=u.n_out, max_arity=max_arity)
    return u, v
