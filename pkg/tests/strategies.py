"""Shared hypothesis strategies and random table builders."""
import random
from fractions import Fraction

from hypothesis import strategies as st

from bettibound.betti import BettiTable, pure_betti, table_axpy


@st.composite
def degree_sequences(draw, max_s=5, max_top=14, start_at_zero=True):
    s = draw(st.integers(1, max_s))
    top = draw(st.integers(s, max_top))
    lo = 0 if start_at_zero else draw(st.integers(0, max(0, top - s)))
    mid = draw(st.lists(st.integers(lo + 1, top - 1), min_size=s - 1, max_size=s - 1, unique=True)) \
        if s > 1 else []
    return (lo, *sorted(mid), top)


def random_chain(rng: random.Random, s: int, top: int, length: int) -> list:
    """A strictly increasing chain of degree sequences with d_0 = 0 and d_s <= top."""
    d = [0] + list(range(1, s + 1))
    chain = [tuple(d)]
    for _ in range(length - 1):
        movable = [i for i in range(1, s + 1)
                   if (d[i] + 1 < d[i + 1] if i < s else d[i] + 1 <= top)]
        if not movable:
            break
        i = rng.choice(movable)
        d[i] += 1
        chain.append(tuple(d))
    return chain


def random_chain_table(rng: random.Random, max_s=4, max_top=12) -> tuple:
    """Positive combination of pure tables along a random chain; returns (table, parts)."""
    s = rng.randint(1, max_s)
    top = rng.randint(s, max_top)
    chain = random_chain(rng, s, top, rng.randint(1, 6))
    chain = rng.sample(chain, rng.randint(1, len(chain)))
    chain.sort()
    table = BettiTable()
    parts = []
    for d in chain:
        c = Fraction(rng.randint(1, 60), rng.randint(1, 4))
        table = table_axpy(c, pure_betti(d), table)
        parts.append((c, d))
    return table, parts
