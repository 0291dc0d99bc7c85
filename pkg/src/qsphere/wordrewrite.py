"""Letter-by-letter rewriting of words in a, b, c, d.

This is deliberately naive: it applies one relation at a time to one redex.
It serves as the reference the block kernel in :mod:`qsphere.ncalg` is tested
against, and (with random redex selection) as the confluence check.

Rules, on words over {a, b, c, d}::

    ba -> q ab,  ca -> q ac,  db -> q bd,  dc -> q cd,  cb -> bc
    da -> 1 + q bc
    a u d -> q^-|u| u (1 + q^-1 bc)      u any word in {b, c}, possibly empty

The last rule is ``ad -> 1 + q^-1 bc`` after moving the ``a`` across ``u``;
it is what removes ``a``/``d`` pairs that are not adjacent (``abcd``).
Termination: each step lowers (number of a..d pairs, number of inversions)
lexicographically.
"""

from __future__ import annotations

import random
from typing import Dict, List, Optional, Tuple

from .exactq import ONE, ZERO, RatQ
from .ncalg import Mono, NCPoly

Word = str

_SWAPS = {
    "ba": ("ab", 1),
    "ca": ("ac", 1),
    "db": ("bd", 1),
    "dc": ("cd", 1),
    "cb": ("bc", 0),
}


def redexes(w: Word) -> List[Tuple[int, int]]:
    """All (start, end) spans where some rule applies."""
    out = []
    for i in range(len(w) - 1):
        pair = w[i : i + 2]
        if pair in _SWAPS or pair == "da":
            out.append((i, i + 2))
    for i, ch in enumerate(w):
        if ch != "a":
            continue
        j = i + 1
        while j < len(w) and w[j] in "bc":
            j += 1
        if j < len(w) and w[j] == "d":
            out.append((i, j + 1))
    return out


def rewrite_at(w: Word, span: Tuple[int, int]) -> List[Tuple[Word, int]]:
    """Apply the rule at ``span``; returns [(word, q-exponent)] with coefficient +1 each."""
    i, j = span
    pre, red, post = w[:i], w[i:j], w[j:]
    if red in _SWAPS:
        rep, e = _SWAPS[red]
        return [(pre + rep + post, e)]
    if red == "da":
        return [(pre + post, 0), (pre + "bc" + post, 1)]
    # a u d
    u = red[1:-1]
    s = -len(u)
    return [(pre + u + post, s), (pre + u + "bc" + post, s - 1)]


def _normal_word(w: Word) -> bool:
    return not redexes(w)


def _word_to_mono(w: Word) -> Mono:
    return Mono(w.count("a"), w.count("b"), w.count("c"), w.count("d"))


def reduce_word(word: Word, coeff: RatQ = ONE, rng: Optional[random.Random] = None) -> NCPoly:
    """Normal form of ``coeff * word``.

    With ``rng`` None the leftmost redex of the first pending word is always
    taken; otherwise both the word and the redex are chosen at random.
    """
    pending: Dict[Word, RatQ] = {word: coeff}
    done: Dict[Mono, RatQ] = {}
    while pending:
        if rng is None:
            w = next(iter(pending))
        else:
            w = rng.choice(sorted(pending))
        c = pending.pop(w)
        spans = redexes(w)
        if not spans:
            m = _word_to_mono(w)
            s = done.get(m, ZERO) + c
            if s:
                done[m] = s
            else:
                done.pop(m, None)
            continue
        span = min(spans) if rng is None else rng.choice(spans)
        for w2, e in rewrite_at(w, span):
            s = pending.get(w2, ZERO) + c * RatQ.q_power(e)
            if s:
                pending[w2] = s
            else:
                pending.pop(w2, None)
    return NCPoly._raw(done)


def random_word(rng: random.Random, max_len: int = 8) -> Word:
    n = rng.randint(0, max_len)
    return "".join(rng.choice("abcd") for _ in range(n))
