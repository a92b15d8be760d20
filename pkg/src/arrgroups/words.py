"""Free-group words.

A word is a tuple of nonzero ints: letter ``g + 1`` is generator ``g``
(0-based) and ``-(g + 1)`` its inverse.  Functions here return freely
reduced words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple


def reduce(w: Iterable[int]) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def gen(g: int) -> Word:
    return (g + 1,)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def mul(*ws: Sequence[int]) -> Word:
    return reduce(x for w in ws for x in w)


def conj(y: Sequence[int], x: Sequence[int]) -> Word:
    """``y*x = y x y^-1``."""
    return mul(y, x, inverse(y))


def comm(x: Sequence[int], y: Sequence[int]) -> Word:
    """``[x, y] = x y x^-1 y^-1``."""
    return mul(x, y, inverse(x), inverse(y))


def iterated_comm(*ws: Sequence[int]) -> Word:
    """``[x1, ..., xk] = [[x1, ..., x_{k-1}], xk]``."""
    acc = tuple(ws[0])
    for w in ws[1:]:
        acc = comm(acc, w)
    return acc


def power(w: Sequence[int], n: int) -> Word:
    if n < 0:
        return power(inverse(w), -n)
    return mul(*([w] * n))


def exponent_sums(w: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    for x in w:
        out[abs(x) - 1] += 1 if x > 0 else -1
    return out


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = list(reduce(w))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def substitute(w: Sequence[int], images: Sequence[Sequence[int]]) -> Word:
    """Apply the endomorphism sending generator g to ``images[g]``."""
    out = []
    for x in w:
        img = images[abs(x) - 1]
        out.extend(img if x > 0 else inverse(img))
    return reduce(out)


def format_word(w: Sequence[int], names: Sequence[str]) -> str:
    if not w:
        return "1"
    parts = []
    for x in w:
        name = names[abs(x) - 1]
        parts.append(name if x > 0 else name + "^-1")
    return "*".join(parts)


_TOKEN = re.compile(r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(-?\d+))?\s*$")


def parse_word(text: str, names: Sequence[str]) -> Word:
    text = text.strip()
    if text in ("", "1"):
        return ()
    index = {n: i for i, n in enumerate(names)}
    out = []
    for tok in text.split("*"):
        m = _TOKEN.match(tok)
        if not m or m.group(1) not in index:
            raise ValueError("cannot parse letter %r" % tok)
        g = index[m.group(1)] + 1
        e = int(m.group(2)) if m.group(2) else 1
        out.extend([g if e > 0 else -g] * abs(e))
    return reduce(out)


@dataclass(frozen=True)
class Bracket:
    """Syntactic commutator ``[left, right]``; leaves are plain words."""

    left: "Bracket | Word"
    right: "Bracket | Word"

    @property
    def depth(self) -> int:
        return bracket_depth(self.left) + bracket_depth(self.right)

    def word(self) -> Word:
        return comm(bracket_word(self.left), bracket_word(self.right))


def bracket_depth(b) -> int:
    """Depth of a bracket; a nontrivial plain word has depth 1, the empty word is
    treated as lying arbitrarily deep."""
    if isinstance(b, Bracket):
        return b.depth
    return 1 if reduce(b) else 10 ** 9


def bracket_word(b) -> Word:
    return b.word() if isinstance(b, Bracket) else reduce(b)


def left_normed(*ws) -> "Bracket | Word":
    """``[x1, ..., xk]`` as a bracket tree ``[[x1, ..., x_{k-1}], xk]``."""
    acc = ws[0]
    for w in ws[1:]:
        acc = Bracket(acc, w)
    return acc


def parse_bracket(text: str, names: Sequence[str]):
    """Parse ``[[m1,m5],m2]`` or left-normed ``[m1,m5,m2]``; bare words are leaves."""
    pos = 0

    def expr():
        nonlocal pos
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos < len(text) and text[pos] == "[":
            pos += 1
            items = [expr()]
            while True:
                while pos < len(text) and text[pos].isspace():
                    pos += 1
                if pos >= len(text):
                    raise ValueError("unterminated bracket in %r" % text)
                if text[pos] == ",":
                    pos += 1
                    items.append(expr())
                elif text[pos] == "]":
                    pos += 1
                    break
                else:
                    raise ValueError("unexpected %r in %r" % (text[pos], text))
            if len(items) < 2:
                raise ValueError("bracket needs at least two entries")
            return left_normed(*items)
        start = pos
        while pos < len(text) and text[pos] not in ",[]":
            pos += 1
        return parse_word(text[start:pos], names)

    out = expr()
    if text[pos:].strip():
        raise ValueError("trailing text in %r" % text)
    return out
