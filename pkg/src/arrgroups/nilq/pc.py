"""Weighted polycyclic presentations and collection from the left.

Generators ``a_0 .. a_{m-1}`` carry a weight and a relative order (0 for
infinite).  Relations are stored in conjugate form::

    a_j^(a_i)      = a_j * conj[i][j]      (i < j)
    a_j^(a_i^-1)   = a_j * conj_inv[i][j]  (derived)
    a_i^(order_i)  = powers[i]

with right-hand sides given as normal-form syllable tuples ``((g, e), ...)``
in generators of index > j (resp. > i).  During the nilpotent quotient step
the same collector also runs on a central extension: every relation may then
carry a *tail*, a sparse integer vector over the new central generators,
which collection accumulates additively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Syllables = tuple  # ((gen, exp), ...)


def inverse_syllables(word: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(g, -e) for g, e in reversed(word)]


def _add_tail(acc: dict, tail: dict, f: int) -> None:
    for k, c in tail.items():
        s = acc.get(k, 0) + f * c
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


class Collector:
    """Collection from the left for a consistent (or extended) pc presentation.

    ``conj[i]`` maps j to ``(word, tail)``; ``powers[i]`` is ``(word, tail)``.
    ``tail`` is a dict or None.  ``conj_inv`` is derived on construction.
    """

    def __init__(self, weights, orders, conj, powers):
        self.m = len(weights)
        self.weights = list(weights)
        self.orders = list(orders)
        self.conj = conj
        self.powers = powers
        self.conj_inv: list[dict] = [dict() for _ in range(self.m)]
        self.extended = any(t for d in conj for _, t in d.values()) or any(
            t for _, t in powers.values())
        self._build_inverse_conjugates()

    # -- core -------------------------------------------------------------

    def collect(self, v: list[int], word: Iterable[tuple[int, int]], tails: dict | None = None) -> list[int]:
        """Multiply the normal form ``v`` (in place) by ``word``; return ``v``."""
        orders, powers = self.orders, self.powers
        conj, conj_inv = self.conj, self.conj_inv
        stack = list(word)
        stack.reverse()
        hi = len(v)
        while hi and not v[hi - 1]:
            hi -= 1
        pop, push = stack.pop, stack.append
        while stack:
            g, e = pop()
            if not e:
                continue
            if hi > g + 1:
                s = 1 if e > 0 else -1
                table = conj[g] if s > 0 else conj_inv[g]
                beyond = [j for j in range(g + 1, hi) if v[j]]
                o = orders[g]
                simple = not (o and not 0 <= v[g] + e < o)
                for j in beyond:
                    if not simple:
                        break
                    rel = table.get(j)
                    if rel is not None and rel[0]:
                        simple = False
                if simple:
                    # suffix is unchanged; only tails move
                    if tails is not None:
                        for j in beyond:
                            rel = table.get(j)
                            if rel is not None and rel[1]:
                                _add_tail(tails, rel[1], v[j] * abs(e))
                    step = e
                else:
                    step = s
                    if e != s:
                        push((g, e - s))
                    pieces = []
                    for j in beyond:
                        f = v[j]
                        v[j] = 0
                        rel = table.get(j)
                        if rel is None:
                            pieces.append(((j, f),))
                            continue
                        w, tail = rel
                        if tails is not None and tail:
                            _add_tail(tails, tail, f)
                        if not w:
                            pieces.append(((j, f),))
                        elif f > 0:
                            pieces.append((((j, 1),) + tuple(w)) * f)
                        else:
                            pieces.append((tuple(inverse_syllables(w)) + ((j, -1),)) * (-f))
                    hi = g + 1
                    for piece in reversed(pieces):
                        for syl in reversed(piece):
                            push(syl)
            else:
                step = e
            x = v[g] + step
            o = orders[g]
            if o and (x >= o or x < 0):
                q, x = divmod(x, o)
                w, tail = powers[g]
                if tails is not None and tail:
                    _add_tail(tails, tail, q)
                if w:
                    piece = tuple(w) * q if q > 0 else tuple(inverse_syllables(w)) * (-q)
                    for syl in reversed(piece):
                        push(syl)
            v[g] = x
            if x and g + 1 > hi:
                hi = g + 1
            elif not x and hi == g + 1:
                while hi and not v[hi - 1]:
                    hi -= 1
        return v

    def normal_form(self, word, tails: dict | None = None) -> list[int]:
        return self.collect([0] * self.m, word, tails)

    # -- derived relations --------------------------------------------------

    def _build_inverse_conjugates(self) -> None:
        """Conjugates by inverse generators, highest generators first.

        With ``a_j^(a_i) = a_j c t`` the element ``d = a_i c^-1 a_i^-1 t^-1``
        satisfies ``a_j^(a_i^-1) = a_j d``; collecting ``d`` only needs
        ``conj_inv`` entries of generators above j (and above i).
        """
        for i in range(self.m - 1, -1, -1):
            inv = self.conj_inv[i]
            for j in sorted(self.conj[i], reverse=True):
                w, tail = self.conj[i][j]
                t = {} if self.extended else None
                if w:
                    v = [0] * self.m
                    v[i] = 1
                    self.collect(v, inverse_syllables(w), t)
                    self.collect(v, [(i, -1)], t)
                    assert not any(v[: j + 1]), "inverse conjugate left the subgroup"
                    dw = to_syllables(v)
                else:
                    dw = ()
                if tail:
                    _add_tail(t, tail, -1)
                if dw or t:
                    inv[j] = (dw, t or None)


def to_syllables(v: Sequence[int]) -> Syllables:
    return tuple((g, e) for g, e in enumerate(v) if e)


@dataclass
class PcPresentation:
    """Consistent weighted pc presentation of ``G / gamma_{c+1}(G)``.

    ``images[x]`` is the normal form of the image of free generator x;
    ``definitions[g]`` records which relation introduced generator g:
    ``("image", x)``, ``("comm", j, i)`` or ``("power", i)``.
    """

    weights: list[int]
    orders: list[int]
    conj: list[dict]            # conj[i][j] -> syllables
    powers: dict                # i -> syllables
    images: list
    definitions: list
    nclass: int = 0
    _collector: Collector | None = field(default=None, repr=False, compare=False)

    @property
    def n_gens(self) -> int:
        return len(self.weights)

    def collector(self) -> Collector:
        if self._collector is None:
            conj = [{j: (w, None) for j, w in d.items()} for d in self.conj]
            powers = {i: (w, None) for i, w in self.powers.items()}
            self._collector = Collector(self.weights, self.orders, conj, powers)
        return self._collector

    def layer(self, k: int) -> list[int]:
        return [g for g, w in enumerate(self.weights) if w == k]

    def collect(self, word) -> list[int]:
        return self.collector().normal_form(list(word))

    def multiply(self, u: Sequence[int], v: Sequence[int]) -> list[int]:
        return self.collector().collect(list(u), to_syllables(v))

    def inverse(self, u: Sequence[int]) -> list[int]:
        """Inverse of a normal form, solving ``u * x = 1`` generator by generator."""
        col = self.collector()
        acc = list(u)
        x = [0] * self.n_gens
        for g in range(self.n_gens):
            e = acc[g]
            if e:
                f = -e
                if self.orders[g]:
                    f %= self.orders[g]
                col.collect(acc, [(g, f)])
                x[g] = f
        assert not any(acc)
        return x

    def evaluate(self, word: Sequence[int]) -> list[int]:
        """Image of a free-group word (letters ``+-(x+1)``) under the epimorphism."""
        col = self.collector()
        v = [0] * self.n_gens
        for letter in word:
            img = self.images[abs(letter) - 1]
            col.collect(v, img if letter > 0 else inverse_syllables(img))
        return v

    def is_identity(self, v: Sequence[int]) -> bool:
        return not any(v)

    def layer_relations(self, k: int) -> tuple[list[int], list[list[int]]]:
        """Generators of weight k and the power relations among them."""
        gens = self.layer(k)
        pos = {g: n for n, g in enumerate(gens)}
        rows = []
        for g in gens:
            if self.orders[g]:
                row = [0] * len(gens)
                row[pos[g]] += self.orders[g]
                for h, e in self.powers.get(g, ()):
                    if h in pos:
                        row[pos[h]] -= e
                rows.append(row)
        return gens, rows


def consistency_words(weights: Sequence[int], orders: Sequence[int], max_weight: int | None = None):
    """Standard overlap tests as pairs of bracketings.

    Each item is ``(kind, left, right)`` where ``left`` and ``right`` are
    lists of words to be collected successively: the first word is collected
    from the identity, each following element is either a word to multiply
    on, or a nested list meaning "collect this word first, then multiply".
    Tests whose weight exceeds ``max_weight`` are skipped.
    """
    m = len(weights)
    bound = max_weight if max_weight is not None else float("inf")
    for i in range(m):
        for j in range(i + 1, m):
            if weights[i] + weights[j] > bound:
                break
            for k in range(j + 1, m):
                if weights[i] + weights[j] + weights[k] > bound:
                    break
                yield ("assoc", (k, j, i))
    for j in range(m):
        if orders[j]:
            for i in range(j):
                if weights[i] + weights[j] <= bound:
                    yield ("power_left", (j, i))
            for k in range(j + 1, m):
                if weights[j] + weights[k] <= bound:
                    yield ("power_right", (k, j))
            yield ("power_self", (j,))


def run_consistency_test(col: Collector, test, with_tails: bool):
    """Collect both sides of one overlap test; return ``(lhs, rhs, tail_difference)``."""
    kind, idx = test
    m = col.m
    lt = {} if with_tails else None
    rt = {} if with_tails else None
    if kind == "assoc":
        k, j, i = idx
        lhs = col.collect([0] * m, [(k, 1), (j, 1), (i, 1)], lt)
        ji = col.collect([0] * m, [(j, 1), (i, 1)], rt)
        rhs = col.collect([0] * m, [(k, 1)] + list(to_syllables(ji)), rt)
    elif kind == "power_left":
        j, i = idx
        o = col.orders[j]
        lhs = col.collect([0] * m, [(j, o), (i, 1)], lt)
        ji = col.collect([0] * m, [(j, 1), (i, 1)], rt)
        rhs = col.collect([0] * m, [(j, o - 1)] + list(to_syllables(ji)), rt)
    elif kind == "power_right":
        k, j = idx
        o = col.orders[j]
        pj = col.collect([0] * m, [(j, o)], lt)
        lhs = col.collect([0] * m, [(k, 1)] + list(to_syllables(pj)), lt)
        rhs = col.collect([0] * m, [(k, 1), (j, 1), (j, o - 1)], rt)
    else:
        (j,) = idx
        o = col.orders[j]
        pj = col.collect([0] * m, [(j, o)], lt)
        lhs = col.collect([0] * m, [(j, 1)] + list(to_syllables(pj)), lt)
        rhs = col.collect([0] * m, [(j, o), (j, 1)], rt)
    diff = None
    if with_tails:
        diff = dict(lt)
        _add_tail(diff, rt, -1)
    return lhs, rhs, diff


def check_consistency(pc: PcPresentation, max_weight: int | None = None) -> list:
    """All failing overlap tests of a plain pc presentation (empty when consistent)."""
    col = pc.collector()
    bad = []
    for test in consistency_words(pc.weights, pc.orders, max_weight):
        lhs, rhs, _ = run_consistency_test(col, test, False)
        if lhs != rhs:
            bad.append(test)
    return bad
