"""
Knuth-Bendix completion for finitely presented monoids under the shortlex
order, and enumeration of the normal forms of a finite monoid.

Words are tuples of symbol indices; symbols compare by index.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

Word = tuple[int, ...]


class CompletionError(RuntimeError):
    pass


def shortlex_greater(u: Word, v: Word) -> bool:
    return (len(u), u) > (len(v), v)


class RewritingSystem:
    def __init__(self, rules: Iterable[tuple[Word, Word]] = ()):
        self.rules: list[tuple[Word, Word]] = list(rules)

    def reduce(self, w: Sequence[int]) -> Word:
        w = tuple(w)
        changed = True
        while changed:
            changed = False
            for lhs, rhs in self.rules:
                k = _find(w, lhs)
                if k >= 0:
                    w = w[:k] + rhs + w[k + len(lhs):]
                    changed = True
                    break
        return w


def _find(w: Word, pat: Word) -> int:
    n, m = len(w), len(pat)
    for k in range(n - m + 1):
        if w[k: k + m] == pat:
            return k
    return -1


def _critical_pairs(r1, r2):
    (l1, s1), (l2, s2) = r1, r2
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            yield s1 + l2[k:], l1[:-k] + s2


def knuth_bendix(equations: Iterable[tuple[Word, Word]], max_rules: int = 5000) -> RewritingSystem:
    """Complete the presentation to a confluent shortlex rewriting system."""
    rs = RewritingSystem()
    queue = deque(equations)
    while queue:
        u, v = queue.popleft()
        u, v = rs.reduce(u), rs.reduce(v)
        if u == v:
            continue
        if not shortlex_greater(u, v):
            u, v = v, u
        new = (u, v)
        # interreduce: rules whose left side contains u go back on the queue
        keep = []
        for lhs, rhs in rs.rules:
            if _find(lhs, u) >= 0:
                queue.append((lhs, rhs))
            else:
                keep.append((lhs, rhs))
        rs.rules = keep + [new]
        rs.rules = [(lhs, rs.reduce(rhs)) for lhs, rhs in rs.rules]
        if len(rs.rules) > max_rules:
            raise CompletionError("completion did not terminate within the rule budget")
        for other in list(rs.rules):
            queue.extend(_critical_pairs(new, other))
            if other is not new:
                queue.extend(_critical_pairs(other, new))
    return rs


def enumerate_monoid(rs: RewritingSystem, generators: Sequence[int], limit: int = 100000) -> list[Word]:
    """All normal forms reachable from the empty word, in breadth-first order."""
    seen = {(): None}
    order = [()]
    queue = deque([()])
    while queue:
        w = queue.popleft()
        for s in generators:
            x = rs.reduce(w + (s,))
            if x not in seen:
                seen[x] = None
                order.append(x)
                queue.append(x)
                if len(order) > limit:
                    raise CompletionError("monoid is larger than the enumeration limit")
    return order
