"""Monodromy tuples for branched covers of the sphere with n ordered branch
points.

A degree-d cover of the sphere branched over n ordered points, with the
fiber over a base point labeled 0..d-1, is recorded by the tuple
(g_0, ..., g_{n-1}) of permutations obtained by lifting one positively
oriented lasso per branch point.  The two semantic invariants are

  * product constraint: g_0 g_1 ... g_{n-1} = id (left-to-right product),
  * transitivity: the g_v generate a group with one orbit, so the cover is
    connected.

Relabeling the fiber conjugates all g_v simultaneously; covers are
isomorphic exactly when their tuples are simultaneously conjugate.  This
module provides the tuple type, a canonical representative per conjugacy
class, and the basic invariants (genus, ramification profile, normality)
plus the orientation-reversal involution.

Only n >= 3 is accepted: with fewer branch points the interesting examples
degenerate and several downstream conventions (suffix conjugation in
orientation_reverse, braid index ranges) would need special cases.
"""

from collections import deque

from .errors import DessinryError
from .perms import (
    compose,
    compose_all,
    cycles,
    cycle_type,
    identity,
    inverse,
    is_perm,
    relabel,
)


class MonodromyTuple:
    """An ordered tuple of n >= 3 permutations of {0, ..., d-1}.

    Structural soundness (shape, genuine permutations, d >= 1) is enforced
    here; the semantic invariants are checked by validate(), so that broken
    tuples can still be constructed, inspected and diagnosed.
    """

    __slots__ = ("perms",)

    def __init__(self, perms):
        perms = tuple(tuple(p) for p in perms)
        if len(perms) < 3:
            raise DessinryError("invalid-tuple", "need at least 3 permutations, got %d" % len(perms))
        d = len(perms[0])
        if d < 1:
            raise DessinryError("invalid-tuple", "degree must be at least 1")
        for v, p in enumerate(perms):
            if not is_perm(p, d):
                raise DessinryError(
                    "invalid-tuple",
                    "entry %d is not a permutation of 0..%d: %r" % (v, d - 1, p),
                )
        object.__setattr__(self, "perms", perms)

    @property
    def n(self):
        return len(self.perms)

    @property
    def d(self):
        return len(self.perms[0])

    def __eq__(self, other):
        return isinstance(other, MonodromyTuple) and self.perms == other.perms

    def __hash__(self):
        return hash(self.perms)

    def __repr__(self):
        return "MonodromyTuple(%r)" % (self.perms,)

    def __setattr__(self, name, value):
        raise AttributeError("MonodromyTuple is immutable")


def validate(t):
    """Return 'ok', or a diagnostic naming the first violated invariant.

    Total on all structurally sound tuples; never raises.
    """
    prod = compose_all(t.perms, t.d)
    if prod != identity(t.d):
        return "violated: product of the permutations is %r, not the identity" % (prod,)
    reached = [False] * t.d
    reached[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for p in t.perms:
            w = p[v]
            if not reached[w]:
                reached[w] = True
                count += 1
                queue.append(w)
    if count != t.d:
        missing = min(i for i in range(t.d) if not reached[i])
        return "violated: not transitive, sheet %d is not reachable from sheet 0" % missing
    return "ok"


def is_valid(t):
    return validate(t) == "ok"


def _require_valid(t):
    diag = validate(t)
    if diag != "ok":
        raise DessinryError("invalid-tuple", diag)


def canonical_form(t):
    """Lexicographically least relabeling over all breadth-first orders.

    For each base sheet b the fiber is relabeled in breadth-first discovery
    order, probing the generators g_0..g_{n-1} and then their inverses in
    that fixed order.  Transitivity makes each relabeling total, and every
    conjugating permutation is realized by some (b, BFS) choice up to the
    final lexicographic minimum, so two tuples get the same canonical form
    exactly when they are simultaneously conjugate.
    """
    _require_valid(t)
    d = t.d
    gens = list(t.perms) + [inverse(p) for p in t.perms]
    best = None
    for base in range(d):
        lab = [-1] * d
        lab[base] = 0
        nxt = 1
        queue = deque([base])
        while queue:
            v = queue.popleft()
            for g in gens:
                w = g[v]
                if lab[w] < 0:
                    lab[w] = nxt
                    nxt += 1
                    queue.append(w)
        cand = tuple(relabel(p, lab) for p in t.perms)
        if best is None or cand < best:
            best = cand
    return MonodromyTuple(best)


def isomorphic(a, b):
    if a.n != b.n or a.d != b.d:
        return False
    return canonical_form(a).perms == canonical_form(b).perms


def cycle_profile(t):
    """Ramification profile: one partition of d per color, in color order.

    Each partition is sorted descending, e.g. (2, 1, 1) for a simple branch
    point of a degree-4 cover.
    """
    _require_valid(t)
    return tuple(cycle_type(p) for p in t.perms)


def genus(t):
    """Genus of the covering surface, from the Euler characteristic.

    chi = 2d - sum over colors of (d - #cycles); genus = (2 - chi) / 2.
    A fractional or negative result cannot come from a valid tuple, so it is
    reported as an internal error rather than silently rounded.
    """
    _require_valid(t)
    d = t.d
    chi = 2 * d - sum(d - len(cycles(p)) for p in t.perms)
    if chi % 2 != 0:
        raise DessinryError("non-integer-genus", "Euler characteristic %d is odd" % chi)
    g = (2 - chi) // 2
    if g < 0:
        raise DessinryError("non-integer-genus", "negative genus %d" % g)
    return g


def is_normal(t):
    """True when the cover is normal (Galois, regular).

    Equivalent to the generated permutation group having order exactly d;
    transitivity forces order >= d, so the breadth-first closure is cut off
    as soon as it exceeds d elements.
    """
    _require_valid(t)
    d = t.d
    start = identity(d)
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for p in t.perms:
            h = compose(g, p)
            if h not in seen:
                if len(seen) >= d:
                    return False
                seen.add(h)
                queue.append(h)
    assert len(seen) == d
    return True


def orientation_reverse(t):
    """Monodromy of the same cover with the base orientation reversed.

    Reversing orientation inverts every local rotation; re-routing the
    lassos into a positively ordered family again conjugates each inverted
    generator by the suffix product of the later ones:

        g'_0 = g_0^-1,   g'_v = S_v^-1 g_v^-1 S_v   with
        S_v = g_{v+1} ... g_{n-1}  (left-to-right, S_{n-1} = id).

    The total product telescopes back to the identity, so the result is
    again a valid tuple, and applying the map twice lands in the same
    conjugacy class (an involution on isomorphism classes).
    """
    _require_valid(t)
    n, d = t.n, t.d
    suffix = [identity(d)] * n
    for v in range(n - 2, 0, -1):
        suffix[v] = compose(t.perms[v + 1], suffix[v + 1])
    out = [inverse(t.perms[0])]
    for v in range(1, n):
        s = suffix[v]
        out.append(compose(compose(inverse(s), inverse(t.perms[v])), s))
    rev = MonodromyTuple(out)
    assert is_valid(rev)
    return rev


def centralizer_order(t):
    """Order of the simultaneous centralizer of the tuple in Sym(d).

    Brute force over Sym(d); intended for the small degrees where counts of
    marked covers are cross-checked (d <= 7 or so).
    """
    from itertools import permutations

    d = t.d
    count = 0
    for pi in permutations(range(d)):
        if all(relabel(p, pi) == p for p in t.perms):
            count += 1
    return count


def to_json(t):
    """Plain-dict encoding {n, d, perms} with perms[v][i] the image of i."""
    return {"n": t.n, "d": t.d, "perms": [list(p) for p in t.perms]}


def from_json(obj):
    """Inverse of to_json; raises invalid-tuple on malformed input."""
    try:
        n = obj["n"]
        d = obj["d"]
        perms = obj["perms"]
    except (TypeError, KeyError) as exc:
        raise DessinryError("invalid-tuple", "missing field %s" % exc) from None
    if not isinstance(perms, (list, tuple)) or len(perms) != n:
        raise DessinryError("invalid-tuple", "perms length does not match n=%r" % (n,))
    t = MonodromyTuple(perms)
    if t.d != d:
        raise DessinryError("invalid-tuple", "declared d=%r but permutations act on %d points" % (d, t.d))
    return t
