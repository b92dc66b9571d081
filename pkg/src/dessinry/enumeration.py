"""Exhaustive enumeration of monodromy tuples of given shape (n, d).

Covers of the sphere with n ordered branch points and degree d fall into
finitely many isomorphism classes; this module lists them all.  The smart
path fixes g_0 to one representative per cycle type (every class contains
such a tuple, since conjugating the whole tuple moves g_0 through its
conjugacy class), runs over all choices of g_1..g_{n-2}, and forces
g_{n-1} through the product constraint.  A naive scan over all n-1 free
slots is kept as a correctness oracle for tiny sizes.

Two independent counting oracles accompany the enumeration: a direct count
of valid labeled tuples, and Hall's recursion for the number of finite
index subgroups of a free group, linked by

    count_transitive_tuples(n, d) = hall_count(n-1, d) * (d-1)!
"""

from itertools import permutations, product
from math import factorial

from .core import (
    MonodromyTuple,
    canonical_form,
    centralizer_order,
    cycle_profile,
    genus,
    is_normal,
)
from .errors import DessinryError
from .perms import acts_transitively, compose, from_cycles, identity, inverse

# Hard ceiling on the number of candidate tuples either search path may
# visit.  Keeps n=3 d<=6 and n=4 d<=4 comfortably inside (the documented
# support) while refusing runaway requests.
WORK_LIMIT = 2_000_000


class DessinClass:
    """One isomorphism class: canonical tuple plus its basic invariants."""

    __slots__ = ("canonical", "genus", "profile", "normal")

    def __init__(self, canonical_tuple):
        self.canonical = canonical_tuple
        self.genus = genus(canonical_tuple)
        self.profile = cycle_profile(canonical_tuple)
        self.normal = is_normal(canonical_tuple)

    def __eq__(self, other):
        return isinstance(other, DessinClass) and self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return "DessinClass(%r, genus=%d)" % (self.canonical.perms, self.genus)


class EnumerationResult:
    __slots__ = ("n", "d", "classes", "marked_count")

    def __init__(self, n, d, classes, marked_count):
        self.n = n
        self.d = d
        self.classes = classes
        self.marked_count = marked_count


def _check_shape(n, d):
    if not isinstance(n, int) or not isinstance(d, int) or n < 3 or d < 1:
        raise DessinryError("bound-exceeded", "need integers n >= 3 and d >= 1, got n=%r d=%r" % (n, d))


def hall_count(r, d):
    """Number of index-d subgroups of a free group of rank r.

    Hall's recursion, exact integer arithmetic:
        N_1 = 1,
        N_d = d*(d!)^(r-1) - sum_{i=1}^{d-1} ((d-i)!)^(r-1) * N_i.
    """
    if not isinstance(r, int) or not isinstance(d, int) or r < 1 or d < 1:
        raise DessinryError("bound-exceeded", "need integers r >= 1 and d >= 1, got r=%r d=%r" % (r, d))
    counts = [0, 1]
    for k in range(2, d + 1):
        total = k * factorial(k) ** (r - 1)
        for i in range(1, k):
            total -= factorial(k - i) ** (r - 1) * counts[i]
        counts.append(total)
    return counts[d]


def count_transitive_tuples(n, d):
    """Number of valid labeled tuples of shape (n, d), by direct scan.

    Runs over all (g_0, ..., g_{n-2}) and forces the last entry, so the
    product constraint holds by construction; only transitivity is tested.
    """
    _check_shape(n, d)
    work = factorial(d) ** (n - 1)
    if work > WORK_LIMIT:
        raise DessinryError(
            "bound-exceeded",
            "direct count would visit %d tuples (limit %d)" % (work, WORK_LIMIT),
        )
    perms_all = list(permutations(range(d)))
    ident = identity(d)
    count = 0
    for head in product(perms_all, repeat=n - 1):
        running = ident
        for p in head:
            running = compose(running, p)
        tail = inverse(running)
        if acts_transitively(head + (tail,), d):
            count += 1
    return count


def _partitions_desc(d):
    """All partitions of d, parts descending, in lexicographic order."""
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(d, d, [])
    return out


def _type_representative(d, partition):
    """A permutation with the given cycle type, on consecutive blocks."""
    cycs = []
    start = 0
    for size in partition:
        cycs.append(tuple(range(start, start + size)))
        start += size
    return from_cycles(d, cycs)


def enumerate_classes(n, d, method="reps"):
    """All isomorphism classes of shape (n, d), sorted by canonical encoding.

    method="reps" fixes g_0 per cycle type (the default); method="naive"
    scans every choice of g_0 as well and exists as a test oracle.
    """
    _check_shape(n, d)
    if method not in ("reps", "naive"):
        raise DessinryError("bound-exceeded", "unknown method %r" % (method,))
    n_types = len(_partitions_desc(d))
    heads = n_types if method == "reps" else factorial(d)
    work = heads * factorial(d) ** (n - 2)
    if work > WORK_LIMIT:
        raise DessinryError(
            "bound-exceeded",
            "enumeration would visit %d tuples (limit %d)" % (work, WORK_LIMIT),
        )

    perms_all = list(permutations(range(d)))
    if method == "reps":
        firsts = [_type_representative(d, part) for part in _partitions_desc(d)]
    else:
        firsts = perms_all

    seen = {}
    for g0 in firsts:
        for middle in product(perms_all, repeat=n - 2):
            running = g0
            for p in middle:
                running = compose(running, p)
            tail = inverse(running)
            all_perms = (g0,) + middle + (tail,)
            if not acts_transitively(all_perms, d):
                continue
            canon = canonical_form(MonodromyTuple(all_perms))
            if canon.perms not in seen:
                seen[canon.perms] = canon

    classes = []
    marked = 0
    # Genus is maximal when every color acts as a single d-cycle.
    bound = (n * (d - 1)) // 2 - d + 1
    for key in sorted(seen):
        cls = DessinClass(seen[key])
        assert cls.genus <= bound, "genus exceeds the single-cycle bound"
        classes.append(cls)
        marked += factorial(d) // centralizer_order(cls.canonical)
    return EnumerationResult(n, d, tuple(classes), marked)
