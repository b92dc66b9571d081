"""Square tilings by alternating white and grey unit squares (n = 4 case).

A bipartite origami is a surface glued from m white and m grey unit
squares, where each white edge is glued to a grey edge of the matching
kind: white-right to grey-left (R), white-left to grey-right (L),
white-upper to grey-upper (U), white-lower to grey-lower (D).  The four
gluing bijections White -> Grey determine the surface; its corners carry
four vertex colors (0 lower-left of a white square, 1 lower-right, 2
upper-right, 3 upper-left), and walking the squares around a vertex of
color v induces a permutation g_v of the white squares.  This identifies
bipartite origamis with monodromy tuples of shape (4, m).

Corner tracing gives the closed forms (apply the inner map first):

    g_0 = D^-1 L,   g_1 = R^-1 D,   g_2 = U^-1 R,   g_3 = L^-1 U,

whose product telescopes to the identity.  The inverse construction
relabels grey squares so that D = id.

The two shear rewrites delta_hor and delta_ver cut every square along a
diagonal line of slope 1/2 (resp. 2), reassemble the pieces, and restretch
to unit squares; combinatorially they act directly on (R, L, U, D), with
the new white squares indexed by the old grey ones.  The absolute shear
direction is pinned by a gate test on a six-square pair whose two members
are related by delta_hor but are not isomorphic (see tests/data/
shear_gate_pair.json); the inverse rewrites undo the forward ones exactly,
not merely up to isomorphism.
"""

from collections import deque

from .braid import OrbitResult
from .core import MonodromyTuple, canonical_form, validate
from .errors import DessinryError
from .perms import compose, identity, inverse, is_perm


class BipartiteOrigami:
    """Gluing data (R, L, U, D) on m white and m grey squares.

    Structural demands (equal lengths, entries in range) are enforced at
    construction; bijectivity and connectivity are semantic and live in
    validate_origami, so defective gluings can be built and diagnosed.
    """

    __slots__ = ("R", "L", "U", "D")

    def __init__(self, R, L, U, D):
        maps = []
        m = len(R)
        if m < 1:
            raise DessinryError("invalid-origami", "need at least one square")
        for label, seq in (("R", R), ("L", L), ("U", U), ("D", D)):
            seq = tuple(seq)
            if len(seq) != m:
                raise DessinryError("invalid-origami", "%s has length %d, expected %d" % (label, len(seq), m))
            for x in seq:
                if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < m:
                    raise DessinryError("invalid-origami", "%s contains %r, not a grey index below %d" % (label, x, m))
            maps.append(seq)
        self.R, self.L, self.U, self.D = maps

    @property
    def m(self):
        return len(self.R)

    def __eq__(self, other):
        return isinstance(other, BipartiteOrigami) and (self.R, self.L, self.U, self.D) == (
            other.R,
            other.L,
            other.U,
            other.D,
        )

    def __hash__(self):
        return hash((self.R, self.L, self.U, self.D))

    def __repr__(self):
        return "BipartiteOrigami(R=%r, L=%r, U=%r, D=%r)" % (self.R, self.L, self.U, self.D)


def validate_origami(o):
    """'ok', or a diagnostic naming the violated gluing condition."""
    m = o.m
    for label, seq in (("R", o.R), ("L", o.L), ("U", o.U), ("D", o.D)):
        if not is_perm(seq, m):
            return "violated: %s is not a bijection onto the grey squares" % label
    # Gluing graph on 2m squares: white w is node w, grey g is node m + g.
    seen = [False] * (2 * m)
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        if v < m:
            nbrs = (m + o.R[v], m + o.L[v], m + o.U[v], m + o.D[v])
        else:
            g = v - m
            nbrs = tuple(w for w in range(m) if g in (o.R[w], o.L[w], o.U[w], o.D[w]))
        for w in nbrs:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    if count != 2 * m:
        return "violated: gluing graph is not connected"
    return "ok"


def _require_valid_origami(o):
    diag = validate_origami(o)
    if diag != "ok":
        raise DessinryError("invalid-origami", diag)


def origami_to_dessin(o):
    """Monodromy tuple on the white squares, one permutation per corner color."""
    _require_valid_origami(o)
    Rinv, Linv, Uinv, Dinv = inverse(o.R), inverse(o.L), inverse(o.U), inverse(o.D)
    g0 = compose(o.L, Dinv)
    g1 = compose(o.D, Rinv)
    g2 = compose(o.R, Uinv)
    g3 = compose(o.U, Linv)
    t = MonodromyTuple([g0, g1, g2, g3])
    assert validate(t) == "ok"
    return t


def dessin_to_origami(t):
    """Origami carrying the given 4-colored tuple; grey labels fixed by D = id."""
    diag = validate(t)
    if diag != "ok":
        raise DessinryError("invalid-tuple", diag)
    if t.n != 4:
        raise DessinryError("invalid-tuple", "need exactly 4 colors, got n=%d" % t.n)
    g0, g1, g2, _ = t.perms
    R = inverse(g1)
    L = g0
    U = compose(inverse(g2), inverse(g1))
    D = identity(t.d)
    o = BipartiteOrigami(R, L, U, D)
    assert validate_origami(o) == "ok"
    return o


def isomorphic_origami(a, b):
    if a.m != b.m:
        return False
    return canonical_form(origami_to_dessin(a)) == canonical_form(origami_to_dessin(b))


def canonical_origami(o):
    """Canonical representative of the relabeling class; idempotent."""
    return dessin_to_origami(canonical_form(origami_to_dessin(o)))


def delta_hor(o):
    """Horizontal shear rewrite; new white squares are the old grey ones."""
    _require_valid_origami(o)
    Rinv, Linv = inverse(o.R), inverse(o.L)
    return BipartiteOrigami(
        Linv,
        Rinv,
        tuple(Rinv[o.U[Linv[g]]] for g in range(o.m)),
        tuple(Linv[o.D[Rinv[g]]] for g in range(o.m)),
    )


def delta_hor_inv(o):
    _require_valid_origami(o)
    Rinv, Linv = inverse(o.R), inverse(o.L)
    return BipartiteOrigami(
        Linv,
        Rinv,
        tuple(Linv[o.U[Rinv[g]]] for g in range(o.m)),
        tuple(Rinv[o.D[Linv[g]]] for g in range(o.m)),
    )


def delta_ver(o):
    """Vertical shear rewrite; new white squares are the old grey ones."""
    _require_valid_origami(o)
    Uinv, Dinv = inverse(o.U), inverse(o.D)
    return BipartiteOrigami(
        tuple(Uinv[o.R[Dinv[g]]] for g in range(o.m)),
        tuple(Dinv[o.L[Uinv[g]]] for g in range(o.m)),
        Dinv,
        Uinv,
    )


def delta_ver_inv(o):
    _require_valid_origami(o)
    Uinv, Dinv = inverse(o.U), inverse(o.D)
    return BipartiteOrigami(
        tuple(Dinv[o.R[Uinv[g]]] for g in range(o.m)),
        tuple(Uinv[o.L[Dinv[g]]] for g in range(o.m)),
        Dinv,
        Uinv,
    )


DELTA_OPS = {
    "hor": delta_hor,
    "ver": delta_ver,
    "hor-inv": delta_hor_inv,
    "ver-inv": delta_ver_inv,
}


def origami_orbit(o):
    """Closure of the class of o under both shears and their inverses.

    Elements are canonical origamis sorted by their gluing data; the log
    lists (source index, op name, target index) for every element and op.
    """
    start = canonical_origami(o)
    found = {start: start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for op_name in ("hor", "ver", "hor-inv", "ver-inv"):
            img = canonical_origami(DELTA_OPS[op_name](cur))
            if img not in found:
                found[img] = img
                queue.append(img)
    elements = sorted(found, key=lambda x: (x.R, x.L, x.U, x.D))
    index = {x: k for k, x in enumerate(elements)}
    log = []
    for k, x in enumerate(elements):
        for op_name in ("hor", "ver", "hor-inv", "ver-inv"):
            img = canonical_origami(DELTA_OPS[op_name](x))
            log.append((k, op_name, index[img]))
    return OrbitResult((start,), tuple(elements), tuple(log))


def origami_to_json(o):
    return {"m": o.m, "R": list(o.R), "L": list(o.L), "U": list(o.U), "D": list(o.D)}


def origami_from_json(obj):
    try:
        m = obj["m"]
        maps = [obj[k] for k in ("R", "L", "U", "D")]
    except (TypeError, KeyError) as exc:
        raise DessinryError("invalid-origami", "missing field %s" % exc) from None
    o = BipartiteOrigami(*maps)
    if o.m != m:
        raise DessinryError("invalid-origami", "declared m=%r but maps have length %d" % (m, o.m))
    return o


def chessboard_origami():
    """Two whites and two greys in a checker pattern, opposite sides glued.

    The unique connected double cover of the one-square origami branched at
    all four corners; every corner permutation is the transposition."""
    return BipartiteOrigami((0, 1), (0, 1), (1, 0), (1, 0))


def pillowcase_origami():
    """One white and one grey square, the degree-one base object."""
    return BipartiteOrigami((0,), (0,), (0,), (0,))
