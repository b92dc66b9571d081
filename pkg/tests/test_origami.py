"""Bipartite square tilings, corner tracing, and the shear rewrites."""

import pytest

from dessinry import core
from dessinry.core import MonodromyTuple
from dessinry.enumeration import enumerate_classes
from dessinry.errors import DessinryError
from dessinry.origami import (
    DELTA_OPS,
    BipartiteOrigami,
    canonical_origami,
    chessboard_origami,
    delta_hor,
    delta_hor_inv,
    delta_ver,
    delta_ver_inv,
    dessin_to_origami,
    isomorphic_origami,
    origami_from_json,
    origami_orbit,
    origami_to_dessin,
    origami_to_json,
    pillowcase_origami,
    validate_origami,
)

# Six-square example: three whites, three greys, a nontrivial shear image.
SIX_A = BipartiteOrigami((1, 2, 0), (0, 1, 2), (1, 0, 2), (1, 0, 2))
SIX_B = BipartiteOrigami((1, 2, 0), (0, 1, 2), (1, 0, 2), (0, 2, 1))


class TestConstruction:
    def test_rejects_empty(self):
        with pytest.raises(DessinryError) as exc:
            BipartiteOrigami((), (), (), ())
        assert exc.value.code == "invalid-origami"

    def test_rejects_ragged_lengths(self):
        with pytest.raises(DessinryError):
            BipartiteOrigami((0, 1), (0,), (0, 1), (0, 1))

    def test_rejects_out_of_range(self):
        with pytest.raises(DessinryError):
            BipartiteOrigami((0, 2), (0, 1), (0, 1), (0, 1))

    def test_rejects_bool_entries(self):
        with pytest.raises(DessinryError):
            BipartiteOrigami((0, True), (0, 1), (0, 1), (0, 1))

    def test_non_bijection_constructs_but_fails_validate(self):
        o = BipartiteOrigami((0, 0), (0, 1), (0, 1), (0, 1))
        assert "R is not a bijection" in validate_origami(o)

    def test_disconnected_gluing(self):
        o = BipartiteOrigami((0, 1), (0, 1), (0, 1), (0, 1))
        assert validate_origami(o) == "violated: gluing graph is not connected"

    def test_valid_examples(self):
        for o in (chessboard_origami(), pillowcase_origami(), SIX_A, SIX_B):
            assert validate_origami(o) == "ok"


class TestCornerTracing:
    def test_chessboard_corners_are_transpositions(self):
        t = origami_to_dessin(chessboard_origami())
        assert t.perms == ((1, 0), (1, 0), (1, 0), (1, 0))

    def test_pillowcase_is_degree_one(self):
        t = origami_to_dessin(pillowcase_origami())
        assert t.d == 1 and core.genus(t) == 0

    def test_six_square_corners(self):
        assert origami_to_dessin(SIX_A).perms == ((1, 0, 2), (0, 2, 1), (0, 2, 1), (1, 0, 2))
        assert origami_to_dessin(SIX_B).perms == ((0, 2, 1), (2, 1, 0), (0, 2, 1), (1, 0, 2))

    def test_invalid_origami_refused(self):
        with pytest.raises(DessinryError):
            origami_to_dessin(BipartiteOrigami((0, 0), (0, 1), (0, 1), (0, 1)))


class TestRoundtrip:
    def test_tuple_roundtrip_is_exact(self):
        for res in (enumerate_classes(4, 2), enumerate_classes(4, 3)):
            for cls in res.classes:
                t = cls.canonical
                assert origami_to_dessin(dessin_to_origami(t)) == t

    def test_origami_roundtrip_preserves_class(self):
        for o in (chessboard_origami(), SIX_A, SIX_B):
            back = dessin_to_origami(origami_to_dessin(o))
            assert isomorphic_origami(back, o)

    def test_dessin_to_origami_needs_four_colors(self):
        t = MonodromyTuple([(1, 0), (1, 0), (0, 1)])
        with pytest.raises(DessinryError):
            dessin_to_origami(t)

    def test_canonical_origami_idempotent(self):
        for o in (SIX_A, SIX_B, chessboard_origami()):
            c = canonical_origami(o)
            assert canonical_origami(c) == c
            assert isomorphic_origami(c, o)


class TestShears:
    def test_explicit_horizontal_image(self):
        img = delta_hor(SIX_A)
        assert (img.R, img.L, img.U, img.D) == ((0, 1, 2), (2, 0, 1), (0, 2, 1), (2, 1, 0))

    def test_inverses_undo_exactly(self):
        for o in (chessboard_origami(), SIX_A, SIX_B):
            assert delta_hor_inv(delta_hor(o)) == o
            assert delta_hor(delta_hor_inv(o)) == o
            assert delta_ver_inv(delta_ver(o)) == o
            assert delta_ver(delta_ver_inv(o)) == o

    def test_shears_fix_chessboard(self):
        o = chessboard_origami()
        assert delta_hor(o) == o
        assert delta_ver(o) == o

    def test_images_stay_valid_and_preserve_invariants(self):
        for o in (SIX_A, SIX_B):
            t = origami_to_dessin(o)
            for op in DELTA_OPS.values():
                img = op(o)
                assert validate_origami(img) == "ok"
                assert img.m == o.m
                ti = origami_to_dessin(img)
                assert core.genus(ti) == core.genus(t)
                # Shears conjugate each corner permutation, color by color.
                assert core.cycle_profile(ti) == core.cycle_profile(t)

    def test_gate_pair(self, gate_pair):
        first, second = gate_pair
        a = BipartiteOrigami(first["R"], first["L"], first["U"], first["D"])
        b = BipartiteOrigami(second["R"], second["L"], second["U"], second["D"])
        assert isomorphic_origami(delta_hor(a), b)
        assert not isomorphic_origami(a, b)


class TestOrbit:
    def test_six_square_orbit(self):
        res = origami_orbit(SIX_A)
        assert len(res.elements) == 4
        assert len(res.generator_log) == 16
        names = {name for _, name, _ in res.generator_log}
        assert names == {"hor", "ver", "hor-inv", "ver-inv"}
        for src, _, dst in res.generator_log:
            assert 0 <= src < 4 and 0 <= dst < 4

    def test_orbit_contains_both_gate_members(self):
        res = origami_orbit(SIX_A)
        assert canonical_origami(SIX_B) in res.elements

    def test_orbit_elements_canonical(self):
        res = origami_orbit(SIX_B)
        for o in res.elements:
            assert canonical_origami(o) == o

    def test_chessboard_orbit_is_a_point(self):
        res = origami_orbit(chessboard_origami())
        assert len(res.elements) == 1


class TestJson:
    def test_roundtrip(self):
        obj = origami_to_json(SIX_A)
        assert obj["m"] == 3
        assert origami_from_json(obj) == SIX_A

    def test_missing_field(self):
        with pytest.raises(DessinryError):
            origami_from_json({"m": 2, "R": [0, 1], "L": [0, 1], "U": [1, 0]})

    def test_declared_size_mismatch(self):
        with pytest.raises(DessinryError):
            origami_from_json({"m": 5, "R": [0, 1], "L": [0, 1], "U": [1, 0], "D": [1, 0]})
