import pytest
from hypothesis import given
from hypothesis import strategies as st

from zzgraph import (Arrow, FiltrationError, Simplex, ZigzagFiltration, format_filtration,
                     generate_random, parse_filtration, validate)
from zzgraph.generate import GeneratorConfig

MODELS = ["dynamic-er", "insert-heavy", "churn"]


def test_simplex_sorted_and_canonical():
    assert Simplex.of(3, 1) == Simplex.of(1, 3)
    assert Simplex.of(2, 0, 1).verts == (0, 1, 2)
    assert Simplex.of(4, 2).kind == "edge"
    assert {f.verts for f in Simplex.of(0, 1, 2).faces()} == {(1, 2), (0, 2), (0, 1)}


@pytest.mark.parametrize("verts", [(), (1, 1), (-1,), (0, 1, 2, 3, 4)])
def test_simplex_rejects_bad_vertex_tuples(verts):
    with pytest.raises(ValueError):
        Simplex(verts)


def test_add_then_remove_mirror():
    text = "# mirror\n+v 0\n+v 1\n+e 0 1\n-e 0 1\n-v 1\n-v 0\n"
    filt = parse_filtration(text)
    assert filt.m == 6
    assert [a.forward for a in filt.arrows] == [True, True, True, False, False, False]
    assert list(filt.snapshots())[-1] == frozenset()


def test_unicode_minus_and_spaced_sign_parse_alike():
    a = parse_filtration("+ v 0\n− v 0\n")
    b = parse_filtration("+v 0\n-v 0\n")
    assert a == b


def test_dangling_face_rejected():
    with pytest.raises(FiltrationError, match="dangling face at arrow 1") as info:
        parse_filtration("+ e 0 1\n")
    assert info.value.arrow == 1
    assert info.value.reason == "dangling face"


@pytest.mark.parametrize("text, reason, arrow", [
    ("+v 0\n+v 0\n", "duplicate add", 2),
    ("+v 0\n-v 1\n", "delete-missing", 2),
    ("+v 0\n+v 1\n+e 0 1\n-v 0\n", "delete-with-coface", 4),
    ("dim 2\n+v 0\n+v 1\n+v 2\n+e 0 1\n+e 1 2\n+t 0 1 2\n", "dangling face", 6),
])
def test_closure_violations_name_arrow_and_reason(text, reason, arrow):
    with pytest.raises(FiltrationError) as info:
        parse_filtration(text)
    assert info.value.reason == reason
    assert info.value.arrow == arrow


@pytest.mark.parametrize("text", ["+ x 0\n", "+ v\n", "dim 7\n", "+ e 0 1 2\n", "coord 0 1\n"])
def test_syntax_errors_carry_line_numbers(text):
    with pytest.raises(FiltrationError) as info:
        parse_filtration("# header\n" + text)
    assert info.value.line == 2
    assert info.value.reason == "syntax"


def test_declared_vertex_count_is_enforced():
    with pytest.raises(FiltrationError, match="exceeds"):
        parse_filtration("vertices 2\n+v 5\n")


def test_fig3_transcription_accepted(fig3):
    assert fig3.m == 10
    assert fig3.vertex_ids() == [0, 1, 2, 3]


def test_embedded_header_and_initial_complex():
    text = "dim 2\ncoord 0 0 0\ncoord 1 4 0\ninit v 0\ninit v 1\ninit e 0 1\n- e 0 1\nnop\n"
    filt = parse_filtration(text)
    assert filt.dim == 2
    assert filt.coords == {0: (0, 0), 1: (4, 0)}
    assert len(filt.initial) == 3
    assert filt.arrows[1].is_noop
    assert parse_filtration(format_filtration(filt)) == filt


def test_generate_empty_and_forced():
    assert generate_random(5, 0, 7).m == 0
    forced = generate_random(1, 2, 1, "churn")
    assert [str(a) for a in forced.arrows] == ["+ v 0", "- v 0"]


@pytest.mark.parametrize("model", MODELS)
def test_generate_is_valid_and_reproducible(model):
    a = generate_random(12, 40, 42, model)
    validate(a)
    assert a.m == 40
    assert format_filtration(a) == format_filtration(generate_random(12, 40, 42, model))


def test_generate_models_differ_in_mix():
    fwd = {m: sum(a.forward for a in generate_random(30, 2000, 3, m).arrows) for m in MODELS}
    assert fwd["insert-heavy"] > fwd["dynamic-er"]


@pytest.mark.parametrize("kw", [dict(n_vertices=0, m=3, seed=1, model="churn"),
                                dict(n_vertices=3, m=-1, seed=1, model="churn"),
                                dict(n_vertices=3, m=3, seed=1, model="nope")])
def test_generator_config_rejects_bad_parameters(kw):
    with pytest.raises(ValueError):
        GeneratorConfig(**kw)


@given(n=st.integers(1, 10), m=st.integers(0, 60), seed=st.integers(0, 2**32),
       model=st.sampled_from(MODELS))
def test_generated_filtrations_replay_and_round_trip(n, m, seed, model):
    filt = generate_random(n, m, seed, model)
    validate(filt)
    assert filt.m == m
    text = format_filtration(filt)
    again = parse_filtration(text)
    assert again == filt
    assert format_filtration(again) == text


def test_skeleton_and_prefix_keep_indices():
    filt = parse_filtration("dim 2\n+v 0\n+v 1\n+v 2\n+e 0 1\n+e 1 2\n+e 0 2\n+t 0 1 2\n")
    sk = filt.skeleton(1)
    assert sk.m == filt.m and sk.arrows[-1].is_noop
    assert filt.prefix(3).m == 3
    assert ZigzagFiltration((Arrow(True, None),)).m == 1
