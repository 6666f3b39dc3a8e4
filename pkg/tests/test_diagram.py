import pytest
from hypothesis import given, settings, strategies as st

from altknot import code as gc
from altknot import diagram as dg
from altknot.code import parse_gauss_code

from conftest import W77_SIGNED, knot

TREFOIL_PD = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]


def test_trefoil_shadow_has_five_faces():
    emb = dg.build_embedding(parse_gauss_code("1 2 3 1 2 3"))
    assert emb.face_count() == 5 and emb.is_planar()


def test_w77_has_nine_faces(w77):
    assert dg.build_embedding(w77).face_count() == 9


def test_unrealizable_word():
    with pytest.raises(dg.NotRealizable):
        dg.build_embedding(parse_gauss_code("1 2 1 2"))


def test_empty_code_embeds():
    assert dg.build_embedding(gc.GaussCode(())).n == 0


def test_trefoil_signs_agree():
    emb = dg.build_embedding(gc.assign_alternating(parse_gauss_code("1 2 3 1 2 3")))
    sd = dg.compute_signs(emb)
    assert len(set(sd.epsilon.values())) == 1
    assert abs(sd.writhe) == 3


def test_mirror_and_convention_negate_every_sign(k77):
    eps = dg.compute_signs(k77).epsilon
    neg = {x: -s for x, s in eps.items()}
    assert dg.compute_signs(k77.mirrored()).epsilon == neg
    assert dg.compute_signs(k77.with_convention(-k77.convention)).epsilon == neg


def test_reversal_keeps_signs(k77):
    rev = k77.reversed()
    assert rev.word == tuple(reversed(k77.word[1:] + k77.word[:1]))
    assert dg.compute_signs(rev).epsilon == dg.compute_signs(k77).epsilon


def test_signed_w77_validates_and_round_trips(k77):
    assert k77.to_code().key() == parse_gauss_code(W77_SIGNED).key()


def test_mirror_code_of_w77():
    mirrored = gc.mirror(parse_gauss_code(W77_SIGNED))
    assert mirrored.key() == "U1- O2- U3+ O4+ U5- O6- U4+ O7+ U2- O1- U7+ O3+ U6- O5-"
    dg.validate_signed_code(mirrored)


def test_one_wrong_sign_is_detected():
    bad = W77_SIGNED.replace("O3-", "O3+").replace("U3-", "U3+")
    with pytest.raises(dg.SignMismatch):
        dg.validate_signed_code(parse_gauss_code(bad))


def test_validate_needs_signs(w77):
    with pytest.raises(dg.MissingOU):
        dg.validate_signed_code(w77)


def test_from_pd_trefoil():
    emb = dg.from_pd(TREFOIL_PD)
    assert emb.is_planar()
    code = emb.to_code()
    assert code.is_alternating and len(set(code.signs)) == 1


def test_path_signs_are_opposite_on_the_two_passages(k77):
    for x in k77.crossings:
        p, q = [h for h in k77.passages if h[0] == x]
        assert k77.turn(p, q) == -k77.turn(q, p)


def test_chord_diagram_arrows(k77):
    sd = dg.compute_signs(k77)
    cd = dg.chord_diagram_of(k77)
    assert cd.tails == sd.arrow_tail
    ou = dg.chord_diagram_of(k77, arrows="ou")
    for x, t in ou.tails.items():
        assert k77.is_over(k77.passages[t])


def test_linear_chord_diagram_closes_back(w77):
    cd = dg.build_chord_diagram(w77)
    for cut in range(len(cd.ends)):
        back = dg.to_linear(cd, cut).close()
        assert back.ends == cd.ends


def test_relabeling_keeps_the_diagram(k77):
    mapping = {x: 10 + x for x in k77.crossings}
    r = k77.relabeled(mapping)
    assert r.face_count() == k77.face_count()
    assert r.to_code().key() == k77.to_code().key()


def test_multiple_components_are_reported():
    # two crossings joined as a Hopf link
    link = {(1, 0): (2, 3), (1, 1): (2, 2), (1, 2): (2, 1), (1, 3): (2, 0)}
    link |= {v: k for k, v in link.items()}
    emb = dg.EmbeddedDiagram(link, (1, 0))
    with pytest.raises(dg.MultipleComponents):
        emb.passages


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.data())
def test_every_embedding_found_is_planar_and_realizes_the_word(n, data):
    words = gc.word_classes(n)
    w = data.draw(st.sampled_from(words))
    for emb in dg.planar_embeddings(w):
        assert emb.face_count() == n + 2
        assert gc.canonicalize(gc.from_letters(emb.word)) == gc.canonicalize(w)


@pytest.mark.parametrize("name", ["3_1", "4_1", "7_7", "8_17", "10_71"])
def test_catalog_entries_have_consistent_embeddings(name):
    emb = knot(name)
    assert emb.is_planar()
    assert emb.to_code().is_alternating
