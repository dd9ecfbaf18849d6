import pytest
from hypothesis import given, settings, strategies as st

from conftest import pres
from orelt import fixtures
from orelt.cli.formats import parse_certificate, parse_gog
from orelt.cli.syntax import parse_presentation
from orelt.errors import CertificateError, StructuralError
from orelt.gog import (AddGenerator, CyclicShiftRelator, Edge, GraphOfGroups, InvertGenerator, InvertRelator,
                       RemoveGenerator, RenameGenerators, ReplaceRelatorByProduct, Vertex, apply_certificate,
                       find_certificate, fundamental_group, spanning_trees, validate, verify_isomorphic)
from orelt.presentation import Presentation
from orelt.quotients import Status
from orelt.words import Word


def load(name):
    return parse_gog(fixtures.read(name))


def as_pres(name):
    P = parse_presentation(fixtures.read(name))
    return P if isinstance(P, Presentation) else P.to_presentation()


def test_bundled_graphs_validate():
    for name in ("fig1.gog", "fig1_corrected.gog", "fig2.gog"):
        v = validate(load(name))
        assert v.status is Status.PROVEN_TRUE, (name, v.certificate)


def test_fig1_pi1_literal_maps():
    P = fundamental_group(load("fig1.gog"))
    assert P.names == ("b", "c", "s")
    assert P.same_as(as_pres("fig1_pi1.pres"))


def test_fig2_pi1_is_the_amalgam():
    assert fundamental_group(load("fig2.gog")).same_as(as_pres("fig2_amalgam.pres"))


def test_single_vertex():
    P = pres("a b; [a, b]^3").to_presentation()
    G = GraphOfGroups([Vertex("v", P)], [])
    assert fundamental_group(G).same_as(P)


def test_dangling_edge():
    P = Presentation(("x",), ())
    with pytest.raises(StructuralError):
        GraphOfGroups([Vertex("v", P)], [Edge("e", "v", "w", [[1]], [[1]])])


def _dihedral_graph():
    rigid = pres("b c; (b c^2)^2").to_presentation()
    dih = Presentation(("p", "q"), (Word([1, 1]), Word([2, 2])))
    imgs = [[1, 2, 2], [2, 1, 2, 2, -2]]
    vs = [Vertex("r1", rigid), Vertex("d", dih, "elementary-dihedral"), Vertex("r2", rigid)]
    es = [Edge("e1", "r1", "d", imgs, [[1], [2]], "dihedral"),
          Edge("e2", "d", "r2", [[1], [2]], imgs, "dihedral")]
    return GraphOfGroups(vs, es, jsj=True)


def test_degree_two_dihedral_vertex_is_a_violation():
    v = validate(_dihedral_graph())
    assert v.status is Status.PROVEN_FALSE
    assert any("dihedral vertex d has degree 2" in s for s in v.certificate["violations"])


def test_trivial_edge_image_is_a_violation():
    G = load("fig1.gog")
    e = G.edges[1]
    bad = GraphOfGroups(G.vertices, (G.edges[0], Edge(e.id, e.u, e.v, e.images_u, [[1, 2, 2, 1, 2, 2]],
                                                         tree=False)), jsj=True)
    v = validate(bad)
    assert v.status is Status.PROVEN_FALSE


def test_abelianization_independent_of_spanning_tree():
    for name in ("fig1.gog", "fig1_corrected.gog"):
        G = load(name)
        invariants = {fundamental_group(T, collapse=False).abelian_invariants() for T in spanning_trees(G)}
        assert len(invariants) == 1
        collapsed = {fundamental_group(T).abelian_invariants() for T in spanning_trees(G)}
        assert collapsed == invariants


def test_spec_tietze_example():
    P = Presentation(("b", "c", "t"), (Word([1, 2, 2, 1, 2, 2]), Word([-3, 2, 3, 1])))
    Q = apply_certificate(P, [RemoveGenerator("b", 1)])
    assert Q.same_as(Presentation(("c", "t"), ((Word([-2, -1, 2, 1, 1]) ** 2),)))
    R = apply_certificate(Q, [RenameGenerators(("c", "t"), ("a", "t"))])
    assert R.same_as(as_pres("fig1_target.pres"))


def test_empty_certificate_and_rename():
    P = pres("a b; (a b^2)^2").to_presentation()
    assert verify_isomorphic(P, P, [])
    Q = apply_certificate(P, [RenameGenerators(("b", "a"), ("a", "b"))])
    assert Q.relators == (Word([2, 1, 1, 2, 1, 1]),)


def test_non_isomorphic_cyclic_groups():
    P, Q = pres("a; a^2"), pres("a; a^3")
    assert not verify_isomorphic(P.to_presentation(), Q, [])
    assert not verify_isomorphic(P.to_presentation(), Q, [InvertGenerator("a")])
    assert find_certificate(P, Q) is None


def test_bad_move_names_index():
    P = pres("a b; (a b)^2").to_presentation()
    with pytest.raises(CertificateError, match="move 1"):
        apply_certificate(P, [InvertGenerator("a"), RemoveGenerator("z", 0)])
    assert not verify_isomorphic(P, P, [RemoveGenerator("a", 0)])


def test_fig2_certificate_search_recovers_bundled():
    src = fundamental_group(load("fig2.gog"))
    cert = find_certificate(src, as_pres("fig2_target.pres"))
    bundled = parse_certificate(fixtures.read("fig2.cert"))
    assert cert[:len(bundled)] == bundled
    assert all(isinstance(mv, RenameGenerators) for mv in cert[len(bundled):])


names = st.sampled_from(["a", "b", "c"])
words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=5)


def _move(draw_kind, i, j, w, nm, sign, k):
    if draw_kind == 0:
        return AddGenerator("z", Word(w))
    if draw_kind == 1:
        return ReplaceRelatorByProduct(i, Word(w), j, sign)
    if draw_kind == 2:
        return CyclicShiftRelator(i, k)
    if draw_kind == 3:
        return InvertRelator(i)
    if draw_kind == 4:
        return InvertGenerator(nm)
    return RenameGenerators(("c", "a", "b"))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 5), st.integers(0, 1), st.integers(0, 1), words, names, st.sampled_from([1, -1]),
       st.integers(0, 7))
def test_tietze_moves_preserve_abelianization(kind, i, j, w, nm, sign, k):
    P = Presentation(("a", "b", "c"), (Word([1, 2, 1, 2, 3]), Word([3, 3, -1])))
    mv = _move(kind, i, j, w, nm, sign, k)
    try:
        Q = apply_certificate(P, [mv])
    except CertificateError:
        assume_ok = kind == 1 and i == j
        assert assume_ok
        return
    assert Q.abelian_invariants() == P.abelian_invariants()
