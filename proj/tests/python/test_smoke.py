import pytest

import iasl


def test_parse_and_shape():
    g = iasl.parse_graph("a b\na c\na d\n")
    assert len(g) == 4
    assert g.vertices == ["a", "b", "c", "d"]
    assert ("a", "b") in g.edges
    s = iasl.shape(g)
    assert s["is_star"]
    assert s["center"] == "a"
    assert s["pendant_vertices"] == ["b", "c", "d"]


def test_sumset():
    assert iasl.sumset("0,1", "0,2") == "0,1,2,3"
    assert iasl.sumset("1,2", "3") == "4,5"
    with pytest.raises(iasl.InputError):
        iasl.sumset("", "1")


def test_classify_filtered_star():
    g = iasl.parse_graph("a b\na c\na d\n")
    f = iasl.parse_labeling("ground: 0,1,2\na: 0\nb: 0,1\nc: 0,2\nd: 0,1,2\n", g)
    assert f.ground == "0,1,2"
    report = iasl.classify(g, f)
    assert report["iasfl"] is True
    assert report["tiasl"] is True
    assert report["iasgl"] == {"value": False, "witness": report["iasgl"]["witness"]}
    assert report["uniform_k"] is None


def test_verify_tolerates_bad_labelings():
    g = iasl.parse_graph("a b\n")
    f = iasl.parse_labeling("a: 1\nb: 1\n", g)
    report = iasl.verify(g, f)
    assert report["iasl"]["value"] is False
    with pytest.raises(iasl.InputError):
        iasl.classify(g, f)


def test_build_max_and_chain():
    g, f = iasl.build_max_iasf_graph("0,1,2")
    assert len(g) == 4
    assert f.items()["0_1_2"] == "0,1,2"
    assert iasl.extract_chain(f, "0,2") == ["0", "0,2", "0,1,2"]


def test_search():
    p3 = iasl.parse_graph("a b\nb c\n")
    res = iasl.search(p3)
    assert res["status"] == "unsat"
    assert res["reason"].startswith("order 3")

    k2 = iasl.parse_graph("a b\n")
    res = iasl.search(k2, bound=6)
    assert res["status"] == "sat"
    assert res["witness"]["assignment"] == {"a": "0", "b": "0,1"}


def test_trivial_round_trip():
    g = iasl.parse_graph("a b\nb c\n")
    f = iasl.make_trivial(g, "indexer")
    report = iasl.classify(g, f)
    assert report["iasl"] is True
    assert report["iasi"] is True
    back = iasl.parse_labeling(f.to_text(g), g)
    assert back.items() == f.items()


def test_enumerate_count():
    k2 = iasl.parse_graph("a b\n")
    assert iasl.enumerate_count(k2, "0,1", "iasl") == 4
    assert iasl.enumerate_count(k2, "0,1", "iasfl") == 2


def test_theorem_suite():
    report = iasl.run_theorem_suite(2)
    assert report["all_pass"] is True
    assert len(report["items"]) == 10
