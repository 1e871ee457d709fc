import json

import pytest

from residua import named
from residua.errors import InputError
from residua.io import (
    corpus_names,
    format_group_file,
    load_corpus,
    load_expected,
    parse_group_text,
    parse_subgroup,
    read_group_file,
)

EXPECTED_CORPUS = {
    "trivial", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
    "S3", "S4", "S5", "S6", "A4", "A5", "A6", "D8", "Q8", "SL23", "V4", "C2xA5", "S3xS3",
}


def test_parse_basic():
    gf = parse_group_text("# S4\ndegree: 4\ngen: (1 2)\ngen: (1 2 3 4)\nsub: (1 2)\n")
    assert gf.group.order() == 24
    assert gf.sub.order() == 2
    assert gf.comments == ["S4"]


def test_identity_and_inferred_degree():
    gf = parse_group_text("gen: ()\ngen: (1 3)\n")
    assert gf.group.degree == 3 and gf.group.order() == 2
    assert parse_group_text("degree: 3\ngen: ()\n").group.order() == 1


def test_inline_comments_and_blank_lines():
    gf = parse_group_text("degree: 3   # three points\n\ngen: (1 2 3)  # rotation\n")
    assert gf.group.order() == 3


@pytest.mark.parametrize(
    "text, line",
    [
        ("degree: 4\ngen: (1 2)(2 3)\n", 2),
        ("degree: 4\ngen: (1 5)\n", 2),
        ("degree: x\n", 1),
        ("degree: 4\ncolour: red\n", 2),
        ("degree: 4\n\ngen (1 2)\n", 3),
        ("degree: 4\ndegree: 5\n", 2),
        ("degree: 0\n", 1),
    ],
)
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(InputError) as e:
        parse_group_text(text, "g.grp")
    assert f"g.grp:{line}:" in str(e.value)


def test_sub_outside_group():
    with pytest.raises(InputError):
        parse_group_text("degree: 4\ngen: (1 2 3)\nsub: (1 2)\n")


def test_missing_degree_and_points():
    with pytest.raises(InputError):
        parse_group_text("gen: ()\n")


def test_read_missing_file(tmp_path):
    with pytest.raises(InputError):
        read_group_file(tmp_path / "nope.grp")
    bad = tmp_path / "bad.grp"
    bad.write_bytes(b"\xff\xfe")
    with pytest.raises(InputError):
        read_group_file(bad)


def test_format_round_trip():
    for G in (named.symmetric(4), named.sl23(), named.c2_x_a5(), named.cyclic(1)):
        text = format_group_file(G, sub=G, comment="round trip")
        gf = parse_group_text(text)
        assert gf.group == G and gf.sub == G


def test_parse_subgroup():
    H = parse_subgroup("(1 2)(3 4); (1 3)(2 4)", 4)
    assert H == named.klein4()
    assert parse_subgroup("()", 4).is_trivial()
    with pytest.raises(InputError):
        parse_subgroup("(1 2)(2 3)", 4)


def test_corpus_contents():
    assert set(corpus_names()) == EXPECTED_CORPUS
    degrees = {"Q8": 8, "SL23": 8, "C2xA5": 7, "S3xS3": 6}
    for name in corpus_names():
        gf = load_corpus(name)
        exp = load_expected(name)
        assert exp["name"] == name
        assert int(exp["order"]) == gf.group.order()
        if name in degrees:
            assert gf.group.degree == degrees[name]


def test_sidecars_are_valid_json_with_string_orders():
    for name in corpus_names():
        data = load_expected(name)
        assert isinstance(data["order"], str)
        assert all(isinstance(v, str) for v in data["residual_orders"].values())
        json.dumps(data)
