import pytest

from totecc import format_edge_list, parse_edge_list
from totecc.edgelist import EdgeListError
from totecc.families import construct


def test_round_trip():
    for family, n in [("path", 6), ("B2", 7), ("star", 4)]:
        g = construct(family, n)
        assert parse_edge_list(format_edge_list(g)) == g


def test_comments_and_blanks_ignored():
    g = parse_edge_list("# a path\n\n4\n0 1\n\n# middle\n1 2\n2 3\n")
    assert g.n == 4 and g.m == 3


def test_empty_input_rejected():
    with pytest.raises(EdgeListError, match="empty"):
        parse_edge_list("# nothing here\n")


def test_duplicate_edge_rejected_with_line():
    with pytest.raises(EdgeListError, match="line 4"):
        parse_edge_list("3\n0 1\n1 2\n1 0\n")


def test_self_loop_rejected_with_line():
    with pytest.raises(EdgeListError, match="line 2"):
        parse_edge_list("3\n1 1\n")


def test_out_of_range_rejected():
    with pytest.raises(EdgeListError, match=r"\(0, 7\)"):
        parse_edge_list("3\n0 7\n")


def test_malformed_lines_rejected():
    with pytest.raises(EdgeListError, match="line 1"):
        parse_edge_list("x\n")
    with pytest.raises(EdgeListError, match="line 2"):
        parse_edge_list("3\n0 1 2\n")
    with pytest.raises(EdgeListError, match="line 2"):
        parse_edge_list("3\n0 a\n")


def test_format_is_sorted_and_terminated():
    g = construct("star", 4)
    assert format_edge_list(g) == "4\n0 1\n0 2\n0 3\n"
