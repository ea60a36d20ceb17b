"""Tests for the NetworkDocument format and the command-line interface."""

import json

import pytest

from graphalg.cli import (
    DocumentError,
    main,
    parse_document,
    serialize_document,
)

TRIANGLE_DOC = """\
vertex 0 boundary
vertex 1 boundary
vertex 2 interior
edge 0 0 1 w=1
edge 1 1 2 w=1
edge 2 2 0 w=1
rotation 0 +0 -2
rotation 1 +1 -0
rotation 2 +2 -1
boundary-order 0 1
"""


class TestDocumentFormat:
    def test_round_trip_is_lossless(self):
        doc = parse_document(TRIANGLE_DOC)
        text = serialize_document(doc)
        assert parse_document(text).network == doc.network
        assert parse_document(text).embedded == doc.embedded
        assert serialize_document(parse_document(text)) == text

    def test_comments_and_blank_lines_ignored(self):
        doc = parse_document("# a comment\n\nvertex 0 interior\n")
        assert doc.network.graph.vertices == (0,)

    def test_defaults(self):
        doc = parse_document("vertex 0 interior\nvertex 1 interior\nedge 0 0 1\n")
        assert doc.network.weight(0) == 1
        assert doc.network.offset(0) == 0
        assert doc.embedded is None

    def test_offsets_and_rational_weights(self):
        doc = parse_document(
            "vertex 0 boundary d=2\nvertex 1 interior d=-1\nedge 0 0 1 w=3/2\n"
        )
        from fractions import Fraction

        assert doc.network.offset(0) == 2
        assert doc.network.weight(0) == Fraction(3, 2)

    def test_metadata_round_trip(self):
        doc = parse_document("vertex 0 interior\nmeta family wheel 5\n")
        assert doc.metadata == {"family": "wheel 5"}
        assert "meta family wheel 5" in serialize_document(doc)

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("vertex 0 weird\n", "boundary|interior"),
            ("vertex 0 interior\nvertex 0 boundary\n", "duplicate vertex"),
            ("vertex 0 interior\nedge 0 0 1\n", "unknown vertices"),
            ("vertex 0 interior\nfrobnicate 1\n", "unknown directive"),
            ("vertex 0 interior x=1\n", "unknown field"),
            ("vertex 0 interior\nedge 0 0 0\n", "loop"),
            ("", "no vertices"),
            ("vertex 0 boundary\nrotation 0 5\n", "sign"),
        ],
    )
    def test_malformed_documents_rejected(self, text, fragment):
        with pytest.raises(DocumentError) as err:
            parse_document(text)
        assert fragment in str(err.value)


@pytest.fixture
def triangle_file(tmp_path):
    p = tmp_path / "triangle.doc"
    p.write_text(TRIANGLE_DOC)
    return str(p)


class TestCommands:
    def test_upsilon(self, triangle_file, capsys):
        assert main(["upsilon", triangle_file]) == 0
        out = capsys.readouterr().out
        assert "Z^2" in out and "non-degenerate: yes" in out

    def test_upsilon_json(self, triangle_file, capsys):
        assert main(["upsilon", "--json", triangle_file]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["format"] == 1
        assert payload["upsilon"]["free_rank"] == 2

    def test_family_pipe_crit(self, tmp_path, capsys):
        assert main(["family", "complete", "4"]) == 0
        text = capsys.readouterr().out
        p = tmp_path / "k4.doc"
        p.write_text(text)
        assert main(["crit", str(p)]) == 0
        assert "Z/4 + Z/4" in capsys.readouterr().out

    def test_u0_modes(self, tmp_path, capsys):
        assert main(["family", "complete-bipartite", "2", "3"]) == 0
        p = tmp_path / "k23.doc"
        p.write_text(capsys.readouterr().out)
        assert main(["u0", "--qz", str(p)]) == 0
        assert "Z/2 + Z/2" in capsys.readouterr().out
        assert main(["u0", "--mod", "4", str(p)]) == 0
        assert "Z/2 + Z/2" in capsys.readouterr().out

    def test_layerable_and_flower(self, triangle_file, capsys):
        assert main(["layerable", triangle_file]) == 0
        assert "layerable: yes" in capsys.readouterr().out
        assert main(["flower", triangle_file]) == 0
        assert "empty: yes" in capsys.readouterr().out

    def test_dual_round_trip(self, triangle_file, tmp_path, capsys):
        assert main(["dual", triangle_file]) == 0
        text = capsys.readouterr().out
        dual_doc = parse_document(text)
        assert len(dual_doc.network.graph.vertices) == 3
        assert dual_doc.embedded is not None

    def test_conjugate(self, triangle_file, tmp_path, capsys):
        values = tmp_path / "u.txt"
        values.write_text("0 0\n1 2\n2 1\n")
        assert main(["conjugate", "--values", str(values), triangle_file]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        assert len(out) == 3

    def test_conjugate_rejects_non_harmonic(self, triangle_file, tmp_path, capsys):
        values = tmp_path / "u.txt"
        values.write_text("0 0\n1 5\n2 1\n")
        assert main(["conjugate", "--values", str(values), triangle_file]) == 1

    def test_charpoly_and_eigmult(self, triangle_file, capsys):
        assert main(["charpoly", triangle_file]) == 0
        assert "1 " in capsys.readouterr().out
        assert main(["eigmult", "--lambda", "3", triangle_file]) == 0
        assert "multiplicity of 3:" in capsys.readouterr().out

    def test_export_dot(self, triangle_file, capsys):
        assert main(["export-dot", triangle_file]) == 0
        out = capsys.readouterr().out
        assert out.startswith("graph network {")
        assert "v0 --" in out or "v0 -- v1" in out

    def test_u0_matrix(self, tmp_path, capsys):
        assert main(["family", "complete-bipartite", "2", "3"]) == 0
        p = tmp_path / "k23.doc"
        p.write_text(capsys.readouterr().out)
        assert (
            main(["u0-matrix", "--interiorize", "2,3,4", str(p)]) == 0
        )
        out = capsys.readouterr().out
        assert "smith diagonal" in out

    def test_parse_error_exit_code(self, tmp_path, capsys):
        p = tmp_path / "bad.doc"
        p.write_text("vertex 0 bogus\n")
        assert main(["upsilon", str(p)]) == 2

    def test_precondition_error_exit_code(self, triangle_file, capsys):
        # crit requires a boundaryless graph
        assert main(["crit", triangle_file]) == 1

    def test_missing_file_exit_code(self, capsys):
        assert main(["upsilon", "/nonexistent/x.doc"]) == 1

    def test_verify_paper_suite(self, capsys):
        assert main(["verify", "--suite", "paper"]) == 0
        out = capsys.readouterr().out
        assert "passed" in out
