import json


def run(argv):
    lines = []
    code = main_with_capture(argv, lines)
    return code, lines


def main_with_capture(argv, sink):
    from affine_catalan.cli import _run_argv

    return _run_argv(argv, sink.append)


class TestExitCodes:
    def test_sortable_positive(self):
        code, out = run(
            ["sortable", "--n", "10", "--coxeter", "L=1,4,6,9",
             "--window", "[-2,0,3,4,5,9,6,11,7,12]"]
        )
        assert code == 0
        assert "is sortable" in out[0]

    def test_sortable_negative_with_witness(self):
        code, out = run(
            ["sortable", "--n", "10", "--coxeter", "L=1,4,6,9",
             "--window", "[0,1,4,3,9,6,5,8,7,12]"]
        )
        assert code == 3
        assert any("12 10 11" in line for line in out)

    def test_parse_error(self):
        code, _ = run(["sortable", "--n", "3", "--coxeter", "L=1", "--window", "[oops"])
        assert code == 2

    def test_validation_error(self):
        code, _ = run(["sortable", "--n", "3", "--coxeter", "L=1", "--window", "[1,1,4]"])
        assert code == 1

    def test_isnc_negative(self):
        code, _ = run(["isnc", "--n", "4", "--coxeter", "L=1,2,3", "--perm", "[3,1,6,0]"])
        assert code == 3


class TestOutputs:
    def test_titoc_golden_window(self):
        code, out = run(
            ["titoc", "--n", "10", "--coxeter", "L=1,4,6,8",
             "--arcs", "1->6,6->8,7->15,9->12,12->13", "--anchor", "2"]
        )
        assert code == 0
        assert out[0] == "[14,18,16,11,15,7,13,12,9,10]"

    def test_omega_value_and_sign(self):
        code, out = run(
            ["omega", "--n", "14", "--coxeter", "L=1,4,6,7,8,13,14",
             "--t1", "(14,5)_18", "--t2", "(5,13)_21"]
        )
        assert code == 0
        assert out[0] == "-77 -"

    def test_ncad_lists_arcs(self):
        code, out = run(["ncad", "--n", "3", "--coxeter", "L=1,2", "--tito", "[-3,4,2]"])
        assert code == 0
        assert out[0] == "2->4,3->5"

    def test_cseq_prints_period(self):
        code, out = run(
            ["cseq", "--n", "10", "--coxeter", "L=1,4,6,8",
             "--arcs", "1->6,6->8,7->15,9->12,12->13", "--anchor", "2"]
        )
        assert code == 0
        assert out[1].startswith("period:")

    def test_ncc_golden(self):
        code, out = run(["ncc", "--n", "4", "--coxeter", "L=1,2,3", "--tito", "[1,2]~[3,0]"])
        assert code == 0
        assert out == ["(3)[+1](4)[-1]", "[1,2,7,0]"]

    def test_numbering(self):
        code, out = run(
            ["numbering", "--n", "10", "--coxeter", "L=1,4,6,8",
             "--arcs", "1->10,8->12,12->13,4->6,5->7", "--anchor", "4"]
        )
        assert code == 0
        assert "11→20" in out[0]


class TestRender:
    ARGS = ["--n", "10", "--coxeter", "L=1,4,6,8", "--arcs", "1->6,6->8,7->15,9->12,12->13"]

    def test_svg_deterministic(self):
        code1, out1 = run(["render", *self.ARGS, "--format", "svg"])
        code2, out2 = run(["render", *self.ARGS, "--format", "svg"])
        assert code1 == code2 == 0
        assert out1 == out2
        assert out1[0].startswith("<svg") and 'viewBox="0 0 1000 1000"' in out1[0]
        assert out1[0].count("<polyline") == 5

    def test_ascii_has_three_periods(self):
        code, out = run(["render", *self.ARGS, "--format", "ascii"])
        assert code == 0
        text = out[0]
        assert "chains:" in text
        assert "-9" in text and "20" in text


class TestAnnulus:
    def test_annulus_svg(self):
        code, out = run(
            ["annulus-render", "--n", "10", "--coxeter", "L=2,4,6,8,9,10",
             "--perm", "[-3,-1,-7,8,11,6,5,14,12,10]"]
        )
        assert code == 0
        svg = out[0]
        assert svg.count("<circle cx=\"500\" cy=\"500\"") == 2
        assert "stroke-dasharray" in svg  # the annular block

    def test_annulus_rejects_crossing(self):
        code, _ = run(
            ["annulus-render", "--n", "4", "--coxeter", "L=1,2,3", "--perm", "[3,1,6,0]"]
        )
        assert code == 3


class TestBatch:
    def test_json_lines(self, capsys):
        from affine_catalan.cli import _batch

        lines = [
            '{"cmd": "sortable", "args": {"n": 3, "coxeter": "L=1,2", "window": "[1,2,3]"}}',
            '{"cmd": "omega", "args": {"n": 6, "coxeter": "L=1,2,4", "t1": "(3,1)_2", "t2": "(2,5)_1"}}',
            '{"cmd": "sortable", "args": {"n": 3, "coxeter": "L=1,2", "window": "[broken"}}',
            "not json at all",
        ]
        outputs = []
        worst = _batch(lines, outputs.append)
        records = [json.loads(line) for line in outputs]
        assert [r["line"] for r in records] == [0, 1, 2, 3]
        assert records[0]["exit"] == 0
        assert records[1]["output"] == ["6 +"]
        assert records[2]["exit"] == 2
        assert "error" in records[3]
        assert worst == 2
