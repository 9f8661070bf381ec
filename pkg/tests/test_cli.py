import io
import json
import re
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from turanlab import graph6
from turanlab.cli import main
from turanlab.constructions import BlowupSpec, clique, cycle, double_star, materialize
from turanlab.formulas import double_star_central_count
from turanlab.graph import canonical_form, count_copies

SCHEMA = json.loads(resources.files("turanlab").joinpath("schema/claim_report.schema.json").read_text())
FLOATISH = re.compile(r"\d\.\d|\d[eE][+-]?\d|\binf\b|\bnan\b", re.IGNORECASE)


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestCount:
    def test_examples(self):
        assert run("count", "--h", "cycle(4)", "--g", "blow(clique(2),[4,4])")[:2] == (0, "36\n")
        assert run("count", "--h", "clique(2)", "--g", "turan(5,2)")[:2] == (0, "6\n")

    def test_double_star_cross_check(self):
        code, out, _ = run("count", "--h", "dstar(2,1)", "--g", "blow(clique(2),[3,4])")
        # every copy has a unique central edge; sum the central-edge formula over the 12 edges
        assert int(out) == 12 * double_star_central_count(2, 1, 3, 4)
        assert int(out) == count_copies(double_star(2, 1), materialize(BlowupSpec(clique(2), (3, 4))))

    def test_labeled(self):
        assert run("count", "--h", "cycle(4)", "--g", "biclique(4,4)", "--labeled")[1] == "288\n"

    def test_huge_host(self):
        code, out, _ = run("count", "--h", "clique(2)", "--g", "blow(clique(2),[1000000000000,3])")
        assert out == "3000000000000\n"

    def test_falls_back_to_materialized_beyond_class_cap(self):
        # 13 twin classes on the host side exceed the blow-up counting cap; the graph is small enough to materialise
        code, out, _ = run("count", "--h", "blow(clique(2),[1,1])", "--g", "blow(cycle(13),[1,1,1,1,1,1,1,1,1,1,1,1,2])")
        assert (code, out) == (0, "15\n")  # 11 unit edges plus 2 x 2 at the doubled class

    def test_parse_error(self):
        code, out, err = run("count", "--h", "cycle(4", "--g", "clique(3)")
        assert code == 2 and "at byte 7" in err

    def test_capacity_error(self):
        code, _, err = run("count", "--h", "clique(2)", "--g", "blow(cycle(13),[100,1,1,1,1,1,1,1,1,1,1,1,1])")
        assert code == 3 and "CapacityError" in err


class TestOracle:
    def test_examples(self, tmp_path):
        assert run("oracle", "--h", "clique(3)", "--f", "clique(4)", "--n", "5")[:2] == (0, "4\n")
        wpath = tmp_path / "w.g6"
        code, out, _ = run("oracle", "--h", "path(3)", "--f", "clique(3)", "--n", "4", "--witnesses", str(wpath))
        assert out == "4\n"
        lines = wpath.read_text().splitlines()
        assert canonical_form(cycle(4)).decode() in lines
        assert all(graph6.decode(line).order == 4 for line in lines)
        assert run("oracle", "--h", "cycle(4)", "--f", "clique(3)", "--n", "8", "--maximal-only")[1] == "36\n"

    def test_capacity(self):
        assert run("oracle", "--h", "clique(2)", "--f", "clique(3)", "--n", "11")[0] == 3


class TestVerify:
    def test_zykov(self):
        code, out, _ = run("verify", "--claim", "zykov", "--params", '{"max_n":7,"max_r":3}')
        rep = json.loads(out)
        assert code == 0 and rep["status"] == "verified"
        jsonschema.validate(rep, SCHEMA)

    def test_lemma(self):
        code, out, _ = run("verify", "--claim", "lemma-lemi", "--params", '{"f":"g6:Bw"}')
        assert code == 0 and json.loads(out)["status"] == "verified"

    def test_out_file_appends_lines(self, tmp_path):
        path = tmp_path / "r.jsonl"
        for _ in range(2):
            assert run("verify", "--claim", "lemma-lemi", "--params", '{"f":"cycle(5)"}', "--out", str(path))[0] == 0
        lines = path.read_text().splitlines()
        assert len(lines) == 2
        for line in lines:
            jsonschema.validate(json.loads(line), SCHEMA)

    def test_prop_main2(self):
        params = json.dumps({"f": "clique(4)", "k": 8, "a_max": 30, "gamma_grid": ["1/24"], "n_grid": [10000]})
        code, out, _ = run("verify", "--claim", "prop-main2", "--params", params)
        rep = json.loads(out)
        assert code == 0 and rep["status"] == "gap_found"
        jsonschema.validate(rep, SCHEMA)

    def test_usage_errors(self):
        assert run("verify", "--claim", "nope")[0] == 2
        assert run("verify", "--claim", "zykov", "--params", "{bad json")[0] == 2
        assert run("verify", "--claim", "zykov", "--params", "[1]")[0] == 2
        assert run("verify", "--claim", "zykov", "--params", '{"max_n":"x","max_r":2}')[0] == 2
        assert run("verify", "--claim", "zykov", "--params", '{"max_n":5}')[0] == 2
        assert run("verify", "--claim", "lemma-lemi", "--params", '{"f":"clique(4)"}')[0] == 2

    def test_capacity_exit(self):
        assert run("verify", "--claim", "zykov", "--params", '{"max_n":10,"max_r":2}')[0] == 3

    def test_thread_count_does_not_change_bytes(self):
        outs = set()
        for threads in ("1", "2", "3"):
            outs.add(run("verify", "--claim", "zykov", "--params", '{"max_n":6,"max_r":2}',
                         "--threads", threads, "--no-timing")[1])
        assert len(outs) == 1


class TestOutputs:
    def test_no_float_formats_anywhere(self, tmp_path):
        commands = [
            ("count", "--h", "cycle(4)", "--g", "blow(clique(2),[400000000,400000000])"),
            ("count", "--h", "pow(path(8),2)", "--g", "blow(pow(cycle(8),2),[5000,5000,5000,5000,5000,5000,5000,65000])",
             "--labeled"),
            ("oracle", "--h", "cycle(4)", "--f", "clique(3)", "--n", "7"),
            ("optimize", "--h", "star(3)", "--n", "40", "--r", "2"),
            ("verify", "--claim", "zykov", "--params", '{"max_n":6,"max_r":3}'),
            ("verify", "--claim", "turg2", "--params", '{"k":1,"m":3,"a":3,"b":3,"f":"clique(3)","n":40}'),
            ("verify", "--claim", "prop-main2",
             "--params", '{"f":"clique(4)","k":8,"a_max":30,"gamma_grid":["1/24"],"n_grid":[10000]}'),
            ("verify", "--claim", "prop-main2",
             "--params", '{"f":"clique(4)","k":8,"a_max":3,"gamma_grid":["1/20"],"n_grid":[1000],"path_order":8}'),
            ("verify", "--claim", "main3", "--params", '{"f":"cycle(5)","m":5,"a":5,"b":5,"n":100}'),
        ]
        for argv in commands:
            code, out, err = run(*argv)
            assert code == 0, err
            assert not FLOATISH.search(out), (argv, FLOATISH.search(out))

    def test_g6_and_optimize(self):
        assert run("g6", "clique(3)")[1] == "Bw\n"
        assert run("optimize", "--h", "star(3)", "--n", "8", "--r", "2")[1] == "6 2 40 exact\n"

    def test_console_entry_point(self):
        proc = subprocess.run([sys.executable, "-m", "turanlab.cli", "count", "--h", "clique(2)", "--g", "turan(5,2)"],
                              capture_output=True, text=True)
        assert proc.returncode == 0 and proc.stdout == "6\n"
