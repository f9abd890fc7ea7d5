import io
import json
import subprocess
import sys

import pytest

from starinv.cli import main
from starinv.ring import parse_element, parse_ring


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_compute_example():
    code, text = run("compute", "--ring", "mat:2:Qi:transpose", "--element", "[[1,i],[0,0]]")
    assert code == 0
    assert "core       [[1,0],[0,0]]" in text
    assert "dual-core  not-exists" in text
    assert "mp         not-exists" in text
    assert "s = [[1,0],[0,0]]" in text


def test_compute_identity_json():
    code, text = run("compute", "--ring", "mat:2:Q:transpose", "--element", "1,0;0,1", "--format", "json")
    rec = json.loads(text)
    assert code == 0 and rec["ep"]
    assert all(c["exists"] and c["value"] == "[[1,0],[0,1]]" for c in rec["classes"].values())


def test_compute_not_ep():
    code, text = run("compute", "--ring", "mat:2:Q:transpose", "--element", "[[1,1],[0,0]]")
    assert "core       [[1,0],[0,0]]" in text
    assert "dual-core  [[1/2,1/2],[1/2,1/2]]" in text
    assert "EP: no" in text


def test_compute_from_record_file(tmp_path):
    f = tmp_path / "a.json"
    f.write_text('{"ring": "mat:2:Qi:ctranspose", "entries": ["1", "i", "0", "0"]}')
    code, text = run("compute", "--input", str(f))
    assert code == 0 and "mp         [[1/2,0],[-1/2i,0]]" in text


def test_printed_elements_round_trip():
    code, text = run("compute", "--ring", "mat:2:Qi:ctranspose", "--element", "[[1,i],[0,0]]", "--format", "json")
    rec = json.loads(text)
    ctx = parse_ring(rec["ring"])
    for c in rec["classes"].values():
        if c["exists"]:
            v = parse_element(ctx, c["value"])
            assert parse_element(ctx, str(v)) == v


def test_verify_t33_zmod():
    code, text = run("verify", "--theorem", "T3.3", "--ring", "zmod:6", "--element", "2", "--n", "2")
    assert code == 0
    assert "agree: True" in text and "p = 3" in text and "u = 1" in text


def test_verify_output_file(tmp_path):
    out = tmp_path / "v.jsonl"
    code, _ = run("verify", "--theorem", "T4.1", "--ring", "mat:2:Q:transpose", "--element", "[[1,1],[0,0]]",
                  "--inner", "[[1,0],[0,0]]", "--n", "2,3", "--output", str(out))
    lines = out.read_text().splitlines()
    assert code == 0 and len(lines) == 2
    assert json.loads(lines[0])["conditions"] == "111111"


def test_sweep_zmod12(tmp_path):
    out = tmp_path / "r.jsonl"
    code, text = run("sweep", "--ring", "zmod:12", "--theorems", "all", "--output", str(out))
    assert code == 0 and "total failures: 0" in text
    first = json.loads(out.read_text().splitlines()[0])
    assert list(first) == ["theorem", "ring", "element", "params", "conditions", "agree", "formulas"]


def test_seed_from_environment(tmp_path, monkeypatch):
    outs = []
    for seed in ("7", "7", "8"):
        monkeypatch.setenv("STARINV_SEED", seed)
        out = tmp_path / f"s{len(outs)}.jsonl"
        run("sweep", "--ring", "mat:2:Q:transpose", "--theorems", "T3.3", "--count", "5", "--output", str(out))
        outs.append(out.read_bytes())
    assert outs[0] == outs[1] != outs[2]


def test_oracle_not_regular():
    code, text = run("oracle", "--ring", "zmod:4", "--element", "2")
    assert code == 0 and "not regular" in text


def test_fixtures_pass():
    code, text = run("fixtures")
    assert code == 0 and "FAIL" not in text


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("compute", "--ring", "mat:2:Q:transpose", "--element", "[[1,x],[0,0]]"), 2),
        (("compute", "--ring", "mat:9:Z:transpose", "--element", "1"), 2),
        (("compute", "--element", '{"ring": "zmod:6", "entries": ["2"'), 2),
        (("verify", "--theorem", "T2.10", "--ring", "zmod:6", "--element", "2", "--n", "1"), 2),
        (("verify", "--theorem", "L2.6", "--ring", "zmod:6", "--element", "2"), 2),
        (("sweep", "--ring", "mat:2:Q:transpose", "--sampler", "exhaustive"), 3),
        (("oracle", "--ring", "mat:2:Q:transpose", "--element", "[[1,0],[0,0]]"), 3),
    ],
)
def test_exit_codes(argv, expected):
    code, _ = run(*argv)
    assert code == expected


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["verify", "--theorem", "T0.0"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "starinv", "oracle", "--ring", "zmod:6", "--element", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "solver agreement: yes" in proc.stdout
