import pytest

from boolwidth.cli import main

P5_DGF = "c five path\ne a b\ne b c\ne c d\ne d e\n"


@pytest.fixture
def p5(tmp_path):
    f = tmp_path / "p5.dgf"
    f.write_text(P5_DGF)
    return str(f)


def test_decompose_exact_p5(p5, capsys):
    assert main(["decompose", "--input", p5, "--strategy", "exact"]) == 0
    assert capsys.readouterr().out.strip() == "width 1.00"


def test_decompose_raw_flag(p5, capsys):
    assert main(["decompose", "--input", p5, "--strategy", "iun", "--raw"]) == 0
    assert capsys.readouterr().out.strip() == "width 1.00 max-un 2"


def test_decompose_verify_round_trip(p5, tmp_path, capsys):
    dec = str(tmp_path / "p5.dec")
    cuts = str(tmp_path / "cuts.csv")
    assert main(["decompose", "--input", p5, "--strategy", "rn1",
                 "--output", dec, "--cuts-csv", cuts]) == 0
    assert main(["verify", "--input", p5, "--decomposition", dec]) == 0
    csv_lines = open(cuts).read().strip().splitlines()
    assert csv_lines[0] == "prefix,un_count,booldim,ntc_left,ntc_right"
    assert len(csv_lines) == 5


def test_verify_catches_tampering(p5, tmp_path, capsys):
    dec = tmp_path / "p5.dec"
    main(["decompose", "--input", p5, "--output", str(dec)])
    lines = dec.read_text().splitlines()
    dec.write_text("width 7.00\n" + lines[1] + "\n")
    assert main(["verify", "--input", p5, "--decomposition", str(dec)]) == 1
    assert "measured" in capsys.readouterr().err


def test_verify_names_missing_vertex(p5, tmp_path, capsys):
    dec = tmp_path / "p5.dec"
    dec.write_text("width 1.00\na b c d\n")
    assert main(["verify", "--input", p5, "--decomposition", str(dec)]) == 1
    assert "omits vertices: e" in capsys.readouterr().err


def test_unknown_strategy_is_input_error(p5, capsys):
    assert main(["decompose", "--input", p5, "--strategy", "magic"]) == 1
    assert "unknown strategy" in capsys.readouterr().err


def test_missing_file_is_input_error(capsys):
    assert main(["decompose", "--input", "/nonexistent.dgf"]) == 1
    assert "no such file" in capsys.readouterr().err


def test_solve_mim(p5, capsys):
    assert main(["solve", "--input", p5, "--problem", "mim"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("graph,n,density,strategy,width")
    row = out[1].split(",")
    assert row[1] == "5" and row[3] == "mim" and row[-1] == "4"
    assert out[2].startswith("witness ")
    assert set(out[2].split()[1:]) == {"a", "b", "d", "e"}


def test_solve_with_decomposition_file(p5, tmp_path, capsys):
    dec = str(tmp_path / "p5.dec")
    main(["decompose", "--input", p5, "--strategy", "exact", "--output", dec])
    capsys.readouterr()
    assert main(["solve", "--input", p5, "--decomposition", dec,
                 "--problem", "dominating-set"]) == 0
    row = capsys.readouterr().out.splitlines()[1].split(",")
    assert row[-1] == "2"  # gamma(P5)


def test_solve_custom_infeasible_exits_3(tmp_path, capsys):
    f = tmp_path / "e.dgf"
    f.write_text("n a\nn b\nn c\n")
    code = main(["solve", "--input", str(f), "--problem", "custom",
                 "--sigma", "{1}", "--rho", "{1}", "--objective", "max"])
    assert code == 3
    out = capsys.readouterr().out
    assert "infeasible" in out
    assert "witness" not in out


def test_solve_mismatched_decomposition(p5, tmp_path, capsys):
    dec = tmp_path / "bad.dec"
    dec.write_text("width 1.00\na b c d q\n")
    assert main(["solve", "--input", p5, "--decomposition", str(dec)]) == 1
    assert "unknown vertex name" in capsys.readouterr().err


def test_bench_header_only(capsys):
    assert main(["bench", "--n", "6", "--per-cell", "0"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == ["graph,n,density,strategy,width,time_s,nec,ub1,ub2,ub3,result"]


def test_bench_row_grid(capsys):
    assert main(["bench", "--n", "7", "--p-grid", "0.2:0.8:0.3",
                 "--per-cell", "2", "--strategies", "iun,random",
                 "--seed", "5", "--no-times"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    # 3 p values x 2 replicates x 2 strategies + header
    assert len(lines) == 13
    assert all(len(l.split(",")) == 11 for l in lines)


def test_bench_deterministic(tmp_path):
    a, b = str(tmp_path / "a.csv"), str(tmp_path / "b.csv")
    argv = ["bench", "--n", "8", "--p-grid", "0.3:0.5:0.2", "--per-cell", "3",
            "--strategies", "iun,rn2,random", "--seed", "11", "--no-times"]
    assert main(argv + ["--output", a]) == 0
    assert main(argv + ["--output", b]) == 0
    assert open(a).read() == open(b).read()


def test_bench_exact_flag(capsys):
    assert main(["bench", "--n", "6", "--p-grid", "0.5:0.5:0.1", "--per-cell", "1",
                 "--strategies", "iun", "--exact", "--no-times"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    strategies = [l.split(",")[3] for l in lines[1:]]
    assert strategies == ["iun", "exact"]
    widths = {l.split(",")[3]: float(l.split(",")[4]) for l in lines[1:]}
    assert widths["exact"] <= widths["iun"]


def test_bench_bad_grid():
    assert main(["bench", "--n", "5", "--p-grid", "0.9:0.1:0.1"]) == 1


def test_decompose_time_limit_exit_2(tmp_path, capsys):
    from boolwidth.graph import erdos_renyi, write_dgf

    g = erdos_renyi(40, 0.5, seed=3)
    path = tmp_path / "big.dgf"
    path.write_text(write_dgf(g))
    code = main(["decompose", "--input", str(path), "--strategy", "lcv",
                 "--time-limit", "0.000001"])
    assert code == 2
    assert "time limit" in capsys.readouterr().err
