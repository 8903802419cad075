import subprocess
import sys

from feynsvg.cli import INDEX_NAME, load_index, main, output_names

BLOCK = "\\begin{{feynhand}}\n\\vertex (a) at (0,0); \\vertex (b) at ({x},0);\n\\propag [fer] (a) to (b);\n\\end{{feynhand}}\n"


def write(tmp_path, text, name="d.fh"):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_output_names():
    assert output_names("d", [None]) == ["d.svg"]
    assert output_names("d", [None, "x", None]) == ["d-1.svg", "x.svg", "d-3.svg"]


def test_compile_and_cache(tmp_path, capsys):
    src = write(tmp_path, BLOCK.format(x=2))
    out = tmp_path / "out"
    assert main([str(src), "--out", str(out)]) == 0
    svg = out / "d.svg"
    first = svg.read_bytes()
    mtime = svg.stat().st_mtime_ns
    assert main([str(src), "--out", str(out)]) == 0
    assert svg.stat().st_mtime_ns == mtime
    assert svg.read_bytes() == first
    index = load_index(out / INDEX_NAME)
    assert list(index) == [str(svg)]


def test_force_remake_rewrites(tmp_path):
    src = write(tmp_path, BLOCK.format(x=2))
    out = tmp_path / "out"
    main([str(src), "--out", str(out)])
    (out / "d.svg").write_text("stale")
    main([str(src), "--out", str(out)])
    assert (out / "d.svg").read_text() == "stale"
    main([str(src), "--out", str(out), "--force-remake"])
    assert (out / "d.svg").read_text().startswith("<?xml")


def test_deleted_output_regenerated(tmp_path):
    src = write(tmp_path, BLOCK.format(x=2))
    out = tmp_path / "out"
    main([str(src), "--out", str(out)])
    (out / "d.svg").unlink()
    main([str(src), "--out", str(out)])
    assert (out / "d.svg").exists()


def test_name_override_and_filename_command(tmp_path):
    src = write(tmp_path, "\\fhsetnextfilename{scatter};\n" + BLOCK.format(x=2) + BLOCK.format(x=3))
    out = tmp_path / "out"
    assert main([str(src), "--out", str(out), "--name", "fig"]) == 0
    assert sorted(p.name for p in out.glob("*.svg")) == ["fig-2.svg", "scatter.svg"]


def test_undefined_vertex_diagnostic(tmp_path, capsys):
    src = write(tmp_path, "\\vertex (a) at (0,0);\n  \\propag (a) to (q);\n")
    assert main([str(src), "--out", str(tmp_path / "out")]) == 1
    err = capsys.readouterr().err
    assert f"{src}:2:3: error:" in err and "(q)" in err


def test_parse_error_exit_code(tmp_path, capsys):
    src = write(tmp_path, "\\vertex (a) at (0,0)\n")
    assert main([str(src), "--out", str(tmp_path / "out")]) == 1
    assert ":1:" in capsys.readouterr().err


def test_missing_input_is_io_error(tmp_path, capsys):
    assert main([str(tmp_path / "nope.fh"), "--out", str(tmp_path / "out")]) == 2
    assert "cannot read input" in capsys.readouterr().err


def test_check_writes_nothing(tmp_path):
    src = write(tmp_path, BLOCK.format(x=2))
    out = tmp_path / "out"
    assert main([str(src), "--out", str(out), "--check"]) == 0
    assert not out.exists()


def test_warning_does_not_fail(tmp_path, capsys):
    src = write(tmp_path, "\\vertex [dot] (a) at (0,0); \\vertex (b) at (1,0); \\propag (a) to (b);")
    assert main([str(src), "--out", str(tmp_path / "out")]) == 0
    assert "warning:" in capsys.readouterr().err


def test_module_entry_point(tmp_path):
    src = write(tmp_path, BLOCK.format(x=2))
    r = subprocess.run(
        [sys.executable, "-m", "feynsvg", str(src), "--out", str(tmp_path / "out")], capture_output=True, text=True
    )
    assert r.returncode == 0, r.stderr
    assert (tmp_path / "out" / "d.svg").exists()
