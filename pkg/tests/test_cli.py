import csv
import json
import shutil

import pytest

from rdcentroid import config
from rdcentroid.backend import MU0, Marking
from rdcentroid.cli import EXIT_CAP, EXIT_FAIL, EXIT_INPUT, EXIT_OK, EXIT_SURFACE, EXIT_USAGE, main, parse_radii
from rdcentroid.farey import Slope
from rdcentroid.markings import ball


def write(path, mu):
    path.write_text(json.dumps(mu.to_json()))
    return str(path)


@pytest.fixture
def files(tmp_path):
    x = write(tmp_path / "x.json", MU0)
    y = write(tmp_path / "y.json", Marking(Slope(5, 3), Slope(2, 1)))
    z = write(tmp_path / "z.json", Marking(Slope(-7, 4), Slope(-2, 1)))
    return tmp_path, x, y, z


def test_parse_radii():
    assert parse_radii("3..6") == [3, 4, 5, 6]
    assert parse_radii("1,4..5") == [1, 4, 5]


def test_centroid_of_equal_markings(files, capsys):
    tmp, x, y, z = files
    assert main(["centroid", "--triple", y, y, y]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert Marking.from_json(out["centroid"]) == Marking(Slope(5, 3), Slope(2, 1))
    assert out["config_version"] == config.get_config().version


def test_centroid_is_deterministic(files, capsys):
    tmp, x, y, z = files
    main(["centroid", "--triple", x, y, z])
    first = capsys.readouterr().out
    main(["centroid", "--triple", z, x, y])
    assert capsys.readouterr().out == first


def test_error_codes(files, capsys):
    tmp, x, y, z = files
    (tmp / "bad.json").write_text("{")
    (tmp / "s05.json").write_text(json.dumps({"surface": "S_0_5", "base": "0/1", "transversal": "1/0"}))
    (tmp / "nonadj.json").write_text(json.dumps({"base": "0/1", "transversal": "3/5"}))
    assert main(["centroid", "--triple", x, y, str(tmp / "bad.json")]) == EXIT_INPUT
    assert main(["centroid", "--triple", x, y, str(tmp / "nonadj.json")]) == EXIT_INPUT
    assert main(["centroid", "--triple", x, y, str(tmp / "missing.json")]) == EXIT_INPUT
    assert main(["centroid", "--triple", x, y, str(tmp / "s05.json")]) == EXIT_SURFACE
    assert main(["export", "--ball", x, "--r", "40", "--dot", str(tmp / "o.dot")]) == EXIT_CAP
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["calibrate", "--suite", "nope"])
    assert exc.value.code == EXIT_USAGE


def test_census_files(files, capsys):
    tmp, x, y, z = files
    out = tmp / "census"
    assert main(["census", "--x", x, "--y", x, "--radii", "3..8", "--out", str(out)]) == EXIT_OK
    rows = list(csv.DictReader(open(out / "census.csv")))
    counts = [int(r["centroids"]) for r in rows]
    assert [int(r["r"]) for r in rows] == list(range(3, 9))
    assert counts == sorted(counts)
    summary = json.loads((out / "growth_fit.json").read_text())
    assert "fit" in summary and summary["config_version"] == config.get_config().version


def test_verify_order_suite(capsys):
    assert main(["verify", "--suite", "order", "--seed", "1", "--samples", "40"]) == EXIT_OK
    rep = json.loads(capsys.readouterr().out)
    assert rep["passed"] and rep["config_version"] == config.get_config().version


def test_verify_reports_failures(tmp_path, capsys):
    # a deliberately tiny ceiling must trip the suite
    path = tmp_path / "constants.json"
    shutil.copy(config.default_path(), path)
    config.write_config({"B": 1}, path=path)
    try:
        code = main(["--config", str(path), "verify", "--suite", "geodesic-image", "--samples", "300"])
    finally:
        config.use_config(None)
    assert code == EXIT_FAIL


def test_calibrate_writes_only_with_flag(tmp_path, capsys):
    path = tmp_path / "constants.json"
    shutil.copy(config.default_path(), path)
    config.write_config({"m0": 5}, path=path)
    before = path.read_text()
    try:
        assert main(["--config", str(path), "calibrate", "--suite", "behrstock", "--samples", "300"]) == EXIT_OK
        out = json.loads(capsys.readouterr().out)
        assert out["changes"] and "written_version" not in out
        assert path.read_text() == before
        assert main(["--config", str(path), "calibrate", "--suite", "behrstock", "--samples", "300", "--write-config"]) == EXIT_OK
        out = json.loads(capsys.readouterr().out)
        assert out["written_version"] != out["config_version"]
        assert config.load_config(path=path).m0 == out["proposed"]["m0"]
    finally:
        config.use_config(None)


def test_export(files, capsys):
    tmp, x, y, z = files
    dot, js = tmp / "b.dot", tmp / "b.json"
    assert main(["export", "--ball", x, "--r", "6", "--dot", str(dot), "--json", str(js)]) == EXIT_OK
    assert dot.read_text().startswith("graph ball {")
    assert len(json.loads(js.read_text())["members"]) == len(ball(MU0, 6))
