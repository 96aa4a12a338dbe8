from __future__ import annotations

from fractions import Fraction
import json

from click.testing import CliRunner
import pytest

from app import app
from cy4vertex.cli import RunConfig, cli, load_signs
from cy4vertex.errors import EXIT_OK, EXIT_SCOPE, InputError


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def client():
    app.config["TESTING"] = True
    return app.test_client()


#####################################################################
# RunConfig


def test_flags_override_config_file(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("order: 3\nvertex:\n  kind: pt0\n")
    config = RunConfig.resolve("vertex", {"order": 2}, str(path))
    assert config.order == 2
    assert config.kind == "pt0"


def test_config_file_overrides_defaults(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("order: 3\nglobal:\n  degree: 2\n")
    assert RunConfig.resolve("vertex", {}, str(path)).order == 3
    config = RunConfig.resolve("global", {"spec": "c4"}, str(path))
    assert config.degree == 2
    assert config.m_max == Fraction(4)


def test_unknown_config_key(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("colour: blue\n")
    with pytest.raises(InputError):
        RunConfig.resolve("vertex", {}, str(path))


@pytest.mark.parametrize("flags", [
    {"order": -1},
    {"signs": "formula9"},
    {"jobs": 0},
    {"cocharacter": "1,2,3"},
])
def test_invalid_run_config(flags):
    with pytest.raises(InputError):
        RunConfig.resolve("vertex", flags)


def test_output_name():
    config = RunConfig.resolve("global", {"spec": "local-p2:a=2", "degree": 1})
    assert config.output_name() == "global-pt1-local-p2-a-2-d1"


def test_load_signs_mapping(tmp_path):
    path = tmp_path / "signs.yaml"
    path.write_text("'dt[1]': 1\n'dt[2]': -1\n")
    signs = load_signs(str(path))
    assert signs.sign("dt[2]") == -1
    assert signs.provenance["dt[1]"] == "explicit"


#####################################################################
# Commands


def test_vertex_empty_order_zero(runner):
    result = runner.invoke(cli, ["vertex", "--kind", "dt", "--mu", "empty", "--order", "0"])
    assert result.exit_code == EXIT_OK
    assert result.output.splitlines()[0].split() == ["1", "(1)"]


def test_verify_order_zero(runner):
    result = runner.invoke(cli, ["verify", "--case", "dtpt0-1", "--order", "0"])
    assert result.exit_code == EXIT_OK
    assert result.output.startswith("Verified")


def test_global_unknown_geometry(runner):
    result = runner.invoke(cli, ["global", "--geometry", "quintic"])
    assert result.exit_code == EXIT_SCOPE
    assert "ERROR!" in result.output


def test_vertex_rejects_search_signs(runner):
    result = runner.invoke(cli, ["vertex", "--signs", "search"])
    assert result.exit_code == EXIT_SCOPE


def test_golden_files(runner, tmp_path):
    result = runner.invoke(cli, ["vertex", "--mu", "empty", "--order", "1", "--golden-dir", str(tmp_path),
                                 "--name", "empty"])
    assert result.exit_code == EXIT_OK
    assert (tmp_path / "empty.series.txt").read_text() == result.output
    index = json.loads((tmp_path / "empty.index.json").read_text())
    assert index["command"] == "vertex"
    assert [row["count"] for row in index["provenance"]] == [1, 1]


#####################################################################
# Flask routes


def test_route_vertex(client):
    response = client.post("/vertex", json={"kind": "dt", "spec": "empty", "order": 0})
    assert response.status_code == 200
    assert response.get_json()["series"][0]["coefficient"] == "(1)"


def test_route_bad_request(client):
    response = client.post("/global", json={"spec": "quintic"})
    assert response.status_code == 400


def test_route_unknown_field(client):
    response = client.post("/verify", json={"colour": "blue"})
    assert response.status_code == 400
