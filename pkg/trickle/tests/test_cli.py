from pathlib import Path

import pytest

from trickle.cli import (
    EXIT_CAP,
    EXIT_PARSE,
    Command,
    OutputFormat,
    SampleMode,
    main,
    parse_config,
)
from trickle.cli.commands import EXIT_FAILED
from trickle.serializer import deserialize, serialize


def _write(tmp_path: Path, name: str, document: object) -> str:
    path = tmp_path / name
    path.write_text(serialize(document), encoding="utf-8")
    return str(path)


@pytest.fixture
def triangle_file(tmp_path: Path) -> str:
    """Base triangle with q = 5."""
    document = {"base_graph": [[0, 1], [0, 2], [1, 2]], "lists": {"uniform": 5}, "q": 5}
    return _write(tmp_path, "triangle.json", document)


@pytest.fixture
def edge_file(tmp_path: Path) -> str:
    """A free edge given directly as a line graph with explicit lists."""
    document = {"graph": [[1], [0]], "cliques": [[0, 1]], "lists": [[1, 2, 3], [1, 2]], "q": 3}
    return _write(tmp_path, "edge.json", document)


def test_parse_config_defaults(edge_file: str) -> None:
    """Flags land in a frozen run configuration."""
    config = parse_config(["sample", edge_file, "--mode", "simulate", "--steps", "10"])
    assert config.command is Command.SAMPLE
    assert config.mode is SampleMode.SIMULATE
    assert config.output_format is OutputFormat.STRUCTURED
    assert config.instance_path == Path(edge_file)
    assert not config.runtime


def test_verify_fails_at_low_slack(
    triangle_file: str, capsys: pytest.CaptureFixture[str]
) -> None:
    """β = 2 breaks the base upper bound and exits 1 naming the face."""
    assert main(["verify", triangle_file, "--beta", "2"]) == EXIT_FAILED
    captured = capsys.readouterr()
    report = deserialize(captured.out)
    assert isinstance(report, dict)
    assert not report["passed"]
    assert report["first_failure"].startswith("codim=2")
    assert "verify: FAIL" in captured.err


@pytest.mark.slow
def test_verify_passes_at_threshold(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """The triangle with q = 1016 has β = 1013, above every slack line at Δ = 2."""
    q = 1016
    document = {"base_graph": [[0, 1], [0, 2], [1, 2]], "lists": {"uniform": q}, "q": q}
    assert main(["verify", _write(tmp_path, "big.json", document)]) == 0
    assert "verify: PASS" in capsys.readouterr().err


def test_unreadable_instances(tmp_path: Path) -> None:
    """Bad JSON, a missing file and an invalid document all exit 2."""
    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    assert main(["verify", str(broken)]) == EXIT_PARSE
    assert main(["verify", str(tmp_path / "missing.json")]) == EXIT_PARSE
    both = {"base_graph": [[0, 1]], "graph": [[]], "lists": {"uniform": 3}, "q": 3}
    assert main(["verify", _write(tmp_path, "both.json", both)]) == EXIT_PARSE
    tight = {"base_graph": [[0, 1], [1, 2]], "lists": {"uniform": 2}, "q": 2}
    assert main(["verify", _write(tmp_path, "tight.json", tight)]) == EXIT_PARSE


def test_invalid_flags(edge_file: str) -> None:
    """Out-of-range values exit 2, unknown flags stop the parser."""
    assert main(["sample", edge_file, "--eps", "2"]) == EXIT_PARSE
    assert main(["verify", edge_file, "--beta", "1"]) == EXIT_PARSE
    with pytest.raises(SystemExit):
        main(["sample", edge_file, "--no-such-flag"])


def test_facet_cap_exits_three(edge_file: str) -> None:
    """The exact chain over four colorings does not fit under a cap of two."""
    args = ["sample", edge_file, "--mode", "exact", "--cap-facets", "2"]
    assert main(args) == EXIT_CAP


def test_sample_exact(edge_file: str, capsys: pytest.CaptureFixture[str]) -> None:
    """Small chains get an exact mixing curve."""
    assert main(["sample", edge_file]) == 0
    report = deserialize(capsys.readouterr().out)
    assert isinstance(report, dict)
    t_mix = 6
    assert report["t_mix_measured"] == t_mix
    assert report["within_bound"]


def test_sample_falls_back_to_simulation(
    edge_file: str, capsys: pytest.CaptureFixture[str]
) -> None:
    """In auto mode a capped chain is simulated instead."""
    steps = 200
    args = ["sample", edge_file, "--cap-facets", "2", "--steps", str(steps)]
    assert main(args) == 0
    report = deserialize(capsys.readouterr().out)
    assert isinstance(report, dict)
    assert report["steps"] == steps
    assert report["runtime"] is None


def test_sample_output_is_reproducible(
    triangle_file: str, capsys: pytest.CaptureFixture[str]
) -> None:
    """The same flags print the same bytes."""
    args = ["sample", triangle_file, "--mode", "simulate", "--steps", "300", "--chains", "2"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first


def test_csv_tables(triangle_file: str, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """CSV goes to stdout under table headers, or to one file per table."""
    args = ["sample", triangle_file, "--mode", "simulate", "--steps", "50", "--format", "csv"]
    assert main(args) == 0
    out = capsys.readouterr().out
    assert "# chains\n" in out
    assert "# marginals\n" in out
    assert "chain,vertex,color,estimate\n" in out
    target = tmp_path / "run.csv"
    assert main([*args, "--out", str(target)]) == 0
    assert (tmp_path / "run.chains.csv").read_text(encoding="utf-8").startswith("chain,")
    assert (tmp_path / "run.marginals.csv").exists()


def test_garland_and_lemmas(triangle_file: str, capsys: pytest.CaptureFixture[str]) -> None:
    """The link identities hold on the triangle and the matrix lemmas hold on random trials."""
    assert main(["garland", triangle_file]) == 0
    assert main(["lemmas", "--trials", "5", "--seed", "3"]) == 0
    err = capsys.readouterr().err
    assert "garland: PASS" in err
    assert "lemmas: PASS" in err


@pytest.mark.slow
def test_constraints_headline(capsys: pytest.CaptureFixture[str]) -> None:
    """The constants sweep confirms the headline constant."""
    assert main(["constraints", "--max-delta", "8"]) == 0
    captured = capsys.readouterr()
    assert "sup ratio < 31210: PASS" in captured.err
    report = deserialize(captured.out)
    assert isinstance(report, dict)
    assert [row["delta"] for row in report["thresholds"]] == list(range(2, 9))
