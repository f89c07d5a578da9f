import json

import pytest
from click.testing import CliRunner

from cli.main import cli, run
from dictionary.vars import ENUMERATION_MAX_N
from fakes import FakeRedis, RefusingRedis
from services.clique_service import CliqueService
from services.redis_service import RedisService


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, args, stdin=None):
    return runner.invoke(cli, ["--quiet"] + args, input=stdin, obj={})


class TestConstruct:
    def test_graph6(self, runner):
        result = invoke(runner, ["construct", "k2n:2"])
        assert result.exit_code == 0
        assert result.stdout == "C]\n"

    def test_edge_list(self, runner):
        result = invoke(runner,
                        ["construct", "k1n:2", "--format", "edgelist"])
        assert result.stdout == "3 2\n0 1\n0 2\n"

    def test_unknown_family(self, runner):
        result = invoke(runner, ["construct", "k9"])
        assert result.exit_code == 2
        assert "unknown family" in result.stderr

    def test_parameter_out_of_range(self, runner):
        assert invoke(runner, ["construct", "k1n:1"]).exit_code == 2


class TestClassify:
    def test_member(self, runner):
        result = invoke(runner, ["classify"], "Dhc\n")
        assert result.exit_code == 0
        assert result.stdout == "member c5:0,0\n"

    def test_stream_keeps_input_order(self, runner):
        graph6 = runner.invoke(
            cli, ["construct", "k34"], obj={}
        ).stdout
        result = invoke(runner, ["classify"], graph6 + "Dhc\n")
        assert result.exit_code == 0
        assert result.stdout.splitlines() == ["member k34", "member c5:0,0"]

    def test_out_of_scope(self, runner):
        # C6 tem diâmetro 3
        result = invoke(runner, ["classify", "--format", "edgelist"],
                        "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n")
        assert result.exit_code == 1
        assert result.stdout == "out-of-scope diameter!=2\n"

    def test_k44(self, runner):
        edges = "\n".join(f"{u} {v}" for u in range(4) for v in range(4, 8))
        result = invoke(runner, ["classify", "--format", "edgelist"],
                        f"8 16\n{edges}\n")
        assert result.exit_code == 1
        assert result.stdout.startswith("nonmember K44minus 0:")

    def test_detail(self, runner):
        result = invoke(runner, ["classify", "--detail"], "Dhc\n")
        block = json.loads(result.stdout.split("\n", 1)[1])
        assert list(block) == ["verdict", "order", "edges", "family",
                               "witness"]
        assert block["verdict"] == "member"

    def test_malformed_input(self, runner):
        result = invoke(runner, ["classify"], "D\x01\n")
        assert result.exit_code == 2
        assert result.stderr.startswith("error:")

    def test_non_ascii_input(self, runner):
        result = invoke(runner, ["classify"], "A\u00e9\n")
        assert result.exit_code == 2
        assert "non-ASCII" in result.stderr

    def test_empty_input(self, runner):
        result = invoke(runner, ["classify"], "")
        assert result.exit_code == 2
        assert "no graph" in result.stderr

    def test_self_loop(self, runner):
        result = invoke(runner, ["classify", "--format", "edgelist"],
                        "2 1\n1 1\n")
        assert result.exit_code == 2


class TestDominateAndMinor:
    def test_dominate(self, runner):
        result = invoke(runner, ["dominate"], "Dhc\n")
        assert result.exit_code == 0
        assert result.stdout == "gamma=2 witness=0,2\n"

    def test_minor_with_pattern(self, runner):
        k34 = runner.invoke(cli, ["construct", "k34"], obj={}).stdout
        result = invoke(runner, ["minor", "--pattern", "k33"], k34)
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "minor k33"
        assert len(lines) == 7

    def test_battery_without_certificate(self, runner):
        p10 = runner.invoke(cli, ["construct", "p10"], obj={}).stdout
        result = invoke(runner, ["minor"], p10)
        assert result.exit_code == 1
        assert result.stdout == "no-minor battery\n"

    def test_unknown_pattern(self, runner):
        result = invoke(runner, ["minor", "--pattern", "k7"], "Dhc\n")
        assert result.exit_code == 2


class TestEnumerate:
    def test_count_table(self, runner):
        result = invoke(runner, ["enumerate", "--max-n", "5"])
        assert result.exit_code == 0
        rows = [line.split() for line in result.stdout.splitlines()]
        assert rows[0] == ["n", "graphs"]
        assert rows[1:] == [["1", "1"], ["2", "1"], ["3", "1"],
                            ["4", "2"], ["5", "3"]]

    def test_emit(self, runner):
        result = invoke(runner, ["enumerate", "--max-n", "5",
                                 "--emit", "graph6"])
        assert len(result.stdout.splitlines()) == 8

    def test_bounds(self, runner):
        assert invoke(runner, ["enumerate", "--max-n", "0"]).exit_code == 2
        too_large = str(ENUMERATION_MAX_N + 1)
        assert invoke(runner,
                      ["enumerate", "--max-n", too_large]).exit_code == 3

    def test_verify_flag(self, runner):
        result = invoke(runner, ["enumerate", "--max-n", "6",
                                 "--verify", "thm2"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-1] == "anomalies=0"


class TestCliqueSearch:
    def test_signed(self, runner):
        result = invoke(runner,
                        ["clique-search", "--graph", "k2n:2", "--signed"])
        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            "0 2 : +", "0 3 : +", "1 2 : +", "1 3 : -",
        ]

    def test_none_with_audit(self, runner):
        result = invoke(runner, ["clique-search", "--graph", "k2n:2",
                                 "--mn", "0", "1", "--audit", "1"])
        assert result.exit_code == 1
        assert result.stdout.splitlines() == [
            "NONE exhausted=1", "audit sampled=1 passed=0",
        ]

    def test_graph_file(self, runner, tmp_path):
        path = tmp_path / "c4.txt"
        path.write_text("4 4\n0 2\n0 3\n1 2\n1 3\n")
        result = invoke(runner, ["clique-search", "--graph", str(path),
                                 "--format", "edgelist", "--pushable"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-1] == "1 3 : <-"

    def test_exactly_one_mode(self, runner):
        result = invoke(runner, ["clique-search", "--graph", "k33",
                                 "--signed", "--pushable"])
        assert result.exit_code == 2

    def test_budget(self, runner):
        result = invoke(runner, ["clique-search", "--graph", "k33",
                                 "--signed", "--budget", "10"])
        assert result.exit_code == 3


class TestVerify:
    def test_theorem(self, runner):
        result = invoke(runner, ["verify", "thm2", "--max-n", "7"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert "n=7 total=6 member=6 nonmember=0 anomalies=0" in lines
        assert lines[-1] == "anomalies=0"

    def test_domination(self, runner):
        result = invoke(runner, ["verify", "domination", "--max-n", "8"])
        assert result.exit_code == 0
        assert "gamma3=k34star,w8" in result.stdout.splitlines()
        assert result.stdout.splitlines()[-1] == "matches=true"

    def test_signed_sweep(self, runner):
        result = invoke(runner, ["verify", "omega-signed",
                                 "--min-n", "4", "--max-n", "5"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-3:] == [
            "largest=4", "expected=7", "matches=true",
        ]

    def test_signed_sweep_reaches_clique_number(self, runner):
        result = invoke(runner, ["verify", "omega-signed",
                                 "--min-n", "7", "--max-n", "7"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-3:] == [
            "largest=7", "expected=7", "matches=true",
        ]

    def test_sweep_contradicting_clique_number(self, runner, monkeypatch):
        monkeypatch.setattr("cli.main.KNOWN_CLIQUE_NUMBERS",
                            {("signed", 0, 0): 3})
        result = invoke(runner, ["verify", "omega-signed",
                                 "--min-n", "4", "--max-n", "5"])
        assert result.exit_code == 1
        assert result.stdout.splitlines()[-1] == "matches=false"

    def test_sweep_without_known_value(self, runner):
        result = invoke(runner, ["verify", "omega-mn", "--min-n", "3",
                                 "--max-n", "4", "--mn", "0", "1"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-1].startswith("largest=")

    @pytest.mark.slow
    def test_theorem_reports_unresolved_graph(self, runner):
        result = invoke(runner, ["verify", "thm2", "--max-n", "9"])
        assert result.exit_code == 1
        lines = result.stdout.splitlines()
        assert "n=9 total=16 member=9 nonmember=6 anomalies=1" in lines
        assert lines[-2].startswith("unresolved ")
        assert lines[-1] == "anomalies=1"

    def test_sweep_over_budget(self, runner, monkeypatch):
        monkeypatch.setattr("cli.main.CliqueService",
                            lambda: CliqueService(1))
        result = invoke(runner, ["verify", "omega-mn", "--min-n", "4",
                                 "--max-n", "4", "--mn", "1", "0"])
        assert result.exit_code == 3

    def test_unknown_target(self, runner):
        assert invoke(runner, ["verify", "omega"]).exit_code == 2


class TestCache:
    @pytest.fixture
    def fake_client(self, monkeypatch):
        client = FakeRedis()
        monkeypatch.setattr("cli.main.RedisService",
                            lambda: RedisService(client=client))
        return client

    def test_status(self, runner, fake_client):
        RedisService(client=fake_client).cache_verdict("Dhc", {"line": "x"})
        result = invoke(runner, ["cache", "status"])
        assert result.exit_code == 0
        assert result.stdout == "connected=true keys=1\n"

    def test_clear_keeps_other_namespaces(self, runner, fake_client):
        RedisService(client=fake_client).cache_verdict("Dhc", {"line": "x"})
        fake_client.store["other:key"] = "kept"
        result = invoke(runner, ["cache", "clear"])
        assert result.exit_code == 0
        assert result.stdout == "cleared=1\n"
        assert list(fake_client.store) == ["other:key"]

    def test_unavailable_server(self, runner, monkeypatch):
        monkeypatch.setattr("cli.main.RedisService",
                            lambda: RedisService(client=RefusingRedis()))
        result = invoke(runner, ["cache", "status"])
        assert result.exit_code == 1
        assert result.stdout == "connected=false\n"


class TestRun:
    def test_exit_codes(self, capsys):
        assert run(["--quiet", "construct", "k33"]) == 0
        assert run(["construct", "nope"]) == 2
        assert run(["not-a-command"]) == 2
        assert run(["clique-search", "--graph", "k33", "--signed",
                    "--pushable"]) == 2
        assert run(["enumerate", "--max-n", "99"]) == 3
        assert capsys.readouterr().out == "EFz_\n"
