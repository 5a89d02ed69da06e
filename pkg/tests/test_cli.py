import io
import json

import pytest

from incentives import EnumerationBound, MAX_DEPTH, enumerate_tree
from incentives.cli import build_parser, parse_seq, parse_set, run


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_parse_set():
    assert parse_set("-3,2") == (-3, 2)
    assert parse_set("5,7,9,11") == (5, 7, 9, 11)
    assert parse_set("2,2") == (2,)
    assert parse_set("7") == (7,)
    with pytest.raises(Exception):
        parse_set("a,b")
    with pytest.raises(Exception):
        parse_set("")
    with pytest.raises(Exception):
        parse_set(str(2**31 + 1))


def test_parse_seq_keeps_order_and_repeats():
    assert parse_seq("5,-3,5") == (5, -3, 5)


def test_theta_command():
    code, out, err = cli("theta", "--c=-3,2")
    assert (code, out, err) == (0, "3\n", "")


def test_admissible_command():
    assert cli("admissible", "--c=-4", "--x=3") == (0, "false\n", "")
    assert cli("admissible", "--c=-4,6", "--x=2,8") == (0, "true\n", "")


def test_check_incentive_command():
    assert cli("check-incentive", "--gens=3,7,8", "--c=-3,2")[1] == "true\n"
    assert cli("check-incentive", "--gens=3", "--c=-4")[1] == "false\n"


def test_closure_text_golden():
    code, out, _ = cli("closure", "--c=-3,2", "--x=5,7,9,11")
    assert code == 0
    assert out == "msg: 5,7,9,11,13 | frobenius: 8 | genus: 6\n"


def test_closure_scaled_text():
    _, out, _ = cli("closure", "--c=-2,2", "--x=4,6")
    assert out == (
        "msg: 4,6 | scale: 2 | reduced msg: 2,3"
        " | reduced frobenius: 1 | reduced genus: 1\n"
    )


def test_closure_json():
    code, out, _ = cli("closure", "--c=-3,2", "--x=5", "--format=json")
    doc = json.loads(out)
    assert doc == {
        "kind": "numerical",
        "scale": 1,
        "msg": [5, 7, 9, 11, 13],
        "reduced": {"msg": [5, 7, 9, 11, 13], "frobenius": 8, "genus": 6},
    }


def test_closure_domain_error_exit_1():
    code, out, err = cli("closure", "--c=-4", "--x=3")
    assert code == 1
    assert out == ""
    assert err.startswith("error: ")
    assert err.count("\n") == 1


def test_usage_errors_exit_2():
    assert cli("closure", "--c=abc", "--x=3")[0] == 2
    assert cli("closure", "--x=3")[0] == 2
    assert cli("membership", "--n=4")[0] == 2
    assert cli("membership", "--n=4", "--gens=2,3", "--c=-1")[0] == 2
    assert cli("tree", "--c=-2", "--max-genus=3", "--max-depth=1")[0] == 2
    assert cli("nonsense")[0] == 2
    assert cli()[0] == 2


def test_membership_command():
    assert cli("membership", "--gens=5,7,9", "--n=13")[1] == "false\n"
    assert cli("membership", "--gens=5,7,9", "--n=14")[1] == "true\n"
    assert cli("membership", "--c=-3,2", "--x=5", "--n=8")[1] == "false\n"
    assert cli("membership", "--c=-3,2", "--x=5", "--n=9")[1] == "true\n"


def test_tree_text():
    code, out, _ = cli("tree", "--c=-3,2", "--x=5", "--max-depth=10")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "⟨3,4,5⟩ frobenius=2 genus=2"
    assert lines[-1] == "nodes=6 truncated=false"
    assert "remove 8 -> ⟨5,7,9,11,13⟩ frobenius=8 genus=6" in out


def test_tree_json_matches_library():
    code, out, _ = cli("tree", "--c=-3,2", "--x=5", "--max-depth=10", "--format=json")
    doc = json.loads(out)
    tree = enumerate_tree((-3, 2), (5,), EnumerationBound(MAX_DEPTH, 10))
    assert doc == json.loads(tree.to_json())
    assert doc["metadata"]["node_count"] == 6
    edges = {
        (row["parent_id"], row["id"], row["removed_generator"])
        for row in doc["nodes"]
        if row["parent_id"] is not None
    }
    assert (0, 1, 3) in edges and (0, 2, 4) in edges


def test_tree_dot():
    code, out, _ = cli("tree", "--c=-4,6", "--max-genus=4", "--format=dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.endswith("}\n")
    assert 'label="⟨4,5,6,7⟩"' in out


def test_tree_default_bound_is_genus_20():
    code, out, _ = cli("tree", "--c=-3,2", "--x=5")
    assert code == 0
    assert out.splitlines()[-1] == "nodes=6 truncated=false"


def test_decompose_text():
    code, out, _ = cli("decompose", "--c=-4,6", "--max-genus=4")
    assert code == 0
    assert out.splitlines()[0] == "includes trivial monoid: true"
    assert "divisor 1:" in out and "divisor 2:" in out


def test_decompose_json():
    code, out, _ = cli("decompose", "--c=-4,6", "--max-genus=4", "--format=json")
    doc = json.loads(out)
    assert doc["includes_trivial"] is True
    assert sorted(doc["slices"]) == ["1", "2"]
    assert doc["slices"]["1"]["nodes"][0]["msg"] == [4, 5, 6, 7]


def test_mab_commands():
    assert cli("mab", "invoice", "--a=5,7,9,11", "--b=-3,0,2", "--seq=5,-3,7")[1] == "9\n"
    assert cli("mab", "member", "--a=5,7,9,11", "--b=-3,0,2", "--n=8")[1] == "false\n"
    assert cli("mab", "member", "--a=5,7,9,11", "--b=-3,0,2", "--n=9")[1] == "true\n"
    code, out, _ = cli("mab", "set", "--a=5,7,9,11", "--b=-3,0,2", "--bound=14")
    assert out == "0,5,7,9,10,11,12,13,14\n"
    code, out, _ = cli(
        "mab", "set", "--a=5,7,9,11", "--b=-3,0,2", "--bound=12", "--format=json"
    )
    assert json.loads(out) == [0, 5, 7, 9, 10, 11, 12]


def test_mab_invoice_rejects_bad_sequence():
    code, out, err = cli("mab", "invoice", "--a=5,7", "--b=-3,0", "--seq=5,4,7")
    assert code == 1
    assert "position 2" in err


def test_verify_commands_exit_0_on_success():
    assert cli("verify", "theorem5", "--a=5,7,9,11", "--b=-3,0,2", "--bound=120") == (
        0,
        "verified: true\n",
        "",
    )
    assert cli("verify", "tree", "--c=-3,2", "--max-frobenius=9")[0] == 0
    assert cli("verify", "closure-agreement", "--c=-3,2", "--x=5", "--bound=80")[0] == 0


def test_output_is_deterministic():
    for argv in (
        ("tree", "--c=-3,2", "--x=5", "--max-depth=10", "--format=json"),
        ("tree", "--c=-1,1", "--max-frobenius=7", "--format=dot"),
        ("decompose", "--c=-4,6", "--max-genus=5", "--format=json"),
        ("closure", "--c=-3,2", "--x=5,7,9,11"),
    ):
        assert cli(*argv) == cli(*argv)


def test_threads_flag_accepted():
    a = cli("tree", "--c=-1,1", "--max-frobenius=8", "--threads=4", "--format=json")
    b = cli("tree", "--c=-1,1", "--max-frobenius=8", "--format=json")
    assert a == b


def test_debug_checks_flag():
    code, out, _ = cli("tree", "--c=-3,2", "--max-frobenius=9", "--debug-checks")
    assert code == 0


def test_build_parser_smoke():
    parser = build_parser()
    ns = parser.parse_args(["closure", "--c=-3,2", "--x=5"])
    assert ns.command == "closure"
    assert ns.c == (-3, 2)
    assert ns.x == (5,)
