import io
import json


from a1unicity.cli import run
from a1unicity.enumerator import canonicalize
from a1unicity.sl2modules import parse_descriptor


def capture(argv):
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


def capture_json(argv):
    code, text = capture(argv + ["--json"])
    return code, json.loads(text)


def test_tensor_command():
    code, payload = capture_json(["tensor", "-p", "7", "2,5"])
    assert code == 0
    assert payload["result"]["blocks"] == [6, 4]
    code, text = capture(["tensor", "-p", "7", "2,5"])
    assert code == 0 and "J6+J4" in text


def test_classify_classical_command():
    code, payload = capture_json(
        ["classify", "classical", "--family", "C", "--dim", "10",
         "--p", "7", "--partition", "6,1,1,1,1"]
    )
    assert code == 0
    assert payload["result"]["verdict"] == "Unique"

    code, payload = capture_json(
        ["classify", "classical", "--family", "A", "--p", "5", "--partition", "5,1"]
    )
    assert code == 0
    assert payload["result"]["verdict"] == "NonUnique"
    assert payload["result"]["witnesses"] == ["L(4)+triv", "W(5)"]


def test_classify_exceptional_command():
    code, payload = capture_json(
        ["classify", "exceptional", "--group", "E7", "--p", "7", "--label", "A6"]
    )
    assert code == 0
    assert payload["result"]["verdict"] == "NonUnique"
    code, payload = capture_json(
        ["classify", "exceptional", "--group", "E8", "--p", "5", "--label", "A1"]
    )
    assert code == 1
    assert payload["result"]["verdict"] == "BadPrime"


def test_enumerate_command():
    code, payload = capture_json(
        ["enumerate", "--form", "orthogonal", "--p", "5", "--dim", "8",
         "--partition", "5,3", "--max-twist", "3"]
    )
    assert code == 0
    result = payload["result"]
    assert result["count"] >= 2
    assert {"L(4)+L(2)", "L(1)*L(3)@1"} <= set(result["classes"])
    # every printed class string reparses to the same canonical class
    for text in result["classes"]:
        assert str(canonicalize(parse_descriptor(text, 5))) == text


def test_module_command():
    code, payload = capture_json(["module", "-p", "7", "T(10)"])
    assert code == 0
    assert payload["result"]["dimension"] == 14
    assert payload["result"]["blocks"] == [7, 7]
    assert payload["result"]["realizable"] is False


def test_witnesses_command():
    code, payload = capture_json(
        ["witnesses", "--family", "Sp", "--p", "5", "--partition", "5,5"]
    )
    assert code == 0
    assert set(payload["result"]["witnesses"]) == {"2*L(4)", "L(1)*L(4)@1"}


def test_domain_errors_exit_one():
    code, _ = capture(
        ["classify", "classical", "--family", "B", "--dim", "5", "--p", "7",
         "--partition", "5"]
    )
    assert code == 1  # small rank -> out of scope
    code, _ = capture(["witnesses", "--family", "A", "--p", "7", "--partition", "4,2"])
    assert code == 1  # no witness rule
    code, _ = capture(["module", "-p", "5", "L(9)"])
    assert code == 1  # weight not restricted


def test_usage_errors_exit_two():
    code, _ = capture(["classify", "classical", "--family", "Q", "--p", "5",
                       "--partition", "4"])
    assert code == 2
    code, _ = capture(["tensor", "-p", "5", "2,x"])
    assert code == 2
    code, _ = capture(["classify", "classical", "--family", "A", "--p", "5",
                       "--partition", "1,3"])
    assert code == 2  # not descending
    code, _ = capture(["nonsense"])
    assert code == 2


def test_exceptional_unknown_label_exits_one():
    code, payload = capture_json(
        ["classify", "exceptional", "--group", "G2", "--p", "5", "--label", "A3"]
    )
    assert code == 1
    assert payload["result"]["verdict"] == "UnknownLabel"


def test_selfcheck_quick():
    code, text = capture(["selfcheck", "--quick"])
    assert code == 0
    assert "all checks passed" in text
    assert text.count("PASS") == 9


def test_json_repeatability_in_process():
    battery = [
        ["tensor", "-p", "11", "3,4,2"],
        ["classify", "classical", "--family", "D", "--dim", "8", "--p", "5",
         "--partition", "3,3,1,1"],
        ["enumerate", "--form", "symplectic", "--p", "5", "--partition", "3,3,1,1"],
        ["classify", "exceptional", "--group", "F4", "--p", "13", "--label", "B3"],
    ]
    for argv in battery:
        _, first = capture(argv + ["--json"])
        _, second = capture(argv + ["--json"])
        assert first == second
