import json

import pytest

from main import main
from services.planar_network import staircase_network
from services.verification_suites import COUNTEREXAMPLE_RELATIONS, STAIRCASE_MATRIX

POSET_JSON = json.dumps({'n': 5, 'relations': [list(r) for r in COUNTEREXAMPLE_RELATIONS]})
MATRIX_JSON = json.dumps({'rows': [[str(c) for c in row] for row in STAIRCASE_MATRIX]})


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def network_file(tmp_path):
    path = tmp_path / "network.json"
    path.write_text(json.dumps(staircase_network().to_dict()), encoding='utf-8')
    return str(path)


class TestExpand:
    def test_monomial_traces_of_counterexample(self, capsys):
        code, out, _ = run(capsys, 'expand', POSET_JSON, '--basis', 'e')
        assert code == 0
        data = json.loads(out)
        assert data['traces']['phi']['3,2'] == "7"
        assert data['traces']['phi']['4,1'] == "3"
        assert data['expansions']['e']['5'] == "5"
        assert sum(int(v) for v in data['fundamental'].values()) == 120

    def test_graph_input_csv(self, capsys):
        graph = json.dumps({'n': 3, 'edges': [[1, 2], [2, 3], [1, 3]]})
        code, out, _ = run(capsys, 'expand', graph, '--kind', 'graph', '--basis', 'e', '--format', 'csv')
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "table,key,value"
        assert "e,3,6" in lines

    def test_q_expansion_rejects_non_uio(self, capsys):
        poset = json.dumps({'n': 4, 'relations': [[1, 2], [2, 3]]})
        code, _, err = run(capsys, 'expand', poset, '--q')
        assert code == 2
        assert "单位区间序" in err

    def test_output_is_byte_identical(self, capsys):
        _, first, _ = run(capsys, 'expand', POSET_JSON)
        _, second, _ = run(capsys, 'expand', POSET_JSON)
        assert first == second


class TestImmanant:
    def test_identity_determinant(self, capsys):
        identity = json.dumps([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
        code, out, _ = run(capsys, 'immanant', identity, '--trace', 'epsilon:3')
        assert code == 0
        assert json.loads(out)['value'] == "1"

    def test_staircase_matrix(self, capsys):
        code, out, _ = run(capsys, 'immanant', MATRIX_JSON, '--trace', 'phi:3,2')
        assert code == 0
        assert json.loads(out)['value'] == "7"

    def test_network_skeleton_table(self, capsys, network_file):
        code, out, _ = run(capsys, 'immanant', network_file, '--network', '--trace', 'phi:3,2')
        assert code == 0
        data = json.loads(out)
        assert data['value'] == "7"
        assert sum(row['families'] for row in data['skeletons']) == 16

    def test_permanent_of_network(self, capsys, network_file):
        code, out, _ = run(capsys, 'immanant', network_file, '--network', '--trace', 'eta:5')
        assert code == 0
        assert json.loads(out)['value'] == "16"

    def test_size_mismatch(self, capsys):
        code, _, err = run(capsys, 'immanant', MATRIX_JSON, '--trace', 'phi:3,1')
        assert code == 2
        assert "❌" in err

    def test_size_guard(self, capsys):
        ones = json.dumps([["1"] * 6 for _ in range(6)])
        code, _, _ = run(capsys, 'immanant', ones, '--trace', 'eta:6')
        assert code == 2


class TestOtherCommands:
    def test_tableaux_count(self, capsys):
        code, out, _ = run(capsys, 'tableaux-count', POSET_JSON, '--shape', '3,2',
                           '--predicate', 'standard_and_cyclic')
        assert code == 0
        assert json.loads(out)['count'] == 4

    def test_tableaux_q_count(self, capsys):
        antichain = json.dumps({'n': 3, 'relations': []})
        code, out, _ = run(capsys, 'tableaux-count', antichain, '--shape', '3',
                           '--predicate', 'any', '--statistic', 'inv')
        assert code == 0
        assert json.loads(out)['q_count'] == "q^3 + 2*q^2 + 2*q + 1"

    def test_trace_eval_group_element(self, capsys):
        element = json.dumps({'n': 3, 'terms': [{'w': "1,2,3", 'c': "1"}, {'w': "2,1,3", 'c': "-1/2"}]})
        code, out, _ = run(capsys, 'trace-eval', element, '--kind', 'group-element', '--trace', 'chi:2,1')
        assert code == 0
        assert json.loads(out)['value'] == "2"

    def test_trace_eval_poset(self, capsys):
        code, out, _ = run(capsys, 'trace-eval', POSET_JSON, '--trace', 'phi:2,2,1')
        assert json.loads(out)['value'] == "1"

    def test_bad_json(self, capsys):
        code, _, err = run(capsys, 'expand', '{"n": 3, "relations": [')
        assert code == 2
        assert "JSON" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = run(capsys, 'expand', str(tmp_path / "missing.json"))
        assert code == 2

    def test_usage_error(self, capsys):
        assert run(capsys, 'expand')[0] == 2
        assert run(capsys, 'verify', 'no-such-suite')[0] == 2


class TestVerify:
    def test_lindstrom_passes(self, capsys):
        code, out, err = run(capsys, 'verify', 'lindstrom', '--n', '3', '--seed', '7', '--trials', '3')
        assert code == 0
        assert json.loads(out)['passed'] is True
        assert "✅" in err

    def test_reruns_are_identical(self, capsys):
        first = run(capsys, 'verify', 'muir', '--n', '3', '--seed', '7', '--trials', '2')[1]
        second = run(capsys, 'verify', 'muir', '--n', '3', '--seed', '7', '--trials', '2')[1]
        assert first == second

    def test_counterexample_reported(self, capsys):
        code, out, err = run(capsys, 'verify', 'stembridge-rect', '--trials', '1', '--paper-counterexample')
        assert code == 0
        assert "预期中的不一致" in err
        assert any(case.get('expected_divergence') for case in json.loads(out)['cases'])

    def test_counterexample_flag_alias(self, capsys):
        code, out, _ = run(capsys, 'verify', 'stembridge-rect', '--trials', '1', '--known-counterexample')
        assert code == 0
        assert json.loads(out)['parameters']['known_counterexample'] is True

    @pytest.mark.parametrize("suite", ['kostka', 'frobenius', 'muir', 'eta-interpretations'])
    def test_report_is_json(self, capsys, suite):
        code, out, _ = run(capsys, 'verify', suite, '--n', '3', '--seed', '7', '--trials', '2')
        assert code == 0
        data = json.loads(out)
        assert data['suite'] == suite
        assert data['failed'] == 0
        assert all(isinstance(case['expected'], (str, int, bool, list, dict)) for case in data['cases'])

    def test_list(self, capsys):
        code, out, _ = run(capsys, 'verify', 'list')
        assert code == 0
        assert out.startswith("frobenius")

    def test_output_dir(self, capsys, tmp_path):
        target = tmp_path / "reports"
        code, out, _ = run(capsys, '--output-dir', str(target), 'verify', 'kostka', '--n', '3')
        assert code == 0
        assert (target / "verify.json").read_text(encoding='utf-8') == out
