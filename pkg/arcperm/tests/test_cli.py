import io
import json
import subprocess
import sys
from pathlib import Path

import pandas as pd
from typer.testing import CliRunner

from arcperm.cli import app, run
from arcperm.enumeration import VerificationReport
from arcperm.tests.commons import FIGURE1_CLASSES, FIGURE1_TEXT
from arcperm.verify import CHECKS

REPO_ROOT = Path(__file__).resolve().parents[2]
runner = CliRunner()


def test_stats_figure1():
    result = run(['stats', FIGURE1_TEXT])
    assert result.exit_code == 0
    assert '"cr":4,"ne":3' in result.payload
    stats = json.loads(result.payload)
    assert stats['n'] == 12
    assert stats['degree_class'] == FIGURE1_CLASSES
    assert len(stats['upper_arcs']) == 7 and len(stats['lower_arcs']) == 5
    assert stats['degree_upper'][0] == [1, 0]
    assert stats['vertex_types'][10] == 'loop'


def test_stats_rejects_malformed_permutation():
    result = run(['stats', '1 1 2'])
    assert result.exit_code == 2
    assert 'repeated' in result.payload
    assert run(['stats', '1 two']).exit_code == 2


def test_unknown_command():
    assert run(['shuffle', '1 2']).exit_code == 2


def test_psi_twice_reproduces_input():
    once = run(['psi', FIGURE1_TEXT])
    assert once.exit_code == 0
    twice = run(['psi', once.payload.strip()])
    assert twice.payload.strip() == FIGURE1_TEXT
    assert run(['psi', '3,2,1']).payload.strip() == '2 3 1'


def test_table_crossing():
    result = run(['table', '--stat', 'crossing', '--max-n', '4', '--jobs', '1'])
    assert result.exit_code == 0
    lines = result.payload.strip().split('\n')
    assert lines[0] == 'n,k,count'
    assert '4,2,10' in lines
    frame = pd.read_csv(io.StringIO(result.payload))
    assert frame.groupby('n')['count'].sum().tolist() == [1, 2, 6, 24]


def test_table_rejects_large_n():
    assert run(['table', '--max-n', '13', '--jobs', '1']).exit_code == 2


def test_joint_by_degree(tmp_path):
    out = tmp_path / 'joint.csv'
    result = run(['joint', '--n', '3', '--by-degree', '--jobs', '1', '--out', str(out)])
    assert result.exit_code == 0
    assert result.payload == ''
    frame = pd.read_csv(out)
    assert list(frame.columns) == ['n', 'cr', 'ne', 'degree_class', 'count']
    assert frame['count'].sum() == 6
    assert run(['joint', '--n', '8', '--by-degree', '--jobs', '1']).exit_code == 2


def test_verify_symmetry():
    result = run(['verify', '--check', 'symmetry', '--n', '6', '--jobs', '1'])
    assert result.exit_code == 0
    reports = [json.loads(line) for line in result.payload.strip().split('\n')]
    assert [r['n'] for r in reports] == [1, 2, 3, 4, 5, 6]
    assert all(r['passed'] for r in reports)


def test_verify_involution_with_samples():
    result = run(['verify', '--check', 'involution', '--n', '4', '--samples', '100', '--seed', '7',
                  '--jobs', '1'])
    assert result.exit_code == 0
    last = json.loads(result.payload.strip().split('\n')[-1])
    assert last['checked'] == 24 + 100


def test_verify_rejects_unknown_check():
    assert run(['verify', '--check', 'everything', '--n', '3']).exit_code == 2
    assert run(['verify', '--check', 'maxnesting', '--n', '10']).exit_code == 2


def test_render_ascii_and_svg(tmp_path):
    result = run(['render', '2 1'])
    assert result.exit_code == 0
    assert result.payload.split('\n')[2] == '1  2'
    out = tmp_path / 'figure1.svg'
    result = run(['render', FIGURE1_TEXT, '--format', 'svg', '--out', str(out)])
    assert result.exit_code == 0 and result.payload == ''
    assert out.read_text().count('id="lower-arc-') == 5


def test_runner_exit_codes():
    assert runner.invoke(app, ['stats', '2 3 1']).exit_code == 0
    assert runner.invoke(app, ['stats', '2 3 3']).exit_code == 2
    assert runner.invoke(app, ['verify', '--check', 'catalan', '--n', '5', '--jobs', '1']).exit_code == 0


def test_env_settings(monkeypatch):
    monkeypatch.setenv('ARCPERM_SAMPLES', 'many')
    assert run(['verify', '--check', 'oracle', '--n', '2']).exit_code == 2


def test_module_entrypoint():
    cp = subprocess.run([sys.executable, '-m', 'arcperm', 'psi', '2 3 1'], capture_output=True, text=True,
                        cwd=REPO_ROOT)
    assert cp.returncode == 0, cp.stderr
    assert cp.stdout.strip() == '3 2 1'


def test_verify_saves_configuration(tmp_path):
    out = tmp_path / 'verify.json'
    result = run(['verify', '--check', 'bijection', '--n', '4', '--out', str(out), '--jobs', '1'])
    assert result.exit_code == 0
    saved = json.loads(out.read_text())
    assert saved['configuration']['check'] == 'bijection'
    assert saved['configuration']['jobs'] == 1
    assert [r['n'] for r in saved['reports']] == [1, 2, 3, 4]


def test_verify_rejects_sizes_below_one():
    for argv in (['verify', '--check', 'all', '--n', '0'], ['verify', '--check', 'catalan', '--n', '-3']):
        result = run(argv)
        assert result.exit_code == 2
        assert 'at least 1' in result.payload
    assert runner.invoke(app, ['verify', '--n', '0']).exit_code == 2


def test_verify_failing_check_exits_one(monkeypatch):
    def failing(n, args):
        report = VerificationReport('catalan', n, checked=1)
        report.fail(f'n={n}: forced failure')
        return report

    monkeypatch.setitem(CHECKS, 'catalan', (failing, 9))
    result = run(['verify', '--check', 'catalan', '--n', '2', '--jobs', '1'])
    assert result.exit_code == 1
    reports = [json.loads(line) for line in result.payload.strip().split('\n')]
    assert [r['n'] for r in reports] == [1, 2]
    assert not any(r['passed'] for r in reports)
    assert reports[1]['failures'] == ['n=2: forced failure']
