import json

import pytest

from pbwcheck.cli import main


@pytest.fixture
def write(tmp_path, texts):
    def write(name, text):
        path = tmp_path / name
        path.write_text(texts.get(text, text))
        return str(path)

    return write


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hilbert(write, capsys):
    code, out, _ = _run(capsys, 'hilbert', write('ex53.alg', 'ex53'), '--max-deg', '4')
    data = json.loads(out)

    assert code == 0
    assert data['schema'] == 1
    assert data['command'] == 'hilbert'
    assert data['hilbert'] == [1, 3, 8, 21, 54]
    assert data['input']['gens'] == ['x', 'y', 'z']


def test_resolution(write, capsys):
    code, out, _ = _run(capsys, 'resolution', write('ex53.alg', 'ex53'), '--max-deg', '6')
    data = json.loads(out)

    assert code == 0
    assert data['shifts']['2'] == [-2, -3]
    assert data['betti']['3'] == {'3': 1}
    assert data['purity'] is None
    assert data['problems'] == []


def test_complexity_with_euler(write, capsys):
    code, out, _ = _run(capsys, 'complexity', write('ex53.alg', 'ex53'), '--max-deg', '10', '--euler')
    data = json.loads(out)

    assert code == 0
    assert data['complexity']['value'] == 2
    assert data['complexity']['status'] == 'exact'
    assert data['euler']['ok']


def test_unbounded_complexity(write, capsys):
    code, out, _ = _run(capsys, 'complexity', write('ex52.alg', 'ex52'), '--max-deg', '8')
    data = json.loads(out)

    assert code == 0
    assert data['complexity']['status'] == 'at-least'
    assert data['complexity']['unbounded_growth']


def test_central_extension(write, capsys):
    code, out, _ = _run(capsys, 'central-ext', write('weyl.def', 'weyl'), '--max-deg', '4', '--central', 't')
    data = json.loads(out)

    assert code == 0
    assert data['extension']['relations'] == ['x*y - y*x - t^2']
    assert data['dimensions'] == [1, 3, 6, 10, 15]
    assert 'gens x y t' in data['presentation']


def test_regularity_exit_code(write, capsys):
    code, out, _ = _run(capsys, 'regularity', write('bad.def', 'sl2_perturbed'), '--max-deg', '5')

    assert code == 1
    assert not json.loads(out)['regularity']['regular']


def test_pbw_check(write, capsys):
    path = write('sl2.def', 'sl2')

    code, out, _ = _run(capsys, 'pbw-check', path, '--max-deg', '5', '--method', 'jacobi', '--method', 'oracle')
    data = json.loads(out)
    assert code == 0
    assert data['verdict'] == 'yes'
    assert sorted(data['methods']) == ['jacobi', 'oracle']

    code, out, _ = _run(capsys, 'pbw-check', write('bad.def', 'sl2_perturbed'), '--max-deg', '5')
    assert code == 1
    assert json.loads(out)['witnesses']


def test_text_report(write, capsys):
    code, out, _ = _run(capsys, 'pbw-check', write('sl2.def', 'sl2'), '--max-deg', '5', '--text')

    assert code == 0
    assert out.startswith('PBW: yes, unanimous')


def test_text_betti_grid(write, capsys):
    _, out, _ = _run(capsys, 'resolution', write('ex53.alg', 'ex53'), '--max-deg', '4', '--text')

    assert 'betti (rows n, columns j):' in out


def test_out_file(write, tmp_path, capsys):
    target = tmp_path / 'report.json'
    code, out, _ = _run(capsys, 'hilbert', write('ex53.alg', 'ex53'), '--max-deg', '3', '--out', str(target))

    assert code == 0
    assert out == ''
    assert json.loads(target.read_text())['hilbert'] == [1, 3, 8, 21]


@pytest.mark.parametrize('text, kind', [
    ('gens x y\nrel x*', 'syntax'),
    ('gens x y\nrel x', 'linear-relation'),
    ('gens x y z\nrel x*y', 'name-collision'),
])
def test_errors(write, capsys, text, kind):
    command = 'central-ext' if kind == 'name-collision' else 'hilbert'
    code, out, err = _run(capsys, command, write('input.alg', text), '--max-deg', '3')

    assert code == 2
    assert out == ''
    assert err.startswith(f'error[{kind}]')


def test_missing_file(tmp_path, capsys):
    code, _, err = _run(capsys, 'hilbert', str(tmp_path / 'absent.alg'))

    assert code == 2
    assert err.startswith('error[io]')


def test_bound_too_large(write, capsys):
    code, _, err = _run(capsys, 'regularity', write('weyl.def', 'weyl'), '--max-deg', '3', '--p', '3')

    assert code == 2
    assert 'error[truncation]' in err


def test_invalid_method(write, capsys):
    with pytest.raises(SystemExit):
        main(['pbw-check', write('sl2.def', 'sl2'), '--method', 'magic'])


def test_hmax_must_be_positive(write, capsys):
    with pytest.raises(SystemExit) as exc:
        main(['resolution', write('ex53.alg', 'ex53'), '--hmax', '0'])

    assert exc.value.code == 2
    assert 'at least 1' in capsys.readouterr().err


def test_value_errors_exit_with_usage_code(write, capsys, monkeypatch):
    def refuse(*args, **kwargs):
        raise ValueError('hmax must be at least 1')

    monkeypatch.setattr('pbwcheck.cli.commands.minimal_resolution', refuse)
    code, out, err = _run(capsys, 'resolution', write('ex53.alg', 'ex53'), '--max-deg', '4')

    assert code == 2
    assert out == ''
    assert err.startswith('error[value]')


def test_complexity_reports_relation_degree(write, capsys):
    code, out, _ = _run(capsys, 'complexity', write('cubic3.alg', 'cubic3'), '--max-deg', '8')
    data = json.loads(out)

    assert code == 0
    assert data['complexity']['value'] == 3
    assert data['complexity']['purity'] == 3
    assert data['complexity']['relation_degree'] == 3
    assert data['complexity']['within_relation_degree']
