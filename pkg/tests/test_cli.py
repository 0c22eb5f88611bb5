"""End-to-end tests of the command line."""

import json

import pandas as pd
import pytest

from src.cli import main
from src.cli.sweep import run_sweep
from config import Scenario, SimOptions


def read_json(path):
    return json.loads(path.read_text(encoding='utf-8'))


def first_line(path):
    return path.read_text(encoding='utf-8').splitlines()[0]


class TestSimulate:
    def test_fig2(self, tmp_path):
        code = main(['simulate', '--scenario', 'fig2', '--step', '0.01', '--t-end', '200', '--out', str(tmp_path)])
        assert code == 0
        assert first_line(tmp_path / 'trajectory.csv') == 't,I,S,R,H,drift'
        summary = read_json(tmp_path / 'summary.json')
        assert summary['stop_reason'] in ('HorizonReached', 'SpreaderExtinct')
        assert summary['i_inf'] == pytest.approx(8.15e-5, abs=2e-6)
        assert summary['final_state']['I'] == pytest.approx(8.15e-5, rel=1e-2)
        assert summary['sigma'] == pytest.approx(0.1)
        assert summary['max_drift'] <= 1e-8

    def test_equilibrium_start(self, tmp_path):
        code = main(['simulate', '--rho1', '0.1', '--rho2', '0.9', '--i0', '0.05', '--s0', '0', '--r0', '0.95',
                     '--out', str(tmp_path)])
        assert code == 0
        frame = pd.read_csv(tmp_path / 'trajectory.csv')
        assert len(frame) == 1
        assert read_json(tmp_path / 'summary.json')['stop_reason'] == 'SpreaderExtinct'

    def test_blank_integral_columns_for_zero_ignorants(self, tmp_path):
        code = main(['simulate', '--i0', '0', '--s0', '0.5', '--r0', '0.5', '--step', '0.1', '--t-end', '1',
                     '--out', str(tmp_path)])
        assert code == 0
        frame = pd.read_csv(tmp_path / 'trajectory.csv')
        assert frame['H'].isna().all()
        assert read_json(tmp_path / 'summary.json')['i_inf'] is None

    def test_fig3_runs(self, tmp_path):
        code = main(['simulate', '--scenario', 'fig3', '--step', '0.05', '--t-end', '10', '--out', str(tmp_path)])
        assert code == 0
        init = read_json(tmp_path / 'summary.json')['init']
        assert sum(init.values()) == pytest.approx(1.0, abs=1e-15)

    def test_invalid_scenario_exit_code(self, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text(json.dumps({'rho1': 0.4, 'rho2': 0.8, 'i0': 0.5, 'gamma': 1}), encoding='utf-8')
        assert main(['simulate', '--scenario', str(path), '--out', str(tmp_path)]) == 2

    def test_invalid_rates_exit_code(self, tmp_path):
        assert main(['simulate', '--rho1', '-1', '--out', str(tmp_path)]) == 2


class TestEquilibria:
    def test_scan(self, tmp_path):
        code = main(['equilibria', '--rho1', '0.4', '--rho2', '0.8', '--mu', '1', '--n', '11', '--out', str(tmp_path)])
        assert code == 0
        report = read_json(tmp_path / 'equilibria.json')
        assert report['sigma'] == pytest.approx(1.0 / 3.0, abs=1e-15)
        assert report['boundary_inward'] is True
        frame = pd.read_csv(tmp_path / 'equilibria.csv')
        assert list(frame.columns) == ['I', 'R', 'tau', 'class']
        classes = frame['class'].tolist()
        assert classes == ['Stable'] * 4 + ['Unstable'] * 7

    def test_mu_changes_tau_not_class(self, tmp_path):
        main(['equilibria', '--rho1', '0.4', '--rho2', '0.8', '--mu', '1', '--out', str(tmp_path / 'a')])
        main(['equilibria', '--rho1', '0.4', '--rho2', '0.8', '--mu', '3', '--out', str(tmp_path / 'b')])
        a = pd.read_csv(tmp_path / 'a' / 'equilibria.csv')
        b = pd.read_csv(tmp_path / 'b' / 'equilibria.csv')
        assert a['class'].tolist() == b['class'].tolist()
        assert b['tau'].tolist() == pytest.approx((3 * a['tau']).tolist(), abs=1e-15)

    def test_belen_pearce_is_invalid(self, tmp_path):
        assert main(['equilibria', '--model', 'belen-pearce3', '--out', str(tmp_path)]) == 2


class TestFinalSize:
    def test_fig2(self, tmp_path):
        assert main(['final-size', '--scenario', 'fig2', '--out', str(tmp_path)]) == 0
        result = read_json(tmp_path / 'final_size.json')
        assert result['i_inf'] == pytest.approx(8.15e-5, abs=2e-6)
        assert set(result) >= {'k', 'sigma', 'i_inf', 'r_inf', 'bracket', 'iterations', 'residual'}

    def test_stable_segment_start(self, tmp_path):
        code = main(['final-size', '--i0', '0.05', '--r0', '0.95', '--s0', '0', '--out', str(tmp_path)])
        assert code == 0
        result = read_json(tmp_path / 'final_size.json')
        assert result['i_inf'] == 0.05
        assert result['iterations'] == 0

    def test_fig5_unstable_start(self, tmp_path):
        assert main(['final-size', '--scenario', 'fig5', '--out', str(tmp_path)]) == 3

    def test_belen_pearce(self, tmp_path):
        code = main(['final-size', '--model', 'belen-pearce3', '--i0', '0.999', '--s0', '0.001', '--r0', '0',
                     '--out', str(tmp_path)])
        assert code == 0
        assert read_json(tmp_path / 'final_size.json')['i_inf'] == pytest.approx(0.2032, abs=1e-3)


class TestVerifyIntegral:
    def test_piqueira(self, tmp_path):
        assert main(['verify-integral', '--scenario', 'fig4', '--samples', '300', '--out', str(tmp_path)]) == 0
        assert read_json(tmp_path / 'verify.json')['verdict'] == 'Conserved'

    def test_paper_variant_fails(self, tmp_path):
        code = main(['verify-integral', '--model', 'belen-pearce-planar', '--variant', 'paper',
                     '--samples', '300', '--out', str(tmp_path)])
        assert code == 5
        report = read_json(tmp_path / 'verify.json')
        assert report['max_abs_residual'] >= 0.1
        assert report['integral'] == 'BelenPearcePaperH'

    def test_corrected_variant(self, tmp_path):
        code = main(['verify-integral', '--model', 'belen-pearce-planar', '--variant', 'corrected',
                     '--samples', '300', '--out', str(tmp_path)])
        assert code == 0

    def test_paper_variant_rejected_for_piqueira(self, tmp_path):
        assert main(['verify-integral', '--variant', 'paper', '--out', str(tmp_path)]) == 2
        assert not (tmp_path / 'verify.json').exists()

    def test_unknown_variant(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            main(['verify-integral', '--variant', 'printed', '--out', str(tmp_path)])
        assert excinfo.value.code == 2

    def test_seed_is_recorded(self, tmp_path):
        main(['verify-integral', '--samples', '50', '--seed', '7', '--out', str(tmp_path)])
        assert read_json(tmp_path / 'verify.json')['seed'] == 7


class TestPhasePortrait:
    def test_fig4_bundle(self, tmp_path):
        code = main(['phase-portrait', '--scenario', 'fig4', '--step', '0.01', '--t-end', '60',
                     '--out', str(tmp_path)])
        assert code == 0
        portrait = read_json(tmp_path / 'portrait.json')
        assert portrait['sigma'] == pytest.approx(1.0 / 3.0)
        assert len(portrait['trajectories']) == 5
        for index, entry in enumerate(portrait['trajectories']):
            assert entry['final']['I'] < 1.0 / 3.0
            trajectory = pd.read_csv(tmp_path / entry['file'])
            assert trajectory['drift'].max() <= 1e-8
            level = pd.read_csv(tmp_path / f'level_{index:02d}.csv')
            assert list(level.columns) == ['R', 'I', 'inside']

    def test_empty_levels(self, tmp_path):
        code = main(['phase-portrait', '--scenario', 'fig4', '--levels', '', '--step', '0.05', '--t-end', '5',
                     '--out', str(tmp_path)])
        assert code == 0
        assert not list(tmp_path.glob('level_*.csv'))

    def test_start_outside_omega(self, tmp_path):
        code = main(['phase-portrait', '--scenario', 'fig4', '--starts', '0.9:0.9', '--out', str(tmp_path)])
        assert code == 2


class TestSweep:
    def test_grid_accuracy(self):
        scenario = Scenario.load('fig2').with_overrides(mu=1.0).with_sim(SimOptions(step=2e-2, t_end=400.0))
        rows = run_sweep(scenario)
        assert len(rows) == 9
        assert [(row['rho1'], row['rho2']) for row in rows][:3] == [(0.1, 0.1), (0.1, 0.4), (0.1, 0.8)]
        assert all(row['error'] == '' for row in rows)
        assert max(row['rel_gap'] for row in rows) <= 1e-3

    def test_worker_count_does_not_change_output(self, tmp_path):
        scenario = tmp_path / 'sweep.json'
        scenario.write_text(json.dumps({
            'rho1': 0.4, 'rho2': 0.8, 'i0': 0.4, 's0': 0.5, 'r0': 0.1, 'step': 0.05, 't_end': 20,
            'rho1_values': [0.2, 0.4], 'rho2_values': [0.5, 0.8], 'mu_values': [1.0],
        }), encoding='utf-8')
        assert main(['sweep', '--scenario', str(scenario), '--workers', '1', '--out', str(tmp_path / 'one')]) == 0
        assert main(['sweep', '--scenario', str(scenario), '--workers', '3', '--out', str(tmp_path / 'three')]) == 0
        one = (tmp_path / 'one' / 'sweep.csv').read_bytes()
        three = (tmp_path / 'three' / 'sweep.csv').read_bytes()
        assert one == three
        assert one.decode('utf-8').splitlines()[0] == 'rho1,rho2,mu,I0,S0,R0,sigma,i_inf,i_T,rel_gap,error'

    def test_all_rows_failing(self, tmp_path):
        code = main(['sweep', '--scenario', 'fig5', '--rho1-values', '0.4', '--rho2-values', '0.8,0.9',
                     '--out', str(tmp_path)])
        assert code == 3
        frame = pd.read_csv(tmp_path / 'sweep.csv')
        assert frame['error'].str.startswith('UnstableStartError').all()

    def test_single_cell_matches_commands(self, tmp_path):
        scenario = tmp_path / 'cell.json'
        scenario.write_text(json.dumps({
            'rho1': 0.4, 'rho2': 0.8, 'mu': 1.0, 'i0': 0.4, 's0': 0.5, 'r0': 0.1, 'step': 0.05, 't_end': 20,
            'rho1_values': [0.4], 'rho2_values': [0.8], 'mu_values': [1.0],
        }), encoding='utf-8')
        for command in ('sweep', 'final-size', 'simulate'):
            assert main([command, '--scenario', str(scenario), '--out', str(tmp_path / command)]) == 0
        row = pd.read_csv(tmp_path / 'sweep' / 'sweep.csv', float_precision='round_trip').iloc[0]
        final_size = read_json(tmp_path / 'final-size' / 'final_size.json')
        summary = read_json(tmp_path / 'simulate' / 'summary.json')
        assert row['i_inf'] == final_size['i_inf']
        assert row['i_T'] == summary['final_state']['I']
        assert row['sigma'] == final_size['sigma']
