
import pytest
from numpy.testing import assert_allclose

from partialspec.suites import run_suite, run_checks, format_report, Check, SUITES
from partialspec.errors import ConfigError

report, code = run_suite('all', seed=0)

NAMES = [
	'neumann.near_identity_oracle', 'neumann.perturbed_bounds', 'neumann.bounds_monotone',
	'graph.homogeneity', 'graph.monotone_in_p', 'graph.norm_sandwich',
	'graph.bounded_equivalence', 'graph.closedness_probe',
	'cfunc.k_zeta_norm_formula', 'cfunc.resolvent_residual', 'cfunc.resolvent_in_kernel',
	'cfunc.example2_sandwich', 'cfunc.example2_divergence', 'cfunc.example3_lower_bound',
	'cfunc.first_resolvent_identity', 'cfunc.spectrum_zeros',
	'shift.contraction', 'shift.norm_attainment', 'shift.isometry',
	'shift.resolvent_residual', 'shift.series_vs_dense', 'shift.first_resolvent_identity',
	'shift.disk_raster', 'shift.restricted_classification',
	]

"""
TESTS
"""

class TestSuites:

	def test_all_pass (self):
		assert code == 0, report
		assert 'FAIL' not in report

	def test_one_line_per_check (self):
		lines = report.splitlines()
		assert len(lines) == len(NAMES) + 1
		for name, line in zip(NAMES, lines):
			assert line.startswith('[PASS] %s measured=' % name)
			assert 'tolerated=' in line

	def test_single_suite (self):
		for name in SUITES:
			checks = run_checks(name)
			assert all( c.name.startswith(name + '.') for c in checks )
		rep, c = run_suite('neumann')
		assert c == 0

	def test_fault_injection (self):
		rep, c = run_suite('neumann', tol_scale=0.)
		assert c != 0
		assert '[FAIL] neumann.near_identity_oracle' in rep
		assert '[FAIL] neumann.perturbed_bounds' in rep

	def test_scaled_tolerances (self):
		base   = run_checks('shift')
		scaled = run_checks('shift', tol_scale=0.5)
		for b, s in zip(base, scaled):
			assert_allclose(s.tolerated, 0.5 * b.tolerated)
		for c in run_checks('neumann', tol_scale=0.):
			assert c.tolerated == 0.
			assert c.passed == (c.measured <= 0.)
		rep, _ = run_suite('neumann', tol_scale=0.)
		assert '[FAIL] neumann.near_identity_oracle measured=' in rep
		assert all( line.endswith('tolerated=0') for line in rep.splitlines()[:-1] )

	def test_seeded (self):
		assert run_suite('graph', seed=5) == run_suite('graph', seed=5)

	def test_unknown (self):
		with pytest.raises(ConfigError):
			run_suite('eigen')

	def test_format_report (self):
		rep = format_report([ Check('a.b', 0.5, 1., True), Check('a.c', 2., 1., False) ])
		assert rep.splitlines() == [ '[PASS] a.b measured=0.5 tolerated=1',
		                             '[FAIL] a.c measured=2 tolerated=1',
		                             '2 checks, 1 failed' ]
