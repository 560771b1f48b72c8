"""
MIT License

Copyright (c) 2018 Simon Olofsson

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""

import logging
from collections import namedtuple

import numpy as np

from . import neumann, graph_norm, cfunc, shift
from .case_studies.shift import FullShift
from .errors import ConfigError
from .spaces import GridFunction, DiracFunctional, SeqVector
from .utils import random_state, complex_raster, SPECTRAL, RESOLVED, INDETERMINATE

logger = logging.getLogger(__name__)

"""
Acceptance suites: every check measures one quantity and compares it
against a tolerated value, passing iff measured <= tolerated * tol_scale.
"""

Check = namedtuple('Check', ['name', 'measured', 'tolerated', 'passed'])

TOL = 1e-12
N   = cfunc.DEFAULT_N


def _random_smooth (rng, n=N):
	# Complex cubic plus a sine, coefficients in the unit box
	c = rng.uniform(-1, 1, (5,)) + 1j * rng.uniform(-1, 1, (5,))
	return GridFunction.from_callable(lambda x: c[0] + c[1]*x + c[2]*x**2
		+ c[3]*x**3 + c[4]*np.sin(np.pi*x), n)


def _random_disk (rng, radius):
	r, phi = radius * np.sqrt(rng.rand()), 2 * np.pi * rng.rand()
	return r * np.exp(1j * phi)


def _random_matrix (rng, n):
	return rng.randn(n, n) + 1j * rng.randn(n, n)


"""
neumann
"""
def neumann_checks (rng):
	exps = (1, 2, np.inf)

	# Near-identity inversion against a Gaussian-elimination oracle
	worst = 0.
	for k in range(100):
		d  = rng.randint(1, 9)
		p  = exps[k % 3]
		x  = neumann.MatrixOperator(_random_matrix(rng, d), p)
		x  = x.with_entries( x.entries * 0.9 * rng.rand() / neumann.operator_norm(x) )
		nx = neumann.operator_norm(x)
		res    = neumann.invert_near_identity(x, TOL)
		oracle = np.linalg.solve(np.eye(d) - x.entries, np.eye(d))
		err    = neumann.operator_norm( x.with_entries(res.inverse_approx.entries - oracle) )
		worst  = max(worst, err / (TOL / (1. - nx)))
	yield 'neumann.near_identity_oracle', worst, 1.

	# Perturbed inversion: all three differences below their bounds
	worst = 0.
	for k in range(100):
		d  = rng.randint(1, 9)
		p  = exps[k % 3]
		a  = neumann.MatrixOperator(3. * np.eye(d) + _random_matrix(rng, d) / d, p)
		a_inv  = np.linalg.inv(a.entries)
		n_ainv = neumann.operator_norm( a.with_entries(a_inv) )
		x  = a.with_entries( _random_matrix(rng, d) )
		x  = x.with_entries( x.entries * 0.9 * rng.rand() / (n_ainv * neumann.operator_norm(x)) )
		res    = neumann.invert_perturbed(a, x, TOL)
		oracle = np.linalg.inv(a.entries - x.entries)
		first  = a_inv + np.matmul(a_inv, np.matmul(x.entries, a_inv))
		diffs  = [ oracle, oracle - a_inv, oracle - first, res.inverse_approx.entries - oracle ]
		bounds = [ res.bound_inverse_norm, res.bound_first_order, res.bound_second_order,
		           res.truncation_tail_bound ]
		for D, b in zip(diffs, bounds):
			worst = max(worst, neumann.operator_norm(a.with_entries(D)) / (b + 10 * TOL))
	yield 'neumann.perturbed_bounds', worst, 1.

	# Bounds increase with ||x||
	norm_a_inv = 1.5
	xs     = np.linspace(0., 0.99 / norm_a_inv, 50)
	B      = np.array([ neumann.neumann_bounds(norm_a_inv, v) for v in xs ])
	steps  = np.diff(B, axis=0)
	yield 'neumann.bounds_monotone', int( np.sum(steps[:, 0] <= 0) + np.sum(steps[:, 1:] < 0) ), 0


"""
graph
"""
def _probe_sequences (n=101):
	apply_T = graph_norm.derivative_evaluator(n)
	f  = GridFunction.from_callable(lambda x: np.sin(np.pi * x), n)
	g  = GridFunction.from_callable(lambda x: x**2, n)
	us = [ f + g / 10.**k for k in range(12) ]
	yield us, f, apply_T(f), graph_norm.CONSISTENT
	yield us, f, apply_T(f) + 1., graph_norm.VIOLATION
	ss = [ GridFunction.from_callable(lambda x: np.sin(m * x) / m, n) for m in range(1, 41) ]
	yield ss, GridFunction.zeros(n), GridFunction.zeros(n), graph_norm.INAPPLICABLE


def graph_checks (rng):
	exps = (1, 1.5, 2, 3, np.inf)

	worst = 0.
	for _ in range(200):
		u, tu, a = rng.rand() * 10, rng.rand() * 10, rng.rand() * 10
		p = exps[ rng.randint(len(exps)) ]
		v = graph_norm.graph_norm(u, tu, p).value
		worst = max(worst, abs(graph_norm.graph_norm(a*u, a*tu, p).value - a*v) / (a*v + 1e-300))
	yield 'graph.homogeneity', worst, TOL

	worst = 0.
	for _ in range(200):
		u, tu = rng.rand() * 10, rng.rand() * 10
		vals  = [ graph_norm.graph_norm(u, tu, p).value for p in (1, 2, 4, np.inf) ]
		worst = max(worst, np.max(np.diff(vals)) / vals[0])
	yield 'graph.monotone_in_p', max(worst, 0.), TOL

	failures = 0
	for _ in range(1000):
		u, tu = rng.rand() * 10, rng.rand() * 10
		p     = exps[ rng.randint(len(exps)) ]
		failures += not graph_norm.norm_sandwich_check(u, tu, p)
	yield 'graph.norm_sandwich', failures, 0

	n = 101
	x = np.linspace(0., 1., n)
	D = neumann.MatrixOperator( np.gradient(np.eye(n), x, axis=0, edge_order=2) )
	C = neumann.operator_norm(D)
	apply_T = graph_norm.derivative_evaluator(n)
	basis   = [ np.sin(np.pi * x), np.cos(np.pi * x), x**2 ]
	worst = 0.
	for _ in range(100):
		u  = GridFunction( np.dot(rng.randn(3), basis) )
		nu = u.sup_norm()
		worst = max(worst, graph_norm.graph_norm(nu, apply_T(u).sup_norm(), 1).value / ((1. + C) * nu))
	yield 'graph.bounded_equivalence', worst, 1.

	wrong = 0
	for us, u_lim, v_lim, expected in _probe_sequences():
		verdict = graph_norm.closedness_probe(graph_norm.derivative_evaluator(101),
		                                      us, u_lim, v_lim, tol=1e-8)
		wrong  += verdict.status != expected
	yield 'graph.closedness_probe', wrong, 0


"""
cfunc
"""
def cfunc_checks (rng):
	worst = 0.
	for a in (-2., -1., 0.5, 1., 2., 0.):
		worst = max(worst, abs(cfunc.k_zeta_witness_ratio(a, N) - cfunc.k_zeta_norm_exact(a)))
	yield 'cfunc.k_zeta_norm_formula', worst, 1e-3

	functionals = [ DiracFunctional.delta(0.), DiracFunctional([(0.5, 1.), (0., -1.)]) ]
	residual, leak = 0., 0.
	for k in range(50):
		L    = functionals[k % 2]
		zeta = _random_disk(rng, 5.)
		while cfunc.abs_A(L, zeta) < 1e-2:
			zeta = _random_disk(rng, 5.)
		f    = cfunc.project_kernel(L, _random_smooth(rng))
		sol  = cfunc.resolve_derivative(L, zeta, f).solution
		residual = max(residual, cfunc.residual_ode(zeta, sol, f))
		leak     = max(leak, abs(cfunc.apply_functional(L, sol)) / sol.sup_norm())
	yield 'cfunc.resolvent_residual', residual, 50. / N
	yield 'cfunc.resolvent_in_kernel', leak, 1e-8

	delta0 = DiracFunctional.delta(0.)
	lowers, worst = {}, 0.
	for zeta in (1., 2., 4., 8.):
		lo, up = cfunc.closed_form_bounds(2, zeta)
		v = cfunc.resolvent_norm_lower(delta0, zeta, [cfunc.example2_witness(N)])
		lowers[zeta] = v
		worst = max(worst, lo - v, v - up)
	yield 'cfunc.example2_sandwich', worst, 0.05
	yield 'cfunc.example2_divergence', 10. * lowers[1.] / lowers[8.], 1.

	L3 = functionals[1]
	lo = cfunc.closed_form_bounds(3, 8.)[0]
	v  = cfunc.resolvent_norm_lower(L3, 8., [cfunc.example3_witness(8., N)])
	yield 'cfunc.example3_lower_bound', lo - v, 0.05

	worst = 0.
	for _ in range(20):
		zeta, eta = _random_disk(rng, 2.), _random_disk(rng, 2.)
		f = cfunc.project_kernel(delta0, _random_smooth(rng))
		worst = max(worst, cfunc.first_resolvent_defect(delta0, zeta, eta, f) / f.sup_norm())
	yield 'cfunc.first_resolvent_identity', worst, 1e-4

	# Zeros of A(zeta) on the example scan raster, in units of cells
	re_range, im_range = (-1., 1., 241), (-30., 30., 241)
	Z, re, im = complex_raster(re_range, im_range)
	cell  = max(re[1] - re[0], im[0] - im[1])
	worst = 0.
	for z in Z.ravel():
		if cfunc.spectrum_member(L3, z):
			k     = np.rint(z.imag / (4 * np.pi))
			worst = max(worst, abs(z - 4j * np.pi * k) / cell)
	yield 'cfunc.spectrum_zeros', worst, 1.


"""
shift
"""
def shift_checks (rng):
	exps = (1, 2, np.inf)

	worst = -np.inf
	for k in range(200):
		m = rng.randint(1, 50)
		x = SeqVector(rng.randn(m) + 1j * rng.randn(m), exps[k % 3])
		worst = max(worst, shift.lp_norm(shift.shift_apply(x)) / shift.lp_norm(x) - 1.)
	yield 'shift.contraction', max(worst, 0.), TOL

	yield 'shift.norm_attainment', 1. - shift.shift_norm_lower(), 0.01

	worst = 0.
	for k in range(200):
		m = rng.randint(1, 50)
		v = rng.randn(m) + 1j * rng.randn(m)
		x = SeqVector(np.r_[0., v], exps[k % 3])
		worst = max(worst, abs(shift.lp_norm(shift.restricted_apply(x)) - shift.lp_norm(x))
		                   / shift.lp_norm(x))
	yield 'shift.isometry', worst, 1e-14

	worst = 0.
	for r in (1.1, 2., 10.):
		zeta = r * np.exp(2j * np.pi * rng.rand())
		x    = SeqVector(rng.randn(64) + 1j * rng.randn(64))
		y    = shift.resolvent_shift(zeta, x)
		worst = max(worst, shift.lp_norm(zeta * y - shift.shift_apply(y) - x) / shift.lp_norm(x))
	yield 'shift.resolvent_residual', worst, TOL

	worst = 0.
	for n in range(1, 13):
		zeta = 1.1 * np.exp(2j * np.pi * rng.rand())
		x    = rng.randn(n) + 1j * rng.randn(n)
		dense = np.linalg.solve(zeta * np.eye(n) - np.eye(n, k=1), x)
		y     = shift.resolvent_shift(zeta, SeqVector(x)).values
		worst = max(worst, np.linalg.norm(y - dense) / np.linalg.norm(x))
	yield 'shift.series_vs_dense', worst, TOL

	worst = 0.
	for _ in range(20):
		zeta = rng.uniform(1.5, 4.) * np.exp(2j * np.pi * rng.rand())
		eta  = rng.uniform(1.5, 4.) * np.exp(2j * np.pi * rng.rand())
		x    = SeqVector(rng.randn(32) + 1j * rng.randn(32))
		worst = max(worst, shift.first_resolvent_defect_shift(zeta, eta, x) / shift.lp_norm(x))
	yield 'shift.first_resolvent_identity', worst, TOL

	# Disk raster: misclassified cells more than one cell off the circle
	Z, re, im = complex_raster((-2., 2., 41), (-2., 2., 41))
	cell  = re[1] - re[0]
	op    = FullShift()
	wrong = 0
	for z in Z.ravel():
		spectral = op.classify(z).status == SPECTRAL
		if spectral != (abs(z) <= 1) and abs(abs(z) - 1) > cell:
			wrong += 1
	yield 'shift.disk_raster', wrong, 0

	expected = [ (0., RESOLVED), (1.5, SPECTRAL), (-2j, SPECTRAL),
	             (0.5, INDETERMINATE), (1j, INDETERMINATE) ]
	wrong = 0
	for zeta, status in expected:
		c = shift.classify_restricted(zeta)
		wrong += c.status != status
		if status == SPECTRAL:
			wrong += not np.array_equal(c.witness.values[:1], [1.])
	yield 'shift.restricted_classification', wrong, 0


"""
Runner
"""
SUITES = {
	'neumann': neumann_checks,
	'graph':   graph_checks,
	'cfunc':   cfunc_checks,
	'shift':   shift_checks,
}
SUITE_ORDER = ('neumann', 'graph', 'cfunc', 'shift')


def run_checks (name, seed=0, tol_scale=1.):
	if name == 'all':
		names = SUITE_ORDER
	elif name in SUITES:
		names = (name,)
	else:
		raise ConfigError('Unknown suite %r (choose from %s or all)'
		                  % (name, ', '.join(SUITE_ORDER)))
	rng    = random_state(seed)
	checks = []
	for n in names:
		for check, measured, tolerated in SUITES[n](rng):
			tolerated = tolerated * tol_scale
			passed    = measured <= tolerated
			checks.append( Check(check, measured, tolerated, passed) )
			if passed:
				logger.info('%s passed (%.3e <= %.3e)', check, measured, tolerated)
			else:
				logger.warning('%s failed (%.3e > %.3e)', check, measured, tolerated)
	return checks


def format_report (checks):
	lines = [ '[%s] %s measured=%.6g tolerated=%.6g'
	          % ('PASS' if c.passed else 'FAIL', c.name, c.measured, c.tolerated)
	          for c in checks ]
	failed = sum( not c.passed for c in checks )
	lines.append('%d checks, %d failed' % (len(checks), failed))
	return '\n'.join(lines)


def run_suite (name, seed=0, tol_scale=1.):
	"""
	Outputs
		report  one line per check, measured vs tolerated
		code    0 iff every check passed
	"""
	checks = run_checks(name, seed, tol_scale)
	code   = 0 if all( c.passed for c in checks ) else 1
	return format_report(checks), code
