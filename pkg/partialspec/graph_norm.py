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

from collections import namedtuple

import numpy as np

from .cfunc import derivative
from .errors import GridMismatchError
from .shift import lp_norm
from .spaces import GridFunction, SeqVector
from .utils import check_exponent

"""
Graph norms of a partial operator T : F -> E

	N_p^T(u) = ( ||u||^p + ||Tu||^p )^(1/p),   N_inf^T(u) = max(||u||, ||Tu||)

and a probe of the closed-graph condition on user-supplied sequences.
"""

GraphNormValue    = namedtuple('GraphNormValue',
                               ['u_norm', 'tu_norm', 'exponent', 'value'])
ClosednessVerdict = namedtuple('ClosednessVerdict',
                               ['status', 'witness_index', 'residual'])

CONSISTENT   = 'Consistent'
VIOLATION    = 'Violation'
INAPPLICABLE = 'Inapplicable'

SANDWICH_RTOL = 1e-12


def _check_norms (u_norm, tu_norm):
	assert u_norm >= 0 and tu_norm >= 0, 'Norms must be nonnegative'


def graph_norm (u_norm, tu_norm, p):
	_check_norms(u_norm, tu_norm)
	p = check_exponent(p)
	value = float( np.linalg.norm([u_norm, tu_norm], ord=p) )
	return GraphNormValue(u_norm, tu_norm, p, value)


def norm_sandwich_check (u_norm, tu_norm, p):
	"""
	N_inf <= N_p <= N_1 <= 2 N_inf, up to a relative rounding slack
	"""
	n_inf = graph_norm(u_norm, tu_norm, np.inf).value
	n_p   = graph_norm(u_norm, tu_norm, p).value
	n_1   = graph_norm(u_norm, tu_norm, 1).value
	slack = SANDWICH_RTOL * n_1
	return n_inf <= n_p + slack and n_p <= n_1 + slack and n_1 <= 2 * n_inf + slack


def bounded_equivalence_check (u_norm, tu_norm, C):
	"""
	||u|| <= N_1^T(u) <= (1 + C) ||u||  whenever ||Tu|| <= C ||u||
	"""
	assert C >= 0, 'Operator bound must be nonnegative'
	n_1   = graph_norm(u_norm, tu_norm, 1).value
	slack = SANDWICH_RTOL * n_1
	return u_norm <= n_1 + slack and n_1 <= (1. + C) * u_norm + slack


def derivative_evaluator (n):
	"""
	T u = u' on GridFunctions with n nodes
	"""
	def apply_T (u):
		if u.n != n:
			raise GridMismatchError('Evaluator expects %d nodes, got %d' % (n, u.n))
		return derivative(u)
	return apply_T


"""
Closedness probe
"""
def default_norm (u):
	if isinstance(u, GridFunction):
		return u.sup_norm()
	if isinstance(u, SeqVector):
		return lp_norm(u)
	return float( np.linalg.norm(u) )


def _settles (distances, tol):
	# Below tol at the last index, nonincreasing over the final quarter
	d    = np.asarray(distances, dtype=float)
	tail = d[ -max(2, len(d) // 4): ]
	return d[-1] <= tol and np.all( np.diff(tail) <= tol )


def closedness_probe (apply_T, u_seq, u_limit, v_limit, tol=1e-8, norm=None):
	"""
	Inputs
		apply_T   evaluator of T
		u_seq     sequence (u_n) in F
		u_limit   candidate limit of (u_n)
		v_limit   candidate limit of (T u_n)

	(u_n) must reach u_limit; (T u_n) must be Cauchy at the tail.
	The verdict then compares T(u_limit) with v_limit.
	"""
	assert len(u_seq) > 0, 'Need a nonempty sequence'
	assert tol > 0, 'Tolerance must be positive'
	norm = default_norm if norm is None else norm

	tu_seq = [ apply_T(u) for u in u_seq ]
	u_dist = [ norm(u - u_limit) for u in u_seq ]
	if len(tu_seq) > 1:
		tu_steps = [ norm(b - a) for a, b in zip(tu_seq[:-1], tu_seq[1:]) ]
	else:
		tu_steps = [ norm(tu_seq[0] - v_limit) ]

	# Inapplicable carries the last distance that failed to settle
	if not _settles(u_dist, tol):
		return ClosednessVerdict(INAPPLICABLE, None, float(u_dist[-1]))
	if not _settles(tu_steps, tol):
		return ClosednessVerdict(INAPPLICABLE, None, float(tu_steps[-1]))

	residual = norm( apply_T(u_limit) - v_limit )
	if residual <= tol:
		return ClosednessVerdict(CONSISTENT, None, residual)
	return ClosednessVerdict(VIOLATION, len(u_seq) - 1, residual)
