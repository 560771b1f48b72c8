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

from .errors import ConfigError, InvalidExponentError

def parse_range (text):
	"""
	Parse 'min:max:steps' into (float, float, int)
	"""
	parts = str(text).split(':')
	if len(parts) != 3:
		raise ConfigError('Range must read min:max:steps, got %r' % text)
	try:
		lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
	except ValueError:
		raise ConfigError('Range must read min:max:steps, got %r' % text)
	return lo, hi, steps


def complex_raster (re_range, im_range):
	"""
	Outputs
		Z     [ im_steps x re_steps ] complex grid, row 0 = max imaginary part
		re    [ re_steps ] real axis nodes (ascending)
		im    [ im_steps ] imaginary axis nodes (descending)
	"""
	re = np.linspace( *re_range )
	im = np.linspace( *im_range )[::-1]
	R, I = np.meshgrid( re, im )
	return R + 1j * I, re, im


def check_exponent (p):
	"""
	Validate an l^p / graph-norm exponent p in [1, inf]
	"""
	try:
		p = float(p)
	except (TypeError, ValueError):
		raise InvalidExponentError('Exponent must be a number, got %r' % (p,))
	if np.isnan(p) or p < 1:
		raise InvalidExponentError('Exponent must lie in [1, inf], got %r' % p)
	return p


def random_state (seed=0):
	return np.random.RandomState( int(seed) % 2**32 )


"""
Classification vocabulary: zeta is resolved if zeta J - T has a bounded
inverse, spectral otherwise; indeterminate when the desk-scale evidence
cannot decide.
"""
RESOLVED      = 'Resolved'
SPECTRAL      = 'Spectral'
INDETERMINATE = 'Indeterminate'

"""
One cell of a spectrum scan; undefined fields are None
"""
ScanCell = namedtuple('ScanCell', ['zeta', 'status', 'abs_A', 'norm_lower',
                                   'bound_lower', 'bound_upper'])


def parse_atoms (text):
	"""
	Parse '0.5=1,0=-1' into [(0.5, 1+0j), (0.0, -1+0j)]
	"""
	atoms = []
	for item in str(text).split(','):
		item = item.strip()
		if not item:
			continue
		try:
			t, w = item.split('=')
			atoms.append( (float(t), complex(w.replace(' ', ''))) )
		except ValueError:
			raise ConfigError('Atoms must read t=weight[,t=weight...], got %r' % text)
	return atoms
