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

import csv
import logging

import numpy as np
from matplotlib.figure import Figure
from matplotlib.backends.backend_agg import FigureCanvasAgg

from .case_studies import derivative, shift
from .errors import ConfigError
from .utils import complex_raster, parse_range, parse_atoms, \
	RESOLVED, SPECTRAL, INDETERMINATE

logger = logging.getLogger(__name__)

OPERATORS = {
	'example1':         derivative.Example1,
	'example2':         derivative.Example2,
	'example3':         derivative.Example3,
	'shift_full':       shift.FullShift,
	'shift_restricted': shift.RestrictedShift,
}
CUSTOM_DIRAC = 'custom-dirac'
CHANNELS     = ('status', 'norm')
CSV_HEADER   = ['re', 'im', 'status', 'abs_A', 'norm_lower',
                'bound_lower', 'bound_upper']
STATUS_SHADE = {RESOLVED: 255, INDETERMINATE: 128, SPECTRAL: 0}


class ScanConfig:
	def __init__ (self, scan_dict):
		# Read dictionary
		self.atoms    = scan_dict.get('atoms', None)
		self.operator = scan_dict['operator']
		self.re_range = scan_dict['re_range']
		self.im_range = scan_dict['im_range']
		# Optional parameters
		self.grid_n             = scan_dict.get('grid_n', 2001)
		self.tol                = scan_dict.get('tol', 1e-9)
		self.indeterminate_band = scan_dict.get('indeterminate_band', 1e-6)
		self.channel            = scan_dict.get('channel', 'status')
		self.csv = scan_dict.get('csv', None)
		self.pgm = scan_dict.get('pgm', None)
		self.png = scan_dict.get('png', None)

	"""
	Properties
	"""
	## Case study scanned; names are resolved against OPERATORS
	@property
	def operator (self):
		return self._operator
	@operator.setter
	def operator (self, value):
		if isinstance(value, str):
			value = self._operator_from_name(value)
		if not ( hasattr(value, 'name') and hasattr(value, 'cell') ):
			raise ConfigError('Invalid operator %r' % (value,))
		self._operator = value

	def _operator_from_name (self, name):
		if name in OPERATORS:
			return OPERATORS[name]()
		if name == CUSTOM_DIRAC or name.startswith(CUSTOM_DIRAC + ':'):
			atoms = name[len(CUSTOM_DIRAC) + 1:]
			atoms = parse_atoms(atoms) if atoms else self.atoms
			if atoms is None:
				raise ConfigError('custom-dirac needs atoms, e.g. custom-dirac:0.5=1,0=-1')
			try:
				return derivative.CustomDirac(atoms)
			except AssertionError as e:
				raise ConfigError('Invalid atoms: %s' % e)
		raise ConfigError('Unknown operator %r' % name)

	## Dirac atoms for custom-dirac
	@property
	def atoms (self):
		return self._atoms
	@atoms.setter
	def atoms (self, value):
		if isinstance(value, str):
			value = parse_atoms(value)
		self._atoms = value

	## Raster ranges (min, max, steps)
	@property
	def re_range (self):
		return self._re_range
	@re_range.setter
	def re_range (self, value):
		self._re_range = self._check_range(value)

	@property
	def im_range (self):
		return self._im_range
	@im_range.setter
	def im_range (self, value):
		self._im_range = self._check_range(value)

	def _check_range (self, value):
		if isinstance(value, str):
			value = parse_range(value)
		try:
			lo, hi, steps = value
		except (TypeError, ValueError):
			raise ConfigError('Range must be (min, max, steps), got %r' % (value,))
		if not ( np.isfinite(lo) and np.isfinite(hi) and lo < hi ):
			raise ConfigError('Range needs finite min < max, got %r' % (value,))
		if int(steps) != steps or steps < 2:
			raise ConfigError('Range needs an integer steps >= 2, got %r' % (steps,))
		return float(lo), float(hi), int(steps)

	## Grid size of C([0,1]) witnesses, truncation length of l^p witnesses
	@property
	def grid_n (self):
		return self._grid_n
	@grid_n.setter
	def grid_n (self, value):
		if not isinstance(value, (int, np.integer)) or value < 5 or value % 4 != 1:
			raise ConfigError('grid_n must be an integer >= 5 with grid_n = 1 mod 4')
		self._grid_n = int(value)

	## Spectral tolerance on |A(zeta)| and the indeterminate band above it
	@property
	def tol (self):
		return self._tol
	@tol.setter
	def tol (self, value):
		if not value > 0:
			raise ConfigError('Tolerance must be positive, got %r' % (value,))
		self._tol = float(value)

	@property
	def indeterminate_band (self):
		return self._indeterminate_band
	@indeterminate_band.setter
	def indeterminate_band (self, value):
		if not value >= self.tol:
			raise ConfigError('Indeterminate band must be >= tol, got %r' % (value,))
		self._indeterminate_band = float(value)

	## Heatmap channel
	@property
	def channel (self):
		return self._channel
	@channel.setter
	def channel (self, value):
		if value not in CHANNELS:
			raise ConfigError('Channel must be one of %s, got %r' % (CHANNELS, value))
		self._channel = value

	@property
	def outputs (self):
		return [ path for path in (self.csv, self.pgm, self.png) if path ]


class SpectrumScan:
	"""
	Cells in row-major order: row 0 is the largest imaginary part,
	columns run over ascending real parts
	"""
	def __init__ (self, name, re, im, cells):
		assert len(cells) == len(re) * len(im), 'Cell count does not match raster'
		self.name  = name
		self.re    = re
		self.im    = im
		self.cells = cells

	@property
	def shape (self):
		return len(self.im), len(self.re)

	@property
	def statuses (self):
		return np.array([ c.status for c in self.cells ]).reshape(self.shape)

	def count (self, status):
		return sum( c.status == status for c in self.cells )

	def spectral_points (self):
		return [ c.zeta for c in self.cells if c.status == SPECTRAL ]


"""
Scan
"""
def run_scan (config):
	Z, re, im = complex_raster(config.re_range, config.im_range)
	op = config.operator
	logger.info('Scanning %s on a %d x %d raster', op.name, *Z.shape)

	cells = [ op.cell(z, config.grid_n, config.tol, config.indeterminate_band)
	          for z in Z.ravel() ]
	scan  = SpectrumScan(op.name, re, im, cells)
	logger.info('%s: %d Spectral, %d Indeterminate, %d Resolved', op.name,
		scan.count(SPECTRAL), scan.count(INDETERMINATE), scan.count(RESOLVED))

	if config.csv:
		write_csv(scan, config.csv)
	if config.pgm:
		write_pgm(scan, config.pgm, config.channel)
	if config.png:
		plot_scan(scan, config.png, config.channel)
	return scan


"""
Output
"""
def _num (value):
	return '' if value is None else '{:.17g}'.format(value)


def write_csv (scan, path):
	with open(path, 'w', newline='') as f:
		writer = csv.writer(f, lineterminator='\n')
		writer.writerow(CSV_HEADER)
		for c in scan.cells:
			z = complex(c.zeta)
			writer.writerow([ _num(z.real), _num(z.imag), c.status, _num(c.abs_A),
				_num(c.norm_lower), _num(c.bound_lower), _num(c.bound_upper) ])
	logger.info('Wrote %s', path)


def _norm_shade (cell):
	if cell.status == SPECTRAL:
		return 0
	if cell.status == INDETERMINATE:
		return 128
	lower = 0. if cell.norm_lower is None else cell.norm_lower
	return int( np.floor( 255. * min(1., 1. / (1. + lower)) + 0.5 ) )


def render_heatmap (scan, channel='status'):
	"""
	uint8 image [ im_steps x re_steps ]
		status: Resolved 255, Indeterminate 128, Spectral 0
		norm:   255 / (1 + norm_lower), dark near the spectrum
	"""
	if channel not in CHANNELS:
		raise ConfigError('Channel must be one of %s, got %r' % (CHANNELS, channel))
	if channel == 'status':
		shades = [ STATUS_SHADE[c.status] for c in scan.cells ]
	else:
		shades = [ _norm_shade(c) for c in scan.cells ]
	return np.array(shades, dtype=np.uint8).reshape(scan.shape)


def write_pgm (scan, path, channel='status'):
	img    = render_heatmap(scan, channel)
	height, width = img.shape
	with open(path, 'wb') as f:
		f.write( b'P5\n%d %d\n255\n' % (width, height) )
		f.write( img.tobytes() )
	logger.info('Wrote %s', path)


def plot_scan (scan, path, channel='status'):
	img = render_heatmap(scan, channel)
	fig = Figure(figsize=(6, 6))
	FigureCanvasAgg(fig)
	ax  = fig.add_subplot(111)
	ax.imshow(img, cmap='gray', vmin=0, vmax=255, interpolation='nearest',
	          extent=[scan.re[0], scan.re[-1], scan.im[-1], scan.im[0]])
	ax.set_xlabel('Re zeta')
	ax.set_ylabel('Im zeta')
	ax.set_title('%s (%s)' % (scan.name, channel))
	fig.savefig(path)
	logger.info('Wrote %s', path)
