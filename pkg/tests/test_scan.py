
import pytest
import numpy as np

from partialspec.scan import ScanConfig, SpectrumScan, run_scan, write_csv, \
	write_pgm, render_heatmap, plot_scan, CSV_HEADER
from partialspec.case_studies.derivative import Example2, CustomDirac
from partialspec.errors import ConfigError
from partialspec.utils import RESOLVED, SPECTRAL, INDETERMINATE

d = {
	'operator': 'example3',
	're_range': (-1., 1., 5),
	'im_range': (-30., 30., 9),
	'grid_n':   101,
	}
C = ScanConfig(d)

def config (**kwargs):
	e = dict(d)
	e.update(kwargs)
	return ScanConfig(e)


"""
TESTS
"""

class TestScanConfig:

	def test_defaults (self):
		D = ScanConfig({'operator': 'example2', 're_range': '-1:1:3', 'im_range': '0:1:2'})
		assert D.grid_n == 2001
		assert D.tol == 1e-9
		assert D.indeterminate_band == 1e-6
		assert D.channel == 'status'
		assert D.re_range == (-1., 1., 3)
		assert D.outputs == []

	def test_operator (self):
		assert C.operator.name == 'example3'
		assert config(operator='shift_full').operator.name == 'shift_full'
		assert config(operator=Example2()).operator.name == 'example2'

	def test_custom_dirac (self):
		M = config(operator='custom-dirac:0.5=1,0=-1').operator
		assert isinstance(M, CustomDirac)
		assert M.functional.atoms == ((0.5, 1+0j), (0., -1+0j))
		M = config(operator='custom-dirac', atoms=[(0., 1.)]).operator
		assert M.functional.atoms == ((0., 1+0j),)

	def test_invalid_operator (self):
		for op in ['example4', 'custom-dirac', 'custom-dirac:2=1', 3]:
			with pytest.raises(ConfigError):
				config(operator=op)

	def test_invalid_range (self):
		for r in [(1., -1., 5), (0., 1., 1), (0., np.inf, 3), (0., 1.), '0:1', (0., 1., 2.5)]:
			with pytest.raises(ConfigError):
				config(re_range=r)

	def test_invalid_grid_n (self):
		for r in [100, 1, 2000, 101., 'hej']:
			with pytest.raises(ConfigError):
				config(grid_n=r)

	def test_invalid_tol (self):
		for r in [0., -1e-9]:
			with pytest.raises(ConfigError):
				config(tol=r)
		with pytest.raises(ConfigError):
			config(tol=1e-5, indeterminate_band=1e-6)

	def test_invalid_channel (self):
		with pytest.raises(ConfigError):
			config(channel='inv_resolvent')


class TestRunScan:

	def test_example2_empty_spectrum (self):
		scan = run_scan(config(operator='example2', re_range=(-5., 5., 11), im_range=(-5., 5., 11)))
		assert scan.count(SPECTRAL) == 0
		assert np.all( render_heatmap(scan) == 255 )

	def test_example1_full_spectrum (self):
		scan = run_scan(config(operator='example1', re_range=(-5., 5., 11), im_range=(-5., 5., 11)))
		assert scan.count(SPECTRAL) == len(scan.cells) == 121
		assert np.all( render_heatmap(scan) == 0 )
		assert np.all( render_heatmap(scan, 'norm') == 0 )

	def test_example3_spectrum (self):
		scan = run_scan(config(re_range=(-1., 1., 21), im_range=(-30., 30., 241)))
		cell = 0.25
		for z in scan.spectral_points():
			k = np.rint(z.imag / (4 * np.pi))
			assert abs(z - 4j * np.pi * k) <= cell
		assert any( abs(z) < 1e-12 for z in scan.spectral_points() )

	def test_shift_disk (self):
		scan = run_scan(config(operator='shift_full', re_range=(-2., 2., 21),
		                       im_range=(-2., 2., 21)))
		Z = np.array([ c.zeta for c in scan.cells ]).reshape(scan.shape)
		assert np.all( (scan.statuses == SPECTRAL) == (np.abs(Z) <= 1) )
		img = render_heatmap(scan)
		assert img[10, 10] == 0 and img[0, 0] == 255

	def test_shift_restricted (self):
		scan = run_scan(config(operator='shift_restricted', re_range=(-2., 2., 5),
		                       im_range=(-2., 2., 5)))
		st = scan.statuses
		assert st[2, 2] == RESOLVED
		assert st[0, 0] == SPECTRAL
		assert st[1, 2] == INDETERMINATE

	def test_row_order (self):
		scan = run_scan(C)
		assert scan.shape == (9, 5)
		assert scan.cells[0].zeta == -1. + 30j
		assert scan.cells[-1].zeta == 1. - 30j


class TestOutput:

	def test_csv (self, tmp_path):
		path = str(tmp_path / 'scan.csv')
		scan = run_scan(config(csv=path))
		with open(path) as f:
			lines = f.read().splitlines()
		assert lines[0] == ','.join(CSV_HEADER)
		assert len(lines) == 1 + 5 * 9
		row = lines[1].split(',')
		assert float(row[0]) == -1. and float(row[1]) == 30.
		assert row[2] == RESOLVED
		assert row[6] == ''

	def test_csv_spectral_fields (self, tmp_path):
		path = str(tmp_path / 'scan.csv')
		run_scan(config(re_range=(-1., 1., 3), im_range=(-1., 1., 3), csv=path))
		with open(path) as f:
			rows = [ l.split(',') for l in f.read().splitlines()[1:] ]
		centre = rows[4]
		assert centre[2] == SPECTRAL
		assert centre[4] == centre[5] == centre[6] == ''

	def test_pgm (self, tmp_path):
		path = str(tmp_path / 'scan.pgm')
		scan = run_scan(config(pgm=path))
		with open(path, 'rb') as f:
			data = f.read()
		header = b'P5\n5 9\n255\n'
		assert data.startswith(header)
		assert len(data) == len(header) + 45
		assert data[len(header):] == render_heatmap(scan).tobytes()

	def test_norm_channel (self):
		scan = run_scan(config(operator='example2', re_range=(1., 2., 2), im_range=(0., 1., 2)))
		img  = render_heatmap(scan, 'norm')
		for c, v in zip(scan.cells, img.ravel()):
			assert v == int( np.floor(255. / (1. + c.norm_lower) + 0.5) )

	def test_determinism (self, tmp_path):
		out = []
		for k in range(2):
			csv, pgm = str(tmp_path / ('%d.csv' % k)), str(tmp_path / ('%d.pgm' % k))
			run_scan(config(operator='example2', csv=csv, pgm=pgm, channel='norm'))
			out.append( [ open(p, 'rb').read() for p in (csv, pgm) ] )
		assert out[0] == out[1]

	def test_png (self, tmp_path):
		path = str(tmp_path / 'scan.png')
		run_scan(config(png=path))
		with open(path, 'rb') as f:
			assert f.read(8) == b'\x89PNG\r\n\x1a\n'

	def test_unwritable (self, tmp_path):
		with pytest.raises(OSError):
			run_scan(config(csv=str(tmp_path / 'missing' / 'scan.csv')))
