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

import argparse
import logging
import sys

from .__version__ import __version__
from .errors import PartialSpecError
from .scan import ScanConfig, run_scan, CHANNELS
from .suites import run_suite, SUITE_ORDER
from .utils import SPECTRAL

"""
Command-line front end

	partialspec scan --operator example3 --re -1:1:241 --im -30:30:241 --csv out.csv --pgm out.pgm
	partialspec suite all
"""

def build_parser ():
	ap = argparse.ArgumentParser(prog='partialspec',
		description='Spectra and resolvents of partial operators')
	ap.add_argument('--version', action='version', version=__version__)
	ap.add_argument('--seed', type=int, default=0, help='Seed of randomized checks')
	ap.add_argument('--verbose', action='store_true', help='Debug logging')
	sub = ap.add_subparsers(dest='command')
	sub.required = True

	sp = sub.add_parser('scan', help='Classify zeta over a complex rectangle')
	sp.add_argument('--operator', required=True,
		help='example1|example2|example3|shift_full|shift_restricted|custom-dirac:t=w,...')
	sp.add_argument('--re', required=True, help='min:max:steps')
	sp.add_argument('--im', required=True, help='min:max:steps')
	sp.add_argument('--grid-n', type=int, default=2001, help='Grid size, 1 mod 4')
	sp.add_argument('--tol', type=float, default=1e-9)
	sp.add_argument('--indeterminate-band', type=float, default=1e-6)
	sp.add_argument('--csv', default=None)
	sp.add_argument('--pgm', default=None)
	sp.add_argument('--png', default=None)
	sp.add_argument('--channel', choices=CHANNELS, default='status')

	st = sub.add_parser('suite', help='Run acceptance checks')
	st.add_argument('name', help=' | '.join(SUITE_ORDER + ('all',)))
	st.add_argument('--tol-scale', type=float, default=1.,
		help='Multiplies every tolerated value')
	return ap


## Range values may start with '-', which argparse takes for a flag
RANGE_OPTIONS = ('--re', '--im')


def _glue_ranges (argv):
	# --re -1:1:3  ->  --re=-1:1:3
	out = []
	k   = 0
	while k < len(argv):
		if argv[k] in RANGE_OPTIONS and k + 1 < len(argv):
			out.append('%s=%s' % (argv[k], argv[k+1]))
			k += 2
			continue
		out.append(argv[k])
		k += 1
	return out


def parse_args (argv=None):
	argv = sys.argv[1:] if argv is None else list(argv)
	return build_parser().parse_args( _glue_ranges(argv) )


def scan_dict (args):
	return {
		'operator':           args.operator,
		're_range':           args.re,
		'im_range':           args.im,
		'grid_n':             args.grid_n,
		'tol':                args.tol,
		'indeterminate_band': args.indeterminate_band,
		'channel':            args.channel,
		'csv':                args.csv,
		'pgm':                args.pgm,
		'png':                args.png,
	}


def main (argv=None):
	args = parse_args(argv)
	logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
	                    format='%(levelname)s %(name)s: %(message)s')
	try:
		if args.command == 'scan':
			config = ScanConfig( scan_dict(args) )
			scan   = run_scan(config)
			print('%s: %d cells, %d Spectral' % (scan.name, len(scan.cells),
			                                    scan.count(SPECTRAL)))
			for path in config.outputs:
				print('Wrote', path)
			return 0
		report, code = run_suite(args.name, seed=args.seed, tol_scale=args.tol_scale)
		print(report)
		return code
	except (PartialSpecError, OSError) as e:
		print('partialspec: error: %s' % e, file=sys.stderr)
		return 2


if __name__ == '__main__':
	raise SystemExit(main())
