__version__      = '0.1'
__author__       = 'Simon Olofsson'
__author_email__ = 'simon.olofsson15@imperial.ac.uk'
__license__      = 'MIT License'
