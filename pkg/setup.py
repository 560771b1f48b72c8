from setuptools import setup, find_packages
from pathlib import Path

project_root = Path(__file__).resolve().parent

about = {}
version_path = project_root / 'partialspec' / '__version__.py'
with version_path.open() as f:
    exec(f.read(), about)

setup(
    name='partialspec',
    author=about['__author__'],
    author_email=about['__author_email__'],
    license=about['__license__'],
    version=about['__version__'],
    description='Spectra and resolvents of partial (unbounded) operators at desk scale',
    packages=find_packages(exclude=['tests','docs','demos']),
    install_requires=['numpy>=1.13',
                      'scipy>=1.6',
                      'matplotlib>=2.0'],
    setup_requires=['pytest-runner'],
    tests_require=['pytest', 'pytest-cov'],
    entry_points={
        'console_scripts': ['partialspec=partialspec.cli:main'],
    },
)
