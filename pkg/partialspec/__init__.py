from .__version__ import __version__
from .__version__ import __author__
from .__version__ import __license__
