from ._arcticlib import *  # noqa: F401,F403
from ._arcticlib import __doc__  # noqa: F401
