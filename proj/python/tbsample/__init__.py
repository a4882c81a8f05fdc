from tbsample._core import *  # noqa: F401,F403
from tbsample._core import __doc__  # noqa: F401
