from ._dimerlab import *  # noqa: F401,F403
