"""Correlation measures for two-qubit states."""

from ._qcorr import *  # noqa: F401,F403
from ._qcorr import __doc__  # noqa: F401
