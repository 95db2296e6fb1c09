"""Accounting-based valuation: FCF, residual operating income and abnormal
earnings growth models, multiples, sensitivity grids and a first-digit screen."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, DomainError, InputError  # noqa: F401
