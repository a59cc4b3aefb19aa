"""Provides spectra of generalized Paley graphs and the weights of their
irreducible cyclic codes."""
# allow the core modules to be accessed using their names
from .core import fields, periods, settings, spectra

# fetch important objects from core modules
from .core.fields import FiniteField, build_field
from .core.periods import PeriodVector, gaussian_periods, period_polynomial
from .core.spectra import Spectrum, SrgParams, build_adjacency, \
        gp_spectrum, oracle_spectrum, srg_analysis

# make submodules visible
from . import families, codes, verify

__author__ = "gpgraphs developers <gpgraphs@users.noreply.github.com>"
__version__ = "0.1.0"
