# -*- encoding: utf-8 -*-
"""Provides the tunable limits shared by every gpgraphs module.

The defaults can be seeded from the environment::

    GPGRAPHS_CACHE_DIR          directory holding the modulus cache
    GPGRAPHS_CONSTRUCTION_CAP   largest field built with log tables
    GPGRAPHS_ORACLE_CAP         largest adjacency-matrix oracle
    GPGRAPHS_ENUMERATION_CAP    largest codeword enumeration

"""
from builtins import object, super
from contextlib import contextmanager
import os


def _env_int(name, default):
    value = os.environ.get(name)
    if value is None or not value.strip():
        return default
    return int(value)


class Settings(object):
    """Mutable bag of configuration values.

    Attributes:
        construction_cap (int): Fields with more elements than this are
            never built with discrete-log tables.
        oracle_cap (int): Largest `q` for which an adjacency matrix is built.
        enumeration_cap (int): Largest `q` for which all codewords of a
            code are generated.
        tolerance (float): Absolute tolerance used when rounding numerically
            computed eigenvalues.
        precision (int): Decimal digits used by mpmath for inexact sums.
        cache_dir (str | None): Directory of the advisory modulus cache.

    Examples:
        >>> s = Settings()
        >>> s.oracle_cap
        4096
        >>> with s.override(oracle_cap=16):
        ...     s.oracle_cap
        16
        >>> s.oracle_cap
        4096
        >>> s.nonsense = 3
        Traceback (most recent call last):
            ...
        AttributeError: unknown setting 'nonsense'

    """
    _names = ('construction_cap', 'oracle_cap', 'enumeration_cap',
              'tolerance', 'precision', 'cache_dir')

    def __init__(self):
        super().__init__()
        self.reset()

    def reset(self):
        """Restores the defaults (environment variables included)."""
        self.construction_cap = _env_int('GPGRAPHS_CONSTRUCTION_CAP', 2**24)
        self.oracle_cap = _env_int('GPGRAPHS_ORACLE_CAP', 2**12)
        self.enumeration_cap = _env_int('GPGRAPHS_ENUMERATION_CAP', 2**20)
        self.tolerance = 1e-6
        self.precision = 40
        self.cache_dir = os.environ.get('GPGRAPHS_CACHE_DIR') or None

    def __setattr__(self, name, value):
        if name not in self._names:
            raise AttributeError("unknown setting {!r}".format(name))
        object.__setattr__(self, name, value)

    @contextmanager
    def override(self, **values):
        """Temporarily replaces some settings.

        Args:
            **values: Setting names mapped to their temporary values.
                `None` values are ignored, so CLI flags that were not
                given can be passed straight through.

        """
        saved = {}
        try:
            for name, value in values.items():
                if value is None:
                    continue
                saved[name] = getattr(self, name)
                setattr(self, name, value)
            yield self
        finally:
            for name, value in saved.items():
                setattr(self, name, value)

    def __repr__(self):
        return "Settings({})".format(", ".join(
            "{}={!r}".format(n, getattr(self, n)) for n in self._names))


settings = Settings()
