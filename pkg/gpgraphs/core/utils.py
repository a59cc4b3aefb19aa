# -*- encoding: utf-8 -*-
"""Provides utility functions: exact arithmetic helpers, caches and tables."""
from builtins import map, range, zip
from collections import OrderedDict
try:
    from collections.abc import MutableMapping
except ImportError:
    from collections import MutableMapping
from functools import wraps
import os
import re

try:
    from inspect import signature
except ImportError:  # python 2.x
    from funcsigs import signature

from sympy import integer_nthroot


class InexactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""

class CertificateError(AssertionError):
    """Raised when a computed result fails an identity it must satisfy."""


def certify(condition, message, *args):
    """Raises `CertificateError` unless `condition` holds.

    Unlike `assert`, the check survives `python -O`.

    Examples:
        >>> certify(2 + 2 == 4, "arithmetic")
        >>> certify(7 % 2 == 0, "{} is not even", 7)
        Traceback (most recent call last):
            ...
        CertificateError: 7 is not even

    """
    if not condition:
        raise CertificateError(message.format(*args))


def exact_div(a, b, what=None):
    """Divides `a` by `b`, insisting that the result is an integer.

    Args:
        a (int): The dividend. Arbitrary precision.
        b (int): The divisor.
        what (str): Optional description used in the error message.

    Returns:
        (int): `a // b`.

    Raises:
        InexactDivisionError: If `b` does not divide `a`.

    Examples:
        >>> exact_div(3**53 - 1, 107)
        181151828669906728007446
        >>> exact_div(7, 2, "the degree")
        Traceback (most recent call last):
            ...
        InexactDivisionError: the degree: 2 does not divide 7

    """
    quotient, remainder = divmod(a, b)
    if remainder:
        message = "{} does not divide {}".format(b, a)
        if what:
            message = "{}: {}".format(what, message)
        raise InexactDivisionError(message)
    return quotient


def exact_root(x, r):
    """Returns the integer `r`-th root of `x`, which must be a perfect power.

    Examples:
        >>> exact_root(625, 4)
        5
        >>> exact_root(10, 2)
        Traceback (most recent call last):
            ...
        ValueError: 10 is not a perfect 2-th power

    """
    root, exact = integer_nthroot(x, r)
    if not exact:
        raise ValueError("{} is not a perfect {}-th power".format(x, r))
    return int(root)


def isqrt(x):
    """Floor of the square root of a non-negative integer."""
    return int(integer_nthroot(x, 2)[0])


class LRUCache(MutableMapping):
    """A least-recently-used cache.

    Implementation stolen from `this article`_.

    .. _this article: https://www.kunxi.org/blog/2014/05/lru-cache-in-python/

    Examples:
        >>> cache = LRUCache(2)
        >>> cache['a'] = 1
        >>> cache['b'] = 2
        >>> cache['a']
        1
        >>> cache['c'] = 3  # evicts 'b', the least recently used
        >>> sorted(cache)
        ['a', 'c']

    """
    def __init__(self, capacity):
        self.capacity = capacity
        self.cache = OrderedDict()

    def __getitem__(self, key):
        value = self.cache.pop(key)
        self.cache[key] = value  # move value to the head of the dict
        return value

    def __setitem__(self, key, value):
        try:
            self.cache.pop(key)
        except KeyError:
            if len(self.cache) >= self.capacity:
                self.cache.popitem(last=False)
        self.cache[key] = value

    def __delitem__(self, key):
        del self.cache[key]

    def __iter__(self):
        return self.cache.__iter__()

    def __len__(self):
        return self.cache.__len__()


def cache_method(capacity=128):
    """Adds caching to a method of an object with a `cache` dict.

    Stores an `LRUCache` which maps from method call arguments to
    return values in the instance's cache. This keeps the caches
    of each instance seperate, and allows us to clear them using
    `instance.cache.clear()`.

    Note: if the arguments are not hashable, we skip caching and
    just return the value of the method.

    Args:
        capacity (int): The capacity of the cache. If the size of
            the cache exceeds the capacity, the least recently used
            (stored / retreived) arguments will be evicted.

    Examples:
        >>> class Squarer(object):
        ...     def __init__(self):
        ...         self.cache = {}
        ...         self.calls = 0
        ...     @cache_method(capacity=4)
        ...     def square(self, x):
        ...         self.calls += 1
        ...         return x * x
        >>> s = Squarer()
        >>> s.square(3), s.square(3), s.square(x=3), s.calls
        (9, 9, 9, 1)

    """
    def decorator(method):
        sig = signature(method)
        # drop first parameter
        params = OrderedDict(sig.parameters)
        del params[next(iter(sig.parameters))]
        sig = sig.replace(parameters=params.values())
        cache_name = '__method_cache_{}'.format(method.__name__)

        @wraps(method)
        def wrapper(instance, *args, **kwargs):
            if cache_name not in instance.cache:
                instance.cache[cache_name] = LRUCache(capacity)
            method_cache = instance.cache[cache_name]

            binding = sig.bind(*args, **kwargs)
            binding.apply_defaults()
            key = tuple(sorted(binding.arguments.items()))

            try:
                hash(key)
            except TypeError:
                return method(instance, *args, **kwargs)
            else:
                if key not in method_cache:
                    method_cache[key] = method(instance, *args, **kwargs)
                return method_cache[key]
        return wrapper
    return decorator


def format_multiset(entries, fmt="[{}]^{}"):
    """Formats `(value, multiplicity)` pairs the way spectra are printed.

    Examples:
        >>> format_multiset([(5, 1), (1, 10), (-3, 5)])
        '{[5]^1, [1]^10, [-3]^5}'

    """
    return "{" + ", ".join(fmt.format(v, m) for v, m in entries) + "}"


def construct_table(cols, headings, fmt):
    """Constructs a table from the given columns and rows for display.

    Args:
        cols (Sequence[Sequence[str]]): The columns of the table.
            The columns should be of the same length.
        headings (Sequence[str]): The headings for the columns.
            `len(headings)` should be the same as `len(cols)`.
        fmt ('fancy' | 'plain'): The format for the table.
            `'fancy'` returns a table with fancy formatting using box
            drawing characters.
            `'plain'` returns a table using only ascii characters.

    Returns:
        (str): A string containing a table.

    Examples:
        >>> print(construct_table([['3', '25'], ['yes', 'no']],
        ...                       ['k', 'ramanujan'], 'plain'))
        k  | ramanujan
        ---+----------
        3  | yes
        25 | no

    """
    columnlength = len(cols[0]) if cols else 0
    for col in cols:
        assert len(col) == columnlength
    assert len(cols) == len(headings)

    def printed_width(x):
        if fmt == "fancy":
            return len(strip_ansi_escape_codes(x))
        else:
            return len(x)

    def columnwidth(category, header):
        return max([printed_width(header)] + list(map(printed_width, category)))

    col_ws = tuple(columnwidth(c, h) for c, h, in zip(cols, headings))

    def format_widths(row):
        return [w + len(x) - printed_width(x) for w, x in zip(col_ws, row)]

    prefix = []
    suffix = []
    if fmt == "fancy":
        pfx = "┌─"
        pfx += "─┬─".join("".join("─" for _ in range(w)) for w in col_ws)
        pfx += "─┐"
        prefix = [pfx]
        tab_row = "│ "
        tab_row += " │ ".join("{{:{:d}}}" for _ in range(len(cols)))
        tab_row += " │"
        head_row = tab_row
        head_sep = "╞═"
        head_sep += "═╪═".join("".join("═" for _ in range(w)) for w in col_ws)
        head_sep += "═╡"
        sfx = "└─"
        sfx += "─┴─".join("".join("─" for _ in range(w)) for w in col_ws)
        sfx += "─┘"
        suffix = [sfx]
    elif fmt == "plain":
        tab_row = " | ".join("{{:{:d}}}" for _ in range(len(cols)))
        head_row = tab_row
        head_sep = "-+-".join("".join("-" for _ in range(w)) for w in col_ws)
    else:
        raise ValueError("fmt must be one of 'fancy', 'plain'")

    lines = [head_row.format(*format_widths(headings)).format(*headings)]
    lines.append(head_sep)
    for row in zip(*cols):
        lines.append(tab_row.format(*format_widths(row)).format(*row))
    return os.linesep.join(line.rstrip() for line in prefix + lines + suffix)


ansi_escape_re = re.compile(r'\x1b[^m]*m')
def strip_ansi_escape_codes(string):
    return ansi_escape_re.sub('', string)
