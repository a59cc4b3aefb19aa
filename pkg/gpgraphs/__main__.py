# -*- encoding: utf-8 -*-
"""Runs the `gpgraphs` command line with `python -m gpgraphs`."""
import sys

from .cli import main

if __name__ == '__main__':
    sys.exit(main())
