"""The foundations: settings, finite fields, Gaussian periods and spectra."""
