"""jssec: reference interpreter and security linter for a JavaScript subset."""

__version__ = "0.1.0"
