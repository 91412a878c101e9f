"""Exact q-series engine and congruence verifier for generalized tau functions."""

from .bot import QTau
