"""The executable catalogue of congruence checks"""

from .AbstractChecks import Case, Check, CheckOutcome, Counterexample, Formulation, SeriesCongruenceCheck, Status
from . import residue_classes, parity, modular, prime_moduli, regular, compositions, classic  # registration order
from .runner import RegistryEntry, get_check, outcomes_to_json, registry, run_all, run_check

checks = [check for check in Check.registered() if not check.disabled]
