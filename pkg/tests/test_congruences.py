import json

import pytest

from qtau.config import config
from qtau.congruences import (Case, Check, Counterexample, Status, checks, get_check, outcomes_to_json, registry,
                              run_all, run_check)
from qtau.congruences.AbstractChecks import MAX_COUNTEREXAMPLES, eta_ladder, pentagonal_series, triangular_series
from qtau.congruences.compositions import triangular_residue_set
from qtau.congruences.regular import nine_regular_orbit
from qtau.congruences.residue_classes import PrintedDivisorTable
from qtau.congruences.runner import profile_limit
from qtau.errors import DomainError, LimitExceededError, UnknownCheckError
from qtau.series import EtaProductSpec, eta_product
from qtau.tau import tau_series

CATALOGUE = ['P2.1', 'P2.2', 'P2.3', 'P2.4a', 'P2.4b', 'T3.2', 'T3.3', 'E6', 'T3.4a', 'T3.4b', 'R-EVEN', 'R-EWELL',
             'T3.5', 'T3.6', 'C3.6a', 'C3.6b', 'T-MOD5', 'T-MOD7', 'C-MOD7', 'T-MOD11', 'T-MOD13', 'T-MOD17',
             'T-MOD19', 'T-MOD23', 'T-MOD25', 'T-PS', 'T-2P', 'T-2P1', 'T-P21', 'T3.7', 'T3.8', 'L4.1', 'T4.2', 'C4.2a',
             'C4.2b', 'CLASSIC-P', 'CLASSIC-TAU']


class Broken(Check):
    """Fails everywhere below its limit except on multiples of 10, which are vacuous."""

    def cases(self):
        for n in range(self.lower, self.limit + 1):
            yield Case(n, n, n + 1, 'off by one', applicable=n % 10 != 0)


Broken.check_id = 'BROKEN'  # set after class creation so it stays out of the registry


class Audited(Check):
    """Fails 55 times on an expected item, then once on `late_item`."""
    expected_failures = frozenset({'printed'})
    late_item = 'asserted item'

    def cases(self):
        for n in range(55):
            yield Case(n, 1, 0, 'printed')
        yield Case(55, 1, 0, self.late_item)


Audited.check_id = 'AUDITED'


def test_catalogue_order():
    assert [entry.check_id for entry in registry()] == CATALOGUE
    assert [check.check_id for check in checks] == CATALOGUE
    assert all(entry.title and entry.statement for entry in registry())


@pytest.mark.parametrize('check_id', [check_id for check_id in CATALOGUE if check_id != 'P2.4a'])
def test_check_passes_at_quick_limit(check_id):
    outcome = run_check(check_id)
    assert outcome.status is Status.PASS, outcome.counterexamples[:5]
    assert outcome.failures == 0
    assert outcome.applicable > 0
    assert outcome.matches_expectation


def test_printed_divisor_table_fails_as_audited():
    outcome = run_check('P2.4a', 20)
    assert outcome.status is Status.FAIL
    assert outcome.expected_fail
    assert {example.item for example in outcome.counterexamples} <= {'item 2', 'item 4', 'item 5', 'item 3 (r=6)'}
    assert Counterexample(5, 6, 0, 'item 2') in outcome.counterexamples
    assert Counterexample(9, 3, 0, 'item 4') in outcome.counterexamples
    assert Counterexample(13, 2, 0, 'item 5') in outcome.counterexamples
    assert all(example.item != 'item 1' for example in outcome.counterexamples)


def test_derived_divisor_table_passes_further():
    assert run_check('P2.4b', 100).status is Status.PASS


def test_counterexamples_are_capped_and_counted():
    outcome = Broken(200).run()
    assert outcome.status is Status.FAIL
    assert outcome.failures == 180
    assert outcome.not_applicable_count == 20
    assert len(outcome.counterexamples) == MAX_COUNTEREXAMPLES
    assert not outcome.matches_expectation
    assert not outcome.expected_fail


def test_unknown_parameters_are_rejected():
    with pytest.raises(DomainError):
        run_check('T3.6', 10, {'q': 3})
    with pytest.raises(DomainError):
        run_check('C4.2b', 10, {'l': 4})
    with pytest.raises(DomainError):
        run_check('T4.2', 10, {'l': 9, 'k': 4})


def test_pinned_parameters():
    outcome = run_check('T4.2', 40, {'l': 7, 'k': 4})
    assert outcome.status is Status.PASS
    assert outcome.to_json()['params'] == {'l': 7, 'k': 4}
    assert run_check('T3.8', 60, {'p': 11}).status is Status.PASS


def test_lookup_and_suggestions():
    assert get_check('t3.6').check_id == 'T3.6'
    with pytest.raises(UnknownCheckError) as info:
        get_check('T3.66')
    assert 'T3.6' in info.value.suggestions
    assert 'did you mean' in str(info.value)
    with pytest.raises(UnknownCheckError) as info:
        get_check('NOPE')
    assert info.value.check_id == 'NOPE'


def test_limits_are_validated():
    with pytest.raises(DomainError):
        run_check('T3.6', 0)
    config['max_limit'] = 100
    with pytest.raises(LimitExceededError):
        run_check('T3.6', 101)
    with pytest.raises(DomainError):
        run_check('T3.6', profile='medium')


def test_profile_limits_and_overrides():
    check = get_check('P2.4b')
    assert profile_limit(check, 'quick') == 50
    assert profile_limit(check, 'full') == 200
    config['limits']['quick']['P2.4b'] = 7
    assert profile_limit(check, 'quick') == 7
    assert run_check('P2.4b').range == (0, 7)


def test_run_all_skips_disabled_and_keeps_order():
    config['disabled_checks'] = [check_id for check_id in CATALOGUE if check_id not in ('T3.3', 'C4.2a')]
    config['limits']['quick'] = {'T3.3': 30, 'C4.2a': 30}
    outcomes = run_all('quick')
    assert [outcome.check_id for outcome in outcomes] == ['T3.3', 'C4.2a']
    assert all(outcome.range[1] == 30 for outcome in outcomes)


def test_run_all_on_a_process_pool():
    config['disabled_checks'] = [check_id for check_id in CATALOGUE if check_id not in ('T3.6', 'L4.1', 'CLASSIC-P')]
    config['limits']['quick'] = {'T3.6': 40, 'L4.1': 40, 'CLASSIC-P': 40}
    outcomes = run_all('quick', workers=2)
    assert [outcome.check_id for outcome in outcomes] == ['T3.6', 'L4.1', 'CLASSIC-P']
    assert all(outcome.status is Status.PASS for outcome in outcomes)


def test_outcome_json():
    outcomes = [run_check('P2.4a', 5), run_check('T3.6', 20)]
    payload = outcomes_to_json(outcomes)
    assert payload[0]['status'] == 'fail' and payload[0]['expected'] is True
    assert payload[1]['status'] == 'pass' and payload[1]['range'] == [0, 20]
    assert payload[0]['counterexamples'][0] == {'n': 5, 'lhs': '6', 'rhs': '0', 'item': 'item 2'}
    assert json.loads(json.dumps(payload)) == payload


def test_eta_ladder_matches_direct_expansion():
    ladder = eta_ladder([-5, -1, 0, 3, 24], 80, 7)
    for k in (-5, -1, 3, 24):
        assert ladder[k] == eta_product(EtaProductSpec.eta_power(k), 80, 7)
    assert ladder[0] == eta_product(EtaProductSpec(1), 80, 7)


def test_closed_form_series():
    assert pentagonal_series(300) == eta_product(EtaProductSpec(0, ((1, 1),)), 300)
    assert triangular_series(300, 5) == eta_product(EtaProductSpec(0, ((5, 3),)), 300)


def test_nine_regular_orbit():
    assert [nine_regular_orbit(1, s) for s in (1, 2, 3)] == [1, 5, 21]
    assert nine_regular_orbit(2, 1) == 2
    assert nine_regular_orbit(3, 2) == 13
    for r in range(1, 5):
        for s in range(1, 4):
            assert nine_regular_orbit(r, s + 1) == 4 * nine_regular_orbit(r, s) + 1


def test_triangular_residue_set_contains_triangular_numbers():
    assert triangular_residue_set(7) == {0, 1, 3, 6}
    for l in (5, 7, 11, 13):
        assert {t * (t + 1) // 2 % l for t in range(l)} <= triangular_residue_set(l)


def test_failure_past_the_counterexample_cap_is_unexpected():
    outcome = Audited(60).run()
    assert outcome.failures == 56
    assert len(outcome.counterexamples) == MAX_COUNTEREXAMPLES
    assert all(example.item == 'printed' for example in outcome.counterexamples)
    assert not outcome.matches_expectation
    assert not outcome.expected_fail


def test_failures_past_the_cap_on_expected_items_stay_expected():
    check = Audited(60)
    check.late_item = 'printed'
    outcome = check.run()
    assert outcome.failures == 56
    assert outcome.matches_expectation
    assert outcome.expected_fail


def test_audit_counterexamples_replay_against_tau():
    outcome = run_check('P2.4a', 200)
    assert outcome.failures > MAX_COUNTEREXAMPLES
    assert outcome.matches_expectation
    moduli = {item: modulus for item, modulus, _ in PrintedDivisorTable.items}
    tau = tau_series(24, max(example.n for example in outcome.counterexamples))
    for example in outcome.counterexamples:
        assert example.item in PrintedDivisorTable.expected_failures | PrintedDivisorTable.unasserted
        assert example.lhs == tau[example.n] % moduli[example.item] != 0
        assert example.rhs == 0


def test_frequency_set_parity_with_a_wide_frequency_set():
    outcome = run_check('T3.2', 60, {'k': 95})
    assert outcome.status is Status.PASS
    assert outcome.applicable == 61


@pytest.mark.slow
def test_full_profile_meets_every_expectation():
    outcomes = run_all('full')
    assert [outcome.check_id for outcome in outcomes] == CATALOGUE
    assert all(outcome.matches_expectation for outcome in outcomes)
    assert [outcome.check_id for outcome in outcomes if outcome.status is Status.FAIL] == ['P2.4a']
