"""Looks checks up by id and runs them, one at a time or fanned out over a process pool."""

import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, NamedTuple, Optional, Tuple, Type

from fuzzywuzzy import fuzz
from loguru import logger

from ..config import config
from ..errors import DomainError, LimitExceededError, UnknownCheckError
from .AbstractChecks import Check, CheckOutcome

PROFILES = ('quick', 'full')

# minimum fuzz ratio for a suggestion
SUGGESTION_CUTOFF = 50


class RegistryEntry(NamedTuple):
    check_id: str
    title: str
    statement: str
    expected_failures: Tuple[str, ...] = ()


def registry() -> List[RegistryEntry]:
    """Every registered check in catalogue order."""
    return [RegistryEntry(check.check_id, check.title, check.statement, tuple(sorted(check.expected_failures)))
            for check in Check.registered() if not check.disabled]


def get_check(check_id: str) -> Type[Check]:
    """The check class for an id; unknown ids raise with the closest matches attached."""
    known = [check for check in Check.registered() if not check.disabled]
    for check in known:
        if check.check_id.lower() == check_id.lower():
            return check
    ranked = sorted(((fuzz.ratio(check_id.lower(), check.check_id.lower()), check.check_id) for check in known),
                    reverse=True)
    raise UnknownCheckError(check_id, [name for score, name in ranked[:3] if score >= SUGGESTION_CUTOFF])


def profile_limit(check: Type[Check], profile: str) -> int:
    """The scan limit for a profile, after any per-check override in the config."""
    if profile not in PROFILES:
        raise DomainError(f"unknown profile {profile!r}, expected one of {', '.join(PROFILES)}")
    override = config['limits'].get(profile, {}).get(check.check_id)
    if override:
        return int(override)
    return check.quick_limit if profile == 'quick' else check.full_limit


def run_check(check_id: str, limit: Optional[int] = None, params: Optional[Dict[str, int]] = None,
              profile: str = 'quick') -> CheckOutcome:
    """Scans one check from its lower bound to `limit` (the profile limit when omitted)."""
    check = get_check(check_id)
    if limit is None:
        limit = profile_limit(check, profile)
    if limit < 1:
        raise DomainError(f"limit must be at least 1, got {limit}")
    if limit > config['max_limit']:
        logger.critical(f"Limit {limit} for {check.check_id} exceeds the configured ceiling {config['max_limit']}")
        raise LimitExceededError(f"limit {limit} exceeds the ceiling {config['max_limit']}")
    return check(limit, params).run()


def _adopt_config(parent: dict):
    config.clear()
    config.update(parent)


async def _run_pool(jobs: List[Tuple[str, int]], workers: int) -> List[CheckOutcome]:
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers, initializer=_adopt_config, initargs=(dict(config),)) as pool:
        futures = [loop.run_in_executor(pool, run_check, check_id, limit) for check_id, limit in jobs]
        return await asyncio.gather(*futures)


def run_all(profile: str = 'quick', workers: Optional[int] = None) -> List[CheckOutcome]:
    """Runs every enabled check at its profile limit; outcomes come back in catalogue order."""
    disabled = set(config['disabled_checks'])
    jobs = [(check.check_id, profile_limit(check, profile))
            for check in Check.registered() if not check.disabled and check.check_id not in disabled]
    workers = workers or config['workers']
    logger.info(f"Running {len(jobs)} checks with the {profile} profile on {workers} worker(s)")
    if workers > 1:
        return list(asyncio.run(_run_pool(jobs, workers)))
    return [run_check(check_id, limit) for check_id, limit in jobs]


def outcomes_to_json(outcomes: List[CheckOutcome]) -> list:
    return [outcome.to_json() for outcome in outcomes]
