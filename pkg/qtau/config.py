"""Deals with the configuration file and the environment overrides."""

import copy
import json
import os

from loguru import logger

__all__ = ['config', 'DEFAULT_CONFIG', 'load_config', 'save_config']

DEFAULT_CONFIG = {
    'debug': False,
    'max_order': 50000,
    'max_limit': 20000,
    'workers': 1,
    'partition_sum_cap': 64,
    'stated_sum_limit': 500,
    'limits': {
        'quick': {},
        'full': {}
    },
    'disabled_checks': [],
    'sentry_url': ""
}

config = copy.deepcopy(DEFAULT_CONFIG)

ORDER_ENV_VAR = 'QTAU_MAX_ORDER'


def load_config(path: str = 'config.json') -> dict:
    """Merges the JSON file at `path` (if any) and the environment over the defaults, in place."""
    config.clear()
    config.update(copy.deepcopy(DEFAULT_CONFIG))
    if path and os.path.isfile(path):
        with open(path, encoding='utf-8') as f:
            config.update(json.load(f))
    if os.environ.get(ORDER_ENV_VAR):
        try:
            config['max_order'] = int(os.environ[ORDER_ENV_VAR])
        except ValueError:
            logger.warning(f"Ignoring non-integer {ORDER_ENV_VAR}={os.environ[ORDER_ENV_VAR]!r}")
    return config


def save_config(path: str = 'config.json'):
    """Writes the merged configuration back so every option is visible to the user."""
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(config, f, indent='\t')
