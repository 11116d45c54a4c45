import logging
import os
from typing import Mapping, Optional

from edfforge import EdfForgeError
from edfforge.types import SearchLimits

log = logging.getLogger(__name__)

MAX_SEARCH_ENV = 'EDF_FORGE_MAX_SEARCH'
MAX_TREE_ORDER_ENV = 'EDF_FORGE_MAX_TREE_ORDER'
WORKERS_ENV = 'EDF_FORGE_WORKERS'


class ConfigError(EdfForgeError):
    ...


def _positive(env: Mapping[str, str], name: str, default: int) -> int:
    raw = env.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f'{name} must be an integer, got {raw!r}') from None
    if value < 1:
        raise ConfigError(f'{name} must be positive, got {value}')
    return value


def search_limits(env: Optional[Mapping[str, str]] = None) -> SearchLimits:
    """Read oracle limits from the environment.

    :param env: Mapping to read from. Defaults to :data:`os.environ`.
    :return: The resolved :class:`SearchLimits`.
    """
    if env is None:
        env = os.environ
    defaults = SearchLimits()
    limits = SearchLimits(
        max_vertices=_positive(env, MAX_SEARCH_ENV, defaults.max_vertices),
        max_tree_order=_positive(env, MAX_TREE_ORDER_ENV, defaults.max_tree_order),
        workers=_positive(env, WORKERS_ENV, defaults.workers),
    )
    if limits != defaults:
        log.debug('search limits overridden: %s', limits)
    return limits
