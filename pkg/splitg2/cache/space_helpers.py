import logging
from typing import Optional

from splitg2.algebra.fields import FieldSpec
from splitg2.cache.shared_cache import SharedCache
from splitg2.lie.dergen import DerivationSpace, solve_derivations
from splitg2.lie.liestruct import BracketTable, structure_table

logger = logging.getLogger(__name__)


def cached_derivations(
    field: FieldSpec, cache: Optional[SharedCache] = None, max_workers: Optional[int] = None
) -> DerivationSpace:
    if cache is None:
        cache = SharedCache()
    space = cache.get("derivations", field)
    if space is None:
        space = solve_derivations(field, max_workers=max_workers)
        cache.put("derivations", field, space)
    else:
        logger.debug(f"Cache hit for derivations over {field.label}")
    return space


def cached_table(
    field: FieldSpec, cache: Optional[SharedCache] = None, max_workers: Optional[int] = None
) -> BracketTable:
    if cache is None:
        cache = SharedCache()
    table = cache.get("table", field)
    if table is None:
        space = cached_derivations(field, cache=cache, max_workers=max_workers)
        table = structure_table(space, max_workers=max_workers)
        cache.put("table", field, table)
    else:
        logger.debug(f"Cache hit for table over {field.label}")
    return table
