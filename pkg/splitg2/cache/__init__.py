from .shared_cache import SharedCache
from .space_helpers import cached_derivations, cached_table

__all__ = ["SharedCache", "cached_derivations", "cached_table"]
