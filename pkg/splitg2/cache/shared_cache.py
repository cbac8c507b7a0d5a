import logging
from typing import Dict, Literal, Optional, Tuple, Type, Union, overload

from splitg2.algebra.fields import FieldSpec
from splitg2.errors import FieldMismatch
from splitg2.lie.dergen import DerivationSpace
from splitg2.lie.liestruct import BracketTable

logger = logging.getLogger(__name__)

CacheKind = Literal["derivations", "table"]
CachedValue = Union[DerivationSpace, BracketTable]

KINDS: Dict[str, Type] = {"derivations": DerivationSpace, "table": BracketTable}


class SharedCache:
    """
    Process-wide memo of solved derivation spaces and bracket tables,
    one entry per (kind, field). Every instantiation returns the same object.
    """

    _instance = None
    _entries: Dict[Tuple[str, FieldSpec], CachedValue]

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._entries = {}
        return cls._instance

    @staticmethod
    def _expected_type(kind: str) -> Type:
        if kind not in KINDS:
            raise ValueError(f"Unknown cache kind {kind!r}, expected one of {sorted(KINDS)}")
        return KINDS[kind]

    @overload
    def get(self, kind: Literal["derivations"], field: FieldSpec) -> Optional[DerivationSpace]: ...

    @overload
    def get(self, kind: Literal["table"], field: FieldSpec) -> Optional[BracketTable]: ...

    def get(self, kind: CacheKind, field: FieldSpec) -> Optional[CachedValue]:
        self._expected_type(kind)
        return self._entries.get((kind, field))

    def put(self, kind: CacheKind, field: FieldSpec, value: CachedValue) -> None:
        """
        Stores `value` as the `kind` entry for `field`, replacing any previous one.
        """
        expected = self._expected_type(kind)
        if not isinstance(value, expected):
            raise TypeError(
                f"A {kind} entry must be a {expected.__name__}, got {type(value).__name__}"
            )
        if value.field != field:
            raise FieldMismatch(value.field.label, field.label)
        logger.debug(f"Caching {kind} over {field.label}")
        self._entries[(kind, field)] = value

    def fields(self, kind: CacheKind) -> Tuple[FieldSpec, ...]:
        self._expected_type(kind)
        return tuple(f for k, f in self._entries if k == kind)

    def clear(self, field: Optional[FieldSpec] = None) -> None:
        """Drops every entry, or only those for `field`."""
        if field is None:
            self._entries.clear()
            return
        for key in [k for k in self._entries if k[1] == field]:
            del self._entries[key]

    def __len__(self) -> int:
        return len(self._entries)
