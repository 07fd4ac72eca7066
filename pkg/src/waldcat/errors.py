"""Exception types and engine size caps."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


class WaldError(Exception):
    """Base class for engine errors."""


class SizeCapError(WaldError):
    """An enumeration or construction would exceed a configured cap."""


class NoPushoutError(WaldError):
    """A required pushout is not guaranteed to exist (no leg is a cofibration)."""


class NotAFunctorError(WaldError):
    """Object or morphism tables are not total, or functoriality fails."""


class NaturalityError(WaldError):
    """A family of components is not natural."""


class HypothesisError(WaldError):
    """The inputs of a theorem-backed operation do not satisfy its hypotheses."""


class NotExactError(WaldError):
    """A multifunctor required to be exact fails an exactness axiom."""


class PostconditionError(WaldError):
    """A verified postcondition failed; indicates an engine defect."""


@dataclass(frozen=True)
class Caps:
    max_objects: int = 512
    max_set_size: int = 64
    max_enumeration: int = 2_000_000
    max_cube_dim: int = 6
    max_arity: int = 6


def _caps_from_env() -> Caps:
    caps = Caps()
    raw = os.environ.get("WALDCAT_CAPS", "")
    for item in filter(None, (s.strip() for s in raw.split(","))):
        key, _, value = item.partition("=")
        if not hasattr(caps, key):
            raise ValueError(f"unknown cap {key!r} in WALDCAT_CAPS")
        caps = replace(caps, **{key: int(value)})
    return caps


CAPS = _caps_from_env()


def check_cap(name: str, value: int, cap: int) -> None:
    if value > cap:
        raise SizeCapError(f"{name} = {value} exceeds cap {cap}")
