"""Size caps for enumeration-heavy operations.

Two caps govern how large a group the library will enumerate:

* element cap: maximum group order for full element enumeration,
* lattice cap: maximum group order for subgroup lattice construction
  (and for the Cayley-table machinery behind it).

Every capped operation also accepts an explicit ``cap=`` argument which
wins over both the defaults and the environment.  The environment
variable ``SYLOWLAB_CAP`` overrides both defaults at once.
"""

import os

DEFAULT_ELEMENT_CAP = 10**6
DEFAULT_LATTICE_CAP = 2000

_ENV_VAR = "SYLOWLAB_CAP"


def _env_override() -> int | None:
    raw = os.environ.get(_ENV_VAR, "").strip()
    if not raw:
        return None
    return int(raw)


def element_cap(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    env = _env_override()
    return env if env is not None else DEFAULT_ELEMENT_CAP


def lattice_cap(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    env = _env_override()
    return env if env is not None else DEFAULT_LATTICE_CAP
