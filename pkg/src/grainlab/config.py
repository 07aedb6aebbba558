"""Enumeration caps and their configuration sources.

All combinatorial operations in this package enumerate exponentially
large spaces, so every entry point is guarded by a cap with a safe
default.  Exceeding a cap raises CapExceeded; nothing is ever silently
truncated.  Caps can be overruled (raised or lowered) via:

  * the environment variable GRAINLAB_CAPS, e.g.
      GRAINLAB_CAPS="error_enum_n=26,graph_n=14"
  * a key=value config file passed to the CLI (--config), and
  * direct calls to set_caps() (tests, embedding code).

CLI flags always win over file/env settings.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

from .errors import PreconditionError

#: hard ceiling on word length; anything longer is rejected at parse time
#: (words pack into ints, so long simulation blocks are still cheap)
WORD_LEN_MAX = 1_000_000


@dataclass
class Caps:
    # listing all error vectors of length n (grows like phi^n)
    error_enum_n: int = 24
    # grain_preimages and the greedy clique partition (2^m vertices)
    preimage_m: int = 16
    partition_m: int = 16
    partition_s: int = 4
    # confusability graph construction
    graph_n: int = 16
    # exact maximum-code-size search
    exact_m_n: int = 10
    exact_m_n_multi: int = 8          # applies when t >= 2
    exact_m_time_limit: float = 0.0   # seconds; 0 disables the limit
    # greedy known-pattern code construction (2^n candidates)
    greedy_code_n: int = 20
    # materializing the Hamming-prefix code (2^(2^m)/2^m words)
    hamming_m: int = 4
    # exact channel oracles
    channel_exact_n: int = 20
    error_entropy_n: int = 14

    def update_from_pairs(self, pairs: dict[str, str]) -> None:
        fields = {f.name: f for f in dataclasses.fields(self)}
        for key, raw in pairs.items():
            if key not in fields:
                raise PreconditionError(f"unknown cap name: {key!r}")
            kind = fields[key].type
            try:
                value = float(raw) if "float" in str(kind) else int(raw)
            except ValueError as exc:
                raise PreconditionError(f"bad cap value {key}={raw!r}") from exc
            setattr(self, key, value)


def parse_cap_string(text: str) -> dict[str, str]:
    """Parse 'key=value' pairs separated by commas, semicolons or whitespace."""
    pairs: dict[str, str] = {}
    for chunk in text.replace(";", ",").replace(" ", ",").split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise PreconditionError(f"malformed cap entry {chunk!r} (want key=value)")
        key, _, value = chunk.partition("=")
        pairs[key.strip()] = value.strip()
    return pairs


_caps = Caps()
if os.environ.get("GRAINLAB_CAPS"):
    _caps.update_from_pairs(parse_cap_string(os.environ["GRAINLAB_CAPS"]))


def get_caps() -> Caps:
    return _caps


def set_caps(**kwargs) -> Caps:
    """Override selected caps in place; returns the active Caps object."""
    _caps.update_from_pairs({k: str(v) for k, v in kwargs.items()})
    return _caps
