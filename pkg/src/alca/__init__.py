"""l-complete approximations of behaviors given by (time dependent) state machines."""

from .analysis import (
    CompletenessReport,
    is_async_l_complete,
    is_sync_l_complete,
    memory_span_report,
    minimal_l,
)
from .approx import state_space, strongest_async, strongest_sync
from .behavior import (
    Verdict,
    equivalent,
    includes,
    is_strictly_time_invariant,
    is_time_invariant,
    shift,
)
from .domino import DominoProfile, WordSet, domino_profile, domino_union, initial_prefixes, restrict
from .errors import (
    AlcaError,
    AlphabetMismatch,
    ParseError,
    ResourceLimit,
    SchemaError,
    SymbolError,
)
from .io import export_dot, parse_machine, read_machine, serialize_machine, write_machine
from .machine import (
    LAMBDA,
    Lasso,
    Machine,
    ReachProfile,
    is_empty,
    is_live_prefix,
    lasso_member,
    reach_profile,
    timeset_member,
    trim,
    validate,
)
from .timeset import TimeSet

__version__ = "0.1.0"
