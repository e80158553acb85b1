"""Non-dominated sorting algorithms and benchmark dataset generators."""

from ._ndsort import (
    SwitchPolicy,
    count_levels,
    generate,
    grid_sizes,
    should_switch,
    sort,
    sort_bos,
    sort_dc,
    sort_hybrid,
    sort_naive,
    switch_interval,
    __version__,
)

__all__ = [
    "SwitchPolicy",
    "count_levels",
    "generate",
    "grid_sizes",
    "should_switch",
    "sort",
    "sort_bos",
    "sort_dc",
    "sort_hybrid",
    "sort_naive",
    "switch_interval",
    "__version__",
]
