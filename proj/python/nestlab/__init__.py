"""Finite nest calculus, orderability checks and Fermat-real arithmetic."""

import json

from ._core import (
    CapacityError,
    InputError,
    count_families,
    count_topologies,
    fermat_canonical,
    fermat_compare,
    fermat_sample,
    generate_topology,
    induced_order,
    is_interlocking,
    is_nest,
    minimal_neight,
    order_class,
    ordinal_profile,
    preimage_nest,
    project_nest,
    scatters,
    separation_kind,
    vdw_verdict,
)
from ._core import run_command as _run_command


def run_command(name, instance=None, args=(), seed=20240601):
    """Runs a CLI command and returns the report as a dict.

    `instance` may be a dict or JSON text.
    """
    if isinstance(instance, dict):
        instance = json.dumps(instance)
    return json.loads(_run_command(name, instance or "", list(args), seed))


__all__ = [
    "CapacityError",
    "InputError",
    "count_families",
    "count_topologies",
    "fermat_canonical",
    "fermat_compare",
    "fermat_sample",
    "generate_topology",
    "induced_order",
    "is_interlocking",
    "is_nest",
    "minimal_neight",
    "order_class",
    "ordinal_profile",
    "preimage_nest",
    "project_nest",
    "run_command",
    "scatters",
    "separation_kind",
    "vdw_verdict",
]
