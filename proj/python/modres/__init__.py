"""Python access to the modres core: run jobs and query dimension formulas."""

import json

from . import _core
from ._core import (
    UsageError,
    catalan,
    command_names,
    d_dim,
    lemma15_dims,
    verlinde_dim,
    verlinde_dim_from_d,
)

__all__ = [
    "UsageError",
    "catalan",
    "command_names",
    "d_dim",
    "lemma15_dims",
    "run",
    "run_batch",
    "verlinde_dim",
    "verlinde_dim_from_d",
]


def run(command, seed=0, workers=1, timings=False, **params):
    """Run one job, e.g. run("resolve", p=3, n=4, k=1); returns the report dict."""
    return json.loads(_core.run_job_json(command, json.dumps(params), seed, workers, timings))


def run_batch(jobs, seed=0, workers=1, timings=False):
    """Run a list of job dicts (each with a "command" key); returns the aggregate dict."""
    text = jobs if isinstance(jobs, str) else json.dumps(list(jobs))
    return json.loads(_core.run_batch_json(text, seed, workers, timings))
