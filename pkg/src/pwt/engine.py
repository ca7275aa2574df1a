"""Run-engine selection: compiled kernel when available, pure Python otherwise.

Both engines implement the same ``run`` entry point and are bit-identical by
contract (see ``_engine_py``).  The compiled kernel covers single-leg
instances; multi-leg runs always use the pure engine.  Set
``PWT_PURE_PYTHON=1`` to force the pure engine everywhere.
"""

from __future__ import annotations

import os

from . import _engine_py

if os.environ.get("PWT_PURE_PYTHON"):
    _impl = _engine_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _engine_py

#: Name of the engine actually in use ("compiled" or "python").
ENGINE = "compiled" if _impl is not _engine_py else "python"


def run(weights, profits, cities, distances, *args, **kwargs):
    if len(distances) > 1:
        return _engine_py.run(weights, profits, cities, distances, *args, **kwargs)
    return _impl.run(weights, profits, cities, distances, *args, **kwargs)


def run_pure(*args, **kwargs):
    """Always use the pure-Python engine (parity tests, benchmarks)."""
    return _engine_py.run(*args, **kwargs)
