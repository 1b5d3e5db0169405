"""Walk-kernel backend selection.

The compiled extension `catwalk._kern._fast` (Cython) is used when it
imports cleanly; otherwise the pure numpy reference takes over.  Set
``CATWALK_BACKEND=pure`` or ``CATWALK_BACKEND=fast`` to force a choice
(forcing ``fast`` raises if the extension is missing).  Both backends
produce identical integer outputs; ``benchmarks/bench_kernels.py``
compares their speed.
"""

import os

from . import pure

_requested = os.environ.get("CATWALK_BACKEND", "auto").lower()

if _requested == "pure":
    _impl = pure
elif _requested in ("auto", "fast", "cython"):
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        if _requested != "auto":
            raise
        _impl = pure
else:
    raise ValueError(f"unknown CATWALK_BACKEND={_requested!r}")

BACKEND = _impl.BACKEND
walk_lens = _impl.walk_lens
walk_lcp = _impl.walk_lcp
snapshot = _impl.snapshot
axis_offsets = _impl.axis_offsets
batch_final_len = _impl.batch_final_len
batch_boundary = _impl.batch_boundary
