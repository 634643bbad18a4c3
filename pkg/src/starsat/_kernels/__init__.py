"""Search-kernel backend selection.

The compiled Cython kernels are preferred; when the extension is missing
(no compiler at install time) the pure-Python implementations are used.
Both expose the same four functions with bit-identical results; BACKEND
names the one in effect.  benchmarks/bench_kernels.py compares the two.
"""

from . import _pykernels

try:
    from . import _cykernels as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on the build environment
    _impl = _pykernels
    BACKEND = "pure"

max_sparse_set_at_most = _impl.max_sparse_set_at_most
find_set_with_edges = _impl.find_set_with_edges
find_sparse_kset = _impl.find_sparse_kset
count_ksets_with_edges = _impl.count_ksets_with_edges


def backends() -> dict:
    """All importable kernel backends, keyed by name."""
    out = {"pure": _pykernels}
    if BACKEND == "compiled":
        out["compiled"] = _impl
    return out
