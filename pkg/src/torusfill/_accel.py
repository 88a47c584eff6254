"""Select the compiled grid kernel when it is importable and the grid fits in 64 bits."""
from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

HAVE_EXTENSION = _compiled is not None
_INT64_SAFE = 2**62


def fits_int64(p, q, r_max, s_max):
    return p * q * max(s_max, 1) + r_max < _INT64_SAFE and (2 * r_max + 1) * (s_max + 1) < _INT64_SAFE


def classify_grid(p, q, r_max, s_max, backend="auto"):
    """Dispatch to a kernel. ``backend`` is ``"auto"``, ``"compiled"`` or ``"python"``."""
    if backend not in ("auto", "compiled", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    use_c = backend != "python" and HAVE_EXTENSION and fits_int64(p, q, r_max, s_max)
    if backend == "compiled" and not use_c:
        raise RuntimeError("compiled kernel unavailable for this grid")
    if use_c:
        rs, ss, codes = _compiled.classify_grid(p, q, r_max, s_max)
        return list(rs), list(ss), list(codes)
    return _kernels_py.classify_grid(p, q, r_max, s_max)
