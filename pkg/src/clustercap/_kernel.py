"""Backend selection for the hot scan kernel.

The compiled Cython kernel is used when it imported successfully and the
scaled integers fit comfortably in 64 bits; otherwise the pure-Python
twin (exact unbounded integers) takes over.  Both implement the same
contract and return identical results.
"""

from __future__ import annotations

from . import _kernel_py

try:
    from . import _kernel_c  # type: ignore[attr-defined]
except ImportError:
    _kernel_c = None

# headroom: k * max weight must stay below 2^63 in the compiled kernel
_INT64_BUDGET = 2**62
_MAX_COMPILED_K = 32


def compiled_available() -> bool:
    return _kernel_c is not None


def active_backend() -> str:
    return "compiled" if _kernel_c is not None else "pure"


def _fits_compiled(k: int, d_intra: int, d_cross: int, alpha: int, bi: int, bc: int) -> bool:
    if k > _MAX_COMPILED_K:
        return False
    top = max(alpha, (d_intra + 1) * bi + (d_intra + d_cross + 1) * bc)
    return k * top < _INT64_BUDGET


def scan_distribution(
    s0: int,
    clusters: tuple[int, ...],
    d_intra: int,
    d_cross: int,
    alpha: int,
    beta_intra: int,
    beta_cross: int,
    backend: str | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Minimum min-cut (scaled) over all sequences of one distribution,
    plus the first achieving sequence in scan order.

    `backend` forces "pure" or "compiled" (testing/benchmarks); the
    default picks the compiled kernel whenever it is safe.
    """
    k = s0 + sum(clusters)
    if backend == "compiled":
        if _kernel_c is None:
            raise RuntimeError("compiled kernel not available")
        return _kernel_c.scan_distribution(
            s0, clusters, d_intra, d_cross, alpha, beta_intra, beta_cross
        )
    if backend == "pure":
        return _kernel_py.scan_distribution(
            s0, clusters, d_intra, d_cross, alpha, beta_intra, beta_cross
        )
    if backend is not None:
        raise ValueError(f"unknown backend {backend!r}")
    if _kernel_c is not None and _fits_compiled(
        k, d_intra, d_cross, alpha, beta_intra, beta_cross
    ):
        return _kernel_c.scan_distribution(
            s0, clusters, d_intra, d_cross, alpha, beta_intra, beta_cross
        )
    return _kernel_py.scan_distribution(
        s0, clusters, d_intra, d_cross, alpha, beta_intra, beta_cross
    )
