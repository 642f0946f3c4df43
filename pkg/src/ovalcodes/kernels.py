"""Kernel dispatch: compiled backend when available, pure Python otherwise.

The two backends implement the same functions with identical iteration
order, so results (including failure witnesses) are bit-identical.
OVALCODES_KERNEL=c forces the compiled backend (error if missing),
OVALCODES_KERNEL=py forces the fallback; anything else means auto.
"""
from __future__ import annotations

import os

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None


def available_backends() -> list[str]:
    """Names of usable backends, compiled one first."""
    return (["c"] if _ckernels is not None else []) + ["py"]


def get_backend(name: str):
    """Backend module by name ('c' or 'py')."""
    if name == "py":
        return _pykernels
    if name == "c":
        if _ckernels is None:
            raise ImportError(
                "compiled kernels are not available; reinstall the package "
                "with Cython present or use OVALCODES_KERNEL=py"
            )
        return _ckernels
    raise ValueError(f"unknown kernel backend {name!r}")


def _select() -> tuple[str, object]:
    choice = os.environ.get("OVALCODES_KERNEL", "auto").strip().lower() or "auto"
    if choice == "auto":
        name = "c" if _ckernels is not None else "py"
    elif choice in ("c", "py"):
        name = choice
    else:
        raise ValueError(f"OVALCODES_KERNEL must be 'c', 'py' or 'auto', got {choice!r}")
    return name, get_backend(name)


_BACKEND_NAME, _IMPL = _select()


def backend_name() -> str:
    """Name of the backend selected at import time."""
    return _BACKEND_NAME


def _prep(seq, impl):
    if getattr(impl, "ARRAY_INPUTS", False):
        return np.ascontiguousarray(seq, dtype=np.intc)
    return seq if isinstance(seq, list) else list(seq)


def segre_scan(fvals, ctx, impl=None):
    """Witness (a, x) against the secant-bijection criterion, or None."""
    impl = impl or _IMPL
    return impl.segre_scan(
        _prep(fvals, impl), _prep(ctx.log_table, impl), _prep(ctx.antilog_table, impl), ctx.q
    )


def two_to_one_scan(fvals, ctx, impl=None):
    """Witness (u, v) against the 0-or-2 preimage criterion, or None."""
    impl = impl or _IMPL
    return impl.two_to_one_scan(
        _prep(fvals, impl), _prep(ctx.log_table, impl), _prep(ctx.antilog_table, impl), ctx.q
    )


def slope_scan(fvals, ctx, impl=None):
    """Witness (x, y, z) of a repeated secant slope, or None."""
    impl = impl or _IMPL
    return impl.slope_scan(
        _prep(fvals, impl), _prep(ctx.log_table, impl), _prep(ctx.antilog_table, impl), ctx.q
    )


def wdist_k3(rows, n, ctx, impl=None):
    """Weight histogram (length n+1) for a 3-row generator matrix."""
    impl = impl or _IMPL
    g0, g1, g2 = rows
    return impl.wdist_k3(
        _prep(g0, impl), _prep(g1, impl), _prep(g2, impl),
        _prep(ctx.log_table, impl), _prep(ctx.antilog_table, impl), ctx.q, n,
    )


def wdist_generic(rows, n, ctx, impl=None):
    """Weight histogram (length n+1) for a k-row generator matrix."""
    impl = impl or _IMPL
    prepped = [_prep(r, impl) for r in rows]
    if getattr(impl, "ARRAY_INPUTS", False):
        prepped = np.ascontiguousarray(np.stack(prepped), dtype=np.intc)
    return impl.wdist_generic(
        prepped, _prep(ctx.log_table, impl), _prep(ctx.antilog_table, impl), ctx.q, n
    )


def low_weight_messages_k3(rows, n, ctx, target, impl=None):
    """Projective messages (a, b, c) whose codeword weight equals target."""
    impl = impl or _IMPL
    g0, g1, g2 = rows
    return impl.low_weight_messages_k3(
        _prep(g0, impl), _prep(g1, impl), _prep(g2, impl),
        _prep(ctx.log_table, impl), _prep(ctx.antilog_table, impl), ctx.q, n, target,
    )


def dependent_triples_k3(rows, n, ctx, impl=None):
    """Linearly dependent column triples with their dependency coefficients."""
    impl = impl or _IMPL
    g0, g1, g2 = rows
    return impl.dependent_triples_k3(
        _prep(g0, impl), _prep(g1, impl), _prep(g2, impl),
        _prep(ctx.log_table, impl), _prep(ctx.antilog_table, impl), ctx.q, n,
    )
