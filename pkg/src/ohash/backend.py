"""Import-time kernel selection: compiled extension if built, else pure Python.

Set OHASH_BACKEND=py or =c to force a backend; the default "auto" prefers the
compiled kernels.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

_KERNELS = {"py": _pykernels}
if _ckernels is not None:
    _KERNELS["c"] = _ckernels


def _select() -> str:
    choice = os.environ.get("OHASH_BACKEND", "auto").lower()
    if choice == "auto":
        return "c" if "c" in _KERNELS else "py"
    if choice not in ("c", "py"):
        raise ValueError(f"OHASH_BACKEND must be 'auto', 'c' or 'py', not {choice!r}")
    if choice not in _KERNELS:
        raise ImportError("OHASH_BACKEND=c requested but the compiled kernels are not built")
    return choice


_ACTIVE = _select()


def backend_name() -> str:
    """Name of the kernel set in use: 'c' or 'py'."""
    return _ACTIVE


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_KERNELS))


def get_kernels(name: str | None = None):
    """Kernel module for ``name`` (default: the active backend)."""
    if name is None:
        return _KERNELS[_ACTIVE]
    try:
        return _KERNELS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}") from None
