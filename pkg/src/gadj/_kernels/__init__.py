"""Kernel backend selection.

The compiled extension is preferred when it imports; setting the environment
variable ``GADJ_PURE_PYTHON=1`` forces the numpy fallback.  Both backends
expose the same functions, so callers go through :func:`active`.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from types import ModuleType

from gadj._kernels import _pykernels

try:
    from gadj._kernels import _ckernels
except ImportError:  # pragma: no cover - depends on the build
    _ckernels = None

BACKENDS: dict[str, ModuleType] = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["compiled"] = _ckernels


def _default() -> ModuleType:
    if os.environ.get("GADJ_PURE_PYTHON", "").strip() not in ("", "0"):
        return _pykernels
    return _ckernels if _ckernels is not None else _pykernels


_active = _default()


def active() -> ModuleType:
    return _active


def available() -> list[str]:
    return list(BACKENDS)


def set_backend(name: str) -> None:
    global _active
    if name == "auto":
        _active = _default()
        return
    try:
        _active = BACKENDS[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available (have {available()})") from None


@contextmanager
def use_backend(name: str):
    global _active
    saved = _active
    set_backend(name)
    try:
        yield _active
    finally:
        _active = saved
