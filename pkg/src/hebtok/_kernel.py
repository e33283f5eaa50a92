"""Kernel selection: compiled extension when built, pure Python otherwise.

Both kernels implement identical algorithms (see hebtok._core_py for the
reference semantics); the benchmark suite and the test suite compare them
directly.
"""

try:
    from . import _core as _impl  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build environment
    from . import _core_py as _impl

KERNEL_NAME: str = _impl.KERNEL_NAME
train_merges = _impl.train_merges
encode_word = _impl.encode_word


def load_pure():
    """The pure-Python kernel module (always available)."""
    from . import _core_py

    return _core_py


def load_compiled():
    """The compiled kernel module, or None when not built."""
    try:
        from . import _core  # type: ignore[attr-defined]
    except ImportError:
        return None
    return _core
