"""Select the compiled simplex kernel when it was built, else pure Python.

``use_backend("python")`` forces the fallback; the benchmark and the kernel
equivalence tests switch backends this way.
"""
from . import _kernel_py

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS = {"python": _kernel_py}
if _compiled is not None:
    _BACKENDS["compiled"] = _compiled

kernel = _compiled if _compiled is not None else _kernel_py


def available() -> list[str]:
    return sorted(_BACKENDS)


def current() -> str:
    return "compiled" if kernel is _compiled and _compiled is not None else "python"


def use_backend(name: str) -> None:
    global kernel
    try:
        kernel = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {available()}") from None
