"""Backend selection for the integer kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over.  :func:`use_backend` switches explicitly (benchmarks and
tests compare the two).
"""

from __future__ import annotations

from types import ModuleType

from . import _kernels_py

try:
    from . import _kernels as _compiled  # type: ignore[attr-defined]
except ImportError:  # pragma: no cover - depends on the build
    _compiled = None

_active: ModuleType = _compiled or _kernels_py


def available_backends() -> list[str]:
    return ["python"] + (["compiled"] if _compiled is not None else [])


def backend_name() -> str:
    return "compiled" if _active is _compiled else "python"


def use_backend(name: str) -> None:
    global _active
    if name == "python":
        _active = _kernels_py
    elif name == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        _active = _compiled
    else:
        raise ValueError(f"unknown backend {name!r}")


def eval_homogeneous(terms, p, r, q, degree):
    return _active.eval_homogeneous(terms, p, r, q, degree)


_prepared: dict[tuple[str, int], tuple[object, object]] = {}


def transfer(rows, h):
    # rows come from a cached table, so preparing once per backend pays off
    key = (backend_name(), id(rows))
    hit = _prepared.get(key)
    if hit is None or hit[0] is not rows:
        hit = _prepared[key] = (rows, _active.prepare_transfer(rows))
    return _active.transfer(hit[1], h)


def content_reduce(h):
    return _active.content_reduce(h)


def all_positive(h):
    return _active.all_positive(h)
