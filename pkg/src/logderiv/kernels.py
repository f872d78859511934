"""Kernel backend selection.

Prefers the compiled Cython kernels when the extension was built; falls back
to the pure-Python twin otherwise.  Set LOGDERIV_PURE_KERNELS=1 to force the
pure backend (used by the benchmark and for debugging).
"""

import os

if os.environ.get("LOGDERIV_PURE_KERNELS"):
    from logderiv import _pykernels as _impl
else:
    try:
        from logderiv import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from logderiv import _pykernels as _impl  # type: ignore[no-redef]

BACKEND = _impl.__name__.rsplit(".", 1)[-1].lstrip("_").replace("kernels", "")
BACKEND = {"c": "cython", "py": "python"}[BACKEND]

mono_mul = _impl.mono_mul
mono_div = _impl.mono_div
mono_lcm = _impl.mono_lcm
dict_add = _impl.dict_add
dict_sub = _impl.dict_sub
dict_scale = _impl.dict_scale
dict_mul = _impl.dict_mul
dict_axpy = _impl.dict_axpy
vec_axpy = _impl.vec_axpy
