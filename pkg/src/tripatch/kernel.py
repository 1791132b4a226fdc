"""Kernel selection: compiled extension when available, pure Python otherwise.

Set TRIPATCH_PURE=1 to force the pure-Python kernel (used by the benchmark
and by tests that compare the two implementations).
"""

import os

if os.environ.get("TRIPATCH_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND

trim = _impl.trim
content = _impl.content
primitive = _impl.primitive
deriv = _impl.deriv
mul = _impl.mul
eval_scaled = _impl.eval_scaled
eval_sign = _impl.eval_sign
prem_pos = _impl.prem_pos
gcd_poly = _impl.gcd_poly
sturm_chain = _impl.sturm_chain
var_at = _impl.var_at
var_inf = _impl.var_inf
count_roots = _impl.count_roots
count_roots_all = _impl.count_roots_all
