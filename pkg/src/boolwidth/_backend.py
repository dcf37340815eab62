"""Kernel backend selection: compiled extension when importable, pure
Python otherwise.

BOOLWIDTH_BACKEND=pure forces the fallback, =compiled insists on the
extension (ImportError if absent), anything else / unset is automatic.
The compiled chain and greedy kernels cover n <= 64 and the exact stage
n <= 26; larger inputs silently take the pure path.
"""

import os

from . import _kernels_py as _pure

_mode = os.environ.get("BOOLWIDTH_BACKEND", "auto")
_compiled = None
if _mode != "pure":
    try:
        from . import _kernels as _compiled
    except ImportError:
        if _mode == "compiled":
            raise
        _compiled = None

HAVE_COMPILED = _compiled is not None


def backend_name() -> str:
    return "compiled" if HAVE_COMPILED else "pure"


def chain_un_sizes(n, adj, order):
    if _compiled is not None and n <= 64:
        return _compiled.chain_un_sizes(n, adj, order)
    return _pure.chain_un_sizes(n, adj, order)


def iun_greedy(n, adj, init, use_n2, bound):
    if _compiled is not None and n <= 64:
        return _compiled.iun_greedy(n, adj, init, use_n2, bound)
    return _pure.iun_greedy(n, adj, init, use_n2, bound)


def exact_stage(n, adj, K):
    if _compiled is not None and n <= 26:
        return _compiled.exact_stage(n, adj, K)
    return _pure.exact_stage(n, adj, K)
