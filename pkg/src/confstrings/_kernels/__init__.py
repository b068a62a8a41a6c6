"""Kernel backend selection.

Prefers the compiled extension; falls back to the pure-numpy implementation
when the extension is unavailable.  Set ``CONFSTRINGS_FORCE_PURE=1`` to force
the fallback (used by the backend-comparison benchmark and tests).
"""
import os

if os.environ.get("CONFSTRINGS_FORCE_PURE"):
    from . import _pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _pure as _impl

        BACKEND = "pure"

ellip_k = _impl.ellip_k
ellip_e = _impl.ellip_e
ellip_ke = _impl.ellip_ke
ellip_pi = _impl.ellip_pi
carlson_rf = _impl.carlson_rf
carlson_rc = _impl.carlson_rc
carlson_rj = _impl.carlson_rj
jacobi_cn_dn_sn = _impl.jacobi_cn_dn_sn
jacobi_cn_dn_sn_arr = _impl.jacobi_cn_dn_sn_arr

__all__ = [
    "BACKEND",
    "ellip_k",
    "ellip_e",
    "ellip_ke",
    "ellip_pi",
    "carlson_rf",
    "carlson_rc",
    "carlson_rj",
    "jacobi_cn_dn_sn",
    "jacobi_cn_dn_sn_arr",
]
