"""Selects the compiled kernel when it is importable, else the pure-Python one.

Set ``ARTIFACT_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("ARTIFACT_PURE_PYTHON") == "1":
    from . import _pykernel as impl
    BACKEND = "python"
else:
    try:
        from . import _ckernel as impl  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        from . import _pykernel as impl
        BACKEND = "python"

reduce = impl.reduce
inverse = impl.inverse
concat = impl.concat
act_letter = impl.act_letter
act_word = impl.act_word
signature = impl.signature
substitute = impl.substitute
signature_capped = impl.signature_capped

__all__ = [
    "BACKEND", "reduce", "inverse", "concat", "act_letter", "act_word",
    "signature", "substitute", "signature_capped",
]
