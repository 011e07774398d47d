"""Levenshtein distance with backend selection at import time.

Prefers the compiled kernel built from _kernels.pyx and falls back to the
pure-Python implementation. Set MORPHSUITE_PURE_PYTHON=1 to force the
fallback (used by the benchmark and by tests comparing both).
"""
import os

from morphsuite._kernels_py import levenshtein as _levenshtein_py

if os.environ.get("MORPHSUITE_PURE_PYTHON"):
    levenshtein = _levenshtein_py
    BACKEND = "python"
else:
    try:
        from morphsuite._kernels import levenshtein  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        levenshtein = _levenshtein_py
        BACKEND = "python"
