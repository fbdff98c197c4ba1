"""Kernel backend selection.

The compiled backend (`fast`, built from fast.pyx) is preferred when it
imported successfully; the pure-Python backend is the fallback and the
reference.  Set STEINBERG_PURE=1 to force the fallback.
"""

import os

from . import pure

if os.environ.get("STEINBERG_PURE"):
    impl = pure
else:
    try:
        from . import fast as impl  # type: ignore[no-redef]
    except ImportError:
        impl = pure

BACKEND = impl.BACKEND_NAME

path_rng = impl.path_rng
cyl_mul = impl.cyl_mul
expand_cyl = impl.expand_cyl
disjointify_terms = impl.disjointify_terms
collapse_terms = impl.collapse_terms
normalize_terms = impl.normalize_terms
convolve_terms = impl.convolve_terms
expand_terms = impl.expand_terms


def available_backends():
    """Importable backend modules, keyed by name."""
    backends = {"pure": pure}
    try:
        from . import fast

        backends["fast"] = fast
    except ImportError:
        pass
    return backends
