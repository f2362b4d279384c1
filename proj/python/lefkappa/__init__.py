"""Kodaira dimensions and invariants of Lefschetz fibrations and pencils."""

import json

try:
    from . import _lefkappa as _core
except ImportError:
    import _lefkappa as _core

LefkappaError = _core.LefkappaError
invariants = _core.invariants
kappa_lefschetz = _core.kappa_lefschetz
endo_signature = _core.endo_signature
hyperelliptic_k_squared = _core.hyperelliptic_k_squared
prop_he_verdict = _core.prop_he_verdict
pencil_genus = _core.pencil_genus
singular_fiber_count = _core.singular_fiber_count
kappa_pencil = _core.kappa_pencil
fibration_to_pencil_genus = _core.fibration_to_pencil_genus
kappa0_pencil_constraints = _core.kappa0_pencil_constraints
canonicalize = _core.canonicalize
run_cli = _core.run_cli


def classify(text, mode="euler"):
    """Classify every record of a dataset; returns one dict per record."""
    return json.loads(_core.classify(text, mode, "json"))


def enumerate_hyperelliptic(g_min, g_max, n_max, workers=1, max_candidates=10_000_000):
    """Exhaustive hyperelliptic (g,1) search; returns the report as a dict."""
    return json.loads(
        _core.enumerate_hyperelliptic(g_min, g_max, n_max, workers, max_candidates, "json")
    )


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
