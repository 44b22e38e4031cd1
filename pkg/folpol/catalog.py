# folpol/catalog.py
"""
Static Catalogue - Named germs and projective foliations
All entries are written out by hand here; forms use the input grammar.
"""

from typing import Dict, List, Optional

from folpol.core.exceptions import InvalidInput
from folpol.utils.text_utils import normalize_name

# ============================================================================
# GERMS AT THE ORIGIN
# ============================================================================

GERMS: List[Dict] = [
    # Hamiltonian germs df of reduced curves: generalized curves
    {"name": "node", "form": "y dx + x dy", "curves": ["x*y"], "generalized_curve": True, "second_type": True},
    {"name": "node-squares", "form": "-2x dx + 2y dy", "curves": ["y^2 - x^2"], "generalized_curve": True, "second_type": True},
    {"name": "cusp", "form": "-3x^2 dx + 2y dy", "curves": ["y^2 - x^3"], "generalized_curve": True, "second_type": True},
    {"name": "a3", "form": "-4x^3 dx + 2y dy", "curves": ["y^2 - x^4"], "generalized_curve": True, "second_type": True},
    {"name": "a4", "form": "-5x^4 dx + 2y dy", "curves": ["y^2 - x^5"], "generalized_curve": True, "second_type": True},
    {"name": "e6", "form": "-4x^3 dx + 3y^2 dy", "curves": ["y^3 - x^4"], "generalized_curve": True, "second_type": True},
    {"name": "three-lines", "form": "(2x*y - y^2) dx + (x^2 - 2x*y) dy", "curves": ["x*y*(x - y)"], "generalized_curve": True, "second_type": True},
    {"name": "three-lines-vertical", "form": "(3x^2 - y^2) dx - 2x*y dy", "curves": ["x*(x^2 - y^2)"], "generalized_curve": True, "second_type": True},
    {"name": "nodal-cubic", "form": "(-2x - 3x^2) dx + 2y dy", "curves": ["y^2 - x^2 - x^3"], "generalized_curve": True, "second_type": True},
    {"name": "d4-complex", "form": "2x*y dx + (x^2 + 3y^2) dy", "curves": ["y"], "generalized_curve": True, "second_type": True},

    # Radial and quasi-radial (dicritical)
    {"name": "radial", "form": "x dy - y dx", "curves": ["x", "x*y"], "generalized_curve": True, "second_type": True},
    {"name": "quasi-radial", "form": "x dy - y dx + x^3 dy", "curves": ["x"], "generalized_curve": True, "second_type": True},
    {"name": "quasi-radial-2", "form": "x dy - y dx + y^2 dx", "curves": ["y"], "generalized_curve": True, "second_type": True},

    # Linear germs
    {"name": "node-1-2", "form": "x dy - 2y dx", "curves": ["x", "y"], "generalized_curve": True, "second_type": True},
    {"name": "node-1-3", "form": "x dy - 3y dx", "curves": ["x", "y"], "generalized_curve": True, "second_type": True},
    {"name": "node-2-3", "form": "2x dy - 3y dx", "curves": ["x", "y", "y^2 - x^3"], "generalized_curve": True, "second_type": True},
    {"name": "node-2-5", "form": "2x dy - 5y dx", "curves": ["x", "y"], "generalized_curve": True, "second_type": True},
    {"name": "saddle-1-2", "form": "x dy + 2y dx", "curves": ["x", "y"], "generalized_curve": True, "second_type": True},
    {"name": "resonant-saddle", "form": "y dx + (x + x^2) dy", "curves": ["y"], "generalized_curve": True, "second_type": True},

    # Saddle-nodes (ζ x^k - k) y dx + x^(k+1) dy with ζ = 0
    {"name": "saddle-node-k1", "form": "-y dx + x^2 dy", "curves": ["y", "x"], "generalized_curve": False, "second_type": True},
    {"name": "saddle-node-k2", "form": "-2y dx + x^3 dy", "curves": ["y", "x"], "generalized_curve": False, "second_type": True},
    {"name": "saddle-node-k3", "form": "-3y dx + x^4 dy", "curves": ["y", "x"], "generalized_curve": False, "second_type": True},
    {"name": "saddle-node-k4", "form": "-4y dx + x^5 dy", "curves": ["y", "x"], "generalized_curve": False, "second_type": True},
    {"name": "euler", "form": "(x - y) dx + x^2 dy", "curves": ["x"], "generalized_curve": False, "second_type": True},

    # Blow-downs of saddle-nodes whose weak separatrix is the exceptional line
    {"name": "tangent-saddle-node-k1", "form": "-y^2 dx + (x^2 + x*y) dy", "curves": ["x", "y"], "generalized_curve": False, "second_type": False},
    {"name": "tangent-saddle-node-k2", "form": "-y^3 dx + (x^3 + x*y^2) dy", "curves": ["x"], "generalized_curve": False, "second_type": False},
    {"name": "tangent-saddle-node-k3", "form": "-y^4 dx + (x^4 + x*y^3) dy", "curves": ["x"], "generalized_curve": False, "second_type": False},

    # Degenerate linear parts
    {"name": "poincare-dulac", "form": "x dy - (2y + x^2) dx", "curves": ["x"], "generalized_curve": False, "second_type": False},
    {"name": "nilpotent", "form": "4x^3 dx + (2y + 4x^2) dy", "curves": [], "generalized_curve": False, "second_type": False},
]

# ============================================================================
# PROJECTIVE FOLIATIONS (chart z = 1)
# ============================================================================

FOLIATIONS: List[Dict] = [
    {"name": "pencil-1-2", "form": "y dx - 2x dy", "curves": ["x - y^2"], "degree": 1},
    {"name": "pencil-2-3", "form": "2y dx - 3x dy", "curves": ["x^2 - y^3"], "degree": 1},
    {"name": "pencil-2-5", "form": "2y dx - 5x dy", "curves": ["x^2 - y^5"], "degree": 1},
    {"name": "pencil-3-5", "form": "3y dx - 5x dy", "curves": ["x^3 - y^5"], "degree": 1},
    {"name": "radial-plane", "form": "x dy - y dx", "curves": ["x"], "degree": 0},
    {"name": "conic-log", "form": "(1 - y^2) dx + x*y dy", "curves": ["x^2 + y^2 - 1"], "degree": 1},
    {"name": "lins-neto", "form": "-y*(y^3 - 1) dx + x*(x^3 - 1) dy", "curves": [], "degree": 4},
]

for _entry in GERMS:
    _entry["kind"] = "germ"
for _entry in FOLIATIONS:
    _entry["kind"] = "foliation"

# Create lookup dictionary for O(1) access
ENTRY_BY_NAME: Dict[str, Dict] = {entry["name"]: entry for entry in GERMS + FOLIATIONS}


def get_entry(name: str) -> Dict:
    """
    Look up a catalogue entry by name.

    Raises:
        InvalidInput: If no entry has that name
    """
    try:
        key = normalize_name(name)
    except ValueError:
        key = ""
    entry = ENTRY_BY_NAME.get(key)
    if entry is None:
        raise InvalidInput(f"unknown example {name!r}", details={"known": sorted(ENTRY_BY_NAME)})
    return entry


def find_entry(name: str) -> Optional[Dict]:
    try:
        return get_entry(name)
    except InvalidInput:
        return None


def get_all_entries(kind: Optional[str] = None) -> List[Dict]:
    entries = GERMS + FOLIATIONS
    return [dict(e) for e in entries if kind is None or e["kind"] == kind]
