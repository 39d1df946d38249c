"""The documented example commands, shared by golden and acceptance tests.

Each entry is (name, argv); names double as golden file names.  File
arguments use absolute paths so the table works from any directory, and no
command echoes its input path, so outputs stay path-independent.
"""

from pathlib import Path

_DATA = Path(__file__).parent / "data"
SPACE3 = str(_DATA / "space3.json")
GOLDEN_DIR = Path(__file__).parent / "goldens"


def blob(res) -> str:
    """Canonical on-disk form of a command result."""
    return f"exit: {res.exit_code}\n--- out ---\n{res.out}\n--- err ---\n{res.err}\n"

COMMANDS = [
    ("cf-expand", ["cf", "expand", "355/113"]),
    ("cf-eval", ["cf", "eval", "[3; 7, 16]"]),
    ("cf-convergents", ["cf", "convergents", "649/200"]),
    ("surd-expand-sqrt2", ["surd", "expand", "(0+1*sqrt(2))/1", "--depth", "10"]),
    ("surd-expand-golden-json", ["surd", "expand", "(1+1*sqrt(5))/2", "--depth", "10", "--json"]),
    ("baire-dist", ["baire", "dist", "(0,1,2,7)", "(0,1,5,7)", "--bound", "4"]),
    ("baire-dist-tails-json", ["baire", "dist", "(0)~(2,1)", "(0,2)~(1,2)", "--bound", "16", "--json"]),
    ("baire-ball", ["baire", "ball", "(3,1,4,1,5)", "1/3"]),
    ("baire-psi", ["baire", "psi", "(0,1,2)~(3)"]),
    ("baire-psi-inverse-json", ["baire", "psi", "(0,2,3)~(4)", "--inverse", "--json"]),
    ("cover-show", ["cover", "show", "[1; 2, 2]"]),
    ("cover-locate-json", ["cover", "locate", "(0+1*sqrt(2))/1", "--level", "3", "--json"]),
    ("cover-verify", ["cover", "verify", "--max-level", "3"]),
    ("homeo-fwd", ["homeo", "fwd", "(1)~(2)", "--depth", "8"]),
    ("homeo-inv-json", ["homeo", "inv", "(0+1*sqrt(3))/1", "--depth", "8", "--json"]),
    ("homeo-ball", ["homeo", "ball", "(1)~(2)", "--n", "3"]),
    ("ultra-build", ["ultra", "build", SPACE3, "--depth", "2"]),
    ("ultra-verify-json", ["ultra", "verify", SPACE3, "--json"]),
    ("ultra-base-eq", ["ultra", "base-eq", SPACE3, "--depth", "2"]),
    ("embed-json", ["embed", SPACE3, "--depth", "2", "--json"]),
]
