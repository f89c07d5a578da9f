"""
Regenera tests/fixtures/mtf_counts.json pelo oráculo de força bruta.

Uso, na raiz do projeto:

    PYTHONPATH=. python tests/regenerate_fixtures.py
"""
import json
from pathlib import Path

from oracles import brute_force_mtf_forms

COMMAND = "PYTHONPATH=. python tests/regenerate_fixtures.py"
MAX_N = 7


def main() -> None:
    counts = {
        str(n): len(brute_force_mtf_forms(n)) for n in range(1, MAX_N + 1)
    }
    target = Path(__file__).parent / "fixtures" / "mtf_counts.json"
    target.write_text(
        json.dumps({"command": COMMAND, "counts": counts}, indent=2) + "\n"
    )


if __name__ == "__main__":
    main()
