"""Regenerates data/knots.json and the Alexander polynomial fixture from KnotInfo.

Requires the database_knotinfo package. The trefoil keeps a fixed hand-written
PD code so that fixtures referring to it stay stable.
"""

import json
import pathlib

import sympy
from database_knotinfo import link_list

ROOT = pathlib.Path(__file__).resolve().parent.parent
EXTRA = ["9_35", "9_40", "9_46", "10_103"]
TREFOIL_PD = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]


def wanted(entry):
    try:
        crossings = int(entry["crossing_number"])
    except (TypeError, ValueError):
        return False
    return crossings <= 8 or entry["name"] in EXTRA


def ascending(text):
    t = sympy.Symbol("t")
    poly = sympy.Poly(sympy.sympify(text.replace("^", "**")), t)
    return [int(c) for c in reversed(poly.all_coeffs())]


def main():
    knots, alexander = [], {}
    for entry in link_list()[1:]:
        if not wanted(entry):
            continue
        name = entry["name"]
        pd = TREFOIL_PD if name == "3_1" else json.loads(entry["pd_notation"] or "[]")
        knots.append({"name": name, "pd": pd})
        alexander[name] = ascending(entry["alexander_polynomial"])
    (ROOT / "data" / "knots.json").write_text(
        json.dumps({"knots": knots}, separators=(",", ":")).replace("{\"name\"", "\n{\"name\"") + "\n"
    )
    (ROOT / "tests" / "data" / "knotinfo_alexander.json").write_text(json.dumps(alexander, indent=1) + "\n")
    print(f"wrote {len(knots)} knots")


if __name__ == "__main__":
    main()
