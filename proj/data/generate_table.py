#!/usr/bin/env python3
"""Regenerate knots_le10.txt from the KnotInfo database.

    pip install database_knotinfo
    python3 data/generate_table.py > data/knots_le10.txt

Each line carries the PD code plus the KnotInfo reference values (alternating
flag, signature, determinant, Jones polynomial) used as regression data.
"""

import csv
import json
import os
import re
import sys

import database_knotinfo

csv.field_size_limit(10**9)


def jones_terms(text):
    """KnotInfo polynomial text such as 't^(-2)-t^(-1)+ 1-t+ t^2' -> {exp: coeff}."""
    terms = {}
    text = text.replace(" ", "")
    for sign, coeff, var, exp in re.findall(r"([+-]?)(\d*)\*?(t?)(?:\^\(?(-?\d+)\)?)?", text):
        if not coeff and not var:
            continue
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if var else 0
        terms[e] = terms.get(e, 0) + c
    return {e: c for e, c in terms.items() if c}


def serialize(terms):
    out = []
    for i, e in enumerate(sorted(terms)):
        c = terms[e]
        if i == 0:
            out.append(f"{c}*t^{e}")
        else:
            out.append(("-" if c < 0 else "+") + f"{abs(c)}*t^{e}")
    return "".join(out)


def main():
    path = os.path.join(os.path.dirname(database_knotinfo.__file__), "csv_data", "knotinfo_data_complete.csv")
    with open(path, newline="") as fh:
        reader = csv.reader(fh, delimiter="|")
        header = next(reader)
        next(reader)  # human-readable column titles
        rows = [dict(zip(header, r)) for r in reader]

    print("# Prime knots through 10 crossings (PD codes and reference values from KnotInfo).")
    print("# name: PD code {alternating=Y|N signature=S determinant=D jones=...}")
    for row in rows:
        if not row["crossing_number"].isdigit():
            continue
        n = int(row["crossing_number"])
        if n < 3 or n > 10:
            continue
        pd = json.loads(row["pd_notation"])
        code = " ".join("X(%d,%d,%d,%d)" % tuple(x) for x in pd)
        jones = serialize(jones_terms(row["jones_polynomial"]))
        print(
            f"{row['name']}: {code} "
            f"{{alternating={row['alternating']} signature={row['signature']} "
            f"determinant={row['determinant']} jones={jones}}}"
        )


if __name__ == "__main__":
    sys.exit(main())
