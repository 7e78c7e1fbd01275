"""Tabulating the open determinant problems.

No closed form is known for det J_q(k) beyond k = 1 and k = 2 (the latter
only over prime fields), nor for the character-binomial determinants.  The
explorer records exact values, factors them, re-checks the general mod-p
congruence, and annotates anything that matches a known pattern.  Values
are cached in an append-only JSONL file so long sweeps are resumable.
"""

import tempfile
from pathlib import Path

from jacobidet.explorer import (GREENE_EVEN, GREENE_FULL, explore_Jqk,
                                explore_greene, export_csv, match_closed_forms)


def compact(det_json):
    coeffs = det_json["num"]["coeffs"]
    terms = [c if t == 0 else f"{c}z^{t}" for t, c in enumerate(coeffs) if c != "0"]
    return f"({' + '.join(terms) if terms else '0'})/{det_json['den']}"


workdir = Path(tempfile.mkdtemp(prefix="jacobidet_demo_"))
cache = workdir / "cache.jsonl"

print("== det J_q(k) for every prime power q <= 17 and every k | q-1 ==")
records = explore_Jqk(range(3, 18), cache=cache)
for record, notes in match_closed_forms(records):
    fact = record["factorization"]
    fact_str = " * ".join(f"{p}^{e}" if e > 1 else p for p, e in fact.items()) or "-"
    print(f"  q={record['q']:3d} k={record['k']:3d} m={record['m']:3d}  "
          f"det = {record['det']:>20s}  [{fact_str}]  {', '.join(notes)}")

print("\nevery recorded value satisfies the general congruence:",
      all(r["congruence_ok"] for r in records))

print("\n== prime-power fields where the k=2 closed form has no analogue ==")
for record in records:
    if record["k"] == 2 and record["q"] == 9:
        print(f"  det J_9(2) = {record['det']} (no formula is claimed; data only)")

print("\n== character-binomial determinants ==")
for q in (3, 4, 5, 7, 8, 9, 11):
    record = explore_greene(q, GREENE_FULL, cache=cache)
    shape = "rational" if record["rational"] else "irrational"
    inv = "Galois-invariant" if record["galois_invariant"] else "NOT invariant"
    print(f"  q={q}: size {record['m']}, value {compact(record['det'])} ({shape}, {inv})")
for q in (5, 7, 9, 11):
    record = explore_greene(q, GREENE_EVEN, cache=cache)
    print(f"  q={q} even-character variant: size {record['m']}, "
          f"value {compact(record['det'])}")

csv_path = workdir / "table.csv"
export_csv(records, csv_path)
print(f"\nCSV table written to {csv_path}")
