"""Sweeps for the open determinant problems, with a persistent append-only cache.

No closed form is known for det J_q(k) with general k, for det J_{p^l}(2)
with l >= 2, or for the character-binomial determinants; this module only
tabulates exact values.  Integer determinants are factored and re-checked
against the general mod-p congruence at record time; character-binomial
determinants are recorded as exact scaled cyclotomic integers together with
their rationality and Galois-invariance status.  A fixed pattern library
annotates values that happen to match a known closed form.
"""

from __future__ import annotations

import json
import os
from datetime import datetime, timezone
from pathlib import Path

from .characters import jacobi_sum
from .cyclotomic import galois_apply, get_ring, scaled
from .detengine import CycMatrix, det_bareiss
from .finite_field import field_for_order
from .primes import divisors, factorize, is_prime_trial, prime_power_split
from .theorems import build_Jqk, detJ2_closed_form

CACHE_ENV = "JACOBIDET_CACHE"
DEFAULT_CACHE = "jacobidet_cache.jsonl"

GREENE_FULL = "greene-full"
GREENE_EVEN = "greene-even"


def cache_path(explicit: str | Path | None = None) -> Path:
    if explicit is not None:
        return Path(explicit)
    return Path(os.environ.get(CACHE_ENV, DEFAULT_CACHE))


def _record_key(record: dict) -> tuple:
    return (record["q"], str(record["k"]))


def load_cache(path: Path) -> dict[tuple, dict]:
    cached: dict[tuple, dict] = {}
    if path.exists():
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    record = json.loads(line)
                    cached[_record_key(record)] = record
    return cached


def _append(path: Path, record: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(record, sort_keys=True) + "\n")


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat()


def _factor_strings(value: int) -> dict[str, int]:
    if value == 0 or abs(value) == 1:
        return {}
    return {str(p): e for p, e in sorted(factorize(value).items())}


def compute_Jqk_record(q: int, k: int) -> dict:
    """Exact det J_q(k) with factorization and the congruence re-check."""
    field = field_for_order(q)
    m = (q - 1) // k
    det = det_bareiss(build_Jqk(field, k)).as_int()
    if det is None:
        raise ArithmeticError(f"det J_{q}({k}) did not reduce to an integer")
    exponent = ((k + 1) * (m * m - m)) // 2
    congruence_ok = det % field.p == (-1) ** exponent % field.p
    return {
        "q": q,
        "k": k,
        "m": m,
        "det": str(det),
        "factorization": _factor_strings(det),
        "method": "bareiss",
        "congruence_ok": congruence_ok,
        "timestamp": _timestamp(),
    }


def explore_Jqk(q_range, k_filter=None, cache: str | Path | None = None) -> list[dict]:
    """det J_q(k) for every prime power q in q_range and divisor k of q-1.

    k_filter may be a container of k values or a predicate.  Cached entries
    are returned as recorded; per-case errors become error records and the
    sweep continues.
    """
    path = cache_path(cache)
    cached = load_cache(path)
    out = []
    for q in q_range:
        if prime_power_split(q) is None or q < 3:
            continue
        for k in divisors(q - 1):
            if k_filter is not None:
                allowed = k_filter(k) if callable(k_filter) else k in k_filter
                if not allowed:
                    continue
            key = (q, str(k))
            if key in cached:
                out.append(cached[key])
                continue
            try:
                record = compute_Jqk_record(q, k)
            except Exception as exc:  # per-case failure keeps the sweep alive
                record = {"q": q, "k": k, "m": (q - 1) // k, "error": str(exc),
                          "timestamp": _timestamp()}
            _append(path, record)
            cached[key] = record
            out.append(record)
    return out


def _greene_numerator(field, a: int, b: int):
    """chi^b(-1) * J(chi^a, chi^(-b)): the entry numerator over denominator q."""
    m = field.q - 1
    minus_one = field.neg(1)
    sign = get_ring(m).zeta(b * field.dlog[minus_one]).as_int() if minus_one else 1
    return jacobi_sum(field, a, -b) * sign


def greene_matrix(field, variant: str) -> CycMatrix:
    """Numerator matrix of the character-binomial determinant (denominator q
    per entry): [binom(chi^(i+j), chi^i)] full, or the even-character variant."""
    q = field.q
    ring = get_ring(q - 1)
    if variant == GREENE_FULL:
        size = q - 2
        entries = [_greene_numerator(field, i + j, i)
                   for i in range(1, size + 1) for j in range(1, size + 1)]
    elif variant == GREENE_EVEN:
        if q % 2 == 0 or q < 5:
            raise ValueError("even variant needs odd q >= 5")
        size = (q - 3) // 2
        entries = [_greene_numerator(field, 2 * i + 2 * j, 2 * i)
                   for i in range(1, size + 1) for j in range(1, size + 1)]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return CycMatrix(ring, size, size, tuple(entries))


def compute_greene_record(q: int, variant: str) -> dict:
    field = field_for_order(q)
    mat = greene_matrix(field, variant)
    det_num = det_bareiss(mat)
    value = scaled(det_num, q**mat.rows)
    invariant = all(galois_apply(r, det_num) == det_num
                    for r in get_ring(q - 1).units if r != 1)
    return {
        "q": q,
        "k": variant,
        "m": mat.rows,
        "det": value.to_json(),
        "rational": value.is_rational(),
        "galois_invariant": invariant,
        "method": "bareiss",
        "timestamp": _timestamp(),
    }


def explore_greene(q: int, variant: str, cache: str | Path | None = None) -> dict:
    """One character-binomial determinant record, cached like the sweeps."""
    if variant not in (GREENE_FULL, GREENE_EVEN):
        raise ValueError(f"unknown variant {variant!r}")
    if q < 3 or (variant == GREENE_EVEN and (q % 2 == 0 or q < 5)):
        raise ValueError(f"variant {variant} undefined for q={q}")
    path = cache_path(cache)
    cached = load_cache(path)
    key = (q, variant)
    if key in cached:
        return cached[key]
    record = compute_greene_record(q, variant)
    _append(path, record)
    return record


# ---------------------------------------------------------------------------
# closed-form annotation (purely descriptive)

_SMOOTH_BOUND = 50


def _power_exponent(value: int, base: int) -> int | None:
    """e >= 1 with base^e = value, if one exists."""
    if base < 2 or value < base:
        return None
    e = 0
    while value % base == 0 and value > 1:
        value //= base
        e += 1
    return e if value == 1 and e >= 1 else None


def annotate_record(record: dict) -> list[str]:
    """Matches of an integer determinant record against the pattern library."""
    if "error" in record or not isinstance(record["k"], int):
        return []
    det = int(record["det"])
    q, k, m = record["q"], record["k"], record["m"]
    notes = []
    if det == 0:
        return ["zero"]
    if abs(det) == 1:
        notes.append("unit")
    if k == 1 and det == (q - 1) ** (q - 3):
        notes.append("(q-1)^(q-3)")
    if k == 2 and is_prime_trial(q) and q >= 5 and det == detJ2_closed_form(q):
        notes.append("detJ2-closed-form")
    e = _power_exponent(abs(det), q - 1)
    if e is not None:
        notes.append(f"{'-' if det < 0 else ''}(q-1)^{e}")
    e = _power_exponent(abs(det), m)
    if e is not None:
        notes.append(f"{'-' if det < 0 else ''}m^{e}")
    if record["factorization"] and all(int(p) <= _SMOOTH_BOUND
                                       for p in record["factorization"]):
        notes.append(f"{_SMOOTH_BOUND}-smooth")
    return notes or ["no-match"]


def match_closed_forms(records: list[dict]) -> list[tuple[dict, list[str]]]:
    return [(record, annotate_record(record)) for record in records]


def export_csv(records: list[dict], path: str | Path) -> None:
    """Write the sweep table: q, k, m, det, factorization, congruence_ok."""
    import csv

    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["q", "k", "m", "det", "factorization", "congruence_ok"])
        for record in records:
            if "error" in record:
                writer.writerow([record["q"], record["k"], record.get("m", ""),
                                 f"error: {record['error']}", "", ""])
                continue
            det = record["det"]
            det_str = det if isinstance(det, str) else \
                f"{_cyc_compact(det['num'])} / {det['den']}"
            fact = " * ".join(f"{p}^{e}" if e > 1 else p
                              for p, e in record.get("factorization", {}).items())
            writer.writerow([record["q"], record["k"], record["m"], det_str, fact,
                             record.get("congruence_ok", "")])


def _cyc_compact(num_json: dict) -> str:
    coeffs = num_json["coeffs"]
    terms = []
    for t, c in enumerate(coeffs):
        if c != "0":
            terms.append(c if t == 0 else f"{c}*z^{t}")
    return "(" + (" + ".join(terms) if terms else "0") + ")"
