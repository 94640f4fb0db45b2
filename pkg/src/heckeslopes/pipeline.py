"""End-to-end eigenform analysis: records in, reports and guarantees out.

Input is a JSON list of form records::

    [{"label": "...", "d": 1, "field_poly": [0, 1], "level_norm": 11,
      "weight": [2], "hecke_poly": [0, 1], "cm": false,
      "k_f_circ": 1,                      // optional
      "assumptions": ["RST"],             // optional: SST | RST | tST(n)
      "galois_gens": ["(0 1)(2 3)"],      // optional, with galois_degree
      "galois_degree": 4,
      "interact": {"deg_K": 2, "deg_F": 1, ...},   // optional
      "ap": [{"p": 2, "split_in_F": true, "a": ["-2"]}, ...]}]

with rationals written as strings ("3", "-1/2").  ``analyze_form``
classifies each listed prime: skipped (not split in the base field,
ramified in the Hecke field, or carrying an index warning), degenerate
(a_p = 0 lies in every prime, defect = full degree), or analyzed with
its ordinariness defect k(p), Newton/Hodge polygons, Weil bound check
and the large-prime half bound.  For monic Hecke polynomials the
ramified and index-warning flags coincide, and ramified is tested
first, so skipped_index does not occur for such input; it remains a
distinct status for the report contract.

``guarantee`` classifies what the record's metadata alone proves about
defects and ordinary density, choosing the strongest applicable case
(smallest defect bound; ties prefer the better density class, then
unconditional cases).  Empirical densities in summaries are plain
ratios over analyzed primes and estimate natural density only as the
prime bound grows; report output carries that caveat verbatim.
"""

from __future__ import annotations

import json
import re
import urllib.request
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Union

from concurrent.futures import ThreadPoolExecutor

from .galois import (
    FACT_SLOPE_ZERO_OVER_F,
    FACT_SLOPE_ZERO_OVER_F_TILDE,
    FieldInteraction,
    Permutation,
    PermutationGroup,
    interact_rules,
)
from .numberfield import (
    embeddings,
    half_bound_check,
    is_prime,
    k_of_p,
    splitting_type,
    weil_bound_check,
)
from .polygon import SlopeMultiset, frobenius_polygon, hodge_polygon

__all__ = [
    "SchemaError",
    "DataError",
    "ApEntry",
    "FormRecord",
    "PrimeReport",
    "FormSummary",
    "FormAnalysis",
    "Guarantee",
    "load_forms",
    "records_from_obj",
    "fetch_forms",
    "analyze_form",
    "guarantee",
    "emit_report",
    "vertices_payload",
]


class SchemaError(ValueError):
    """Malformed input record; the message names the record and field."""


class DataError(ValueError):
    """Well-formed but internally inconsistent data."""


STATUS_ANALYZED = "analyzed"
STATUS_SKIPPED_NONSPLIT = "skipped_nonsplit"
STATUS_SKIPPED_RAMIFIED = "skipped_ramified"
STATUS_SKIPPED_INDEX = "skipped_index"
STATUS_DEGENERATE_AP_ZERO = "degenerate_ap_zero"

CASE_CM = "CM_ordinary"
CASE_SMALL_FIELD = "SmallFrobeniusField"
CASE_ZERO_SLOPE = "ZeroSlope"
CASE_SLOPE_BOUND = "SlopeBound"
CASE_RST = "RSTBound"
CASE_BISECTION = "BisectionRST"
CASE_HALF = "HalfBoundOnly"
CASE_WEIGHT3 = "Weight3Bound"

DENSITY_PRINCIPAL = "principally_abundant"
DENSITY_ABUNDANT = "abundant"
DENSITY_CONDITIONAL = "conditional_abundant"
DENSITY_NONE = "none"

_DENSITY_RANK = {
    DENSITY_PRINCIPAL: 3,
    DENSITY_ABUNDANT: 2,
    DENSITY_CONDITIONAL: 1,
    DENSITY_NONE: 0,
}

DENSITY_CAVEAT = (
    "empirical density is the ratio over the analyzed primes only; it "
    "estimates the natural density of ordinary primes only as the prime "
    "bound grows"
)

ASSUMPTION_SST = "SST"
ASSUMPTION_RST = "RST"
_TST_RE = re.compile(r"^tST\((\d+)\)$")


@dataclass(frozen=True)
class ApEntry:
    p: int
    split_in_F: bool
    a: tuple[Fraction, ...]


@dataclass(frozen=True)
class FormRecord:
    """One eigenform worth of data plus the optional metadata that the
    guarantee classifier can exploit.  ``k_f`` is the Hecke field
    degree, ``k_f_circ`` the degree of its self-twist-invariant
    subfield when known (never inferred)."""

    label: str
    d: int
    field_poly: tuple[int, ...]
    level_norm: int
    weight: tuple[int, ...]
    hecke_poly: tuple[int, ...]
    cm: bool
    k_f_circ: Optional[int] = None
    d_tilde: Optional[int] = None
    assumptions: frozenset[str] = frozenset()
    galois_action: Optional[PermutationGroup] = None
    interact: Optional[FieldInteraction] = None
    eigenvalues: tuple[ApEntry, ...] = ()

    @property
    def k_f(self) -> int:
        return len(self.hecke_poly) - 1

    @property
    def motivic_weight(self) -> int:
        return self.weight[0]


@dataclass(frozen=True)
class PrimeReport:
    """Outcome for one listed prime.  Skipped rows leave the numeric
    fields at ``None``."""

    p: int
    status: str
    k_p: Optional[int] = None
    newton: Optional[SlopeMultiset] = None
    hodge: Optional[SlopeMultiset] = None
    ordinary: Optional[bool] = None
    weil_ok: Optional[bool] = None
    half_bound: Optional[str] = None


@dataclass(frozen=True)
class FormSummary:
    n_primes: int
    n_analyzed: int
    n_ordinary: int
    ordinary_density: Optional[Fraction]
    exceptional_primes: tuple[int, ...]
    kp_counts: tuple[tuple[int, int], ...]
    prime_bound: Optional[int]


@dataclass(frozen=True)
class FormAnalysis:
    record: FormRecord
    reports: tuple[PrimeReport, ...]
    summary: FormSummary


@dataclass(frozen=True)
class Guarantee:
    """What the metadata alone proves: a bound on the defect k(p) valid
    for all sufficiently large analyzed primes, and the density class
    of the ordinary locus it implies."""

    case: str
    bound_on_kp: Fraction
    density_class: str
    conditional_on: frozenset[str] = frozenset()


# ---------------------------------------------------------------------
# loading and validation

_REQUIRED_KEYS = {
    "label",
    "d",
    "field_poly",
    "level_norm",
    "weight",
    "hecke_poly",
    "cm",
    "ap",
}
_OPTIONAL_KEYS = {
    "k_f_circ",
    "d_tilde",
    "assumptions",
    "galois_gens",
    "galois_degree",
    "interact",
}
_INTERACT_KEYS = {
    "deg_K",
    "deg_F",
    "deg_F_tilde",
    "galois_group_kind",
    "disc_K",
    "disc_F",
}


def _fail(label: str, field: str, problem: str) -> None:
    raise SchemaError(f"record {label!r}, field {field!r}: {problem}")


def _int_list(label, field, value, length=None):
    if not isinstance(value, list) or not all(
        isinstance(c, int) and not isinstance(c, bool) for c in value
    ):
        _fail(label, field, "must be a list of integers")
    if length is not None and len(value) != length:
        _fail(label, field, f"expected length {length}, got {len(value)}")
    return tuple(value)


def _monic_poly(label, field, value, degree=None):
    coeffs = _int_list(label, field, value)
    if len(coeffs) < 2 or coeffs[-1] != 1:
        _fail(label, field, "must be a monic polynomial of degree >= 1 (ascending coefficients)")
    if degree is not None and len(coeffs) - 1 != degree:
        _fail(label, field, f"degree {len(coeffs) - 1} does not match d={degree}")
    return coeffs


def _positive_int(label, field, value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        _fail(label, field, "must be a positive integer")
    return value


def record_from_dict(obj: dict, position: int = 0) -> FormRecord:
    if not isinstance(obj, dict):
        raise SchemaError(f"record #{position}: not a JSON object")
    label = obj.get("label")
    if not isinstance(label, str) or not label:
        raise SchemaError(f"record #{position}: missing or empty 'label'")

    keys = set(obj)
    missing = _REQUIRED_KEYS - keys
    if missing:
        _fail(label, sorted(missing)[0], "required key missing")
    unknown = keys - _REQUIRED_KEYS - _OPTIONAL_KEYS
    if unknown:
        _fail(label, sorted(unknown)[0], "unknown key")

    d = _positive_int(label, "d", obj["d"])
    field_poly = _monic_poly(label, "field_poly", obj["field_poly"], degree=d)
    level_norm = _positive_int(label, "level_norm", obj["level_norm"])

    weight = obj["weight"]
    if (
        not isinstance(weight, list)
        or not weight
        or not all(isinstance(w, int) and not isinstance(w, bool) for w in weight)
    ):
        _fail(label, "weight", "must be a nonempty list of integers")
    if len(set(weight)) != 1 or weight[0] not in (2, 3):
        _fail(label, "weight", "entries must all equal 2 or all equal 3")
    weight = tuple(weight)

    hecke_poly = _monic_poly(label, "hecke_poly", obj["hecke_poly"])
    k_f = len(hecke_poly) - 1

    cm = obj["cm"]
    if not isinstance(cm, bool):
        _fail(label, "cm", "must be a boolean")

    k_f_circ = None
    if "k_f_circ" in obj:
        k_f_circ = _positive_int(label, "k_f_circ", obj["k_f_circ"])
        if k_f % k_f_circ != 0:
            _fail(label, "k_f_circ", f"must divide the Hecke degree {k_f}")

    d_tilde = None
    if "d_tilde" in obj:
        d_tilde = _positive_int(label, "d_tilde", obj["d_tilde"])

    assumptions = frozenset()
    if "assumptions" in obj:
        raw = obj["assumptions"]
        if not isinstance(raw, list) or not all(isinstance(s, str) for s in raw):
            _fail(label, "assumptions", "must be a list of strings")
        for s in raw:
            if s not in (ASSUMPTION_SST, ASSUMPTION_RST) and not _TST_RE.match(s):
                _fail(label, "assumptions", f"unknown assumption {s!r}")
            m = _TST_RE.match(s)
            if m and int(m.group(1)) < 1:
                _fail(label, "assumptions", f"tST index must be >= 1 in {s!r}")
        assumptions = frozenset(raw)

    galois_action = None
    if ("galois_gens" in obj) != ("galois_degree" in obj):
        _fail(label, "galois_gens", "galois_gens and galois_degree go together")
    if "galois_gens" in obj:
        degree = _positive_int(label, "galois_degree", obj["galois_degree"])
        gens_raw = obj["galois_gens"]
        if not isinstance(gens_raw, list) or not all(isinstance(s, str) for s in gens_raw):
            _fail(label, "galois_gens", "must be a list of permutation strings")
        try:
            gens = [Permutation.parse(s, degree) for s in gens_raw]
        except ValueError as exc:
            _fail(label, "galois_gens", str(exc))
        galois_action = PermutationGroup(degree, gens)

    interact = None
    if "interact" in obj:
        raw = obj["interact"]
        if not isinstance(raw, dict):
            _fail(label, "interact", "must be an object")
        unknown = set(raw) - _INTERACT_KEYS
        if unknown:
            _fail(label, f"interact.{sorted(unknown)[0]}", "unknown key")
        for key in _INTERACT_KEYS - {"galois_group_kind"}:
            if key in raw and (
                not isinstance(raw[key], int) or isinstance(raw[key], bool)
            ):
                _fail(label, f"interact.{key}", "must be an integer")
        if "galois_group_kind" in raw and not isinstance(raw["galois_group_kind"], str):
            _fail(label, "interact.galois_group_kind", "must be a string")
        try:
            interact = FieldInteraction(**raw)
        except ValueError as exc:
            _fail(label, "interact", str(exc))

    ap_raw = obj["ap"]
    if not isinstance(ap_raw, list):
        _fail(label, "ap", "must be a list")
    entries = []
    seen_p = set()
    for j, item in enumerate(ap_raw):
        where = f"ap[{j}]"
        if not isinstance(item, dict) or set(item) != {"p", "split_in_F", "a"}:
            _fail(label, where, "must be an object with keys p, split_in_F, a")
        p = item["p"]
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            _fail(label, f"{where}.p", f"{p!r} is not a prime")
        if p in seen_p:
            _fail(label, f"{where}.p", f"duplicate prime {p}")
        seen_p.add(p)
        if not isinstance(item["split_in_F"], bool):
            _fail(label, f"{where}.split_in_F", "must be a boolean")
        a_raw = item["a"]
        if not isinstance(a_raw, list) or len(a_raw) != k_f:
            _fail(label, f"{where}.a", f"must be a list of {k_f} rationals")
        coords = []
        for c in a_raw:
            if isinstance(c, bool) or not isinstance(c, (str, int)):
                _fail(label, f"{where}.a", "entries must be rational strings or integers")
            try:
                coords.append(Fraction(c))
            except (ValueError, ZeroDivisionError):
                _fail(label, f"{where}.a", f"bad rational {c!r}")
        entries.append(ApEntry(p=p, split_in_F=item["split_in_F"], a=tuple(coords)))

    return FormRecord(
        label=label,
        d=d,
        field_poly=field_poly,
        level_norm=level_norm,
        weight=weight,
        hecke_poly=hecke_poly,
        cm=cm,
        k_f_circ=k_f_circ,
        d_tilde=d_tilde,
        assumptions=assumptions,
        galois_action=galois_action,
        interact=interact,
        eigenvalues=tuple(entries),
    )


def records_from_obj(obj) -> list[FormRecord]:
    """Validate an already-parsed JSON value (must be a list of record
    objects)."""
    if not isinstance(obj, list):
        raise SchemaError("top level must be a JSON list of form records")
    return [record_from_dict(item, position=i) for i, item in enumerate(obj)]


def load_forms(source: Union[str, Path]) -> list[FormRecord]:
    """Load and validate form records from a JSON file (path or
    file-like object)."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    return records_from_obj(obj)


def fetch_forms(url: str, dest: Union[str, Path], timeout: float = 30.0) -> list[FormRecord]:
    """Optional thin retriever: download a JSON record list, validate
    it, and write the raw bytes to ``dest``.  All regular workflows
    read local files; this exists for mirroring endpoint data only."""
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        raw = resp.read()
    try:
        records = records_from_obj(json.loads(raw.decode("utf-8")))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SchemaError(f"endpoint did not return valid JSON: {exc}") from exc
    Path(dest).write_bytes(raw)
    return records


# ---------------------------------------------------------------------
# per-prime analysis

def _check_split_claim(rec: FormRecord, p: int, seed: int) -> None:
    split = splitting_type(rec.field_poly, p, seed=seed)
    if split.ramified:
        # ramified presentation: the factor shapes cannot certify the
        # claim either way, and the analysis never uses field_poly
        return
    if len(split.factors) != rec.d or any(deg != 1 for deg in split.residue_degrees):
        raise DataError(
            f"record {rec.label!r}: p={p} is flagged split_in_F but the base "
            "field polynomial does not split into distinct linear factors mod p"
        )


def _analyze_entry(rec: FormRecord, entry: ApEntry, seed: int, cross_check: bool) -> PrimeReport:
    p = entry.p
    if not entry.split_in_F:
        return PrimeReport(p=p, status=STATUS_SKIPPED_NONSPLIT)
    if cross_check:
        _check_split_claim(rec, p, seed)
    split = splitting_type(rec.hecke_poly, p, seed=seed)
    if split.ramified:
        return PrimeReport(p=p, status=STATUS_SKIPPED_RAMIFIED)
    if split.index_warning:
        return PrimeReport(p=p, status=STATUS_SKIPPED_INDEX)

    w = rec.motivic_weight
    k_f = rec.k_f
    hodge = hodge_polygon(rec.d, k_f, w)
    roots = _embedding_cache(rec)
    weil_ok = weil_bound_check(entry.a, rec.hecke_poly, p, weight=w, roots=roots)

    defect = k_of_p(entry.a, rec.hecke_poly, p, seed=seed)
    newton = frobenius_polygon(rec.d, k_f, defect.k, w)
    assert hodge.leq_strict(newton), "Hodge polygon must lie on or below Newton"
    if defect.all_primes:
        return PrimeReport(
            p=p,
            status=STATUS_DEGENERATE_AP_ZERO,
            k_p=defect.k,
            newton=newton,
            hodge=hodge,
            ordinary=False,
            weil_ok=weil_ok,
            # the product-formula argument behind the half bound needs
            # a_p != 0, so it is never applicable here
            half_bound="not_applicable",
        )
    return PrimeReport(
        p=p,
        status=STATUS_ANALYZED,
        k_p=defect.k,
        newton=newton,
        hodge=hodge,
        ordinary=defect.k == 0,
        weil_ok=weil_ok,
        half_bound=half_bound_check(defect.k, k_f, p),
    )


_EMBEDDING_CACHE: dict[tuple[int, ...], tuple[complex, ...]] = {}


def _embedding_cache(rec: FormRecord) -> tuple[complex, ...]:
    key = rec.hecke_poly
    if key not in _EMBEDDING_CACHE:
        _EMBEDDING_CACHE[key] = embeddings(key)
    return _EMBEDDING_CACHE[key]


def analyze_form(
    rec: FormRecord,
    seed: int = 0,
    threads: int = 1,
    cross_check: bool = True,
) -> FormAnalysis:
    """Classify every listed prime of one record and summarize.

    Deterministic for a given (record, seed); ``threads`` only
    parallelizes the per-prime work (order-stable merge).  Degenerate
    a_p = 0 primes count as analyzed-and-not-ordinary in the summary;
    their own rows keep the ``degenerate_ap_zero`` status.
    """
    if threads < 1:
        raise ValueError("threads must be >= 1")
    entries = rec.eigenvalues
    if threads > 1 and len(entries) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = tuple(
                pool.map(lambda e: _analyze_entry(rec, e, seed, cross_check), entries)
            )
    else:
        reports = tuple(_analyze_entry(rec, e, seed, cross_check) for e in entries)

    counted = [r for r in reports if r.status in (STATUS_ANALYZED, STATUS_DEGENERATE_AP_ZERO)]
    n_analyzed = len(counted)
    ordinary = [r for r in counted if r.ordinary]
    exceptional = tuple(sorted(r.p for r in counted if not r.ordinary))
    hist: dict[int, int] = {}
    for r in counted:
        hist[r.k_p] = hist.get(r.k_p, 0) + 1
    summary = FormSummary(
        n_primes=len(reports),
        n_analyzed=n_analyzed,
        n_ordinary=len(ordinary),
        ordinary_density=(
            Fraction(len(ordinary), n_analyzed) if n_analyzed else None
        ),
        exceptional_primes=exceptional,
        kp_counts=tuple(sorted(hist.items())),
        prime_bound=max((r.p for r in counted), default=None),
    )
    return FormAnalysis(record=rec, reports=reports, summary=summary)


# ---------------------------------------------------------------------
# metadata classifier

def _sato_tate_assumptions(assumptions: frozenset[str]):
    has_sst = ASSUMPTION_SST in assumptions
    has_rst = ASSUMPTION_RST in assumptions
    ts = sorted(
        int(m.group(1))
        for s in assumptions
        for m in [_TST_RE.match(s)]
        if m is not None
    )
    return has_sst, has_rst, ts


def guarantee(rec: FormRecord) -> Guarantee:
    """Strongest defect/density guarantee the metadata supports.

    Weight-2 candidates, in precedence order: CM forms are ordinary at
    every analyzed prime; a Hecke field of degree <= 2 over the
    invariant subfield forces defect 0; a known action slope sigma
    bounds the defect by k_f * min(1/2, sigma) off a zero-density set;
    under a Sato-Tate type equidistribution assumption the defect is
    at most (k_f/k_f°) * floor((k_f°-1)/2); with the full refined
    assumption, a bisecting element and even k_f° force defect 0; and
    unconditionally the defect is at most k_f/2 on a full-density set.
    Weight 3 replaces the non-CM cases by k_f - k_f/k_f°
    (principally) and k_f * min_orbit_slope (abundant).  Missing
    metadata just removes candidates — nothing is inferred.
    """
    k_f = rec.k_f
    cands: list[Guarantee] = []
    if rec.cm:
        cands.append(Guarantee(CASE_CM, Fraction(0), DENSITY_PRINCIPAL))

    facts = interact_rules(rec.interact) if rec.interact is not None else frozenset()
    zero_slope_fact = bool(
        {FACT_SLOPE_ZERO_OVER_F, FACT_SLOPE_ZERO_OVER_F_TILDE} & facts
    )
    has_sst, has_rst, ts = _sato_tate_assumptions(rec.assumptions)

    if rec.motivic_weight == 2:
        if rec.k_f_circ is not None and rec.k_f_circ <= 2:
            cands.append(Guarantee(CASE_SMALL_FIELD, Fraction(0), DENSITY_PRINCIPAL))

        sigma: Optional[Fraction] = None
        if rec.galois_action is not None:
            sigma = rec.galois_action.slope()
        if zero_slope_fact:
            sigma = Fraction(0)
        if sigma is not None:
            bound = k_f * min(Fraction(1, 2), sigma)
            case = CASE_ZERO_SLOPE if bound == 0 else CASE_SLOPE_BOUND
            cands.append(Guarantee(case, bound, DENSITY_ABUNDANT))

        if (has_sst or has_rst or ts) and rec.k_f_circ is not None:
            bound = Fraction(k_f, rec.k_f_circ) * ((rec.k_f_circ - 1) // 2)
            if ts:
                used = f"tST({ts[0]})"
            else:
                used = ASSUMPTION_RST if has_rst else ASSUMPTION_SST
            cands.append(
                Guarantee(CASE_RST, bound, DENSITY_CONDITIONAL, frozenset({used}))
            )

        if (
            (has_sst or has_rst)
            and rec.k_f_circ is not None
            and rec.k_f_circ % 2 == 0
            and rec.galois_action is not None
            and rec.galois_action.has_bisecting()
        ):
            used = ASSUMPTION_RST if has_rst else ASSUMPTION_SST
            cands.append(
                Guarantee(CASE_BISECTION, Fraction(0), DENSITY_CONDITIONAL, frozenset({used}))
            )

        cands.append(Guarantee(CASE_HALF, Fraction(k_f, 2), DENSITY_PRINCIPAL))
    else:
        if rec.k_f_circ is not None:
            cands.append(
                Guarantee(CASE_WEIGHT3, k_f - Fraction(k_f, rec.k_f_circ), DENSITY_PRINCIPAL)
            )
        sigma_min: Optional[Fraction] = None
        if rec.galois_action is not None:
            sigma_min = rec.galois_action.min_orbit_slope()
        if zero_slope_fact:
            # a zero full-orbit slope means some element is a full cycle,
            # which zeroes the min-orbit slope as well
            sigma_min = Fraction(0)
        if sigma_min is not None:
            cands.append(Guarantee(CASE_WEIGHT3, k_f * sigma_min, DENSITY_ABUNDANT))
        if not cands:
            cands.append(Guarantee(CASE_WEIGHT3, Fraction(k_f), DENSITY_NONE))

    best = min(
        enumerate(cands),
        key=lambda ic: (
            ic[1].bound_on_kp,
            -_DENSITY_RANK[ic[1].density_class],
            len(ic[1].conditional_on),
            ic[0],
        ),
    )
    return best[1]


# ---------------------------------------------------------------------
# report emission

def vertices_payload(ms: SlopeMultiset) -> list[list[str]]:
    """Polygon vertices as [x, y] rational-string pairs."""
    return [[str(x), str(y)] for x, y in ms.vertices()]


_TSV_COLUMNS = ("label", "p", "status", "k_p", "ordinary", "newton_vertices", "half_bound")


def _bool_str(b: Optional[bool]) -> str:
    return "" if b is None else ("true" if b else "false")


def emit_report(analyses: Sequence[FormAnalysis], fmt: str = "tsv") -> bytes:
    """Serialize analyses deterministically (rows sorted by label then
    prime) as TSV or JSON; output is byte-identical across runs."""
    if fmt == "tsv":
        lines = ["\t".join(_TSV_COLUMNS)]
        rows = sorted(
            ((an.record.label, rep) for an in analyses for rep in an.reports),
            key=lambda lr: (lr[0], lr[1].p),
        )
        for label, rep in rows:
            lines.append(
                "\t".join(
                    (
                        label,
                        str(rep.p),
                        rep.status,
                        "" if rep.k_p is None else str(rep.k_p),
                        _bool_str(rep.ordinary),
                        ""
                        if rep.newton is None
                        else json.dumps(vertices_payload(rep.newton), separators=(",", ":")),
                        rep.half_bound or "",
                    )
                )
            )
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "json":
        forms = []
        for an in sorted(analyses, key=lambda a: a.record.label):
            s = an.summary
            primes = []
            for rep in sorted(an.reports, key=lambda r: r.p):
                primes.append(
                    {
                        "p": rep.p,
                        "status": rep.status,
                        "k_p": rep.k_p,
                        "ordinary": rep.ordinary,
                        "weil_ok": rep.weil_ok,
                        "half_bound": rep.half_bound,
                        "newton_vertices": None
                        if rep.newton is None
                        else vertices_payload(rep.newton),
                        "hodge_vertices": None
                        if rep.hodge is None
                        else vertices_payload(rep.hodge),
                    }
                )
            forms.append(
                {
                    "label": an.record.label,
                    "summary": {
                        "n_primes": s.n_primes,
                        "n_analyzed": s.n_analyzed,
                        "n_ordinary": s.n_ordinary,
                        "ordinary_density": None
                        if s.ordinary_density is None
                        else str(s.ordinary_density),
                        "exceptional_primes": list(s.exceptional_primes),
                        "kp_histogram": {str(k): c for k, c in s.kp_counts},
                        "prime_bound": s.prime_bound,
                        "density_caveat": DENSITY_CAVEAT,
                    },
                    "primes": primes,
                }
            )
        return (json.dumps({"forms": forms}, indent=2, sort_keys=True) + "\n").encode("utf-8")
    raise ValueError(f"unknown report format: {fmt!r}")
