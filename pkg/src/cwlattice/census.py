"""Batch cross-verification of enumerations against closed forms.

For each n in a range the census enumerates the selected family of lattice
sets, evaluates the matching closed-form sizes, and checks the structural
facts (component disjointness, the sandwich envelope on the pair census,
and the containment/projection relations between the sets).  Failures are
recorded and the run continues, so one bad polynomial branch produces a
complete diagnostic map across residues instead of a single abort.

Reports serialize to CSV (one row per n; the diffable golden format) and
JSON, and parse back losslessly.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import formulas, sets
from .errors import DomainError
from .formulas import SIZE_BY_SET, sandwich_bounds_cwdd, size_cwdd
from .sets import NamedSet

FAMILY_SETS: dict[str, tuple[NamedSet, ...]] = {
    "cwdd": (NamedSet.CWDD_A, NamedSet.CWDD_B, NamedSet.CWDD_C, NamedSet.CWDD),
    "ra": (NamedSet.RA_A, NamedSet.RA_B, NamedSet.RA_C, NamedSet.RA_D, NamedSet.RA),
    "bounds": (NamedSet.C_MINUS, NamedSet.C_PLUS, NamedSet.BETA),
}
FAMILY_SETS["all"] = FAMILY_SETS["cwdd"] + FAMILY_SETS["ra"] + FAMILY_SETS["bounds"]

_BOOL_FIELDS = ("disjointness_ok", "sandwich_ok", "containment_ok")


@dataclass(frozen=True)
class CensusRecord:
    """Verification results for a single n.

    counts maps each set tag to (enumerated size, closed-form size); a
    (None, None) pair marks a set undefined at this n (only beta at n = 3).
    """

    n: int
    k: int
    i: int
    counts: dict[str, tuple[int | None, int | None]]
    disjointness_ok: bool
    sandwich_ok: bool
    containment_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.disjointness_ok
            and self.sandwich_ok
            and self.containment_ok
            and all(e == c for e, c in self.counts.values())
        )


@dataclass(frozen=True)
class CensusReport:
    family: str
    n_lo: int
    n_hi: int
    records: list[CensusRecord] = field(default_factory=list)

    @property
    def pass_count(self) -> int:
        return sum(1 for r in self.records if r.passed)

    @property
    def fail_count(self) -> int:
        return len(self.records) - self.pass_count

    @property
    def first_failure(self) -> int | None:
        return next((r.n for r in self.records if not r.passed), None)

    @property
    def all_pass(self) -> bool:
        return self.fail_count == 0

    # -- serialization ------------------------------------------------------

    def to_csv(self) -> str:
        tags = [s.value for s in FAMILY_SETS[self.family]]
        header = ["n", "k", "i"]
        for tag in tags:
            header += [f"{tag}_enum", f"{tag}_closed"]
        header += list(_BOOL_FIELDS)
        lines = [",".join(header)]
        for r in self.records:
            row = [str(r.n), str(r.k), str(r.i)]
            for tag in tags:
                enum_count, closed_count = r.counts[tag]
                row += ["" if enum_count is None else str(enum_count),
                        "" if closed_count is None else str(closed_count)]
            row += [_fmt_bool(getattr(r, b)) for b in _BOOL_FIELDS]
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "family": self.family,
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "records": [
                {
                    "n": r.n,
                    "k": r.k,
                    "i": r.i,
                    "counts": {tag: list(pair) for tag, pair in r.counts.items()},
                    "disjointness_ok": r.disjointness_ok,
                    "sandwich_ok": r.sandwich_ok,
                    "containment_ok": r.containment_ok,
                    "pass": r.passed,
                }
                for r in self.records
            ],
            "summary": {"pass": self.pass_count, "fail": self.fail_count},
            "first_failure": self.first_failure,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "CensusReport":
        lines = [ln for ln in text.splitlines() if ln]
        header = lines[0].split(",")
        tag_cols = header[3:-len(_BOOL_FIELDS)]
        tags = [c[: -len("_enum")] for c in tag_cols[0::2]]
        family = _family_for_tags(tags)
        records = []
        for line in lines[1:]:
            cells = line.split(",")
            n, k, i = int(cells[0]), int(cells[1]), int(cells[2])
            counts: dict[str, tuple[int | None, int | None]] = {}
            for idx, tag in enumerate(tags):
                enum_cell = cells[3 + 2 * idx]
                closed_cell = cells[4 + 2 * idx]
                counts[tag] = (
                    int(enum_cell) if enum_cell else None,
                    int(closed_cell) if closed_cell else None,
                )
            flags = [cell == "true" for cell in cells[-len(_BOOL_FIELDS):]]
            records.append(CensusRecord(n, k, i, counts, *flags))
        return cls(family=family, n_lo=records[0].n, n_hi=records[-1].n, records=records)

    @classmethod
    def from_json(cls, text: str) -> "CensusReport":
        payload = json.loads(text)
        records = [
            CensusRecord(
                n=r["n"],
                k=r["k"],
                i=r["i"],
                counts={
                    tag: (pair[0], pair[1]) for tag, pair in sorted(r["counts"].items(),
                         key=lambda kv: _TAG_ORDER[kv[0]])
                },
                disjointness_ok=r["disjointness_ok"],
                sandwich_ok=r["sandwich_ok"],
                containment_ok=r["containment_ok"],
            )
            for r in payload["records"]
        ]
        return cls(
            family=payload["family"],
            n_lo=payload["n_lo"],
            n_hi=payload["n_hi"],
            records=records,
        )


_TAG_ORDER = {s.value: idx for idx, s in enumerate(FAMILY_SETS["all"])}


def _fmt_bool(value: bool) -> str:
    return "true" if value else "false"


def _family_for_tags(tags: list[str]) -> str:
    for family, members in FAMILY_SETS.items():
        if tags == [s.value for s in members]:
            return family
    raise ValueError(f"column set {tags} matches no census family")


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DisjointnessReport:
    """Pairwise intersections among the census components at one n.

    Keys are component pairs like "ab".  Passes when the pair census
    overlap is exactly {(2, 2)} at n = 5 (components a and b) and empty
    everywhere else, and every tuple-census intersection is empty.
    """

    n: int
    cwdd_overlaps: dict[str, tuple[tuple[int, ...], ...]]
    ra_overlaps: dict[str, tuple[tuple[int, ...], ...]]

    @property
    def ok(self) -> bool:
        expected_ab = ((2, 2),) if self.n == 5 else ()
        if self.cwdd_overlaps["ab"] != expected_ab:
            return False
        if self.cwdd_overlaps["ac"] or self.cwdd_overlaps["bc"]:
            return False
        return not any(self.ra_overlaps.values())


def _pairwise_overlaps(parts: dict[str, set]) -> dict[str, tuple]:
    labels = sorted(parts)
    out = {}
    for x in range(len(labels)):
        for y in range(x + 1, len(labels)):
            key = labels[x] + labels[y]
            out[key] = tuple(sorted(parts[labels[x]] & parts[labels[y]]))
    return out


def check_disjointness(n: int) -> DisjointnessReport:
    """Report every pairwise component intersection at n (n >= 5)."""
    if n < 5:
        raise DomainError(f"disjointness checks need n >= 5, got {n}")
    cw = {
        "a": set(sets.enumerate_cwdd_a(n)),
        "b": set(sets.enumerate_cwdd_b(n)),
        "c": set(sets.enumerate_cwdd_c(n)),
    }
    ra = {
        "a": set(sets.enumerate_ra_a(n)),
        "b": set(sets.enumerate_ra_b(n)),
        "c": set(sets.enumerate_ra_c(n)),
        "d": set(sets.enumerate_ra_d(n)),
    }
    return DisjointnessReport(
        n=n,
        cwdd_overlaps=_pairwise_overlaps(cw),
        ra_overlaps=_pairwise_overlaps(ra),
    )


def check_cross_projection(n: int) -> bool:
    """Consistency between the tuple census and the pair census.

    Every tuple (a, r, d, h) with a >= 3 must project to a pair (a, d) in
    the pair census, and every depth-2 tuple must project into the pair
    census's depth-2 component.  Vacuously true below n = 5.
    """
    if n < 5:
        return True
    cw = set(sets.enumerate_cwdd(n))
    cw_a = set(sets.enumerate_cwdd_a(n))
    for tup in sets.enumerate_ra(n):
        if tup[0] >= 3 and (tup[0], tup[2]) not in cw:
            return False
    return all((tup[0], tup[2]) in cw_a for tup in sets.enumerate_ra_a(n))


# ---------------------------------------------------------------------------
# the census proper
# ---------------------------------------------------------------------------

def _compute_record(n: int, family: str) -> CensusRecord:
    key = formulas.residue_decompose(n)
    members = FAMILY_SETS[family]
    want_cwdd = family in ("cwdd", "all")
    want_ra = family in ("ra", "all")
    want_bounds = family in ("bounds", "all")

    cw_parts = {
        "a": set(sets.enumerate_cwdd_a(n)),
        "b": set(sets.enumerate_cwdd_b(n)),
        "c": set(sets.enumerate_cwdd_c(n)),
    }
    cw_union = cw_parts["a"] | cw_parts["b"] | cw_parts["c"]

    ra_parts = {}
    ra_union: set = set()
    if want_ra:
        ra_parts = {
            "a": set(sets.enumerate_ra_a(n)),
            "b": set(sets.enumerate_ra_b(n)),
            "c": set(sets.enumerate_ra_c(n)),
            "d": set(sets.enumerate_ra_d(n)),
        }
        ra_union = ra_parts["a"] | ra_parts["b"] | ra_parts["c"] | ra_parts["d"]

    cplus_set = set(sets.enumerate_c_plus(n)) if (want_bounds or want_cwdd) else set()
    cminus_set = set(sets.enumerate_c_minus(n)) if want_bounds else set()
    beta_set = set(sets.enumerate_beta(n)) if (want_bounds and n >= 4) else None

    enumerated: dict[NamedSet, int | None] = {
        NamedSet.CWDD_A: len(cw_parts["a"]),
        NamedSet.CWDD_B: len(cw_parts["b"]),
        NamedSet.CWDD_C: len(cw_parts["c"]),
        NamedSet.CWDD: len(cw_union),
    }
    if want_ra:
        enumerated.update({
            NamedSet.RA_A: len(ra_parts["a"]),
            NamedSet.RA_B: len(ra_parts["b"]),
            NamedSet.RA_C: len(ra_parts["c"]),
            NamedSet.RA_D: len(ra_parts["d"]),
            NamedSet.RA: len(ra_union),
        })
    if want_bounds:
        enumerated[NamedSet.C_PLUS] = len(cplus_set)
        enumerated[NamedSet.C_MINUS] = len(cminus_set)
        enumerated[NamedSet.BETA] = None if beta_set is None else len(beta_set)

    counts: dict[str, tuple[int | None, int | None]] = {}
    for member in members:
        if member is NamedSet.BETA and n < 4:
            counts[member.value] = (None, None)
            continue
        counts[member.value] = (enumerated[member], SIZE_BY_SET[member](n))

    # component overlaps: only {(2, 2)} in the pair census at n = 5 is allowed
    disjointness_ok = True
    if n >= 5:
        if want_cwdd:
            expected_ab = {(2, 2)} if n == 5 else set()
            disjointness_ok = (
                cw_parts["a"] & cw_parts["b"] == expected_ab
                and not cw_parts["a"] & cw_parts["c"]
                and not cw_parts["b"] & cw_parts["c"]
            )
        if want_ra and disjointness_ok:
            labels = ["a", "b", "c", "d"]
            disjointness_ok = not any(
                ra_parts[x] & ra_parts[y]
                for idx, x in enumerate(labels)
                for y in labels[idx + 1:]
            )

    # sandwich envelope on |cwdd| (defined for n > 5)
    sandwich_ok = True
    if n > 5 and (want_cwdd or want_bounds):
        lo, hi = sandwich_bounds_cwdd(n)
        sandwich_ok = lo <= size_cwdd(n) <= hi

    containment_ok = True
    if want_cwdd:
        containment_ok = cw_union <= cplus_set
    if want_ra and containment_ok and n >= 5:
        cw_a = cw_parts["a"]
        containment_ok = all(
            (tup[0], tup[2]) in cw_union for tup in ra_union if tup[0] >= 3
        ) and all((tup[0], tup[2]) in cw_a for tup in ra_parts["a"])
    if want_bounds and containment_ok:
        containment_ok = cminus_set <= cplus_set and (
            beta_set is None or beta_set <= cminus_set
        )

    return CensusRecord(
        n=n,
        k=key.k,
        i=key.i,
        counts=counts,
        disjointness_ok=disjointness_ok,
        sandwich_ok=sandwich_ok,
        containment_ok=containment_ok,
    )


def run_census(
    n_lo: int, n_hi: int, family: str = "all", workers: int | None = None
) -> CensusReport:
    """Cross-verify the family over n_lo..n_hi inclusive.

    Records for distinct n are independent; with workers > 1 they are
    computed in a thread pool but always emitted in ascending n order.
    """
    if family not in FAMILY_SETS:
        raise DomainError(f"unknown family {family!r}; choose from {sorted(FAMILY_SETS)}")
    if n_lo < 3:
        raise DomainError(f"census starts at n >= 3, got {n_lo}")
    if n_lo > n_hi:
        raise DomainError(f"empty range: {n_lo} > {n_hi}")
    ns = range(n_lo, n_hi + 1)
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda n: _compute_record(n, family), ns))
    else:
        records = [_compute_record(n, family) for n in ns]
    return CensusReport(family=family, n_lo=n_lo, n_hi=n_hi, records=records)
