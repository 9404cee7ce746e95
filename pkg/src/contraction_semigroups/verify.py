"""Formula-versus-oracle verification suite and its text report.

Each :class:`CheckSpec` owns a parameter grid (plain data) and an evaluator
that maps one grid point to ``(formula value, oracle value)``, optionally with
an explicit verdict for checks where equal numbers are not the whole story
(set equality, for instance).
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import formulas as fm
from . import guards
from .dual import theta, theta_inverse
from .enumerators import (
    count_with_image,
    enumerate_direct,
    enumerate_filtered,
    member_codes,
    odci_profile_table,
)
from .kernels import FAMILY_CODES, get_backend
from .pmap import (
    FamilyId,
    compose,
    gap_of_domain,
    gap_of_image,
    in_family,
    is_contraction,
    is_contraction_via_gaps,
    is_order_decreasing,
    is_order_preserving,
    stat_profile,
)

SCHEMA_VERSION = "1"
KINDS = ("formula_vs_oracle", "identity", "sequence_prefix", "bijection", "closure", "convexity")
STATUSES = ("pass", "fail", "documented_mismatch")

ORCI_M1_EXPLANATION = (
    "published ORCI F(n;p,1) for 1<p assumes reversing maps with one fixed point are as many "
    "as preserving ones and subtracts n height-1 identities that cannot occur at p>=2; "
    "enumeration disagrees, e.g. (n,p)=(3,2): formula 1, oracle 4"
)
ODCI_PROFILE_NOTE = (
    "odci profile product evaluated as printed is valid for p>=2 only; at p=1 binom(-1,-1)=0 "
    "under the zero convention while one map exists per (k,k,l), k<=l"
)

Point = Tuple
PROFILE_MAX_N = 12


@dataclass(frozen=True)
class CheckSpec:
    id: str
    kind: str
    grid: Tuple[Point, ...]
    evaluate: Callable[..., tuple]
    relation: str = "equal"
    explanation: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown check kind {self.kind!r}")
        if self.relation not in ("equal", "documented_mismatch"):
            raise ValueError(f"unknown relation {self.relation!r}")
        if not self.grid:
            raise ValueError(f"check {self.id} has an empty grid")
        if self.relation == "documented_mismatch" and not self.explanation:
            raise ValueError(f"check {self.id} needs an explanation for its documented mismatch")


@dataclass(frozen=True)
class Record:
    check_id: str
    point: Point
    formula: int
    oracle: int
    status: str
    seconds: float = field(default=0.0, compare=False)


@dataclass
class VerificationReport:
    records: List[Record] = field(default_factory=list)
    params: Dict[str, int] = field(default_factory=dict)
    explanations: Dict[str, str] = field(default_factory=dict)
    notes: Dict[str, str] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)

    def summary(self) -> Dict[str, int]:
        out = {s: 0 for s in STATUSES}
        for r in self.records:
            out[r.status] += 1
        out["records"] = len(self.records)
        out["checks"] = len({r.check_id for r in self.records})
        return out

    @property
    def failures(self) -> List[Record]:
        return [r for r in self.records if r.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def by_check(self, check_id: str) -> List[Record]:
        return [r for r in self.records if r.check_id == check_id]

    def extend(self, other: "VerificationReport") -> None:
        self.records.extend(other.records)
        self.explanations.update(other.explanations)
        self.notes.update(other.notes)
        self.timings.update(other.timings)

    def to_text(self, timing: bool = False) -> str:
        s = self.summary()
        lines = [
            "# contraction-semigroups verification report",
            f"# schema: {SCHEMA_VERSION}",
            "# params: " + " ".join(f"{k}={v}" for k, v in sorted(self.params.items())),
            "# summary: "
            + " ".join(f"{k}={s[k]}" for k in ("checks", "records", *STATUSES)),
        ]
        for cid, text in sorted(self.explanations.items()):
            lines.append(f"# documented {cid}: {text}")
        for cid, text in sorted(self.notes.items()):
            lines.append(f"# note {cid}: {text}")
        if timing:
            for cid, sec in self.timings.items():
                lines.append(f"# time {cid}: {sec:.6f}")
        lines.append("check\tpoint\tformula\toracle\tstatus" + ("\tseconds" if timing else ""))
        for r in self.records:
            row = [r.check_id, format_point(r.point), str(r.formula), str(r.oracle), r.status]
            if timing:
                row.append(f"{r.seconds:.6f}")
            lines.append("\t".join(row))
        return "\n".join(lines) + "\n"


def format_point(point: Point) -> str:
    return "(" + ",".join(str(x) for x in point) + ")"


def _parse_point(text: str) -> Point:
    inner = text.strip()[1:-1]
    if not inner:
        return ()
    out = []
    for tok in inner.split(","):
        try:
            out.append(int(tok))
        except ValueError:
            out.append(tok)
    return tuple(out)


def parse_report(text: str) -> VerificationReport:
    report = VerificationReport()
    header_seen = False
    version = None
    for line in text.splitlines():
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("schema:"):
                version = body.split(":", 1)[1].strip()
            elif body.startswith("params:"):
                for tok in body.split(":", 1)[1].split():
                    k, v = tok.split("=")
                    report.params[k] = int(v)
            elif body.startswith("documented "):
                cid, text_ = body[len("documented ") :].split(": ", 1)
                report.explanations[cid] = text_
            elif body.startswith("note "):
                cid, text_ = body[len("note ") :].split(": ", 1)
                report.notes[cid] = text_
            elif body.startswith("time "):
                cid, sec = body[len("time ") :].split(": ", 1)
                report.timings[cid] = float(sec)
            continue
        if not header_seen:
            header_seen = True
            continue
        cols = line.split("\t")
        seconds = float(cols[5]) if len(cols) > 5 else 0.0
        report.records.append(
            Record(cols[0], _parse_point(cols[1]), int(cols[2]), int(cols[3]), cols[4], seconds)
        )
    if version != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {version!r}")
    return report


def run_check(check: CheckSpec) -> VerificationReport:
    report = VerificationReport()
    start = time.perf_counter()
    for point in check.grid:
        t0 = time.perf_counter()
        out = check.evaluate(*point)
        formula, oracle = int(out[0]), int(out[1])
        agree = out[2] if len(out) > 2 else formula == oracle
        if agree:
            status = "pass"
        elif check.relation == "documented_mismatch":
            status = "documented_mismatch"
        else:
            status = "fail"
        report.records.append(
            Record(check.id, tuple(point), formula, oracle, status, time.perf_counter() - t0)
        )
    report.timings[check.id] = time.perf_counter() - start
    if check.relation == "documented_mismatch":
        report.explanations[check.id] = check.explanation
    return report


# sequences ------------------------------------------------------------------


@dataclass(frozen=True)
class SequenceEntry:
    name: str
    prefix: Tuple[int, ...]
    recurrence: Tuple[int, ...]  # a_n = sum(c_i * a_{n-1-i})
    anchor: str
    evaluators: Tuple[Tuple[str, Callable[[int], int]], ...]

    def terms(self, count: int) -> List[int]:
        out = list(self.prefix[:count])
        k = len(self.recurrence)
        while len(out) < count:
            out.append(sum(c * out[-1 - i] for i, c in enumerate(self.recurrence)))
        return out


SEQUENCES: Dict[str, SequenceEntry] = {
    "A094864": SequenceEntry(
        "A094864",
        (1, 2, 6, 18),
        (6, -11, 6, -1),
        "order of OCI_n; h_0..h_3 = 1, 2, 6, 18 with the 4-term recurrence",
        (("order_oci", fm.order_oci),),
    ),
    "A001519": SequenceEntry(
        "A001519",
        (1, 2, 5, 13, 34, 89),
        (3, -1),
        "odd-index Fibonacci F_{2n+1}; a_0 = 1, a_1 = 2, a_n = 3a_{n-1} - a_{n-2}",
        (("order_odci", fm.order_odci), ("fib_identity_odd", fm.fib_identity_odd)),
    ),
    "A001906": SequenceEntry(
        "A001906",
        (0, 1, 3, 8, 21, 55),
        (3, -1),
        "even-index Fibonacci F_{2n}; a_0 = 0, a_1 = 1, a_n = 3a_{n-1} - a_{n-2}",
        (("fib_identity_even", fm.fib_identity_even), ("fibonacci_2n", lambda n: fm.fibonacci(2 * n))),
    ),
}


def sequence_check(name: str, n_max: int) -> CheckSpec:
    try:
        entry = SEQUENCES[name]
    except KeyError:
        raise ValueError(f"unknown sequence {name!r}; known: {sorted(SEQUENCES)}") from None
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    terms = entry.terms(n_max + 1)
    funcs = dict(entry.evaluators)
    grid = tuple((ev, n) for ev, _ in entry.evaluators for n in range(n_max + 1))
    return CheckSpec(
        f"seq-{name}",
        "sequence_prefix",
        grid,
        lambda ev, n: (funcs[ev](n), terms[n]),
    )


def check_sequence(name: str, n_max: int) -> VerificationReport:
    return run_check(sequence_check(name, n_max))


# oracle caches --------------------------------------------------------------


@lru_cache(maxsize=None)
def _direct_table(n: int, family: str):
    kern = get_backend()
    code = FAMILY_CODES[family]
    return sum(kern.direct_counts(n, lo, code) for lo in range(n + 1))


@lru_cache(maxsize=None)
def _filtered_table(n: int):
    kern = get_backend()
    return sum(kern.filtered_counts(n, lo) for lo in range(n + 1))


@lru_cache(maxsize=None)
def _members(n: int, family: str):
    if family in ("i", "ci"):
        return tuple(enumerate_filtered(n, family, allow_large=True))
    return tuple(enumerate_direct(n, family, allow_large=True))


@lru_cache(maxsize=None)
def _image_counts(n: int):
    out = {}
    for p in range(1, n + 1):
        for img in itertools.combinations(range(1, n + 1), p):
            out[img] = count_with_image(n, img)
    return out


def _direct(n, family, p=None, m=None):
    t = _direct_table(n, family)
    if p is None:
        return int(t.sum())
    if m is None:
        return int(t[p].sum())
    return int(t[p, m])


def _filtered(n, family, p=None, m=None):
    t = _filtered_table(n)[FAMILY_CODES[family]]
    if p is None:
        return int(t.sum())
    if m is None:
        return int(t[p].sum())
    return int(t[p, m])


# evaluators ------------------------------------------------------------------


def _fix_formula(family):
    return {
        "oci": fm.oci_height_fix_count,
        "odci": fm.odci_height_fix_count,
        "orci": fm.orci_height_fix_count,
    }[family]


def _order_formula(family):
    return {
        "oci": fm.order_oci,
        "oci-plus": fm.order_oci,
        "odci": fm.order_odci,
        "orci": fm.order_orci,
    }[family]


def _height_formula(family, n, p):
    if p == 0:
        return 1
    return {
        "oci": fm.oci_height_count,
        "oci-plus": fm.oci_height_count,
        "odci": fm.odci_height_count,
        "orci": fm.orci_height_count,
    }[family](n, p)


def _set_equality(n, family):
    direct = member_codes(n, family, method="direct")
    filtered = member_codes(n, family, method="filtered")
    same = len(direct) == len(filtered) and bool((direct == filtered).all())
    return len(direct), len(filtered), same


def _stream_equality(n, family):
    a = list(enumerate_direct(n, family))
    b = list(enumerate_filtered(n, family))
    return len(a), len(b), a == b


def _contraction_equivalence(n):
    kern = get_backend()
    parts = [kern.contraction_agreement(n, lo) for lo in range(n + 1)]
    total = sum(p[0] for p in parts)
    agree = sum(p[1] for p in parts)
    return agree, total


def _contraction_equivalence_objects(n):
    maps = _members(n, "i")
    agree = sum(1 for a in maps if is_contraction(a) == is_contraction_via_gaps(a))
    return agree, len(maps)


def _odci_characterisation(n):
    odci = set(_members(n, "odci"))
    maps = _members(n, "i")
    agree = 0
    for a in maps:
        lhs = is_order_decreasing(a) and is_order_preserving(a) and is_contraction(a)
        agree += lhs == (a in odci) == in_family(a, FamilyId.ODCI)
    return agree, len(maps)


def _stat_consistency(n):
    maps = _members(n, "i")
    ok = 0
    for a in maps:
        s = stat_profile(a)
        good = s.fix <= s.height
        if a.pairs:
            good = good and s.waist_min == min(a.image) and s.waist_max == max(a.image)
            good = good and s.shoulder_min == min(a.domain) and s.shoulder_max == max(a.domain)
        if s.fix:
            good = good and s.fix_min <= s.fix_max and s.below + s.fix + s.above <= s.height
        ok += good
    return ok, len(maps)


def _closure(family, n, pairs, seed):
    members = _members(n, family)
    rng = random.Random(f"{seed}-{family}-{n}")
    hits = 0
    for _ in range(pairs):
        a, b = rng.choice(members), rng.choice(members)
        hits += in_family(compose(a, b), family)
    return hits, pairs


def _associativity(n, triples, seed):
    members = _members(n, "i")
    rng = random.Random(f"{seed}-assoc-{n}")
    hits = 0
    for _ in range(triples):
        a, b, c = (rng.choice(members) for _ in range(3))
        hits += compose(compose(a, b), c) == compose(a, compose(b, c))
    return hits, triples


def _convexity(n):
    ok = 0
    maps = _members(n, "oci")
    for a in maps:
        s = stat_profile(a)
        if s.fix:
            ok += all(y == x for x, y in a.pairs if s.fix_min <= x <= s.fix_max)
        else:
            ok += 1
    return ok, len(maps)


def _theta_property(n, prop):
    oci = _members(n, "oci")
    if prop == "into":
        return sum(in_family(theta(a), FamilyId.OCIplus) for a in oci), len(oci)
    if prop == "injective":
        return len({theta(a) for a in oci}), len(oci)
    if prop == "surjective":
        return len({theta(a) for a in oci}), len(set(_members(n, "oci-plus")))
    if prop == "roundtrip":
        return sum(theta_inverse(theta(a)) == a for a in oci), len(oci)
    if prop == "gap_laws":
        tall = [a for a in oci if a.height >= 2]
        ok = 0
        for a in tall:
            b = theta(a)
            ok += gap_of_domain(b) == gap_of_domain(a)[::-1] and gap_of_image(b) == tuple(
                -x for x in gap_of_image(a)[::-1]
            )
        return ok, len(tall)
    if prop == "invariants":
        ok = 0
        for a in oci:
            b = theta(a)
            sa, sb = stat_profile(a), stat_profile(b)
            ok += (
                sa.height == sb.height
                and sa.shoulder_min == sb.shoulder_min
                and sum(gap_of_domain(a)) == sum(gap_of_domain(b))
            )
        return ok, len(oci)
    raise ValueError(prop)


def _same_image(n, *image):
    q = image[-1] - image[0]
    return fm.oci_image_class_count(n, len(image), q), _image_counts(n)[image]


def _gap_sum_class(n, p, q):
    counts = [c for img, c in _image_counts(n).items() if len(img) == p and img[-1] - img[0] == q]
    return len([c for c in counts if c == counts[0]]), len(counts)


def _odci_profile(n, km, kp, lp, p):
    return fm.odci_profile_count(n, km, kp, lp, p), odci_profile_table(n).get(km, kp, lp, p)


def _odci_profile_fix(n, km, kp, lp, m, p):
    return (
        fm.odci_profile_fix_count(n, km, kp, lp, m, p),
        odci_profile_table(n, with_fix=True).get(km, kp, lp, m, p),
    )


def _compositions(kind, n, p):
    rng = range(1, n + 1) if kind == "positive" else range(0, n + 1)
    brute = sum(1 for parts in itertools.product(rng, repeat=p) if sum(parts) == n)
    fn = fm.compositions_positive if kind == "positive" else fm.compositions_nonneg
    return fn(n, p), brute


def _varvander(r, s, t):
    lhs = sum(fm.binom(r - i, s) * fm.binom(i + t, t) for i in range(r - s + 1))
    return lhs, fm.binom(r + t + 1, s + t + 1)


def _summing(n, r):
    return sum(fm.binom(j, r) for j in range(r, n + 1)), fm.binom(n + 1, r + 1)


def _vandermonde(m, n, r):
    return sum(fm.binom(m, k) * fm.binom(n, r - k) for k in range(r + 1)), fm.binom(m + n, r)


def _evenodd_sum(kind, n):
    if kind == "odd":
        return fm.fib_identity_odd(n), fm.fibonacci(2 * n + 1)
    return fm.fib_identity_even(n), fm.fibonacci(2 * n)


def _evenodd_recurrence(kind, n):
    f = fm.fib_identity_odd if kind == "odd" else fm.fib_identity_even
    return f(n), 3 * f(n - 1) - f(n - 2)


# registry --------------------------------------------------------------------


def _heights(n_range, p_lo=1):
    return tuple((n, p) for n in n_range for p in range(p_lo, n + 1))


def _height_fix(n_range, p_lo=0):
    return tuple((n, p, m) for n in n_range for p in range(p_lo, n + 1) for m in range(p + 1))


def _profiles(n_range, with_fix):
    out = []
    for n in n_range:
        for km, kp, lp in itertools.combinations_with_replacement(range(1, n + 1), 3):
            for p in range(2, n + 1):
                if with_fix:
                    out.extend((n, km, kp, lp, m, p) for m in range(p))
                else:
                    out.append((n, km, kp, lp, p))
    return tuple(out)


def build_checks(
    max_n_filtered: int, max_n_direct: int, samples: int = 500, seed: int = 0
) -> List[CheckSpec]:
    nf = range(1, max_n_filtered + 1)
    nd = range(1, max_n_direct + 1)
    n_small = range(1, min(max_n_filtered, 6) + 1)
    n_image = range(1, min(max_n_direct, 10) + 1)
    n_profile = range(1, min(max_n_direct, PROFILE_MAX_N) + 1)
    n_closure = range(min(4, max_n_filtered), min(6, max_n_filtered) + 1)
    ordered = ("oci", "oci-plus", "orci", "odci")
    fixable = ("oci", "orci", "odci")
    big = range(0, 201)

    checks = [sequence_check(name, max_n_direct) for name in SEQUENCES]
    checks += [
        # closed forms against direct enumeration
        CheckSpec("oci-height", "formula_vs_oracle", _heights(nd),
                  lambda n, p: (fm.oci_height_count(n, p), _direct(n, "oci", p))),
        CheckSpec("oci-height-fix", "formula_vs_oracle", _height_fix(nd),
                  lambda n, p, m: (fm.oci_height_fix_count(n, p, m), _direct(n, "oci", p, m))),
        CheckSpec("odci-height", "formula_vs_oracle", _heights(nd, 0),
                  lambda n, p: (fm.odci_height_count(n, p), _direct(n, "odci", p))),
        CheckSpec("odci-height-fix", "formula_vs_oracle", _height_fix(nd),
                  lambda n, p, m: (fm.odci_height_fix_count(n, p, m), _direct(n, "odci", p, m))),
        CheckSpec("orci-height", "formula_vs_oracle", _heights(nd),
                  lambda n, p: (fm.orci_height_count(n, p), _direct(n, "orci", p))),
        CheckSpec("orci-height-fix", "formula_vs_oracle", _height_fix(nd),
                  lambda n, p, m: (fm.orci_height_fix_count(n, p, m), _direct(n, "orci", p, m))),
        CheckSpec("orci-height-fix-printed", "formula_vs_oracle",
                  tuple((n, p, 1) for n in nd for p in range(2, n + 1)),
                  lambda n, p, m: (fm.orci_height_fix_count_printed(n, p, m),
                                   _direct(n, "orci", p, m)),
                  relation="documented_mismatch", explanation=ORCI_M1_EXPLANATION),
        CheckSpec("order-vs-direct", "formula_vs_oracle",
                  tuple((f, n) for f in ordered for n in nd),
                  lambda f, n: (_order_formula(f)(n), _direct(n, f))),
        CheckSpec("same-image", "formula_vs_oracle",
                  tuple((n, *img) for n in n_image for p in range(1, n + 1)
                        for img in itertools.combinations(range(1, n + 1), p)),
                  _same_image),
        CheckSpec("gap-sum-classes", "formula_vs_oracle",
                  tuple((n, p, q) for n in n_image for p in range(1, n + 1)
                        for q in range(p - 1, n)),
                  _gap_sum_class),
        CheckSpec("odci-profile", "formula_vs_oracle", _profiles(n_profile, False), _odci_profile),
        CheckSpec("odci-profile-fix", "formula_vs_oracle", _profiles(n_profile, True),
                  _odci_profile_fix),
        CheckSpec("bijection-cardinality", "bijection", tuple((n,) for n in nd),
                  lambda n: (_direct(n, "oci"), _direct(n, "oci-plus"))),
        CheckSpec("orci-union-overlap", "bijection", tuple((n,) for n in nd),
                  lambda n: (_direct(n, "oci") + _direct(n, "oci-plus") - (1 + n * n),
                             _direct(n, "orci"))),
        # filtered oracle over all of I_n
        CheckSpec("enumerators-set-equality", "formula_vs_oracle",
                  tuple((n, f) for n in nf for f in ordered), _set_equality),
        CheckSpec("enumerators-stream-equality", "formula_vs_oracle",
                  tuple((n, f) for n in n_small for f in ordered), _stream_equality),
        CheckSpec("fix-vs-filtered", "formula_vs_oracle",
                  tuple((f, n, p, m) for f in fixable for n in nf
                        for p in range(n + 1) for m in range(p + 1)),
                  lambda f, n, p, m: (_fix_formula(f)(n, p, m), _filtered(n, f, p, m))),
        CheckSpec("height-vs-filtered", "formula_vs_oracle",
                  tuple((f, n, p) for f in ordered for n in nf for p in range(n + 1)),
                  lambda f, n, p: (_height_formula(f, n, p), _filtered(n, f, p))),
        CheckSpec("order-vs-filtered", "formula_vs_oracle",
                  tuple((f, n) for f in ordered for n in nf),
                  lambda f, n: (_order_formula(f)(n), _filtered(n, f))),
        CheckSpec("contraction-equivalence", "identity", tuple((n,) for n in nf),
                  _contraction_equivalence),
        CheckSpec("contraction-equivalence-objects", "identity", tuple((n,) for n in n_small),
                  _contraction_equivalence_objects),
        CheckSpec("odci-characterisation", "identity", tuple((n,) for n in n_small),
                  _odci_characterisation),
        CheckSpec("stat-profile-consistency", "identity", tuple((n,) for n in n_small),
                  _stat_consistency),
        CheckSpec("closure", "closure",
                  tuple((f, n) for f in ("ci", "oci", "orci", "odci") for n in n_closure),
                  lambda f, n: _closure(f, n, samples, seed)),
        CheckSpec("associativity", "closure", tuple((n,) for n in n_closure),
                  lambda n: _associativity(n, samples, seed)),
        CheckSpec("fixed-point-convexity", "convexity", tuple((n,) for n in nf), _convexity),
        CheckSpec("theta", "bijection",
                  tuple((n, prop) for n in nf for prop in
                        ("into", "injective", "surjective", "roundtrip", "gap_laws",
                         "invariants")),
                  _theta_property),
        # identities over exact integers
        CheckSpec("compositions", "identity",
                  tuple((k, n, p) for k in ("positive", "nonneg") for n in range(0, 9)
                        for p in range(1, 5)),
                  _compositions),
        CheckSpec("varvander", "identity",
                  tuple((r, s, t) for r in range(1, 31) for s in range(r) for t in range(11)),
                  _varvander),
        CheckSpec("summing", "identity",
                  tuple((n, r) for n in range(41) for r in range(n + 1)), _summing),
        CheckSpec("vandermonde", "identity",
                  tuple((m, n, r) for m in range(26) for n in range(26) for r in range(26)),
                  _vandermonde),
        CheckSpec("evenodd-fib", "identity",
                  tuple((k, n) for k in ("odd", "even") for n in big), _evenodd_sum),
        CheckSpec("evenodd-recurrence", "identity",
                  tuple((k, n) for k in ("odd", "even") for n in range(2, 51)),
                  _evenodd_recurrence),
        CheckSpec("order-oci-methods", "identity",
                  tuple((meth, n) for meth in ("recurrence", "summation") for n in big),
                  lambda meth, n: (fm.order_oci(n, meth), fm.order_oci(n, "closed"))),
        CheckSpec("order-orci-relation", "identity", tuple((n,) for n in big),
                  lambda n: (fm.order_orci(n), 2 * fm.order_oci(n) - 1 - n * n)),
        CheckSpec("order-orci-summation", "identity", tuple((n,) for n in big),
                  lambda n: (fm.order_orci(n), 1 + n * n + sum(
                      fm.orci_height_count(n, p) for p in range(2, n + 1)))),
        CheckSpec("order-odci-fib", "identity", tuple((n,) for n in big),
                  lambda n: (fm.order_odci(n), fm.fib_identity_odd(n))),
        CheckSpec("oci-fix-rowsum", "identity", _heights(range(1, 31)),
                  lambda n, p: (sum(fm.oci_height_fix_count(n, p, m) for m in range(p + 1)),
                                fm.oci_height_count(n, p))),
        CheckSpec("odci-fix-rowsum", "identity", _heights(range(1, 31)),
                  lambda n, p: (sum(fm.odci_height_fix_count(n, p, m) for m in range(p + 1)),
                                fm.odci_height_count(n, p))),
    ]
    seen = set()
    for c in checks:
        if c.id in seen:
            raise ValueError(f"duplicate check id {c.id}")
        seen.add(c.id)
    return checks


def _odci_profile_validity(max_n: int) -> str:
    """Scan p=1 cells; report the observed domain of validity of the profile product."""
    wrong = 0
    cells = 0
    for n in range(1, max_n + 1):
        table = odci_profile_table(n)
        for km, kp, lp in itertools.combinations_with_replacement(range(1, n + 1), 3):
            cells += 1
            wrong += fm.odci_profile_count(n, km, kp, lp, 1) != table.get(km, kp, lp, 1)
    return f"{ODCI_PROFILE_NOTE}; p=1 cells disagreeing: {wrong}/{cells} for n<={max_n}"


def validate_params(max_n_filtered: int, max_n_direct: int) -> None:
    if not 2 <= max_n_filtered <= guards.FILTERED_MAX_N:
        raise ValueError(f"max_n_filtered must be in [2, {guards.FILTERED_MAX_N}]")
    if not max_n_filtered <= max_n_direct <= guards.DIRECT_MAX_N:
        raise ValueError(f"max_n_direct must be in [max_n_filtered, {guards.DIRECT_MAX_N}]")
    guards.check_filtered(max_n_filtered)
    guards.check_direct(max_n_direct)


def run_suite(
    max_n_filtered: int,
    max_n_direct: int,
    samples: int = 500,
    seed: int = 0,
    only: Optional[Sequence[str]] = None,
) -> VerificationReport:
    validate_params(max_n_filtered, max_n_direct)
    report = VerificationReport(
        params={"max_n_filtered": max_n_filtered, "max_n_direct": max_n_direct,
                "samples": samples, "seed": seed}
    )
    for check in build_checks(max_n_filtered, max_n_direct, samples, seed):
        if only is not None and check.id not in only:
            continue
        report.extend(run_check(check))
    report.notes["odci-profile"] = _odci_profile_validity(min(max_n_direct, PROFILE_MAX_N))
    return report
