"""Data-driven verification registry.

Every exact value this package publishes is recorded as a row in a
tab-separated manifest (id, kind, inputs, expected, citation) shipped with
the package, so new checks are data, not code. Each row is executed by
exactly one library operation; the citation column states the law being
checked in words.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fnmatch import fnmatch
from importlib import resources
from pathlib import Path
from typing import Iterable

from .errors import (CapHitError, FormwidthError, InfeasibleError,
                     RegistryError)
from .extremal import ExQuery, check_klazar_inequality, ex_bruteforce
from .formations import (Formation, binary_formation, build_alt_avoider,
                         build_es_avoider, build_two_letter_avoider, fw,
                         fw_witness, sign_patterns)
from .metrics import BinaryFormationSpec, binary_closed_forms, l_metric, r_metric
from .parsing import parse_formation, parse_word, render_word
from .words import alt, contains, is_r_sparse

KINDS = ("fw-equals", "fw-greater", "fw-witness-avoids", "metric-equals",
         "bounds-sandwich", "avoider-avoids", "ex-equals", "inequality-holds",
         "fw-explore")

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
REPORTED = "reported"

DEFAULT_MANIFEST = "verify_manifest.tsv"


@dataclass(frozen=True)
class TheoremCase:
    case_id: str
    kind: str
    inputs: dict[str, str]
    expected: str
    citation: str


@dataclass(frozen=True)
class CaseOutcome:
    case: TheoremCase
    status: str
    measured: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status in (PASS, REPORTED)


def _parse_inputs(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        key, _, value = part.partition("=")
        if not _:
            raise ValueError(f"input field {part!r} is not key=value")
        out[key.strip()] = value.strip()
    return out


def load_manifest(path: str | Path | None = None) -> list[TheoremCase]:
    """Load the packaged manifest, or the one at ``path``."""
    if path is None:
        text = (resources.files(__package__) / DEFAULT_MANIFEST).read_text()
    else:
        text = Path(path).read_text()
    cases = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        columns = line.split("\t")
        if len(columns) != 5:
            raise RegistryError(
                f"manifest line {lineno}: expected 5 tab-separated columns, "
                f"got {len(columns)}")
        case_id, kind, inputs, expected, citation = (c.strip() for c in columns)
        if kind not in KINDS:
            raise RegistryError(f"case {case_id}: unknown kind {kind!r}")
        try:
            parsed = _parse_inputs(inputs)
        except ValueError as exc:
            raise RegistryError(f"case {case_id}: {exc}") from None
        cases.append(TheoremCase(case_id, kind, parsed, expected, citation))
    ids = [c.case_id for c in cases]
    if len(set(ids)) != len(ids):
        dup = next(i for i in ids if ids.count(i) > 1)
        raise RegistryError(f"duplicate case id {dup!r}")
    return cases


def _case_word(case: TheoremCase):
    """A case's operand word: either a literal or a realized run spec."""
    if "word" in case.inputs:
        return parse_word(case.inputs["word"])
    if "c" in case.inputs and "e" in case.inputs:
        return _case_spec(case).realize()
    raise RegistryError(f"case {case.case_id}: needs word= or c=/e=")


def _case_spec(case: TheoremCase) -> BinaryFormationSpec:
    try:
        return BinaryFormationSpec(
            int(case.inputs["c"]),
            tuple(int(e) for e in case.inputs["e"].split(",")))
    except (KeyError, ValueError) as exc:
        raise RegistryError(f"case {case.case_id}: bad run spec: {exc}") from None


def _case_int(case: TheoremCase, key: str, default: int | None = None) -> int:
    if key not in case.inputs:
        if default is None:
            raise RegistryError(f"case {case.case_id}: missing input {key}=")
        return default
    try:
        return int(case.inputs[key])
    except ValueError:
        raise RegistryError(
            f"case {case.case_id}: input {key}={case.inputs[key]!r} "
            "is not an integer") from None


def _expected_int(case: TheoremCase) -> int:
    try:
        return int(case.expected)
    except ValueError:
        raise RegistryError(
            f"case {case.case_id}: expected value {case.expected!r} "
            "is not an integer") from None


def _verdict(case: TheoremCase, ok: bool, measured: str, detail: str = "") -> CaseOutcome:
    return CaseOutcome(case, PASS if ok else FAIL, measured, detail)


def _run_fw_equals(case: TheoremCase) -> CaseOutcome:
    word = _case_word(case)
    s_max = _case_int(case, "s-max", 16)
    measured = fw(word, s_max)
    if measured is None:
        return CaseOutcome(case, INCONCLUSIVE, f"not resolved within s-max {s_max}")
    return _verdict(case, measured == _expected_int(case), str(measured))


def _run_fw_greater(case: TheoremCase) -> CaseOutcome:
    word = _case_word(case)
    s = _case_int(case, "s")
    witness = fw_witness(word, s)
    ok = witness is not None and not contains(witness.word(), word)
    measured = f"width > {s}" if ok else f"width <= {s}"
    return _verdict(case, ok == (case.expected == "true"), measured)


def _run_fw_witness_avoids(case: TheoremCase) -> CaseOutcome:
    word = _case_word(case)
    s = _case_int(case, "s")
    witness = fw_witness(word, s)
    if witness is None:
        return _verdict(case, case.expected == "absent", "absent")
    if contains(witness.word(), word):
        return CaseOutcome(case, FAIL, "present-but-contains",
                           "claimed witness actually contains the word")
    return _verdict(case, case.expected == "present", "present")


def _run_metric_equals(case: TheoremCase) -> CaseOutcome:
    word = _case_word(case)
    metric = case.inputs.get("metric")
    if metric == "l":
        measured = l_metric(word)
    elif metric == "r":
        measured = r_metric(word)
    else:
        raise RegistryError(f"case {case.case_id}: metric= must be l or r")
    return _verdict(case, measured == _expected_int(case), str(measured))


def _run_bounds_sandwich(case: TheoremCase) -> CaseOutcome:
    spec = _case_spec(case)
    bounds = binary_closed_forms(spec)
    word = spec.realize()
    width = fw(word, _case_int(case, "s-max", 16))
    if width is None:
        return CaseOutcome(case, INCONCLUSIVE, "width not resolved")
    ok = (bounds.fw_lower <= width <= bounds.fw_upper
          and bounds.l_value == l_metric(word)
          and bounds.r_value == r_metric(word))
    measured = (f"l={bounds.l_value} r={bounds.r_value} width={width} "
                f"bracket=[{bounds.fw_lower},{bounds.fw_upper}]")
    return _verdict(case, ok == (case.expected == "true"), measured)


def _formation_avoids_all_binary(f: Formation, r: int, s: int) -> bool:
    word = f.word()
    return all(not contains(word, binary_formation(r, flags).word())
               for flags in sign_patterns(s))


def _run_avoider_avoids(case: TheoremCase) -> CaseOutcome:
    construction = case.inputs.get("construction")
    if construction == "es":
        r, s = _case_int(case, "r"), _case_int(case, "s")
        ok = _formation_avoids_all_binary(build_es_avoider(r, s), r, s)
        measured = f"avoids all binary ({r},{s})-formations" if ok else "contains one"
    elif construction == "alt":
        c, k = _case_int(case, "c"), _case_int(case, "k")
        avoider = build_alt_avoider(c, k - 1)
        ok = not contains(avoider.word(), alt(c, k))
        measured = "avoids" if ok else "contains"
    elif construction == "two-letter":
        word = _case_word(case)
        f = build_two_letter_avoider(word)
        prefix_rows = f.rows[:-1]
        if prefix_rows:
            prefix = Formation(prefix_rows)
            ok = not contains(prefix.word(), word)
        else:
            ok = True
        measured = "prefix avoids" if ok else "prefix contains"
    elif "formation" in case.inputs:
        f = parse_formation(case.inputs["formation"])
        word = _case_word(case)
        ok = not contains(f.word(), word)
        measured = "avoids" if ok else "contains"
    else:
        raise RegistryError(
            f"case {case.case_id}: needs construction= or formation=")
    return _verdict(case, ok == (case.expected == "true"), measured)


def _run_ex_equals(case: TheoremCase) -> CaseOutcome:
    pattern = _case_word(case)
    query = ExQuery(
        pattern,
        _case_int(case, "n"),
        _case_int(case, "sparsity"),
        length_cap=_case_int(case, "cap", 64),
        node_budget=_case_int(case, "budget", 10 ** 7),
    )
    result = ex_bruteforce(query)
    witness_ok = (len(result.witness) == result.max_length
                  and is_r_sparse(result.witness, query.sparsity)
                  and not contains(result.witness, pattern))
    if not witness_ok:
        return CaseOutcome(case, FAIL, str(result.max_length),
                           "witness failed independent revalidation")
    return _verdict(case, result.max_length == _expected_int(case),
                    str(result.max_length),
                    f"witness {render_word(result.witness) or '(empty)'}")


def _run_inequality_holds(case: TheoremCase) -> CaseOutcome:
    report = check_klazar_inequality(
        _case_word(case), _case_int(case, "c"), _case_int(case, "d"),
        _case_int(case, "n"))
    measured = (f"ex_d={report.ex_d} ex_c={report.ex_c} "
                f"ex_c({report.d - 1} letters)={report.ex_c_small}")
    return _verdict(case, report.passed == (case.expected == "true"), measured)


def _run_fw_explore(case: TheoremCase) -> CaseOutcome:
    word = _case_word(case)
    measured = fw(word, _case_int(case, "s-max", 16))
    if measured is None:
        return CaseOutcome(case, REPORTED, "not resolved",
                           f"conjectured {case.expected}")
    match = "matches" if str(measured) == case.expected else "differs from"
    return CaseOutcome(case, REPORTED, str(measured),
                       f"{match} conjectured {case.expected}")


_RUNNERS = {
    "fw-equals": _run_fw_equals,
    "fw-greater": _run_fw_greater,
    "fw-witness-avoids": _run_fw_witness_avoids,
    "metric-equals": _run_metric_equals,
    "bounds-sandwich": _run_bounds_sandwich,
    "avoider-avoids": _run_avoider_avoids,
    "ex-equals": _run_ex_equals,
    "inequality-holds": _run_inequality_holds,
    "fw-explore": _run_fw_explore,
}


def run_case(case: TheoremCase) -> CaseOutcome:
    """Execute one case. Budget-style refusals become inconclusive;
    malformed rows raise RegistryError naming the case."""
    runner = _RUNNERS.get(case.kind)
    if runner is None:
        raise RegistryError(f"case {case.case_id}: unknown kind {case.kind!r}")
    try:
        return runner(case)
    except (CapHitError, InfeasibleError) as exc:
        return CaseOutcome(case, INCONCLUSIVE, type(exc).__name__, str(exc))
    except RegistryError:
        raise
    except FormwidthError as exc:
        raise RegistryError(f"case {case.case_id}: {exc}") from exc


def run_verify(cases: Iterable[TheoremCase], id_filter: str | None = None,
               workers: int = 1) -> list[CaseOutcome]:
    """Run (optionally a glob-filtered subset of) the registry. Outcomes
    come back sorted by case id regardless of completion order."""
    selected = [c for c in cases if id_filter is None or fnmatch(c.case_id, id_filter)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_case, selected))
    else:
        outcomes = [run_case(c) for c in selected]
    return sorted(outcomes, key=lambda o: o.case.case_id)
