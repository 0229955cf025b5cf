"""Job files and the end-to-end report: presentation + four sections -> classified image."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .bundle import Presentation, chern_of_cokernel, make_presentation
from .groebner import collect_stats, groebner_basis, minimal_generators
from .imageclass import (NotGenerating, _rng, classify, image_degree, implicitize,
                         map_degree, singular_locus)
from .binary import strip
from .parse import parse_poly
from .pencil import image_pencil, pencil_determinant, pencil_generic_rank, rank_strata
from .plucker import SectionQuadruple, generates_check, plucker_map
from .poly import GREVLEX, LEX, Ring

SCHEMA_VERSION = 1
ORDERS = {"grevlex": GREVLEX, "lex": LEX}


class JobError(ValueError):
    code = "INVALID_JOB"


@dataclass
class JobSpec:
    variables: tuple
    presentation: dict
    sections: list
    seed: int = 0
    order: str = "grevlex"

    @classmethod
    def from_dict(cls, data: dict) -> "JobSpec":
        if not isinstance(data, dict):
            raise JobError("job must be a JSON object")
        missing = [k for k in ("presentation", "sections") if k not in data]
        if missing:
            raise JobError(f"job is missing {', '.join(missing)}")
        variables = tuple(data.get("variables", ("x", "y", "z")))
        if len(variables) != 3 or len(set(variables)) != 3:
            raise JobError("variables must be three distinct names")
        pres = data["presentation"]
        if not isinstance(pres, dict) or sorted(pres) != ["A", "B", "Q"]:
            raise JobError("presentation must have exactly the keys A, B, Q")
        secs = data["sections"]
        if not isinstance(secs, list) or len(secs) != 4 or any(
                not isinstance(r, list) or len(r) != 5 for r in secs):
            raise JobError("sections must be four lists of five rationals")
        try:
            rows = [[Fraction(str(v)) for v in r] for r in secs]
        except (ValueError, ZeroDivisionError) as e:
            raise JobError(f"bad rational in sections: {e}") from None
        seed = data.get("seed", 0)
        if not isinstance(seed, int) or seed < 0:
            raise JobError("seed must be a non-negative integer")
        order = data.get("order", "grevlex")
        if order not in ORDERS:
            raise JobError(f"unknown order {order!r}")
        return cls(variables, dict(pres), rows, seed, order)

    @classmethod
    def load(cls, path) -> "JobSpec":
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as e:
            raise JobError(f"job file is not valid JSON: {e}") from None
        return cls.from_dict(data)

    def ring(self) -> Ring:
        return Ring(self.variables)

    def build(self) -> tuple[Presentation, SectionQuadruple]:
        R = self.ring()
        A, B, Q = (parse_poly(str(self.presentation[k]), R) for k in "ABQ")
        P = make_presentation(A, B, Q)
        S = SectionQuadruple.from_coefficients(self.sections, R)
        return P, S


def validate(job: JobSpec):
    """Raise the first validation failure; return the checked objects."""
    P, S = job.build()
    M = plucker_map(S, P)
    if not generates_check(M):
        raise NotGenerating("the sections do not generate the bundle at every point")
    return P, S, M


def _ideal_strings(polys) -> list[str]:
    return [str(p) for p in polys]


def build_report(job: JobSpec, timing: bool = False) -> dict:
    """Full pipeline as a JSON-ready dict; byte-stable for a fixed job unless ``timing``."""
    t0 = time.perf_counter()
    rng = _rng(job.seed)
    order = ORDERS[job.order]
    with collect_stats() as stats:
        P, S, M = validate(job)
        I = implicitize(list(M))
        case = classify(M, I)
        rep = {
            "schema_version": SCHEMA_VERSION,
            "seed": job.seed,
            "order": job.order,
            "presentation": {k: str(f) for k, f in zip("ABQ", P.forms())},
            "plucker_quadrics": M.strings(),
            "span_dim": case.span_dim,
            "case_tag": case.case_tag,
            "hyperplanes": _ideal_strings(case.hyperplanes),
            "extra_quadric": str(case.extra_quadric) if case.extra_quadric is not None else None,
            "image_ideal": _ideal_strings(minimal_generators(I)),
            "image_groebner": _ideal_strings(groebner_basis(I, order)),
        }
        deg = image_degree(I)
        rep["image_degree"] = deg
        rep["map_degree"] = map_degree(list(M), I, rng)
        if case.case_tag == "B":
            pen = image_pencil(I, case.hyperplanes)
            r = pencil_generic_rank(pen, rng)
            rep["pencil"] = {
                "generators": _ideal_strings(pen.basis_labels),
                "determinant_zero": not strip(pencil_determinant(pen)),
                "generic_rank": r,
                "strata": [s.describe() for s in rank_strata(pen, r)],
            }
        else:
            rep["pencil"] = None
        sl = singular_locus(I, rng)
        rep["singular_locus"] = {
            "kind": sl.kind,
            "witness": sl.witness,
            "dimension": sl.dimension if sl.kind != "empty" else -1,
            "degree": sl.degree,
            "linear_forms": _ideal_strings(sl.linear_forms),
            "ideal": _ideal_strings(groebner_basis(sl.ideal, order)),
        }
        c = chern_of_cokernel(*P.twists())
        rep["chern"] = {"c1": c.c1, "c2": c.c2}
    rep["gb_stats"] = stats.as_dict()
    if timing:
        rep["timing_seconds"] = round(time.perf_counter() - t0, 6)
    return rep


def report_json(rep: dict) -> str:
    return json.dumps(rep, indent=2, sort_keys=True) + "\n"


_CASE_TEXT = {
    "A": "case A: image is a quadric cone in a linear P^3 (two hyperplane relations)",
    "B": "case B: image is a degree-4 complete intersection of two quadrics in a linear P^4",
    "out-of-scope": "outside the (2,2) dichotomy: quadrics span too little",
}


def report_text(rep: dict) -> str:
    lines = [
        f"presentation (A, B, Q) = ({rep['presentation']['A']}, {rep['presentation']['B']}, "
        f"{rep['presentation']['Q']})",
        f"chern classes c1 = {rep['chern']['c1']}, c2 = {rep['chern']['c2']}",
        "plucker map: (" + ", ".join(rep["plucker_quadrics"]) + ")",
        f"span of the quadrics: dimension {rep['span_dim']}",
        _CASE_TEXT.get(rep["case_tag"], rep["case_tag"]),
        "linear relations: " + (", ".join(rep["hyperplanes"]) or "none"),
    ]
    if rep["extra_quadric"]:
        lines.append(f"extra quadric: {rep['extra_quadric']}")
    lines += [
        "image ideal: (" + ", ".join(rep["image_ideal"]) + ")",
        f"image degree {rep['image_degree']}, map degree {rep['map_degree']}",
    ]
    if rep["pencil"]:
        p = rep["pencil"]
        lines.append("pencil: " + " | ".join(p["generators"]))
        lines.append(f"  determinant identically zero: {p['determinant_zero']}; "
                     f"generic rank {p['generic_rank']}")
        for s in p["strata"]:
            lines.append(f"  {s}")
    sl = rep["singular_locus"]
    lines.append(f"singular locus: {sl['kind']} ({sl['witness']})")
    if sl["linear_forms"]:
        lines.append("  cut out by " + ", ".join(sl["linear_forms"]))
    st = rep["gb_stats"]
    lines.append(f"groebner: {st['bases']} bases, {st['pairs']} pairs, "
                 f"{st['reductions']} reductions, largest basis {st['max_basis_size']}")
    if "timing_seconds" in rep:
        lines.append(f"time: {rep['timing_seconds']} s")
    return "\n".join(lines) + "\n"


def example_job(n: int, a=1, d=1) -> dict:
    """Job dicts for the worked examples over ``(x, y, z^2)``; ``a, d`` parametrize the third."""
    rows = {
        1: [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]],
        2: [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, -1]],
        3: [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, d, 0], [0, 0, 0, a, 1]],
    }[n]
    return {"variables": ["x", "y", "z"],
            "presentation": {"A": "x", "B": "y", "Q": "z^2"},
            "sections": [[str(Fraction(v)) for v in r] for r in rows],
            "seed": 0}
