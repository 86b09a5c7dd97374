"""Execute the checks of a structure file and build the JSON report."""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations_with_replacement

from ..errors import JacobikitError, SchemaError
from ..jacobi import (
    ERROR,
    CheckReport,
    JacobiPair,
    check_compatibility,
    check_homogeneous_pn,
    check_anchor_equivalences,
    check_theorem_rec,
    depoissonize,
    hierarchy_report,
    is_homogeneous_poisson,
    is_jacobi,
    is_jacobi_pencil,
    is_poisson,
    jacobi_bracket,
    lcs_pencil_identities,
    lcs_structure_residuals,
    poissonize,
    recursion_operator_check,
    verify_conformal_morphism,
    verify_identity,
)
from ..jacobi import generators as gen
from ..jacobi.report import Residuals
from ..scalar import Chart, parse_scalar
from ..tensor import compose_J_bivector, euler_field
from .load import Check, StructureFile

DEFAULT_KMAX = 3


class _Args:
    """Typed access to a check's ``args`` with schema errors on misuse."""

    def __init__(self, sf: StructureFile, check: Check, kmax: int):
        self.sf, self.check, self.kmax = sf, check, kmax
        self.raw = check.args

    def _path(self, key):
        return f"{self.check.name}.args.{key}"

    def ref(self, key, kind, default=None):
        if key not in self.raw:
            if default is not None:
                return default
            raise SchemaError("missing argument", self._path(key))
        return self.sf.get(self.raw[key], kind, self._path(key))

    def int(self, key, default):
        v = self.raw.get(key, default)
        if not isinstance(v, int) or isinstance(v, bool):
            raise SchemaError("expected an integer", self._path(key))
        return v

    def k_max(self):
        return self.int("k_max", self.kmax)

    def pair(self, key="pair"):
        return self.ref(key, "pair")

    def functions(self, chart, key="functions"):
        if key not in self.raw:
            return chart.coordinates()
        vals = self.raw[key]
        if not isinstance(vals, list):
            raise SchemaError("expected a list of expressions", self._path(key))
        return [parse_scalar(v, chart) if isinstance(v, str) else parse_scalar(str(v), chart) for v in vals]


# -- ops --------------------------------------------------------------------------------

def _op_is_poisson(a):
    return is_poisson(a.ref("pi", "bivector"))


def _op_is_jacobi(a):
    return is_jacobi(a.pair())


def _op_poissonize(a):
    p = a.pair()
    t = a.raw.get("t", p.chart.fresh_name("t"))
    pi = poissonize(p, t)
    back = depoissonize(pi, t)
    rt = Residuals()
    rt.check("Λ", back.L - p.L)
    rt.check("E", back.E - p.E)
    clauses = {"is_poisson": is_poisson(pi), "roundtrip": CheckReport.from_residuals("roundtrip", rt)}
    return CheckReport.combine("poissonize", clauses, notes=[f"π = {pi}"])


def _op_jacobi_identity(a):
    p = a.pair()
    fs = a.functions(p.chart)
    res = Residuals()
    for i, j, k in combinations_with_replacement(range(len(fs)), 3):
        f, g, h = fs[i], fs[j], fs[k]
        b = lambda u, v: jacobi_bracket(p, u, v)  # noqa: E731
        res.check(f"({f},{g},{h})", b(f, b(g, h)) + b(g, b(h, f)) + b(h, b(f, g)))
    return CheckReport.from_residuals("jacobi_identity", res)


def _op_compat(a):
    return check_compatibility(a.pair(), a.ref("J", "endomorphism"), a.k_max())


def _op_theorem(a):
    return check_theorem_rec(a.pair(), a.ref("J", "endomorphism"), strict=bool(a.raw.get("strict", False)))


def _op_hierarchy(a):
    return hierarchy_report(a.pair(), a.ref("J", "endomorphism"), a.k_max())


def _op_pencil(a):
    return is_jacobi_pencil(a.pair("pair1"), a.pair("pair2"))


def _op_anchor_equivalences(a):
    return check_anchor_equivalences(a.pair(), a.ref("J", "endomorphism"))


def _op_lcs_structure(a):
    return CheckReport.from_residuals("lcs_structure", lcs_structure_residuals(a.ref("F", "form"), a.ref("omega", "form")))


def _op_lcs_pencil(a):
    return lcs_pencil_identities(a.pair("pair1"), a.pair("pair2"), a.ref("omega", "form"))


def _op_recursion(a):
    return recursion_operator_check(a.pair(), a.ref("R", "recursion"), a.k_max())


def _op_homogeneous(a):
    pi = a.ref("pi", "bivector")
    return is_homogeneous_poisson(pi, a.ref("Z", "vector", euler_field(pi.chart)))


def _op_homogeneous_pn(a):
    pi = a.ref("pi", "bivector")
    return check_homogeneous_pn(pi, a.ref("Z", "vector", euler_field(pi.chart)), a.ref("J", "endomorphism"))


def _op_conformal(a):
    p = a.pair()
    t = p.chart.fresh_name("t")
    src_chart = p.chart.extend(t)
    factor = parse_scalar(a.raw.get("a", f"exp({t})"), src_chart)
    src = JacobiPair(poissonize(p, t))
    return verify_conformal_morphism(src, p, factor, a.functions(p.chart))


_IDENTITY_KINDS = {"L": "bivector", "pi": "bivector", "E": "vector", "X": "vector", "Y": "vector",
                   "J": "endomorphism", "alpha": "form", "beta": "form", "gamma": "form"}


def _op_identity(a):
    name = a.raw.get("identity")
    if not isinstance(name, str):
        raise SchemaError("missing identity name", a._path("identity"))
    inputs = {}
    for key, ref in a.raw.get("inputs", {}).items():
        if key == "k":
            inputs["k"] = ref
            continue
        if key not in _IDENTITY_KINDS:
            raise SchemaError(f"unknown identity input {key!r}", a._path(f"inputs.{key}"))
        inputs[key] = a.sf.get(ref, _IDENTITY_KINDS[key], a._path(f"inputs.{key}"))
    return verify_identity(name, inputs)


def _random_inputs(name, chart, rng, k):
    L = gen.random_multivector(chart, 2, rng, degree=1, terms=2)
    if name == "lemma_nij":
        return {"J": gen.random_endomorphism(chart, rng, degree=1, terms=2), "k": k}
    if name in ("eq2", "eq4"):
        L = gen.random_multivector(chart, 2, rng, degree=2, terms=3)
        return {"L": L, "E": gen.random_multivector(chart, 1, rng, degree=2, terms=3)}
    J = gen.compatible_endomorphism(L, rng, degree=1, terms=1)
    inp = {"L": L, "J": J, "E": gen.random_multivector(chart, 1, rng, degree=2, terms=2)}
    if name.startswith("eq8"):
        g = gen.random_scalar(chart, rng, degree=1, terms=1)
        b = gen.random_scalar(chart, rng, degree=0, terms=1)
        inp["pi"] = L * g + compose_J_bivector(J, L) * b
    return inp


def random_identity_suite(name: str, count: int, seed: int, dims=(2, 3, 4)) -> CheckReport:
    """``count`` seeded random instances of an unconditional identity."""
    rng = random.Random(f"{seed}:{name}")
    res = Residuals()
    for i in range(count):
        chart = Chart.standard(dims[i % len(dims)])
        rep = verify_identity(name, _random_inputs(name, chart, rng, 1 + i % 2))
        if not rep.passed:
            res.items.extend(f"instance {i} {r}" for r in rep.residuals)
    return CheckReport.from_residuals(f"random {name}", res, notes=[f"{count} instances, seed {seed}"])


def _op_random_identity(a):
    seed = a.int("seed", a.sf.seed if a.sf.seed is not None else 0)
    dims = a.raw.get("dims", [2, 3, 4])
    return random_identity_suite(a.raw.get("identity"), a.int("count", 10), seed, tuple(dims))


def _op_theorem_suite(a):
    seed = a.int("seed", a.sf.seed if a.sf.seed is not None else 0)
    res = Residuals()
    status = None
    counts = {True: 0, False: 0}
    for label, p, J in gen.theorem_instances(seed, a.int("count", 24)):
        rep = check_theorem_rec(p, J)
        if rep.status == ERROR:
            status = ERROR
            res.items.append(f"{label}: {'; '.join(rep.notes)}")
        else:
            counts[rep.passed] += 1
    notes = [f"(a)∧(b) holds on {counts[True]}, fails on {counts[False]}; disagreements: {len(res)}"]
    if status == ERROR:
        return CheckReport("theorem_rec_suite", ERROR, res.items, notes)
    return CheckReport.from_residuals("theorem_rec_suite", res, notes=notes)


OPS = {
    "is_poisson": _op_is_poisson,
    "is_jacobi": _op_is_jacobi,
    "poissonize": _op_poissonize,
    "jacobi_identity": _op_jacobi_identity,
    "check_compatibility": _op_compat,
    "check_theorem_rec": _op_theorem,
    "hierarchy": _op_hierarchy,
    "is_jacobi_pencil": _op_pencil,
    "check_anchor_equivalences": _op_anchor_equivalences,
    "lcs_structure": _op_lcs_structure,
    "lcs_pencil_identities": _op_lcs_pencil,
    "recursion_operator_check": _op_recursion,
    "is_homogeneous_poisson": _op_homogeneous,
    "check_homogeneous_pn": _op_homogeneous_pn,
    "verify_conformal_morphism": _op_conformal,
    "verify_identity": _op_identity,
    "random_identity": _op_random_identity,
    "theorem_rec_suite": _op_theorem_suite,
}


def run_check(sf: StructureFile, check: Check, kmax: int = DEFAULT_KMAX) -> tuple:
    """``(record, elapsed_ms)``; exceptions become error records."""
    t0 = time.perf_counter()
    try:
        fn = OPS.get(check.op)
        if fn is None:
            raise SchemaError(f"unknown op {check.op!r}")
        rep = fn(_Args(sf, check, kmax))
    except (JacobikitError, ValueError, TypeError, KeyError) as exc:
        rep = CheckReport.error(check.name, f"{type(exc).__name__}: {exc}")
    elapsed = (time.perf_counter() - t0) * 1000
    record = {"name": check.name, "op": check.op, "status": rep.status, "residuals": list(rep.residuals)}
    if rep.status == ERROR and rep.notes:
        record["error"] = rep.notes[0]
    elif rep.notes:
        record["notes"] = list(rep.notes)
    return record, elapsed


def run(sf: StructureFile, jobs: int = 1, kmax: int = DEFAULT_KMAX, timing: bool = True) -> dict:
    """Run every check; record order follows the input whatever ``jobs`` is."""
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda c: run_check(sf, c, kmax), sf.checks))
    else:
        results = [run_check(sf, c, kmax) for c in sf.checks]
    records = [r for r, _ in results]
    summary = {"pass": 0, "fail": 0, "error": 0}
    for r in records:
        summary[r["status"]] += 1
    report = {"checks": records, "summary": summary}
    if timing:
        report["timing_ms"] = {r["name"]: round(ms, 3) for r, (_, ms) in zip(records, results)}
    return report


__all__ = ["OPS", "random_identity_suite", "run", "run_check"]
