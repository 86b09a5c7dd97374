"""Structure files: JSON with expression strings, resolved into tensors.

Layout (every section optional except ``chart``)::

    {
      "chart": ["x", "y", "z"],
      "seed": 7,
      "scalars":   {"f": "x*y"},
      "vectors":   {"E": ["0", "0", "1"]}            or {"E": {"(3)": "1"}},
      "bivectors": {"L": {"(1,2)": "1", "(2,3)": "-y"}},
      "forms":     {"w": {"(1)": "-1"}, "F": {"degree": 2, "components": {...}}},
      "endomorphisms": {"J": [["1", "0", "0"], ...]}  or {"scalar": "3"}
                       or {"diagonal": [...]} or {"lcs": ["F1", "F2"]},
      "jacobi_pairs": {"p": {"L": "L", "E": "E"}} or {"lcs": {"F": "F", "omega": "w"}},
      "recursion_operators": {"R": "identity"} or {"J": "J", "X0": "X", "alpha0": "a", "phi0": "1"},
      "checks": [{"name": "...", "op": "is_jacobi", "args": {"pair": "p"}}]
    }

Component keys are 1-based increasing index tuples; omitted components are 0.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import DimensionMismatch, IoError, JacobikitError, ParseError, SchemaError, UnresolvedReference
from ..jacobi import JacobiPair, RecursionOperator, lcs_recursion_tensor, lcs_to_jacobi
from ..scalar import Chart, ScalarField, parse_scalar
from ..tensor import DifferentialForm, EndomorphismField, MultivectorField

FIXTURES = Path(__file__).with_name("fixtures")

SECTIONS = (
    "scalars",
    "vectors",
    "bivectors",
    "forms",
    "endomorphisms",
    "jacobi_pairs",
    "recursion_operators",
)
TOP_KEYS = {"chart", "seed", "description", "checks", *SECTIONS}
_KEY = re.compile(r"^\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)$|^(\d+)$")


@dataclass
class Check:
    name: str
    op: str
    args: dict


@dataclass
class StructureFile:
    path: str
    chart: Chart
    objects: dict = field(default_factory=dict)
    kinds: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    seed: int | None = None
    source: dict = field(default_factory=dict)

    def get(self, name, kind=None, path=""):
        if not isinstance(name, str):
            raise SchemaError(f"expected a name, got {name!r}", path)
        if name not in self.objects:
            raise UnresolvedReference(f"{path}: undefined name {name!r}" if path else f"undefined name {name!r}")
        if kind is not None and self.kinds[name] not in (kind if isinstance(kind, tuple) else (kind,)):
            raise SchemaError(f"{name!r} is a {self.kinds[name]}, expected {kind}", path)
        return self.objects[name]


def resolve_path(path) -> Path:
    """``path`` itself, else a bundled fixture of that name."""
    p = Path(path)
    if p.exists():
        return p
    bundled = FIXTURES / p.name
    if p.parent == Path(".") and bundled.exists():
        return bundled
    raise IoError(f"cannot read {path}: no such file")


def bundled_fixtures() -> list:
    return sorted(p.name for p in FIXTURES.glob("*.json"))


class _Loader:
    def __init__(self, raw: dict, path: str):
        self.raw = raw
        self.path = path
        if not isinstance(raw, dict):
            raise SchemaError("top level must be an object")
        unknown = set(raw) - TOP_KEYS
        if unknown:
            raise SchemaError(f"unknown keys {sorted(unknown)}")
        names = raw.get("chart")
        if not isinstance(names, list) or not names or not all(isinstance(n, str) for n in names):
            raise SchemaError("chart must be a non-empty list of coordinate names", "chart")
        if len(set(names)) != len(names):
            raise SchemaError("coordinate names must be unique", "chart")
        try:
            self.chart = Chart.of(*names)
        except (ValueError, JacobikitError) as exc:
            raise SchemaError(str(exc), "chart") from exc
        seed = raw.get("seed")
        if seed is not None and not isinstance(seed, int):
            raise SchemaError("seed must be an integer", "seed")
        self.sf = StructureFile(path, self.chart, seed=seed, source=raw)

    # -- primitives --------------------------------------------------------------
    def scalar(self, text, path) -> ScalarField:
        if isinstance(text, (int,)) and not isinstance(text, bool):
            text = str(text)
        if not isinstance(text, str):
            raise SchemaError("expected an expression string", path)
        try:
            return parse_scalar(text, self.chart)
        except ParseError as exc:
            raise type(exc)(f"{path}: {exc.message}", exc.text, exc.offset) from exc

    def indices(self, key, path, degree=None) -> tuple:
        m = _KEY.match(key.strip()) if isinstance(key, str) else None
        if not m:
            raise SchemaError(f"bad component key {key!r}", path)
        idx = tuple(int(v) for v in (m.group(1) or m.group(2)).split(","))
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise SchemaError(f"indices in {key!r} must be strictly increasing", path)
        n = self.chart.dimension
        if idx[0] < 1 or idx[-1] > n:
            raise DimensionMismatch(f"{path}: index out of range 1..{n} in {key!r}")
        if degree is not None and len(idx) != degree:
            raise SchemaError(f"key {key!r} has {len(idx)} indices, expected {degree}", path)
        return tuple(i - 1 for i in idx)

    def components(self, obj, path, degree=None):
        if not isinstance(obj, dict):
            raise SchemaError("components must be an object keyed by index tuples", path)
        comps = {}
        deg = degree
        for key, text in obj.items():
            idx = self.indices(key, f"{path}.{key}", deg)
            deg = len(idx)
            comps[idx] = self.scalar(text, f"{path}.{key}")
        return deg, comps

    def vector_list(self, obj, path):
        if len(obj) != self.chart.dimension:
            raise DimensionMismatch(f"{path}: {len(obj)} components for a {self.chart.dimension}-chart")
        return {(i,): self.scalar(t, f"{path}[{i}]") for i, t in enumerate(obj)}

    def define(self, name, kind, value, path):
        if not isinstance(name, str) or not name:
            raise SchemaError("names must be non-empty strings", path)
        if name in self.sf.objects or name in self.chart.names:
            raise SchemaError(f"duplicate name {name!r}", path)
        self.sf.objects[name] = value
        self.sf.kinds[name] = kind

    def section(self, key):
        sec = self.raw.get(key, {})
        if not isinstance(sec, dict):
            raise SchemaError("must be an object", key)
        return sec.items()

    # -- sections ----------------------------------------------------------------
    def load(self) -> StructureFile:
        for name, text in self.section("scalars"):
            self.define(name, "scalar", self.scalar(text, f"scalars.{name}"), f"scalars.{name}")
        for name, obj in self.section("vectors"):
            path = f"vectors.{name}"
            comps = self.vector_list(obj, path) if isinstance(obj, list) else self.components(obj, path, 1)[1]
            self.define(name, "vector", MultivectorField(self.chart, 1, comps), path)
        for name, obj in self.section("bivectors"):
            path = f"bivectors.{name}"
            self.define(name, "bivector", MultivectorField(self.chart, 2, self.components(obj, path, 2)[1]), path)
        for name, obj in self.section("forms"):
            self.define(name, "form", self.form(obj, f"forms.{name}"), f"forms.{name}")
        for name, obj in self.section("endomorphisms"):
            path = f"endomorphisms.{name}"
            self.define(name, "endomorphism", self.endomorphism(obj, path), path)
        for name, obj in self.section("jacobi_pairs"):
            path = f"jacobi_pairs.{name}"
            self.define(name, "pair", self.pair(obj, path), path)
        for name, obj in self.section("recursion_operators"):
            path = f"recursion_operators.{name}"
            self.define(name, "recursion", self.recursion(obj, path), path)
        self.checks()
        return self.sf

    def form(self, obj, path):
        if not isinstance(obj, dict):
            raise SchemaError("a form is an object of components", path)
        if "components" in obj or "degree" in obj:
            extra = set(obj) - {"components", "degree"}
            if extra:
                raise SchemaError(f"unknown keys {sorted(extra)}", path)
            degree = obj.get("degree")
            if degree is not None and (not isinstance(degree, int) or not 0 <= degree <= self.chart.dimension):
                raise SchemaError("degree must be an integer in 0..n", f"{path}.degree")
            deg, comps = self.components(obj.get("components", {}), f"{path}.components", degree)
        else:
            deg, comps = self.components(obj, path)
        if deg is None:
            raise SchemaError("empty form needs an explicit degree", path)
        return DifferentialForm(self.chart, deg, comps)

    def endomorphism(self, obj, path):
        n = self.chart.dimension
        if isinstance(obj, list):
            if len(obj) != n or any(not isinstance(r, list) or len(r) != n for r in obj):
                raise DimensionMismatch(f"{path}: expected {n}×{n} rows")
            return EndomorphismField(self.chart, [[self.scalar(t, f"{path}[{i}][{j}]") for j, t in enumerate(r)] for i, r in enumerate(obj)])
        if not isinstance(obj, dict) or len(obj) != 1:
            raise SchemaError("endomorphism must be rows or one of scalar/diagonal/lcs", path)
        (kind, val), = obj.items()
        if kind == "scalar":
            return EndomorphismField.identity(self.chart) * self.scalar(val, f"{path}.scalar")
        if kind == "diagonal":
            if not isinstance(val, list) or len(val) != n:
                raise DimensionMismatch(f"{path}.diagonal: expected {n} entries")
            return EndomorphismField.diagonal(self.chart, [self.scalar(t, f"{path}.diagonal[{i}]") for i, t in enumerate(val)])
        if kind == "lcs":
            if not isinstance(val, list) or len(val) != 2:
                raise SchemaError("lcs needs [F1, F2]", f"{path}.lcs")
            F1, F2 = (self.sf.get(v, "form", f"{path}.lcs") for v in val)
            return lcs_recursion_tensor(F1, F2)
        raise SchemaError(f"unknown endomorphism constructor {kind!r}", path)

    def pair(self, obj, path):
        if not isinstance(obj, dict):
            raise SchemaError("a Jacobi pair is an object", path)
        if "lcs" in obj:
            lcs = obj["lcs"]
            if not isinstance(lcs, dict) or set(lcs) != {"F", "omega"}:
                raise SchemaError("lcs needs F and omega", f"{path}.lcs")
            return lcs_to_jacobi(self.sf.get(lcs["F"], "form", f"{path}.lcs.F"), self.sf.get(lcs["omega"], "form", f"{path}.lcs.omega"))
        extra = set(obj) - {"L", "E"}
        if extra or "L" not in obj:
            raise SchemaError("a Jacobi pair needs L and optionally E", path)
        L = self.sf.get(obj["L"], "bivector", f"{path}.L")
        E = self.sf.get(obj["E"], "vector", f"{path}.E") if obj.get("E") is not None else None
        return JacobiPair(L, E)

    def recursion(self, obj, path):
        if obj == "identity":
            return RecursionOperator.identity(self.chart)
        if not isinstance(obj, dict) or set(obj) - {"J", "X0", "alpha0", "phi0"}:
            raise SchemaError("recursion operator needs J, X0, alpha0, phi0", path)
        J = self.sf.get(obj.get("J"), "endomorphism", f"{path}.J")
        X0 = self.sf.get(obj["X0"], "vector", f"{path}.X0") if "X0" in obj else MultivectorField.zero(self.chart, 1)
        a0 = self.sf.get(obj["alpha0"], "form", f"{path}.alpha0") if "alpha0" in obj else DifferentialForm.zero(self.chart, 1)
        phi = self.scalar(obj.get("phi0", "0"), f"{path}.phi0")
        return RecursionOperator(J, X0, a0, phi)

    def checks(self):
        raw = self.raw.get("checks", [])
        if not isinstance(raw, list):
            raise SchemaError("must be a list", "checks")
        seen = set()
        for i, c in enumerate(raw):
            path = f"checks[{i}]"
            if not isinstance(c, dict) or "op" not in c:
                raise SchemaError("each check needs an op", path)
            extra = set(c) - {"name", "op", "args"}
            if extra:
                raise SchemaError(f"unknown keys {sorted(extra)}", path)
            name = c.get("name", f"{c['op']}#{i}")
            if name in seen:
                raise SchemaError(f"duplicate check name {name!r}", path)
            seen.add(name)
            args = c.get("args", {})
            if not isinstance(args, dict):
                raise SchemaError("args must be an object", f"{path}.args")
            self.sf.checks.append(Check(name, c["op"], args))


def load(path) -> StructureFile:
    """Read, validate and resolve a structure file."""
    p = resolve_path(path)
    try:
        raw = json.loads(p.read_text(encoding="utf-8"))
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return loads(raw, str(p))


def loads(raw: dict, path: str = "<memory>") -> StructureFile:
    return _Loader(raw, path).load()


__all__ = ["Check", "FIXTURES", "StructureFile", "bundled_fixtures", "load", "loads", "resolve_path"]
