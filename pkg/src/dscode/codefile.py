"""Code definition files (YAML) and CSV tables.

A code file::

    name: steane
    n: 7
    k: 1
    r: 6
    H:            # m rows over {0,1,w,W} or {I,X,Z,Y}
      - IIIXXXX
      ...
    A:            # m rows of r bits, omitted when r = 0
      - "100000"
      ...

A CSS-type DS code replaces H and A by::

    css:
      stabilizer_rows: 11   # leading rows of H' that form Hb
      hprime:               # binary rows of H'
        - "10101100100010001100000"
        ...

In a CSS file r counts the extra rows of both halves.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

import numpy as np
import yaml

from . import gf2
from .construction import CSSDSCode, ConstructionError, DSCode, SMCode, StabilizerCheckMatrix
from .enumerators import SplitWeightEnumerator


class SpecError(ValueError):
    """Malformed code definition file."""


@dataclass(frozen=True)
class CodeSpec:
    code: DSCode
    css: CSSDSCode | None = None
    name: str = ""

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def r(self) -> int:
        return self.code.r


def _rows(value, field: str) -> list[str]:
    if value is None:
        return []
    if not isinstance(value, list):
        raise SpecError(f"{field} must be a list of strings")
    return [str(v).strip() for v in value]


def parse_code_spec(text: str) -> CodeSpec:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise SpecError(f"not valid YAML: {exc}") from None
    if not isinstance(doc, dict):
        raise SpecError("code file must be a mapping")
    try:
        n, k, r = int(doc["n"]), int(doc["k"]), int(doc.get("r", 0))
    except (KeyError, TypeError, ValueError):
        raise SpecError("fields n and k (integers) are required") from None
    name = str(doc.get("name", ""))
    try:
        if "css" in doc:
            css_doc = doc["css"] or {}
            rows = [gf2.parse_bitstring(s) for s in _rows(css_doc.get("hprime"), "css.hprime")]
            if any(len(s) != n for s in _rows(css_doc.get("hprime"), "css.hprime")):
                raise SpecError("H' rows must have length n")
            css = CSSDSCode(n, tuple(rows), int(css_doc.get("stabilizer_rows", len(rows))))
            code = css.to_ds_code()
        else:
            css = None
            H = StabilizerCheckMatrix.parse(_rows(doc.get("H"), "H"), n)
            a_rows = _rows(doc.get("A"), "A")
            if a_rows:
                A = np.array([[int(ch) for ch in row] for row in a_rows], dtype=np.uint8)
                if A.ndim != 2:
                    raise SpecError("A rows must all have the same length")
                sm = SMCode(A)
            else:
                sm = SMCode.empty(H.m)
            code = DSCode(H, sm)
    except ConstructionError as exc:
        raise SpecError(str(exc)) from None
    except ValueError as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError(str(exc)) from None
    if (code.n, code.k, code.r) != (n, k, r):
        raise SpecError(f"declared [[{n},{k}:{r}]] but the matrices give [[{code.n},{code.k}:{code.r}]]")
    return CodeSpec(code, css, name)


def resolve_spec_path(path) -> Path:
    """A path as given, or else the file of that name shipped with the package."""
    p = Path(path)
    if p.exists():
        return p
    shipped = resources.files("dscode.data").joinpath(p.name)
    if shipped.is_file():
        return Path(str(shipped))
    raise FileNotFoundError(f"no such code file: {path}")


def load_code_spec(path) -> CodeSpec:
    return parse_code_spec(resolve_spec_path(path).read_text())


def dump_code_spec(spec: CodeSpec) -> str:
    code = spec.code
    doc: dict = {}
    if spec.name:
        doc["name"] = spec.name
    doc.update(n=code.n, k=code.k, r=code.r)
    if spec.css is not None:
        doc["css"] = {
            "stabilizer_rows": spec.css.stabilizer_rows,
            "hprime": [gf2.bitstring(v, code.n) for v in spec.css.hprime],
        }
    else:
        doc["H"] = [g.to_string() for g in code.H.rows]
        if code.r:
            doc["A"] = ["".join(str(int(b)) for b in row) for row in code.sm.A]
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=False)


# -- CSV ------------------------------------------------------------------------


def format_number(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def parse_number(s: str):
    s = s.strip()
    if "/" in s:
        return Fraction(s)
    for conv in (int, float):
        try:
            return conv(s)
        except ValueError:
            pass
    return s


def enumerator_to_csv(B: SplitWeightEnumerator) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "m", "r", "side"])
    w.writerow([B.n, B.m, B.r, B.side])
    w.writerow(["i", "j", "count"])
    for i in range(B.n + 1):
        for j in range(B.slen + 1):
            w.writerow([i, j, format_number(B[i, j])])
    return out.getvalue()


def enumerator_from_csv(text: str) -> SplitWeightEnumerator:
    rows = list(csv.reader(io.StringIO(text)))
    if len(rows) < 3 or rows[0] != ["n", "m", "r", "side"] or rows[2] != ["i", "j", "count"]:
        raise SpecError("not an enumerator CSV")
    n, m, r = (int(v) for v in rows[1][:3])
    side = rows[1][3]
    table = [[0] * (m + r + 1) for _ in range(n + 1)]
    for i, j, c in rows[3:]:
        table[int(i)][int(j)] = parse_number(c)
    return SplitWeightEnumerator.from_table(table, n, m, r, side)


def rows_to_csv(header: list[str], rows) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([format_number(v) for v in row])
    return out.getvalue()


def csv_to_rows(text: str) -> tuple[list[str], list[list]]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        return [], []
    return rows[0], [[parse_number(v) for v in row] for row in rows[1:]]
