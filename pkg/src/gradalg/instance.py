"""JSON instance files: a graded algebra plus optional modules, with sparse tensors.

Layout::

    {"format": "gradalg-instance/1", "name": ..., "comments": ...,
     "field": {"p": 2},
     "group": {"order": 2, "table": [[0, 1], [1, 0]]},
     "algebra": {"degrees": [0, 1], "deg_dims": [1, 1],
                 "structure_constants": [[i, j, k, v], ...], "unit": [1, 0]},
     "modules": [{"name": ..., "kind": "graded", "degrees": [...],
                  "actions": [[i, r, c, v], ...]},
                 {"name": ..., "kind": "ae", "dim": 1, "actions": [...]}]}

Action entries ``[i, r, c, v]`` mean ``(m_r . b_i)`` has coefficient ``v`` on
``m_c``; ``i`` is always a global algebra index (for ``ae`` modules it must
lie in degree e).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import exactlin as el
from .algebra import Algebra, RModule
from .graded import GradedAlgebra, GradedModule
from .groups import FiniteGroup, make_group

FORMAT = "gradalg-instance/1"


class InstanceError(ValueError):
    """Malformed instance file (syntax, shape or index errors)."""


@dataclass(eq=False)
class Instance:
    name: str
    algebra: GradedAlgebra
    modules: dict[str, GradedModule | RModule] = field(default_factory=dict)
    comments: str = ""


def _require(block: dict, key: str, where: str):
    if not isinstance(block, dict) or key not in block:
        raise InstanceError(f"missing '{key}' in {where}")
    return block[key]


def _int(v, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise InstanceError(f"expected an integer in {where}, got {v!r}")
    return v


def _sparse(entries, shape: tuple[int, ...], p: int, where: str) -> np.ndarray:
    out = np.zeros(shape, dtype=np.int64)
    if not isinstance(entries, list):
        raise InstanceError(f"{where} must be a list of entries")
    for entry in entries:
        if not isinstance(entry, list) or len(entry) != len(shape) + 1:
            raise InstanceError(f"bad entry {entry!r} in {where}")
        *idx, v = (_int(e, where) for e in entry)
        if any(not 0 <= i < n for i, n in zip(idx, shape)):
            raise InstanceError(f"index {idx} out of range in {where}")
        out[tuple(idx)] = (out[tuple(idx)] + v) % p
    return out


def _dense_to_sparse(arr: np.ndarray) -> list[list[int]]:
    return [[*map(int, idx), int(arr[tuple(idx)])] for idx in np.argwhere(arr)]


def parse_group(block) -> FiniteGroup:
    order = _int(_require(block, "order", "group"), "group.order")
    table = _require(block, "table", "group")
    if not isinstance(table, list) or len(table) != order or any(
            not isinstance(row, list) or len(row) != order for row in table):
        raise InstanceError("group.table must be an order x order list of lists")
    for row in table:
        for v in row:
            if not 0 <= _int(v, "group.table") < order:
                raise InstanceError(f"group.table entry {v} out of range")
    return make_group(table)


def parse_algebra(data: dict, name: str = "") -> GradedAlgebra:
    p = _int(_require(_require(data, "field", "instance"), "p", "field"), "field.p")
    if not el.is_prime(p) or p > el.MAX_PRIME:
        raise InstanceError(f"field.p = {p} is not a supported prime")
    group = parse_group(_require(data, "group", "instance"))
    block = _require(data, "algebra", "instance")
    degrees = [_int(d, "algebra.degrees") for d in _require(block, "degrees", "algebra")]
    n = len(degrees)
    if any(not 0 <= d < group.order for d in degrees):
        raise InstanceError("algebra.degrees contains a non-element")
    if "deg_dims" in block:
        dims = [degrees.count(x) for x in group.elements]
        if list(block["deg_dims"]) != dims:
            raise InstanceError(f"algebra.deg_dims {block['deg_dims']} disagrees with degrees {dims}")
    sc = _sparse(_require(block, "structure_constants", "algebra"), (n, n, n), p, "structure_constants")
    unit = [_int(v, "algebra.unit") for v in _require(block, "unit", "algebra")]
    if len(unit) != n:
        raise InstanceError("algebra.unit has the wrong length")
    alg = Algebra(p, sc, np.array(unit, dtype=np.int64).reshape(n) % p)
    return GradedAlgebra(group, alg, tuple(degrees), name)


def parse_module(a: GradedAlgebra, block: dict) -> tuple[str, GradedModule | RModule]:
    name = _require(block, "name", "module")
    kind = _require(block, "kind", f"module {name}")
    actions = _require(block, "actions", f"module {name}")
    p = a.p
    if kind == "graded":
        degrees = [_int(d, f"module {name}") for d in _require(block, "degrees", f"module {name}")]
        if any(not 0 <= d < a.group.order for d in degrees):
            raise InstanceError(f"module {name} has a degree outside the group")
        d = len(degrees)
        acts = _sparse(actions, (a.dim, d, d), p, f"module {name}")
        return name, GradedModule(a, tuple(degrees), tuple(acts), name=name)
    if kind == "ae":
        d = _int(_require(block, "dim", f"module {name}"), f"module {name}.dim")
        acts = _sparse(actions, (a.dim, d, d), p, f"module {name}")
        stray = [i for i in range(a.dim) if acts[i].any() and i not in a.ae_indices]
        if stray:
            raise InstanceError(f"module {name} acts by {stray}, which are not in degree e")
        return name, RModule(a.ae, tuple(acts[i] for i in a.ae_indices), d)
    raise InstanceError(f"module {name}: unknown kind {kind!r}")


def parse_instance(data, with_modules: bool = True) -> Instance:
    if not isinstance(data, dict):
        raise InstanceError("instance must be a JSON object")
    fmt = data.get("format")
    if fmt != FORMAT:
        raise InstanceError(f"unsupported format {fmt!r}, expected {FORMAT!r}")
    name = str(data.get("name", ""))
    a = parse_algebra(data, name)
    inst = Instance(name, a, comments=str(data.get("comments", "")))
    if with_modules:
        add_modules(inst, data)
    return inst


def add_modules(inst: Instance, data: dict) -> None:
    """Parse the module blocks; needs a valid algebra (A_e must be a subalgebra)."""
    a = inst.algebra
    blocks = data.get("modules", [])
    if not isinstance(blocks, list):
        raise InstanceError("modules must be a list")
    for block in blocks:
        mname, mod = parse_module(a, block)
        if mname in inst.modules:
            raise InstanceError(f"duplicate module name {mname!r}")
        inst.modules[mname] = mod


def read_json(path: str | Path):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InstanceError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"malformed JSON in {path}: {exc}") from exc
    return data


def load_instance(path: str | Path) -> Instance:
    return parse_instance(read_json(path))


# -- serialization -------------------------------------------------------------

def algebra_to_dict(a: GradedAlgebra) -> dict:
    return {
        "field": {"p": a.p},
        "group": {"order": a.group.order, "table": [list(r) for r in a.group.table]},
        "algebra": {
            "degrees": list(a.degrees),
            "deg_dims": list(a.deg_dims),
            "structure_constants": _dense_to_sparse(a.algebra.sc % a.p),
            "unit": [int(v) for v in a.unit],
        },
    }


def module_to_dict(a: GradedAlgebra, name: str, m: GradedModule | RModule) -> dict:
    if isinstance(m, GradedModule):
        acts = np.array(m.acts, dtype=np.int64).reshape(a.dim, m.dim, m.dim)
        return {"name": name, "kind": "graded", "degrees": list(m.degrees),
                "actions": _dense_to_sparse(acts)}
    acts = np.zeros((a.dim, m.dim, m.dim), dtype=np.int64)
    for k, i in enumerate(a.ae_indices):
        acts[i] = m.acts[k]
    return {"name": name, "kind": "ae", "dim": m.dim, "actions": _dense_to_sparse(acts)}


def instance_to_dict(inst: Instance) -> dict:
    out = {"format": FORMAT, "name": inst.name}
    if inst.comments:
        out["comments"] = inst.comments
    out.update(algebra_to_dict(inst.algebra))
    out["modules"] = [module_to_dict(inst.algebra, k, m) for k, m in inst.modules.items()]
    return out


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dumps_instance(inst: Instance) -> str:
    """Indented JSON with integer lists kept on one line; keys sorted."""
    text = json.dumps(instance_to_dict(inst), indent=1, sort_keys=True)
    return _INT_LIST.sub(lambda m: "[" + ", ".join(m.group(1).replace(",", " ").split()) + "]", text) + "\n"


def dump_instance(inst: Instance, path: str | Path) -> None:
    Path(path).write_text(dumps_instance(inst), encoding="utf-8")
