"""Reading and writing TSPLIB95 ``EUC_2D`` instances.

Only the node-coordinate flavour of the format is handled::

    NAME : eil51
    TYPE : TSP
    DIMENSION : 51
    EDGE_WEIGHT_TYPE : EUC_2D
    NODE_COORD_SECTION
    1 37 52
    ...
    EOF

The twelve benchmark instances used by the experiment runner ship with the
package and can be loaded with :func:`load_bundled`.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

__all__ = [
    "BUNDLED_INSTANCES",
    "KNOWN_OPTIMA",
    "City",
    "DimensionMismatch",
    "DuplicateNodeId",
    "Instance",
    "InvalidNodeIds",
    "Metric",
    "MissingHeader",
    "TsplibError",
    "UnsupportedEdgeWeightType",
    "format_instance",
    "load_bundled",
    "load_instance",
    "parse_instance",
]


class TsplibError(ValueError):
    """Base class for malformed or unsupported TSPLIB input."""


class MissingHeader(TsplibError):
    pass


class DimensionMismatch(TsplibError):
    pass


class UnsupportedEdgeWeightType(TsplibError):
    pass


class DuplicateNodeId(TsplibError):
    pass


class InvalidNodeIds(TsplibError):
    """Node ids are unique but not exactly ``1..N``."""


class Metric(str, enum.Enum):
    """How coordinates are turned into edge lengths.

    ``EUC2D_ROUNDED`` is the TSPLIB convention (nearest integer);
    ``EUC2D_REAL`` keeps the exact Euclidean length.
    """

    EUC2D_ROUNDED = "rounded"
    EUC2D_REAL = "real"

    @classmethod
    def coerce(cls, value: "Metric | str") -> "Metric":
        if isinstance(value, cls):
            return value
        key = str(value).strip()
        for m in cls:
            if key.lower() == m.value or key.upper() == m.name:
                return m
        raise ValueError(f"unknown metric {value!r}; expected 'rounded' or 'real'")


# Optimal tour lengths of the bundled instances (TSPLIB, rounded EUC_2D).
KNOWN_OPTIMA: dict[str, float] = {
    "eil51": 426,
    "a280": 2579,
    "bier127": 118282,
    "kroA100": 21282,
    "berlin52": 7542,
    "kroA200": 29368,
    "pr152": 73682,
    "lin318": 42029,
    "pr226": 80369,
    "ch150": 6528,
    "st70": 675,
    "rat195": 2323,
}

BUNDLED_INSTANCES: tuple[str, ...] = tuple(KNOWN_OPTIMA)

# "pr125" appears in some benchmark listings for the instance whose optimum is
# 73682; that optimum belongs to pr152.
_ALIASES = {"pr125": "pr152"}


@dataclass(frozen=True)
class City:
    id: int
    x: float
    y: float

    def __post_init__(self):
        if self.id < 1:
            raise ValueError(f"city id must be >= 1, got {self.id}")


@dataclass(frozen=True)
class Instance:
    """A parsed symmetric TSP instance.

    Cities keep the order of the coordinate section and their ids are
    exactly ``1..dimension``.
    """

    name: str
    dimension: int
    cities: tuple[City, ...]
    metric: Metric = Metric.EUC2D_ROUNDED
    known_optimal: Optional[float] = None
    comment: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "cities", tuple(self.cities))
        object.__setattr__(self, "metric", Metric.coerce(self.metric))
        if self.dimension < 3:
            raise ValueError(f"an instance needs at least 3 cities, got {self.dimension}")
        if len(self.cities) != self.dimension:
            raise DimensionMismatch(
                f"{self.name}: DIMENSION is {self.dimension} but "
                f"{len(self.cities)} cities were given"
            )
        ids = [c.id for c in self.cities]
        if len(set(ids)) != len(ids):
            dup = next(i for i in ids if ids.count(i) > 1)
            raise DuplicateNodeId(f"{self.name}: node id {dup} appears more than once")
        if set(ids) != set(range(1, self.dimension + 1)):
            raise InvalidNodeIds(f"{self.name}: node ids must be exactly 1..{self.dimension}")
        if self.known_optimal is not None and self.known_optimal < 0:
            raise ValueError("known_optimal must be non-negative")

    @property
    def coords(self) -> np.ndarray:
        """``(N, 2)`` array of coordinates, row ``k`` holding city id ``k + 1``."""
        out = np.empty((self.dimension, 2), dtype=float)
        for c in self.cities:
            out[c.id - 1] = (c.x, c.y)
        return out

    @classmethod
    def from_coords(
        cls,
        coords: Sequence[Sequence[float]] | np.ndarray,
        name: str = "coords",
        metric: Metric | str = Metric.EUC2D_ROUNDED,
        known_optimal: Optional[float] = None,
    ) -> "Instance":
        arr = np.asarray(coords, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError(f"coords must have shape (N, 2), got {arr.shape}")
        cities = tuple(City(k + 1, float(x), float(y)) for k, (x, y) in enumerate(arr))
        return cls(name, len(cities), cities, Metric.coerce(metric), known_optimal)

    def with_optimal(self, value: Optional[float]) -> "Instance":
        return replace(self, known_optimal=value)


_KEY_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*:?\s*(.*?)\s*$")
_SECTION_KEYS = {"NODE_COORD_SECTION"}
_UNSUPPORTED_SECTIONS = {
    "EDGE_WEIGHT_SECTION",
    "DISPLAY_DATA_SECTION",
    "TOUR_SECTION",
    "DEPOT_SECTION",
    "DEMAND_SECTION",
    "FIXED_EDGES_SECTION",
}


def parse_instance(text: str, metric_override: Metric | str | None = None) -> Instance:
    """Parse the text of a TSPLIB ``.tsp`` file.

    ``metric_override`` replaces the default ``EUC2D_ROUNDED`` metric implied
    by ``EDGE_WEIGHT_TYPE: EUC_2D``. The known optimum is never read from the
    file; attach it afterwards with :meth:`Instance.with_optimal`.
    """
    header: dict[str, str] = {}
    lines = text.splitlines()
    k = 0
    in_coords = False
    while k < len(lines):
        line = lines[k].strip()
        k += 1
        if not line:
            continue
        m = _KEY_RE.match(line)
        key = m.group(1).upper() if m else ""
        if key in _SECTION_KEYS:
            in_coords = True
            break
        if key == "EOF":
            break
        if key in _UNSUPPORTED_SECTIONS:
            raise UnsupportedEdgeWeightType(f"section {key} is not supported")
        if m is None:
            if line[0].isdigit() or line[0] in "+-.":
                raise MissingHeader(f"coordinate data {line!r} before NODE_COORD_SECTION")
            raise TsplibError(f"cannot parse header line {line!r}")
        header[key] = m.group(2)

    for required in ("NAME", "DIMENSION"):
        if required not in header:
            raise MissingHeader(f"missing {required} header")
    if not in_coords:
        raise MissingHeader("missing NODE_COORD_SECTION")

    ewt = header.get("EDGE_WEIGHT_TYPE", "").upper()
    if ewt != "EUC_2D":
        raise UnsupportedEdgeWeightType(
            f"EDGE_WEIGHT_TYPE {ewt or '<absent>'} is not supported (only EUC_2D)"
        )
    try:
        dimension = int(header["DIMENSION"])
    except ValueError:
        raise TsplibError(f"DIMENSION is not an integer: {header['DIMENSION']!r}") from None

    cities: list[City] = []
    seen: set[int] = set()
    for raw in lines[k:]:
        line = raw.strip()
        if not line:
            continue
        if line.upper() == "EOF":
            break
        parts = line.split()
        if parts[0].upper() in _UNSUPPORTED_SECTIONS:
            raise UnsupportedEdgeWeightType(f"section {parts[0]} is not supported")
        if len(parts) != 3:
            raise TsplibError(f"bad coordinate line {line!r}")
        try:
            node = int(parts[0])
            x, y = float(parts[1]), float(parts[2])
        except ValueError:
            raise TsplibError(f"bad coordinate line {line!r}") from None
        if node in seen:
            raise DuplicateNodeId(f"node id {node} appears more than once")
        seen.add(node)
        cities.append(City(node, x, y))

    if len(cities) != dimension:
        raise DimensionMismatch(
            f"DIMENSION is {dimension} but the coordinate section has {len(cities)} lines"
        )
    metric = Metric.EUC2D_ROUNDED if metric_override is None else Metric.coerce(metric_override)
    return Instance(
        name=header["NAME"],
        dimension=dimension,
        cities=tuple(cities),
        metric=metric,
        comment=header.get("COMMENT", ""),
    )


def _fmt_coord(v: float) -> str:
    return str(int(v)) if v.is_integer() and abs(v) < 1e15 else repr(v)


def format_instance(instance: Instance) -> str:
    """Serialize ``instance`` as TSPLIB text.

    The metric is not representable in the format; re-parse with
    ``metric_override=instance.metric`` to round-trip a real-valued instance.
    """
    out = [f"NAME : {instance.name}"]
    if instance.comment:
        out.append(f"COMMENT : {instance.comment}")
    out += [
        "TYPE : TSP",
        f"DIMENSION : {instance.dimension}",
        "EDGE_WEIGHT_TYPE : EUC_2D",
        "NODE_COORD_SECTION",
    ]
    out += [f"{c.id} {_fmt_coord(c.x)} {_fmt_coord(c.y)}" for c in instance.cities]
    out.append("EOF")
    return "\n".join(out) + "\n"


def load_instance(
    path: str | Path,
    metric_override: Metric | str | None = None,
    known_optimal: Optional[float] = None,
) -> Instance:
    """Read a ``.tsp`` file; the optimum falls back to :data:`KNOWN_OPTIMA`."""
    text = Path(path).read_text(encoding="utf-8", errors="replace")
    inst = parse_instance(text, metric_override)
    if known_optimal is None:
        known_optimal = KNOWN_OPTIMA.get(inst.name)
    return inst.with_optimal(known_optimal)


def bundled_path(name: str) -> Path:
    name = _ALIASES.get(name, name)
    for known in BUNDLED_INSTANCES:
        if known.lower() == name.lower():
            return Path(str(resources.files("tspga") / "data" / f"{known}.tsp"))
    raise KeyError(f"no bundled instance named {name!r}")


def load_bundled(name: str, metric_override: Metric | str | None = None) -> Instance:
    """Load one of the bundled benchmark instances by name (case-insensitive)."""
    return load_instance(bundled_path(name), metric_override)
