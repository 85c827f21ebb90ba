"""Finite abstract simplicial complexes on vertex set {0, ..., N}.

Simplices are tuples of strictly increasing vertex ids, oriented by the
increasing order. Complexes store their full face closure in a fixed
sorted order so that all downstream enumeration is deterministic.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from importlib import resources
from itertools import combinations

Simplex = tuple

BUILTINS = {
    "rp2": "rp2.json",
    "bipyramid": "bipyramid.json",
    "csaszar": "csaszar.json",
    "moebius-brehm": "moebius_brehm.json",
    "m2-10": "m2_10.json",
    "m3-10": "m3_10.json",
    "m4-11": "m4_11.json",
    "m5-12": "m5_12.json",
    "m6-12": "m6_12.json",
}


class ComplexError(ValueError):
    """Malformed complex data."""


def simplex(vertices):
    s = tuple(vertices)
    if not s:
        raise ComplexError("empty simplex")
    if any(s[i] >= s[i + 1] for i in range(len(s) - 1)):
        raise ComplexError(f"vertices not strictly increasing: {s}")
    return s


def dim(s):
    return len(s) - 1


def boundary(s):
    """Oriented boundary: i-th face drops the i-th vertex, sign (-1)^i.

    A vertex has empty boundary.
    """
    if len(s) == 1:
        return []
    out = []
    for i in range(len(s)):
        face = s[:i] + s[i + 1 :]
        out.append((face, -1 if i % 2 else 1))
    return out


def closure(facets):
    faces = set()
    for f in facets:
        for k in range(1, len(f) + 1):
            faces.update(combinations(f, k))
    return faces


def sort_key(s):
    return (len(s), s)


@dataclass(frozen=True)
class SimplicialComplex:
    name: str
    num_vertices: int
    facets: tuple
    faces: tuple

    @classmethod
    def from_facets(cls, facets, num_vertices=None, name=""):
        fs = sorted({simplex(f) for f in facets}, key=sort_key)
        if not fs:
            raise ComplexError("empty facet list")
        top = max(v for f in fs for v in f)
        if any(v < 0 for f in fs for v in f):
            raise ComplexError("negative vertex id")
        if num_vertices is None:
            num_vertices = top + 1
        elif top >= num_vertices:
            raise ComplexError(
                f"vertex out of range: {top} >= num_vertices {num_vertices}"
            )
        used = {v for f in fs for v in f}
        if len(used) < num_vertices:
            missing = sorted(set(range(num_vertices)) - used)
            warnings.warn(f"complex {name!r}: unused vertices {missing}")
        faces = tuple(sorted(closure(fs), key=sort_key))
        return cls(name=name, num_vertices=num_vertices, facets=tuple(fs), faces=faces)

    def faces_of_dim(self, d):
        return tuple(f for f in self.faces if len(f) == d + 1)

    def has_face(self, s):
        return tuple(s) in self._face_set()

    def _face_set(self):
        cached = getattr(self, "_faces_cache", None)
        if cached is None:
            cached = frozenset(self.faces)
            object.__setattr__(self, "_faces_cache", cached)
        return cached

    def f_vector(self):
        top = max(len(f) for f in self.faces)
        counts = [0] * top
        for f in self.faces:
            counts[len(f) - 1] += 1
        return tuple(counts)

    def max_dim(self):
        return max(len(f) for f in self.faces) - 1


def f_vector(k):
    return k.f_vector()


def parse_complex(text):
    """Parse the JSON complex format.

    Schema: {"name": str, "num_vertices": int, "facets": [[int, ...], ...]}
    with an optional "one_based": true for facet lists published with
    vertices numbered from 1.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ComplexError(f"malformed JSON: {e}") from e
    if not isinstance(doc, dict) or "facets" not in doc:
        raise ComplexError("document must be an object with a 'facets' key")
    facets = doc["facets"]
    if not isinstance(facets, list) or not facets:
        raise ComplexError("empty facet list")
    shift = 1 if doc.get("one_based") else 0
    try:
        shifted = [sorted(int(v) - shift for v in f) for f in facets]
    except (TypeError, ValueError) as e:
        raise ComplexError(f"bad facet entry: {e}") from e
    return SimplicialComplex.from_facets(
        shifted,
        num_vertices=doc.get("num_vertices"),
        name=doc.get("name", ""),
    )


def load_builtin(name):
    if name not in BUILTINS:
        raise ComplexError(
            f"unknown builtin {name!r}; available: {', '.join(sorted(BUILTINS))}"
        )
    text = resources.files("realizability.data").joinpath(BUILTINS[name]).read_text()
    return parse_complex(text)


def builtin_names():
    return sorted(BUILTINS)
