"""Empirical distinctive-power comparisons over exhaustive small-graph corpora.

Graphs are grouped into similarity classes (same vertex, edge and component
counts); a family's distinctive power is its value partition on each class.
Family P transfers through family Q when Q-equality forces P-equality on
every class, i.e. Q's partition is at least as fine as P's everywhere.
Verdicts carry minimal witness pairs in enumeration order so scans are
reproducible byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .catalog import family_polynomial
from .graphs import Graph, SimilarityTriple, enumerate_graphs, graph_to_graph6, \
    similarity_triple
from .polynomials import IntPoly, MultiPoly

MAX_SCAN_N = 7

Family = Union[str, Callable[[Graph], Union[IntPoly, MultiPoly]]]


@dataclass(frozen=True)
class SimilarityClass:
    triple: SimilarityTriple
    members: tuple[Graph, ...]


def similarity_classes(nmax: int) -> list[SimilarityClass]:
    """All similarity classes over the isomorph-free corpus with n <= nmax."""
    if not 1 <= nmax <= MAX_SCAN_N:
        raise ValueError(f"similarity scan supports 1 <= nmax <= {MAX_SCAN_N}")
    buckets: dict[SimilarityTriple, list[Graph]] = {}
    for n in range(1, nmax + 1):
        for g in enumerate_graphs(n):
            buckets.setdefault(similarity_triple(g), []).append(g)
    classes = [SimilarityClass(t, tuple(members))
               for t, members in buckets.items()]
    classes.sort(key=lambda c: (c.triple.n, c.triple.m, c.triple.k))
    return classes


def _resolve(family: Family) -> tuple[str, Callable]:
    if callable(family):
        return getattr(family, "__name__", "custom"), family
    return family, lambda g, name=family: family_polynomial(name, g)


def _value_key(value: Union[IntPoly, MultiPoly]):
    if isinstance(value, IntPoly):
        return ("u", value.basis, value.coeffs)
    return ("m", value.arity, value.terms)


def value_partition(family: Family, cls: SimilarityClass
                    ) -> list[list[Graph]]:
    """Fibers of the family map on one class, in first-seen member order."""
    _, fn = _resolve(family)
    blocks: dict = {}
    for g in cls.members:
        blocks.setdefault(_value_key(fn(g)), []).append(g)
    return list(blocks.values())


@dataclass(frozen=True)
class WitnessPair:
    triple: SimilarityTriple
    g1: Graph
    g2: Graph
    left_values: tuple  # (value on g1, value on g2) under the left family
    right_values: tuple

    def to_json_dict(self) -> dict:
        return {
            "class": {"n": self.triple.n, "m": self.triple.m,
                      "k": self.triple.k},
            "g1": graph_to_graph6(self.g1),
            "g2": graph_to_graph6(self.g2),
            "val1_left": _value_json(self.left_values[0]),
            "val2_left": _value_json(self.left_values[1]),
            "val1_right": _value_json(self.right_values[0]),
            "val2_right": _value_json(self.right_values[1]),
        }


def _value_json(value: Union[IntPoly, MultiPoly]):
    if isinstance(value, IntPoly):
        return {"basis": value.basis, "coeffs": [str(c) for c in value.coeffs]}
    return {"arity": value.arity,
            "terms": [{"exp": list(e), "coeff": str(c)}
                      for e, c in value.terms]}


def dp_transfer(p: Family, q: Family, cls: SimilarityClass
                ) -> tuple[bool, Optional[WitnessPair]]:
    """Does Q-equality force P-equality on this class?

    Returns (True, None) or (False, first violating pair in member order):
    two similar graphs with equal Q-value and different P-value.
    """
    _, pf = _resolve(p)
    _, qf = _resolve(q)
    q_blocks: dict = {}
    p_values: dict = {}
    for g in cls.members:
        q_blocks.setdefault(_value_key(qf(g)), []).append(g)
        p_values[g] = pf(g)
    for block in q_blocks.values():
        first = block[0]
        for other in block[1:]:
            if _value_key(p_values[first]) != _value_key(p_values[other]):
                return False, WitnessPair(
                    triple=cls.triple, g1=first, g2=other,
                    left_values=(p_values[first], p_values[other]),
                    right_values=(qf(first), qf(other)))
    return True, None


RELATIONS = ("equivalent", "left-refines-right", "right-refines-left",
             "incomparable")


@dataclass(frozen=True)
class EquivalenceVerdict:
    left: str
    right: str
    relation: str
    witnesses: tuple[WitnessPair, ...]

    def to_json(self) -> str:
        return json.dumps({
            "left": self.left,
            "right": self.right,
            "relation": self.relation,
            "witnesses": [w.to_json_dict() for w in self.witnesses],
        })


def dp_compare(left: Family, right: Family, nmax: int) -> EquivalenceVerdict:
    """Aggregate transfer in both directions over all classes with n <= nmax.

    left-refines-right means equality under the left family forces equality
    under the right one (the left partition is at least as fine) but not
    conversely; witnesses document each failed direction.
    """
    left_name, _ = _resolve(left)
    right_name, _ = _resolve(right)
    classes = similarity_classes(nmax)
    left_forces_right = True
    right_forces_left = True
    witnesses: list[WitnessPair] = []
    for cls in classes:
        if left_forces_right:
            ok, wit = dp_transfer(right, left, cls)
            if not ok:
                left_forces_right = False
                # witness stores left/right values in verdict orientation
                witnesses.append(WitnessPair(
                    triple=wit.triple, g1=wit.g1, g2=wit.g2,
                    left_values=wit.right_values,
                    right_values=wit.left_values))
        if right_forces_left:
            ok, wit = dp_transfer(left, right, cls)
            if not ok:
                right_forces_left = False
                witnesses.append(wit)
    if left_forces_right and right_forces_left:
        relation = "equivalent"
    elif left_forces_right:
        relation = "left-refines-right"
    elif right_forces_left:
        relation = "right-refines-left"
    else:
        relation = "incomparable"
    return EquivalenceVerdict(left=left_name, right=right_name,
                              relation=relation, witnesses=tuple(witnesses))


def find_collisions(family: Family, nmax: int
                    ) -> list[tuple[SimilarityClass, list[Graph]]]:
    """All non-singleton fibers: similar, non-isomorphic, equal-value graphs."""
    out = []
    for cls in similarity_classes(nmax):
        if len(cls.members) < 2:
            continue
        for block in value_partition(family, cls):
            if len(block) >= 2:
                out.append((cls, block))
    return out
