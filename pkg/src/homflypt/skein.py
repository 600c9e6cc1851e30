"""Skein-recursion engine for the framed HOMFLY-PT invariant.

The framed invariant of a diagram, written Hf here, lives in Z[z^2, t^{+-1}]
and is computed by resolving crossings until the diagram is descending:

* a diagram is *descending* when a based, ordered traversal meets every
  crossing first on its over-strand; its value is
  ``t**(sum of self-writhes) * (t - t^-1)**(number of components)``
  (the empty diagram gives 1);
* otherwise, at the first violating crossing c,
  ``Hf(L+) - Hf(L-) = z**(2*eps) * Hf(L0)`` with eps = 0 for a
  self-crossing and eps = 1 for a crossing between two components,
  so the diagram is rewritten in terms of its switched and smoothed
  resolutions, which strictly reduce (crossing count, violation count).

The ambient HOMFLY-PT polynomial is recovered as
``P = t**(-writhe) * Hf / (t - t^-1) / z**(L-1)`` via the coefficient table.

Both a memoized engine and a deliberately separate cache-free brute-force
resolver are exposed; the test suite asserts their agreement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .laurent import BivarLaurent, UnivarLaurentT, T, Z
from .links import OVER, LinkDiagram

__all__ = [
    "DEFAULT_MAX_NODES",
    "ResourceLimitExceeded",
    "SkeinEngine",
    "CoeffTable",
    "is_descending",
    "descending_value",
    "framed_homfly",
    "framed_homfly_bruteforce",
    "coeff_table",
    "homfly",
]

DEFAULT_MAX_NODES = 10_000_000

_T_FACTOR = T - T**-1  # t - t^-1
_Z2 = Z * Z


class ResourceLimitExceeded(RuntimeError):
    """The configured resolution-node budget was exhausted."""


def is_descending(diagram: LinkDiagram) -> tuple[bool, Optional[int]]:
    """Check descending-ness under the based, ordered traversal.

    Returns ``(True, None)`` or ``(False, cid)`` where `cid` is the first
    crossing (in traversal order) met on its under-strand first.
    """
    seen: set[int] = set()
    for comp in diagram.components:
        for cid, role in comp:
            if cid in seen:
                continue
            if role != OVER:
                return False, cid
            seen.add(cid)
    return True, None


_UNLINK_VALUES: dict[int, BivarLaurent] = {0: BivarLaurent.one()}


def _unlink_value(components: int) -> BivarLaurent:
    """(t - t^-1)**components, cached (hit on every descending leaf)."""
    value = _UNLINK_VALUES.get(components)
    if value is None:
        value = _unlink_value(components - 1) * _T_FACTOR
        _UNLINK_VALUES[components] = value
    return value


def descending_value(diagram: LinkDiagram) -> BivarLaurent:
    """Value of a descending diagram: framing factor times unlink value."""
    framing = sum(diagram.self_writhe(i) for i in range(diagram.num_components))
    return _unlink_value(diagram.num_components).shift(0, framing)


class SkeinEngine:
    """Memoized resolver for the framed invariant.

    The memo table is keyed on `LinkDiagram.canonical_key`, so equal
    diagrams up to crossing relabeling share one entry.  `max_nodes` bounds
    the number of expanded (non-memoized) resolution nodes; exceeding it
    raises ResourceLimitExceeded.  `cache_cap` bounds the table size; once
    full, further values are recomputed rather than stored.
    """

    def __init__(self, max_nodes: int | None = None, cache_cap: int = 1_000_000):
        self.max_nodes = DEFAULT_MAX_NODES if max_nodes is None else int(max_nodes)
        self.cache_cap = int(cache_cap)
        self.nodes = 0
        self._memo: dict[bytes, BivarLaurent] = {}

    def framed_invariant(self, diagram: LinkDiagram) -> BivarLaurent:
        key = diagram.canonical_key()
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise ResourceLimitExceeded(
                f"skein resolution exceeded {self.max_nodes} nodes"
            )
        descending, cid = is_descending(diagram)
        if descending:
            value = descending_value(diagram)
        else:
            eps_factor = BivarLaurent.one() if diagram.is_self_crossing(cid) else _Z2
            switched = self.framed_invariant(diagram.switch_crossing(cid))
            smoothed = self.framed_invariant(diagram.smooth_crossing(cid))
            if diagram.signs[cid] > 0:
                value = switched + eps_factor * smoothed
            else:
                value = switched - eps_factor * smoothed
        if len(self._memo) < self.cache_cap:
            self._memo[key] = value
        return value


def framed_homfly(diagram: LinkDiagram, max_nodes: int | None = None) -> BivarLaurent:
    """Framed invariant of a diagram via a fresh memoized engine."""
    return SkeinEngine(max_nodes=max_nodes).framed_invariant(diagram)


def framed_homfly_bruteforce(
    diagram: LinkDiagram, max_nodes: int | None = None
) -> BivarLaurent:
    """Cache-free full resolution; the independent oracle for the engine."""
    budget = DEFAULT_MAX_NODES if max_nodes is None else int(max_nodes)
    remaining = [budget]

    def resolve(d: LinkDiagram) -> BivarLaurent:
        remaining[0] -= 1
        if remaining[0] < 0:
            raise ResourceLimitExceeded(f"skein resolution exceeded {budget} nodes")
        descending, cid = is_descending(d)
        if descending:
            return descending_value(d)
        factor = BivarLaurent.one() if d.is_self_crossing(cid) else _Z2
        switched = resolve(d.switch_crossing(cid))
        smoothed = resolve(d.smooth_crossing(cid))
        if d.signs[cid] > 0:
            return switched + factor * smoothed
        return switched - factor * smoothed

    return resolve(diagram)


@dataclass(frozen=True)
class CoeffTable:
    """Coefficient polynomials of one link, indexed by the genus parameter g.

    ``h[g]`` is the z**(2g) coefficient of the framed invariant (an integer
    Laurent polynomial in t, sitting at z-power 2g-L in the unframed
    expansion); ``p[g]`` is the z**(2g+1-L) coefficient of the HOMFLY-PT
    polynomial.  The two are linked by
    ``h[g] == p[g] * t**writhe * (t - t^-1)`` for every g.
    """

    components: int
    writhe: int
    total_linking: int
    h: dict[int, UnivarLaurentT] = field(repr=False)
    p: dict[int, UnivarLaurentT] = field(repr=False)

    def h_at(self, g: int) -> UnivarLaurentT:
        return self.h.get(g, UnivarLaurentT.zero())

    def p_at(self, g: int) -> UnivarLaurentT:
        return self.p.get(g, UnivarLaurentT.zero())

    def genus_range(self) -> list[int]:
        return sorted(self.h)

    def to_json_dict(self) -> dict:
        return {
            "components": self.components,
            "writhe": self.writhe,
            "total_linking": self.total_linking,
            "h": {str(g): self.h[g].to_triples() for g in sorted(self.h)},
            "p": {str(g): self.p[g].to_triples() for g in sorted(self.p)},
        }


def coeff_table(diagram: LinkDiagram, engine: SkeinEngine | None = None) -> CoeffTable:
    """Extract the h/p coefficient table of a nonempty diagram."""
    if diagram.num_components == 0:
        raise ValueError("the empty diagram has no coefficient expansion")
    eng = engine if engine is not None else SkeinEngine()
    value = eng.framed_invariant(diagram)
    if not value.is_even_nonneg_in_z():
        raise ValueError(
            "framed invariant left Z[z^2, t^(+-1)]; the diagram data is not realizable"
        )
    w = diagram.writhe()
    h: dict[int, UnivarLaurentT] = {}
    p: dict[int, UnivarLaurentT] = {}
    for ez, coeff in value.by_z():
        g = ez // 2
        h[g] = coeff
        shifted = coeff.to_bivar().shift(0, -w)
        p[g] = shifted.divide_exact(_T_FACTOR).coeff_of_z(0)
    return CoeffTable(
        components=diagram.num_components,
        writhe=w,
        total_linking=diagram.total_linking(),
        h=h,
        p=p,
    )


def homfly(diagram: LinkDiagram, engine: SkeinEngine | None = None) -> BivarLaurent:
    """The HOMFLY-PT polynomial, assembled from the coefficient table."""
    table = coeff_table(diagram, engine=engine)
    total = BivarLaurent.zero()
    for g in table.genus_range():
        total = total + table.p[g].to_bivar(2 * g + 1 - table.components)
    return total
