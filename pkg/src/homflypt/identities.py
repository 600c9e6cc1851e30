"""The decomposition-sum invariant F and exact coefficient-identity checks.

For a link with components indexed by {1..L}, write H(S) for the unframed
invariant of the sublink on a component subset S (so H = z**(-|S|) times
the framed invariant).  The intermediate invariant is

    F = sum over l = 1..L of (-1)**(l-1) / l *
        sum over ordered decompositions of {1..L} into l nonempty disjoint
        blocks I_1..I_l of the product H(I_1) * ... * H(I_l).

F vanishes on split unions of knots and its low z-coefficients vanish in
general, which forces a family of exact identities on the coefficient
polynomials h and p of the link and its sublinks.  Each identity here is
checked by exact polynomial equality; there is no tolerance anywhere.

Identity ids (also the CLI vocabulary):

* ``prop31``  - the z-coefficients of F at z**(2g-L) vanish for g = 0..L-2;
* ``thm13``   - h[g] of the link equals the alternating decomposition sum of
                sublink h-coefficients, for each g = 0..L-2;
* ``thm14``   - the g = 0 coefficient factorizes over the components, in
                both the h-form and the p-form (with the linking-number
                twist t**(-2 lk));
* ``thm15``   - the g = 1 coefficient equals a pair sum over two-component
                sublinks minus (L-2) times a single-component correction,
                in both forms;
* ``skeinF``  - F(L+) - F(L-) = z * F(L0) at an inter-component crossing;
* ``splitF``  - F of a split union of two or more knots is zero.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .combinatorics import set_partitions
from .laurent import BivarLaurent, T, UnivarLaurentT
from .links import LinkDiagram
from .report import VerificationReport
from .skein import CoeffTable, SkeinEngine, coeff_table

__all__ = [
    "FValue",
    "NotInterComponent",
    "GOutOfRange",
    "intermediate_F",
    "f_coefficients",
    "verify_prop31",
    "verify_thm13",
    "verify_thm14",
    "verify_thm15",
    "verify_skein_F",
    "verify_split_F",
]

_T_FACTOR = T - T**-1


class NotInterComponent(ValueError):
    """The chosen crossing is not between two distinct components."""


class GOutOfRange(ValueError):
    """Coefficient index g outside the identity's admissible range."""


@dataclass(frozen=True)
class FValue:
    """F of a link with `components` components.

    The polynomial is z**(-components) times an element of Q[z**2, t^{+-1}];
    the constructor enforces that shape.
    """

    components: int
    poly: BivarLaurent

    def __post_init__(self):
        for (ez, _), _c in self.poly.terms():
            if ez < -self.components or (ez + self.components) % 2:
                raise ValueError(
                    f"F of an {self.components}-component link cannot have a z^{ez} term"
                )

    def coeff_at_g(self, g: int) -> UnivarLaurentT:
        """The z**(2g - L) coefficient."""
        return self.poly.coeff_of_z(2 * g - self.components)


def _subset_framed_values(
    diagram: LinkDiagram, engine: SkeinEngine
) -> dict[tuple[int, ...], BivarLaurent]:
    """Framed invariant of every nonempty component subset (2^L - 1 calls)."""
    indices = range(diagram.num_components)
    values: dict[tuple[int, ...], BivarLaurent] = {}
    for size in range(1, diagram.num_components + 1):
        for subset in itertools.combinations(indices, size):
            values[subset] = engine.framed_invariant(diagram.sublink(subset))
    return values


def _subset_tables(
    diagram: LinkDiagram, engine: SkeinEngine
) -> dict[tuple[int, ...], CoeffTable]:
    indices = range(diagram.num_components)
    tables: dict[tuple[int, ...], CoeffTable] = {}
    for size in range(1, diagram.num_components + 1):
        for subset in itertools.combinations(indices, size):
            tables[subset] = coeff_table(diagram.sublink(subset), engine=engine)
    return tables


def intermediate_F(
    diagram: LinkDiagram,
    engine: SkeinEngine | None = None,
) -> FValue:
    """Compute F by summing over component-set partitions.

    Ordered decompositions with the same underlying blocks contribute the
    same product, so each unordered partition into l blocks is counted once
    with the integer weight (-1)**(l-1) * (l-1)!.  Sublink values are
    computed once per subset and reused.
    """
    if diagram.num_components < 1:
        raise ValueError("F needs at least one component")
    eng = engine if engine is not None else SkeinEngine()
    framed = _subset_framed_values(diagram, eng)
    unframed = {s: v.shift(-len(s)) for s, v in framed.items()}
    total = BivarLaurent.zero()
    for blocks in set_partitions(range(diagram.num_components)):
        weight = (-1) ** (len(blocks) - 1) * math.factorial(len(blocks) - 1)
        product = BivarLaurent.one()
        for block in blocks:
            product = product * unframed[block]
        total = total + product * weight
    return FValue(diagram.num_components, total)


def f_coefficients(
    diagram: LinkDiagram,
    engine: SkeinEngine | None = None,
) -> dict[int, UnivarLaurentT]:
    """Nonzero coefficients of F by genus index: g -> z**(2g-L) coefficient.

    Absent keys are zero; for a knot this is exactly the h-table.
    """
    value = intermediate_F(diagram, engine=engine)
    out: dict[int, UnivarLaurentT] = {}
    for ez, coeff in value.poly.by_z():
        out[(ez + value.components) // 2] = coeff
    return out


def _context(diagram: LinkDiagram, label: str | None, **extra) -> dict:
    ctx = {
        "label": label or f"{diagram.num_components}-component diagram "
        f"with {diagram.num_crossings} crossings",
        "components": diagram.num_components,
        "writhe": diagram.writhe(),
        "total_linking": diagram.total_linking(),
    }
    ctx.update(extra)
    return ctx


def _poly_report(identity: str, lhs, rhs, context: dict) -> VerificationReport:
    residual = lhs - rhs
    return VerificationReport(identity, not residual, lhs, rhs, residual, context)


def verify_prop31(
    diagram: LinkDiagram,
    engine: SkeinEngine | None = None,
    label: str | None = None,
) -> VerificationReport:
    """Vanishing of F below z**(L-2): coefficients at g = 0..L-2 are zero."""
    L = diagram.num_components
    if L < 2:
        raise ValueError("the vanishing check needs at least 2 components")
    value = intermediate_F(diagram, engine=engine)
    low = [value.coeff_at_g(g) for g in range(L - 1)]
    lhs = BivarLaurent.zero()
    for g, coeff in enumerate(low):
        lhs = lhs + coeff.to_bivar(2 * g - L)
    min_deg = value.poly.min_z_degree()
    context = _context(
        diagram,
        label,
        vanishing_range=f"g=0..{L - 2}",
        min_z_degree=min_deg if min_deg is not None else "none (F = 0)",
    )
    return _poly_report("prop31", lhs, BivarLaurent.zero(), context)


def _thm13_rhs(tables: dict[tuple[int, ...], CoeffTable], L: int, g: int) -> UnivarLaurentT:
    """Alternating decomposition sum of sublink h-coefficients.

    Grouped over unordered partitions: each partition into l blocks stands
    for l! ordered decompositions, so its weight is (-1)**l * (l-1)!.
    """
    total = UnivarLaurentT.zero()
    for blocks in set_partitions(range(L)):
        l = len(blocks)
        if l < 2:
            continue
        weight = (-1) ** l * math.factorial(l - 1)
        for assignment in _compositions(g, l):
            product = UnivarLaurentT.one()
            for block, gs in zip(blocks, assignment):
                product = product * tables[block].h_at(gs)
                if product.is_zero():
                    break
            total = total + product * weight
    return total


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def verify_thm13(
    diagram: LinkDiagram,
    g: int,
    engine: SkeinEngine | None = None,
    label: str | None = None,
) -> VerificationReport:
    """h[g] of the link against the decomposition sum, for 0 <= g <= L-2."""
    L = diagram.num_components
    if L < 2:
        raise ValueError("the decomposition identity needs at least 2 components")
    if not 0 <= g <= L - 2:
        raise GOutOfRange(f"g must lie in 0..{L - 2}, got {g}")
    eng = engine if engine is not None else SkeinEngine()
    tables = _subset_tables(diagram, eng)
    full = tuple(range(L))
    lhs = tables[full].h_at(g)
    rhs = _thm13_rhs(tables, L, g)
    return _poly_report("thm13", lhs, rhs, _context(diagram, label, g=g))


def verify_thm14(
    diagram: LinkDiagram,
    engine: SkeinEngine | None = None,
    label: str | None = None,
) -> VerificationReport:
    """Factorization of the g = 0 coefficient over the components.

    h-form: h[0] of the link equals the product of the components' h[0].
    p-form: p[0] equals t**(-2 lk) (t - t^-1)**(L-1) times the product of
    the components' p[0].  Both are checked; the reported lhs/rhs/residual
    are the h-form, the p-form sides travel in the context.
    """
    L = diagram.num_components
    if L < 1:
        raise ValueError("needs at least one component")
    eng = engine if engine is not None else SkeinEngine()
    tables = _subset_tables(diagram, eng)
    full = tuple(range(L))

    h_lhs = tables[full].h_at(0)
    h_rhs = UnivarLaurentT.one()
    for alpha in range(L):
        h_rhs = h_rhs * tables[(alpha,)].h_at(0)

    lk = diagram.total_linking()
    p_lhs = tables[full].p_at(0)
    p_rhs = (_T_FACTOR ** (L - 1)).coeff_of_z(0).shift(-2 * lk)
    for alpha in range(L):
        p_rhs = p_rhs * tables[(alpha,)].p_at(0)

    h_pass = h_lhs == h_rhs
    p_pass = p_lhs == p_rhs
    context = _context(
        diagram,
        label,
        g=0,
        h_form_pass=h_pass,
        p_form_pass=p_pass,
        p_lhs=p_lhs,
        p_rhs=p_rhs,
        p_residual=p_lhs - p_rhs,
    )
    return VerificationReport(
        "thm14", h_pass and p_pass, h_lhs, h_rhs, h_lhs - h_rhs, context
    )


def verify_thm15(
    diagram: LinkDiagram,
    engine: SkeinEngine | None = None,
    label: str | None = None,
) -> VerificationReport:
    """Pair-sum expression for the g = 1 coefficient, in both forms.

    h-form:
        h[1](link) = sum over pairs b < c of h[1](sublink {b,c}) times the
        product of h[0] over the other components, minus (L-2) times the
        sum over b of h[1](component b) times the product of h[0] over the
        other components.
    p-form: same shape with p-coefficients, a t**(2 lk(pair)) twist inside
    the pair sum, a global t**(-2 lk) factor, and (t - t^-1) powers L-2 and
    L-1 on the two sums.
    """
    L = diagram.num_components
    if L < 2:
        raise ValueError("the pair-sum identity needs at least 2 components")
    eng = engine if engine is not None else SkeinEngine()
    tables = _subset_tables(diagram, eng)
    full = tuple(range(L))

    h_lhs = tables[full].h_at(1)
    h_pairs = UnivarLaurentT.zero()
    for beta, gamma in itertools.combinations(range(L), 2):
        term = tables[(beta, gamma)].h_at(1)
        for alpha in range(L):
            if alpha in (beta, gamma):
                continue
            term = term * tables[(alpha,)].h_at(0)
        h_pairs = h_pairs + term
    h_single = UnivarLaurentT.zero()
    for beta in range(L):
        term = tables[(beta,)].h_at(1)
        for alpha in range(L):
            if alpha == beta:
                continue
            term = term * tables[(alpha,)].h_at(0)
        h_single = h_single + term
    h_rhs = h_pairs - h_single * (L - 2)

    lk = diagram.total_linking()
    tfac = _T_FACTOR.coeff_of_z(0)
    p_lhs = tables[full].p_at(1)
    p_pairs = UnivarLaurentT.zero()
    for beta, gamma in itertools.combinations(range(L), 2):
        pair_lk = diagram.linking_number(beta, gamma)
        term = tables[(beta, gamma)].p_at(1).shift(2 * pair_lk)
        for alpha in range(L):
            if alpha in (beta, gamma):
                continue
            term = term * tables[(alpha,)].p_at(0)
        p_pairs = p_pairs + term
    p_single = UnivarLaurentT.zero()
    for beta in range(L):
        term = tables[(beta,)].p_at(1)
        for alpha in range(L):
            if alpha == beta:
                continue
            term = term * tables[(alpha,)].p_at(0)
        p_single = p_single + term
    p_rhs = (p_pairs * tfac ** (L - 2) - p_single * tfac ** (L - 1) * (L - 2)).shift(-2 * lk)

    h_pass = h_lhs == h_rhs
    p_pass = p_lhs == p_rhs
    context = _context(
        diagram,
        label,
        g=1,
        h_form_pass=h_pass,
        p_form_pass=p_pass,
        p_lhs=p_lhs,
        p_rhs=p_rhs,
        p_residual=p_lhs - p_rhs,
    )
    return VerificationReport(
        "thm15", h_pass and p_pass, h_lhs, h_rhs, h_lhs - h_rhs, context
    )


def verify_skein_F(
    diagram: LinkDiagram,
    cid: int,
    engine: SkeinEngine | None = None,
    label: str | None = None,
) -> VerificationReport:
    """F(L+) - F(L-) = z * F(L0) at one inter-component crossing."""
    if diagram.is_self_crossing(cid):
        raise NotInterComponent(f"crossing {cid} is a self-crossing")
    eng = engine if engine is not None else SkeinEngine()
    if diagram.signs[cid] > 0:
        plus, minus = diagram, diagram.switch_crossing(cid)
    else:
        plus, minus = diagram.switch_crossing(cid), diagram
    zero_smoothing = diagram.smooth_crossing(cid)
    f_plus = intermediate_F(plus, engine=eng).poly
    f_minus = intermediate_F(minus, engine=eng).poly
    f_zero = intermediate_F(zero_smoothing, engine=eng).poly
    lhs = f_plus - f_minus
    rhs = f_zero.shift(1)
    return _poly_report(
        "skeinF", lhs, rhs, _context(diagram, label, crossing=cid)
    )


def verify_split_F(
    knots: list[LinkDiagram],
    engine: SkeinEngine | None = None,
    label: str | None = None,
) -> VerificationReport:
    """F of the split union of two or more knots equals zero."""
    if len(knots) < 2:
        raise ValueError("need at least two knots")
    for k, d in enumerate(knots):
        if d.num_components != 1:
            raise ValueError(f"input {k} has {d.num_components} components, expected a knot")
    union = knots[0]
    for d in knots[1:]:
        union = union.disjoint_union(d)
    value = intermediate_F(union, engine=engine)
    context = _context(union, label, factors=len(knots))
    return _poly_report("splitF", value.poly, BivarLaurent.zero(), context)
