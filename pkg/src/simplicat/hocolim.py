"""Weighted colimits of simplicial-set valued diagrams and homotopy colimits.

A weighted colimit is computed as the coend: the disjoint union of the
products ``W(d) x D(d)`` modulo ``(W(f) w, x) ~ (w, D(f) x)`` for every
``f: d -> d'``.  The homotopy colimit uses the weight
``d |-> B((d | C)^op)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .fincat import (
    FinCat,
    FunctorData,
    nerve,
    nerve_map,
    opposite,
    product_cat,
    under_category,
    under_functor,
)
from .simpset import (
    CoproductSSet,
    DegenerateRef,
    SimplicialMap,
    TruncatedSSet,
    coproduct_of,
    descend,
    discrete_sset,
    identity_map,
    pair_maps,
    pair_ref,
    product,
    product_cells,
    product_map,
    projection,
    quotient,
    standard_simplex,
)
from .verdict import Verdict
from .weq import DEFAULT_BUDGET, certify_weq


class DiagramError(ValueError):
    pass


@dataclass
class DiagramData:
    """A functor from ``shape`` to truncated simplicial sets."""

    shape: FinCat
    values: dict
    actions: dict

    @property
    def level(self) -> int:
        return min((X.level for X in self.values.values()), default=0)

    def validate(self) -> list[str]:
        return _validate_functor(self.shape, self.values, self.actions, contravariant=False)

    def truncate(self, level: int) -> "DiagramData":
        if all(X.level <= level for X in self.values.values()):
            return self
        values = {d: X.truncate(level) for d, X in self.values.items()}
        actions = {
            f: SimplicialMap(values[self.shape.src(f)], values[self.shape.tgt(f)],
                             {x: m.assignment[x] for x in values[self.shape.src(f)].all_cells()})
            for f, m in self.actions.items()
        }
        return DiagramData(self.shape, values, actions)


@dataclass
class WeightData:
    """A functor from ``shape^op``; ``actions[f]`` for ``f: d -> d'`` maps ``W(d') -> W(d)``."""

    shape: FinCat
    values: dict
    actions: dict

    @property
    def level(self) -> int:
        return min((X.level for X in self.values.values()), default=0)

    def validate(self) -> list[str]:
        return _validate_functor(self.shape, self.values, self.actions, contravariant=True)


@dataclass
class NatTransData:
    source: DiagramData
    target: DiagramData
    components: dict

    def validate(self) -> list[str]:
        report = []
        C = self.source.shape
        for f, (a, b) in C.morphisms.items():
            lhs = self.components[b].compose(self.source.actions[f])
            rhs = self.target.actions[f].compose(self.components[a])
            if not lhs.equals(rhs):
                report.append(f"naturality square for {f!r} does not commute")
        return report


def _validate_functor(C: FinCat, values, actions, contravariant: bool) -> list[str]:
    report = []
    if set(values) != set(C.objects):
        report.append("values must be given for exactly the objects of the shape")
    if set(actions) != set(C.morphisms):
        report.append("actions must be given for exactly the morphisms of the shape")
    if report:
        return report
    levels = {X.level for X in values.values()}
    if len(levels) > 1:
        report.append(f"values have different truncation levels {sorted(levels)}")
    for f, (a, b) in C.morphisms.items():
        src, tgt = (values[b], values[a]) if contravariant else (values[a], values[b])
        m = actions[f]
        if not (m.source.same_as(src) and m.target.same_as(tgt)):
            report.append(f"action of {f!r} has the wrong source or target")
            continue
        report += [f"action of {f!r}: {msg}" for msg in m.validate()]
    if report:
        return report
    for a in C.objects:
        m = actions[C.identities[a]]
        if not m.equals(identity_map(values[a])):
            report.append(f"identity of {a!r} does not act as the identity")
    for (g, f), h in C.composition.items():
        if contravariant:
            comp = actions[f].compose(actions[g])
        else:
            comp = actions[g].compose(actions[f])
        if not comp.equals(actions[h]):
            report.append(f"action of {g!r} o {f!r} is not the composite action")
    return report


# -- standard diagrams and weights ------------------------------------------

def constant_diagram(C: FinCat, X: TruncatedSSet) -> DiagramData:
    ident = identity_map(X)
    return DiagramData(C, {d: X for d in C.objects}, {f: ident for f in C.morphisms})


def point_diagram(C: FinCat, level: int) -> DiagramData:
    return constant_diagram(C, standard_simplex(0, level))


def representable_diagram(C: FinCat, a, level: int) -> DiagramData:
    """``hom(a, -)`` as a diagram of discrete simplicial sets."""
    values = {d: discrete_sset(C.hom(a, d), level) for d in C.objects}
    actions = {
        f: SimplicialMap(values[s], values[t],
                         {u: DegenerateRef(C.compose(f, u)) for u in C.hom(a, s)})
        for f, (s, t) in C.morphisms.items()
    }
    return DiagramData(C, values, actions)


def representable_weight(C: FinCat, d0, level: int) -> WeightData:
    """``hom(-, d0)`` as a weight of discrete simplicial sets."""
    values = {d: discrete_sset(C.hom(d, d0), level) for d in C.objects}
    actions = {
        f: SimplicialMap(values[t], values[s],
                         {u: DegenerateRef(C.compose(u, f)) for u in C.hom(t, d0)})
        for f, (s, t) in C.morphisms.items()
    }
    return WeightData(C, values, actions)


def constant_weight(C: FinCat, level: int) -> WeightData:
    pt = standard_simplex(0, level)
    ident = identity_map(pt)
    return WeightData(C, {d: pt for d in C.objects}, {f: ident for f in C.morphisms})


def hocolim_weight(C: FinCat, level: int) -> WeightData:
    """The weight ``d |-> B((d | C)^op)``."""
    unders = {d: opposite(under_category(C, d)) for d in C.objects}
    values = {d: nerve(unders[d], level) for d in C.objects}
    actions = {}
    for f, (s, t) in C.morphisms.items():
        F = under_functor(C, f, unders[t], unders[s])
        actions[f] = nerve_map(F, values[t], values[s])
    return WeightData(C, values, actions)


# -- the coend -------------------------------------------------------------

@dataclass
class WeightedColimit:
    """The coend together with the data needed to map out of it."""

    weight: WeightData
    diagram: DiagramData
    products: dict
    coproduct: CoproductSSet
    projection: SimplicialMap
    inclusions: dict = field(default_factory=dict)

    @property
    def space(self) -> TruncatedSSet:
        return self.projection.target

    def descend(self, cocone: dict) -> SimplicialMap:
        """Map out of the coend induced by maps ``W(d) x D(d) -> Z``.

        Raises ``SimplicialError`` when the maps do not form a cocone.
        """
        target = next(iter(cocone.values())).target if cocone else self.space
        assignment = {}
        for cell in self.coproduct.all_cells():
            d, c = cell
            assignment[cell] = cocone[d].assignment[c]
        return descend(self.projection, SimplicialMap(self.coproduct, target, assignment))

    def coend_violations(self) -> list[str]:
        """Check ``incl_d(W(f) w, x) == incl_d'(w, D(f) x)`` on every cell."""
        W, D = self.weight, self.diagram
        report = []
        for f, (d, d2) in W.shape.morphisms.items():
            Wf, Df = W.actions[f], D.actions[f]
            for _, w, x in product_cells(W.values[d2], D.values[d]):
                lhs = self.inclusions[d](pair_ref(W.values[d], D.values[d], Wf(w), x))
                rhs = self.inclusions[d2](pair_ref(W.values[d2], D.values[d2], w, Df(x)))
                if lhs != rhs:
                    report.append(f"coend relation fails for {f!r} at {(w, x)!r}")
        return report


def weighted_colimit(W: WeightData, D: DiagramData) -> WeightedColimit:
    if W.shape is not D.shape and not W.shape.same_as(D.shape):
        raise DiagramError("weight and diagram have different shapes")
    C = D.shape
    level = min(W.level, D.level)
    if D.level > level:
        D = D.truncate(level)
    products = {d: product(W.values[d], D.values[d]) for d in C.objects}
    P = coproduct_of(products, level)

    def tag(d, ref: DegenerateRef) -> DegenerateRef:
        return DegenerateRef((d, ref.base), ref.degeneracies)

    relation = []
    for f, (d, d2) in C.morphisms.items():
        if C.is_identity(f):
            continue
        Wf, Df = W.actions[f], D.actions[f]
        for k, w, x in product_cells(W.values[d2], D.values[d], level):
            lhs = tag(d, products[d].pair(Wf(w), x))
            rhs = tag(d2, products[d2].pair(w, Df(x)))
            relation.append((lhs, rhs))
    Q, proj = quotient(P, relation)
    colim = WeightedColimit(W, D, products, P, proj)
    for d in C.objects:
        colim.inclusions[d] = proj.compose(P.inclusion(d))
    return colim


def hocolim(D: DiagramData, level: int, weight: WeightData | None = None) -> WeightedColimit:
    level = min(level, D.level)
    if weight is None:
        weight = hocolim_weight(D.shape, level)
    return weighted_colimit(weight, D.truncate(level))


def hocolim_s(D: DiagramData, level: int) -> TruncatedSSet:
    """The simplicial homotopy colimit of ``D`` truncated at ``level``."""
    return hocolim(D, level).space


def nerve_projection(colim: WeightedColimit, target: TruncatedSSet | None = None) -> SimplicialMap:
    """``hocolim_s D -> B(C^op)`` forgetting the diagram coordinate."""
    C = colim.diagram.shape
    level = colim.space.level
    Cop = opposite(C)
    if target is None:
        target = nerve(Cop, level)
    cocone = {}
    for d in C.objects:
        U = opposite(under_category(C, d))
        forget = FunctorData(U, Cop, {u: C.tgt(u) for u in U.objects},
                             {m: m[0] for m in U.morphisms})
        P = colim.products[d]
        to_nerve = nerve_map(forget, colim.weight.values[d], target)
        cocone[d] = to_nerve.compose(projection(P, 0))
    return colim.descend(cocone)


# -- products of diagrams --------------------------------------------------

def tensor_diagrams(D1: DiagramData, D2: DiagramData) -> DiagramData:
    """Objectwise product ``d |-> D1(d) x D2(d)``."""
    if D1.shape is not D2.shape and not D1.shape.same_as(D2.shape):
        raise DiagramError("diagrams have different shapes")
    C = D1.shape
    values = {d: product(D1.values[d], D2.values[d]) for d in C.objects}
    actions = {
        f: product_map(D1.actions[f], D2.actions[f], values[s], values[t])
        for f, (s, t) in C.morphisms.items()
    }
    return DiagramData(C, values, actions)


def tensor_projection(T: DiagramData, D: DiagramData, side: int) -> NatTransData:
    """Projection of ``D1 (x) D2`` onto one factor."""
    return NatTransData(T, D, {d: projection(T.values[d], side) for d in T.shape.objects})


def induced_between(t: NatTransData, src: WeightedColimit, tgt: WeightedColimit) -> SimplicialMap:
    cocone = {}
    for d in t.source.shape.objects:
        Wd = src.weight.values[d]
        step = product_map(identity_map(Wd), t.components[d], src.products[d], tgt.products[d])
        cocone[d] = tgt.inclusions[d].compose(step)
    return src.descend(cocone)


def induced_map(t: NatTransData, level: int) -> SimplicialMap:
    """The map of homotopy colimits induced by a natural transformation."""
    bad = t.validate()
    if bad:
        raise DiagramError(bad[0])
    W = hocolim_weight(t.source.shape, min(level, t.source.level, t.target.level))
    return induced_between(t, hocolim(t.source, level, W), hocolim(t.target, level, W))


def comparison_to_product(D1: DiagramData, D2: DiagramData, level: int,
                          n: int = 2, budget: int = DEFAULT_BUDGET
                          ) -> tuple[SimplicialMap, Verdict]:
    """``hocolim(D1 (x) D2) -> hocolim D1 x hocolim D2`` and its certificate."""
    T = tensor_diagrams(D1, D2)
    level = min(level, T.level)
    W = hocolim_weight(D1.shape, level)
    src = hocolim(T, level, W)
    h1 = hocolim(D1, level, W)
    h2 = hocolim(D2, level, W)
    phi1 = induced_between(tensor_projection(T, D1, 0), src, h1)
    phi2 = induced_between(tensor_projection(T, D2, 1), src, h2)
    comparison = pair_maps(phi1, phi2, product(h1.space, h2.space))
    n = min(level - 1, n)
    return comparison, certify_weq(comparison, n, budget)


def outer_product(D1: DiagramData, D2: DiagramData) -> DiagramData:
    """``(d1, d2) |-> D1(d1) x D2(d2)`` over the product of the shapes."""
    C = product_cat(D1.shape, D2.shape)
    values = {(a, b): product(D1.values[a], D2.values[b]) for a, b in C.objects}
    actions = {
        (f, g): product_map(D1.actions[f], D2.actions[g], values[s], values[t])
        for (f, g), (s, t) in C.morphisms.items()
    }
    return DiagramData(C, values, actions)


def distributivity_map(D1: DiagramData, D2: DiagramData, level: int,
                       n: int = 2, budget: int = DEFAULT_BUDGET
                       ) -> tuple[SimplicialMap, Verdict]:
    """``hocolim(D1 x D2) -> hocolim D1 x hocolim D2`` for diagrams on different shapes."""
    D12 = outer_product(D1, D2)
    level = min(level, D12.level)
    src = hocolim(D12, level)
    h1, h2 = hocolim(D1, level), hocolim(D2, level)
    target = product(h1.space, h2.space)
    C1, C2, C12 = D1.shape, D2.shape, D12.shape
    cocone = {}
    for d in C12.objects:
        d1, d2 = d
        U12 = opposite(under_category(C12, d))
        legs = []
        for side, (Ci, di, hi, Di) in enumerate(((C1, d1, h1, D1), (C2, d2, h2, D2))):
            Ui = opposite(under_category(Ci, di))
            F = FunctorData(U12, Ui, {u: u[side] for u in U12.objects},
                            {m: (m[0][side], m[1][side], m[2][side]) for m in U12.morphisms})
            w_map = nerve_map(F, src.weight.values[d], hi.weight.values[di])
            P12 = src.products[d]
            value_proj = projection(D12.values[d], side)
            step = product_map(w_map, value_proj, P12, hi.products[di])
            legs.append(hi.inclusions[di].compose(step))
        cocone[d] = pair_maps(legs[0], legs[1], target)
    comparison = src.descend(cocone)
    n = min(level - 1, n)
    return comparison, certify_weq(comparison, n, budget)


def value_inclusion(colim: WeightedColimit, d, vertex) -> SimplicialMap:
    """``D(d) -> colim`` through a vertex ``w`` of ``W(d)``: ``x |-> (s..s w, x)``."""
    X = colim.diagram.values[d]
    P = colim.products[d]
    assignment = {}
    for x in X.all_cells():
        k = X.dim(x)
        w = DegenerateRef(vertex, tuple(range(k - 1, -1, -1)))
        assignment[x] = colim.inclusions[d](P.pair(w, DegenerateRef(x)))
    return SimplicialMap(X, colim.space, assignment)


def coyoneda_map(colim: WeightedColimit, d0) -> SimplicialMap:
    """``D(d0) -> colim`` through ``id_{d0}``; an isomorphism for the weight ``hom(-, d0)``."""
    return value_inclusion(colim, d0, colim.diagram.shape.identities[d0])


def over_diagram(C: FinCat, level: int) -> DiagramData:
    """``d |-> B(C | d)``, functorial by postcomposition; a non-discrete test diagram."""
    W = hocolim_weight(opposite(C), level)
    return DiagramData(C, W.values, W.actions)
