"""A fixed corpus of small categories, plus seeded random posets and monoids."""
from __future__ import annotations

import random
from itertools import combinations, permutations

from .fincat import FinCat, close_generators, opposite, product_cat

DEFAULT_SEEDS = (0, 1, 2, 3, 4, 5)


def poset_category(elements, leq, name: str = "") -> FinCat:
    """The category of a preorder given by a reflexive-transitive relation.

    ``leq`` is any iterable of pairs; it is closed up before use.
    """
    elements = list(elements)
    rel = {(a, a) for a in elements} | set(leq)
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    order = {a: i for i, a in enumerate(elements)}
    pairs = sorted(rel, key=lambda p: (order[p[0]], order[p[1]]))
    morphisms = {(a, b): (a, b) for a, b in pairs}
    identities = {a: (a, a) for a in elements}
    composition = {((b, c), (a, b2)): (a, c)
                   for (a, b2) in pairs for (b, c) in pairs if b == b2}
    return FinCat(elements, morphisms, identities, composition, name=name)


def monoid_category(elements, mult, unit, name: str = "") -> FinCat:
    """One-object category; ``mult(g, f)`` is ``g o f``."""
    elements = list(elements)
    morphisms = {e: ("*", "*") for e in elements}
    composition = {(g, f): mult(g, f) for g in elements for f in elements}
    return FinCat(["*"], morphisms, {"*": unit}, composition, name=name)


def cyclic_monoid(n: int) -> FinCat:
    return monoid_category([f"g{i}" for i in range(n)],
                           lambda g, f: f"g{(int(g[1:]) + int(f[1:])) % n}", "g0", name=f"Z/{n}")


def transformation_monoid(functions, name: str = "") -> FinCat:
    """Monoid generated under composition by maps of ``{0..k-1}`` given as tuples."""
    functions = [tuple(f) for f in functions]
    k = len(functions[0]) if functions else 0
    ident = tuple(range(k))
    elems = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for f in frontier:
            for g in functions:
                h = tuple(g[f[i]] for i in range(k))
                if h not in seen:
                    seen.add(h)
                    elems.append(h)
                    nxt.append(h)
        frontier = nxt
    label = {f: "t" + "".join(map(str, f)) for f in elems}
    back = {v: f for f, v in label.items()}

    def mult(g, f):
        gg, ff = back[g], back[f]
        return label[tuple(gg[ff[i]] for i in range(k))]

    return monoid_category([label[f] for f in elems], mult, label[ident], name=name)


def random_poset(seed: int, max_size: int = 5) -> FinCat:
    rng = random.Random(seed)
    n = rng.randint(3, max_size)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    return poset_category(range(n), pairs, name=f"random_poset_{seed}")


def random_monoid(seed: int, points: int = 3, max_size: int = 6) -> FinCat:
    """A transformation monoid from one or two random self-maps, at most ``max_size`` elements."""
    rng = random.Random(seed)
    while True:
        gens = [tuple(rng.randrange(points) for _ in range(points))
                for _ in range(rng.randint(1, 2))]
        M = transformation_monoid(gens, name=f"random_monoid_{seed}")
        if len(M.morphisms) <= max_size:
            return M


def reflexive_pair() -> FinCat:
    return close_generators(
        ["A", "B"], {"h": ("A", "B"), "k": ("A", "B"), "m": ("B", "A")},
        {("h", "m"): (), ("k", "m"): ()}, name="reflexive_pair",
    )


def named_categories() -> dict[str, FinCat]:
    arrow = poset_category([0, 1], [(0, 1)], name="arrow")
    idem = monoid_category(["1", "e"], lambda g, f: "1" if g == f == "1" else "e", "1",
                           name="idempotent")
    left_zero = monoid_category(
        ["1", "a", "b"], lambda g, f: f if g == "1" else g, "1", name="left_zero")
    cats = {
        "empty": FinCat([], {}, {}, {}, name="empty"),
        "terminal": poset_category(["*"], [], name="terminal"),
        "arrow": arrow,
        "discrete_2": poset_category([0, 1], [], name="discrete_2"),
        "discrete_3": poset_category([0, 1, 2], [], name="discrete_3"),
        "chain_3": poset_category([0, 1, 2], [(0, 1), (1, 2)], name="chain_3"),
        "chain_4": poset_category([0, 1, 2, 3], [(0, 1), (1, 2), (2, 3)], name="chain_4"),
        "span": poset_category(["a", "b", "c"], [("a", "b"), ("a", "c")], name="span"),
        "cospan": poset_category(["b", "c", "a"], [("b", "a"), ("c", "a")], name="cospan"),
        "join_fan": poset_category(
            ["x", "y", "z", "xy", "xz", "yz", "top"],
            [("x", "xy"), ("y", "xy"), ("x", "xz"), ("z", "xz"), ("y", "yz"), ("z", "yz"),
             ("xy", "top"), ("xz", "top"), ("yz", "top")], name="join_fan"),
        "diamond": poset_category([0, 1, 2, 3], [(0, 1), (0, 2), (1, 3), (2, 3)], name="diamond"),
        "zigzag": poset_category(["a", "b", "c", "d", "e"],
                                 [("a", "b"), ("c", "b"), ("c", "d"), ("e", "d")], name="zigzag"),
        "circle_poset": poset_category(["a", "b", "c", "d"],
                                       [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
                                       name="circle_poset"),
        "parallel_pair": close_generators(["A", "B"], {"f": ("A", "B"), "g": ("A", "B")},
                                          name="parallel_pair"),
        "reflexive_pair": reflexive_pair(),
        "coreflexive_pair": _renamed(opposite(reflexive_pair()), "coreflexive_pair"),
        "split_idempotent": close_generators(["A", "B"], {"r": ("A", "B"), "s": ("B", "A")},
                                             {("r", "s"): ()}, name="split_idempotent"),
        "Z/2": cyclic_monoid(2),
        "Z/3": cyclic_monoid(3),
        "idempotent": idem,
        "left_zero": left_zero,
        "arrow_squared": _renamed(product_cat(arrow, arrow), "arrow_squared"),
        "Z/2_x_arrow": _renamed(product_cat(cyclic_monoid(2), arrow), "Z/2_x_arrow"),
        "idempotent_x_arrow": _renamed(product_cat(idem, arrow), "idempotent_x_arrow"),
    }
    return cats


def _renamed(C: FinCat, name: str) -> FinCat:
    C.name = name
    return C


def corpus(seeds=DEFAULT_SEEDS) -> dict[str, FinCat]:
    """Named categories followed by seeded random posets and monoids."""
    cats = named_categories()
    for s in seeds:
        P = random_poset(s)
        cats[P.name] = P
    for s in seeds[:4]:
        M = random_monoid(s)
        cats[M.name] = M
    return cats


# -- join-semilattices --------------------------------------------------------

def _transitive(n: int, rel: set) -> bool:
    return all((a, c) in rel for (a, b) in rel for (b2, c) in rel if b == b2)


def _is_join_semilattice(n: int, rel: set) -> bool:
    leq = rel | {(a, a) for a in range(n)}
    for a, b in combinations(range(n), 2):
        ubs = [c for c in range(n) if (a, c) in leq and (b, c) in leq]
        least = [c for c in ubs if all((c, u) in leq for u in ubs)]
        if not least:
            return False
    return True


def _canonical(n: int, rel: set) -> tuple:
    return min(tuple(sorted((p[a], p[b]) for a, b in rel)) for p in permutations(range(n)))


def join_semilattices(max_size: int = 5) -> list[FinCat]:
    """Every finite join-semilattice with 1..max_size elements, up to isomorphism.

    Each poset has a linear extension, so it suffices to search strict
    orders contained in ``i < j``.
    """
    out = []
    for n in range(1, max_size + 1):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        seen = set()
        for mask in range(1 << len(pairs)):
            rel = {pairs[b] for b in range(len(pairs)) if mask >> b & 1}
            if not _transitive(n, rel) or not _is_join_semilattice(n, rel):
                continue
            key = _canonical(n, rel)
            if key in seen:
                continue
            seen.add(key)
            out.append(poset_category(range(n), sorted(rel), name=f"join_{n}_{len(seen)}"))
    return out
