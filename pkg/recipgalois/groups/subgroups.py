__doc__ = """Subgroups of S_2 wr S_n that surject onto S_n.

Every such subgroup H is generated by K = H n X together with lifts
(a, s) and (b, t) of the generators of S_n, and K is S_n-invariant. The
census runs over the invariant subspaces K and all a, b in X, keeps the
closures that surject onto S_n, and reduces them modulo conjugation by X
(conjugation by any other element can be absorbed into H itself).
"""
# ----------------------------------------------------------
# Outside imports
# ----------------------------------------------------------

import logging
import itertools as it
from collections import Counter, OrderedDict
from fractions import Fraction
from math import factorial

# ----------------------------------------------------------
# Local imports
# ----------------------------------------------------------

from ..utils import Bunch, ShapeError, ResourceError
from .wreath import (WreathElement, multiply, conjugate_element, embed_2n,
                     cycle_type, all_elements, group_order, sn_generators,
                     perm_sign)
from .subspaces import Subspace, invariant_subspaces

logger = logging.getLogger(__name__)

TAGS = ("FULL", "G1", "G2", "G3", "SN_PLAIN", "SN_TWISTED", "EXC_2S4", "OTHER")


def _parity(e):
    """sgn sigma written additively in F_2."""
    return 0 if perm_sign(e.sigma) == 1 else 1


#: Membership predicates of the named subgroups.
PREDICATES = OrderedDict([
    ("FULL", lambda e: True),
    ("G1", lambda e: e.weight % 2 == 0),
    ("G2", lambda e: e.weight % 2 == _parity(e)),
    ("G3", lambda e: e.weight in (0, e.n)),
    ("SN_PLAIN", lambda e: e.weight == 0),
    ("SN_TWISTED", lambda e: e.v == (_parity(e),) * e.n),
])


class SubgroupDescriptor(object):
    """A subgroup given by generators and its full element set.

    Parameters
    ----------
    n : int
    generators : iterable of WreathElement
    elements : frozenset of WreathElement, optional
        Computed by closure when omitted.
    tag : str, optional
    """

    def __init__(self, n, generators, elements=None, tag=None):
        self.n = n
        self.generators = tuple(sorted(generators))
        if elements is None:
            elements = closure(self.generators, n)
        self.elements = frozenset(elements)
        self.tag = tag

    @property
    def order(self):
        return len(self.elements)

    @property
    def index(self):
        return group_order(self.n) // self.order

    def kernel(self):
        """H n X as a Subspace."""
        identity = tuple(range(self.n))
        return Subspace(self.n, [e.mask for e in self.elements
                                 if e.sigma == identity])

    def surjects(self):
        return len(set(e.sigma for e in self.elements)) == factorial(self.n)

    def issubset(self, other):
        return self.elements <= other.elements

    def __contains__(self, e):
        return e in self.elements

    def to_dict(self):
        return OrderedDict([
            ("tag", self.tag),
            ("order", self.order),
            ("index", self.index),
            ("generator_words", [str(g) for g in self.generators]),
        ])

    def __repr__(self):
        return "SubgroupDescriptor(n={}, tag={}, order={})".format(
            self.n, self.tag, self.order)


def closure(generators, n):
    """Element set of the subgroup generated by ``generators``."""
    identity = WreathElement.identity(n)
    generators = [g for g in generators if not g.is_identity()]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = multiply(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def conjugate(desc, y):
    """y H y^-1 as a new descriptor with the same tag."""
    gens = [conjugate_element(y, g) for g in desc.generators]
    elements = frozenset(conjugate_element(y, e) for e in desc.elements)
    return SubgroupDescriptor(desc.n, gens, elements=elements, tag=desc.tag)


def _x_elements(n):
    identity = tuple(range(n))
    return [WreathElement.from_mask(m, identity) for m in range(1 << n)]


def _canonical(elements, n):
    """Smallest sorted element tuple over all X-conjugates."""
    best = None
    for y in _x_elements(n):
        conj = [conjugate_element(y, e) for e in elements]
        key = tuple(sorted((c.v, c.sigma) for c in conj))
        if best is None or key < best:
            best = key
    return best


def _tag(elements, n):
    """Tag a surjecting subgroup by its kernel K and the predicates, tested
    on every X-conjugate."""
    identity = tuple(range(n))
    K = Subspace(n, [e.mask for e in elements if e.sigma == identity])
    conjugates = [frozenset(conjugate_element(y, e) for e in elements)
                  for y in _x_elements(n)]

    def holds(name):
        pred = PREDICATES[name]
        return any(all(pred(e) for e in conj) for conj in conjugates)

    if K.dim == n:
        return "FULL"
    if K == Subspace.ones_perp(n):
        for name in ("G1", "G2"):
            if holds(name):
                return name
    if K == Subspace.ones(n):
        if holds("G3"):
            return "G3"
        if n == 4:
            return "EXC_2S4"
    if K.dim == 0:
        for name in ("SN_PLAIN", "SN_TWISTED"):
            if holds(name):
                return name
    return "OTHER"


def overgroup_census(n):
    """All subgroups of S_2 wr S_n surjecting onto S_n, up to conjugacy.

    Parameters
    ----------
    n : int
        1 <= n <= 4.

    Returns
    -------
    subgroups : list of SubgroupDescriptor
        Sorted by decreasing order, then tag.
    """
    if n < 1:
        raise ShapeError("n must be positive.")
    if n > 4:
        raise ResourceError("Exhaustive subgroup census is limited to n <= 4.")
    gens = sn_generators(n)
    found = OrderedDict()
    seen = set()
    for K in invariant_subspaces(n):
        kernel_gens = [WreathElement.from_mask(b, range(n)) for b in K.basis]
        for lifts in it.product(range(1 << n), repeat=len(gens)):
            lift_gens = [WreathElement.from_mask(a, g) for a, g in zip(lifts, gens)]
            generators = kernel_gens + lift_gens
            elements = closure(generators, n)
            if elements in seen:
                continue
            seen.add(elements)
            desc = SubgroupDescriptor(n, generators, elements=elements)
            if not desc.surjects():
                continue
            key = _canonical(elements, n)
            if key not in found:
                found[key] = desc
    out = []
    for desc in found.values():
        desc.tag = _tag(desc.elements, n)
        out.append(desc)
    out.sort(key=lambda d: (-d.order, TAGS.index(d.tag)))
    logger.info("n=%d: %d surjecting subgroups up to conjugacy", n, len(out))
    return out


def named_subgroup(tag, n):
    """The subgroup cut out by the membership predicate of ``tag``.

    EXC_2S4 (n = 4 only) is taken from the subgroup census.
    """
    if tag == "EXC_2S4":
        if n != 4:
            raise ShapeError("EXC_2S4 only exists for n = 4.")
        for desc in overgroup_census(4):
            if desc.tag == tag:
                return desc
    if tag not in PREDICATES:
        raise ShapeError("Unknown subgroup tag {!r}".format(tag))
    pred = PREDICATES[tag]
    elements = frozenset(e for e in all_elements(n) if pred(e))
    return SubgroupDescriptor(n, _generators_of(elements, n), elements=elements,
                              tag=tag)


def _generators_of(elements, n):
    """Kernel basis together with one lift of each generator of S_n."""
    identity = tuple(range(n))
    K = Subspace(n, [e.mask for e in elements if e.sigma == identity])
    gens = [WreathElement.from_mask(b, identity) for b in K.basis]
    for g in sn_generators(n):
        lift = min(e for e in elements if e.sigma == g)
        gens.append(lift)
    return gens


def cycle_type_distribution(desc):
    """Exact frequency of each cycle type of the 2n-point action.

    Returns
    -------
    dist : OrderedDict
        Cycle type (descending tuple) -> Fraction, sorted by cycle type.
    """
    if desc.n > 6:
        raise ResourceError("Cycle type tables are limited to n <= 6.")
    counts = Counter(cycle_type(embed_2n(e)) for e in desc.elements)
    total = desc.order
    return OrderedDict((ct, Fraction(c, total)) for ct, c in sorted(counts.items()))


class CensusRow(Bunch):
    """One row of the subgroup census for JSON output."""
    _fields = ("tag", "order", "index", "generator_words")


def census_rows(n):
    return [CensusRow(**d.to_dict()) for d in overgroup_census(n)]
