__doc__ = """S_n-invariant subspaces of X = F_2^n. Vectors are bitmasks
(bit i is coordinate i)."""

from .wreath import act_mask, sn_generators


class Subspace(object):
    """Subspace of F_2^n held as a reduced echelon basis of bitmasks.

    Every basis vector owns its highest bit, and no other basis vector has
    that bit set, so reduction gives canonical coset representatives.
    """
    __slots__ = ("n", "basis")

    def __init__(self, n, vectors=()):
        self.n = n
        self.basis = []
        for v in vectors:
            self.add(v)

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def full(cls, n):
        return cls(n, [1 << i for i in range(n)])

    @classmethod
    def ones(cls, n):
        """<1>, spanned by the all-ones vector."""
        return cls(n, [(1 << n) - 1])

    @classmethod
    def ones_perp(cls, n):
        """<1>^perp, the even weight vectors."""
        return cls(n, [(1 << i) | (1 << (i + 1)) for i in range(n - 1)])

    def reduce(self, v):
        """Canonical representative of v + self."""
        for b in self.basis:
            if v >> (b.bit_length() - 1) & 1:
                v ^= b
        return v

    def __contains__(self, v):
        return self.reduce(v) == 0

    def add(self, v):
        """Add v to the span; return True when the dimension grew."""
        v = self.reduce(v)
        if v == 0:
            return False
        top = v.bit_length() - 1
        self.basis = [b ^ v if b >> top & 1 else b for b in self.basis]
        self.basis.append(v)
        self.basis.sort(reverse=True)
        return True

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return 1 << self.dim

    def elements(self):
        out = [0]
        for b in self.basis:
            out += [x ^ b for x in out]
        return sorted(out)

    def __add__(self, other):
        return Subspace(self.n, self.basis + other.basis)

    def issubset(self, other):
        return all(b in other for b in self.basis)

    def is_invariant(self):
        return all(act_mask(g, b) in self
                   for g in sn_generators(self.n) for b in self.basis)

    def _key(self):
        return (self.n, tuple(self.basis))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "Subspace(n={}, dim={})".format(self.n, self.dim)


def cyclic_submodule(n, v):
    """Smallest S_n-invariant subspace containing v."""
    span = Subspace(n)
    queue = [v]
    gens = sn_generators(n)
    while queue:
        w = queue.pop()
        if span.add(w):
            queue += [act_mask(g, w) for g in gens]
    return span


def invariant_subspaces(n):
    """All S_n-invariant subspaces of F_2^n, by increasing dimension.

    Each invariant subspace is a sum of cyclic submodules, and the cyclic
    submodule of v depends only on the weight of v, so it is enough to
    close the submodules of 0, e_1, e_1 + e_2, ... under sums.
    """
    found = set(cyclic_submodule(n, (1 << w) - 1) for w in range(n + 1))
    grown = True
    while grown:
        grown = False
        for a in list(found):
            for b in list(found):
                c = a + b
                if c not in found:
                    found.add(c)
                    grown = True
    return sorted(found, key=lambda s: (s.dim, s.basis))


def label(space):
    """Name of an invariant subspace: "0", "1", "1perp", "X"."""
    n = space.n
    if space.dim == n:
        return "X"
    if space == Subspace.ones_perp(n):
        return "1perp"
    if space == Subspace.ones(n):
        return "1"
    if space.dim == 0:
        return "0"
    return "other"
