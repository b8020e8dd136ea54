"""Matroids as rank oracles over labelled ground sets.

A Matroid wraps a rank function on bitmasks. Everything else (bases,
circuits, duality, minors, connectivity, characteristic polynomials, broken
circuit complexes) is derived from the oracle, with explicit size guards on
the exponential scans.
"""

from .errors import (
    BadParameter,
    GroundTooLarge,
    OverlappingSets,
    UnknownLabel,
)
from .polynomials import IntPoly


class Matroid:
    def __init__(self, ground, rank_of_mask, name="M"):
        self.ground = tuple(ground)
        if len(set(self.ground)) != len(self.ground):
            raise BadParameter("duplicate ground labels")
        self.index = {e: i for i, e in enumerate(self.ground)}
        self._rank_mask = rank_of_mask
        self.name = name
        self.full_mask = (1 << len(self.ground)) - 1
        self._full_rank = None

    # -- label/mask plumbing ---------------------------------------------

    def mask_of(self, labels):
        m = 0
        for e in labels:
            i = self.index.get(e)
            if i is None:
                raise UnknownLabel(f"not a ground element: {e!r}")
            m |= 1 << i
        return m

    def labels_of(self, mask):
        return frozenset(
            e for e, i in self.index.items() if mask >> i & 1
        )

    def sorted_labels(self, mask):
        return tuple(sorted(self.labels_of(mask)))

    def _guard(self, limit, what):
        if len(self.ground) > limit:
            raise GroundTooLarge(
                f"{what} scans subsets of {len(self.ground)} elements "
                f"(limit {limit}); raise the limit to force it"
            )

    # -- rank and friends --------------------------------------------------

    def rank(self, labels=None):
        if labels is None:
            return self.full_rank()
        return self._rank_mask(self.mask_of(labels))

    def rank_mask(self, mask):
        return self._rank_mask(mask)

    def full_rank(self):
        if self._full_rank is None:
            self._full_rank = self._rank_mask(self.full_mask)
        return self._full_rank

    def independent(self, labels):
        m = self.mask_of(labels)
        return self._rank_mask(m) == m.bit_count()

    def is_basis(self, labels):
        m = self.mask_of(labels)
        return (
            m.bit_count() == self.full_rank()
            and self._rank_mask(m) == self.full_rank()
        )

    def closure_mask(self, mask):
        r = self._rank_mask(mask)
        out = mask
        for i in range(len(self.ground)):
            if not mask >> i & 1 and self._rank_mask(mask | 1 << i) == r:
                out |= 1 << i
        return out

    def closure(self, labels):
        return self.sorted_labels(self.closure_mask(self.mask_of(labels)))

    def loops(self):
        return tuple(
            e for e in self.ground if self._rank_mask(1 << self.index[e]) == 0
        )

    def coloops(self):
        r = self.full_rank()
        return tuple(
            e
            for e in self.ground
            if self._rank_mask(self.full_mask & ~(1 << self.index[e])) == r - 1
        )

    # -- enumerations -------------------------------------------------------

    def bases(self, limit=20):
        """All bases, as a sorted tuple of frozensets."""
        self._guard(limit, "basis enumeration")
        n = len(self.ground)
        r = self.full_rank()
        out = []
        rk = self._rank_mask

        def grow(start, mask, size):
            if size == r:
                out.append(self.labels_of(mask))
                return
            for i in range(start, n - (r - size) + 1):
                m2 = mask | 1 << i
                if rk(m2) == size + 1:
                    grow(i + 1, m2, size + 1)

        grow(0, 0, 0)
        return tuple(sorted(out, key=sorted))

    def flats(self, rank=None, limit=16):
        """All flats (closed sets), optionally only those of a given rank."""
        self._guard(limit, "flat enumeration")
        out = []
        for mask in range(1 << len(self.ground)):
            if self.closure_mask(mask) != mask:
                continue
            if rank is None or self._rank_mask(mask) == rank:
                out.append(self.labels_of(mask))
        return tuple(sorted(out, key=sorted))

    def hyperplanes(self, limit=16):
        return self.flats(rank=self.full_rank() - 1, limit=limit)

    def circuits(self, within=None, limit=16):
        """All circuits (minimal dependent sets), optionally inside `within`."""
        scope = self.full_mask if within is None else self.mask_of(within)
        if scope.bit_count() > limit:
            raise GroundTooLarge(
                f"circuit scan over {scope.bit_count()} elements (limit {limit})"
            )
        rk = self._rank_mask
        out = []
        sub = scope
        while True:
            pc = sub.bit_count()
            if pc:
                r = rk(sub)
                if r == pc - 1:
                    m = sub
                    minimal = True
                    while m:
                        b = m & -m
                        if rk(sub ^ b) != r:
                            minimal = False
                            break
                        m ^= b
                    if minimal:
                        out.append(self.labels_of(sub))
            if sub == 0:
                break
            sub = (sub - 1) & scope
        return tuple(sorted(out, key=lambda c: (len(c), sorted(c))))

    def cocircuits(self, limit=16):
        return self.dual().circuits(limit=limit)

    # -- constructions ------------------------------------------------------

    def dual(self):
        full = self.full_mask
        r = self.full_rank()
        rk = self._rank_mask

        def dual_rank(mask):
            return mask.bit_count() + rk(full & ~mask) - r

        return Matroid(self.ground, dual_rank, name=f"{self.name}*")

    def minor(self, contract=(), delete=()):
        cset, dset = set(contract), set(delete)
        if cset & dset:
            raise OverlappingSets(
                f"contract and delete overlap: {sorted(cset & dset)}"
            )
        cm = self.mask_of(cset)
        dm = self.mask_of(dset)
        keep = [e for e in self.ground if e not in cset and e not in dset]
        old_bits = [self.index[e] for e in keep]
        rc = self._rank_mask(cm)
        rk = self._rank_mask

        def minor_rank(mask):
            old = cm
            m = mask
            while m:
                b = m & -m
                old |= 1 << old_bits[b.bit_length() - 1]
                m ^= b
            return rk(old) - rc

        tag = ""
        if cset:
            tag += f"/{sorted(cset)}"
        if dset:
            tag += f"\\{sorted(dset)}"
        return Matroid(keep, minor_rank, name=self.name + tag)

    def restrict(self, labels):
        drop = [e for e in self.ground if e not in set(labels)]
        return self.minor(delete=drop)

    def direct_sum(self, other):
        if set(self.ground) & set(other.ground):
            raise OverlappingSets("direct sum needs disjoint ground labels")
        ground = self.ground + other.ground
        na = len(self.ground)
        amask = (1 << na) - 1
        ra, rb = self._rank_mask, other._rank_mask

        def rank(mask):
            return ra(mask & amask) + rb(mask >> na)

        return Matroid(ground, rank, name=f"{self.name}+{other.name}")

    def relabel(self, mapping):
        new = [mapping.get(e, e) for e in self.ground]
        return Matroid(new, self._rank_mask, name=self.name)

    @classmethod
    def uniform(cls, r, labels):
        labels = tuple(labels)
        if r < 0 or r > len(labels):
            raise BadParameter("uniform rank out of range")
        return cls(
            labels,
            lambda m: min(r, m.bit_count()),
            name=f"U({r},{len(labels)})",
        )

    @classmethod
    def graphic(cls, mg):
        """Cycle matroid of a multigraph."""
        order = mg.edge_order
        vidx = {v: i for i, v in enumerate(mg.vertices)}
        ends = [
            (vidx[mg.edges[e][0]], vidx[mg.edges[e][1]]) for e in order
        ]
        nv = len(mg.vertices)

        def rank(mask):
            parent = list(range(nv))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            merges = 0
            m = mask
            while m:
                b = m & -m
                a, c = ends[b.bit_length() - 1]
                ra, rc = find(a), find(c)
                if ra != rc:
                    parent[ra] = rc
                    merges += 1
                m ^= b
            return merges

        return cls(order, rank, name="M(graph)")

    # -- invariants ---------------------------------------------------------

    def char_poly(self, limit=20):
        """Characteristic polynomial by signed subset expansion."""
        self._guard(limit, "characteristic polynomial")
        r = self.full_rank()
        rk = self._rank_mask
        acc = [0] * (r + 1)
        for mask in range(self.full_mask + 1):
            k = r - rk(mask)
            if mask.bit_count() & 1:
                acc[k] -= 1
            else:
                acc[k] += 1
        return IntPoly(acc)

    def reduced_char_poly(self, limit=20):
        return self.char_poly(limit=limit).divide_exact(IntPoly((-1, 1)))

    def beta(self, limit=20):
        """Crapo beta invariant via the signed rank sum."""
        self._guard(limit, "beta invariant")
        rk = self._rank_mask
        total = 0
        for mask in range(self.full_mask + 1):
            if mask.bit_count() & 1:
                total -= rk(mask)
            else:
                total += rk(mask)
        return total if self.full_rank() % 2 == 0 else -total

    def tutte_connectivity(self, limit=20):
        """Smallest k admitting a k-separation; ground size when none exists."""
        self._guard(limit, "connectivity scan")
        n = len(self.ground)
        r = self.full_rank()
        rk = self._rank_mask
        best = None
        for mask in range(1, self.full_mask):
            if mask > (self.full_mask & ~mask):
                continue  # each split once
            a = mask.bit_count()
            mu = min(a, n - a)
            con = rk(mask) + rk(self.full_mask & ~mask) - r
            k = con + 1
            if k <= mu and (best is None or k < best):
                best = k
                if best == 1:
                    break
        return best if best is not None else n

    # -- broken circuits ----------------------------------------------------

    def nbc_sets(self, order=None, reduced=False, limit=16):
        """Subsets containing no broken circuit, w.r.t. the given order.

        With reduced=True, only subsets avoiding the order-minimal element.
        Returns a sorted tuple of frozensets.
        """
        order = list(order) if order is not None else sorted(self.ground)
        if sorted(order) != sorted(self.ground):
            raise BadParameter("order must list the ground set exactly")
        pos = {e: i for i, e in enumerate(order)}
        broken = []
        for c in self.circuits(limit=limit):
            least = min(c, key=pos.__getitem__)
            broken.append(self.mask_of(c - {least}))
        pool = order[1:] if reduced else order
        pool_bits = [self.index[e] for e in pool]
        out = []

        def grow(start, mask):
            out.append(mask)
            for i in range(start, len(pool_bits)):
                m2 = mask | 1 << pool_bits[i]
                if not any(bm and bm & m2 == bm for bm in broken):
                    grow(i + 1, m2)

        if not any(bm == 0 for bm in broken):
            grow(0, 0)
        return tuple(
            sorted((self.labels_of(m) for m in out), key=lambda s: (len(s), sorted(s)))
        )

    def nbc_counts(self, order=None, reduced=False, limit=16):
        """Sizes vector of the (reduced) broken-circuit complex."""
        sets = self.nbc_sets(order=order, reduced=reduced, limit=limit)
        top = max((len(s) for s in sets), default=-1)
        counts = [0] * (top + 1)
        for s in sets:
            counts[len(s)] += 1
        return counts

    # -- isomorphism ----------------------------------------------------------

    def iso_check(self, other, mapping=None, limit=12):
        """Rank-preserving bijection test; searches for one if not given."""
        n = len(self.ground)
        if n != len(other.ground) or self.full_rank() != other.full_rank():
            return None
        self._guard(limit, "isomorphism scan")
        ra = [self._rank_mask(m) for m in range(1 << n)]
        rb = [other._rank_mask(m) for m in range(1 << n)]
        if mapping is not None:
            img = [other.index[mapping[e]] for e in self.ground]
            for m in range(1 << n):
                mm = 0
                t = m
                while t:
                    b = t & -t
                    mm |= 1 << img[b.bit_length() - 1]
                    t ^= b
                if ra[m] != rb[mm]:
                    return None
            return dict(mapping)
        if sorted(ra) != sorted(rb):
            return None

        img = [-1] * n
        used = [False] * n

        def extend(i, partial_masks):
            if i == n:
                return True
            for j in range(n):
                if used[j]:
                    continue
                img[i] = j
                used[j] = True
                ok = True
                # check every subset that includes element i (others assigned)
                for m, mm in partial_masks:
                    if ra[m | 1 << i] != rb[mm | 1 << j]:
                        ok = False
                        break
                if ok:
                    nxt = partial_masks + [
                        (m | 1 << i, mm | (1 << j)) for m, mm in partial_masks
                    ]
                    if extend(i + 1, nxt):
                        return True
                used[j] = False
                img[i] = -1
            return False

        if extend(0, [(0, 0)]):
            return {self.ground[i]: other.ground[img[i]] for i in range(n)}
        return None


def beta_from_char_poly(chi, rank):
    """Beta invariant from the characteristic polynomial: up to sign, its
    derivative at 1."""
    d = chi.derivative()(1)
    return d if (rank - 1) % 2 == 0 else -d
