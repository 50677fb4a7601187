"""Finite rings presented by additive cyclic generators and structure constants.

A ring is the additive group Z_{k_1} x ... x Z_{k_m} with multiplication
extended bilinearly from e_i * e_j = sum_t C[i][j][t] e_t.  Elements are
coordinate vectors; exhaustive algorithms (radicals, classification) work on
index tables built lazily.

Radicals are computed by independent methods on purpose: the prime radical by
prime-ideal enumeration, the Jacobson radical by invertibility search, the
upper nilradical by summing nil ideals.  For a finite ring all of them must
coincide, which the test suite uses as a cross-validation oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    BadIdentity,
    BadShape,
    IllDefinedConstant,
    NonAssociative,
    NotAnIdeal,
    RingMismatch,
    TooLarge,
)

DEFAULT_IDEAL_CAP = 256
TABLE_CAP = 4096


class RingElement:
    """An element of a FiniteRing, stored as reduced coordinates."""

    __slots__ = ("ring", "coords")

    def __init__(self, ring: "FiniteRing", coords: Sequence[int]):
        self.ring = ring
        self.coords = tuple(int(c) % k for c, k in zip(coords, ring.orders))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "RingElement") -> None:
        if self.ring is not other.ring:
            raise RingMismatch("elements belong to different rings")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, [-a for a in self.coords])

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, self.ring._mul_coords(self.coords, other.coords))

    def __pow__(self, k: int) -> "RingElement":
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = self.ring.one
        base = self
        while k:  # exact square-and-multiply
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingElement)
            and self.ring is other.ring
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((id(self.ring), self.coords))

    @property
    def index(self) -> int:
        return self.ring.index_of(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __repr__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"


class FiniteRing:
    """Associative ring with identity on a finite additive group."""

    def __init__(
        self,
        orders: Sequence[int],
        constants: Sequence[Sequence[Sequence[int]]],
        one: Sequence[int],
        name: str = "",
    ):
        if not orders or any(int(k) < 2 for k in orders):
            raise BadShape("additive orders must all be >= 2")
        self.orders = tuple(int(k) for k in orders)
        self.m = len(self.orders)
        arr = np.array(constants, dtype=np.int64)
        if arr.shape != (self.m, self.m, self.m):
            raise BadShape(f"structure constants must have shape ({self.m},{self.m},{self.m})")
        ords = np.array(self.orders, dtype=np.int64)
        self.constants = arr % ords  # reduce coordinate u modulo k_u
        if len(one) != self.m:
            raise BadShape("identity vector has wrong length")
        self.name = name or f"ring{self.orders}"
        self.size = 1
        for k in self.orders:
            self.size *= k
        strides = [1] * self.m
        for t in range(self.m - 2, -1, -1):
            strides[t] = strides[t + 1] * self.orders[t + 1]
        self._strides = np.array(strides, dtype=np.int64)
        self._constants_list = self.constants.tolist()

        self._verify_well_defined()
        self.one = RingElement(self, one)
        self.zero = RingElement(self, [0] * self.m)
        self._verify_identity()
        self._verify_associative()

        # lazy caches
        self._elements_arr: Optional[np.ndarray] = None
        self._mul_table: Optional[np.ndarray] = None
        self._add_table: Optional[np.ndarray] = None
        self._neg_arr: Optional[np.ndarray] = None
        self._mul_rows: Optional[list] = None
        self._add_rows: Optional[list] = None
        self._neg_list: Optional[list] = None
        self._nilpotent_mask: Optional[np.ndarray] = None
        self._units_mask: Optional[np.ndarray] = None
        self._all_ideal_masks: Optional[list] = None
        self._radical_cache: dict = {}
        self._profile: Optional["RingProfile"] = None

    # -- construction checks ---------------------------------------------------

    def _verify_well_defined(self) -> None:
        # k_i * C[i,j] and k_j * C[i,j] must vanish coordinate-wise, otherwise
        # the bilinear extension is not biadditive on the quotient group.
        for i in range(self.m):
            for j in range(self.m):
                row = self.constants[i, j]
                for u in range(self.m):
                    cu = int(row[u])
                    if (self.orders[i] * cu) % self.orders[u] != 0 or (
                        self.orders[j] * cu
                    ) % self.orders[u] != 0:
                        raise IllDefinedConstant(i + 1, j + 1)

    def _verify_identity(self) -> None:
        for i in range(self.m):
            e = self.generator(i)
            if (self.one * e) != e or (e * self.one) != e:
                raise BadIdentity(i + 1)

    def _verify_associative(self) -> None:
        gens = [self.generator(i) for i in range(self.m)]
        for i, a in enumerate(gens):
            for j, b in enumerate(gens):
                ab = a * b
                for k, c in enumerate(gens):
                    if (ab * c) != (a * (b * c)):
                        raise NonAssociative(i + 1, j + 1, k + 1)

    # -- element plumbing -------------------------------------------------------

    def _mul_coords(self, a: Sequence[int], b: Sequence[int]) -> tuple:
        m = self.m
        acc = [0] * m
        C = self._constants_list
        for s in range(m):
            cs = a[s]
            if cs == 0:
                continue
            Cs = C[s]
            for t in range(m):
                ct = b[t]
                if ct == 0:
                    continue
                f = cs * ct
                row = Cs[t]
                for u in range(m):
                    acc[u] += f * row[u]
        return tuple(acc[u] % self.orders[u] for u in range(m))

    def el(self, coords: Sequence[int]) -> RingElement:
        if len(coords) != self.m:
            raise BadShape("coordinate vector has wrong length")
        return RingElement(self, coords)

    def generator(self, i: int) -> RingElement:
        coords = [0] * self.m
        coords[i] = 1
        return RingElement(self, coords)

    def index_of(self, coords: Sequence[int]) -> int:
        idx = 0
        for c, s in zip(coords, self._strides):
            idx += int(c) * int(s)
        return idx

    def element_from_index(self, idx: int) -> RingElement:
        coords = []
        for s in self._strides:
            coords.append(idx // int(s))
            idx %= int(s)
        return RingElement(self, coords)

    def elements(self) -> list[RingElement]:
        return [self.element_from_index(i) for i in range(self.size)]

    @property
    def one_index(self) -> int:
        return self.one.index

    # -- vectorized views ---------------------------------------------------------

    @property
    def elements_array(self) -> np.ndarray:
        if self._elements_arr is None:
            grids = np.indices(self.orders).reshape(self.m, -1).T
            self._elements_arr = np.ascontiguousarray(grids, dtype=np.int64)
        return self._elements_arr

    def _require_tables(self) -> None:
        if self._mul_table is not None:
            return
        if self.size > TABLE_CAP:
            raise TooLarge(self.size, TABLE_CAP, "multiplication table")
        A = self.elements_array
        ords = np.array(self.orders, dtype=np.int64)
        n = self.size
        mul = np.empty((n, n), dtype=np.int32)
        add = np.empty((n, n), dtype=np.int32)
        block = max(1, (1 << 22) // max(1, n * self.m))
        for lo in range(0, n, block):
            hi = min(n, lo + block)
            prod = np.einsum("as,bt,stu->abu", A[lo:hi], A, self.constants) % ords
            mul[lo:hi] = prod @ self._strides
            s = (A[lo:hi, None, :] + A[None, :, :]) % ords
            add[lo:hi] = s @ self._strides
        self._mul_table = mul
        self._add_table = add
        self._neg_arr = ((-A) % ords @ self._strides).astype(np.int32)

    @property
    def mul_table(self) -> np.ndarray:
        self._require_tables()
        return self._mul_table

    @property
    def add_table(self) -> np.ndarray:
        self._require_tables()
        return self._add_table

    @property
    def neg_array(self) -> np.ndarray:
        self._require_tables()
        return self._neg_arr

    def index_rows(self) -> tuple[list, list, list]:
        """Plain-list views of the tables for hot scalar loops."""
        if self._mul_rows is None:
            self._mul_rows = self.mul_table.tolist()
            self._add_rows = self.add_table.tolist()
            self._neg_list = self.neg_array.tolist()
        return self._mul_rows, self._add_rows, self._neg_list

    # -- nilpotents and units ---------------------------------------------------------

    @property
    def nilpotent_mask(self) -> np.ndarray:
        """Boolean mask over element indices of { r : r^k = 0, some k <= |R| }."""
        if self._nilpotent_mask is None:
            # r is nilpotent iff r^(2^s) = 0 once 2^s >= |R|: the power sequence
            # of any element cycles within |R| steps, so if it ever hits 0 it
            # does so by exponent |R|.
            ords = np.array(self.orders, dtype=np.int64)
            X = self.elements_array.copy()
            steps = max(1, int(np.ceil(np.log2(self.size))))
            for _ in range(steps):
                X = np.einsum("as,at,stu->au", X, X, self.constants) % ords
            self._nilpotent_mask = ~X.any(axis=1)
        return self._nilpotent_mask

    @property
    def units_mask(self) -> np.ndarray:
        if self._units_mask is None:
            one = self.one_index
            mt = self.mul_table
            self._units_mask = ((mt == one) & (mt.T == one)).any(axis=1)
        return self._units_mask

    def mask_of(self, elements: Iterable[RingElement]) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        for e in elements:
            mask[e.index] = True
        return mask

    def set_of(self, mask: np.ndarray) -> frozenset:
        return frozenset(self.element_from_index(int(i)) for i in np.nonzero(mask)[0])

    def __repr__(self) -> str:
        return f"FiniteRing({self.name}, |R|={self.size})"

    def structurally_equal(self, other: "FiniteRing") -> bool:
        return (
            self.orders == other.orders
            and np.array_equal(self.constants, other.constants)
            and self.one.coords == other.one.coords
        )


def make_ring(
    additive_orders: Sequence[int],
    structure_constants: Sequence[Sequence[Sequence[int]]],
    one: Sequence[int],
    name: str = "",
) -> FiniteRing:
    """Build and fully verify a FiniteRing (associativity, identity, shapes)."""
    return FiniteRing(additive_orders, structure_constants, one, name=name)


def arith(op: str, a: RingElement, b: Optional[RingElement] = None) -> RingElement:
    """Tagged arithmetic dispatch; mostly useful for the CLI and tests."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "pow":
        if not isinstance(b, int):
            raise BadShape("pow expects an integer exponent")
        return a ** b
    raise BadShape(f"unknown op tag {op!r}")


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------


class Ideal:
    """A two-sided ideal given by its explicit carrier set."""

    def __init__(
        self,
        ring: FiniteRing,
        carrier: Iterable[RingElement],
        generators: Optional[list[RingElement]] = None,
        _trusted_mask: Optional[np.ndarray] = None,
    ):
        self.ring = ring
        if _trusted_mask is not None:
            self.mask = _trusted_mask
        else:
            self.mask = ring.mask_of(carrier)
            self._verify()
        self.carrier = ring.set_of(self.mask)
        self.generators = generators

    def _verify(self) -> None:
        mask = self.mask
        ring = self.ring
        if not mask[0]:
            raise NotAnIdeal("0 is missing from the carrier")
        idx = np.nonzero(mask)[0]
        add = ring.add_table
        mul = ring.mul_table
        if not mask[add[np.ix_(idx, idx)]].all():
            raise NotAnIdeal("carrier is not closed under addition")
        if not mask[ring.neg_array[idx]].all():
            raise NotAnIdeal("carrier is not closed under negation")
        if not mask[mul[:, idx]].all() or not mask[mul[idx, :]].all():
            raise NotAnIdeal("carrier does not absorb ring multiplication")

    @classmethod
    def from_mask(cls, ring: FiniteRing, mask: np.ndarray, verify: bool = False) -> "Ideal":
        if verify:
            return cls(ring, ring.set_of(mask))
        return cls(ring, (), _trusted_mask=mask)

    def __contains__(self, el: RingElement) -> bool:
        return bool(self.mask[el.index])

    def __len__(self) -> int:
        return int(self.mask.sum())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Ideal)
            and self.ring is other.ring
            and np.array_equal(self.mask, other.mask)
        )

    def __hash__(self) -> int:
        return hash((id(self.ring), self.mask.tobytes()))

    def sorted_elements(self) -> list[RingElement]:
        return [self.ring.element_from_index(int(i)) for i in np.nonzero(self.mask)[0]]

    def __repr__(self) -> str:
        els = ",".join(repr(e) for e in self.sorted_elements())
        return f"Ideal({{{els}}})"


def _additive_closure(ring: FiniteRing, mask: np.ndarray) -> np.ndarray:
    add = ring.add_table
    mask = mask.copy()
    mask[0] = True
    while True:
        idx = np.nonzero(mask)[0]
        new = np.zeros_like(mask)
        new[add[np.ix_(idx, idx)].ravel()] = True
        new[ring.neg_array[idx]] = True
        merged = mask | new
        if (merged == mask).all():
            return mask
        mask = merged


def _ideal_closure(ring: FiniteRing, mask: np.ndarray) -> np.ndarray:
    """Smallest two-sided ideal containing the masked set (closure iteration)."""
    mul = ring.mul_table
    mask = _additive_closure(ring, mask)
    while True:
        idx = np.nonzero(mask)[0]
        new = np.zeros_like(mask)
        new[mul[:, idx].ravel()] = True
        new[mul[idx, :].ravel()] = True
        merged = mask | new
        if (merged == mask).all():
            return mask
        mask = _additive_closure(ring, merged)


def ideal_generated_by(ring: FiniteRing, elements: Iterable[RingElement]) -> Ideal:
    mask = ring.mask_of(elements)
    mask[0] = True
    closed = _ideal_closure(ring, mask)
    return Ideal.from_mask(ring, closed)


def _all_ideal_masks(ring: FiniteRing, cap: int) -> list[np.ndarray]:
    """Every two-sided ideal: principal ideals first, then closure under sums.

    Complete because each ideal is the sum of the principal ideals of its
    elements, and the sum of two ideals is the additive span of their union.
    """
    if ring.size > cap:
        raise TooLarge(ring.size, cap, "ideal enumeration")
    if ring._all_ideal_masks is not None:
        return ring._all_ideal_masks
    principals = {}
    for a in range(ring.size):
        seed = np.zeros(ring.size, dtype=bool)
        seed[0] = True
        seed[a] = True
        closed = _ideal_closure(ring, seed)
        principals[closed.tobytes()] = closed
    seen = dict(principals)
    zero = np.zeros(ring.size, dtype=bool)
    zero[0] = True
    seen.setdefault(zero.tobytes(), zero)
    queue = list(seen.values())
    while queue:
        mask = queue.pop()
        for p in principals.values():
            merged = _additive_closure(ring, mask | p)
            key = merged.tobytes()
            if key not in seen:
                seen[key] = merged
                queue.append(merged)
    ring._all_ideal_masks = list(seen.values())
    return ring._all_ideal_masks


def _is_prime_mask(ring: FiniteRing, mask: np.ndarray) -> bool:
    if mask.all():  # prime ideals are proper
        return False
    mul = ring.mul_table
    outside = np.nonzero(~mask)[0]
    inP = mask
    for a in outside:
        # aRb for all b outside: column b survives iff some a*r*b escapes P
        arb = mul[mul[a, :], :][:, outside]
        if not (~inP[arb]).any(axis=0).all():
            return False
    return True


def nilpotent_set(ring: FiniteRing) -> frozenset:
    """{ r : r^k = 0 for some 1 <= k <= |R| }."""
    return ring.set_of(ring.nilpotent_mask)


def jacobson_radical(ring: FiniteRing) -> Ideal:
    """{ r : 1 - s*r is a unit for every s }, units found by exhaustive search."""
    if "J" in ring._radical_cache:
        return ring._radical_cache["J"]
    mul = ring.mul_table
    units = ring.units_mask
    one = ring.one_index
    neg = ring.neg_array
    add = ring.add_table
    one_minus = add[one, neg]  # index of 1 - x
    ok = units[one_minus[mul]]  # ok[s, r] = (1 - s*r) is a unit
    mask = ok.all(axis=0)
    ideal = Ideal.from_mask(ring, mask, verify=True)
    ring._radical_cache["J"] = ideal
    return ideal


def prime_radical(ring: FiniteRing, cap: int = DEFAULT_IDEAL_CAP) -> Ideal:
    """Intersection of all prime ideals, by exhaustive ideal enumeration."""
    if "Nstar_lower" in ring._radical_cache:
        return ring._radical_cache["Nstar_lower"]
    masks = _all_ideal_masks(ring, cap)
    primes = [m for m in masks if _is_prime_mask(ring, m)]
    inter = np.ones(ring.size, dtype=bool)
    for m in primes:
        inter &= m
    ideal = Ideal.from_mask(ring, inter, verify=True)
    ring._radical_cache["Nstar_lower"] = ideal
    return ideal


def upper_nilradical(ring: FiniteRing, cap: int = DEFAULT_IDEAL_CAP) -> Ideal:
    """Sum of all nil ideals, from the full ideal lattice."""
    if "Nstar_upper" in ring._radical_cache:
        return ring._radical_cache["Nstar_upper"]
    masks = _all_ideal_masks(ring, cap)
    nil = ring.nilpotent_mask
    union = np.zeros(ring.size, dtype=bool)
    for m in masks:
        if not (m & ~nil).any():
            union |= m
    total = _additive_closure(ring, union)  # sum of ideals = additive span of union
    ideal = Ideal.from_mask(ring, total, verify=True)
    ring._radical_cache["Nstar_upper"] = ideal
    return ideal


def levitzki_radical(ring: FiniteRing, cap: int = DEFAULT_IDEAL_CAP) -> Ideal:
    """Sum of all locally nilpotent ideals.

    In a finite ring every nil ideal is nilpotent, hence locally nilpotent, so
    the result equals the upper nilradical; local nilpotence of the returned
    ideal is verified explicitly by powering it down to zero.
    """
    if "L" in ring._radical_cache:
        return ring._radical_cache["L"]
    ideal = upper_nilradical(ring, cap)
    mul = ring.mul_table
    idx = np.nonzero(ideal.mask)[0]
    current = idx
    for _ in range(ring.size + 1):
        if (current == 0).all():
            break
        current = np.unique(mul[np.ix_(current, idx)].ravel())
        current = current[current != 0]
        if current.size == 0:
            break
    else:
        raise NotAnIdeal("upper nilradical failed the nilpotence verification")
    ring._radical_cache["L"] = ideal
    return ideal


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass
class RingProfile:
    """Result of classify_ring: every boolean predicate plus the radicals."""

    NI: bool
    NJ: bool
    two_primal: bool
    weakly_two_primal: bool
    reduced: bool
    domain: bool
    symmetric: bool
    reversible: bool
    semicommutative: bool
    right_duo: bool
    left_duo: bool
    abelian: bool
    dedekind_finite: bool
    locally_finite: bool
    nilpotents: frozenset = field(repr=False)
    prime_radical: Ideal = field(repr=False)
    levitzki_radical: Ideal = field(repr=False)
    upper_nilradical: Ideal = field(repr=False)
    jacobson_radical: Ideal = field(repr=False)

    def flags(self) -> dict:
        return {
            k: getattr(self, k)
            for k in (
                "NI",
                "NJ",
                "two_primal",
                "weakly_two_primal",
                "reduced",
                "domain",
                "symmetric",
                "reversible",
                "semicommutative",
                "right_duo",
                "left_duo",
                "abelian",
                "dedekind_finite",
                "locally_finite",
            )
        }


def _is_ideal_mask(ring: FiniteRing, mask: np.ndarray) -> bool:
    idx = np.nonzero(mask)[0]
    if not mask[0]:
        return False
    if not mask[ring.add_table[np.ix_(idx, idx)]].all():
        return False
    if not mask[ring.neg_array[idx]].all():
        return False
    mul = ring.mul_table
    return bool(mask[mul[:, idx]].all() and mask[mul[idx, :]].all())


def _symmetric(ring: FiniteRing) -> bool:
    mul = ring.mul_table
    n = ring.size
    for r in range(n):
        rs = mul[r, :]  # r*s over s
        rst = mul[rs, :]  # (r*s)*t, shape (n, n): [s, t]
        rt = mul[r, :]
        rts = mul[rt, :].T  # [s, t] -> (r*t)*s
        if ((rst == 0) & (rts != 0)).any():
            return False
    return True


def _semicommutative(ring: FiniteRing) -> bool:
    mul = ring.mul_table
    zero_pairs = np.argwhere(mul == 0)
    for a, b in zero_pairs:
        if mul[mul[a, :], b].any():
            return False
    return True


def _duo(ring: FiniteRing, right: bool) -> bool:
    mul = ring.mul_table
    n = ring.size
    for a in range(n):
        seed = np.zeros(n, dtype=bool)
        seed[a] = True
        seed[mul[a, :] if right else mul[:, a]] = True
        one_sided = _additive_closure(ring, seed)
        idx = np.nonzero(one_sided)[0]
        other = mul[:, idx] if right else mul[idx, :]
        if not one_sided[other].all():
            return False
    return True


def _abelian(ring: FiniteRing) -> bool:
    mul = ring.mul_table
    idem = np.nonzero(mul.diagonal() == np.arange(ring.size))[0]
    for e in idem:
        if not (mul[e, :] == mul[:, e]).all():
            return False
    return True


def _dedekind_finite(ring: FiniteRing) -> bool:
    mul = ring.mul_table
    one = ring.one_index
    return bool((mul.T[mul == one] == one).all())


def classify_ring(ring: FiniteRing, cap: int = DEFAULT_IDEAL_CAP) -> RingProfile:
    """Fill every predicate flag by exhaustive quantifier checks."""
    if ring._profile is not None:
        return ring._profile
    nil = ring.nilpotent_mask
    J = jacobson_radical(ring)
    Nlower = prime_radical(ring, cap)
    Nupper = upper_nilradical(ring, cap)
    L = levitzki_radical(ring, cap)
    mul = ring.mul_table

    reduced = bool(nil.sum() == 1)
    zero_count = int((mul == 0).sum())
    domain = zero_count == 2 * ring.size - 1 and ring.size > 1
    reversible = bool((((mul == 0) == (mul.T == 0))).all())
    profile = RingProfile(
        NI=_is_ideal_mask(ring, nil),
        NJ=bool((nil == J.mask).all()),
        two_primal=bool((nil == Nlower.mask).all()),
        weakly_two_primal=bool((nil == L.mask).all()),
        reduced=reduced,
        domain=domain,
        symmetric=_symmetric(ring),
        reversible=reversible,
        semicommutative=_semicommutative(ring),
        right_duo=_duo(ring, right=True),
        left_duo=_duo(ring, right=False),
        abelian=_abelian(ring),
        dedekind_finite=_dedekind_finite(ring),
        locally_finite=True,  # recorded, not computed: finite carrier
        nilpotents=ring.set_of(nil),
        prime_radical=Nlower,
        levitzki_radical=L,
        upper_nilradical=Nupper,
        jacobson_radical=J,
    )
    ring._profile = profile
    return profile
