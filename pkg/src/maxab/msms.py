"""Symplectic F2-spaces carrying quadratic sign refinements.

A refinement of a symmetric zero-diagonal form m is a map mu: V -> {+-1}
with m(x, y) = mu(x) mu(y) mu(x + y) (multiplicative notation).  The Gauss
sum sum_x mu(x) ("defect") and the radical behaviour of mu are the complete
invariants used here.  Vectors are int bitmasks, forms are rows of bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from . import gf2
from .errors import BoundError, ValidationError

BRUTE_FORCE_DIM = 8


@dataclass(frozen=True)
class F2SymplecticSpace:
    dim: int
    gram: tuple[int, ...]  # row i = bitmask of m(e_i, e_j) over j

    def __post_init__(self):
        if len(self.gram) != self.dim:
            raise ValidationError("gram size mismatch")
        for i, row in enumerate(self.gram):
            if (row >> i) & 1:
                raise ValidationError("gram must have zero diagonal")
            if row >> self.dim:
                raise ValidationError("gram row out of range")
        for i in range(self.dim):
            for j in range(self.dim):
                if ((self.gram[i] >> j) & 1) != ((self.gram[j] >> i) & 1):
                    raise ValidationError("gram must be symmetric")

    def pairing(self, x: int, y: int) -> int:
        acc = 0
        xi = x
        while xi:
            i = (xi & -xi).bit_length() - 1
            acc ^= self.gram[i]
            xi &= xi - 1
        return gf2.dot(acc, y)

    def radical_basis(self) -> list[int]:
        return gf2.kernel_basis(list(self.gram), self.dim)

    def radical_rank(self) -> int:
        return self.dim - gf2.rank(list(self.gram), self.dim)

    def vectors(self):
        return range(1 << self.dim)


def hyperbolic_space(k: int, radical: int = 0) -> F2SymplecticSpace:
    """k hyperbolic pairs (e1, f1, ..., ek, fk) plus radical generators."""
    dim = 2 * k + radical
    gram = [0] * dim
    for t in range(k):
        gram[2 * t] |= 1 << (2 * t + 1)
        gram[2 * t + 1] |= 1 << (2 * t)
    return F2SymplecticSpace(dim, tuple(gram))


class QuadraticRefinement:
    """A sign refinement, stored by its values on the fixed basis."""

    __slots__ = ("space", "basis_bits", "_table")

    def __init__(self, space: F2SymplecticSpace, basis_values):
        self.space = space
        bits = 0
        vals = list(basis_values)
        if len(vals) != space.dim:
            raise ValidationError("basis value length mismatch")
        for i, v in enumerate(vals):
            if v == -1:
                bits |= 1 << i
            elif v != 1:
                raise ValidationError("refinement values must be +-1")
        self.basis_bits = bits
        self._table = None

    @staticmethod
    def from_bits(space: F2SymplecticSpace, bits: int) -> "QuadraticRefinement":
        out = QuadraticRefinement.__new__(QuadraticRefinement)
        out.space = space
        out.basis_bits = bits
        out._table = None
        return out

    def table(self) -> int:
        """Bitmask over all 2^dim vectors: bit v set iff mu(v) = -1."""
        if self._table is None:
            self._table = _value_table(self.space, self.basis_bits)
        return self._table

    def value(self, v: int) -> int:
        return -1 if (self.table() >> v) & 1 else 1

    def basis_values(self) -> list[int]:
        return [-1 if (self.basis_bits >> i) & 1 else 1
                for i in range(self.space.dim)]

    def defect(self) -> int:
        n = 1 << self.space.dim
        neg = bin(self.table()).count("1")
        return n - 2 * neg

    def compose(self, images: tuple[int, ...]) -> "QuadraticRefinement":
        """The refinement mu(g(.)) for the linear map with basis images."""
        t = self.table()
        bits = 0
        for i, img in enumerate(images):
            if (t >> img) & 1:
                bits |= 1 << i
        return QuadraticRefinement.from_bits(self.space, bits)

    def check_compatible(self) -> bool:
        t = self.table()
        sp = self.space
        for x in sp.vectors():
            for y in sp.vectors():
                lhs = sp.pairing(x, y)
                rhs = ((t >> x) ^ (t >> y) ^ (t >> (x ^ y))) & 1
                if lhs != rhs:
                    return False
        return True

    def __eq__(self, other) -> bool:
        return (isinstance(other, QuadraticRefinement)
                and self.space == other.space
                and self.basis_bits == other.basis_bits)

    def __hash__(self):
        return hash((self.space.gram, self.basis_bits))

    def __repr__(self):
        return f"Refinement({self.basis_values()})"


def _value_table(space: F2SymplecticSpace, basis_bits: int) -> int:
    dim = space.dim
    table = 0
    q = [0] * (1 << dim)
    for v in range(1, 1 << dim):
        low = v & -v
        i = low.bit_length() - 1
        rest = v ^ low
        qv = q[rest] ^ ((basis_bits >> i) & 1) ^ space.pairing(rest, low)
        q[v] = qv
        if qv:
            table |= 1 << v
    return table


def defect(mu: QuadraticRefinement) -> int:
    return mu.defect()


@dataclass(frozen=True)
class Msms:
    """A space with an unordered tuple of compatible refinements."""

    space: F2SymplecticSpace
    mus: tuple[QuadraticRefinement, ...]

    def __post_init__(self):
        for mu in self.mus:
            if mu.space != self.space:
                raise ValidationError("refinement on a different space")

    def sorted_bits(self) -> tuple[int, ...]:
        return tuple(sorted(mu.basis_bits for mu in self.mus))

    def to_json(self) -> dict:
        return {
            "dim": self.space.dim,
            "gram": [[(row >> j) & 1 for j in range(self.space.dim)]
                     for row in self.space.gram],
            "mus": [mu.basis_values() for mu in self.mus],
        }

    @staticmethod
    def from_json(obj: dict) -> "Msms":
        dim = obj["dim"]
        gram = tuple(sum(int(b) << j for j, b in enumerate(row))
                     for row in obj["gram"])
        space = F2SymplecticSpace(dim, gram)
        mus = tuple(QuadraticRefinement(space, vals) for vals in obj["mus"])
        return Msms(space, mus)


# -- standard models ----------------------------------------------------

MODEL_PLUS = "plus"
MODEL_MINUS = "minus"
MODEL_RADICAL1_PLUS = "radical1_plus"
MODEL_TWISTED = "twisted"


def standard_model(tag: str, k: int) -> Msms:
    """Reference spaces: nondegenerate rank 2k with defect +-2^k, and the
    two corank-one extensions distinguished by the sign on the radical."""
    if k < 0:
        raise ValidationError("negative rank")
    if tag == MODEL_PLUS:
        space = hyperbolic_space(k)
        mu = QuadraticRefinement(space, [1] * (2 * k))
    elif tag == MODEL_MINUS:
        if k < 1:
            raise ValidationError("minus model needs k >= 1")
        space = hyperbolic_space(k)
        vals = [1] * (2 * k)
        vals[0] = vals[1] = -1
        mu = QuadraticRefinement(space, vals)
    elif tag == MODEL_RADICAL1_PLUS:
        space = hyperbolic_space(k, radical=1)
        mu = QuadraticRefinement(space, [1] * (2 * k + 1))
    elif tag == MODEL_TWISTED:
        space = hyperbolic_space(k, radical=1)
        mu = QuadraticRefinement(space, [1] * (2 * k) + [-1])
    else:
        raise ValidationError(f"unknown model tag {tag!r}")
    return Msms(space, (mu,))


def single_class_matches(mu: QuadraticRefinement, tag: str) -> bool:
    """Whether (V, m, mu) falls in the isomorphism class of the tag model."""
    sp = mu.space
    rad = sp.radical_basis()
    if tag in (MODEL_PLUS, MODEL_MINUS):
        if rad:
            return False
        return mu.defect() > 0 if tag == MODEL_PLUS else mu.defect() < 0
    if len(rad) != 1:
        return False
    on_rad = mu.value(rad[0])
    if tag == MODEL_TWISTED:
        return on_rad == -1
    if tag == MODEL_RADICAL1_PLUS:
        return on_rad == 1 and mu.defect() > 0
    raise ValidationError(f"unknown model tag {tag!r}")


# -- isometries ---------------------------------------------------------


def _neg_profile(msm: Msms, v: int) -> int:
    return sum(1 for mu in msm.mus if mu.value(v) == -1)


def _isometry_search(a: Msms, b: Msms, target_seqs, count_all: bool = False):
    """Backtracking search for linear maps g: V_a -> V_b preserving the form
    with (mu_b_images) matching one of the target refinement sequences.

    target_seqs is a list of tuples of b-refinements; g must satisfy
    mu_target[t](g(v)) = mu_a[t](v) for all t, v.  Returns a witness (tuple
    of basis images) or, with count_all, the number of such maps.
    """
    sa, sb = a.space, b.space
    dim = sa.dim
    if dim != sb.dim:
        return 0 if count_all else None
    if dim > BRUTE_FORCE_DIM:
        raise BoundError("isometry search beyond brute-force bound")
    count = 0
    all_vecs = list(range(1, 1 << dim))

    for targets in target_seqs:
        images = [0] * dim
        found = [False]
        witness = [None]

        def extend(i: int, span_rows: list[int]):
            nonlocal count
            if found[0] and not count_all:
                return
            if i == dim:
                count += 1
                witness[0] = tuple(images)
                found[0] = True
                return
            for w in all_vecs:
                # linear independence
                if gf2.in_span(w, span_rows, dim):
                    continue
                ok = True
                for jj in range(i):
                    if sb.pairing(images[jj], w) != sa.pairing(1 << jj, 1 << i):
                        ok = False
                        break
                if not ok:
                    continue
                # refinement values on the new span slice
                for sub in range(1 << i):
                    v_a = sub | (1 << i)
                    v_b = w
                    t = sub
                    while t:
                        jj = (t & -t).bit_length() - 1
                        v_b ^= images[jj]
                        t &= t - 1
                    for mu_a, mu_b in zip(a.mus, targets):
                        if mu_a.value(v_a) != mu_b.value(v_b):
                            ok = False
                            break
                    if not ok:
                        break
                if not ok:
                    continue
                images[i] = w
                extend(i + 1, span_rows + [w])
                if found[0] and not count_all:
                    return

        extend(0, [])
        if found[0] and not count_all:
            return witness[0]
    return count if count_all else None


def _target_sequences(a: Msms, b: Msms):
    """Distinct ways to order b's refinements against a's (multiset match)."""
    from itertools import permutations
    s = len(a.mus)
    seen = set()
    out = []
    for perm in permutations(range(s)):
        seq = tuple(b.mus[p] for p in perm)
        key = tuple(mu.basis_bits for mu in seq)
        if key in seen:
            continue
        seen.add(key)
        out.append(seq)
    return out


def is_isomorphic(a: Msms, b: Msms, with_witness: bool = False):
    """Exact isomorphism test (form plus refinement multiset, order ignored)."""
    if a.space.dim != b.space.dim or len(a.mus) != len(b.mus):
        return (False, None) if with_witness else False
    inv_a = _quick_invariants(a)
    inv_b = _quick_invariants(b)
    if inv_a != inv_b:
        return (False, None) if with_witness else False
    if a.space.dim == 0:
        return (True, ()) if with_witness else True
    witness = _isometry_search(a, b, _target_sequences(a, b))
    ok = witness is not None
    return (ok, witness) if with_witness else ok


def _quick_invariants(m: Msms) -> tuple:
    sp = m.space
    rad = sp.radical_basis()
    per_mu = sorted((mu.defect(),
                     tuple(sorted(mu.value(r) for r in rad)))
                    for mu in m.mus)
    hist: dict[int, int] = {}
    for v in sp.vectors():
        c = _neg_profile(m, v)
        hist[c] = hist.get(c, 0) + 1
    return (sp.dim, len(rad), tuple(per_mu), tuple(sorted(hist.items())))


def aut_order(m: Msms) -> int:
    """Order of the isometries of (V, m) preserving the refinement multiset."""
    if m.space.dim == 0:
        return 1
    n = _isometry_search(m, m, _target_sequences(m, m), count_all=True)
    return int(n)


# -- orbit enumeration --------------------------------------------------


def _isometry_generators(space: F2SymplecticSpace) -> list[tuple[int, ...]]:
    """Generators of the isometry group as basis-image tuples.

    Symplectic transvections x -> x + m(x, v) v for every v outside the
    radical, plus the shears b_i -> b_i + r for each radical generator r.
    Together these generate all form-preserving bijections for the
    nondegenerate and corank-one spaces used here.
    """
    dim = space.dim
    rad_rows = space.radical_basis()
    gens = []
    for v in range(1, 1 << dim):
        if gf2.in_span(v, rad_rows, dim):
            continue
        images = tuple((1 << i) ^ (v if space.pairing(1 << i, v) else 0)
                       for i in range(dim))
        gens.append(images)
    for r in rad_rows:
        for i in range(dim):
            if gf2.in_span(1 << i, rad_rows, dim):
                continue
            images = tuple((1 << j) ^ (r if j == i else 0)
                           for j in range(dim))
            gens.append(images)
    return gens


def enumerate_classes(k: int, s: int, model: str = MODEL_PLUS):
    """Orbit representatives of s-tuples of model-class refinements under
    isometries and tuple permutation.

    Returns a list of (Msms representative, orbit size); orbit sizes sum to
    the number of ordered s-tuples.
    """
    base = standard_model(model, k)
    space = base.space
    if space.dim > BRUTE_FORCE_DIM:
        raise BoundError("enumeration beyond brute-force bound")
    pool = [QuadraticRefinement.from_bits(space, bits)
            for bits in range(1 << space.dim)]
    pool = [mu for mu in pool if single_class_matches(mu, model)]
    pool_bits = [mu.basis_bits for mu in pool]
    if s == 0:
        return [(Msms(space, ()), 1)]

    gens = _isometry_generators(space)
    by_bits = {mu.basis_bits: mu for mu in pool}

    def act(images: tuple[int, ...], bits: int) -> int:
        return by_bits[bits].compose(images).basis_bits

    classes = []
    seen: set[tuple[int, ...]] = set()
    for start in iproduct(pool_bits, repeat=s):
        if start in seen:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            cur = frontier.pop()
            nxt_tuples = []
            for g in gens:
                nxt_tuples.append(tuple(act(g, b) for b in cur))
            for i in range(s - 1):
                swapped = list(cur)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                nxt_tuples.append(tuple(swapped))
            for nt in nxt_tuples:
                if nt not in orbit:
                    orbit.add(nt)
                    frontier.append(nt)
        seen |= orbit
        rep = min(orbit)
        classes.append((Msms(space, tuple(
            QuadraticRefinement.from_bits(space, b) for b in rep)),
            len(orbit)))
    classes.sort(key=lambda c: c[0].sorted_bits())
    return classes


def restrict(m: Msms, basis_vectors: list[int]) -> Msms:
    """Restriction of the form and refinements to a subspace."""
    sp = m.space
    dim = len(basis_vectors)
    gram = []
    for i in range(dim):
        row = 0
        for j in range(dim):
            if sp.pairing(basis_vectors[i], basis_vectors[j]):
                row |= 1 << j
        gram.append(row)
    sub = F2SymplecticSpace(dim, tuple(gram))
    mus = tuple(QuadraticRefinement(sub, [mu.value(v) for v in basis_vectors])
                for mu in m.mus)
    return Msms(sub, mus)
