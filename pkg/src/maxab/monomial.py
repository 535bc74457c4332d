"""Monomial matrices over roots of unity, with an optional antiunitary part.

An element is a generalized permutation matrix: entry (perm[j], j) equals
phases[j], all other entries vanish.  The boolean ``conj`` flag marks an
antiunitary operator A∘K (K = entrywise complex conjugation); products follow
(A, e) * (B, d) = (A * sigma^e(B), e xor d) where sigma negates all phases.

Three flavors are tracked: "complex" (unitary group), "real" (orthogonal,
phases +-1, no conj), and "quaternion" (even dimension, commuting with the
standard complex structure J, i.e. the image of a quaternionic matrix).
"""

from __future__ import annotations

from .errors import ValidationError
from .scalars import CycSum, RootOfUnity

FLAVOR_COMPLEX = "complex"
FLAVOR_REAL = "real"
FLAVOR_QUATERNION = "quaternion"

_ONE = RootOfUnity(0, 1)
_MINUS = RootOfUnity(1, 2)
_I = RootOfUnity(1, 4)
_MINUS_I = RootOfUnity(3, 4)


class MonomialElement:
    __slots__ = ("dim", "perm", "phases", "conj", "flavor", "_hash")

    def __init__(self, perm, phases, conj: bool = False,
                 flavor: str = FLAVOR_COMPLEX, check: bool = True):
        self.dim = len(perm)
        self.perm = tuple(perm)
        self.phases = tuple(phases)
        self.conj = bool(conj)
        self.flavor = flavor
        self._hash = None
        if check:
            self._validate()

    def _validate(self) -> None:
        if sorted(self.perm) != list(range(self.dim)):
            raise ValidationError("perm is not a permutation")
        if len(self.phases) != self.dim:
            raise ValidationError("phase vector length mismatch")
        if self.flavor == FLAVOR_REAL:
            if self.conj:
                raise ValidationError("real elements cannot carry conj")
            if any(not p.is_real() for p in self.phases):
                raise ValidationError("real flavor requires +-1 phases")
        elif self.flavor == FLAVOR_QUATERNION:
            if self.dim % 2:
                raise ValidationError("quaternion flavor needs even dim")
            J = standard_complex_structure(self.dim // 2)
            if not (self.mul_matrix(J) == J.mul_matrix(self.conj_entries())):
                raise ValidationError(
                    "matrix does not commute with the complex structure")
        elif self.flavor != FLAVOR_COMPLEX:
            raise ValidationError(f"unknown flavor {self.flavor!r}")

    # -- matrix views -------------------------------------------------

    def entry(self, i: int, j: int) -> RootOfUnity | None:
        return self.phases[j] if self.perm[j] == i else None

    def mul_matrix(self, other: "MonomialElement") -> "MonomialElement":
        """Plain matrix product, ignoring conj flags and flavor checks."""
        perm = tuple(self.perm[other.perm[j]] for j in range(self.dim))
        phases = tuple(self.phases[other.perm[j]] * other.phases[j]
                       for j in range(self.dim))
        return MonomialElement(perm, phases, False, FLAVOR_COMPLEX,
                               check=False)

    def conj_entries(self) -> "MonomialElement":
        return MonomialElement(self.perm,
                               tuple(p.conj() for p in self.phases),
                               self.conj, self.flavor, check=False)

    def __mul__(self, other: "MonomialElement") -> "MonomialElement":
        if self.dim != other.dim:
            raise ValidationError("dimension mismatch")
        if self.flavor != other.flavor:
            raise ValidationError("flavor mismatch")
        rhs = other.conj_entries() if self.conj else other
        prod = self.mul_matrix(rhs)
        return MonomialElement(prod.perm, prod.phases,
                               self.conj ^ other.conj, self.flavor,
                               check=False)

    def inverse(self) -> "MonomialElement":
        inv_perm = [0] * self.dim
        inv_phases = [_ONE] * self.dim
        for j in range(self.dim):
            inv_perm[self.perm[j]] = j
        for i in range(self.dim):
            inv_phases[i] = self.phases[inv_perm[i]].inverse()
        mat = MonomialElement(inv_perm, inv_phases, False, self.flavor,
                              check=False)
        if self.conj:
            mat = mat.conj_entries()
            return MonomialElement(mat.perm, mat.phases, True, self.flavor,
                                   check=False)
        return mat

    def transpose(self) -> "MonomialElement":
        perm = [0] * self.dim
        phases = [_ONE] * self.dim
        for j in range(self.dim):
            perm[self.perm[j]] = j
            phases[self.perm[j]] = self.phases[j]
        return MonomialElement(perm, phases, self.conj, self.flavor,
                               check=False)

    def scale(self, z: RootOfUnity) -> "MonomialElement":
        return MonomialElement(self.perm,
                               tuple(z * p for p in self.phases),
                               self.conj, self.flavor, check=False)

    def __pow__(self, k: int) -> "MonomialElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = identity(self.dim, self.flavor)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_identity_matrix(self) -> bool:
        return (all(self.perm[j] == j for j in range(self.dim))
                and all(p.is_one() for p in self.phases))

    def is_scalar_matrix(self) -> bool:
        return (all(self.perm[j] == j for j in range(self.dim))
                and all(p == self.phases[0] for p in self.phases))

    def scalar_value(self) -> RootOfUnity:
        if not self.is_scalar_matrix():
            raise ValidationError("matrix is not scalar")
        return self.phases[0]

    def trace(self) -> CycSum:
        acc = CycSum.zero()
        for j in range(self.dim):
            if self.perm[j] == j:
                acc = acc + CycSum.of(self.phases[j])
        return acc

    def apply_vec(self, vec: dict[int, CycSum]) -> dict[int, CycSum]:
        """Apply the operator (including conj) to a sparse exact vector."""
        out: dict[int, CycSum] = {}
        for j, c in vec.items():
            if self.conj:
                c = c.conj()
            out[self.perm[j]] = c.scale(self.phases[j])
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, MonomialElement)
                and self.perm == other.perm and self.conj == other.conj
                and self.phases == other.phases)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.perm, self.phases, self.conj))
        return self._hash

    def key(self) -> tuple:
        return (self.perm, tuple((p.num, p.den) for p in self.phases),
                self.conj)

    def dense(self):
        """Dense complex numpy array of the matrix part."""
        import numpy as np
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for j in range(self.dim):
            out[self.perm[j], j] = self.phases[j].complexval()
        return out

    def __repr__(self) -> str:
        tag = "~" if self.conj else ""
        return f"Monomial{tag}(perm={self.perm}, phases={[str(p) for p in self.phases]})"


def identity(dim: int, flavor: str = FLAVOR_COMPLEX) -> MonomialElement:
    return MonomialElement(tuple(range(dim)), (_ONE,) * dim, False, flavor,
                           check=False)


def scalar(dim: int, z: RootOfUnity,
           flavor: str = FLAVOR_COMPLEX) -> MonomialElement:
    return MonomialElement(tuple(range(dim)), (z,) * dim, False, flavor,
                           check=False)


def diagonal(phases, flavor: str = FLAVOR_COMPLEX) -> MonomialElement:
    phases = tuple(phases)
    return MonomialElement(tuple(range(len(phases))), phases, False, flavor,
                           check=False)


def sign_diagonal(signs, flavor: str = FLAVOR_REAL) -> MonomialElement:
    return diagonal((_ONE if s > 0 else _MINUS for s in signs), flavor)


def kron(a: MonomialElement, b: MonomialElement) -> MonomialElement:
    """Kronecker product; index (x, y) maps to x * b.dim + y."""
    if a.conj or b.conj:
        raise ValidationError("kron of antiunitary elements is undefined")
    n = b.dim
    perm = []
    phases = []
    for x in range(a.dim):
        for y in range(n):
            perm.append(a.perm[x] * n + b.perm[y])
            phases.append(a.phases[x] * b.phases[y])
    flavor = a.flavor if a.flavor == b.flavor else FLAVOR_COMPLEX
    return MonomialElement(perm, phases, False, flavor, check=False)


def standard_complex_structure(n: int) -> MonomialElement:
    """J on C^(2n): per coordinate pair (2t, 2t+1), the block [[0,-1],[1,0]]."""
    perm = []
    phases = []
    for t in range(n):
        perm += [2 * t + 1, 2 * t]
        phases += [_ONE, _MINUS]
    return MonomialElement(perm, phases, False, FLAVOR_COMPLEX, check=False)


# -- named constant matrices ------------------------------------------


def clock(n: int, block: int = 1) -> MonomialElement:
    """diag(I_block, w_n I_block, ..., w_n^(n-1) I_block)."""
    if n < 1 or block < 1:
        raise ValidationError("clock needs positive arguments")
    w = RootOfUnity(1, n)
    phases = []
    for t in range(n):
        phases += [w ** t] * block
    return diagonal(phases)


def shift(n: int, block: int = 1) -> MonomialElement:
    """Block cyclic shift: identity blocks on the superdiagonal and in the
    bottom-left corner."""
    if n < 1 or block < 1:
        raise ValidationError("shift needs positive arguments")
    perm = []
    for t in range(n):
        for j in range(block):
            perm.append(((t - 1) % n) * block + j)
    return MonomialElement(perm, (_ONE,) * (n * block), False,
                           FLAVOR_COMPLEX, check=False)


def mat_I_pq(p: int, q: int) -> MonomialElement:
    return sign_diagonal([-1] * p + [1] * q)


def mat_J(n: int) -> MonomialElement:
    """[[0, I_n], [-I_n, 0]]."""
    perm = [n + j for j in range(n)] + [j for j in range(n)]
    phases = [_MINUS] * n + [_ONE] * n
    return MonomialElement(perm, phases, False, FLAVOR_REAL, check=False)


def mat_Jprime(n: int) -> MonomialElement:
    """[[0, I_n], [I_n, 0]]."""
    perm = [n + j for j in range(n)] + [j for j in range(n)]
    return MonomialElement(perm, (_ONE,) * (2 * n), False, FLAVOR_REAL,
                           check=False)


def mat_K(n: int) -> MonomialElement:
    """The 4x4-block matrix with I_n / -I_n antidiagonal blocks."""
    perm = [0] * (4 * n)
    phases = [_ONE] * (4 * n)
    for j in range(n):
        perm[j] = 3 * n + j          # column block 0 -> row block 3, sign -1
        phases[j] = _MINUS
        perm[n + j] = 2 * n + j      # block 1 -> block 2, sign +1
        perm[2 * n + j] = n + j      # block 2 -> block 1, sign -1
        phases[2 * n + j] = _MINUS
        perm[3 * n + j] = j          # block 3 -> block 0, sign +1
    return MonomialElement(perm, phases, False, FLAVOR_REAL, check=False)


def named_matrix(name: str, *args: int) -> MonomialElement:
    """I_pq(p, q), J(n), Jprime(n) or K(n) by tag."""
    table = {"I_pq": (mat_I_pq, 2), "J": (mat_J, 1),
             "Jprime": (mat_Jprime, 1), "K": (mat_K, 1)}
    if name not in table:
        raise ValidationError(f"unknown matrix tag {name!r}")
    fn, nargs = table[name]
    if len(args) != nargs:
        raise ValidationError(f"{name} expects {nargs} dimension argument(s)")
    if any(a < 0 for a in args) or sum(args) == 0:
        raise ValidationError(f"invalid dimensions for {name}")
    return fn(*args)


# -- quaternion embeddings ---------------------------------------------

#: quaternion units written as q = z + j*w with a single nonzero axis;
#: each unit is (z_or_w, jflag).
QUATERNION_UNITS = {
    "1": (_ONE, False),
    "-1": (_MINUS, False),
    "i": (_I, False),
    "-i": (_MINUS_I, False),
    "j": (_ONE, True),
    "-j": (_MINUS, True),
    "k": (_MINUS_I, True),
    "-k": (_I, True),
}


def quaternion_monomial(perm, entries) -> MonomialElement:
    """Embed a quaternionic monomial matrix into C^(2n).

    ``entries[c]`` is (z, jflag): the quaternion entry in column c is z when
    jflag is false and j*z when jflag is true (z a root of unity).  The
    embedding treats H^n as a right C-module with ordered basis
    (1_0, j_0, 1_1, j_1, ...); quaternions act by left multiplication.
    """
    perm = tuple(perm)
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValidationError("perm is not a permutation")
    cperm = [0] * (2 * n)
    cphases: list[RootOfUnity] = [_ONE] * (2 * n)
    for c in range(n):
        r = perm[c]
        z, jflag = entries[c]
        if not isinstance(z, RootOfUnity):
            raise ValidationError("quaternion entry must be a root of unity")
        if not jflag:
            # left multiplication by z: diag(z, conj(z))
            cperm[2 * c] = 2 * r
            cphases[2 * c] = z
            cperm[2 * c + 1] = 2 * r + 1
            cphases[2 * c + 1] = z.conj()
        else:
            # left multiplication by j*w: [[0, -conj(w)], [w, 0]]
            cperm[2 * c] = 2 * r + 1
            cphases[2 * c] = z
            cperm[2 * c + 1] = 2 * r
            cphases[2 * c + 1] = z.conj() * _MINUS
    return MonomialElement(cperm, cphases, False, FLAVOR_QUATERNION)


def quaternion_scalar(name: str, n: int) -> MonomialElement:
    """The scalar quaternion matrix q*I_n, embedded in C^(2n)."""
    if name not in QUATERNION_UNITS:
        raise ValidationError(f"unknown quaternion unit {name!r}")
    unit = QUATERNION_UNITS[name]
    return quaternion_monomial(range(n), [unit] * n)


def quaternion_embed(spec, n: int | None = None) -> MonomialElement:
    """Tag form quaternion_embed("iI", n) or general (perm, entries) form."""
    if isinstance(spec, str):
        if not spec.endswith("I") or n is None:
            raise ValidationError("tag form is ('iI'|'jI'|'kI', n)")
        return quaternion_scalar(spec[:-1], n)
    perm, entries = spec
    return quaternion_monomial(perm, entries)


_PHI_BLOCKS = {
    # axis -> list of (row block, col block, sign)
    "a": [(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, 1)],
    "b": [(0, 2, 1), (1, 3, -1), (2, 0, -1), (3, 1, 1)],
    "c": [(0, 1, 1), (1, 0, -1), (2, 3, 1), (3, 2, -1)],
    "d": [(0, 3, 1), (1, 2, 1), (2, 1, -1), (3, 0, -1)],
}


def _axis_of(z: RootOfUnity, jflag: bool) -> tuple[str, int]:
    if z == _ONE:
        return ("a", 1) if not jflag else ("c", 1)
    if z == _MINUS:
        return ("a", -1) if not jflag else ("c", -1)
    if z == _I:
        return ("b", 1) if not jflag else ("d", -1)
    if z == _MINUS_I:
        return ("b", -1) if not jflag else ("d", 1)
    raise ValidationError("real embedding needs entries among the 8 units")


def phi_real_embed(perm, entries) -> MonomialElement:
    """Embed a quaternionic monomial matrix into O(4n) blockwise.

    The four n-column groups carry the real coefficient matrices of the
    quaternionic entry; entries must be unit quaternions on a single axis.
    """
    perm = tuple(perm)
    n = len(perm)
    rperm = [0] * (4 * n)
    rphases = [_ONE] * (4 * n)
    for col in range(n):
        row = perm[col]
        z, jflag = entries[col]
        axis, sgn = _axis_of(z, jflag)
        for (bi, bj, s) in _PHI_BLOCKS[axis]:
            rperm[bj * n + col] = bi * n + row
            rphases[bj * n + col] = _ONE if s * sgn > 0 else _MINUS
    return MonomialElement(rperm, rphases, False, FLAVOR_REAL)


# -- projective elements ----------------------------------------------

CENTER_FULL = "U1"      # all unit scalars (projective unitary setting)
CENTER_PM = "pm"        # {I, -I}
CENTER_I4 = "i4"        # {I, iI, -I, -iI}

_CENTER_SCALARS = {
    CENTER_PM: (_ONE, _MINUS),
    CENTER_I4: (_ONE, _I, _MINUS, _MINUS_I),
}


class ProjectiveElement:
    """A monomial element modulo a tagged central scalar subgroup."""

    __slots__ = ("rep", "center", "_key")

    def __init__(self, rep: MonomialElement, center: str = CENTER_FULL):
        if center not in (CENTER_FULL, CENTER_PM, CENTER_I4):
            raise ValidationError(f"unknown center tag {center!r}")
        self.rep = rep
        self.center = center
        self._key = None

    def key(self) -> tuple:
        if self._key is not None:
            return self._key
        rep = self.rep
        if self.center == CENTER_FULL:
            z0 = rep.phases[0].inverse()
            norm = tuple(((z0 * p).num, (z0 * p).den) for p in rep.phases)
            key = (rep.perm, norm, rep.conj)
        else:
            cands = []
            for z in _CENTER_SCALARS[self.center]:
                cands.append(tuple(((z * p).num, (z * p).den)
                                   for p in rep.phases))
            key = (rep.perm, min(cands), rep.conj)
        self._key = key
        return key

    def __mul__(self, other: "ProjectiveElement") -> "ProjectiveElement":
        self._check_compatible(other)
        return ProjectiveElement(self.rep * other.rep, self.center)

    def inverse(self) -> "ProjectiveElement":
        return ProjectiveElement(self.rep.inverse(), self.center)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectiveElement):
            return False
        self._check_compatible(other)
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def _check_compatible(self, other: "ProjectiveElement") -> None:
        if self.rep.dim != other.rep.dim:
            raise ValidationError("dimension mismatch")
        if self.center != other.center:
            raise ValidationError("center tag mismatch")
        if self.rep.flavor != other.rep.flavor:
            raise ValidationError("flavor mismatch")

    def is_identity(self) -> bool:
        rep = self.rep
        if rep.conj or any(rep.perm[j] != j for j in range(rep.dim)):
            return False
        if not rep.is_scalar_matrix():
            return False
        z = rep.phases[0]
        if self.center == CENTER_FULL:
            return True
        return z in _CENTER_SCALARS[self.center]

    def is_scalar(self) -> bool:
        return (not self.rep.conj) and self.rep.is_scalar_matrix()

    def order(self, cap: int = 10 ** 6) -> int:
        acc = self
        n = 1
        while not acc.is_identity():
            acc = acc * self
            n += 1
            if n > cap:
                raise ValidationError("projective order exceeds cap")
        return n

    def __repr__(self) -> str:
        return f"[{self.rep!r}]@{self.center}"


def multiply(a: ProjectiveElement, b: ProjectiveElement) -> ProjectiveElement:
    return a * b


def inverse(a: ProjectiveElement) -> ProjectiveElement:
    return a.inverse()


def equal(a: ProjectiveElement, b: ProjectiveElement) -> bool:
    return a == b
