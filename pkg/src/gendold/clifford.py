"""Real anticommuting matrices theta_1..theta_r (r = 2p) of size 2^p.

They generate the full real matrix algebra R(2^p), so they act by real
transformations on the simple module C^(2^p) of the complex Clifford algebra.
That gives the stationary-point-free (Z/2)^r action on CG_{n,k} used when
2^p divides n but not k.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from itertools import product as iproduct
from typing import Any

import numpy as np
from scipy import sparse

from . import numeric

MAX_R = 16

_I2 = np.array([[1, 0], [0, 1]], dtype=np.int8)
_X2 = np.array([[0, 1], [1, 0]], dtype=np.int8)
_Z2 = np.array([[1, 0], [0, -1]], dtype=np.int8)
_J2 = np.array([[0, -1], [1, 0]], dtype=np.int8)  # J^2 = -I
_PAULI = (_I2, _X2, _Z2, _J2)
_PAULI_SQUARE = (1, 1, 1, -1)


def _string_matrix(s: tuple[int, ...]) -> np.ndarray:
    out = np.ones((1, 1), dtype=np.int8)
    for c in s:
        out = np.kron(out, _PAULI[c]).astype(np.int8)
    return out


def _strings_anticommute(s: tuple[int, ...], t: tuple[int, ...]) -> bool:
    # distinct non-identity single-site factors anticommute
    clashes = sum(1 for a, b in zip(s, t) if a and b and a != b)
    return clashes % 2 == 1


def _search(p: int, sign: int, count: int) -> list[np.ndarray]:
    """Deterministic backtracking for `count` anticommuting real Pauli strings
    of length p, each squaring to sign * I."""
    pool = [
        s for s in iproduct(range(4), repeat=p)
        if any(s) and np.prod([_PAULI_SQUARE[c] for c in s]) == sign
    ]
    chosen: list[tuple[int, ...]] = []

    def extend(start: int) -> bool:
        if len(chosen) == count:
            return True
        for idx in range(start, len(pool)):
            s = pool[idx]
            if all(_strings_anticommute(s, t) for t in chosen):
                chosen.append(s)
                if extend(idx + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        raise RuntimeError(f"no {count} anticommuting strings of length {p}, sign {sign}")
    return [_string_matrix(s) for s in chosen]


@lru_cache(maxsize=None)
def _base(kind: str) -> tuple[np.ndarray, ...]:
    # C'_2 = R(2), C_6 = R(8), C_8 = R(16), C'_8 = R(16)
    p, sign, count = {"psi2": (1, 1, 2), "phi6": (3, -1, 6), "phi8": (4, -1, 8),
                      "psi8": (4, 1, 8)}[kind]
    return tuple(_search(p, sign, count))


def _volume(gens: tuple[np.ndarray, ...]) -> np.ndarray:
    out = gens[0].astype(np.int64)
    for g in gens[1:]:
        out = out @ g
    return out.astype(np.int8)


def _periodic(gens: list[np.ndarray], eight: tuple[np.ndarray, ...]) -> list[np.ndarray]:
    """Adjoin eight generators: a_i (x) omega and I (x) b_j, omega = b_1...b_8."""
    omega = _volume(eight)
    size = gens[0].shape[0] if gens else 1
    ident = np.eye(size, dtype=np.int8)
    return [np.kron(a, omega).astype(np.int8) for a in gens] + [
        np.kron(ident, b).astype(np.int8) for b in eight
    ]


def _psi(r: int) -> list[np.ndarray]:
    """r = 2 mod 8: generators squaring to +1."""
    gens = list(_base("psi2"))
    for _ in range((r - 2) // 8):
        gens = _periodic(gens, _base("psi8"))
    return gens


def _phi(r: int) -> list[np.ndarray]:
    """r = 6, 0 mod 8: generators squaring to -1."""
    if r % 8 == 6:
        gens, steps = list(_base("phi6")), (r - 6) // 8
    else:
        gens, steps = list(_base("phi8")), (r - 8) // 8
    for _ in range(steps):
        gens = _periodic(gens, _base("phi8"))
    return gens


def _block(r: int) -> list[np.ndarray]:
    """r = 4 mod 8: 2x2 block matrices built from the psi's of C'_(r-2)."""
    psi = _psi(r - 2)
    h = psi[0].shape[0]
    Z = np.zeros((h, h), dtype=np.int8)
    I = np.eye(h, dtype=np.int8)
    out = [np.block([[Z, q], [-q, Z]]).astype(np.int8) for q in psi]
    out.append(np.block([[I, Z], [Z, -I]]).astype(np.int8))
    out.append(np.block([[Z, I], [I, Z]]).astype(np.int8))
    return out


def expected_square_signs(r: int) -> list[int]:
    if r % 8 == 2:
        return [1] * r
    if r % 8 in (6, 0):
        return [-1] * r
    return [-1] * (r - 2) + [1, 1]


@dataclass(frozen=True)
class RealCliffordRep:
    r: int
    matrices: tuple[np.ndarray, ...]
    square_signs: tuple[int, ...]

    @property
    def p(self) -> int:
        return self.r // 2

    @property
    def size(self) -> int:
        return self.matrices[0].shape[0]

    def to_json(self) -> dict[str, Any]:
        return {
            "r": self.r,
            "size": self.size,
            "square_signs": list(self.square_signs),
            "matrices": [m.astype(int).tolist() for m in self.matrices],
        }


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 2 or r % 2 or r > MAX_R:
        raise numeric.DomainError(f"r must be even with 2 <= r <= {MAX_R}, got {r!r}")


@lru_cache(maxsize=None)
def build_generators(r: int) -> RealCliffordRep:
    _check_r(r)
    if r % 8 == 2:
        mats = _psi(r)
    elif r % 8 == 4:
        mats = _block(r)
    else:
        mats = _phi(r)
    for mat in mats:
        mat.setflags(write=False)
    return RealCliffordRep(r, tuple(mats), tuple(expected_square_signs(r)))


@dataclass
class RelationReport:
    r: int
    violations: list[str] = field(default_factory=list)
    entries_ok: bool = True
    signs_ok: bool = True

    @property
    def ok(self) -> bool:
        return not self.violations and self.entries_ok and self.signs_ok


def verify_relations(rep: RealCliffordRep) -> RelationReport:
    """theta_i theta_j = -theta_j theta_i (i != j), theta_i^2 = sign_i * I."""
    report = RelationReport(rep.r)
    mats = [m.astype(np.int64) for m in rep.matrices]
    ident = np.eye(mats[0].shape[0], dtype=np.int64)
    report.entries_ok = all(np.isin(m, (-1, 0, 1)).all() for m in mats)
    report.signs_ok = list(rep.square_signs) == expected_square_signs(rep.r)
    for i, a in enumerate(mats):
        if not np.array_equal(a @ a, rep.square_signs[i] * ident):
            report.violations.append(f"theta_{i + 1}^2 != {rep.square_signs[i]:+d} I")
        for j in range(i + 1, len(mats)):
            b = mats[j]
            if not np.array_equal(a @ b, -(b @ a)):
                report.violations.append(f"theta_{i + 1}, theta_{j + 1} do not anticommute")
    return report


def _sparse_rank(rows: list[dict[int, int]]) -> int:
    """Exact rank of integer row vectors ({column: value}) by fraction-free elimination."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        vec = {c: v for c, v in row.items() if v}
        while vec:
            col = min(vec)
            piv = pivots.get(col)
            if piv is None:
                g = gcd(*vec.values())
                pivots[col] = {c: v // g for c, v in vec.items()}
                break
            a, b = piv[col], vec[col]
            merged = {}
            for c in vec.keys() | piv.keys():
                nv = a * vec.get(c, 0) - b * piv.get(c, 0)
                if nv:
                    merged[c] = nv
            vec = merged
    return len(pivots)


def algebra_dimension(rep: RealCliffordRep) -> int:
    """Dimension of the span of all 2^r products theta_S.

    The rank is taken of the Gram matrix of the flattened products, which
    has the same rank over Q and is diagonal when the products are orthogonal.
    """
    mats = [sparse.csr_matrix(m.astype(np.int64)) for m in rep.matrices]
    size = mats[0].shape[0]
    prods = [sparse.identity(size, dtype=np.int64, format="csr")]
    for g in mats:
        prods = prods + [(q @ g).tocsr() for q in prods]
    flat = sparse.vstack([q.reshape(1, size * size) for q in prods]).tocsr()
    gram = (flat @ flat.T).tocsr()
    rows = []
    for i in range(gram.shape[0]):
        lo, hi = gram.indptr[i], gram.indptr[i + 1]
        rows.append({int(c): int(v) for c, v in zip(gram.indices[lo:hi], gram.data[lo:hi]) if v})
    return _sparse_rank(rows)


@dataclass(frozen=True)
class FixedPointFreeCertificate:
    """(Z/2)^r acting on CG_{n,k} through theta_i on C^n = n0 copies of C^(2^p).

    A stationary point would be a k-dimensional module over the complex
    Clifford algebra, whose dimension is a multiple of 2^p; 2^p does not
    divide k.  The theta_i are real, so they commute with conjugation and the
    action descends to P(m, CG_{n,k}).
    """

    n: int
    k: int
    p: int
    r: int
    n0: int
    rep: RealCliffordRep
    real: bool
    k_mod_2p: int

    def action_matrices(self) -> list[np.ndarray]:
        """Block-diagonal n x n matrices of the theta_i."""
        ident = np.eye(self.n0, dtype=np.int8)
        return [np.kron(ident, m).astype(np.int8) for m in self.rep.matrices]

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n, "k": self.k, "p": self.p, "r": self.r, "n0": self.n0,
            "real": self.real, "module_dim": 2**self.p, "k_mod_module_dim": self.k_mod_2p,
        }


def fixed_point_free_certificate(n: int, k: int) -> FixedPointFreeCertificate | None:
    """Certificate when nu2(k) < nu2(n); None when the construction does not apply."""
    if not (isinstance(n, int) and isinstance(k, int)) or k < 1 or 2 * k > n:
        raise numeric.DomainError(f"need 1 <= k <= n/2, got n={n}, k={k}")
    p = numeric.nu2(n)
    if numeric.nu2(k) >= p:
        return None
    r = 2 * p
    rep = build_generators(r)
    real = all(np.issubdtype(m.dtype, np.integer) for m in rep.matrices)
    return FixedPointFreeCertificate(n, k, p, r, n // 2**p, rep, real, k % 2**p)
