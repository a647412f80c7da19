"""Self-contained construction of a faithful permutation representation of G2(4):2.

The group is built from scratch, with no external group-theory data:

1. Construct the 14-dimensional Chevalley Z-form of the Lie algebra of type G2
   (Cartan subalgebra plus one basis vector per root).  Structure-constant
   magnitudes come from root strings; the signs are found by a small exhaustive
   search validated against the full Jacobi identity.
2. Exponentiate the nilpotent adjoint maps ad(e_r) over Z.  The divided powers
   ad(e_r)^k / k! are integer matrices, so they reduce mod 2 and give the root
   elements x_r(t) of the Chevalley group G2(4) as 14x14 matrices over GF(4).
3. The group generated by x_r(t) for the two simple roots, their negatives and
   t in {1, w} is G2(4).  It acts on the 1365 projective points spanned by the
   long-root orbit of the highest-root vector; this action is faithful and
   transitive.  The coordinatewise Frobenius t -> t^2 normalizes the group and
   induces the outer involution, so together the nine permutations generate
   G2(4):2 on 1365 points.

The resulting generator file is vendored in ``data/g24_2_generators.txt`` and
can be regenerated with ``python -m nearoct.chevalley <path>``.
"""

from __future__ import annotations

import itertools
import sys

import numpy as np

# ---------------------------------------------------------------------------
# G2 root system, in coordinates (m, n) for m*alpha + n*beta
# (alpha short, beta long; (a,a)=2, (b,b)=6, (a,b)=-3).

SIMPLE_SHORT = (1, 0)
SIMPLE_LONG = (0, 1)
HIGHEST_ROOT = (3, 2)

POSITIVE_ROOTS = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
ROOTS = POSITIVE_ROOTS + [(-m, -n) for (m, n) in POSITIVE_ROOTS]
_ROOT_SET = set(ROOTS)


def _inner(r, s):
    (m1, n1), (m2, n2) = r, s
    return 2 * m1 * m2 + 6 * n1 * n2 - 3 * (m1 * n2 + m2 * n1)


def _neg(r):
    return (-r[0], -r[1])


def _add(r, s):
    return (r[0] + s[0], r[1] + s[1])


def _cartan_pairing(r, simple_idx):
    """<r, alpha_i^vee> for the two simple roots."""
    m, n = r
    if simple_idx == 0:  # alpha^vee
        return 2 * m - 3 * n
    return -m + 2 * n  # beta^vee


def _coroot_coeffs(r):
    """r^vee expressed in the basis (alpha^vee, beta^vee); integral for all roots."""
    m, n = r
    norm = _inner(r, r)
    c1, c2 = 2 * m, 6 * n
    assert c1 % norm == 0 and c2 % norm == 0
    return (c1 // norm, c2 // norm)


def _string_down(r, s):
    """Largest p >= 0 with s - p*r a root."""
    p = 0
    cur = (s[0] - r[0], s[1] - r[1])
    while cur in _ROOT_SET:
        p += 1
        cur = (cur[0] - r[0], cur[1] - r[1])
    return p


# Basis layout: index 0,1 = h_alpha, h_beta; index 2.. = e_r in ROOTS order.
DIM = 2 + len(ROOTS)
_ROOT_INDEX = {r: 2 + i for i, r in enumerate(ROOTS)}


def _structure_tensor():
    """Integer tensor C with [x_i, x_j] = sum_k C[i,j,k] x_k, Jacobi-verified.

    The sign of N_{r,s} is a free choice on one representative of each
    {r,s}/{-r,-s} pair class; every assignment satisfying Jacobi yields a valid
    Chevalley basis.  We take the lexicographically first valid assignment so
    the construction is deterministic.
    """
    summable = [
        (r, s)
        for r, s in itertools.combinations(ROOTS, 2)
        if _add(r, s) in _ROOT_SET
    ]
    # group unordered pairs into classes under {r,s} <-> {-r,-s}
    classes = []
    seen = set()
    for r, s in summable:
        key = frozenset((r, s))
        if key in seen:
            continue
        seen.add(key)
        seen.add(frozenset((_neg(r), _neg(s))))
        classes.append((r, s))

    def build(signs):
        n_const = {}
        for (r, s), sign in zip(classes, signs):
            val = sign * (_string_down(r, s) + 1)
            for (u, v), w in (((r, s), val), ((_neg(r), _neg(s)), -val)):
                n_const[(u, v)] = w
                n_const[(v, u)] = -w
        C = np.zeros((DIM, DIM, DIM), dtype=np.int64)
        for i in range(2):
            for r in ROOTS:
                j = _ROOT_INDEX[r]
                C[i, j, j] = _cartan_pairing(r, i)
                C[j, i, j] = -_cartan_pairing(r, i)
        for r in ROOTS:
            i = _ROOT_INDEX[r]
            c1, c2 = _coroot_coeffs(r)
            C[i, _ROOT_INDEX[_neg(r)], 0] = c1
            C[i, _ROOT_INDEX[_neg(r)], 1] = c2
            for s in ROOTS:
                if (r, s) in n_const:
                    C[i, _ROOT_INDEX[s], _ROOT_INDEX[_add(r, s)]] = n_const[(r, s)]
        return C

    def jacobi_holds(C):
        A = np.einsum("jtm,imk->ijtk", C, C)
        J = A + A.transpose(1, 2, 0, 3) + A.transpose(2, 0, 1, 3)
        return not J.any()

    for signs in itertools.product((1, -1), repeat=len(classes)):
        C = build(signs)
        if jacobi_holds(C):
            return C
    raise RuntimeError("no consistent Chevalley structure constants found")


def _adjoint(C, r):
    """Matrix of ad(e_r) acting on column vectors in the Chevalley basis."""
    i = _ROOT_INDEX[r]
    return C[i].T.copy()


def _divided_powers(M):
    """[M^k / k! for k = 0 .. nilpotency], verified integral."""
    out = [np.eye(DIM, dtype=np.int64)]
    power = np.eye(DIM, dtype=np.int64)
    fact = 1
    for k in range(1, DIM):
        power = power @ M
        if not power.any():
            break
        fact *= k
        assert not (power % fact).any(), "divided power not integral"
        out.append(power // fact)
    else:
        raise RuntimeError("ad(e_r) is not nilpotent")
    return out


# ---------------------------------------------------------------------------
# GF(4) = {0, 1, w, w+1} encoded as 0,1,2,3; addition is XOR.

GF4_MUL = np.zeros((4, 4), dtype=np.uint8)
for _a in range(4):
    for _b in range(4):
        # polynomial multiplication mod w^2 + w + 1, bits (hi=w, lo=1)
        prod = 0
        for bit in range(2):
            if (_b >> bit) & 1:
                prod ^= _a << bit
        for deg in (3, 2):
            if (prod >> deg) & 1:
                prod ^= 0b111 << (deg - 2)
        GF4_MUL[_a, _b] = prod & 3

GF4_INV = {1: 1, 2: 3, 3: 2}
GF4_SQUARE = np.array([0, 1, 3, 2], dtype=np.uint8)


def gf4_matmul(A, B):
    acc = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint8)
    for k in range(A.shape[1]):
        acc ^= GF4_MUL[A[:, k][:, None], B[k, :][None, :]]
    return acc


def gf4_matvec(A, v):
    return np.bitwise_xor.reduce(GF4_MUL[A, v[None, :]], axis=1)


def _root_element(powers, t):
    """x_r(t) over GF(4) from the integer divided-power matrices."""
    X = np.zeros((DIM, DIM), dtype=np.uint8)
    tk = 1
    for A in powers:
        X ^= GF4_MUL[tk, (A % 2).astype(np.uint8)]
        tk = GF4_MUL[tk, t]
    return X


def generator_matrices():
    """Eight matrix generators of G2(4): x_r(t), r simple or its negative, t in {1,w}."""
    C = _structure_tensor()
    gens = []
    for r in (SIMPLE_SHORT, _neg(SIMPLE_SHORT), SIMPLE_LONG, _neg(SIMPLE_LONG)):
        powers = _divided_powers(_adjoint(C, r))
        for t in (1, 2):
            X = _root_element(powers, t)
            assert (gf4_matmul(X, X) == np.eye(DIM, dtype=np.uint8)).all()
            gens.append(X)
    return gens


def _normalize(v):
    """Scale so the first nonzero coordinate is 1 (canonical projective form)."""
    for x in v:
        if x:
            return GF4_MUL[GF4_INV[int(x)], v]
    raise ValueError("zero vector")


def build_permutation_rep():
    """Permutations of the 1365 long-root points: 8 for G2(4) plus the Frobenius.

    Returns (degree, perms) where perms[i][p] is the image of point p.  The
    point indexing is the BFS discovery order from the highest-root vector.
    """
    gens = generator_matrices()
    v0 = np.zeros(DIM, dtype=np.uint8)
    v0[_ROOT_INDEX[HIGHEST_ROOT]] = 1

    index = {v0.tobytes(): 0}
    points = [v0]
    frontier = [v0]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = _normalize(gf4_matvec(g, v))
                key = w.tobytes()
                if key not in index:
                    index[key] = len(points)
                    points.append(w)
                    nxt.append(w)
        frontier = nxt
    degree = len(points)
    if degree != 1365:
        raise RuntimeError(f"long-root orbit has size {degree}, expected 1365")

    perms = []
    for g in gens:
        img = np.empty(degree, dtype=np.int64)
        for p, v in enumerate(points):
            img[p] = index[_normalize(gf4_matvec(g, v)).tobytes()]
        perms.append(img)
    frob = np.empty(degree, dtype=np.int64)
    for p, v in enumerate(points):
        frob[p] = index[_normalize(GF4_SQUARE[v]).tobytes()]
    perms.append(frob)
    for img in perms:
        assert len(np.unique(img)) == degree
    return degree, perms


def _cycles(img):
    seen = np.zeros(len(img), dtype=bool)
    out = []
    for start in range(len(img)):
        if seen[start] or img[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        cur = int(img[start])
        while cur != start:
            cyc.append(cur)
            seen[cur] = True
            cur = int(img[cur])
        out.append(cyc)
    return out


def write_generator_file(path):
    degree, perms = build_permutation_rep()
    with open(path, "w") as fh:
        fh.write("# Generators of G2(4):2 acting on the 1365 long-root points,\n")
        fh.write("# built by nearoct.chevalley (deterministic; regenerate with\n")
        fh.write("# `python -m nearoct.chevalley <path>`).  The last generator\n")
        fh.write("# is the field automorphism.\n")
        fh.write(f"degree {degree}\n")
        for img in perms:
            parts = [
                "(" + ",".join(str(x + 1) for x in cyc) + ")" for cyc in _cycles(img)
            ]
            fh.write("".join(parts) + "\n")


if __name__ == "__main__":
    write_generator_file(sys.argv[1] if len(sys.argv) > 1 else "g24_2_generators.txt")
