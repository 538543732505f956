"""Independent reference implementations used only by the tests.

Everything here is written from scratch with plain loops or numpy.linalg and
shares no code with the package.
"""

import itertools

import numpy as np


def amplitudes(terms):
    a = np.zeros(16, complex)
    for bits, v in terms.items():
        a[int(bits, 2)] += v
    return a / np.linalg.norm(a)


def random_vector(n, rng):
    a = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return a / np.linalg.norm(a)


# ---- brute-force partial transposes --------------------------------------------


def bits_of(i, n):
    return [(i >> (n - 1 - k)) & 1 for k in range(n)]


def index_of(bits):
    out = 0
    for b in bits:
        out = 2 * out + b
    return out


def pt_loop(rho, n, p, k=None):
    """Element-by-element partial transpose on qubit p (1-based).

    k=None transposes everything; otherwise only elements with Hamming distance
    k (or 1 and 2 for k=2) whose labels differ on p.
    """
    out = np.array(rho, dtype=complex)
    dim = 2**n
    for i in range(dim):
        for j in range(dim):
            bi, bj = bits_of(i, n), bits_of(j, n)
            h = sum(x != y for x, y in zip(bi, bj))
            if bi[p - 1] == bj[p - 1]:
                continue
            if k is not None and not (h == k or (k == 2 and h == 1)):
                continue
            si, sj = list(bi), list(bj)
            si[p - 1], sj[p - 1] = bj[p - 1], bi[p - 1]
            out[i, j] = rho[index_of(si), index_of(sj)]
    return out


def negativity_eigvalsh(vec, n, p):
    rho = np.outer(vec, vec.conj())
    ev = np.linalg.eigvalsh(pt_loop(rho, n, p))
    return float(np.abs(ev).sum() - ev.sum())


def linear_entropy_trace(vec, n, p):
    t = np.moveaxis(vec.reshape((2,) * n), p - 1, 0).reshape(2, -1)
    r = t @ t.conj().T
    return float(2 * (1 - np.trace(r @ r).real))


# ---- literal four-qubit formulas --------------------------------------------------


def fd(a, p, flipped, bits):
    """Font determinant: bits holds every qubit except p; flipped ones change between columns."""
    t = np.asarray(a).reshape(2, 2, 2, 2)

    def idx(pv, flip):
        b = [0] * 4
        b[p - 1] = pv
        for q, v in bits.items():
            b[q - 1] = (1 - v) if (flip and q in flipped) else v
        return tuple(b)

    return t[idx(0, 0)] * t[idx(1, 1)] - t[idx(1, 0)] * t[idx(0, 1)]


def D4(a, i2, i3, i4):
    return fd(a, 1, {2, 3, 4}, {2: i2, 3: i3, 4: i4})


def D3(a, fixed, fv, sup):
    others = [q for q in (2, 3, 4) if q != fixed]
    return fd(a, 1, set(others), {fixed: fv, others[0]: sup[0], others[1]: sup[1]})


def D2(a, f1, v1, f2, v2):
    o = [q for q in (2, 3, 4) if q not in (f1, f2)][0]
    return fd(a, 1, {o}, {f1: v1, f2: v2, o: 0})


def T4(a):
    return D4(a, 0, 0, 0) + D4(a, 0, 1, 1) - D4(a, 0, 1, 0) - D4(a, 0, 0, 1)


def J12(a):
    c = D4(a, 0, 0, 0) - D4(a, 1, 0, 0) + D4(a, 0, 1, 0) - D4(a, 1, 1, 0)
    return (
        c**2
        + 8 * D2(a, 3, 0, 4, 0) * D2(a, 3, 1, 4, 1)
        + 8 * D2(a, 3, 1, 4, 0) * D2(a, 3, 0, 4, 1)
        - 4 * (D3(a, 3, 0, (0, 0)) - D3(a, 3, 0, (1, 0))) * (D3(a, 3, 1, (0, 0)) - D3(a, 3, 1, (1, 0)))
        - 4 * (D3(a, 4, 0, (0, 0)) - D3(a, 4, 0, (1, 0))) * (D3(a, 4, 1, (0, 0)) - D3(a, 4, 1, (1, 0)))
    )


def J13(a):
    c = D4(a, 0, 0, 0) - D4(a, 0, 1, 0) + D4(a, 0, 0, 1) - D4(a, 0, 1, 1)
    return (
        c**2
        + 8 * (D2(a, 2, 0, 4, 0) * D2(a, 2, 1, 4, 1) + D2(a, 2, 1, 4, 0) * D2(a, 2, 0, 4, 1))
        - 4 * (D3(a, 2, 0, (0, 0)) - D3(a, 2, 0, (1, 0))) * (D3(a, 2, 1, (0, 0)) - D3(a, 2, 1, (1, 0)))
        - 4 * (D3(a, 4, 0, (0, 0)) - D3(a, 4, 0, (0, 1))) * (D3(a, 4, 1, (0, 0)) - D3(a, 4, 1, (0, 1)))
    )


def J14(a):
    c = D4(a, 0, 0, 0) - D4(a, 0, 0, 1) + D4(a, 0, 1, 0) - D4(a, 0, 1, 1)
    return (
        c**2
        + 8 * (D2(a, 2, 0, 3, 0) * D2(a, 2, 1, 3, 1) + D2(a, 2, 0, 3, 1) * D2(a, 2, 1, 3, 0))
        - 4 * (D3(a, 3, 0, (0, 0)) - D3(a, 3, 0, (0, 1))) * (D3(a, 3, 1, (0, 0)) - D3(a, 3, 1, (0, 1)))
        - 4 * (D3(a, 2, 0, (0, 0)) - D3(a, 2, 0, (0, 1))) * (D3(a, 2, 1, (0, 0)) - D3(a, 2, 1, (0, 1)))
    )


J_LITERAL = {(1, 2): J12, (1, 3): J13, (1, 4): J14}


# ---- three-qubit hyperdeterminant ------------------------------------------------


def cayley_hyperdet(b):
    """Cayley hyperdeterminant of a 2x2x2 tensor; tau3 = 4 |Det|."""
    b = np.asarray(b)
    a = {tuple(k): b[k] for k in itertools.product((0, 1), repeat=3)}
    d1 = (a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2 + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
          + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2 + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2)
    d2 = (a[0, 0, 0] * a[1, 1, 1] * a[0, 1, 1] * a[1, 0, 0]
          + a[0, 0, 0] * a[1, 1, 1] * a[1, 0, 1] * a[0, 1, 0]
          + a[0, 0, 0] * a[1, 1, 1] * a[1, 1, 0] * a[0, 0, 1]
          + a[0, 1, 1] * a[1, 0, 0] * a[1, 0, 1] * a[0, 1, 0]
          + a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 0] * a[0, 0, 1]
          + a[1, 0, 1] * a[0, 1, 0] * a[1, 1, 0] * a[0, 0, 1])
    d3 = (a[0, 0, 0] * a[1, 1, 0] * a[1, 0, 1] * a[0, 1, 1]
          + a[1, 1, 1] * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0])
    return d1 - 2 * d2 + 4 * d3


# ---- Haar unitaries without the package's sampler -------------------------------


def haar_unitary(dim, rng):
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def apply_on(vec, n, q, u):
    t = vec.reshape((2,) * n)
    t = np.moveaxis(np.tensordot(u, t, axes=([1], [q - 1])), 0, q - 1)
    return t.reshape(-1)
