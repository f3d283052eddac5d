"""Pure-Python integer kernels.  Same signatures as the compiled ``_kernels``."""

from math import gcd


def eval_homogeneous(terms, p, r, q, degree):
    """Sum of ``c * p**i * r**j * q**(degree-i-j)`` over ``terms = [(i, j, c), ...]``."""
    pp = [1]
    rp = [1]
    qp = [1]
    for _ in range(degree):
        pp.append(pp[-1] * p)
        rp.append(rp[-1] * r)
        qp.append(qp[-1] * q)
    acc = 0
    for i, j, c in terms:
        acc += c * pp[i] * rp[j] * qp[degree - i - j]
    return acc


def prepare_transfer(rows):
    return rows


def transfer(rows, h):
    """Sparse integer matrix-vector product; ``rows[k] = [(col, weight), ...]``."""
    out = []
    for row in rows:
        acc = 0
        for col, w in row:
            acc += w * h[col]
        out.append(acc)
    return out


def content_reduce(h):
    """Divide out the positive gcd of ``h``; returns ``(reduced, g)``."""
    g = 0
    for x in h:
        g = gcd(g, x)
        if g == 1:
            return list(h), 1
    if g == 0:
        return list(h), 1
    return [x // g for x in h], g


def all_positive(h):
    for x in h:
        if x <= 0:
            return False
    return True
