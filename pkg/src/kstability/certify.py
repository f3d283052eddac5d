"""Exact positivity certificates on triangles via Bernstein coefficients.

A polynomial of total degree ``<= n`` on a triangle ``(v0, v1, v2)`` is
written in barycentric coordinates as ``sum_alpha beta_alpha * B_alpha``
with ``B_alpha = multinomial(n; alpha) * l0**a0 * l1**a1 * l2**a2``.  The
Bernstein basis is a partition of unity with nonnegative members, so
``min(beta) > 0`` proves ``f > 0`` on the closed triangle.

Two independent routes produce the coefficients:

* :func:`bernstein_coefficients` converts a BiPoly directly for any
  triangle (used on the root cell and on replay);
* the subdivision engine keeps integer multiples of the homogeneous
  barycentric coefficients and pushes them to the four midpoint children
  with fixed integer transfer matrices (the hot kernel).

Cells are labelled by their path from the root, a string over ``0123``.
Child ``k < 3`` keeps vertex ``k`` of its parent; child ``3`` is the
middle triangle ``(m12, m02, m01)``.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm
from typing import Iterable, Sequence

from . import kernels
from .criterion import assemble_C, homogenized_C, reduced_C_tilde
from .ratpoly import BiPoly, Number, bipoly_eval, fraction_str, multinomial

Point = tuple[Fraction, Fraction]

CERT_FORMAT = "kstability-certificate/1"

POSITIVE = "Positive"
NEGATIVE = "Negative"
INCONCLUSIVE = "Inconclusive"

CERTIFIED = "Certified"
REFUTED = "Refuted"


class DegreeTooLow(ValueError):
    pass


class DegenerateRegion(ValueError):
    pass


class ReplayError(AssertionError):
    """A certificate failed independent re-verification."""


def _pt(p) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


@dataclass(frozen=True)
class TriangleRegion:
    v0: Point
    v1: Point
    v2: Point

    def __post_init__(self):
        for name in ("v0", "v1", "v2"):
            object.__setattr__(self, name, _pt(getattr(self, name)))
        if self.signed_area2() == 0:
            raise DegenerateRegion(f"zero-area triangle {self.vertices}")

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.v0, self.v1, self.v2)

    def signed_area2(self) -> Fraction:
        (x0, y0), (x1, y1), (x2, y2) = self.vertices
        return (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0)

    def area(self) -> Fraction:
        return abs(self.signed_area2()) / 2

    def point(self, l0: Number, l1: Number, l2: Number) -> Point:
        (x0, y0), (x1, y1), (x2, y2) = self.vertices
        return (l0 * x0 + l1 * x1 + l2 * x2, l0 * y0 + l1 * y1 + l2 * y2)

    def centroid(self) -> Point:
        t = Fraction(1, 3)
        return self.point(t, t, t)

    def contains(self, p: Point) -> bool:
        (x0, y0), (x1, y1), (x2, y2) = self.vertices
        x, y = _pt(p)
        d = self.signed_area2()
        l1 = ((x - x0) * (y2 - y0) - (x2 - x0) * (y - y0)) / d
        l2 = ((x1 - x0) * (y - y0) - (x - x0) * (y1 - y0)) / d
        return l1 >= 0 and l2 >= 0 and l1 + l2 <= 1

    def children(self) -> tuple["TriangleRegion", ...]:
        v0, v1, v2 = self.vertices
        m01, m12, m02 = _mid(v0, v1), _mid(v1, v2), _mid(v0, v2)
        return (
            TriangleRegion(v0, m01, m02),
            TriangleRegion(m01, v1, m12),
            TriangleRegion(m02, m12, v2),
            TriangleRegion(m12, m02, m01),
        )

    def descend(self, path: str) -> "TriangleRegion":
        cell = self
        for ch in path:
            cell = cell.children()[int(ch)]
        return cell

    def to_json(self) -> list[list[str]]:
        return [[fraction_str(x), fraction_str(y)] for x, y in self.vertices]

    @classmethod
    def from_json(cls, data) -> "TriangleRegion":
        return cls(*[(Fraction(x), Fraction(y)) for x, y in data])


def _mid(p: Point, q: Point) -> Point:
    return ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)


# --------------------------------------------------------------------------
# Bernstein coefficients, direct route


@lru_cache(maxsize=None)
def bernstein_indices(n: int) -> tuple[tuple[int, int, int], ...]:
    """Multi-indices ``(a0, a1, a2)`` of total ``n``, in fixed order."""
    return tuple(
        (n - i - j, i, j) for i in range(n + 1) for j in range(n + 1 - i)
    )


def _local_taylor(f: BiPoly, region: TriangleRegion) -> dict[tuple[int, int], Fraction]:
    # f(v0 + u (v1 - v0) + w (v2 - v0)) as a polynomial in (u, w)
    (x0, y0), (x1, y1), (x2, y2) = region.vertices
    a = BiPoly({(0, 0): x0, (1, 0): x1 - x0, (0, 1): x2 - x0})
    b = BiPoly({(0, 0): y0, (1, 0): y1 - y0, (0, 1): y2 - y0})
    apow = [BiPoly.constant(1)]
    bpow = [BiPoly.constant(1)]
    out = BiPoly()
    for (i, j), c in f.terms.items():
        while len(apow) <= i:
            apow.append(apow[-1] * a)
        while len(bpow) <= j:
            bpow.append(bpow[-1] * b)
        out = out + apow[i] * bpow[j] * c
    return out.terms


def bernstein_coefficients(
    f: BiPoly, region: TriangleRegion, degree: int
) -> list[Fraction]:
    """Exact Bernstein coefficients of ``f`` over ``region``, in
    :func:`bernstein_indices` order.
    """
    if degree < f.total_degree:
        raise DegreeTooLow(f"degree {degree} < total degree {f.total_degree}")
    local = _local_taylor(f, region)
    out = []
    for alpha in bernstein_indices(degree):
        a0, a1, a2 = alpha
        acc = Fraction(0)
        for (k, l), d in local.items():
            if k <= a1 and l <= a2:
                rest = degree - k - l
                acc += d * multinomial(rest, (a0, a1 - k, a2 - l))
        out.append(acc / multinomial(degree, alpha))
    return out


# --------------------------------------------------------------------------
# subdivision engine, integer route

# Child vertices in parent barycentric coordinates, doubled to stay integral.
_CHILD_MAPS = (
    ((2, 0, 0), (1, 1, 0), (1, 0, 1)),
    ((1, 1, 0), (0, 2, 0), (0, 1, 1)),
    ((1, 0, 1), (0, 1, 1), (0, 0, 2)),
    ((0, 1, 1), (1, 0, 1), (1, 1, 0)),
)


def _linear_form_powers(column: Sequence[int], n: int) -> list[dict]:
    # powers of sum_j M_ij mu_j for one parent coordinate i
    out = [{(0, 0, 0): 1}]
    for _ in range(n):
        nxt: dict[tuple[int, int, int], int] = {}
        for mono, c in out[-1].items():
            for j in range(3):
                w = column[j]
                if w:
                    m = list(mono)
                    m[j] += 1
                    key = tuple(m)
                    nxt[key] = nxt.get(key, 0) + c * w
        out.append(nxt)
    return out


@lru_cache(maxsize=None)
def transfer_rows(n: int, child: int) -> list[list[tuple[int, int]]]:
    """Sparse rows of the map from parent to child homogeneous coefficients.

    Parent coordinate ``l_i`` equals ``sum_j M[j][i] mu_j / 2`` where row
    ``M[j]`` is child vertex ``j``; the matrix drops the ``2**-n`` factor.
    """
    m = _CHILD_MAPS[child]
    idx = bernstein_indices(n)
    pos = {alpha: k for k, alpha in enumerate(idx)}
    powers = [_linear_form_powers([m[j][i] for j in range(3)], n) for i in range(3)]
    cols: list[dict[int, int]] = [dict() for _ in idx]
    for src, alpha in enumerate(idx):
        p0, p1, p2 = (powers[i][alpha[i]] for i in range(3))
        acc: dict[tuple[int, int, int], int] = {}
        for (m0, c0), (m1, c1), (m2, c2) in product(p0.items(), p1.items(), p2.items()):
            key = (m0[0] + m1[0] + m2[0], m0[1] + m1[1] + m2[1], m0[2] + m1[2] + m2[2])
            acc[key] = acc.get(key, 0) + c0 * c1 * c2
        for key, c in acc.items():
            if c:
                cols[pos[key]][src] = c
    return [sorted(col.items()) for col in cols]


def _scaled_homogeneous(beta: Sequence[Fraction], n: int) -> tuple[list[int], Fraction]:
    """Integer vector ``h`` and positive scale ``s`` with
    ``beta_alpha = h_alpha / (s * multinomial(alpha))``.
    """
    hom = [b * multinomial(n, alpha) for b, alpha in zip(beta, bernstein_indices(n))]
    den = lcm(*(x.denominator for x in hom))
    h = [int(x * den) for x in hom]
    h, g = kernels.content_reduce(h)
    return h, Fraction(den, g)


def _beta_from_scaled(h: Sequence[int], s: Fraction, n: int) -> list[Fraction]:
    return [
        Fraction(x) / (s * multinomial(n, alpha))
        for x, alpha in zip(h, bernstein_indices(n))
    ]


@dataclass
class Leaf:
    path: str
    region: TriangleRegion
    evidence: str
    coefficients: list[Fraction] = field(default_factory=list)
    witness: Point | None = None
    witness_value: Fraction | None = None

    def to_json(self) -> dict:
        d = {
            "path": self.path,
            "vertices": self.region.to_json(),
            "evidence": self.evidence,
            "coefficients": [fraction_str(c) for c in self.coefficients],
        }
        if self.witness is not None:
            d["witness"] = [fraction_str(self.witness[0]), fraction_str(self.witness[1])]
            d["witness_value"] = fraction_str(self.witness_value)
        return d


@dataclass
class PositivityCertificate:
    polynomial_id: str
    region: TriangleRegion
    degree: int
    max_depth: int
    leaves: list[Leaf]
    outcome: str
    witness: Point | None = None
    witness_value: Fraction | None = None

    @property
    def certified(self) -> bool:
        return self.outcome == CERTIFIED

    @property
    def unresolved(self) -> list[Leaf]:
        return [lf for lf in self.leaves if lf.evidence == INCONCLUSIVE]

    @property
    def depth(self) -> int:
        return max((len(lf.path) for lf in self.leaves), default=0)

    def stats(self) -> dict[str, int]:
        out = {POSITIVE: 0, NEGATIVE: 0, INCONCLUSIVE: 0}
        for lf in self.leaves:
            out[lf.evidence] += 1
        out["depth"] = self.depth
        return out

    def to_json(self) -> dict:
        d = {
            "polynomial_id": self.polynomial_id,
            "region": self.region.to_json(),
            "degree": self.degree,
            "max_depth": self.max_depth,
            "depth": self.depth,
            "outcome": self.outcome,
            "leaves": [lf.to_json() for lf in self.leaves],
        }
        if self.witness is not None:
            d["witness"] = [fraction_str(self.witness[0]), fraction_str(self.witness[1])]
            d["witness_value"] = fraction_str(self.witness_value)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "PositivityCertificate":
        leaves = []
        for ld in d["leaves"]:
            w = ld.get("witness")
            leaves.append(
                Leaf(
                    path=ld["path"],
                    region=TriangleRegion.from_json(ld["vertices"]),
                    evidence=ld["evidence"],
                    coefficients=[Fraction(c) for c in ld["coefficients"]],
                    witness=_pt(w) if w else None,
                    witness_value=Fraction(ld["witness_value"]) if w else None,
                )
            )
        w = d.get("witness")
        return cls(
            polynomial_id=d["polynomial_id"],
            region=TriangleRegion.from_json(d["region"]),
            degree=d["degree"],
            max_depth=d["max_depth"],
            leaves=leaves,
            outcome=d["outcome"],
            witness=_pt(w) if w else None,
            witness_value=Fraction(d["witness_value"]) if w else None,
        )


# --------------------------------------------------------------------------
# named polynomials

POLYNOMIALS = ("C", "C_tilde")


def named_polynomial(name: str) -> BiPoly:
    if name == "C":
        return assemble_C()
    if name == "C_tilde":
        return reduced_C_tilde()
    raise KeyError(f"unknown polynomial id {name!r}")


def _sample_points(region: TriangleRegion) -> list[Point]:
    return [region.v0, region.v1, region.v2, region.centroid()]


def _process_cell(args):
    """Classify one cell; pure function of its arguments (runs in workers)."""
    f, n, path, region, h, s, at_limit = args
    if kernels.all_positive(h):
        return ("leaf", Leaf(path, region, POSITIVE, _beta_from_scaled(h, s, n)))
    for pt in _sample_points(region):
        v = bipoly_eval(f, *pt)
        if v <= 0:
            return (
                "leaf",
                Leaf(path, region, NEGATIVE, _beta_from_scaled(h, s, n), pt, v),
            )
    if at_limit:
        return ("leaf", Leaf(path, region, INCONCLUSIVE, _beta_from_scaled(h, s, n)))
    kids = []
    two_n = 2**n
    for k, child in enumerate(region.children()):
        hk = kernels.transfer(transfer_rows(n, k), h)
        hk, g = kernels.content_reduce(hk)
        kids.append((path + str(k), child, hk, s * two_n / g))
    return ("split", kids)


def certify_positive(
    f: BiPoly | str,
    region: TriangleRegion,
    max_depth: int,
    degree: int | None = None,
    workers: int = 1,
    polynomial_id: str | None = None,
) -> PositivityCertificate:
    """Subdivide ``region`` until ``f`` is proven positive, refuted or the
    depth limit is hit.

    Cells are processed breadth first; leaves are reported in path order,
    so the certificate does not depend on ``workers``.  On a refutation the
    first witness in path order is reported.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    if isinstance(f, str):
        polynomial_id, f = f, named_polynomial(f)
    polynomial_id = polynomial_id or "custom"
    n = max(f.total_degree, 0) if degree is None else degree
    root_beta = bernstein_coefficients(f, region, n)
    h, s = _scaled_homogeneous(root_beta, n)
    frontier = [("", region, h, s)]
    leaves: list[Leaf] = []
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        depth = 0
        while frontier:
            jobs = [(f, n, p, r, hh, ss, depth >= max_depth) for p, r, hh, ss in frontier]
            if pool is not None:
                results = list(pool.map(_process_cell, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
            else:
                results = [_process_cell(j) for j in jobs]
            frontier = []
            for kind, payload in results:
                if kind == "leaf":
                    leaves.append(payload)
                else:
                    frontier.extend(payload)
            depth += 1
    finally:
        if pool is not None:
            pool.shutdown()
    leaves.sort(key=lambda lf: lf.path)
    negatives = [lf for lf in leaves if lf.evidence == NEGATIVE]
    if negatives:
        w = negatives[0]
        return PositivityCertificate(
            polynomial_id, region, n, max_depth, leaves, REFUTED, w.witness, w.witness_value
        )
    if any(lf.evidence == INCONCLUSIVE for lf in leaves):
        return PositivityCertificate(polynomial_id, region, n, max_depth, leaves, INCONCLUSIVE)
    return PositivityCertificate(polynomial_id, region, n, max_depth, leaves, CERTIFIED)


# --------------------------------------------------------------------------
# margin ladder


def shrunken_triangle(delta: Number) -> TriangleRegion:
    """``{delta <= a, a + delta <= b, b <= 1/2}``."""
    d = Fraction(delta)
    if d <= 0 or 2 * d >= Fraction(1, 2):
        raise DegenerateRegion(f"delta = {d} leaves no triangle (need 0 < delta < 1/4)")
    half = Fraction(1, 2)
    return TriangleRegion((d, 2 * d), (d, half), (half - d, half))


def diagonal_triangle(delta: Number) -> TriangleRegion:
    """``{delta <= a <= b <= 1/2 - delta}``; the wall ``a = b`` is included."""
    d = Fraction(delta)
    if d <= 0 or 2 * d >= Fraction(1, 2):
        raise DegenerateRegion(f"delta = {d} leaves no triangle (need 0 < delta < 1/4)")
    top = Fraction(1, 2) - d
    return TriangleRegion((d, d), (d, top), (top, top))


def certify_margin_ladder(
    deltas: Iterable[Number], max_depth: int, workers: int = 1
) -> list[PositivityCertificate]:
    """For each delta: ``C`` on the shrunken triangle, then ``C/(b-a)`` on
    the diagonal triangle.  All regions are validated before any work.
    """
    plan = []
    for d in deltas:
        plan.append(("C", shrunken_triangle(d)))
        plan.append(("C_tilde", diagonal_triangle(d)))
    return [certify_positive(pid, reg, max_depth, workers=workers) for pid, reg in plan]


# --------------------------------------------------------------------------
# serialization and replay


def dumps_certificates(certs: Sequence[PositivityCertificate]) -> str:
    doc = {"format": CERT_FORMAT, "certificates": [c.to_json() for c in certs]}
    return json.dumps(doc, indent=1) + "\n"


def loads_certificates(text: str) -> list[PositivityCertificate]:
    doc = json.loads(text)
    if doc.get("format") != CERT_FORMAT:
        raise ReplayError(f"unknown certificate format {doc.get('format')!r}")
    return [PositivityCertificate.from_json(c) for c in doc["certificates"]]


def _check_partition(cert: PositivityCertificate) -> None:
    paths = [lf.path for lf in cert.leaves]
    if len(set(paths)) != len(paths):
        raise ReplayError("duplicate leaf paths")
    # every leaf's ancestors must have all four children present
    pending = {""}
    covered = set(paths)
    internal = set()
    for p in paths:
        for k in range(len(p)):
            internal.add(p[:k])
    if internal & covered:
        raise ReplayError("a leaf is also an internal node")
    for node in internal | pending:
        if node in covered:
            continue
        for k in "0123":
            child = node + k
            if child not in covered and child not in internal:
                raise ReplayError(f"cell {child!r} missing from the subdivision")
    # areas tile the root exactly
    total = sum((lf.region.area() for lf in cert.leaves), Fraction(0))
    if total != cert.region.area():
        raise ReplayError("leaf areas do not sum to the region area")


def replay(cert: PositivityCertificate, f: BiPoly | None = None) -> bool:
    """Re-verify a certificate with exact arithmetic, independently of the
    subdivision engine.  Raises :class:`ReplayError` on any discrepancy and
    returns ``True`` if the recorded outcome is confirmed.
    """
    f = named_polynomial(cert.polynomial_id) if f is None else f
    if cert.degree < f.total_degree:
        raise ReplayError("recorded degree below the polynomial's degree")
    _check_partition(cert)
    for lf in cert.leaves:
        if lf.region != cert.region.descend(lf.path):
            raise ReplayError(f"leaf {lf.path!r}: vertices do not match its path")
        beta = bernstein_coefficients(f, lf.region, cert.degree)
        if beta != lf.coefficients:
            raise ReplayError(f"leaf {lf.path!r}: Bernstein coefficients differ")
        positive = all(x > 0 for x in beta)
        if lf.evidence == POSITIVE and not positive:
            raise ReplayError(f"leaf {lf.path!r}: marked Positive with a coefficient <= 0")
        if lf.evidence == NEGATIVE:
            if lf.witness is None or not lf.region.contains(lf.witness):
                raise ReplayError(f"leaf {lf.path!r}: witness missing or outside the cell")
            v = bipoly_eval(f, *lf.witness)
            if v != lf.witness_value or v > 0:
                raise ReplayError(f"leaf {lf.path!r}: witness does not evaluate to <= 0")
        if lf.evidence == INCONCLUSIVE and positive:
            raise ReplayError(f"leaf {lf.path!r}: marked Inconclusive but all positive")
    evidences = {lf.evidence for lf in cert.leaves}
    if cert.outcome == CERTIFIED and evidences != {POSITIVE}:
        raise ReplayError("Certified outcome with non-positive leaves")
    if cert.outcome == REFUTED:
        if NEGATIVE not in evidences or cert.witness is None:
            raise ReplayError("Refuted outcome without a witness")
        if bipoly_eval(f, *cert.witness) > 0:
            raise ReplayError("top-level witness evaluates positive")
    if cert.outcome == INCONCLUSIVE and (INCONCLUSIVE not in evidences or NEGATIVE in evidences):
        raise ReplayError("Inconclusive outcome inconsistent with its leaves")
    return True


# --------------------------------------------------------------------------
# grid scan


@dataclass(frozen=True)
class ScanResult:
    n: int
    rows: list[tuple[Fraction, Fraction, Fraction]]
    minimum: Fraction
    argmin: Point


def _scan_column(args) -> list[tuple[Fraction, Fraction, Fraction]]:
    n, i = args
    hc = homogenized_C()
    q = 2 * n
    scale = hc.den * q**hc.degree
    out = []
    for j in range(i + 1, n + 1):
        v = kernels.eval_homogeneous(hc.terms, i, j, q, hc.degree)
        out.append((Fraction(i, q), Fraction(j, q), Fraction(v, scale)))
    return out


def scan_grid(n: int, workers: int = 1) -> ScanResult:
    """Exact ``C`` on ``{(i/2n, j/2n) : 0 < i < j <= n}``, rows ordered by ``(i, j)``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    jobs = [(n, i) for i in range(1, n)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            cols = list(pool.map(_scan_column, jobs))
    else:
        cols = [_scan_column(j) for j in jobs]
    rows = [r for col in cols for r in col]
    best = min(rows, key=lambda r: r[2])
    return ScanResult(n, rows, best[2], (best[0], best[1]))


# --------------------------------------------------------------------------
# whole closed triangle, nonnegative-coefficient argument

AMPLE_TRIANGLE = ((Fraction(0), Fraction(0)), (Fraction(0), Fraction(1, 2)), (Fraction(1, 2), Fraction(1, 2)))


@dataclass
class ClosedTriangleProof:
    """Bernstein coefficients of ``f`` on the closed triangle
    ``(0,0), (0,1/2), (1/2,1/2)``.

    Every basis polynomial is strictly positive on the open triangle and
    the ones with ``alpha[0] == 0`` are strictly positive on the open edge
    ``b = 1/2``.  So if no coefficient is negative, one is positive, and one
    with ``alpha[0] == 0`` is positive, then ``f > 0`` on
    ``{0 < a < b <= 1/2}`` minus the corner ``(1/2, 1/2)``.
    """

    polynomial_id: str
    degree: int
    coefficients: list[Fraction]

    @property
    def indices(self):
        return bernstein_indices(self.degree)

    @property
    def negative(self) -> list[tuple[int, int, int]]:
        return [al for c, al in zip(self.coefficients, self.indices) if c < 0]

    @property
    def zero(self) -> list[tuple[int, int, int]]:
        return [al for c, al in zip(self.coefficients, self.indices) if c == 0]

    @property
    def proves_open_triangle(self) -> bool:
        pos = [al for c, al in zip(self.coefficients, self.indices) if c > 0]
        return not self.negative and bool(pos)

    @property
    def proves_top_edge(self) -> bool:
        return not self.negative and any(
            c > 0 for c, al in zip(self.coefficients, self.indices) if al[0] == 0
        )

    @property
    def outcome(self) -> str:
        return CERTIFIED if self.proves_open_triangle and self.proves_top_edge else INCONCLUSIVE

    def to_json(self) -> dict:
        return {
            "kind": "closed-triangle-nonnegative",
            "polynomial_id": self.polynomial_id,
            "region": [[fraction_str(x), fraction_str(y)] for x, y in AMPLE_TRIANGLE],
            "degree": self.degree,
            "outcome": self.outcome,
            "coefficients": [fraction_str(c) for c in self.coefficients],
        }

    @classmethod
    def from_json(cls, d: dict) -> "ClosedTriangleProof":
        return cls(d["polynomial_id"], d["degree"], [Fraction(c) for c in d["coefficients"]])


def prove_closed_triangle(polynomial_id: str = "C") -> ClosedTriangleProof:
    f = named_polynomial(polynomial_id)
    n = f.total_degree
    return ClosedTriangleProof(
        polynomial_id, n, bernstein_coefficients(f, TriangleRegion(*AMPLE_TRIANGLE), n)
    )


def replay_closed_triangle(proof: ClosedTriangleProof, recorded_outcome: str | None = None) -> bool:
    f = named_polynomial(proof.polynomial_id)
    beta = bernstein_coefficients(f, TriangleRegion(*AMPLE_TRIANGLE), proof.degree)
    if beta != proof.coefficients:
        raise ReplayError("closed-triangle coefficients differ from recomputation")
    if recorded_outcome is not None and recorded_outcome != proof.outcome:
        raise ReplayError("recorded outcome does not follow from the coefficients")
    return True
