"""
The quadratic example Qu(Z/nZ) with parameters p, q and pq + 2 = 0

K(R) is the monoid of matrices [[1, r], [0, s]] under multiplication,
numbered r·n + s. A(R) is the set of brackets [a, b] with
[a, b][c, d] = [ac, a²d + bc² + p²bd], numbered a·n + b. K(R) acts on A(R)
by [a, b]∘(r, s) = [as − pr, s²b − qrsa − r²] and A(R) acts on K(R) on both
sides by (r, s) ↦ (ra, s).
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np

from crossed.config import Settings, get_settings
from crossed.errors import ConstraintViolated, CrossedError, MalformedInput
from crossed.internal import assemble_internal_category, verify_internal_category
from crossed.models import QuParams
from crossed.monoid import FiniteMonoid, validate_monoid
from crossed.report import CheckReport
from crossed.structures import CrossedSemiBimodule, assemble_xbsmod, guaranteed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KMatrix:
    """The matrix [[1, r], [0, s]]"""

    r: int
    s: int

    def index(self, n: int) -> int:
        return (self.r % n) * n + self.s % n

    @classmethod
    def from_index(cls, i: int, n: int) -> "KMatrix":
        return cls(*divmod(i, n))


@dataclass(frozen=True)
class APair:
    """The bracket [a, b]"""

    a: int
    b: int

    def index(self, n: int) -> int:
        return (self.a % n) * n + self.b % n

    @classmethod
    def from_index(cls, i: int, n: int) -> "APair":
        return cls(*divmod(i, n))


def make_params(n: int, p: int, q: int) -> QuParams:
    """
    Accept (n, p, q) iff pq + 2 ≡ 0 (mod n)

    Raises:
        MalformedInput: n < 1
        ConstraintViolated: carries pq + 2 mod n
    """
    if n < 1:
        raise MalformedInput(f"modulus must be positive, got {n}")
    residue = (p * q + 2) % n
    if residue:
        raise ConstraintViolated(residue)
    return QuParams(n=n, p=p % n, q=q % n)


def _coordinates(n: int) -> Tuple[np.ndarray, np.ndarray]:
    return np.divmod(np.arange(n * n, dtype=np.int64), n)


def build_components(P: QuParams) -> Tuple[FiniteMonoid, FiniteMonoid]:
    """Return (K(R), A(R)) as validated monoids"""
    n, p = P.n, P.p
    r, s = _coordinates(n)
    r1, s1, r2, s2 = r[:, None], s[:, None], r[None, :], s[None, :]
    k_table = ((r2 + r1 * s2) % n) * n + (s1 * s2) % n

    a, b = _coordinates(n)
    a1, b1, c, d = a[:, None], b[:, None], a[None, :], b[None, :]
    a_table = ((a1 * c) % n) * n + (a1 * a1 * d + b1 * c * c + p * p * b1 * d) % n

    with guaranteed(f"components of {P.label} are monoids"):
        K = validate_monoid(k_table, KMatrix(0, 1).index(n), f"K{n}")
        A = validate_monoid(a_table, APair(1, 0).index(n), f"A{n}_{p}")
    return K, A


def qu_tables(P: QuParams) -> Tuple[np.ndarray, np.ndarray]:
    """The ∘ table (indexed [m, k]) and the common λ = ρ table (indexed [m, k])"""
    n, p, q = P.n, P.p, P.q
    a, b = _coordinates(n)
    r, s = _coordinates(n)
    a, b, r, s = a[:, None], b[:, None], r[None, :], s[None, :]
    circ = ((a * s - p * r) % n) * n + (s * s * b - q * r * s * a - r * r) % n
    action = ((r * a) % n) * n + np.broadcast_to(s, circ.shape)
    return circ, action


def build_qu(P: QuParams, settings: Optional[Settings] = None) -> CrossedSemiBimodule:
    """
    Assemble Qu(Z/nZ) and validate it as a crossed semi-bimodule

    Raises:
        CrossedError: the first failing action law or axiom, with its witness
    """
    settings = settings or get_settings()
    K, A = build_components(P)
    circ, action = qu_tables(P)
    try:
        X = assemble_xbsmod(A, K, circ, action, action, P.label, settings.chunk_size)
    except CrossedError as e:
        logger.error("Qu(n=%d, p=%d, q=%d) rejected: %s", P.n, P.p, P.q, e)
        raise
    logger.info("built %s with |A|=|K|=%d", P.label, A.size)
    return X


def verify_qu(P: QuParams, settings: Optional[Settings] = None, build_cat: bool = True) -> CheckReport:
    """Validate Qu(Z/nZ) and, optionally, its internal category, as one report"""
    settings = settings or get_settings()
    report = CheckReport(title=P.label)
    try:
        X = build_qu(P, settings)
    except CrossedError as e:
        report.record("xbsmod", e.witness, passed=False, detail=e.law)
        return report
    report.record("xbsmod")
    if build_cat:
        try:
            category = assemble_internal_category(X, settings)
        except CrossedError as e:
            report.record("internal_category", e.witness, passed=False, detail=str(e))
            return report
        report.extend(verify_internal_category(category, settings))
    return report


def parameter_sweep(moduli: Iterable[int]) -> List[QuParams]:
    """Every admissible (n, p, q) for the given moduli, in increasing order"""
    params = []
    for n in sorted(set(moduli)):
        for p in range(n):
            for q in range(n):
                if (p * q + 2) % n == 0:
                    params.append(QuParams(n=n, p=p, q=q))
    return params
