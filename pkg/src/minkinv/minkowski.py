"""Minkowski adjoint, existence diagnostics, and Minkowski-inverse algorithms.

The metric is fixed to G = diag(1, -1, ..., -1), signature (1, n-1).  The
Minkowski adjoint of an m-by-n matrix is A~ = G_n A* G_m, and the Minkowski
inverse A^m is the unique X (when it exists) with

    (1) A X A = A   (2) X A X = X   (3m) (A X)~ = A X   (4m) (X A)~ = X A.

Existence is conditional: it fails exactly when R(A) or R(A~) leans into the
light cone, i.e. when rank(AA~) or rank(A~A) drops below rank(A).  Several
independent algorithms for A^m are provided; on any existent input they agree
up to rounding, which is what the verify module cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dense_core import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    fro,
    full_rank_factorization,
    group_inverse,
    hs_decomposition,
    index_of,
    mats_close,
    moore_penrose,
    numerical_rank,
    one_inverse_sample,
    rank_of,
    rel_residual,
    sigma_max,
)
from .errors import (
    BlockSingular,
    InvalidWitness,
    MinkinvError,
    NotExistent,
    NotExistent13m,
    NotExistent14m,
    NotSquare,
    RankMismatch,
    ShapeMismatch,
    Singular,
    SingularFactor,
)

__all__ = [
    "MinkowskiMetric", "metric_signs", "apply_metric_left", "apply_metric_right",
    "mink_adjoint", "ExistenceDiagnosis", "diagnose_existence",
    "InverseComputation", "mink_inverse",
    "mink_inverse_frf", "mink_inverse_hs", "mink_inverse_zlobec",
    "mink_inverse_zlobec2", "mink_inverse_group", "mink_inverse_resolvent",
    "mink_inverse_block", "one_three_m", "one_four_m", "compose_13m_14m",
    "factorization_witnesses", "sylvester_witnesses", "MooreStyleReport",
    "moore_style_check", "bjerhammar_witnesses", "defining_residuals",
]


def metric_signs(n: int) -> np.ndarray:
    """The diagonal of the order-n Minkowski metric: (1, -1, ..., -1)."""
    if n < 1:
        raise ValueError("metric order must be positive")
    g = np.ones(n)
    g[1:] = -1.0
    return g


@dataclass(frozen=True)
class MinkowskiMetric:
    """The metric G = diag(1, -1, ..., -1) of a given order.

    G is never materialized for multiplication: applying it flips signs of
    rows or columns 2..n, which is bit-identical to the dense product.
    """

    order: int

    def signs(self) -> np.ndarray:
        return metric_signs(self.order)

    def dense(self) -> np.ndarray:
        return np.diag(metric_signs(self.order)).astype(np.complex128)


def apply_metric_left(M: np.ndarray) -> np.ndarray:
    """G @ M realized as sign flips of rows 2..m."""
    out = M.copy()
    out[1:, :] *= -1.0
    return out


def apply_metric_right(M: np.ndarray) -> np.ndarray:
    """M @ G realized as sign flips of columns 2..n."""
    out = M.copy()
    out[:, 1:] *= -1.0
    return out


def mink_adjoint(A) -> np.ndarray:
    """Minkowski adjoint A~ = G_n A* G_m of an m-by-n matrix.

    Exact up to sign flips: (A~)~ == A holds bit for bit, and
    (A B)~ = B~ A~ holds up to rounding of the product itself.
    """
    A = as_matrix(A)
    return apply_metric_right(apply_metric_left(A.conj().T))


def defining_residuals(A, X) -> tuple[float, float, float, float]:
    """Relative residuals of the four defining equations for X against A.

    Returns (eq1, eq2, eq3m, eq4m) with
    eq1 = ||AXA - A|| / ||A||, eq2 = ||XAX - X|| / ||X||,
    eq3m = ||(AX)~ - AX|| / max(1, ||AX||) and eq4m analogously,
    all in Frobenius norm.
    """
    A = as_matrix(A)
    X = as_matrix(X)
    if X.shape != (A.shape[1], A.shape[0]):
        raise ShapeMismatch(f"candidate must be {A.shape[1]}x{A.shape[0]}, got {X.shape}")
    AX = A @ X
    XA = X @ A
    nA = fro(A) or 1.0
    nX = fro(X) or 1.0
    return (
        fro(A @ X @ A - A) / nA,
        fro(X @ A @ X - X) / nX,
        fro(mink_adjoint(AX) - AX) / max(1.0, fro(AX)),
        fro(mink_adjoint(XA) - XA) / max(1.0, fro(XA)),
    )


# ---------------------------------------------------------------------------
# existence diagnostics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExistenceDiagnosis:
    """Verdicts of every implemented existence criterion, with the evidence.

    ``exists`` is the rank-triple test rank(AA~) = rank(A~A) = rank(A); the
    other criteria are provably equivalent, and ``criteria_agree`` records
    that they all returned the same verdict on this input.  ``ind_AAs`` and
    ``ind_AsA`` are true indices (0 for nonsingular products); the index
    criteria test rank(M^2) = rank(M), i.e. index at most one.
    """

    exists: bool
    rank_A: int
    rank_AAs: int
    rank_AsA: int
    rank_AsAAs: int
    ind_AAs: int
    ind_AsA: int
    resolvent_nonsingular: bool
    criteria: dict = field(repr=False)
    criteria_agree: bool = True

    def ranks(self) -> dict:
        return {
            "rank_A": self.rank_A,
            "rank_AAs": self.rank_AAs,
            "rank_AsA": self.rank_AsA,
            "rank_AsAAs": self.rank_AsAAs,
            "ind_AAs": self.ind_AAs,
            "ind_AsA": self.ind_AsA,
        }


def diagnose_existence(A, tol: Tolerance = DEFAULT_TOL) -> ExistenceDiagnosis:
    """Evaluate all five existence criteria for the Minkowski inverse.

    (a) rank(AA~) = rank(A~A) = rank(A);
    (b) rank(A~AA~) = rank(A);
    (c) rank((A~A)^2) = rank(A~A) and rank(A~A) = rank(A);
    (d) rank((AA~)^2) = rank(AA~) and rank([AA~ | A]) = rank(AA~);
    (e) A~A + I - A+ A nonsingular.

    ``exists`` is criterion (a).  All ranks share one cutoff convention, with
    product cutoffs anchored at the appropriate power of sigma_max(A).
    """
    A = as_matrix(A)
    m, n = A.shape
    As = mink_adjoint(A)
    AAs = A @ As
    AsA = As @ A
    sA = sigma_max(A)
    s2 = sA * sA

    rank_A = rank_of(A, tol)
    rank_AAs = rank_of(AAs, tol, scale=s2)
    rank_AsA = rank_of(AsA, tol, scale=s2)
    rank_AsAAs = rank_of(As @ A @ As, tol, scale=s2 * sA)
    ind_AAs = index_of(AAs, tol, scale=s2)
    ind_AsA = index_of(AsA, tol, scale=s2)

    ind_le1_AsA = rank_of(AsA @ AsA, tol, scale=s2 * s2) == rank_AsA
    ind_le1_AAs = rank_of(AAs @ AAs, tol, scale=s2 * s2) == rank_AAs
    range_A_in_AAs = rank_of(np.hstack([AAs, A]), tol, scale=max(sA, s2)) == rank_AAs

    resolvent = AsA + np.eye(n, dtype=np.complex128) - moore_penrose(A, tol) @ A
    resolvent_nonsingular = rank_of(resolvent, tol, scale=max(1.0, s2)) == n

    criteria = {
        "rank_triple": rank_AAs == rank_AsA == rank_A,
        "rank_sandwich": rank_AsAAs == rank_A,
        "index_AsA": ind_le1_AsA and rank_AsA == rank_A,
        "index_AAs": ind_le1_AAs and range_A_in_AAs,
        "resolvent": resolvent_nonsingular,
    }
    verdicts = set(criteria.values())
    return ExistenceDiagnosis(
        exists=criteria["rank_triple"],
        rank_A=rank_A,
        rank_AAs=rank_AAs,
        rank_AsA=rank_AsA,
        rank_AsAAs=rank_AsAAs,
        ind_AAs=ind_AAs,
        ind_AsA=ind_AsA,
        resolvent_nonsingular=resolvent_nonsingular,
        criteria=criteria,
        criteria_agree=len(verdicts) == 1,
    )


def _gate(A, tol: Tolerance, force: bool) -> ExistenceDiagnosis:
    """Common existence gate for the inverse algorithms."""
    diag = diagnose_existence(A, tol)
    if not diag.exists and not force:
        raise NotExistent(
            "Minkowski inverse does not exist: "
            f"rank(A)={diag.rank_A}, rank(AA~)={diag.rank_AAs}, rank(A~A)={diag.rank_AsA}"
        )
    return diag


def _inv_or_forced_pinv(M, tol: Tolerance, force: bool, scale=None,
                        err=SingularFactor, what="factor"):
    """Invert M, or pseudo-invert it under force so breakdowns stay observable."""
    rep = numerical_rank(M, tol, scale=scale)
    if rep.rank < M.shape[0]:
        if not force:
            s = rep.singular_values
            cond = float("inf") if s[-1] == 0 else float(s[0] / s[-1])
            raise err(f"{what} is numerically singular "
                      f"(rank {rep.rank} of {M.shape[0]}, cond~{cond:.2e})")
        return moore_penrose(M, tol, scale=scale)
    return np.linalg.inv(M)


# ---------------------------------------------------------------------------
# inverse algorithms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InverseComputation:
    """Output of one inverse algorithm: the result plus its own evidence.

    ``residuals`` holds the relative residuals of the four defining equations
    (see :func:`defining_residuals`); ``gap`` records the relative distance
    between two internal routes when the algorithm computes both.
    """

    algorithm: str
    result: np.ndarray
    residuals: tuple[float, float, float, float]
    gap: float | None = None


def _finish(name: str, A, X, gap=None) -> InverseComputation:
    return InverseComputation(algorithm=name, result=X,
                              residuals=defining_residuals(A, X), gap=gap)


def mink_inverse_frf(A, tol: Tolerance = DEFAULT_TOL, force: bool = False) -> InverseComputation:
    """Minkowski inverse via a full-rank factorization A = B C.

    Evaluates C~ (C C~)^-1 (B~ B)^-1 B~.  Requires rank(A) >= 1 and an
    existence diagnosis that passes (unless ``force``, which demonstrates the
    breakdown by pseudo-inverting singular Gram factors).
    """
    A = as_matrix(A)
    _gate(A, tol, force)
    f = full_rank_factorization(A, tol)
    Bs = mink_adjoint(f.B)
    Cs = mink_adjoint(f.C)
    CCs_inv = _inv_or_forced_pinv(f.C @ Cs, tol, force, what="CC~")
    BsB_inv = _inv_or_forced_pinv(Bs @ f.B, tol, force, what="B~B")
    X = Cs @ CCs_inv @ BsB_inv @ Bs
    return _finish("frf", A, X)


def mink_inverse_hs(A, tol: Tolerance = DEFAULT_TOL, force: bool = False) -> InverseComputation:
    """Minkowski inverse of a square matrix from its Hartwig-Spindelbock form.

    With U* G U partitioned into blocks G1..G4 against the rank split and
    Delta = [K L] U* G U [K L]*, the inverse is

        G U [[K* (G1 Sigma Delta)^-1, 0], [L* (G1 Sigma Delta)^-1, 0]] U* G.

    Nonsingularity of G1 and Delta is exactly the existence condition, so a
    singular G1 or Delta raises NotExistent.  The result is cross-checked
    against the equivalent expanded block form; the agreement gap is recorded.
    """
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        raise NotSquare(f"this route needs a square matrix, got {A.shape}")
    _gate(A, tol, force)
    n = A.shape[0]
    hs = hs_decomposition(A, tol)
    r = hs.r
    U = hs.U
    UGU = U.conj().T @ apply_metric_left(U)
    G1 = UGU[:r, :r]
    G2 = UGU[:r, r:]
    G3 = UGU[r:, :r]
    G4 = UGU[r:, r:]
    KL = np.hstack([hs.K, hs.L])
    Delta = KL @ UGU @ KL.conj().T
    Sigma = np.diag(hs.sigma).astype(np.complex128)

    # blocks of a unitary congruence of G have unit natural scale
    if not force and rank_of(G1, tol, scale=1.0) < r:
        raise NotExistent("G1 is singular, i.e. rank(A~A) < rank(A)")
    if not force and rank_of(Delta, tol, scale=1.0) < r:
        raise NotExistent("Delta is singular, i.e. rank(AA~) < rank(A)")
    core_inv = _inv_or_forced_pinv(G1 @ Sigma @ Delta, tol, force,
                                   scale=sigma_max(Sigma),
                                   err=NotExistent, what="G1 Sigma Delta")
    blk = np.zeros((n, n), dtype=np.complex128)
    blk[:r, :r] = hs.K.conj().T @ core_inv
    blk[r:, :r] = hs.L.conj().T @ core_inv
    GU = apply_metric_left(U)
    UG = apply_metric_right(U.conj().T)
    X = GU @ blk @ UG

    # expanded form over the same block split
    t_top = G1 @ hs.K.conj().T + G2 @ hs.L.conj().T
    t_bot = G3 @ hs.K.conj().T + G4 @ hs.L.conj().T
    sd_inv = _inv_or_forced_pinv(Sigma @ Delta, tol, force, scale=sigma_max(Sigma),
                                 err=NotExistent, what="Sigma Delta")
    exp = np.zeros((n, n), dtype=np.complex128)
    exp[:r, :r] = t_top @ sd_inv
    exp[:r, r:] = t_top @ core_inv @ G2
    exp[r:, :r] = t_bot @ sd_inv
    exp[r:, r:] = t_bot @ core_inv @ G2
    X2 = U @ exp @ U.conj().T
    gap = rel_residual(X2, X)
    if not force and not mats_close(X2, X, tol, scale=fro(X)):
        raise MinkinvError(f"internal inconsistency: expanded form differs by {gap:.3e}")
    return _finish("hs", A, X, gap=gap)


def _power(M, k):
    return np.linalg.matrix_power(M, k)


def mink_inverse_zlobec(A, k: int = 0, l: int = 0, W=None,
                        tol: Tolerance = DEFAULT_TOL, force: bool = False) -> InverseComputation:
    """Generalized Zlobec formula with free exponents and a free {1}-inverse.

    Evaluates (A~A)^k A~ [ (A~A)^(k+l+1) A~ ]^(1) (A~A)^l A~, where the inner
    {1}-inverse is sampled via ``one_inverse_sample`` with parameter ``W``
    (``W=None`` takes the pseudoinverse).  The result is independent of k, l
    and W in exact arithmetic; k = l = 0 is the classic A~ (A~AA~)^(1) A~.
    In floating point the W terms cancel only up to eps times the condition
    of the inverted power, so keep ``W`` comparable in magnitude to that
    product's pseudoinverse scale when k + l > 0.
    """
    if k < 0 or l < 0:
        raise ValueError("exponents must be nonnegative")
    A = as_matrix(A)
    _gate(A, tol, force)
    As = mink_adjoint(A)
    AsA = As @ A
    sA = sigma_max(A)
    mid = _power(AsA, k + l + 1) @ As
    inner = one_inverse_sample(mid, W, tol, scale=sA ** (2 * (k + l + 1) + 1))
    X = _power(AsA, k) @ As @ inner @ _power(AsA, l) @ As
    return _finish(f"zlobec(k={k},l={l})", A, X)


def mink_inverse_zlobec2(A, k: int = 0, l: int = 0, W1=None, W2=None,
                         tol: Tolerance = DEFAULT_TOL, force: bool = False) -> InverseComputation:
    """Split Zlobec-style formula using two independent {1}-inverses.

    Evaluates
    (A~A)^k A~ [ (AA~)^(k+1) ]^(1) A [ (A~A)^(l+1) ]^(1) (A~A)^l A~ with the
    two inner {1}-inverses sampled independently via W1 and W2.  At
    k = l = 0 this is A~ (AA~)^(1) A (A~A)^(1) A~.
    """
    if k < 0 or l < 0:
        raise ValueError("exponents must be nonnegative")
    A = as_matrix(A)
    _gate(A, tol, force)
    As = mink_adjoint(A)
    AsA = As @ A
    AAs = A @ As
    sA = sigma_max(A)
    left = one_inverse_sample(_power(AAs, k + 1), W1, tol, scale=sA ** (2 * (k + 1)))
    right = one_inverse_sample(_power(AsA, l + 1), W2, tol, scale=sA ** (2 * (l + 1)))
    X = _power(AsA, k) @ As @ left @ A @ right @ _power(AsA, l) @ As
    return _finish(f"zlobec2(k={k},l={l})", A, X)


def mink_inverse_group(A, tol: Tolerance = DEFAULT_TOL, force: bool = False) -> InverseComputation:
    """Minkowski inverse through group inverses of the metric Gram products.

    Computes both (A~A)# A~ and A~ (AA~)#; existence makes both products
    index-one and the two expressions equal.  Returns the first with the
    agreement gap recorded.
    """
    A = as_matrix(A)
    _gate(A, tol, force)
    As = mink_adjoint(A)
    s2 = sigma_max(A) ** 2

    def grp(M):
        if not force:
            return group_inverse(M, tol, scale=s2)
        f_rank = rank_of(M, tol, scale=s2)
        if f_rank == 0:
            return np.zeros_like(M)
        f = full_rank_factorization(M, tol, scale=s2)
        GF = f.C @ f.B
        return f.B @ moore_penrose(GF @ GF, tol) @ f.C

    X1 = grp(As @ A) @ As
    X2 = As @ grp(A @ As)
    gap = rel_residual(X2, X1)
    if not force and not mats_close(X2, X1, tol, scale=fro(X1)):
        raise MinkinvError(f"internal inconsistency: dual group forms differ by {gap:.3e}")
    return _finish("group", A, X1, gap=gap)


def mink_inverse_resolvent(A, W=None, tol: Tolerance = DEFAULT_TOL,
                           force: bool = False) -> InverseComputation:
    """Minkowski inverse via the shifted-Gram resolvent.

    Builds a {1}-inverse A1 = one_inverse_sample(A, W) and returns
    (A (A~A + I - A1 A)^-1)~, cross-checked against the dual form
    ((AA~ + I - A A1)^-1 A)~.  Nonsingularity of the shifted matrix is
    equivalent to existence; a singular resolvent after a passing diagnosis
    raises Singular as an internal inconsistency.
    """
    A = as_matrix(A)
    _gate(A, tol, force)
    m, n = A.shape
    As = mink_adjoint(A)
    sA = sigma_max(A)
    A1 = one_inverse_sample(A, W, tol)
    anchor = max(1.0, sA * sA)
    left = _inv_or_forced_pinv(As @ A + np.eye(n, dtype=np.complex128) - A1 @ A,
                               tol, force, scale=anchor, err=Singular, what="resolvent")
    right = _inv_or_forced_pinv(A @ As + np.eye(m, dtype=np.complex128) - A @ A1,
                                tol, force, scale=anchor, err=Singular, what="dual resolvent")
    X = mink_adjoint(A @ left)
    X2 = mink_adjoint(right @ A)
    gap = rel_residual(X2, X)
    if not force and not mats_close(X2, X, tol, scale=fro(X)):
        raise MinkinvError(f"internal inconsistency: dual resolvent forms differ by {gap:.3e}")
    return _finish("resolvent", A, X, gap=gap)


def mink_inverse_block(A, r: int, tol: Tolerance = DEFAULT_TOL,
                       force: bool = False) -> InverseComputation:
    """Minkowski inverse from the bordered blocks of a rank-r matrix.

    For A of rank r whose leading r-by-r block A1 is nonsingular (so
    A4 = A3 A1^-1 A2), evaluates

        (A1 A2)~ [ (A1; A3)~ A (A1 A2)~ ]^-1 (A1; A3)~

    using the first r rows and first r columns of A.  For nonsingular A
    (r = m = n) this collapses to A~ (A~AA~)^-1 A~ = A^-1.
    """
    A = as_matrix(A)
    m, n = A.shape
    if not 1 <= r <= min(m, n):
        raise RankMismatch(f"r must be within 1..{min(m, n)}, got {r}")
    rank_A = rank_of(A, tol)
    if rank_A != r:
        raise RankMismatch(f"rank(A)={rank_A} does not match the requested r={r}")
    rep1 = numerical_rank(A[:r, :r], tol)
    if rep1.rank < r:
        s = rep1.singular_values
        cond = float("inf") if s[-1] == 0 else float(s[0] / s[-1])
        raise BlockSingular(f"leading {r}x{r} block is numerically singular (cond~{cond:.2e})")
    _gate(A, tol, force)
    P = mink_adjoint(A[:r, :])   # n x r
    S = mink_adjoint(A[:, :r])   # r x m
    anchor = sigma_max(A) ** 3
    mid_inv = _inv_or_forced_pinv(S @ A @ P, tol, force, scale=anchor,
                                  err=Singular, what="bordered core")
    X = P @ mid_inv @ S
    return _finish(f"block(r={r})", A, X)


def mink_inverse(A, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """The Minkowski inverse A^m, or NotExistent.

    Canonical entry point used by the rest of the package: full-rank
    factorization route, with the zero matrix mapped to the zero matrix
    (every defining equation holds trivially for X = 0).
    """
    A = as_matrix(A)
    diag = _gate(A, tol, force=False)
    if diag.rank_A == 0:
        return np.zeros((A.shape[1], A.shape[0]), dtype=np.complex128)
    return mink_inverse_frf(A, tol).result


# ---------------------------------------------------------------------------
# {1,3m} / {1,4m} families and composition
# ---------------------------------------------------------------------------

def one_three_m(A, Y=None, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """A member of A{1,3m}, i.e. X with AXA = A and (AX)~ = AX.

    Such X exist iff rank(A~A) = rank(A) >= 1 (NotExistent13m otherwise).
    The base member is C+ (B~B)^-1 B~ from a full-rank factorization A = BC,
    and the full family is swept by X = base + (I - base A) Y.  Every member
    satisfies A~AX = A~, and AX is the same oblique projector onto R(A)
    along N(A~) for all members.
    """
    A = as_matrix(A)
    rank_A = rank_of(A, tol)
    rank_AsA = rank_of(mink_adjoint(A) @ A, tol, scale=sigma_max(A) ** 2)
    if rank_A == 0 or rank_AsA != rank_A:
        raise NotExistent13m(f"rank(A~A)={rank_AsA} != rank(A)={rank_A} (or rank 0)")
    f = full_rank_factorization(A, tol)
    Bs = mink_adjoint(f.B)
    BsB_inv = _inv_or_forced_pinv(Bs @ f.B, tol, force=False, what="B~B")
    base = moore_penrose(f.C, tol) @ BsB_inv @ Bs
    if Y is None:
        return base
    Y = as_matrix(Y)
    n, m = base.shape
    if Y.shape != (n, m):
        raise ShapeMismatch(f"Y must be {n}x{m}, got {Y.shape}")
    return base + (np.eye(n, dtype=np.complex128) - base @ A) @ Y


def one_four_m(A, Z=None, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """A member of A{1,4m}, i.e. X with AXA = A and (XA)~ = XA.

    Dual of :func:`one_three_m`: exists iff rank(AA~) = rank(A) >= 1
    (NotExistent14m otherwise), base member C~ (CC~)^-1 B+, family swept by
    X = base + Z (I - A base).  Every member satisfies XAA~ = A~, and XA is
    the projector onto R(A~) along N(A) for all members.
    """
    A = as_matrix(A)
    rank_A = rank_of(A, tol)
    rank_AAs = rank_of(A @ mink_adjoint(A), tol, scale=sigma_max(A) ** 2)
    if rank_A == 0 or rank_AAs != rank_A:
        raise NotExistent14m(f"rank(AA~)={rank_AAs} != rank(A)={rank_A} (or rank 0)")
    f = full_rank_factorization(A, tol)
    Cs = mink_adjoint(f.C)
    CCs_inv = _inv_or_forced_pinv(f.C @ Cs, tol, force=False, what="CC~")
    base = Cs @ CCs_inv @ moore_penrose(f.B, tol)
    if Z is None:
        return base
    Z = as_matrix(Z)
    n, m = base.shape
    if Z.shape != (n, m):
        raise ShapeMismatch(f"Z must be {n}x{m}, got {Z.shape}")
    return base + Z @ (np.eye(m, dtype=np.complex128) - A @ base)


def compose_13m_14m(A, X13, X14, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """A^m = X14 A X13 from any {1,3m}- and {1,4m}-inverse witnesses.

    Validates the witnesses by their defining residuals (InvalidWitness on
    failure) and requires existence; the product is A^m no matter which
    family members were supplied.
    """
    A = as_matrix(A)
    X13 = as_matrix(X13)
    X14 = as_matrix(X14)
    _gate(A, tol, force=False)
    e13 = defining_residuals(A, X13)
    e14 = defining_residuals(A, X14)
    bound = tol.eq_bound(1.0)
    if e13[0] > bound or e13[2] > bound:
        raise InvalidWitness(f"X13 violates eqs (1)/(3m): residuals {e13[0]:.2e}, {e13[2]:.2e}")
    if e14[0] > bound or e14[3] > bound:
        raise InvalidWitness(f"X14 violates eqs (1)/(4m): residuals {e14[0]:.2e}, {e14[3]:.2e}")
    return X14 @ A @ X13


# ---------------------------------------------------------------------------
# witness constructions and decision procedures
# ---------------------------------------------------------------------------

def factorization_witnesses(A, tol: Tolerance = DEFAULT_TOL):
    """Witnesses (X, Y) with A = X AA~A = AA~A Y and A^m = (XA)~ = (AY)~.

    Fixes X = A (AA~A)^(1) and Y = (AA~A)^(1) A with the pseudoinverse as the
    {1}-inverse; existence makes rank(AA~A) = rank(A), which is exactly what
    the recovery identities need.  Both identities are verified before
    returning.
    """
    A = as_matrix(A)
    _gate(A, tol, force=False)
    M = A @ mink_adjoint(A) @ A
    Mp = moore_penrose(M, tol, scale=sigma_max(A) ** 3)
    X = A @ Mp
    Y = Mp @ A
    scale = fro(A)
    if not mats_close(X @ M, A, tol, scale=scale) or not mats_close(M @ Y, A, tol, scale=scale):
        raise MinkinvError("internal inconsistency: factorization witnesses failed to verify")
    return X, Y


def sylvester_witnesses(A, tol: Tolerance = DEFAULT_TOL):
    """Witnesses (X, Y) of the Sylvester-style characterization.

    Constructs Q = AA~ + I - AA^m, Y = I - AA^m and X = AA^m Q^-1 - Y, so
    that X AA~ - Y X = I, AA~ X = X AA~, AA~ Y = 0, Y^2 = Y, and A~ X = A^m.
    Q is provably nonsingular when the inverse exists; Singular is raised as
    an internal inconsistency otherwise.
    """
    A = as_matrix(A)
    _gate(A, tol, force=False)
    m = A.shape[0]
    As = mink_adjoint(A)
    Am = mink_inverse(A, tol)
    AAm = A @ Am
    eye = np.eye(m, dtype=np.complex128)
    Q = A @ As + eye - AAm
    if rank_of(Q, tol, scale=max(1.0, sigma_max(A) ** 2)) < m:
        raise Singular("shifted Gram Q is numerically singular despite a passing diagnosis")
    Y = eye - AAm
    X = AAm @ np.linalg.inv(Q) - Y
    return X, Y


@dataclass(frozen=True)
class MooreStyleReport:
    """Verdict of the identity-based decision procedure for X = A^m.

    The three tests realize: X acts as a left inverse on R(A~)
    (XAA~ = A~), X annihilates N(A~), and R(X) is contained in R(A~).
    ``is_inverse`` is their conjunction (false as well when no Minkowski
    inverse exists at all).
    """

    is_inverse: bool
    acts_identity_on_adjoint_range: bool
    annihilates_adjoint_nullspace: bool
    range_within_adjoint_range: bool
    residual_identity: float
    residual_nullspace: float
    exists: bool


def moore_style_check(A, X, tol: Tolerance = DEFAULT_TOL) -> MooreStyleReport:
    """Decide X = A^m by range/null-space identities, without computing A^m.

    Tests XAA~ = A~, X v = 0 for a basis of N(A~), and
    rank([X | A~]) = rank(A~).  All three hold iff X is the Minkowski
    inverse.  Verdict-producing: never raises on a failing candidate.
    """
    A = as_matrix(A)
    X = as_matrix(X)
    if X.shape != (A.shape[1], A.shape[0]):
        raise ShapeMismatch(f"candidate must be {A.shape[1]}x{A.shape[0]}, got {X.shape}")
    diag = diagnose_existence(A, tol)
    As = mink_adjoint(A)

    res_id = fro(X @ A @ As - As) / max(1.0, fro(As))
    ok_id = mats_close(X @ A @ As, As, tol, scale=max(fro(As), fro(X) * fro(A)))

    # basis of N(A~) from the SVD of A~
    Vh = np.linalg.svd(As)[2]
    r = rank_of(As, tol)
    null_basis = Vh[r:, :].conj().T
    if null_basis.shape[1] == 0:
        res_null = 0.0
        ok_null = True
    else:
        img = X @ null_basis
        res_null = fro(img) / max(1.0, fro(X))
        ok_null = fro(img) <= tol.eq_bound(fro(X))

    stack = np.hstack([X, As])
    floor = tol.eq_bound(fro(stack))
    ok_range = rank_of(stack, tol, floor=floor) == rank_of(As, tol, floor=floor)

    return MooreStyleReport(
        is_inverse=bool(diag.exists and ok_id and ok_null and ok_range),
        acts_identity_on_adjoint_range=bool(ok_id),
        annihilates_adjoint_nullspace=bool(ok_null),
        range_within_adjoint_range=bool(ok_range),
        residual_identity=float(res_id),
        residual_nullspace=float(res_null),
        exists=bool(diag.exists),
    )


def bjerhammar_witnesses(A, Y=None, Z=None, tol: Tolerance = DEFAULT_TOL):
    """Witnesses (B, C, D) with A~ B = C A~ = A~ D A~ = A^m.

    Realizes the Bjerhammar-style characterization: with P = (A~)+,

        B = P A^m + (I - P A~) Y,
        C = A^m P + Z (I - A~ P),
        D = P A^m P + (I - P A~) Y P + P Z (I - A~ P),

    for free Y (m-by-m) and Z (n-by-n); the products A~B, CA~ and A~DA~ are
    invariant under Y and Z.  The m-by-n free parameters of D are derived
    from the same Y and Z so a single signature drives all three witnesses.
    """
    A = as_matrix(A)
    _gate(A, tol, force=False)
    m, n = A.shape
    As = mink_adjoint(A)
    P = moore_penrose(As, tol)           # m x n
    Am = mink_inverse(A, tol)
    eye_m = np.eye(m, dtype=np.complex128)
    eye_n = np.eye(n, dtype=np.complex128)
    Y = np.zeros((m, m), dtype=np.complex128) if Y is None else as_matrix(Y)
    Z = np.zeros((n, n), dtype=np.complex128) if Z is None else as_matrix(Z)
    if Y.shape != (m, m):
        raise ShapeMismatch(f"Y must be {m}x{m}, got {Y.shape}")
    if Z.shape != (n, n):
        raise ShapeMismatch(f"Z must be {n}x{n}, got {Z.shape}")
    left_ann = eye_m - P @ As            # annihilated by A~ on the left
    right_ann = eye_n - As @ P           # annihilates A~ on the right
    B = P @ Am + left_ann @ Y
    C = Am @ P + Z @ right_ann
    D = P @ Am @ P + left_ann @ Y @ P + P @ Z @ right_ann
    scale = fro(Am)
    if not (mats_close(As @ B, Am, tol, scale=scale)
            and mats_close(C @ As, Am, tol, scale=scale)
            and mats_close(As @ D @ As, Am, tol, scale=scale)):
        raise MinkinvError("internal inconsistency: Bjerhammar witnesses failed to verify")
    return B, C, D
