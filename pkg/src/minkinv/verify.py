"""Instance generators with known ground truth and the cross-checking oracle.

Generation is deterministic: a ``GenSpec`` seeds numpy's PCG64 bit generator,
so the same spec reproduces the same matrix bit for bit on any platform with
the same numpy stream (PCG64 streams are stable across numpy releases).

The existent generators reject draws that are too close to the light cone or
too ill-conditioned; acceptance thresholds at double precision are only
meaningful on instances with some margin, and the rejection rule is part of
the generator's contract (seeded, hence still deterministic).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .dense_core import (
    DEFAULT_TOL,
    Tolerance,
    as_matrix,
    fro,
    mats_close,
    rank_of,
)
from .errors import MinkinvError, NotExistent, RetryExhausted, ShapeMismatch
from . import minkowski as mk

__all__ = ["GenKind", "GenSpec", "generate", "CheckReport", "check_candidate",
           "AlgorithmOutcome", "CrossCheckReport", "cross_check"]

# rejection thresholds for the existent generators (relative)
_KAPPA_A = 1e-2          # sigma_r(A) >= _KAPPA_A * sigma_1(A)
_GRAM_MARGIN = 1e-4      # sigma_r of AA~ and A~A vs their sigma_1
_BLOCK_COND = 0.05       # sigma_min(A1) >= _BLOCK_COND * sigma_1(A1)
_MAX_DRAWS = 100


class GenKind(enum.Enum):
    """What kind of instance to draw."""

    EXISTENT = "existent"
    ISOTROPIC = "isotropic"
    BLOCK_EXISTENT = "block"
    ARBITRARY = "arbitrary"


@dataclass(frozen=True)
class GenSpec:
    """Deterministic description of a random test matrix.

    ``rank`` is the target rank for EXISTENT and BLOCK_EXISTENT draws (it
    must be >= 1 there); ISOTROPIC always produces rank 1 and ARBITRARY
    ignores the field.  ``scale`` multiplies all entries.
    """

    rows: int
    cols: int
    rank: int
    kind: GenKind
    seed: int
    scale: float = 1.0

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("rows and cols must be positive")
        if not 0 <= self.rank <= min(self.rows, self.cols):
            raise ValueError(f"rank must lie in 0..{min(self.rows, self.cols)}")
        if self.kind in (GenKind.EXISTENT, GenKind.BLOCK_EXISTENT) and self.rank < 1:
            raise ValueError(f"{self.kind.value} generation needs rank >= 1")
        if self.kind is GenKind.ISOTROPIC and self.rows < 2:
            raise ValueError("isotropic generation needs at least 2 rows")
        if not 0 < self.scale < float("inf"):
            raise ValueError("scale must be positive and finite")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 bits")


def _cgauss(rng, m, n):
    """Standard complex Gaussian entries, unit variance."""
    return (rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))) / np.sqrt(2.0)


def _draw_existent(rng, m, n, r, tol):
    for _ in range(_MAX_DRAWS):
        B = _cgauss(rng, m, r)
        C = _cgauss(rng, r, n)
        A = B @ C
        sa = np.linalg.svd(A, compute_uv=False)
        if sa[r - 1] < _KAPPA_A * sa[0]:
            continue
        if rank_of(mk.mink_adjoint(B) @ B, tol) != r or rank_of(C @ mk.mink_adjoint(C), tol) != r:
            continue
        As = mk.mink_adjoint(A)
        s2 = sa[0] * sa[0]
        # margins anchored at sigma_1(A)^2, the natural scale of the products
        s_asa = np.linalg.svd(As @ A, compute_uv=False)
        s_aas = np.linalg.svd(A @ As, compute_uv=False)
        if s_asa[r - 1] < _GRAM_MARGIN * s2 or s_aas[r - 1] < _GRAM_MARGIN * s2:
            continue
        if rank_of(A, tol) == rank_of(As @ A, tol, scale=s2) == rank_of(A @ As, tol, scale=s2) == r:
            return A
    raise RetryExhausted(f"no well-margined existent draw in {_MAX_DRAWS} tries "
                         f"for {m}x{n} rank {r}")


def _draw_isotropic(rng, m, n):
    # x = (1, 1, 0, ..., 0) satisfies x~x = 0, so A = x c* has A~A = 0
    x = np.zeros((m, 1), dtype=np.complex128)
    x[0, 0] = 1.0
    x[1, 0] = 1.0
    c = _cgauss(rng, n, 1)
    while fro(c) == 0.0:
        c = _cgauss(rng, n, 1)
    return x @ c.conj().T


def _draw_block_existent(rng, m, n, r, tol):
    for _ in range(_MAX_DRAWS):
        A1 = _cgauss(rng, r, r)
        s1 = np.linalg.svd(A1, compute_uv=False)
        if s1[-1] < _BLOCK_COND * s1[0]:
            continue
        A2 = _cgauss(rng, r, n - r)
        A3 = _cgauss(rng, m - r, r)
        A = np.zeros((m, n), dtype=np.complex128)
        A[:r, :r] = A1
        A[:r, r:] = A2
        A[r:, :r] = A3
        A[r:, r:] = A3 @ np.linalg.inv(A1) @ A2
        sa = np.linalg.svd(A, compute_uv=False)
        As = mk.mink_adjoint(A)
        s2 = sa[0] * sa[0]
        s_asa = np.linalg.svd(As @ A, compute_uv=False)
        s_aas = np.linalg.svd(A @ As, compute_uv=False)
        if s_asa[r - 1] < _GRAM_MARGIN * s2 or s_aas[r - 1] < _GRAM_MARGIN * s2:
            continue
        if rank_of(A, tol) == rank_of(As @ A, tol, scale=s2) == rank_of(A @ As, tol, scale=s2) == r:
            return A
    raise RetryExhausted(f"no well-margined block-existent draw in {_MAX_DRAWS} tries "
                         f"for {m}x{n} rank {r}")


def generate(spec: GenSpec, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Draw the matrix described by ``spec`` (deterministic per spec).

    EXISTENT multiplies two seeded Gaussian factors and rejects draws without
    a conditioning margin; the result always passes ``diagnose_existence``.
    ISOTROPIC returns a rank-1 matrix built on a light-cone vector, which
    never passes.  BLOCK_EXISTENT additionally has a nonsingular leading
    rank-by-rank block.  ARBITRARY is an unconstrained Gaussian.
    """
    rng = np.random.default_rng(np.random.PCG64(spec.seed))
    m, n, r = spec.rows, spec.cols, spec.rank
    if spec.kind is GenKind.EXISTENT:
        A = _draw_existent(rng, m, n, r, tol)
    elif spec.kind is GenKind.ISOTROPIC:
        A = _draw_isotropic(rng, m, n)
    elif spec.kind is GenKind.BLOCK_EXISTENT:
        A = _draw_block_existent(rng, m, n, r, tol)
    else:
        A = _cgauss(rng, m, n)
    return A * spec.scale


# ---------------------------------------------------------------------------
# candidate checking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckReport:
    """Residuals and space identities of a Minkowski-inverse candidate.

    eq1..eq4m are the relative residuals of the defining equations;
    ``range_ok`` decides R(X) = R(A~) and ``null_ok`` decides N(X) = N(A~)
    via rank tests.  ``verdict`` is the conjunction.
    """

    eq1: float
    eq2: float
    eq3m: float
    eq4m: float
    range_ok: bool
    null_ok: bool
    verdict: bool

    def residuals(self) -> dict:
        return {"eq1": self.eq1, "eq2": self.eq2, "eq3m": self.eq3m, "eq4m": self.eq4m}


def check_candidate(A, X, tol: Tolerance = DEFAULT_TOL) -> CheckReport:
    """Full audit of a candidate X against the defining equations of A^m."""
    A = as_matrix(A)
    X = as_matrix(X)
    if X.shape != (A.shape[1], A.shape[0]):
        raise ShapeMismatch(f"candidate must be {A.shape[1]}x{A.shape[0]}, got {X.shape}")
    eq1, eq2, eq3m, eq4m = mk.defining_residuals(A, X)
    As = mk.mink_adjoint(A)
    AX = A @ X
    XA = X @ A
    eqs_ok = (
        mats_close(A @ X @ A, A, tol, scale=fro(A))
        and mats_close(X @ A @ X, X, tol, scale=fro(X))
        and mats_close(mk.mink_adjoint(AX), AX, tol, scale=max(1.0, fro(AX)))
        and mats_close(mk.mink_adjoint(XA), XA, tol, scale=max(1.0, fro(XA)))
    )
    row = np.hstack([X, As])
    col = np.vstack([X, As])
    floor_row = tol.eq_bound(fro(row))
    floor_col = tol.eq_bound(fro(col))
    rX = rank_of(X, tol, floor=floor_row)
    rAs = rank_of(As, tol, floor=floor_row)
    range_ok = rank_of(row, tol, floor=floor_row) == rAs == rX
    null_ok = rank_of(col, tol, floor=floor_col) == rAs == rX
    return CheckReport(
        eq1=eq1, eq2=eq2, eq3m=eq3m, eq4m=eq4m,
        range_ok=bool(range_ok), null_ok=bool(null_ok),
        verdict=bool(eqs_ok and range_ok and null_ok),
    )


# ---------------------------------------------------------------------------
# cross-algorithm comparison
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgorithmOutcome:
    """Outcome of one algorithm inside a cross-check run."""

    name: str
    status: str                      # "ok" | "refused" | "skipped" | "failed"
    result: np.ndarray | None = None
    check: CheckReport | None = None
    detail: str = ""


@dataclass(frozen=True)
class CrossCheckReport:
    """Aggregate of every applicable algorithm on one input."""

    exists: bool
    diagnosis: "mk.ExistenceDiagnosis"
    outcomes: list
    max_gap: float | None
    verdict: bool
    forced: bool = False


def _deterministic_algorithms(A, tol, force):
    """Name/thunk pairs for every algorithm applicable to A, at defaults."""
    m, n = A.shape
    algos = [
        ("frf", lambda: mk.mink_inverse_frf(A, tol, force=force).result),
        ("zlobec", lambda: mk.mink_inverse_zlobec(A, 0, 0, None, tol, force=force).result),
        ("zlobec2", lambda: mk.mink_inverse_zlobec2(A, 0, 0, None, None, tol, force=force).result),
        ("group", lambda: mk.mink_inverse_group(A, tol, force=force).result),
        ("resolvent", lambda: mk.mink_inverse_resolvent(A, None, tol, force=force).result),
        ("compose13m14m",
         lambda: mk.compose_13m_14m(A, mk.one_three_m(A, None, tol),
                                    mk.one_four_m(A, None, tol), tol)),
    ]
    if m == n:
        algos.insert(1, ("hs", lambda: mk.mink_inverse_hs(A, tol, force=force).result))
    return algos


def cross_check(A, tol: Tolerance = DEFAULT_TOL, force: bool = False) -> CrossCheckReport:
    """Run every applicable algorithm and compare the results pairwise.

    On an existent input the verdict is true when every algorithm's output
    passes :func:`check_candidate` and all pairwise gaps stay within the
    equality tolerance.  On a non-existent input the verdict is true when
    every algorithm refuses with NotExistent; under ``force=True`` the
    formulas are evaluated anyway and the verdict is true when every output
    that could be computed *fails* its check (the breakdown is observable).
    """
    A = as_matrix(A)
    diag = mk.diagnose_existence(A, tol)
    outcomes = []

    if diag.exists and diag.rank_A == 0:
        X = np.zeros((A.shape[1], A.shape[0]), dtype=np.complex128)
        outcomes.append(AlgorithmOutcome(
            name="zero", status="ok", result=X, check=check_candidate(A, X, tol),
            detail="rank 0: the inverse is the zero matrix"))
        return CrossCheckReport(exists=True, diagnosis=diag, outcomes=outcomes,
                                max_gap=0.0, verdict=True, forced=force)

    run_forced = force and not diag.exists
    for name, thunk in _deterministic_algorithms(A, tol, force=run_forced):
        try:
            X = thunk()
            outcomes.append(AlgorithmOutcome(
                name=name, status="ok", result=X, check=check_candidate(A, X, tol)))
        except NotExistent as exc:
            outcomes.append(AlgorithmOutcome(name=name, status="refused", detail=str(exc)))
        except MinkinvError as exc:
            outcomes.append(AlgorithmOutcome(name=name, status="failed", detail=str(exc)))

    if diag.exists:
        computed = [o for o in outcomes if o.status == "ok"]
        gaps = []
        for i in range(len(computed)):
            for j in range(i + 1, len(computed)):
                denom = max(1.0, fro(computed[i].result))
                gaps.append(fro(computed[i].result - computed[j].result) / denom)
        max_gap = max(gaps) if gaps else 0.0
        all_ok = (
            len(computed) == len(outcomes)
            and all(o.check.verdict for o in computed)
            and max_gap <= tol.eq_bound(1.0)
        )
        return CrossCheckReport(exists=True, diagnosis=diag, outcomes=outcomes,
                                max_gap=max_gap, verdict=bool(all_ok), forced=force)

    if not force:
        verdict = all(o.status == "refused" for o in outcomes)
        return CrossCheckReport(exists=False, diagnosis=diag, outcomes=outcomes,
                                max_gap=None, verdict=bool(verdict), forced=False)

    # forced: every formula that produced output must fail its check
    verdict = all(o.check is not None and not o.check.verdict
                  for o in outcomes if o.status == "ok")
    return CrossCheckReport(exists=False, diagnosis=diag, outcomes=outcomes,
                            max_gap=None, verdict=bool(verdict), forced=True)
