"""Dense LP feasibility kernel for small cone problems.

Everything here reduces to one primitive: a two-phase dense simplex with
Bland's anti-cycling rule on problems of at most a few dozen variables.
On top of it sit the two canonical strict-feasibility tests that the cone
combinatorics use:

* ``positive_dependence_margin`` decides whether vectors admit a strictly
  positive linear dependence (equivalently, whether their positive hull is
  their linear hull) by maximizing the smallest coefficient.
* ``face_witness`` decides whether a supporting functional exists that
  vanishes on a chosen subset of generators and is >= 1 on the rest.

Strict inequalities are encoded scale-invariantly: ``lambda_i > 0`` becomes
margin maximization with threshold 1e-9, and ``<u, a_j> > 0`` becomes the
normalization ``<u, a_j> >= 1``.  An exact-rational pivot mode (Fraction
arithmetic on the same tableau code path) is available for small instances
and serves as a second oracle in the test suite.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import InvalidInputError, UnboundedProblemError
from .sampling import SphereConfig

FEASIBILITY_TOL = 1e-9
MARGIN_THRESHOLD = 1e-9
WITNESS_SLACK_TOL = 1e-7


@dataclass
class LpVerdict:
    """Outcome of a feasibility test or LP solve.

    ``margin`` means: the optimal objective for ``solve_lp``, the maximized
    smallest coefficient t* for ``positive_dependence_margin``, and the
    smallest inequality value of the witness for ``face_witness``.  When
    feasible, the certificate satisfies its defining system within 1e-8.
    """

    feasible: bool
    margin: float
    certificate: np.ndarray
    value: float = float("nan")
    dual_residual: float = float("nan")
    extra: dict = field(default_factory=dict)


def _pivot(tableau, basis, row, col):
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    prow = tableau[row]
    for i, r in enumerate(tableau):
        if i == row:
            continue
        factor = r[col]
        if factor:
            tableau[i] = [a - factor * b for a, b in zip(r, prow)]
    if row < len(basis):
        basis[row] = col


def _bland_iterate(tableau, basis, ncols, tol):
    """Simplex iterations on a tableau whose last row is the cost row.

    Minimization convention: optimal when every reduced cost >= -tol over
    the first ncols columns.  Entering variable: smallest eligible column
    index.  Leaving variable: minimum ratio, ties by smallest basis index.
    """
    m = len(tableau) - 1
    while True:
        cost = tableau[m]
        col = -1
        for j in range(ncols):
            if cost[j] < -tol:
                col = j
                break
        if col < 0:
            return
        best_row = -1
        best_ratio = None
        for i in range(m):
            a = tableau[i][col]
            if a > tol:
                ratio = tableau[i][-1] / a
                if (
                    best_row < 0
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[best_row])
                ):
                    best_row = i
                    best_ratio = ratio
        if best_row < 0:
            raise UnboundedProblemError("LP is unbounded")
        _pivot(tableau, basis, best_row, col)


def _simplex_standard(c, a, b, exact):
    """min c.x subject to a x = b, x >= 0 via a two-phase tableau simplex.

    Returns (status, x, value, reduced_costs); status is "optimal" or
    "infeasible".  Redundant equality rows are dropped after phase 1.
    """
    if exact:
        conv = Fraction
        zero, one = Fraction(0), Fraction(1)
        tol = Fraction(0)
    else:
        conv = float
        zero, one = 0.0, 1.0
        tol = FEASIBILITY_TOL

    m = len(b)
    n = len(c)
    a = [[conv(v) for v in row] for row in a]
    b = [conv(v) for v in b]
    c = [conv(v) for v in c]
    for i in range(m):
        if b[i] < zero:
            a[i] = [-v for v in a[i]]
            b[i] = -b[i]

    # Phase 1: artificial variables occupy columns n..n+m-1 and start basic.
    tableau = [a[i] + [one if j == i else zero for j in range(m)] + [b[i]] for i in range(m)]
    cost = [zero] * (n + m + 1)
    for i in range(m):
        row = tableau[i]
        for j in range(n):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    tableau.append(cost)
    basis = list(range(n, n + m))
    _bland_iterate(tableau, basis, n, tol)

    infeas = -tableau[-1][-1]
    if infeas > (tol * max(1, m)):
        return "infeasible", None, None, None

    # Drive lingering zero-level artificials out; drop rows that are
    # redundant in the original columns.
    keep = []
    for i in range(m):
        if basis[i] >= n:
            col = -1
            for j in range(n):
                if tableau[i][j] > tol or tableau[i][j] < -tol:
                    col = j
                    break
            if col < 0:
                continue
            _pivot(tableau, basis, i, col)
        keep.append(i)
    body = [tableau[i] for i in keep]
    basis = [basis[i] for i in keep]

    # Phase 2: real objective; artificial columns are never eligible to
    # enter because iteration is restricted to the first n columns.
    cost = c + [zero] * m + [zero]
    for i, row in enumerate(body):
        cb = c[basis[i]] if basis[i] < n else zero
        if cb:
            cost = [cj - cb * rj for cj, rj in zip(cost, row)]
    tableau = body + [cost]
    _bland_iterate(tableau, basis, n, tol)

    x = [zero] * n
    for i in range(len(basis)):
        if basis[i] < n:
            x[basis[i]] = tableau[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    reduced = tableau[-1][:n]
    return "optimal", x, value, reduced


def solve_lp(objective, eq_matrix, eq_rhs, lower_bounds, exact: bool = False) -> LpVerdict:
    """Maximize objective.x subject to eq_matrix x = eq_rhs, x >= lower_bounds.

    Lower bounds may contain -inf for free variables (split internally).
    Returns an optimal basic solution; margin and value are the optimum,
    and dual_residual is the largest dual-feasibility violation of the
    final reduced costs (optimality certificate, <= 1e-9 on clean input).
    Raises UnboundedProblemError when the objective is unbounded and
    InvalidInputError on shape mismatch.
    """
    c_in = np.asarray(objective, dtype=float)
    a_in = np.atleast_2d(np.asarray(eq_matrix, dtype=float))
    b_in = np.asarray(eq_rhs, dtype=float)
    lb = np.asarray(lower_bounds, dtype=float)
    nvar = c_in.shape[0]
    if a_in.shape[1] != nvar or b_in.shape[0] != a_in.shape[0] or lb.shape[0] != nvar:
        raise InvalidInputError("inconsistent LP dimensions")

    free = ~np.isfinite(lb)
    # Standard-form columns: one shifted variable per bounded input variable,
    # a (plus, minus) pair per free input variable.  Integer signs keep
    # Fraction arithmetic exact in the rational mode.
    cols = []
    for j in range(nvar):
        cols.append((j, 1))
        if free[j]:
            cols.append((j, -1))

    if exact:
        shift = [Fraction(0) if free[j] else Fraction(lb[j]) for j in range(nvar)]
        c_exact = [Fraction(v) for v in c_in]
        a_exact = [[Fraction(v) for v in row] for row in a_in]
        b_exact = [
            Fraction(b_in[i]) - sum(a_exact[i][j] * shift[j] for j in range(nvar))
            for i in range(a_in.shape[0])
        ]
        a_std = [[sgn * a_exact[i][j] for (j, sgn) in cols] for i in range(a_in.shape[0])]
        c_std = [-sgn * c_exact[j] for (j, sgn) in cols]
        status, y, value_min, reduced = _simplex_standard(c_std, a_std, b_exact, True)
        if status == "infeasible":
            return LpVerdict(feasible=False, margin=float("-inf"), certificate=np.empty(0))
        x = list(shift)
        for k, (j, sgn) in enumerate(cols):
            x[j] = x[j] + Fraction(sgn) * y[k]
        value = sum(cj * xj for cj, xj in zip(c_exact, x))
        verdict = LpVerdict(
            feasible=True,
            margin=float(value),
            certificate=np.asarray([float(v) for v in x]),
            value=float(value),
            dual_residual=float(max((-r for r in reduced), default=0)),
        )
        verdict.extra["exact_value"] = value
        verdict.extra["exact_certificate"] = x
        return verdict

    shift = np.where(free, 0.0, lb)
    a_std = np.empty((a_in.shape[0], len(cols)))
    c_std = np.empty(len(cols))
    for k, (j, sgn) in enumerate(cols):
        a_std[:, k] = sgn * a_in[:, j]
        c_std[k] = -sgn * c_in[j]
    b_std = b_in - a_in @ shift
    status, y, value_min, reduced = _simplex_standard(
        c_std.tolist(), a_std.tolist(), b_std.tolist(), False
    )
    if status == "infeasible":
        return LpVerdict(feasible=False, margin=float("-inf"), certificate=np.empty(0))
    x = shift.copy()
    for k, (j, sgn) in enumerate(cols):
        x[j] += sgn * y[k]
    value = float(c_in @ x)
    return LpVerdict(
        feasible=True,
        margin=value,
        certificate=x,
        value=value,
        dual_residual=float(max((-r for r in reduced), default=0.0)),
    )


def positive_dependence_margin(vectors, exact: bool = False) -> LpVerdict:
    """Maximized smallest coefficient of a convex dependence of the vectors.

    Solves max t subject to sum_i lambda_i v_i = 0, sum_i lambda_i = 1,
    lambda_i >= t.  The verdict is feasible iff the optimum exists with
    t* above threshold (t* > 1e-9, or t* > 0 in exact mode), which holds
    exactly when pos(v_1..v_m) = lin(v_1..v_m).  The certificate is the
    coefficient vector lambda; margin is t*.
    """
    vecs = np.atleast_2d(np.asarray(vectors, dtype=float))
    m, dim = vecs.shape
    if m < 1:
        raise InvalidInputError("need at least one vector")
    # Variables: (y_1..y_m, t) with lambda_i = y_i + t, y_i >= 0, t free.
    a = np.zeros((dim + 1, m + 1))
    a[:dim, :m] = vecs.T
    a[:dim, m] = vecs.sum(axis=0)
    a[dim, :m] = 1.0
    a[dim, m] = float(m)
    b = np.zeros(dim + 1)
    b[dim] = 1.0
    c = np.zeros(m + 1)
    c[m] = 1.0
    lb = np.zeros(m + 1)
    lb[m] = -np.inf
    res = solve_lp(c, a, b, lb, exact=exact)
    if not res.feasible:
        return LpVerdict(feasible=False, margin=float("-inf"), certificate=np.empty(0))
    if exact:
        t_star = res.extra["exact_value"]
        lam = [y + t_star for y in res.extra["exact_certificate"][:m]]
        verdict = LpVerdict(
            feasible=t_star > 0,
            margin=float(t_star),
            certificate=np.asarray([float(v) for v in lam]),
        )
        verdict.extra["exact_margin"] = t_star
        verdict.extra["exact_certificate"] = lam
        return verdict
    t_star = res.value
    lam = res.certificate[:m] + res.certificate[m]
    return LpVerdict(feasible=t_star > MARGIN_THRESHOLD, margin=t_star, certificate=lam)


def face_witness(config: SphereConfig, face_indices, exact: bool = False) -> LpVerdict:
    """Supporting-functional test for the generators indexed by face_indices.

    Decides whether some u satisfies <u, a_i> = 0 for i in the index set and
    <u, a_j> >= 1 for every other j (the >= 1 normalization realizes strict
    positivity scale-invariantly).  Indices are 0-based.  The full index set
    is the always-feasible boundary case (the cone is an improper face of
    itself); it returns a zero certificate with infinite margin, and callers
    are expected to handle it.
    """
    idx = sorted(set(int(i) for i in face_indices))
    n, dim = config.points.shape
    if any(i < 0 or i >= n for i in idx):
        raise InvalidInputError("face indices out of range")
    rest = [j for j in range(n) if j not in idx]
    if not rest:
        return LpVerdict(feasible=True, margin=float("inf"), certificate=np.zeros(dim))

    pts = config.points
    # Variables: (u in R^dim free, one slack per strict row).
    nslack = len(rest)
    a = np.zeros((len(idx) + nslack, dim + nslack))
    b = np.zeros(len(idx) + nslack)
    for r, i in enumerate(idx):
        a[r, :dim] = pts[i]
    for r, j in enumerate(rest):
        a[len(idx) + r, :dim] = pts[j]
        a[len(idx) + r, dim + r] = -1.0
        b[len(idx) + r] = 1.0
    c = np.zeros(dim + nslack)
    lb = np.concatenate([np.full(dim, -np.inf), np.zeros(nslack)])
    res = solve_lp(c, a, b, lb, exact=exact)
    if not res.feasible:
        return LpVerdict(feasible=False, margin=float("-inf"), certificate=np.empty(0))
    u = res.certificate[:dim].astype(float)
    margin = float(min(pts[j] @ u for j in rest))
    verdict = LpVerdict(feasible=True, margin=margin, certificate=u)
    if exact:
        verdict.extra["exact_certificate"] = list(res.extra["exact_certificate"][:dim])
    return verdict
