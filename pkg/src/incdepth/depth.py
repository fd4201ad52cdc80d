"""Minimum depth and H-depth of inclusion matrices via bracketed powers.

For an r x s inclusion matrix M the bracketed powers are

    M^[0] = I_r,   M^[2n] = (M M^t)^n,   M^[2n+1] = (M M^t)^n M,

so M^[n+1] = M^[n] M^t for odd n and M^[n] M for even n. M has depth
n >= 1 when M^[n+1] <= q M^[n-1] entrywise for some positive integer q;
the least such n is the minimum depth d(M). H-depth lives on the
symmetric matrix S = M^t M: H-depth 2n-1 means S^n <= q S^{n-1} for some
positive integer q.

A valid inclusion matrix has no zero row and no zero column, so M M^t
and M^t M have strictly positive diagonals. Multiplying a nonnegative
matrix by a positive-diagonal matrix can only grow its support, hence
supp(M^[n-1]) is contained in supp(M^[n+1]) and the dominance inequality
holds for some q exactly when the two zero patterns coincide. The
searches below therefore run on boolean support matrices, whose cells
never grow, and exact big-integer powers are only computed afterwards to
extract the minimal witness q.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bigraph, charpoly
from .exactmat import IntMatrix, MatrixError, SupportMatrix, dominance_q

# Support sequences are monotone and stabilize well below this cap (the
# spectral bound gives d <= 2*min(r,s) - 1); hitting it means a bug.
def _cap(rows: int, cols: int) -> int:
    return 2 * (rows + cols) + 2


class InclusionMatrix:
    """Nonnegative integer matrix with no zero row and no zero column."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        if not isinstance(matrix, IntMatrix):
            matrix = IntMatrix(matrix)
        for i, row in enumerate(matrix.entries):
            for j, e in enumerate(row):
                if e < 0:
                    raise MatrixError(f"negative entry {e} at ({i + 1},{j + 1})")
        for i, row in enumerate(matrix.entries):
            if not any(row):
                raise MatrixError(f"zero row {i + 1}")
        for j in range(matrix.cols):
            if not any(row[j] for row in matrix.entries):
                raise MatrixError(f"zero column {j + 1}")
        self.matrix = matrix

    @property
    def rows(self) -> int:
        return self.matrix.rows

    @property
    def cols(self) -> int:
        return self.matrix.cols

    def transposed(self) -> "InclusionMatrix":
        return InclusionMatrix(self.matrix.transpose())

    def __eq__(self, other) -> bool:
        return isinstance(other, InclusionMatrix) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"InclusionMatrix({[list(r) for r in self.matrix.entries]!r})"


def bracketed_power(m: InclusionMatrix, n: int) -> IntMatrix:
    """Exact bracketed power M^[n]; r x r for even n, r x s for odd n."""
    if n < 0:
        raise MatrixError(f"bracketed power needs n >= 0, got {n}")
    mat = m.matrix
    gram = mat * mat.transpose()
    acc = IntMatrix.identity(mat.rows)
    for _ in range(n // 2):
        acc = acc * gram
    if n % 2:
        acc = acc * mat
    return acc


def has_depth(m: InclusionMatrix, n: int) -> int | None:
    """Minimal witness q with M^[n+1] <= q M^[n-1], or None if M lacks depth n."""
    if n < 1:
        raise MatrixError(f"depth is defined for n >= 1, got {n}")
    return dominance_q(bracketed_power(m, n + 1), bracketed_power(m, n - 1))


def min_depth(m: InclusionMatrix) -> int:
    """Minimum depth d(M), found by support stabilization of bracketed powers."""
    supp = m.matrix.support()
    supp_t = supp.transpose()
    prev = SupportMatrix.identity(m.rows)  # supp(M^[0])
    cur = supp                             # supp(M^[1])
    for n in range(1, _cap(m.rows, m.cols) + 1):
        nxt = cur * (supp_t if n % 2 else supp)  # supp(M^[n+1])
        if nxt == prev:
            return n
        prev, cur = cur, nxt
    raise AssertionError("depth support stabilization exceeded its iteration cap")


def min_hdepth(m: InclusionMatrix) -> int:
    """Minimum H-depth, the least odd 2n-1 with S^n <= q S^{n-1} for S = M^t M."""
    supp_s = (m.matrix.transpose() * m.matrix).support()
    prev = SupportMatrix.identity(m.cols)  # supp(S^0)
    cur = supp_s                           # supp(S^1)
    for n in range(1, _cap(m.rows, m.cols) + 1):
        if cur == prev:
            return 2 * n - 1
        prev, cur = cur, cur * supp_s
    raise AssertionError("H-depth support stabilization exceeded its iteration cap")


def min_odd_depth_symmetric(sym: IntMatrix) -> int:
    """Minimum odd depth read off the symmetric bracketed square alone.

    For sym = M M^t, depth 2n+1 of M means sym^{n+1} <= q sym^n, and the
    strictly positive diagonal turns that into stabilization of the zero
    pattern; the answer is the same for every M with that bracketed square.
    """
    if not sym.is_square():
        raise MatrixError(f"expected a square matrix, got {sym.rows}x{sym.cols}")
    if not sym.is_symmetric():
        raise MatrixError("expected a symmetric matrix")
    for i in range(sym.rows):
        if sym.entries[i][i] <= 0:
            raise MatrixError(f"diagonal entry ({i + 1},{i + 1}) must be positive")
    supp = sym.support()
    prev = SupportMatrix.identity(sym.rows)  # supp(sym^0)
    cur = supp                               # supp(sym^1)
    for n in range(0, _cap(sym.rows, sym.cols) + 1):
        if cur == prev:
            return 2 * n + 1
        prev, cur = cur, cur * supp
    raise AssertionError("odd-depth support stabilization exceeded its iteration cap")


@dataclass(frozen=True)
class DepthReport:
    """Every depth invariant of one inclusion matrix, with cross-check flags."""

    rows: int
    cols: int
    depth: int
    depth_transpose: int
    h_depth: int
    min_odd_depth: int
    min_even_depth: int
    q_witness: int
    spectral_bound: int
    methods_agree: dict[str, bool]

    def all_methods_agree(self) -> bool:
        return all(self.methods_agree.values())


def depth_report(m: InclusionMatrix) -> DepthReport:
    """Compute d, d(M^t), H-depth, graph values, the spectral bound and witness q.

    The mutual inequalities between the invariants are theorems, so they are
    asserted before the report is returned; a failure indicates a bug, not a
    bad input. Agreement between the matrix and graph methods, and the parity
    rule tying H-depth to d(M^t), are recorded as flags.
    """
    d = min_depth(m)
    d_t = min_depth(m.transposed())
    d_h = min_hdepth(m)
    graph = bigraph.build_graph(m)
    odd = bigraph.min_odd_depth_graph(graph)
    even = bigraph.min_even_depth_graph(graph)
    graph_h = bigraph.min_hdepth_graph(graph)
    bound = charpoly.depth_upper_bound(m)
    q = has_depth(m, d)
    assert q is not None, f"no dominance witness at minimum depth {d}"
    assert d >= 1 and d_h >= 1, f"depths must be positive: d={d}, d_H={d_h}"
    assert d_h % 2 == 1, f"H-depth must be odd: {d_h}"
    assert abs(d - d_h) <= 2, f"|d - d_H| > 2: d={d}, d_H={d_h}"
    assert abs(d_t - d) <= 1, f"|d(M^t) - d| > 1: d(M^t)={d_t}, d={d}"
    assert 0 <= d_h - d_t <= 1, f"d_H - d(M^t) out of [0,1]: d_H={d_h}, d(M^t)={d_t}"
    assert d <= bound, f"d={d} exceeds spectral bound {bound}"
    return DepthReport(
        rows=m.rows,
        cols=m.cols,
        depth=d,
        depth_transpose=d_t,
        h_depth=d_h,
        min_odd_depth=odd,
        min_even_depth=even,
        q_witness=q,
        spectral_bound=bound,
        methods_agree={
            "graph_depth": d == min(odd, even),
            "graph_hdepth": d_h == graph_h,
            "transpose_parity": d_h == (d_t if d_t % 2 else d_t + 1),
        },
    )
