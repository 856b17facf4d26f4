"""Star-shaped resolution graphs: one central curve of genus g with
self-intersection -(deg E + r), and one Hirzebruch-Jung chain per branch.

The intersection matrix of any such graph coming from an actual
singularity must be negative definite; that is certified here by exact
integer (Bareiss) pivoting, never by floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .arith import cf_evaluate, hj_expansion
from .dpd import FractionalDivisor, deg_total

__all__ = [
    "ResolutionGraph",
    "build_graph",
    "intersection_matrix",
    "is_negative_definite",
    "to_dot",
]


@dataclass(frozen=True)
class ResolutionGraph:
    """Central vertex (genus, self-intersection) plus arm chains of
    rational curves; each chain weight is <= -2."""

    central_genus: int
    central_self_intersection: int
    arms: tuple[tuple[int, ...], ...]
    provenance: FractionalDivisor | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "arms", tuple(tuple(arm) for arm in self.arms))
        if self.central_genus < 0:
            raise ValueError(f"central genus must be >= 0, got {self.central_genus}")
        for arm in self.arms:
            if not arm or any(w > -2 for w in arm):
                raise ValueError(f"arm weights must all be <= -2, got {arm}")
        # minimal-good: no (-1)-curve meeting at most two other curves
        if (
            self.central_self_intersection == -1
            and self.central_genus == 0
            and len(self.arms) < 3
        ):
            raise ValueError("central (-1)-curve of genus 0 with < 3 arms is not minimal good")

    @property
    def size(self) -> int:
        return 1 + sum(len(arm) for arm in self.arms)

    def to_json_dict(self) -> dict:
        return {
            "genus": self.central_genus,
            "centralSelfInt": self.central_self_intersection,
            "arms": [list(arm) for arm in self.arms],
        }


def build_graph(D: FractionalDivisor) -> ResolutionGraph:
    """Resolution graph of the singularity with divisor data D.

    The central curve has genus g and self-intersection -deg(ceil D)
    = -(deg E + r): every branch coefficient lies in (0,1) so each ceiling
    contributes exactly 1.  Arm i carries the negated Hirzebruch-Jung
    expansion of q_i/(q_i - p_i), in canonical branch order.
    """
    if deg_total(D) <= 0:
        raise ValueError(f"divisor must have positive degree, got {deg_total(D)}")
    arms = tuple(
        tuple(-b for b in hj_expansion(q, p)) for p, q in D.branches
    )
    return ResolutionGraph(
        central_genus=D.genus,
        central_self_intersection=-(D.deg_e + D.branch_count),
        arms=arms,
        provenance=D,
    )


def intersection_matrix(G: ResolutionGraph) -> np.ndarray:
    """Plumbing matrix: diagonal of self-intersections (central first,
    then each arm from the central vertex outward), 1 on every edge."""
    n = G.size
    M = np.zeros((n, n), dtype=np.int64)
    M[0, 0] = G.central_self_intersection
    idx = 1
    for arm in G.arms:
        prev = 0
        for w in arm:
            M[idx, idx] = w
            M[idx, prev] = M[prev, idx] = 1
            prev = idx
            idx += 1
    return M


def is_negative_definite(M) -> bool:
    """Exact test via fraction-free (Bareiss) elimination: negative
    definite iff the leading principal minors alternate in sign,
    (-1)^k * minor_k > 0 for all k.  Arbitrary-precision integers
    throughout; a vanishing pivot means not definite.
    """
    A = [[int(x) for x in row] for row in np.asarray(M)]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    sign = -1
    prev = 1
    for k in range(n):
        pivot = A[k][k]  # equals the (k+1)x(k+1) leading minor
        if pivot == 0 or (pivot > 0) != (sign > 0):
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * pivot - A[i][k] * A[k][j]) // prev
        prev = pivot
        sign = -sign
    return True


def to_dot(G: ResolutionGraph) -> str:
    """Deterministic DOT rendering; byte-identical for equal graphs."""
    lines = ["graph resolution {"]
    lines.append(
        f'  n0 [label="g={G.central_genus}, {G.central_self_intersection}"];'
    )
    idx = 1
    edges = []
    for arm in G.arms:
        prev = 0
        for w in arm:
            lines.append(f'  n{idx} [label="{w}"];')
            edges.append(f"  n{prev} -- n{idx};")
            prev = idx
            idx += 1
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def arm_roundtrip_ok(G: ResolutionGraph) -> bool:
    """Each arm's weights, negated, must evaluate back to q/(q-p) for the
    source branch (requires provenance)."""
    if G.provenance is None:
        raise ValueError("graph carries no source divisor")
    for arm, (p, q) in zip(G.arms, G.provenance.branches):
        if cf_evaluate([-w for w in arm]) != Fraction(q, q - p):
            return False
    return True
