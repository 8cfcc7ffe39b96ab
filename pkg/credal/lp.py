"""Exact rational linear feasibility.

Phase one of the simplex method on ``A x = b, x >= 0`` with one artificial
variable per row, Bland's rule for both pivot choices, and ``Fraction``
arithmetic throughout. When the system is infeasible the final reduced costs
of the artificial columns give a Farkas certificate ``y`` with
``y.A_j <= 0`` for every column and ``y.b > 0``.
"""
from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    solution: tuple = None
    farkas: tuple = None
    pivots: int = 0


class SimplexTableau:
    """Phase-one tableau; rows are sign-normalized so that b >= 0."""

    def __init__(self, rows, rhs):
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0
        self.signs = [1 if b >= 0 else -1 for b in rhs]
        self.A = []
        for i, (row, sign) in enumerate(zip(rows, self.signs)):
            artificial = [ONE if k == i else ZERO for k in range(self.m)]
            self.A.append([Fraction(sign * a) for a in row] + artificial)
        self.b = [Fraction(sign * b) for b, sign in zip(rhs, self.signs)]
        self.basis = [self.n + i for i in range(self.m)]
        self.width = self.n + self.m
        # reduced costs of min sum(artificials)
        self.c = [-sum((self.A[i][j] for i in range(self.m)), ZERO) for j in range(self.n)]
        self.c += [ZERO] * self.m
        self.pivots = 0

    def pivot(self, i, j):
        row = self.A[i]
        piv = row[j]
        if piv != 1:
            row = [a / piv for a in row]
            self.A[i] = row
            self.b[i] /= piv
        nonzero = [l for l, a in enumerate(row) if a]
        for k in range(self.m):
            if k == i:
                continue
            factor = self.A[k][j]
            if factor:
                target = self.A[k]
                for l in nonzero:
                    target[l] -= factor * row[l]
                self.b[k] -= factor * self.b[i]
        factor = self.c[j]
        if factor:
            for l in nonzero:
                self.c[l] -= factor * row[l]
        self.basis[i] = j
        self.pivots += 1

    def bland_step(self):
        entering = next((j for j in range(self.width) if self.c[j] < 0), None)
        if entering is None:
            return False
        best = None
        for i in range(self.m):
            a = self.A[i][entering]
            if a > 0:
                key = (self.b[i] / a, self.basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        # phase one is bounded below by zero, so some ratio always exists
        self.pivot(best[1], entering)
        return True

    def objective(self):
        return sum((self.b[i] for i, j in enumerate(self.basis) if j >= self.n), ZERO)

    def solve(self):
        while self.bland_step():
            pass
        if self.objective() == 0:
            solution = [ZERO] * self.n
            for i, j in enumerate(self.basis):
                if j < self.n:
                    solution[j] = self.b[i]
            return Feasibility(True, solution=tuple(solution), pivots=self.pivots)
        farkas = tuple(sign * (ONE - self.c[self.n + i]) for i, sign in enumerate(self.signs))
        return Feasibility(False, farkas=farkas, pivots=self.pivots)


def find_nonnegative_solution(rows, rhs):
    """Decide exactly whether A x = b has a solution with x >= 0."""
    if not rows:
        return Feasibility(True, solution=())
    return SimplexTableau(rows, rhs).solve()
