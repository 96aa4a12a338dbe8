"""CY4Vertex DT/PT0 vertex correspondence

Checks  Vbar^DT_mu = Vbar^PT0_mu * V^DT_empty  mod q^N, the bars meaning
division by the leading coefficient. Signs of the fixed points are found
order by order: at order k only the points with k added boxes are new,
so with s = 1 - 2b the order-k identity is linear in the b's. Evaluating
it at random points of (Z/p)^5 gives a linear system over GF(p); its
0/1 solutions are enumerated over the free variables and each candidate
is confirmed at fresh points. Ambiguous orders branch depth first.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from itertools import product
from typing import NamedTuple
import random

from sympy import GF
from sympy.polys.matrices import DomainMatrix

from cy4vertex import settings
from cy4vertex.errors import InputError, SearchBudgetExhausted, VerificationFailed
from cy4vertex.exact_algebra import MonomialFraction, evaluate_mod_p, mf_sum, random_point
from cy4vertex.partitions import mu_from_text
from cy4vertex.settings import MODULUS
from cy4vertex.vertex_series.plethystic import magnificent_four
from cy4vertex.vertex_series.signs import SignAssignment, sign_from_formula
from cy4vertex.vertex_series.vertex import dt_fixed_points, pt0_fixed_points


#####################################################################
# Constants

# Case id -> (partition spec, N)
CORRESPONDENCE_CASES = {
    "dtpt0-1": ("12:1", 4),
    "dtpt0-2": ("12:1+t3", 3),
    "dtpt0-3": ("12:1+t3+t4", 3),
    "dtpt0-4": ("12:1 13:1", 3),
    "dtpt0-5": ("12:1 34:1", 3),
    "dtpt0-6": ("12:1 13:1 23:1", 3),
    "dtpt0-7": ("12:1 13:1 14:1 23:1 24:1 34:1", 3),
    "dtpt0-8": ("12:1 23:1 34:1", 3),
    "dtpt0-9": ("12:1+t4 13:1 34:1", 3),
    "dtpt0-10": ("12:1+t3 34:1", 3),
    "dtpt0-11": ("mu1=1/(1-t2)+t3 mu2=1/(1-t1)", 4),
    "dtpt0-12": ("mu1=1/(1-t2)+t3+t2*t3 mu2=1/(1-t1)", 3),
    "dtpt0-13": ("mu1=1/(1-t2)+t3+t3^2 mu2=1/(1-t1)", 3),
    "dtpt0-14": ("mu1=1/(1-t2) mu2=1/(1-t1) mu3=1", 3),
    "dtpt0-15": ("mu1=1/(1-t2)+t3 mu2=1/(1-t1)+t4 mu3=1", 2),
}

DT_SIGN_MODES = ("search", "formula_2dim")

CONFIRM_MODES = ("exact", "modular")

# Extra rows beyond the number of unknowns.
EXTRA_POINTS = 4

CONFIRM_POINTS = 3

_FIELD = GF(MODULUS)


#####################################################################
# CorrespondenceResult

class CorrespondenceResult(NamedTuple):
    verified: bool
    order: int
    signs: SignAssignment
    residual: str
    counts: dict

    def as_record(self) -> dict:
        return {
            "status": "Verified" if self.verified else "Failed",
            "order": self.order,
            "residual": self.residual,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "signs": self.signs.records(),
        }


#####################################################################
# Internal helper

def _group(points: list) -> dict:
    groups = {}
    for point in points:
        groups.setdefault(point.order, []).append(point)
    return groups


def case_spec(case: str) -> tuple:
    """(partition spec text, N) of a registered correspondence case.

    Raises:
        InputError: unknown case id.
    """
    try:
        return CORRESPONDENCE_CASES[case]
    except KeyError:
        raise InputError(f"Unknown correspondence case '{case}'", known=sorted(CORRESPONDENCE_CASES)) from None


#####################################################################
# SignSearch

class SignSearch:
    """Order by order sign search for one correspondence instance."""

    def __init__(self, dt_points: list, pt_points: list, reference, top: int,
                 budget: int = None, dt_mode: str = "search", rng: random.Random = None):
        if dt_mode not in DT_SIGN_MODES:
            raise InputError(f"Unknown DT sign mode '{dt_mode}', expected one of {DT_SIGN_MODES}")
        self.dt = _group(dt_points)
        self.pt = _group(pt_points)
        self.reference = reference
        self.top = top
        self.budget = budget or settings.CY4VERTEX_SEARCH_BUDGET
        self.rng = rng or random.Random(settings.CY4VERTEX_SEED)
        self.lead_dt = self.dt[0][0]
        self.lead_pt = self.pt[0][0]
        if self.lead_dt.value.is_zero() or self.lead_pt.value.is_zero():
            raise VerificationFailed("leading term of the vertex vanishes", dt=self.lead_dt.ident, pt0=self.lead_pt.ident)
        self.fixed = SignAssignment()
        if dt_mode == "formula_2dim":
            for point in dt_points:
                self.fixed.assign(point.ident, sign_from_formula(point.data, "two_dim"), "formula_2dim")
        else:
            self.fixed.assign(self.lead_dt.ident, 1, "searched")
        self.fixed.assign(self.lead_pt.ident, 1, "searched")
        self.failed_order = 0

    def counts(self) -> dict:
        return {k: {"DT": len(self.dt.get(k, [])), "PT0": len(self.pt.get(k, []))} for k in range(self.top + 1)}

    # Modular evaluation

    def _sample(self, k: int) -> dict:
        """Values of every term up to order k at a random point."""
        while True:
            point = random_point(self.rng)
            try:
                values = {}
                for j in range(k + 1):
                    for p in self.dt.get(j, []) + self.pt.get(j, []):
                        values[p.ident] = evaluate_mod_p(p.value, point)
                    values[("ref", j)] = evaluate_mod_p(self.reference.coefficient(j), point)
            except ZeroDivisionError:
                continue
            if values[self.lead_pt.ident] and values[self.lead_dt.ident]:
                return values

    def _ratio(self, values: dict, signs: SignAssignment) -> int:
        lead_dt = signs.sign(self.lead_dt.ident) * values[self.lead_dt.ident]
        lead_pt = signs.sign(self.lead_pt.ident) * values[self.lead_pt.ident]
        return lead_dt * pow(lead_pt % MODULUS, -1, MODULUS) % MODULUS

    def _pt_sum(self, j: int, values: dict, signs: SignAssignment) -> int:
        return sum(signs.sign(p.ident) * values[p.ident] for p in self.pt.get(j, []))

    def _residual_mod_p(self, k: int, values: dict, signs: SignAssignment) -> int:
        ratio = self._ratio(values, signs)
        dt_side = sum(signs.sign(p.ident) * values[p.ident] for p in self.dt.get(k, []))
        pt_side = sum(self._pt_sum(j, values, signs) * values[("ref", k - j)] for j in range(k + 1))
        return (dt_side - ratio * pt_side) % MODULUS

    def _row(self, k: int, unknowns: list, values: dict, signs: SignAssignment) -> list:
        ratio = self._ratio(values, signs)
        rhs = ratio * sum(self._pt_sum(j, values, signs) * values[("ref", k - j)] for j in range(k))
        row = []
        for p in self.dt.get(k, []):
            s = signs.signs.get(p.ident, 1)
            rhs -= s * values[p.ident]
        for p in self.pt.get(k, []):
            s = signs.signs.get(p.ident, 1)
            rhs += ratio * s * values[p.ident]
        for p in unknowns:
            scale = -2 if p.kind == "DT" else 2 * ratio
            row.append(scale * values[p.ident] % MODULUS)
        row.append(rhs % MODULUS)
        return row

    # Linear algebra

    def _solve(self, k: int, signs: SignAssignment) -> list:
        """All confirmed 0/1 solutions for the unknown signs at order k.

        Raises:
            SearchBudgetExhausted: too many free variables.
        """
        unknowns = [p for p in self.dt.get(k, []) + self.pt.get(k, []) if p.ident not in signs]
        n = len(unknowns)
        rows = [self._row(k, unknowns, self._sample(k), signs) for _ in range(n + EXTRA_POINTS)]
        matrix = DomainMatrix([[_FIELD(v) for v in row] for row in rows], (len(rows), n + 1), _FIELD)
        reduced, pivots = matrix.rref()
        entries = [[int(x) % MODULUS for x in row] for row in reduced.to_Matrix().tolist()]
        if n in pivots:
            return []
        free = [c for c in range(n) if c not in pivots]
        if 2 ** len(free) > self.budget:
            raise SearchBudgetExhausted("sign search budget exhausted", order=k, free=len(free), budget=self.budget)

        candidates = []
        for assignment in product((0, 1), repeat=len(free)):
            beta = dict(zip(free, assignment))
            for r, c in enumerate(pivots):
                value = (entries[r][n] - sum(entries[r][f] * beta[f] for f in free)) % MODULUS
                if value not in (0, 1):
                    break
                beta[c] = value
            else:
                candidates.append(tuple(beta[c] for c in range(n)))

        solutions = []
        for bits in candidates:
            child = signs.copy()
            for p, b in zip(unknowns, bits):
                child.assign(p.ident, 1 - 2 * b, "searched")
            if all(not self._residual_mod_p(k, self._sample(k), child) for _ in range(CONFIRM_POINTS)):
                solutions.append(child)
        settings.log(f"sign search: order {k}, {n} unknowns, {len(free)} free, {len(solutions)} solutions")
        return solutions

    # Depth first search

    def search(self, k: int = 1, signs: SignAssignment = None):
        """Complete sign assignment through order top, or None."""
        signs = signs if signs is not None else self.fixed.copy()
        if k > self.top:
            return signs
        solutions = self._solve(k, signs)
        if not solutions:
            self.failed_order = max(self.failed_order, k)
            return None
        if len(solutions) > 1:
            settings.warn(f"Sign search is ambiguous at order {k}: {len(solutions)} solutions, branching")
        for child in solutions:
            result = self.search(k + 1, child)
            if result is not None:
                return result
        return None

    # Checks with given signs

    def exact_residual(self, k: int, signs: SignAssignment) -> MonomialFraction:
        """Vbar^DT_k - sum_j Vbar^PT0_j V^DT_empty_(k-j), cleared of the leading terms."""
        lead_dt = self.lead_dt.value * signs.sign(self.lead_dt.ident)
        lead_pt = self.lead_pt.value * signs.sign(self.lead_pt.ident)
        dt_side = mf_sum(p.value * signs.sign(p.ident) for p in self.dt.get(k, []))
        pt_side = mf_sum(
            mf_sum(p.value * signs.sign(p.ident) for p in self.pt.get(j, [])) * self.reference.coefficient(k - j)
            for j in range(k + 1)
        )
        return dt_side * lead_pt - lead_dt * pt_side

    def check(self, signs: SignAssignment, confirm: str = "exact") -> tuple:
        """(first failing order or None, residual text)."""
        for k in range(1, self.top + 1):
            if any(self._residual_mod_p(k, self._sample(k), signs) for _ in range(CONFIRM_POINTS)):
                return k, "nonzero modulo p"
            if confirm == "exact":
                residual = self.exact_residual(k, signs)
                if not residual.is_zero():
                    return k, str(residual)
        return None, "0"


#####################################################################
# Operations

def _instance(mu: tuple, order: int, parallelism: int) -> tuple:
    top = order - 1
    dt_points = dt_fixed_points(mu, top, parallelism)
    pt_points = pt0_fixed_points(mu, top, parallelism)
    return dt_points, pt_points, magnificent_four(top), top


def _as_mu(spec):
    if spec is None or isinstance(spec, tuple):
        return spec
    return mu_from_text(spec)


def verify_correspondence(spec, order: int, search_budget: int = None, dt_signs: str = "search",
                          confirm: str = "exact", parallelism: int = 1, seed: int = None) -> CorrespondenceResult:
    """Search signs making the DT/PT0 correspondence hold modulo q^order.

    Args:
        spec: asymptotics mu, or a partition spec text
        order (int): N, the identity is checked for q^0 .. q^(N-1)
        search_budget (int): largest number of free 0/1 assignments per order
        dt_signs (str): "search", or "formula_2dim" to fix the DT signs
        confirm (str): "exact" rechecks the found signs in exact arithmetic

    Raises:
        SearchBudgetExhausted: an order has too many free signs.
        ModuliPresent: the PT0 side carries moduli.
    """
    if confirm not in CONFIRM_MODES:
        raise InputError(f"Unknown confirmation mode '{confirm}', expected one of {CONFIRM_MODES}")
    if order < 0:
        raise InputError(f"Order must be nonnegative, got {order}")
    if order == 0:
        return CorrespondenceResult(True, 0, SignAssignment(), "0", {})
    rng = random.Random(settings.CY4VERTEX_SEED if seed is None else seed)
    dt_points, pt_points, reference, top = _instance(_as_mu(spec), order, parallelism)
    search = SignSearch(dt_points, pt_points, reference, top, search_budget, dt_signs, rng)
    signs = search.search()
    if signs is None:
        return CorrespondenceResult(False, search.failed_order, search.fixed, "no sign assignment", search.counts())
    failed, residual = search.check(signs, confirm)
    if failed is not None:
        return CorrespondenceResult(False, failed, signs, residual, search.counts())
    return CorrespondenceResult(True, order, signs, "0", search.counts())


def check_correspondence(spec, order: int, signs: SignAssignment, confirm: str = "exact",
                         parallelism: int = 1, seed: int = None) -> CorrespondenceResult:
    """Check the correspondence modulo q^order with a complete sign assignment."""
    if order <= 0:
        return CorrespondenceResult(True, 0, signs, "0", {})
    rng = random.Random(settings.CY4VERTEX_SEED if seed is None else seed)
    dt_points, pt_points, reference, top = _instance(_as_mu(spec), order, parallelism)
    search = SignSearch(dt_points, pt_points, reference, top, rng=rng)
    missing = [p.ident for p in dt_points + pt_points if p.ident not in signs]
    if missing:
        raise InputError(f"Sign assignment misses {len(missing)} fixed points", first=missing[0])
    failed, residual = search.check(signs, confirm)
    if failed is not None:
        return CorrespondenceResult(False, failed, signs, residual, search.counts())
    return CorrespondenceResult(True, order, signs, "0", search.counts())
