"""CY4Vertex sign assignments

Every fixed point contributes a square root whose sign is a free choice.
A SignAssignment records the choice per fixed point identifier together
with where it came from.

For project details, see README.md
"""

__author__ = "CY4Vertex developers"
__copyright__ = "Copyright (c) 2023 CY4Vertex developers"
__license__ = "MIT"


from typing import Iterable, Mapping

from cy4vertex.errors import InputError
from cy4vertex.exact_algebra.laurent import double
from cy4vertex.local_terms import FIBRE
from cy4vertex.partitions import SolidPartition


#####################################################################
# Constants

FORMULA_MODES = ("zero_dim", "two_dim")

PROVENANCES = ("formula_0dim", "formula_2dim", "searched", "explicit", "positive", "support")


#####################################################################
# SignAssignment

class SignAssignment:
    """Fixed point identifier -> +1 or -1, with provenance."""

    __slots__ = ("signs", "provenance")

    def __init__(self, signs: Mapping[str, int] = None, provenance: Mapping[str, str] = None):
        self.signs = {}
        self.provenance = {}
        for ident, sign in (signs or {}).items():
            self.assign(ident, sign, (provenance or {}).get(ident, "explicit"))

    def assign(self, ident: str, sign: int, provenance: str) -> None:
        if sign not in (1, -1):
            raise InputError(f"Sign of {ident} must be +1 or -1, got {sign}")
        if provenance not in PROVENANCES:
            raise InputError(f"Unknown sign provenance '{provenance}'")
        self.signs[ident] = sign
        self.provenance[ident] = provenance

    def sign(self, ident: str) -> int:
        """
        Raises:
            InputError: the fixed point has no sign.
        """
        try:
            return self.signs[ident]
        except KeyError:
            raise InputError(f"No sign assigned to fixed point {ident}") from None

    def covers(self, idents: Iterable[str]) -> bool:
        return all(ident in self.signs for ident in idents)

    def __contains__(self, ident: str) -> bool:
        return ident in self.signs

    def __len__(self) -> int:
        return len(self.signs)

    def copy(self) -> "SignAssignment":
        return SignAssignment(self.signs, self.provenance)

    def flipped(self, ident: str) -> "SignAssignment":
        result = self.copy()
        result.signs[ident] = -self.sign(ident)
        return result

    def update(self, other: "SignAssignment") -> None:
        self.signs.update(other.signs)
        self.provenance.update(other.provenance)

    def records(self) -> list:
        return [
            {"fixed_point": ident, "sign": self.signs[ident], "provenance": self.provenance[ident]}
            for ident in sorted(self.signs)
        ]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "SignAssignment":
        """Inverse of `records`; entries without provenance count as explicit."""
        result = cls()
        for record in records:
            try:
                result.assign(str(record["fixed_point"]), int(record["sign"]), record.get("provenance", "explicit"))
            except (KeyError, TypeError, ValueError) as err:
                raise InputError(f"Cannot read sign record {record}") from err
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, SignAssignment) and self.signs == other.signs

    __hash__ = None

    def __repr__(self) -> str:
        return f"SignAssignment({len(self.signs)} fixed points)"


#####################################################################
# Internal helper

def _diagonal_points(pi: SolidPartition) -> list:
    """(i, i, i, j) in pi with i < j."""
    extent = pi.extent
    return [(i, i, i, j) for i in range(extent) for j in range(i + 1, extent) if pi.contains((i, i, i, j))]


def _off_fibre(pi: SolidPartition) -> bool:
    return pi.mu[FIBRE].is_empty() and not any(FIBRE in pair for pair in pi.lambdas)


#####################################################################
# Operations

def sign_from_formula(pi: SolidPartition, mode: str) -> int:
    """Conjectural sign of a DT fixed point relative to [-vtilde].

    zero_dim: (-1)^(|pi| + #{(i,i,i,j) in pi : i < j}) for finite pi.
    two_dim: (-1)^(|pi| + mu_pi), mu_pi the sum of the coefficients of W at
    t1^i t2^i t3^i t4^j over (i,i,i,j) in pi with i < j.

    Raises:
        InputError: unknown mode, zero_dim with asymptotics, or two_dim
            with asymptotics extending along x4.
    """
    if mode not in FORMULA_MODES:
        raise InputError(f"Unknown sign formula '{mode}', expected one of {FORMULA_MODES}")
    diagonal = _diagonal_points(pi)
    if mode == "zero_dim":
        if any(not plane.is_empty() for plane in pi.mu):
            raise InputError("The zero_dim sign formula applies to finite solid partitions only")
        return (-1) ** (pi.size + len(diagonal))
    if not _off_fibre(pi):
        raise InputError("The two_dim sign formula needs asymptotics supported on x4 = 0")
    w = pi.decomposition.w
    mu_pi = sum(w.coefficient(double(x + (0,))) for x in diagonal)
    return (-1) ** int(pi.renorm_volume + mu_pi)
