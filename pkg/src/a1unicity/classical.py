"""Partition-level unicity classifier for the classical groups.

Unipotent classes of SL(W), Sp(W) and SO(W) in good characteristic are
parametrised by partitions of dim W (Jordan blocks on the natural
module).  For an element of order p the question "are all A1-overgroups
conjugate?" depends only on that partition, and the answer is a short
list of hook and doubled-hook shapes:

  SL(n):  (l, 1^r)     with l <= p, and r = 0 whenever l in {3, p}
  Sp(2m): (a, 1^r)     with a even, a < p
          (a, a, 1^r)  with a odd, a < p, and r = 0 whenever a = 3
  SO(N):  (a, 1^r)     with a odd, a <= p, and r = 0 whenever a = 3
          (a, a, 1^r)  with a even, a < p

Everything else meets non-conjugate overgroups; for the shapes
(p, 1^r), (3, 1^r), (p, p, 1^r) and (3, 3, 1^r) an explicit witness
pair of module structures is attached.

The doubled-hook exclusion at a = 3 parallels the hook exclusion: the
four-dimensional twisted tensor module L(1)*L(1)@a has blocks (3, 1), so
its doubling realizes (3, 3, 1^r) inside Sp whenever r >= 2, exactly as
a single copy realizes (3, 1^r) inside SO.  The enumeration engine
confirms both families.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    BadPrimeError,
    DimensionMismatchError,
    IdentityElementError,
    InvalidQueryError,
    NoWitnessRuleError,
    ParityViolationError,
)
from .ffmatrix import is_prime
from .sl2modules import (
    Doubled,
    Irr,
    IrreducibleDescriptor,
    IrreducibleFactor,
    ModuleDescriptor,
    Trivial,
    Weyl,
)


class Family(str, Enum):
    SL = "SL"
    SP = "Sp"
    SO = "SO"


@dataclass(frozen=True)
class GroupFamily:
    """A classical group together with its natural-module dimension."""

    family: Family
    dimension: int

    def __post_init__(self):
        if self.dimension < 2:
            raise InvalidQueryError(f"natural module dimension {self.dimension} < 2")
        if self.family is Family.SP and self.dimension % 2:
            raise InvalidQueryError("symplectic groups need even dimension")

    def __str__(self) -> str:
        return f"{self.family.value}({self.dimension})"


def SL(n: int) -> GroupFamily:
    return GroupFamily(Family.SL, n)


def Sp(n: int) -> GroupFamily:
    return GroupFamily(Family.SP, n)


def SO(n: int) -> GroupFamily:
    return GroupFamily(Family.SO, n)


@dataclass(frozen=True)
class Partition:
    """Descending list of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts:
            raise ValueError("empty partition")
        if any(x < 1 for x in parts):
            raise ValueError(f"nonpositive part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not descending: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        return cls(tuple(int(x) for x in text.split(",")))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicity(self, size: int) -> int:
        return self.parts.count(size)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)


class VerdictKind(str, Enum):
    UNIQUE = "Unique"
    NON_UNIQUE = "NonUnique"
    OUT_OF_SCOPE = "OutOfScope"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witness_pair: tuple[ModuleDescriptor, ModuleDescriptor] | None = None
    reason: str | None = None


# smallest natural-module dimensions the classification covers
_MIN_DIM = {Family.SL: 2, Family.SP: 4, Family.SO: 7}


def validate(group: GroupFamily, partition: Partition, p: int) -> None:
    """Check that the partition names a nonidentity unipotent class of
    the group in characteristic p; raise a ValidationError subclass if
    not."""
    if not is_prime(p):
        raise BadPrimeError(f"{p} is not prime")
    if group.family is not Family.SL and p == 2:
        raise BadPrimeError(f"p = 2 is a bad prime for {group}")
    if partition.n != group.dimension:
        raise DimensionMismatchError(
            f"partition of {partition.n} vs natural module of dim {group.dimension}"
        )
    if group.family is Family.SP:
        for size in set(partition.parts):
            if size % 2 == 1 and partition.multiplicity(size) % 2:
                raise ParityViolationError(
                    f"odd block size {size} occurs an odd number of times"
                )
    if group.family is Family.SO:
        for size in set(partition.parts):
            if size % 2 == 0 and partition.multiplicity(size) % 2:
                raise ParityViolationError(
                    f"even block size {size} occurs an odd number of times"
                )
    if partition.parts[0] == 1:
        raise IdentityElementError("identity partition (1^n) is not classified")


def is_order_p(partition: Partition, p: int) -> bool:
    """Order exactly p: largest block in [2, p]."""
    return 2 <= partition.parts[0] <= p


def _hook(partition: Partition) -> tuple[int, int] | None:
    """(l, r) if the partition is (l, 1^r) with l >= 2, else None."""
    head = partition.parts[0]
    rest = partition.parts[1:]
    if head >= 2 and all(x == 1 for x in rest):
        return head, len(rest)
    return None


def _doubled_hook(partition: Partition) -> tuple[int, int] | None:
    """(a, r) if the partition is (a, a, 1^r) with a >= 2, else None."""
    if len(partition.parts) < 2:
        return None
    a = partition.parts[0]
    if a >= 2 and partition.parts[1] == a and all(
        x == 1 for x in partition.parts[2:]
    ):
        return a, len(partition.parts) - 2
    return None


def reduction_shape(group: GroupFamily, partition: Partition, p: int) -> bool:
    """Necessary shape for unicity in Sp/SO: hooks and doubled hooks with
    the parity of the block size matching the form."""
    if group.family is Family.SL:
        raise InvalidQueryError("reduction shapes apply to Sp and SO only")
    validate(group, partition, p)
    hook = _hook(partition)
    dbl = _doubled_hook(partition)
    if group.family is Family.SP:
        if hook and hook[0] % 2 == 0 and hook[0] < p:
            return True
        return bool(dbl and dbl[0] % 2 == 1 and dbl[0] <= p)
    if hook and hook[0] % 2 == 1 and hook[0] <= p:
        return True
    return bool(dbl and dbl[0] % 2 == 0 and dbl[0] < p)


def _is_unique(group: GroupFamily, partition: Partition, p: int) -> bool:
    hook = _hook(partition)
    dbl = _doubled_hook(partition)
    if group.family is Family.SL:
        return bool(hook and hook[0] <= p and (hook[0] not in (3, p) or hook[1] == 0))
    if group.family is Family.SP:
        if hook and hook[0] % 2 == 0 and hook[0] < p:
            return True
        return bool(
            dbl
            and dbl[0] % 2 == 1
            and dbl[0] < p
            and (dbl[0] != 3 or dbl[1] == 0)
        )
    if hook and hook[0] % 2 == 1 and hook[0] <= p:
        return hook[0] != 3 or hook[1] == 0
    return bool(dbl and dbl[0] % 2 == 0 and dbl[0] < p)


def witnesses(
    group: GroupFamily, partition: Partition, p: int
) -> tuple[ModuleDescriptor, ModuleDescriptor]:
    """Two non-isomorphic module structures both producing this partition,
    for the four shapes that admit an explicit construction.

    Only meaningful when the verdict is NonUnique; raises
    NoWitnessRuleError for partitions outside the four shapes.
    """
    validate(group, partition, p)
    hook = _hook(partition)
    dbl = _doubled_hook(partition)

    def irr(*factors) -> Irr:
        return Irr(IrreducibleDescriptor(tuple(IrreducibleFactor(w, a) for w, a in factors)))

    if group.family is Family.SL and hook and hook[0] == p and hook[1] > 0:
        r = hook[1]
        first = ModuleDescriptor((irr((p - 1, 0)), Trivial(r)), p)
        rest = (Trivial(r - 1),) if r > 1 else ()
        second = ModuleDescriptor((Weyl(p),) + rest, p)
        return first, second
    if (
        group.family in (Family.SL, Family.SO)
        and hook
        and hook[0] == 3
        and hook[1] > 0
    ):
        r = hook[1]
        first = ModuleDescriptor((irr((2, 0)), Trivial(r)), p)
        rest = (Trivial(r - 1),) if r > 1 else ()
        second = ModuleDescriptor((irr((1, 0), (1, 1)),) + rest, p)
        return first, second
    if group.family is Family.SP and dbl and dbl[0] == p:
        r = dbl[1]
        rest = (Trivial(r),) if r else ()
        first = ModuleDescriptor(
            (Doubled(IrreducibleDescriptor((IrreducibleFactor(p - 1, 0),))),) + rest, p
        )
        second = ModuleDescriptor((irr((1, 0), (p - 1, 1)),) + rest, p)
        return first, second
    if group.family is Family.SP and dbl and dbl[0] == 3 and dbl[1] > 0:
        r = dbl[1]
        first = ModuleDescriptor(
            (Doubled(IrreducibleDescriptor((IrreducibleFactor(2, 0),))), Trivial(r)), p
        )
        rest = (Trivial(r - 2),) if r > 2 else ()
        second = ModuleDescriptor(
            (
                Doubled(
                    IrreducibleDescriptor(
                        (IrreducibleFactor(1, 0), IrreducibleFactor(1, 1))
                    )
                ),
            )
            + rest,
            p,
        )
        return first, second
    raise NoWitnessRuleError(
        f"no explicit witness construction for {group} with blocks ({partition})"
    )


def unicity_verdict(group: GroupFamily, partition: Partition, p: int) -> Verdict:
    """Are all A1-overgroups of an order-p unipotent with these Jordan
    blocks conjugate?"""
    if group.dimension < _MIN_DIM[group.family]:
        return Verdict(
            VerdictKind.OUT_OF_SCOPE,
            reason=f"small rank: {group} below the covered range",
        )
    try:
        validate(group, partition, p)
    except (BadPrimeError, DimensionMismatchError, ParityViolationError,
            IdentityElementError) as err:
        return Verdict(VerdictKind.OUT_OF_SCOPE, reason=str(err))
    if not is_order_p(partition, p):
        return Verdict(
            VerdictKind.OUT_OF_SCOPE,
            reason=f"largest block {partition.parts[0]} not in [2, p]: "
            "element order is not p",
        )
    if _is_unique(group, partition, p):
        return Verdict(VerdictKind.UNIQUE)
    try:
        pair = witnesses(group, partition, p)
    except NoWitnessRuleError:
        pair = None
    return Verdict(VerdictKind.NON_UNIQUE, witness_pair=pair)
