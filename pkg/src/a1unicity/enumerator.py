"""Brute-force enumeration of completely reducible module structures.

Given a target Jordan type on the natural module, this walks every
multiset of summands built from twisted tensor-product irreducibles,
hyperbolic doublings and trivial summands, keeps the ones matching the
target type and the ambient form, and reduces the survivors to canonical
representatives under the equivalence "shift every Frobenius twist by a
constant, up to module isomorphism".  The number of surviving classes is
an independent re-derivation of the classical unicity verdicts: a
partition meets a unique class of A1-overgroups exactly when one
canonical structure survives and raising the twist bound adds nothing.

Canonical form details:

  * the minimum twist over all factors of all nontrivial summands is 0;
  * m isomorphic copies of an irreducible M are stored as floor(m/2)
    hyperbolic pairs Doubled(M) plus (m mod 2) plain summands, which is
    both the canonical shape and exactly what form-admissibility needs
    (a lone M must carry the ambient form itself; pairs always pair up
    hyperbolically);
  * all trivial summands merge into one Trivial(r).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidQueryError, NotCompletelyReducibleError
from .ffmatrix import is_prime
from .jordan import JordanType, tensor_multi
from .sl2modules import (
    Doubled,
    FormType,
    Irr,
    IrreducibleDescriptor,
    IrreducibleFactor,
    ModuleDescriptor,
    Trivial,
    format_descriptor,
)


@dataclass(frozen=True)
class EmbeddingClass:
    """One conjugacy class of completely reducible embeddings, named by
    its canonical module descriptor."""

    descriptor: ModuleDescriptor
    canonical: bool = True

    @property
    def max_twist(self) -> int:
        twists = [
            f.twist
            for s in self.descriptor.summands
            if isinstance(s, (Irr, Doubled))
            for f in s.module.factors
        ]
        return max(twists, default=0)

    def sort_key(self):
        dims = []
        weights = []
        twists = []
        for s in self.descriptor.summands:
            if isinstance(s, (Irr, Doubled)):
                dims.append(-s.module.dimension * (2 if isinstance(s, Doubled) else 1))
                weights.extend(f.weight for f in s.module.factors)
                twists.extend(f.twist for f in s.module.factors)
            else:
                dims.append(-s.multiplicity)
        return (tuple(dims), tuple(weights), tuple(twists),
                format_descriptor(self.descriptor))

    def __str__(self) -> str:
        return format_descriptor(self.descriptor)


@dataclass(frozen=True)
class EnumerationResult:
    classes: tuple[EmbeddingClass, ...]
    count: int
    max_twist: int
    growth_flag: bool


def canonicalize(d: ModuleDescriptor) -> EmbeddingClass:
    """Canonical representative of d under global twist shift and module
    isomorphism."""
    if not d.is_completely_reducible:
        raise NotCompletelyReducibleError(
            "Weyl/tilting summands have no completely reducible canonical form"
        )
    multiplicities: Counter[IrreducibleDescriptor] = Counter()
    trivial = 0
    for s in d.summands:
        if isinstance(s, Irr):
            multiplicities[s.module] += 1
        elif isinstance(s, Doubled):
            multiplicities[s.module] += 2
        else:
            trivial += s.multiplicity
    if multiplicities:
        shift = min(m.min_twist for m in multiplicities)
        if shift:
            multiplicities = Counter(
                {m.shifted(-shift): k for m, k in multiplicities.items()}
            )
    summands: list = []
    for module, mult in multiplicities.items():
        summands.extend([Doubled(module)] * (mult // 2))
        if mult % 2:
            summands.append(Irr(module))
    if trivial:
        summands.append(Trivial(trivial))
    return EmbeddingClass(ModuleDescriptor(tuple(summands), d.p))


@lru_cache(maxsize=None)
def _atom_pool(p: int, max_twist: int, max_dim: int):
    """All twisted tensor-product irreducibles of dimension <= max_dim
    with twists drawn from 0..max_twist, with their Jordan types."""
    pool = []
    max_factors = min(max_twist + 1, max_dim.bit_length())

    def grow(factors, remaining_dim):
        start = factors[-1].twist + 1 if factors else 0
        for twist in range(start, max_twist + 1):
            for weight in range(1, p):
                if (weight + 1) > remaining_dim:
                    break
                extended = factors + [IrreducibleFactor(weight, twist)]
                pool.append(IrreducibleDescriptor(tuple(extended)))
                if len(extended) < max_factors:
                    grow(extended, remaining_dim // (weight + 1))

    grow([], max_dim)
    out = []
    for desc in pool:
        blocks = tensor_multi([f.weight + 1 for f in desc.factors], p).blocks
        out.append((desc, blocks))
    out.sort(key=lambda item: (item[0].sort_key(), item[1]))
    return tuple(out)


def jordan_menu(
    form: FormType, p: int, max_dim: int
) -> list[tuple[IrreducibleDescriptor, JordanType]]:
    """Irreducibles of the given form type with dimension <= max_dim.

    One entry per weight multiset: reassigning which factor carries which
    twist changes the isomorphism class but neither the dimension, the
    Jordan type, nor the form, so such families are collapsed to the
    representative with weights ascending at twists 0, 1, 2, ...  The
    trivial module is excluded (it is the Trivial summand kind, not an
    Irr).
    """
    if max_dim < 1:
        raise InvalidQueryError("max_dim must be >= 1")
    seen = set()
    out = []

    def grow(weights, dim):
        for w in range(weights[-1] if weights else 1, p):
            d = dim * (w + 1)
            if d > max_dim:
                break
            grow(weights + [w], d)
            key = tuple(weights + [w])
            if key in seen:
                continue
            seen.add(key)
            desc = IrreducibleDescriptor(
                tuple(IrreducibleFactor(w_, i) for i, w_ in enumerate(key))
            )
            if form is not FormType.NONE and desc.form_type() is not form:
                continue
            out.append((desc, desc.jordan_type(p)))

    grow([], 1)
    out.sort(key=lambda item: item[0].sort_key())
    return out


def _admissible(
    multiplicities: Counter, trivial: int, form: FormType, distinct_irr: bool
) -> bool:
    if distinct_irr:
        # pairwise inequivalent non-degenerate irreducible summands: each
        # must carry the ambient form itself, at most one trivial line
        if trivial > 1:
            return False
        return all(
            m == 1 and (form is FormType.NONE or module.form_type() is form)
            for module, m in multiplicities.items()
        )
    if form is FormType.NONE:
        return True
    for module, m in multiplicities.items():
        if m % 2 == 1 and module.form_type() is not form:
            return False
    if form is FormType.SYMPLECTIC and trivial % 2 == 1:
        return False
    return True


def enumerate_embeddings(
    form: FormType,
    dim: int,
    partition,
    p: int,
    max_twist: int = 3,
    distinct_irr: bool = False,
) -> EnumerationResult:
    """All completely reducible module structures with the given Jordan
    type and form, up to twist-shift equivalence.

    growth_flag reports whether the count at max_twist strictly exceeds
    the count at max_twist - 1; a growing family means infinitely many
    classes in the limit (one per twist), hence non-uniqueness.

    With distinct_irr=True the search is restricted to pairwise
    inequivalent irreducible summands carrying the ambient form, no
    hyperbolic doubling and at most one trivial line (the decomposition
    hypothesis for irreducible orthogonal sums).
    """
    blocks = tuple(partition.parts) if hasattr(partition, "parts") else tuple(partition)
    if not is_prime(p):
        raise InvalidQueryError(f"{p} is not prime")
    if form is not FormType.NONE and p == 2:
        raise InvalidQueryError("forms need odd characteristic")
    if form is FormType.EITHER:
        raise InvalidQueryError("enumerate by a concrete form, or FormType.NONE")
    if sum(blocks) != dim:
        raise InvalidQueryError(f"partition sums to {sum(blocks)}, dim is {dim}")
    if any(b > p for b in blocks):
        raise InvalidQueryError("blocks above p never have order p")
    if max_twist < 1:
        raise InvalidQueryError("max_twist must be >= 1")

    target = Counter(blocks)
    atoms = [
        (desc, Counter(bl), sum(bl))
        for desc, bl in _atom_pool(p, max_twist, dim)
        if not (Counter(bl) - target)
    ]
    found: dict = {}

    def emit(chosen: list[IrreducibleDescriptor], ones: int):
        mult = Counter(chosen)
        if mult:
            shift = min(m.min_twist for m in mult)
            if shift:
                mult = Counter({m.shifted(-shift): k for m, k in mult.items()})
        if not _admissible(mult, ones, form, distinct_irr):
            return
        summands: list = []
        for module, m in sorted(mult.items(), key=lambda kv: kv[0].sort_key()):
            if distinct_irr:
                summands.extend([Irr(module)] * m)
            else:
                summands.extend([Doubled(module)] * (m // 2))
                if m % 2:
                    summands.append(Irr(module))
        if ones:
            summands.append(Trivial(ones))
        if not summands:
            return
        cls = EmbeddingClass(ModuleDescriptor(tuple(summands), p))
        found[cls.descriptor] = cls

    def dfs(start: int, remaining: Counter, rem_dim: int, chosen: list):
        nontrivial_left = any(size != 1 and count for size, count in remaining.items())
        if not nontrivial_left:
            emit(chosen, remaining[1])
        for idx in range(start, len(atoms)):
            desc, bl, d = atoms[idx]
            if d > rem_dim:
                continue
            if bl - remaining:
                continue
            chosen.append(desc)
            dfs(
                idx + 1 if distinct_irr else idx,
                remaining - bl,
                rem_dim - d,
                chosen,
            )
            chosen.pop()

    dfs(0, target, dim, [])
    classes = tuple(sorted(found.values(), key=lambda c: c.sort_key()))
    growth = any(c.max_twist == max_twist for c in classes)
    return EnumerationResult(classes, len(classes), max_twist, growth)


def dn_partition_list(n: int, p: int, max_twist: int = 3) -> set[tuple[int, ...]]:
    """Partitions of 2n realizable as a sum of pairwise inequivalent
    orthogonal irreducibles (plus at most one trivial line): the Jordan
    types available to suitably decomposed A1-subgroups of SO(2n)."""
    out = set()
    partitions = partitions_bounded(2 * n, p)
    for blocks in partitions:
        result = enumerate_embeddings(
            FormType.ORTHOGONAL, 2 * n, blocks, p, max_twist, distinct_irr=True
        )
        if any(
            not all(isinstance(s, Trivial) for s in c.descriptor.summands)
            for c in result.classes
        ):
            out.add(blocks)
    return out


def partitions_bounded(total: int, max_part: int):
    """All partitions of total with parts <= max_part, descending."""
    results = []

    def rec(remaining, cap, acc):
        if remaining == 0:
            results.append(tuple(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(total, max_part, [])
    return results
