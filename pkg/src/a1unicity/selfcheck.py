"""Cross-validation suites runnable from the command line.

Each suite re-derives a family of results two independent ways (closed
form vs. matrix oracle, classifier vs. enumeration, table vs. frozen
expectations) and reports pass/fail.  `a1u selfcheck` runs them all.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from . import atlas
from .classical import Partition, SL, SO, Sp, VerdictKind, unicity_verdict, witnesses
from .enumerator import (
    partitions_bounded,
    dn_partition_list,
    enumerate_embeddings,
    jordan_menu,
)
from .errors import NoWitnessRuleError
from .ffmatrix import PrimeField, sym_power, unipotent_jordan_block
from .jordan import (
    jordan_type_of_unipotent,
    summand_profile,
    tensor_multi,
    tensor_pair,
    tensor_pair_oracle,
)
from .sl2modules import (
    FormType,
    ModuleDescriptor,
    Tilting,
    admits_form,
    dimension,
    jordan_type,
    realize,
)

# Jordan types of the irreducible orthogonal menu, frozen by hand;
# dimension -> (weights, blocks).  The p = 5 menu omits the last two rows.
ORTHOGONAL_MENU_EXPECTED = {
    5: {
        ((2,), (3,)),
        ((1, 1), (3, 1)),
        ((4,), (5,)),
        ((1, 3), (5, 3)),
        ((2, 2), (5, 3, 1)),
        ((1, 1, 2), (5, 3, 3, 1)),
    },
    7: {
        ((2,), (3,)),
        ((1, 1), (3, 1)),
        ((4,), (5,)),
        ((6,), (7,)),
        ((1, 3), (5, 3)),
        ((2, 2), (5, 3, 1)),
        ((1, 1, 2), (5, 3, 3, 1)),
        ((1, 5), (7, 5)),
    },
}

# Partition menus for sums of pairwise inequivalent orthogonal
# irreducibles on the natural module of SO(2n), frozen by hand.
DN_EXPECTED = {
    (4, 5): {(5, 3), (3, 3, 1, 1)},
    (4, 7): {(7, 1), (5, 3), (3, 3, 1, 1)},
    (5, 5): {(5, 5), (5, 3, 1, 1), (3, 3, 3, 1)},
    (5, 7): {(7, 3), (5, 5), (5, 3, 1, 1), (3, 3, 3, 1)},
    (6, 5): {(5, 3, 3, 1), (3, 3, 3, 1, 1, 1), (3, 3, 3, 3)},
    (6, 7): {(7, 5), (7, 3, 1, 1), (5, 3, 3, 1), (3, 3, 3, 1, 1, 1), (3, 3, 3, 3)},
    (7, 5): {(5, 5, 3, 1), (5, 3, 3, 3), (5, 3, 3, 1, 1, 1), (3, 3, 3, 3, 1, 1)},
    (7, 7): {
        (7, 7),
        (7, 3, 3, 1),
        (5, 5, 3, 1),
        (5, 3, 3, 3),
        (5, 3, 3, 1, 1, 1),
        (3, 3, 3, 3, 1, 1),
    },
}

PROP_LISTS = {
    ("G2", 13): {"A1", "Ã1", "G2"},
    ("F4", 13): {"A1", "Ã2", "B2", "B3", "C3", "F4(a1)", "F4"},
    ("E6", 13): {"A1", "A3", "D4", "A5", "D5", "E6(a1)", "E6"},
    ("E7", 13): {
        "A1", "A3", "D4", "(A5)''", "(A5)'", "D5", "A6", "D6",
        "E6(a1)", "E6", "E7(a1)", "E7",
    },
    ("E8", 13): {
        "A1", "A3", "D4", "A5", "D5", "E6(a1)", "D6", "E6", "A7", "D7",
        "E7(a1)", "E7", "E8(a4)", "E8(a2)", "E8(a1)", "E8",
    },
}


def check_tensor_oracle(quick: bool = False):
    """Closed-form tensor decomposition equals the matrix oracle."""
    primes = (2, 3, 5, 7) if quick else (2, 3, 5, 7, 11, 13)
    for p in primes:
        for m in range(1, p + 1):
            for n in range(m, p + 1):
                fast = tensor_pair(m, n, p)
                slow = tensor_pair_oracle(m, n, p)
                if fast != slow:
                    return False, f"J({m})xJ({n}) mod {p}: {fast.blocks} vs {slow.blocks}"
                if fast.dimension != m * n:
                    return False, f"dimension drift at J({m})xJ({n}) mod {p}"
                if tensor_pair(n, m, p) != fast:
                    return False, f"asymmetry at J({m})xJ({n}) mod {p}"
    return True, f"exhaustive over p in {primes}"


def check_pair_profiles():
    """Two-factor products have >= 3 nontrivial blocks or two of distinct
    sizes, apart from the (2,2) and (2,p) exceptions."""
    for p in (3, 5, 7, 11, 13):
        for m in range(2, p + 1):
            for n in range(m, p + 1):
                t = tensor_pair(m, n, p)
                count, sizes = summand_profile(t)
                if (m, n) == (2, 2):
                    want = (3, 1) if p != 2 else (2, 2)
                    if t.blocks != want:
                        return False, f"J(2)xJ(2) mod {p} gave {t.blocks}"
                    continue
                if (m, n) == (2, p):
                    if t.blocks != (p, p):
                        return False, f"J(2)xJ({p}) mod {p} gave {t.blocks}"
                    continue
                if not (count >= 3 or (count == 2 and len(sizes) == 2)):
                    return False, f"profile failure at J({m})xJ({n}) mod {p}"
    return True, "all pairs, p in (3, 5, 7, 11, 13)"


def check_multi_profiles():
    """Products of >= 3 blocks always have >= 3 nontrivial summands."""
    for p in (3, 5, 7):
        for t_len in (3, 4):
            for sizes in combinations_with_replacement(range(2, p + 1), t_len):
                count, _ = summand_profile(tensor_multi(sizes, p))
                if count < 3:
                    return False, f"{sizes} mod {p}"
    known = {2: (2, 2, 2, 2), 3: (3, 3, 2), 5: (4, 2, 2)}
    for p, want in known.items():
        got = tensor_multi([2, 2, 2], p).blocks
        if got != want:
            return False, f"J(2)^x3 mod {p}: {got}"
    return True, "t in (3, 4), p in (3, 5, 7)"


def check_module_facts():
    """Symmetric-power realizations and tilting types match the stated
    block structures."""
    for p in (5, 7):
        field = PrimeField(p)
        u = unipotent_jordan_block(field, 2)
        for c in range(0, 2 * p - 1):
            got = jordan_type_of_unipotent(sym_power(u, c, field), field).blocks
            want = (c + 1,) if c <= p - 1 else tuple(sorted((p, c - p + 1), reverse=True))
            if got != want:
                return False, f"Sym^{c} mod {p}: {got} vs {want}"
        for c in range(p, 2 * p - 1):
            d = ModuleDescriptor((Tilting(c),), p)
            if jordan_type(d).blocks != (p, p) or dimension(d) != 2 * p:
                return False, f"T({c}) mod {p}"
    return True, "p in (5, 7), c <= 2p-2"


def check_orthogonal_menu():
    """The orthogonal irreducible menu matches the frozen table."""
    for p, expected in ORTHOGONAL_MENU_EXPECTED.items():
        menu = jordan_menu(FormType.ORTHOGONAL, p, 14)
        got = {
            (tuple(f.weight for f in desc.factors), jt.blocks) for desc, jt in menu
        }
        if got != expected:
            return False, f"menu mismatch at p = {p}: {sorted(got)}"
    return True, "p in (5, 7), dim <= 14"


def check_dn_lists():
    """Distinct-irreducible orthogonal sums on SO(2n) reproduce the frozen
    partition menus."""
    for (n, p), expected in DN_EXPECTED.items():
        got = dn_partition_list(n, p)
        if got != expected:
            return False, f"D{n}, p = {p}: {sorted(got)}"
    return True, "n in 4..7, p in (5, 7)"


def _validish_partitions(group, p):
    out = []
    for blocks in partitions_bounded(group.dimension, p - 1):
        if blocks[0] < 2:
            continue
        part = Partition(blocks)
        try:
            from .classical import validate

            validate(group, part, p)
        except Exception:
            continue
        out.append(part)
    return out


def check_classifier_vs_enumeration(quick: bool = False):
    """Classifier verdict Unique iff exactly one stable enumeration class,
    for every valid partition with all blocks below p."""
    if quick:
        ranges = {"SL": range(2, 7), "Sp": range(4, 9, 2), "SO": range(7, 10)}
    else:
        ranges = {"SL": range(2, 9), "Sp": range(4, 13, 2), "SO": range(7, 13)}
    cases = 0
    for p in (5, 7):
        for family, dims, form in (
            ("SL", ranges["SL"], FormType.NONE),
            ("Sp", ranges["Sp"], FormType.SYMPLECTIC),
            ("SO", ranges["SO"], FormType.ORTHOGONAL),
        ):
            make = {"SL": SL, "Sp": Sp, "SO": SO}[family]
            for dim in dims:
                g = make(dim)
                for part in _validish_partitions(g, p):
                    res = enumerate_embeddings(form, dim, part, p, 3)
                    unique = res.count == 1 and not res.growth_flag
                    verdict = unicity_verdict(g, part, p)
                    if (verdict.kind is VerdictKind.UNIQUE) != unique:
                        return False, (
                            f"{g} blocks ({part}) p = {p}: classifier "
                            f"{verdict.kind.value}, enumeration count {res.count} "
                            f"growth {res.growth_flag}"
                        )
                    cases += 1
    return True, f"{cases} partition queries agree"


def check_witness_soundness():
    """Witness pairs share dimension and Jordan type, respect the ambient
    form and survive the matrix oracle."""
    field_form = {"SL": FormType.NONE, "Sp": FormType.SYMPLECTIC, "SO": FormType.ORTHOGONAL}
    cases = []
    for p in (5, 7):
        for r in (1, 2, 3, 4):
            cases.append((SL(p + r), Partition((p,) + (1,) * r), p))
            cases.append((SL(3 + r), Partition((3,) + (1,) * r), p))
            if 3 + r >= 7:
                cases.append((SO(3 + r), Partition((3,) + (1,) * r), p))
        for r in (0, 2, 4):
            cases.append((Sp(2 * p + r), Partition((p, p) + (1,) * r), p))
            if r:
                cases.append((Sp(6 + r), Partition((3, 3) + (1,) * r), p))
    checked = 0
    for g, part, p in cases:
        verdict = unicity_verdict(g, part, p)
        if verdict.kind is not VerdictKind.NON_UNIQUE:
            return False, f"{g} ({part}) p = {p} is {verdict.kind.value}"
        try:
            first, second = witnesses(g, part, p)
        except NoWitnessRuleError:
            return False, f"missing witnesses for {g} ({part}) p = {p}"
        if first == second:
            return False, f"degenerate witness pair for {g} ({part})"
        form = field_form[g.family.value]
        for d in (first, second):
            if dimension(d) != g.dimension:
                return False, f"dimension off for {g} ({part})"
            if jordan_type(d).blocks != part.parts:
                return False, f"type off for {g} ({part})"
            if not admits_form(d, form):
                return False, f"form violation for {g} ({part})"
            field = PrimeField(p)
            if jordan_type_of_unipotent(realize(d), field).blocks != part.parts:
                return False, f"oracle mismatch for {g} ({part})"
        checked += 1
    return True, f"{checked} witness pairs verified"


def check_atlas():
    """Atlas agrees with the stated tables, lists and monotonicity."""
    for (gname, p), expected in PROP_LISTS.items():
        got = atlas.list_unique(atlas.group(gname), p)
        if got != expected:
            return False, f"{gname} at p = {p}: {sorted(got)}"
    rows = [
        ("G2", 5, "Ã1"), ("F4", 5, "Ã2"), ("F4", 5, "B2"), ("F4", 5, "B3"),
        ("F4", 5, "C3"), ("F4", 5, "F4(a1)"), ("E6", 7, "A5"), ("E6", 7, "D5"),
        ("E6", 7, "E6(a1)"), ("E7", 7, "(A5)''"), ("E7", 7, "(A5)'"),
        ("E7", 11, "A6"), ("E7", 11, "E7(a1)"), ("E8", 7, "A5"),
        ("E8", 11, "E8(a1)"), ("E8", 11, "D7"),
    ]
    for gname, p, label in rows:
        v = atlas.verdict(atlas.group(gname), p, label)
        if v.kind is not atlas.AtlasVerdictKind.UNIQUE:
            return False, f"{gname} p = {p} {label}: {v.kind.value}"
    for gname, p in (("E6", 5), ("E7", 5), ("E7", 7), ("E8", 7)):
        g = atlas.group(gname)
        for label in atlas.recorded_nonunique(g, p):
            v = atlas.verdict(g, p, label)
            if v.kind is not atlas.AtlasVerdictKind.NON_UNIQUE:
                return False, f"{gname} p = {p} {label}: {v.kind.value}"
    for gname in ("G2", "F4", "E6", "E7", "E8"):
        g = atlas.group(gname)
        goods = [p for p in (5, 7, 11, 13) if g.is_good(p)]
        for small, large in zip(goods, goods[1:]):
            if not atlas.list_unique(g, small) <= atlas.list_unique(g, large):
                return False, f"nesting fails for {gname}: {small} vs {large}"
    return True, "tables, counterexamples and nesting"


SUITES = [
    ("tensor-oracle-equivalence", check_tensor_oracle, True),
    ("two-factor-profiles", check_pair_profiles, False),
    ("multi-factor-profiles", check_multi_profiles, False),
    ("module-facts", check_module_facts, False),
    ("orthogonal-menu", check_orthogonal_menu, False),
    ("distinct-sum-partition-menus", check_dn_lists, False),
    ("classifier-vs-enumeration", check_classifier_vs_enumeration, True),
    ("witness-soundness", check_witness_soundness, False),
    ("exceptional-atlas", check_atlas, False),
]


def run_selfcheck(quick: bool = False, emit=print) -> bool:
    ok_all = True
    for name, fn, takes_quick in SUITES:
        ok, detail = fn(quick) if takes_quick else fn()
        ok_all &= ok
        emit(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
    emit(("all checks passed" if ok_all else "CHECKS FAILED"))
    return ok_all
