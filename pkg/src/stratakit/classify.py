"""Connected components of strata.

Complete answers exist for genus 0, genus 1, quadratic differentials with a
pole of order at least 2, and three cubic strata in genus 2. Everything else
gets a partial answer made only of facts that are known to hold: the
hyperelliptic component, loci of powers, and what is known about parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Collection, Sequence

from .cover import is_parity_type
from .errors import PreconditionViolation, RangeViolation, WrongGenus
from .parity import (
    Parity,
    even_k_parity,
    genus0_parity,
    genus1_parity,
    torsion_numbers,
)
from .strata_core import (
    Signature,
    Stratum,
    format_signature,
    power_decompositions,
    validate_stratum,
)

HYP = "Hyperelliptic"
AB_EVEN = "AbEven"
AB_ODD = "AbOdd"
AB = "Ab"
NONAB_NONHYP = "NonAbNonHyp"
NONHYP = "NonHyp"
ROTATION = "Rotation"
POWER = "PowerLocus"
CONNECTED = "Connected"  # the whole stratum, when it is irreducible

COMPLETE, PARTIAL, OUT_OF_SCOPE = "Complete", "Partial", "OutOfScope"


@dataclass(frozen=True)
class ComponentDescriptor:
    kind: str
    provenance: str
    d: int | None = None
    parity: Parity | None = None
    primitive: bool | None = None
    coincides_with: tuple[str, ...] = ()
    detail: str | None = None

    @property
    def label(self) -> str:
        return f"{self.kind}({self.d})" if self.d is not None else self.kind

    def to_json(self) -> dict:
        out: dict = {"kind": self.label}
        if self.kind == ROTATION:
            out["rotation"] = self.d
        if self.parity is not None:
            out["parity"] = self.parity.name
            out["conditional"] = self.parity.conditional
        if self.primitive is not None:
            out["primitive"] = self.primitive
        if self.coincides_with:
            out["coincides_with"] = list(self.coincides_with)
        if self.detail:
            out["detail"] = self.detail
        out["provenance"] = self.provenance
        return out


@dataclass(frozen=True)
class ClassificationResult:
    status: str
    components: tuple[ComponentDescriptor, ...] = ()
    notes: tuple[str, ...] = ()
    case: str | None = None

    @property
    def count(self) -> int:
        return len(self.components)

    def kinds(self) -> list[str]:
        return [c.label for c in self.components]

    def to_json(self) -> dict:
        out: dict = {
            "status": self.status,
            "components": [c.to_json() for c in self.components],
            "notes": list(self.notes),
        }
        if self.case is not None:
            out["case"] = self.case
        return out


# -- hyperelliptic components ---------------------------------------------


def _pair_splits(orders: tuple[int, ...], npairs: int):
    """Yield (pairs, rest) choosing npairs pairs of equal entries."""
    if npairs == 0:
        yield (), orders
        return
    seen = set()
    for i, a in enumerate(orders):
        if a in seen:
            continue
        j = orders.index(a, i + 1) if orders.count(a) > 1 else -1
        if j < 0:
            continue
        seen.add(a)
        rest = orders[:i] + orders[i + 1 : j] + orders[j + 1 :]
        for pairs, left in _pair_splits(rest, npairs - 1):
            if not pairs or a >= pairs[0]:
                yield (a,) + pairs, left


def _hyp_shape(k: int, g: int, w: tuple[int, ...], pairs: tuple[int, ...]) -> str | None:
    """Match one decomposition against the five hyperelliptic shapes."""
    if any(x % 2 for x in w):
        return None
    halves = [x // 2 for x in w]
    if len(w) == 2 and not pairs:
        m1, m2 = halves
        if m1 < 0 or m2 < 0 or gcd(m1, m2) % k:
            return "(2m1,2m2)"
    elif len(w) == 1 and len(pairs) == 1:
        (m,), (l,) = halves, pairs
        if m < 0 or l < 0 or gcd(m, l) % k:
            return "(2m,l,l)"
    elif not w and len(pairs) == 2:
        l1, l2 = pairs
        if l1 < 0 or l2 < 0 or gcd(l1, l2) % k:
            return "(l1,l1,l2,l2)"
    elif len(w) == 1 and not pairs and w[0] == k * (2 * g - 2):
        return "(k(2g-2))"
    elif not w and len(pairs) == 1 and pairs[0] == k * (g - 1):
        return "(k(g-1),k(g-1))"
    return None


def hyperelliptic_shapes(stratum: Stratum) -> list[str]:
    """Every hyperelliptic shape the signature fits, over all decompositions."""
    orders = stratum.orders
    found: list[str] = []
    if len(orders) > 4:
        return found
    for npairs in range(0, min(2, len(orders) // 2) + 1):
        for pairs, rest in _pair_splits(orders, npairs):
            if len(rest) + npairs > 2:
                continue
            shape = _hyp_shape(stratum.k, stratum.genus, rest, pairs)
            if shape and shape not in found:
                found.append(shape)
    return found


def hyperelliptic_component(stratum: Stratum) -> ComponentDescriptor | None:
    shapes = hyperelliptic_shapes(stratum)
    if not shapes:
        return None
    return ComponentDescriptor(
        HYP,
        provenance="hyperelliptic shape criterion",
        detail="shape " + " / ".join(shapes),
    )


# -- genus one --------------------------------------------------------------


def genus1_components(
    k: int, sig: Signature | Sequence[int], verified: Collection[int] | None = None
) -> list[ComponentDescriptor]:
    orders = sig.orders if isinstance(sig, Signature) else tuple(sig)
    if sum(orders) != 0:
        raise WrongGenus("genus-one strata have orders summing to 0")
    stratum = validate_stratum(k, orders)
    parity_type = is_parity_type(stratum)
    out = []
    for d in torsion_numbers(stratum.orders):
        primitive = gcd(k, d) == 1
        par = None
        if parity_type and k % 2:
            par = genus1_parity(k, [m // 2 for m in stratum.orders], d, verified)
        elif parity_type and primitive:
            par = even_k_parity(stratum)
        out.append(
            ComponentDescriptor(
                ROTATION,
                provenance="genus-one rotation numbers",
                d=d,
                parity=par,
                primitive=primitive,
            )
        )
    return out


def rotation_from_bubbling(k: int, t: int, base: Sequence[int]) -> int:
    """Rotation number after bubbling a genus-0 base with parameter t.

    ``base`` lists the tracked zero first (possibly 0) followed by the
    poles; the zero order after bubbling is base[0] + 2k.
    """
    n0, *poles = base
    if sum(base) != -2 * k:
        raise PreconditionViolation(f"base {tuple(base)} is not a genus-0 signature")
    n = n0 + 2 * k
    if not 1 <= t <= n - 1:
        raise RangeViolation(f"t = {t} outside [1, {n - 1}]")
    out = gcd(t, n)
    for p in poles:
        out = gcd(out, p)
    return out


# -- quadratic differentials with a metric pole -------------------------------


def _split(orders: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    zeros = tuple(sorted((m for m in orders if m > 0), reverse=True))
    ls = tuple(sorted((-m for m in orders if m < 0), reverse=True))
    return zeros, ls


def _one_or_two_equal(xs: tuple[int, ...]) -> bool:
    return len(xs) == 1 or (len(xs) == 2 and xs[0] == xs[1])


def _all_div(xs, m) -> bool:
    return all(x % m == 0 for x in xs)


_CASE_1B = {(8, -4), (4, 4, -4), (8, -2, -2), (4, 4, -2, -2)}


def _case_1b(Z, L) -> bool:
    return Z + tuple(-l for l in L) in _CASE_1B


def _case_1a(Z, L) -> bool:
    if _case_1b(Z, L):
        return False
    if not (_one_or_two_equal(Z) and _all_div(Z, 4)):
        return False
    return (_one_or_two_equal(L) and _all_div(L, 4)) or L == (2, 2)


def _case_2(Z, L) -> bool:
    if _one_or_two_equal(Z) and _one_or_two_equal(L):
        n, l = Z[0], L[0]
        if n % 2 == 0 and l % 2 == 0 and l > 2 and not (n % 4 == 0 and l % 4 == 0):
            return True
    return len(Z) == 2 and Z[0] == Z[1] and Z[0] % 4 == 2 and L == (2, 2)


def _case_3(Z, L) -> bool:
    if not _all_div(Z, 4):
        return False
    r, s = len(Z), len(L)
    if _all_div(L, 4):
        if r >= 3 or s >= 3:
            return True
        if r == 2 and s == 2:
            return Z[0] != Z[1] or L[0] != L[1]
        if r == 1 and s == 2:
            return L[0] != L[1]
        if r == 2 and s == 1:
            return Z[0] != Z[1]
        return False
    if L == (2, 2):
        return r >= 3 or (r == 2 and Z[0] != Z[1])
    return False


def _case_4(Z, L) -> bool:
    if len(Z) == 1 and Z[0] % 2 == 0:
        if len(L) == 2 and L[0] == L[1] and L[0] % 2 == 1:
            return True
        if L == (2,):
            return True
    if len(Z) == 2 and Z[0] == Z[1]:
        n = Z[0]
        if len(L) == 1 and L[0] % 2 == 0 and n % 2 == 1:
            return True
        if len(L) == 2 and L[0] == L[1] and not (n % 2 == 0 and L[0] % 2 == 0):
            return True
        if L == (2,) and n % 2 == 0:
            return True
    return False


def _case_5(Z, L) -> bool:
    if not (_all_div(Z, 2) and _all_div(L, 2)):
        return False
    r, s = len(Z), len(L)
    if L == (2, 2):
        # The polar part (-2,-2) has its own line; (2n,2n,-2,-2) with n odd
        # is claimed by case (2).
        if r == 2 and Z[0] == Z[1]:
            return False
        return any((z // 2) % 2 for z in Z)
    not_all_even = any((x // 2) % 2 for x in Z + L)
    if not not_all_even:
        return False
    if r >= 3 or s >= 3:
        return L != (2,)
    if r == 2 and s == 2:
        return Z[0] != Z[1] or L[0] != L[1]
    if r == 1 and s == 2:
        return L[0] != L[1]
    if r == 2 and s == 1:
        return Z[0] != Z[1] and L[0] > 2
    return False


def _case_6(Z, L) -> bool:
    if _case_4(Z, L):
        return False
    has_odd = any(x % 2 for x in Z + L)
    return has_odd or (L == (2,) and _all_div(Z, 2))


QUADRATIC_CASES: tuple[tuple[str, Callable], ...] = (
    ("1b", _case_1b),
    ("1a", _case_1a),
    ("2", _case_2),
    ("3", _case_3),
    ("4", _case_4),
    ("5", _case_5),
    ("6", _case_6),
)


def matching_quadratic_cases(orders: Sequence[int]) -> list[str]:
    Z, L = _split(orders)
    return [name for name, pred in QUADRATIC_CASES if pred(Z, L)]


def _quadratic_components(case: str, orders: tuple[int, ...]) -> list[ComponentDescriptor]:
    prov = f"quadratic strata with a metric pole, case ({case})"

    def c(kind, **kw):
        return ComponentDescriptor(kind, provenance=prov, **kw)

    if case == "1a":
        return [c(HYP), c(AB_EVEN), c(AB_ODD), c(NONAB_NONHYP)]
    if case == "1b":
        if orders in {(8, -4), (4, 4, -4)}:
            return [c(HYP, coincides_with=(AB_ODD,)), c(AB_EVEN), c(NONAB_NONHYP)]
        return [c(HYP, coincides_with=(AB_EVEN,)), c(AB_ODD), c(NONAB_NONHYP)]
    if case == "2":
        return [c(HYP), c(AB), c(NONAB_NONHYP)]
    if case == "3":
        return [c(AB_EVEN), c(AB_ODD), c(NONAB_NONHYP)]
    if case == "4":
        return [c(HYP), c(NONHYP)]
    if case == "5":
        return [c(AB), c(NONAB_NONHYP)]
    return [c(NONAB_NONHYP)]


def classify_quadratic(stratum: Stratum) -> ClassificationResult:
    """Components of a quadratic stratum of genus >= 2 with a metric pole."""
    if stratum.k != 2 or stratum.genus < 2 or not stratum.has_metric_pole():
        raise PreconditionViolation(
            "needs k = 2, genus >= 2 and a pole of order at least 2"
        )
    Z, L = _split(stratum.orders)
    for name, pred in QUADRATIC_CASES:
        if pred(Z, L):
            comps = _quadratic_components(name, stratum.orders)
            return ClassificationResult(COMPLETE, tuple(comps), case=name)
    raise AssertionError(f"no case matched {stratum}")  # pragma: no cover


# -- cubic genus two ------------------------------------------------------


CUBIC_SPECIAL = {(6,), (4, 2), (2, 2, 2)}


def classify_cubic_g2(stratum: Stratum) -> ClassificationResult:
    if stratum.k != 3 or stratum.genus != 2 or stratum.orders not in CUBIC_SPECIAL:
        raise PreconditionViolation("needs k = 3, genus 2 and orders (6), (4,2) or (2,2,2)")
    prov = "holomorphic cubic strata in genus two"
    even, odd = Parity(0), Parity(1)
    if stratum.orders == (6,):
        comps = (
            ComponentDescriptor(
                POWER,
                provenance=prov,
                d=3,
                primitive=False,
                coincides_with=(HYP,),
                detail="cubes of abelian differentials with a double zero",
            ),
            ComponentDescriptor(NONHYP, provenance=prov, parity=even, primitive=True),
        )
    elif stratum.orders == (4, 2):
        comps = (
            ComponentDescriptor(HYP, provenance=prov, parity=odd, primitive=True),
            ComponentDescriptor(NONHYP, provenance=prov, parity=even, primitive=True),
        )
    else:
        comps = (
            ComponentDescriptor(HYP, provenance=prov, parity=even, primitive=True),
            ComponentDescriptor(NONHYP, provenance=prov, parity=odd, primitive=True),
        )
    return ClassificationResult(COMPLETE, comps)


# -- dispatch -------------------------------------------------------------


def classify(stratum: Stratum, verified: Collection[int] | None = None) -> ClassificationResult:
    k, g = stratum.k, stratum.genus
    if g == 0:
        par = genus0_parity(stratum, verified) if is_parity_type(stratum) else None
        comp = ComponentDescriptor(
            CONNECTED, provenance="genus-zero strata are irreducible", parity=par
        )
        return ClassificationResult(COMPLETE, (comp,))
    if g == 1:
        return ClassificationResult(COMPLETE, tuple(genus1_components(k, stratum.signature, verified)))
    if k == 1:
        return ClassificationResult(
            OUT_OF_SCOPE,
            notes=("abelian differentials are classified in the prior literature",),
        )
    if k == 2:
        if stratum.has_metric_pole():
            return classify_quadratic(stratum)
        return ClassificationResult(
            OUT_OF_SCOPE,
            notes=(
                "quadratic strata without a pole of order >= 2 are classified "
                "in the prior literature",
            ),
        )
    if k == 3 and g == 2 and stratum.orders in CUBIC_SPECIAL:
        return classify_cubic_g2(stratum)
    return _partial(stratum)


def _partial(stratum: Stratum) -> ClassificationResult:
    comps = []
    notes = ["the full list of components of this stratum is not known"]
    hyp = hyperelliptic_component(stratum)
    if hyp is not None:
        comps.append(hyp)
    for d in power_decompositions(stratum):
        comps.append(
            ComponentDescriptor(
                POWER,
                provenance="powers of lower-order differentials",
                d=d,
                primitive=False,
                detail=f"{d}-th powers of {stratum.k // d}-differentials, "
                "a union of components",
            )
        )
    if is_parity_type(stratum):
        if stratum.k % 2 == 0:
            par = even_k_parity(stratum)
            notes.append(f"every primitive component has {par.name} parity")
        else:
            notes.append("primitive components of both parities occur")
    return ClassificationResult(PARTIAL, tuple(comps), tuple(notes))


# -- merging to minimal strata ----------------------------------------------


@dataclass(frozen=True)
class MergeResult:
    source: Stratum
    merged: Stratum
    bound: int
    mode: str  # "zeros" or "poles"

    def to_json(self) -> dict:
        return {
            "source": format_signature(self.source.orders),
            "merged": format_signature(self.merged.orders),
            "mode": self.mode,
            "bound": self.bound,
        }


def merge_to_minimal(stratum: Stratum, b: int = 0, poles: bool = False) -> MergeResult:
    """Collapse all zeros (or all metric poles) plus b simple poles into one.

    The number of components of the source stratum is at most that of the
    merged one, which is reported as ``bound``.
    """
    if stratum.k != 2 or not stratum.has_metric_pole():
        raise PreconditionViolation("merging needs k = 2 and a pole of order at least 2")
    simple = [m for m in stratum.orders if m == -1]
    if not 0 <= b <= len(simple):
        raise PreconditionViolation(f"b = {b} but only {len(simple)} simple poles")
    if poles:
        merged_pole = sum(m for m in stratum.orders if m <= -2) - b
        keep = [m for m in stratum.orders if m > 0] + simple[b:]
        orders = keep + [merged_pole]
    else:
        merged_zero = sum(m for m in stratum.orders if m > 0) - b
        keep = [m for m in stratum.orders if m <= -2] + simple[b:]
        orders = [merged_zero] + keep
    merged = validate_stratum(2, orders)
    return MergeResult(stratum, merged, classify(merged).count, "poles" if poles else "zeros")
