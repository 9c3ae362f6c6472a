"""Bubbling handles and breaking zeros, as an algebra on parameter sequences.

A sequence ``C + s1 + ... + sg`` starts from a base component with a tracked
metric zero of order n0. Step i (0-based) bubbles a handle at the tracked
zero, whose order is then n0 + 2k*i, and parameter s_i must lie in
[1, n0 + 2k*i + 2k - 1].

``normalize`` searches the equivalence class generated by the rewrite rules
and returns the least sequence found under the order "sorted-descending
vector first, then the sequence itself" (so nondecreasing forms win ties).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import NonRealizable, PreconditionViolation, RangeViolation, RuleInapplicable
from .strata_core import format_signature, parse_orders

RULES = ("reflect", "commute", "shift", "slide")


@dataclass(frozen=True)
class OplusState:
    k: int
    genus: int
    zero_order: int
    other_orders: tuple[int, ...] = ()
    base_label: str = ""
    holomorphic_power: bool = False
    primitive: bool | None = None

    def __post_init__(self):
        if self.k < 1:
            raise PreconditionViolation("k must be positive")
        if self.zero_order <= -self.k:
            raise PreconditionViolation(
                f"tracked zero of order {self.zero_order} is not a metric zero (needs > {-self.k})"
            )
        if any(m == 0 for m in self.other_orders):
            raise PreconditionViolation("other orders must be nonzero")
        total = self.zero_order + sum(self.other_orders)
        if total != self.k * (2 * self.genus - 2):
            raise PreconditionViolation(
                f"orders sum to {total}, expected {self.k * (2 * self.genus - 2)}"
            )
        if self.holomorphic_power:
            orders = (self.zero_order,) + self.other_orders
            if any(m < 0 or m % self.k for m in orders):
                raise PreconditionViolation(
                    "a k-th power of a holomorphic differential has orders in kN"
                )
        object.__setattr__(self, "other_orders", tuple(sorted(self.other_orders, reverse=True)))

    @property
    def max_param(self) -> int:
        return self.zero_order + 2 * self.k - 1

    def only_poles_besides_zero(self) -> bool:
        return bool(self.other_orders) and all(m < 0 for m in self.other_orders)

    def label(self) -> str:
        return self.base_label or format_signature((self.zero_order,) + self.other_orders)


def make_state(
    k: int,
    orders: Sequence[int],
    *,
    holomorphic_power: bool = False,
    primitive: bool | None = None,
    label: str = "",
) -> OplusState:
    """State from a list whose first entry is the tracked zero (may be 0)."""
    if not orders:
        raise PreconditionViolation("need at least the tracked zero")
    n0, *rest = (int(m) for m in orders)
    total = n0 + sum(rest)
    if total % (2 * k):
        raise PreconditionViolation(f"orders sum to {total}, not a multiple of {2 * k}")
    return OplusState(
        k=k,
        genus=total // (2 * k) + 1,
        zero_order=n0,
        other_orders=tuple(rest),
        base_label=label,
        holomorphic_power=holomorphic_power,
        primitive=primitive,
    )


def _check_param(state: OplusState, s: int) -> None:
    if not 1 <= s <= state.max_param:
        raise RangeViolation(
            f"s = {s} outside [1, {state.max_param}] at zero order {state.zero_order}"
        )
    if state.holomorphic_power:
        m0 = state.zero_order // state.k
        if s % state.k or s // state.k > m0 + 1:
            raise NonRealizable(
                f"on a k-th power only s = k*l with 1 <= l <= {m0 + 1} is realizable, got {s}"
            )


def oplus_apply(state: OplusState, s: int) -> OplusState:
    """Bubble a handle with parameter s at the tracked zero."""
    _check_param(state, s)
    return replace(
        state,
        genus=state.genus + 1,
        zero_order=state.zero_order + 2 * state.k,
        holomorphic_power=state.holomorphic_power and s % state.k == 0,
    )


def break_zero(state: OplusState, parts: Sequence[int]) -> tuple[int, ...]:
    """Split the tracked zero into metric zeros of the given orders."""
    parts = tuple(int(p) for p in parts)
    if not parts or any(p == 0 for p in parts):
        raise PreconditionViolation("parts must be nonzero")
    if any(p <= -state.k for p in parts):
        raise PreconditionViolation(f"every part must be a metric zero (> {-state.k})")
    if sum(parts) != state.zero_order:
        raise PreconditionViolation(f"parts sum to {sum(parts)}, not {state.zero_order}")
    if state.holomorphic_power and len(parts) == 2 and all(p % state.k for p in parts):
        raise NonRealizable(
            "a k-th power of a holomorphic differential cannot split a zero into "
            "two zeros of order not divisible by k"
        )
    return tuple(sorted(parts, reverse=True))


@dataclass(frozen=True)
class OplusSequence:
    base: OplusState
    params: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(s) for s in self.params))
        check_params(self.base, self.params)

    def zero_order_at(self, i: int) -> int:
        return self.base.zero_order + 2 * self.base.k * i

    def final(self) -> OplusState:
        st = self.base
        for s in self.params:
            st = oplus_apply(st, s)
        return st

    def with_params(self, params: Iterable[int]) -> "OplusSequence":
        return OplusSequence(self.base, tuple(params))

    def text(self) -> str:
        head = format_signature((self.base.zero_order,) + self.base.other_orders)
        return f"base={head};ops={format_signature(self.params)}"


def check_params(base: OplusState, params: Sequence[int]) -> None:
    st = base
    for s in params:
        st = oplus_apply(st, s)


def _is_valid(base: OplusState, params: Sequence[int]) -> bool:
    try:
        check_params(base, params)
    except (RangeViolation, NonRealizable):
        return False
    return True


def parse_sequence(text: str, k: int, holomorphic_power: bool = False) -> OplusSequence:
    """Parse "base=0,-4;ops=1,4". The first base entry is the tracked zero."""
    fields = {}
    for chunk in "".join(text.split()).split(";"):
        if not chunk:
            continue
        key, sep, value = chunk.partition("=")
        if not sep:
            raise PreconditionViolation(f"cannot parse {chunk!r}")
        fields[key] = value
    if "base" not in fields:
        raise PreconditionViolation("missing base=")
    base = make_state(k, parse_orders(fields["base"]), holomorphic_power=holomorphic_power)
    ops = parse_orders(fields["ops"]) if fields.get("ops") else []
    return OplusSequence(base, tuple(ops))


# -- the rewrite rules ----------------------------------------------------


def _rule_pair(k: int, n: int, rule: str, s1: int, s2: int) -> tuple[int, int]:
    """Apply a two-parameter rule at entering zero order n."""
    top1, top2 = n + 2 * k - 1, n + 4 * k - 1
    if rule == "commute":
        if not (1 <= s1 <= top1 and 1 <= s2 <= top1):
            raise RuleInapplicable(f"commute needs both parameters in [1, {top1}]")
        if s1 + s2 >= n + 3 * k:
            raise RuleInapplicable(f"commute needs s1 + s2 < {n + 3 * k}")
        return s2, s1
    if rule == "shift":
        if not 1 <= s1 <= n + k - 1:
            raise RuleInapplicable(f"shift needs 1 <= s1 <= {n + k - 1}")
        if not k + 1 <= s2 <= top1:
            raise RuleInapplicable(f"shift needs {k + 1} <= s2 <= {top1}")
        return s2 - k, s1 + k
    if rule == "slide":
        if not (1 <= s1 <= top1 and 1 <= s2 <= top2):
            raise RuleInapplicable(f"slide needs s1 in [1, {top1}] and s2 in [1, {top2}]")
        if s2 - s1 < 2 * k:
            raise RuleInapplicable(f"slide needs s2 - s1 >= {2 * k}")
        return s2 - 2 * k, s1
    if rule == "unslide":
        # slide read from right to left
        if not (1 <= s1 <= top1 and 1 <= s2 <= top1):
            raise RuleInapplicable(f"unslide needs both parameters in [1, {top1}]")
        if s1 + 2 * k - s2 < 2 * k:
            raise RuleInapplicable("unslide needs s2 <= s1")
        return s2, s1 + 2 * k
    raise RuleInapplicable(f"unknown rule {rule!r}")


def apply_rule(seq: OplusSequence, i: int, rule: str) -> OplusSequence:
    """Rewrite at position i (and i+1 for the two-parameter rules)."""
    k = seq.base.k
    n = seq.zero_order_at(i)
    p = list(seq.params)
    if not 0 <= i < len(p):
        raise RuleInapplicable(f"position {i} out of range")
    if rule == "reflect":
        if not 1 <= p[i] <= n + 2 * k - 1:
            raise RuleInapplicable(f"reflect needs 1 <= s <= {n + 2 * k - 1}")
        p[i] = n + 2 * k - p[i]
    else:
        if i + 1 >= len(p):
            raise RuleInapplicable(f"{rule} needs positions {i} and {i + 1}")
        p[i], p[i + 1] = _rule_pair(k, n, rule, p[i], p[i + 1])
    if not _is_valid(seq.base, p):
        raise RuleInapplicable(f"{rule} leaves the realizable range")
    return seq.with_params(p)


def is_balanced(k: int, n: int, s1: int, s2: int) -> bool:
    if n > 0 and n % 2 == 0:
        return (s1, s2) == ((n + 2 * k) // 2, (n + 4 * k) // 2)
    if -k < n <= 0:
        return n + 2 * k <= s2 <= (n + 4 * k) // 2 and 1 <= s1 <= (n + 2 * k) // 2
    return False


def gcd_equivalent(context: OplusState, s1: int, s2: int) -> bool:
    """Whether bubbling with s1 and with s2 give the same component.

    A genus-0 context compares gcd(s, l_1, ..., l_s); a higher-genus context
    whose other singularities are all poles compares gcd(s, n + 2k).
    """
    if not context.only_poles_besides_zero():
        raise PreconditionViolation("the context needs at least one pole and no other zero")
    for s in (s1, s2):
        if not 1 <= s <= context.max_param:
            raise RangeViolation(f"s = {s} outside [1, {context.max_param}]")
    if context.genus == 0:
        ls = [-m for m in context.other_orders]
        return _gcd_all([s1] + ls) == _gcd_all([s2] + ls)
    m = context.zero_order + 2 * context.k
    return gcd(s1, m) == gcd(s2, m)


def _gcd_all(xs: Iterable[int]) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g


# -- extra identities for quadratic differentials -------------------------

_FOUR_BASES = {tuple(sorted(b)) for b in ((-4,), (-2, -2), (-1, -3), (-1, -1, -2))}


def _axiom_kind(base: OplusState) -> str:
    """Which degeneration identities apply at the first two positions."""
    if base.k != 2 or base.genus != 0 or not base.only_poles_besides_zero():
        return ""
    if base.zero_order == 0 and tuple(sorted(base.other_orders)) in _FOUR_BASES:
        if base.zero_order % 2 == 0 and all(m % 2 == 0 for m in base.other_orders):
            return "even+four"
        return "four"
    if base.zero_order % 2 == 0 and all(m % 2 == 0 for m in base.other_orders):
        return "even"
    return ""


def _axiom_pairs(kind: str, s1: int, s2: int) -> list[tuple[int, int]]:
    if s1 != 1 or not kind:
        return []
    out = []
    if "even" in kind and s2 in (1, 2, 3):
        out += [(1, t) for t in (1, 2, 3) if t != s2]
    if "four" in kind and s2 in (1, 4):
        out.append((1, 5 - s2))
    return out


# -- normalization --------------------------------------------------------


def _key(params: tuple[int, ...]):
    return (tuple(sorted(params, reverse=True)), params)


@lru_cache(maxsize=1024)
def _pair_classes(k: int, n: int, holo: bool, axioms: str) -> dict[tuple[int, int], tuple[int, int]]:
    """Least member of each class of (s1, s2) at entering order n under local moves."""
    top1, top2 = n + 2 * k - 1, n + 4 * k - 1

    def ok(s, order):
        if not 1 <= s <= order + 2 * k - 1:
            return False
        return not holo or (s % k == 0 and s // k <= order // k + 1)

    nodes = [(a, b) for a in range(1, top1 + 1) for b in range(1, top2 + 1) if ok(a, n) and ok(b, n + 2 * k)]
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for a, b in nodes:
        targets = [(n + 2 * k - a, b), (a, n + 4 * k - b)]
        for rule in ("commute", "shift", "slide"):
            try:
                targets.append(_rule_pair(k, n, rule, a, b))
            except RuleInapplicable:
                pass
        targets += _axiom_pairs(axioms, a, b)
        for t in targets:
            if t in parent:
                union((a, b), t)
    best: dict = {}
    for v in nodes:
        r = find(v)
        if r not in best or _key(v) < _key(best[r]):
            best[r] = v
    return {v: best[find(v)] for v in nodes}


@dataclass
class NormalizeResult:
    representatives: tuple[OplusSequence, ...]
    explored: int
    complete: bool
    visited_order: list[tuple[int, ...]] = field(default_factory=list)

    def has_revisits(self) -> bool:
        return len(self.visited_order) != len(set(self.visited_order))


class _Normalizer:
    def __init__(self, base: OplusState, gcd_moves: bool):
        self.base = base
        self.k = base.k
        self.gcd_moves = gcd_moves
        self.axioms = _axiom_kind(base)
        self.trail: list[tuple[int, ...]] = []

    def holo_at(self, params: tuple[int, ...], i: int) -> bool:
        return self.base.holomorphic_power and all(s % self.k == 0 for s in params[:i])

    def descend(self, params: tuple[int, ...]) -> tuple[int, ...]:
        """Replace adjacent pairs by their least local equivalent until stable.

        Every replacement lowers the key strictly, so this terminates without
        returning to an earlier state.
        """
        p = list(params)
        changed = True
        while changed:
            changed = False
            for i in range(len(p) - 1):
                n = self.base.zero_order + 2 * self.k * i
                table = _pair_classes(self.k, n, self.holo_at(tuple(p), i), self.axioms if i == 0 else "")
                rep = table[(p[i], p[i + 1])]
                if rep != (p[i], p[i + 1]):
                    p[i], p[i + 1] = rep
                    self.trail.append(tuple(p))
                    changed = True
        return tuple(p)

    def moves(self, params: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        seq = OplusSequence(self.base, params)
        for i in range(len(params)):
            for rule in RULES:
                try:
                    yield apply_rule(seq, i, rule).params
                except RuleInapplicable:
                    pass
            if i + 1 < len(params):
                try:
                    p = list(params)
                    p[i], p[i + 1] = _rule_pair(self.k, seq.zero_order_at(i), "unslide", p[i], p[i + 1])
                    if _is_valid(self.base, p):
                        yield tuple(p)
                except RuleInapplicable:
                    pass
        if len(params) >= 2 and self.axioms:
            for pair in _axiom_pairs(self.axioms, params[0], params[1]):
                yield pair + params[2:]
        if self.gcd_moves:
            yield from self._gcd_moves(params)

    def _gcd_moves(self, params):
        st = self.base
        for i, s in enumerate(params):
            if st.only_poles_besides_zero():
                for t in range(1, st.max_param + 1):
                    if t != s and gcd_equivalent(st, s, t):
                        cand = params[:i] + (t,) + params[i + 1 :]
                        if _is_valid(self.base, cand):
                            yield cand
            st = oplus_apply(st, s)


def normalize(seq: OplusSequence, max_states: int = 256, gcd_moves: bool = False) -> NormalizeResult:
    """Least equivalent sequence found by a best-first search.

    Each visited state is first pushed down by local pair moves, then its
    single-rule neighbours are queued. The search stops when the class is
    exhausted or ``max_states`` states have been visited; ``complete``
    tells which. The rewrite system is not known to be confluent, so the
    result is the least representative seen, not a proven unique normal
    form. ``gcd_moves`` adds the gcd identities, which are off by default.
    """
    norm = _Normalizer(seq.base, gcd_moves)
    start = norm.descend(seq.params)
    visited = {start}
    order = [start]
    heap = [(_key(start), start)]
    while heap and len(visited) < max_states:
        _, cur = heapq.heappop(heap)
        for nb in norm.moves(cur):
            nf = norm.descend(nb)
            if nf not in visited:
                visited.add(nf)
                order.append(nf)
                heapq.heappush(heap, (_key(nf), nf))
    best = min(visited, key=_key)
    return NormalizeResult(
        representatives=(seq.with_params(best),),
        explored=len(visited),
        complete=not heap,
        visited_order=order,
    )


def equivalent(a: OplusSequence, b: OplusSequence, max_states: int = 256) -> bool:
    """True when the search puts both sequences on the same representative."""
    if a.base != b.base:
        return False
    ra = normalize(a, max_states).representatives
    rb = normalize(b, max_states).representatives
    return ra == rb
