"""Tree enumeration of all numerical semigroups honouring a constraint set.

The numerical semigroups that honour a constraint set C form a rooted
tree.  The root is the largest member: N itself when every adjustment is
>= -2, and {0, theta, theta+1, ...} otherwise.  Each node's children are
obtained by removing one minimal generator x larger than the Frobenius
number, provided the result still honours C; the removed generator
becomes the child's Frobenius number, so Frobenius number and genus both
grow strictly along every edge and bounded enumeration is exact.

Child viability is decided without rebuilding the child: removing x is
safe iff for every adjustment c the value x - c is either outside the
parent, a minimal generator of the child, x itself, or 0.  When -m (m
the parent's smallest generator) is not an adjustment and x is not m,
the child's generators can be replaced by the parent's own in that test,
which skips computing them.  Two corrections to the obvious version of
that shortcut, both confirmed against exhaustive search: the value 0
must stay allowed (it covers c equal to x itself), and removing the
smallest generator always takes the slow path (that removal introduces
generators 2m and 2m+1, which the shortcut cannot see).

The minimal generators after removing x come from a closed form: for
{0, m, ->} minus m the result is {m+1, ..., 2m+1}; otherwise the only
candidate new generator is x + m, needed exactly when no other
non-multiplicity generator n_j has x + m - n_j inside the parent.

brute_force_family is the independent oracle: it enumerates candidate
gap sets directly and keeps the complements that are addition-closed
and honour C.  Tests pin the tree enumeration against it.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .closure import IncentiveSpec, _as_spec, _clean_seed, is_admissible, is_incentive
from .errors import (
    BoundTooLarge,
    DomainError,
    InternalInvariant,
    InvalidRemoval,
    NotAdmissible,
    RootMissesX,
)
from .monoid import GenSet, NumericalSemigroup, numerical_semigroup

MAX_FROBENIUS = "max_frobenius"
MAX_GENUS = "max_genus"
MAX_DEPTH = "max_depth"
_BOUND_KINDS = (MAX_FROBENIUS, MAX_GENUS, MAX_DEPTH)

BRUTE_FORCE_CEILING = 18


@dataclass(frozen=True)
class EnumerationBound:
    """A truncation rule for tree enumeration.

    kind is one of max_frobenius, max_genus, max_depth; value None means
    unbounded (safe only when the family is finite).  Frobenius number
    and genus grow strictly along edges, so pruning below a violating
    child is exact; depth pruning simply stops expanding at the cutoff.
    """

    kind: str
    value: int | None

    def __post_init__(self) -> None:
        if self.kind not in _BOUND_KINDS:
            raise DomainError(f"unknown bound kind {self.kind!r}")
        if self.value is not None and (not isinstance(self.value, int) or self.value < 0):
            raise DomainError("bound value must be a non-negative integer or None")

    def admits(self, sg: NumericalSemigroup, depth: int) -> bool:
        if self.value is None:
            return True
        if self.kind == MAX_FROBENIUS:
            return sg.frobenius <= self.value
        if self.kind == MAX_GENUS:
            return sg.genus <= self.value
        return depth <= self.value

    def __str__(self) -> str:
        return f"{self.kind}={'none' if self.value is None else self.value}"


@dataclass(eq=False)
class TreeNode:
    semigroup: NumericalSemigroup
    parent: "TreeNode | None"
    removed_generator: int | None
    depth: int
    node_id: int


@dataclass
class IncentiveTree:
    """Breadth-first enumeration result with deterministic node ids."""

    c_set: tuple[int, ...]
    x_set: tuple[int, ...] | None
    bound: EnumerationBound
    nodes: list[TreeNode] = field(default_factory=list)
    truncated: bool = False

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def max_depth(self) -> int:
        return max((n.depth for n in self.nodes), default=-1)

    @property
    def root(self) -> TreeNode | None:
        return self.nodes[0] if self.nodes else None

    def children_of(self, node: TreeNode) -> list[TreeNode]:
        return [n for n in self.nodes if n.parent is node]

    @property
    def leaves(self) -> list[TreeNode]:
        parents = {id(n.parent) for n in self.nodes if n.parent is not None}
        return [n for n in self.nodes if id(n) not in parents]

    def node_by_msg(self, gens: Iterable[int]) -> TreeNode | None:
        key = tuple(sorted(gens))
        for n in self.nodes:
            if n.semigroup.msg.elements == key:
                return n
        return None

    def to_json_dict(self) -> dict:
        return {
            "metadata": {
                "c_set": list(self.c_set),
                "x_set": list(self.x_set) if self.x_set is not None else None,
                "bound": {"kind": self.bound.kind, "value": self.bound.value},
                "node_count": self.node_count,
                "truncated": self.truncated,
            },
            "nodes": [
                {
                    "id": n.node_id,
                    "msg": list(n.semigroup.msg.elements),
                    "frobenius": n.semigroup.frobenius,
                    "genus": n.semigroup.genus,
                    "parent_id": n.parent.node_id if n.parent else None,
                    "removed_generator": n.removed_generator,
                }
                for n in self.nodes
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    def to_dot(self) -> str:
        lines = ["digraph incentive_tree {"]
        for n in self.nodes:
            lines.append(f'  n{n.node_id} [label="{n.semigroup}"];')
        for n in self.nodes:
            if n.parent is not None:
                lines.append(
                    f'  n{n.parent.node_id} -> n{n.node_id} [label="{n.removed_generator}"];'
                )
        lines.append("}")
        return "\n".join(lines) + "\n"


def max_numerical_incentive(c: IncentiveSpec | Iterable[int]) -> NumericalSemigroup:
    """The largest numerical semigroup honouring the constraint set.

    N itself when every adjustment is >= -2; otherwise {0, theta, ->},
    whose minimal generators are theta, ..., 2*theta - 1.
    """
    spec = _as_spec(c)
    if all(v >= -2 for v in spec.c_set):
        return numerical_semigroup((1,))
    th = spec.theta
    return numerical_semigroup(tuple(range(th, 2 * th)))


def _check_removal(sg: NumericalSemigroup, x: int) -> None:
    elems = sg.msg.elements
    if x not in elems:
        raise InvalidRemoval(f"{x} is not a minimal generator of {sg}")
    if x <= sg.frobenius:
        raise InvalidRemoval(
            f"removing {x} from {sg} leaves a non-monoid; need x > frobenius {sg.frobenius}"
        )


def msg_after_removal(sg: NumericalSemigroup, x: int) -> GenSet:
    """Minimal generators of the semigroup minus one generator x > frobenius.

    Removing the smallest generator m is only possible from {0, m, ->}
    and yields {m+1, ..., 2m+1}.  Otherwise the only candidate new
    generator is x + m; it is redundant exactly when x + m - n_j stays a
    member for some other non-multiplicity generator n_j.
    """
    _check_removal(sg, x)
    elems = sg.msg.elements
    m = elems[0]
    if x == m:
        # x > frobenius forces the parent to be {0, m, ->} here
        return GenSet(tuple(range(m + 1, 2 * m + 2)))
    if any(nj != x and (x + m - nj) in sg for nj in elems[1:]):
        return GenSet(tuple(g for g in elems if g != x))
    return GenSet(tuple(sorted([g for g in elems if g != x] + [x + m])))


def child_viable(
    sg: NumericalSemigroup,
    x: int,
    c: IncentiveSpec | Iterable[int],
    debug: bool = False,
) -> bool:
    """Does the semigroup minus x still honour the constraint set?

    For every adjustment cc, the value x - cc must be outside the parent,
    a minimal generator of the child, x, or 0.  The fast path substitutes
    the parent's generators for the child's; it is valid unless -m is an
    adjustment or x is the smallest generator (see the module docstring).
    """
    spec = _as_spec(c)
    _check_removal(sg, x)
    elems = sg.msg.elements
    m = elems[0]
    fast = -m not in spec.c_set and x != m
    if fast:
        allowed = set(elems)
    else:
        allowed = set(msg_after_removal(sg, x).elements)
    verdict = _viability_scan(sg, x, spec, allowed)
    if debug and fast:
        slow = _viability_scan(sg, x, spec, set(msg_after_removal(sg, x).elements))
        if slow != verdict:
            raise InternalInvariant(
                f"fast and general viability disagree for {sg} minus {x} under {spec}"
            )
    return verdict


def _viability_scan(
    sg: NumericalSemigroup, x: int, spec: IncentiveSpec, allowed: set[int]
) -> bool:
    for cc in spec.c_set:
        v = x - cc
        if v == x or v == 0:
            continue
        if v in sg and v not in allowed:
            return False
    return True


def _child_semigroup(sg: NumericalSemigroup, x: int, debug: bool = False) -> NumericalSemigroup:
    after = msg_after_removal(sg, x)
    table = bytearray(sg.member_table)
    table.extend(b"\x01" * (x + 2 - len(table)))
    table[x] = 0
    child = NumericalSemigroup(after, x, sg.gaps + (x,), bytes(table))
    if debug:
        scratch = numerical_semigroup(after)
        if (
            scratch.msg.elements != child.msg.elements
            or scratch.frobenius != child.frobenius
            or scratch.gaps != child.gaps
        ):
            raise InternalInvariant(f"incremental child {child} disagrees with rebuild {scratch}")
    return child


def children(
    sg: NumericalSemigroup,
    c: IncentiveSpec | Iterable[int],
    x_set: Iterable[int] | None = None,
    debug: bool = False,
) -> list[tuple[int, NumericalSemigroup]]:
    """Viable (removed generator, child) pairs in ascending generator order.

    x_set, when given, lists elements that must stay inside every node;
    generators in it are never removed.
    """
    spec = _as_spec(c)
    required = set(x_set) if x_set is not None else set()
    out = []
    for x in sg.msg.elements:
        if x <= sg.frobenius or x in required:
            continue
        if child_viable(sg, x, spec, debug=debug):
            out.append((x, _child_semigroup(sg, x, debug=debug)))
    return out


def enumerate_tree(
    c: IncentiveSpec | Iterable[int],
    x_set: Iterable[int] | None,
    bound: EnumerationBound,
    threads: int = 1,
    debug: bool = False,
) -> IncentiveTree:
    """Breadth-first tree of numerical semigroups honouring c, under a bound.

    With x_set given, only semigroups containing it are enumerated (its
    elements are never removed), after checking admissibility and that
    the root actually contains it.  Children are visited in ascending
    removed-generator order, so node ids are deterministic; threads > 1
    expands each level in a pool with the same final ordering.
    """
    spec = _as_spec(c)
    xs: tuple[int, ...] | None = None
    if x_set is not None:
        xs = _clean_seed(x_set)
        if not is_admissible(xs, spec):
            raise NotAdmissible(f"no monoid honouring {spec} contains {set(xs)}")
    root_sg = max_numerical_incentive(spec)
    if xs:
        missing = [v for v in xs if v not in root_sg]
        if missing:
            raise RootMissesX(
                f"{missing} lie outside {root_sg}, the largest numerical candidate for {spec}"
            )
    tree = IncentiveTree(spec.c_set, xs, bound)
    if not bound.admits(root_sg, 0):
        tree.truncated = True
        return tree
    root = TreeNode(root_sg, None, None, 0, 0)
    tree.nodes.append(root)
    frontier = [root]
    while frontier:
        if threads > 1 and len(frontier) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                batches = list(
                    pool.map(lambda nd: children(nd.semigroup, spec, xs, debug), frontier)
                )
        else:
            batches = [children(nd.semigroup, spec, xs, debug) for nd in frontier]
        next_frontier = []
        for node, batch in zip(frontier, batches):
            for x, child_sg in batch:
                if not bound.admits(child_sg, node.depth + 1):
                    tree.truncated = True
                    continue
                child = TreeNode(child_sg, node, x, node.depth + 1, len(tree.nodes))
                tree.nodes.append(child)
                next_frontier.append(child)
        frontier = next_frontier
    return tree


def is_finite_family(c: IncentiveSpec | Iterable[int], x_set: Iterable[int]) -> bool:
    """Is the family of numerical semigroups honouring c and containing x_set finite?

    True iff gcd(c_set ∪ x_set) = 1: then the smallest closure is itself
    numerical and only finitely many semigroups sit between it and N.
    x_set must be non-empty (without it the family always contains every
    {0, k, ->} with k at or above the threshold, hence is infinite), and
    the criterion presumes the family is populated at all, i.e. the seeds
    sit inside the root.
    """
    spec = _as_spec(c)
    xs = _clean_seed(x_set)
    if not xs:
        raise DomainError("is_finite_family needs a non-empty seed set")
    if not is_admissible(xs, spec):
        raise NotAdmissible(f"no monoid honouring {spec} contains {set(xs)}")
    return math.gcd(*xs, *(abs(v) for v in spec.c_set)) == 1


@dataclass
class Decomposition:
    """Per-divisor trees describing every monoid honouring the constraints.

    The monoids honouring c with gcd d are exactly d times the numerical
    semigroups honouring c/d, so trees[d] enumerates the divisor-d slice
    (scaled down by d).  includes_trivial records that the trivial monoid
    {0} also qualifies (always, unless a non-empty seed set excludes it).
    """

    trees: dict[int, IncentiveTree]
    includes_trivial: bool


def decompose(
    c: IncentiveSpec | Iterable[int],
    x_set: Iterable[int] | None,
    bound: EnumerationBound,
    threads: int = 1,
    debug: bool = False,
) -> Decomposition:
    """Slice the family of monoids honouring c by the divisor of their gcd.

    For each divisor d of gcd(c_set ∪ x_set) (of gcd(c_set) when no seeds
    are given) the slice is enumerate_tree(c/d, x_set/d, bound).  A
    divisor whose root misses the scaled seeds contributes an empty tree:
    that slice of the family is empty.
    """
    spec = _as_spec(c)
    xs: tuple[int, ...] | None = None
    if x_set is not None:
        xs = _clean_seed(x_set)
        if not is_admissible(xs, spec):
            raise NotAdmissible(f"no monoid honouring {spec} contains {set(xs)}")
    g = math.gcd(*(abs(v) for v in spec.c_set), *(xs or ()))
    if g == 0:
        raise DomainError(
            "every monoid honours this constraint set; give a seed set to pin down a gcd"
        )
    divisors = [d for d in range(1, g + 1) if g % d == 0]
    trees: dict[int, IncentiveTree] = {}
    for d in divisors:
        c_d = IncentiveSpec(tuple(v // d for v in spec.c_set))
        xs_d = tuple(v // d for v in xs) if xs else xs
        try:
            trees[d] = enumerate_tree(c_d, xs_d, bound, threads=threads, debug=debug)
        except RootMissesX:
            trees[d] = IncentiveTree(c_d.c_set, xs_d, bound)
    return Decomposition(trees, includes_trivial=not xs)


@lru_cache(maxsize=8)
def _all_numerical_semigroups(max_frobenius: int) -> tuple[NumericalSemigroup, ...]:
    """Every numerical semigroup with Frobenius number <= max_frobenius.

    Enumerates all subsets of {1, ..., max_frobenius} as candidate gap
    sets and keeps the complements closed under addition.  Minimal
    generators are read off the membership table (scanning up to
    2 * max_frobenius + 1, enough for any such semigroup).
    """
    mf = max_frobenius
    found = []
    for bits in range(1 << mf):
        table = bytearray([1]) + bytearray(
            0 if bits >> i & 1 else 1 for i in range(mf)
        )
        closed = True
        for a in range(1, mf + 1):
            if not table[a]:
                continue
            for b in range(a, mf - a + 1):
                if table[b] and not table[a + b]:
                    closed = False
                    break
            if not closed:
                break
        if not closed:
            continue

        def member(v: int) -> bool:
            return v > mf or bool(table[v])

        gens = []
        for v in range(1, 2 * mf + 2):
            if member(v) and not any(member(a) and member(v - a) for a in range(1, v // 2 + 1)):
                gens.append(v)
        gaps = tuple(v for v in range(1, mf + 1) if not table[v])
        frob = gaps[-1] if gaps else -1
        found.append(
            NumericalSemigroup(
                GenSet(tuple(gens)), frob, gaps, bytes(table[: frob + 1]) + b"\x01"
            )
        )
    found.sort(key=lambda sg: (sg.genus, sg.msg.elements))
    return tuple(found)


def brute_force_family(
    c: IncentiveSpec | Iterable[int], max_frobenius: int
) -> dict[tuple[int, ...], NumericalSemigroup]:
    """Oracle: all numerical semigroups with F <= max_frobenius honouring c.

    Keyed by minimal generators.  Independent of the tree expansion: it
    filters an exhaustive gap-set enumeration through the pair test.
    """
    if max_frobenius > BRUTE_FORCE_CEILING:
        raise BoundTooLarge(
            f"brute force is capped at max_frobenius {BRUTE_FORCE_CEILING}, got {max_frobenius}"
        )
    spec = _as_spec(c)
    out: dict[tuple[int, ...], NumericalSemigroup] = {}
    for sg in _all_numerical_semigroups(max(max_frobenius, 0)):
        if is_incentive(sg.msg, spec):
            out[sg.msg.elements] = sg
    return out
