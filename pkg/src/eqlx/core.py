"""Syntax for propositional programs and theories with two negations.

Formulas combine explicit negation ``~`` (constructive falsity) with default
negation ``not`` (negation as failure) over the usual connectives.  Every type
in this module is immutable, hashable and compared structurally, so values can
be shared freely between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, Mapping, Optional, Union

__all__ = [
    "Atom",
    "ExplicitLiteral",
    "Formula",
    "Bot",
    "Top",
    "AtomRef",
    "XNeg",
    "DNeg",
    "And",
    "Or",
    "Impl",
    "BOT",
    "TOP",
    "Rule",
    "Program",
    "Theory",
    "Interpretation",
    "X5Interpretation",
    "FiveValue",
    "InconsistentLiterals",
    "NotNested",
    "RESERVED_WORDS",
    "atom",
    "iff",
    "strong_iff",
    "atoms",
    "substitute",
    "is_nested",
    "is_explicit",
    "is_regular",
    "is_default_literal",
    "as_explicit_literal",
    "canonical_print",
]

_ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")

#: Words that the surface syntax claims for itself.
RESERVED_WORDS = frozenset({"bot", "top", "not"})


class InconsistentLiterals(ValueError):
    """A literal set contains some atom together with its explicit negation."""


class NotNested(ValueError):
    """An implication occurs where only nested expressions are allowed."""


@dataclass(frozen=True, order=True)
class Atom:
    """Propositional atom; names are lowercase-initial identifiers."""

    name: str

    def __post_init__(self) -> None:
        if self.name in RESERVED_WORDS:
            raise ValueError(f"reserved word used as atom: {self.name!r}")
        if not _ATOM_RE.match(self.name):
            raise ValueError(f"not a valid atom name: {self.name!r}")

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Atom({self.name!r})"


@dataclass(frozen=True, order=True)
class ExplicitLiteral:
    """An atom or its explicit negation.

    The derived order (atom name first, positive before negative) is the
    canonical printing order for interpretations.
    """

    atom: Atom
    negated: bool = False

    def complement(self) -> "ExplicitLiteral":
        return ExplicitLiteral(self.atom, not self.negated)

    def as_formula(self) -> "Formula":
        ref = AtomRef(self.atom)
        return XNeg(ref) if self.negated else ref

    def __str__(self) -> str:
        return ("~" if self.negated else "") + self.atom.name

    def __repr__(self) -> str:
        return f"ExplicitLiteral({str(self)!r})"


class Formula:
    """Base class of formula nodes.

    Supports a little operator sugar for building trees by hand:
    ``a & b``, ``a | b``, ``a >> b`` (implication) and ``~a`` (explicit
    negation).  Default negation has no operator; use :class:`DNeg`.
    """

    __slots__ = ()

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def __rshift__(self, other: "Formula") -> "Formula":
        return Impl(self, other)

    def __invert__(self) -> "Formula":
        return XNeg(self)

    def __repr__(self) -> str:
        return canonical_print(self)


@dataclass(frozen=True, slots=True, repr=False)
class Bot(Formula):
    pass


@dataclass(frozen=True, slots=True, repr=False)
class Top(Formula):
    pass


@dataclass(frozen=True, slots=True, repr=False)
class AtomRef(Formula):
    atom: Atom


@dataclass(frozen=True, slots=True, repr=False)
class XNeg(Formula):
    """Explicit negation node (printed ``~``)."""

    child: Formula


@dataclass(frozen=True, slots=True, repr=False)
class DNeg(Formula):
    """Default negation node (printed ``not``).

    Kept as a first-class node even though it abbreviates ``child -> bot``;
    the reduct pattern-matches on it, and semantic agreement with the derived
    form is enforced by tests rather than by construction.
    """

    child: Formula


@dataclass(frozen=True, slots=True, repr=False)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True, repr=False)
class Impl(Formula):
    left: Formula
    right: Formula


BOT = Bot()
TOP = Top()


def atom(name: str) -> AtomRef:
    """Shorthand for ``AtomRef(Atom(name))``."""
    return AtomRef(Atom(name))


def iff(a: Formula, b: Formula) -> Formula:
    """Double implication; expands, there is no dedicated node."""
    return And(Impl(a, b), Impl(b, a))


def strong_iff(a: Formula, b: Formula) -> Formula:
    """Equivalence that also relates the explicit negations of both sides."""
    return And(iff(a, b), iff(XNeg(a), XNeg(b)))


@dataclass(frozen=True, slots=True)
class Rule:
    """Implication ``body -> head`` between nested expressions."""

    body: Formula
    head: Formula

    def __post_init__(self) -> None:
        for side, name in ((self.body, "body"), (self.head, "head")):
            if not is_nested(side):
                raise NotNested(f"rule {name} must be a nested expression: "
                                f"{canonical_print(side)}")

    def as_implication(self) -> Impl:
        return Impl(self.body, self.head)

    def __repr__(self) -> str:
        return canonical_print(self)


class Program:
    """Ordered, duplicate-free collection of rules with set equality."""

    __slots__ = ("rules",)

    def __init__(self, rules: Iterable[Rule] = ()):
        seen = set()
        kept = []
        for r in rules:
            if not isinstance(r, Rule):
                raise TypeError(f"expected Rule, got {type(r).__name__}")
            if r not in seen:
                seen.add(r)
                kept.append(r)
        self.rules: tuple = tuple(kept)

    def as_theory(self) -> "Theory":
        return Theory(r.as_implication() for r in self.rules)

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Program):
            return NotImplemented
        return frozenset(self.rules) == frozenset(other.rules)

    def __hash__(self) -> int:
        return hash(frozenset(self.rules))

    def __repr__(self) -> str:
        return f"Program({list(self.rules)!r})"


class Theory:
    """Ordered, duplicate-free collection of formulas with set equality."""

    __slots__ = ("formulas",)

    def __init__(self, formulas: Iterable[Formula] = ()):
        seen = set()
        kept = []
        for f in formulas:
            if not isinstance(f, Formula):
                raise TypeError(f"expected Formula, got {type(f).__name__}")
            if f not in seen:
                seen.add(f)
                kept.append(f)
        self.formulas: tuple = tuple(kept)

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.formulas)

    def __len__(self) -> int:
        return len(self.formulas)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Theory):
            return NotImplemented
        return frozenset(self.formulas) == frozenset(other.formulas)

    def __hash__(self) -> int:
        return hash(frozenset(self.formulas))

    def __repr__(self) -> str:
        return f"Theory({list(self.formulas)!r})"


class Interpretation:
    """Consistent set of explicit literals."""

    __slots__ = ("literals",)

    def __init__(self, literals: Iterable[ExplicitLiteral] = ()):
        lits = frozenset(literals)
        positive = {l.atom for l in lits if not l.negated}
        negative = {l.atom for l in lits if l.negated}
        clash = positive & negative
        if clash:
            a = min(clash)
            raise InconsistentLiterals(f"inconsistent interpretation: {a} and ~{a}")
        self.literals = lits

    def atoms(self) -> set:
        return {l.atom for l in self.literals}

    def has(self, a: Atom, negated: bool = False) -> bool:
        return ExplicitLiteral(a, negated) in self.literals

    def issubset(self, other: "Interpretation") -> bool:
        return self.literals <= other.literals

    def __le__(self, other: "Interpretation") -> bool:
        return self.literals <= other.literals

    def __lt__(self, other: "Interpretation") -> bool:
        return self.literals < other.literals

    def __contains__(self, lit: ExplicitLiteral) -> bool:
        return lit in self.literals

    def __iter__(self) -> Iterator[ExplicitLiteral]:
        return iter(sorted(self.literals))

    def __len__(self) -> int:
        return len(self.literals)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interpretation):
            return NotImplemented
        return self.literals == other.literals

    def __hash__(self) -> int:
        return hash(self.literals)

    def __str__(self) -> str:
        return "{" + ", ".join(str(l) for l in self) + "}"

    def __repr__(self) -> str:
        return f"Interpretation({str(self)})"


class X5Interpretation:
    """Pair of here/there literal sets with ``here`` included in ``there``.

    Equivalently a five-valued assignment of atoms; see :meth:`value_of`.
    """

    __slots__ = ("here", "there")

    def __init__(self, here: Interpretation, there: Interpretation):
        if not isinstance(here, Interpretation):
            here = Interpretation(here)
        if not isinstance(there, Interpretation):
            there = Interpretation(there)
        if not here.issubset(there):
            raise ValueError(f"here world {here} is not a subset of there world {there}")
        self.here = here
        self.there = there

    def total(self) -> bool:
        return self.here == self.there

    def total_version(self) -> "X5Interpretation":
        return X5Interpretation(self.there, self.there)

    def value_of(self, a: Atom) -> int:
        """Five-valued reading of one atom: 2/-2 proved, 1/-1 by default, 0 unknown."""
        if self.here.has(a):
            return 2
        if self.here.has(a, negated=True):
            return -2
        if self.there.has(a):
            return 1
        if self.there.has(a, negated=True):
            return -1
        return 0

    def values(self, signature: Iterable[Atom]) -> dict:
        return {a: self.value_of(a) for a in sorted(signature)}

    @classmethod
    def from_values(cls, values: Mapping[Atom, int]) -> "X5Interpretation":
        here = []
        there = []
        for a, v in values.items():
            if v not in (-2, -1, 0, 1, 2):
                raise ValueError(f"not a five-valued assignment: {a}={v}")
            if v == 0:
                continue
            lit = ExplicitLiteral(a, negated=v < 0)
            there.append(lit)
            if abs(v) == 2:
                here.append(lit)
        return cls(Interpretation(here), Interpretation(there))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, X5Interpretation):
            return NotImplemented
        return self.here == other.here and self.there == other.there

    def __hash__(self) -> int:
        return hash((self.here, self.there))

    def __str__(self) -> str:
        return f"<{self.here}, {self.there}>"

    def __repr__(self) -> str:
        return f"X5Interpretation({self.here}, {self.there})"


class FiveValue(IntEnum):
    """Truth value of the five-valued semantics; only 2 is designated."""

    PROVEN_FALSE = -2
    DEFAULT_FALSE = -1
    UNDEFINED = 0
    DEFAULT_TRUE = 1
    PROVEN_TRUE = 2

    @property
    def designated(self) -> bool:
        return self is FiveValue.PROVEN_TRUE


# ---------------------------------------------------------------------------
# Structural operations


def atoms(x: Union[Formula, Rule, Program, Theory, Interpretation]) -> set:
    """Set of atoms occurring anywhere in ``x``, including under negations."""
    found: set = set()
    _collect_atoms(x, found)
    return found


def _collect_atoms(x, found: set) -> None:
    if isinstance(x, AtomRef):
        found.add(x.atom)
    elif isinstance(x, (XNeg, DNeg)):
        _collect_atoms(x.child, found)
    elif isinstance(x, (And, Or, Impl)):
        _collect_atoms(x.left, found)
        _collect_atoms(x.right, found)
    elif isinstance(x, (Bot, Top)):
        pass
    elif isinstance(x, Rule):
        _collect_atoms(x.body, found)
        _collect_atoms(x.head, found)
    elif isinstance(x, Program):
        for r in x:
            _collect_atoms(r, found)
    elif isinstance(x, Theory):
        for f in x:
            _collect_atoms(f, found)
    elif isinstance(x, Interpretation):
        found.update(l.atom for l in x.literals)
    else:
        raise TypeError(f"cannot collect atoms from {type(x).__name__}")


def substitute(phi: Formula, p: Atom, alpha: Formula) -> Formula:
    """Uniform substitution of every occurrence of ``p`` in ``phi`` by ``alpha``."""
    if isinstance(phi, AtomRef):
        return alpha if phi.atom == p else phi
    if isinstance(phi, XNeg):
        return XNeg(substitute(phi.child, p, alpha))
    if isinstance(phi, DNeg):
        return DNeg(substitute(phi.child, p, alpha))
    if isinstance(phi, And):
        return And(substitute(phi.left, p, alpha), substitute(phi.right, p, alpha))
    if isinstance(phi, Or):
        return Or(substitute(phi.left, p, alpha), substitute(phi.right, p, alpha))
    if isinstance(phi, Impl):
        return Impl(substitute(phi.left, p, alpha), substitute(phi.right, p, alpha))
    return phi


def is_nested(phi: Formula) -> bool:
    """True iff ``phi`` contains no implication node."""
    if isinstance(phi, Impl):
        return False
    if isinstance(phi, (XNeg, DNeg)):
        return is_nested(phi.child)
    if isinstance(phi, (And, Or)):
        return is_nested(phi.left) and is_nested(phi.right)
    return True


def is_explicit(x: Union[Formula, Rule, Program]) -> bool:
    """True iff no default negation occurs in ``x``."""
    if isinstance(x, Program):
        return all(is_explicit(r) for r in x)
    if isinstance(x, Rule):
        return is_explicit(x.body) and is_explicit(x.head)
    if isinstance(x, DNeg):
        return False
    if isinstance(x, XNeg):
        return is_explicit(x.child)
    if isinstance(x, (And, Or)):
        return is_explicit(x.left) and is_explicit(x.right)
    if isinstance(x, Impl):
        return is_explicit(x.left) and is_explicit(x.right)
    return True


def as_explicit_literal(f: Formula) -> Optional[ExplicitLiteral]:
    """The explicit literal denoted by ``f``, or None if it is not one."""
    if isinstance(f, AtomRef):
        return ExplicitLiteral(f.atom)
    if isinstance(f, XNeg) and isinstance(f.child, AtomRef):
        return ExplicitLiteral(f.child.atom, negated=True)
    return None


def is_default_literal(f: Formula) -> bool:
    """True for ``L`` and ``not L`` with ``L`` an explicit literal."""
    if isinstance(f, DNeg):
        return as_explicit_literal(f.child) is not None
    return as_explicit_literal(f) is not None


def _conjuncts(f: Formula) -> Iterator[Formula]:
    if isinstance(f, And):
        yield from _conjuncts(f.left)
        yield from _conjuncts(f.right)
    else:
        yield f


def _disjuncts(f: Formula) -> Iterator[Formula]:
    if isinstance(f, Or):
        yield from _disjuncts(f.left)
        yield from _disjuncts(f.right)
    else:
        yield f


def is_regular(r: Rule) -> bool:
    """True iff ``r`` has a default-literal body conjunction and head disjunction.

    An empty body is written ``top`` and an empty head ``bot``, but a rule may
    not have both.
    """
    body_ok = isinstance(r.body, Top) or all(is_default_literal(c) for c in _conjuncts(r.body))
    head_ok = isinstance(r.head, Bot) or all(is_default_literal(d) for d in _disjuncts(r.head))
    if isinstance(r.body, Top) and isinstance(r.head, Bot):
        return False
    return body_ok and head_ok


# ---------------------------------------------------------------------------
# Canonical printing

_PREC_IMPL = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_PREFIX = 4
_PREC_ATOM = 5


def _prec(f: Formula) -> int:
    if isinstance(f, Impl):
        return _PREC_IMPL
    if isinstance(f, Or):
        return _PREC_OR
    if isinstance(f, And):
        return _PREC_AND
    if isinstance(f, (XNeg, DNeg)):
        return _PREC_PREFIX
    return _PREC_ATOM


def _print_formula(f: Formula) -> str:
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Top):
        return "top"
    if isinstance(f, AtomRef):
        return f.atom.name
    if isinstance(f, XNeg):
        inner = _wrap(f.child, _PREC_PREFIX)
        sep = " " if isinstance(f.child, (XNeg, DNeg)) else ""
        return "~" + sep + inner
    if isinstance(f, DNeg):
        return "not " + _wrap(f.child, _PREC_PREFIX)
    if isinstance(f, And):
        left = _wrap(f.left, _PREC_AND)
        right = _wrap(f.right, _PREC_AND, right_of_same=isinstance(f.right, And))
        return f"{left} & {right}"
    if isinstance(f, Or):
        left = _wrap(f.left, _PREC_OR)
        right = _wrap(f.right, _PREC_OR, right_of_same=isinstance(f.right, Or))
        return f"{left} | {right}"
    if isinstance(f, Impl):
        # right-associative: only a left child that is itself an implication
        # needs parentheses
        left = _wrap(f.left, _PREC_IMPL, right_of_same=isinstance(f.left, Impl))
        right = _print_formula(f.right)
        return f"{left} -> {right}"
    raise TypeError(f"cannot print {type(f).__name__}")


def _wrap(f: Formula, parent_prec: int, right_of_same: bool = False) -> str:
    s = _print_formula(f)
    if _prec(f) < parent_prec or right_of_same:
        return "(" + s + ")"
    return s


def _print_rule(r: Rule) -> str:
    if isinstance(r.body, Top):
        return f"{_print_formula(r.head)}."
    return f"{_print_formula(r.body)} -> {_print_formula(r.head)}."


def canonical_print(x) -> str:
    """Deterministic ASCII rendering; the parser accepts everything emitted."""
    if isinstance(x, Formula):
        return _print_formula(x)
    if isinstance(x, Rule):
        return _print_rule(x)
    if isinstance(x, Program):
        return "".join(_print_rule(r) + "\n" for r in x)
    if isinstance(x, Theory):
        return "".join(_print_formula(f) + ".\n" for f in x)
    if isinstance(x, (Interpretation, X5Interpretation, ExplicitLiteral)):
        return str(x)
    raise TypeError(f"cannot print {type(x).__name__}")
