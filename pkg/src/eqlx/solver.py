"""Exhaustive enumeration engines for models, answer sets and equilibria.

Everything here is brute force by design: the search spaces are 3^n literal
sets and 5^n here/there pairs, and the point of the artifact is checkable
correctness, not scale.  A guard refuses signatures that would blow up.  All
candidate checks are pure, so the scan over there-world candidates can be
spread over threads; results are emitted in enumeration order regardless.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Union

from .core import (
    Atom,
    ExplicitLiteral,
    Interpretation,
    Program,
    Rule,
    Theory,
    X5Interpretation,
    atoms,
    is_explicit,
)
from .reduct import ferraris_theory, reduct_program
from .semantics import _nsat, _sat

__all__ = [
    "DEFAULT_MAX_ATOMS",
    "SignatureTooLarge",
    "NotExplicit",
    "SolveOptions",
    "enumerate_interpretations",
    "enumerate_x5",
    "minimal_models_explicit",
    "answer_sets",
    "equilibrium_models",
    "equilibrium_models_ferraris",
]

DEFAULT_MAX_ATOMS = 12


class SignatureTooLarge(ValueError):
    """Enumeration over this many atoms was refused; raise the guard to force it."""


class NotExplicit(ValueError):
    """A program containing default negation was passed where an explicit one is required."""


@dataclass(frozen=True)
class SolveOptions:
    """Knobs shared by all enumeration entry points.

    ``signature`` extends the atoms found in the input (it never shrinks
    them).  ``parallel`` is a thread count; 1 means sequential.
    """

    signature: Optional[frozenset] = None
    max_atoms: int = DEFAULT_MAX_ATOMS
    parallel: int = 1

    @staticmethod
    def make(signature: Optional[Iterable[Atom]] = None,
             max_atoms: int = DEFAULT_MAX_ATOMS,
             parallel: int = 1) -> "SolveOptions":
        sig = frozenset(signature) if signature is not None else None
        return SolveOptions(signature=sig, max_atoms=max_atoms, parallel=parallel)


def _effective_signature(opts: Optional[SolveOptions], *inputs) -> List[Atom]:
    opts = opts or SolveOptions()
    sig = set()
    for x in inputs:
        sig |= atoms(x)
    if opts.signature:
        sig |= set(opts.signature)
    ordered = sorted(sig)
    if len(ordered) > opts.max_atoms:
        raise SignatureTooLarge(
            f"signature has {len(ordered)} atoms, guard allows {opts.max_atoms}")
    return ordered


# ---------------------------------------------------------------------------
# Candidate spaces

# Per-atom states in enumeration order: absent < positive < negative.
_TRI_STATES = (0, 1, -1)

# Five-valued per-atom states in enumeration order.
_FIVE_STATES = (0, 1, 2, -1, -2)


def enumerate_interpretations(signature: Iterable[Atom],
                              max_atoms: int = DEFAULT_MAX_ATOMS) -> Iterator[Interpretation]:
    """All 3^n consistent literal sets over the signature, in a fixed order."""
    ordered = sorted(set(signature))
    if len(ordered) > max_atoms:
        raise SignatureTooLarge(
            f"signature has {len(ordered)} atoms, guard allows {max_atoms}")
    for states in itertools.product(_TRI_STATES, repeat=len(ordered)):
        lits = [ExplicitLiteral(a, negated=s < 0)
                for a, s in zip(ordered, states) if s != 0]
        yield Interpretation(lits)


def enumerate_x5(signature: Iterable[Atom],
                 max_atoms: int = DEFAULT_MAX_ATOMS) -> Iterator[X5Interpretation]:
    """All 5^n here/there pairs over the signature, in a fixed order."""
    ordered = sorted(set(signature))
    if len(ordered) > max_atoms:
        raise SignatureTooLarge(
            f"signature has {len(ordered)} atoms, guard allows {max_atoms}")
    for states in itertools.product(_FIVE_STATES, repeat=len(ordered)):
        here = []
        there = []
        for a, v in zip(ordered, states):
            if v == 0:
                continue
            lit = ExplicitLiteral(a, negated=v < 0)
            there.append(lit)
            if abs(v) == 2:
                here.append(lit)
        yield X5Interpretation(Interpretation(here), Interpretation(there))


def _strict_subsets(t: Interpretation) -> Iterator[frozenset]:
    lits = sorted(t.literals)
    for k in range(len(lits)):
        for combo in itertools.combinations(lits, k):
            yield frozenset(combo)


def _scan(candidates: Iterable, keep: Callable, parallel: int) -> list:
    """Filter candidates by a pure predicate, preserving candidate order."""
    if parallel > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            flagged = pool.map(lambda c: (keep(c), c), candidates, chunksize=16)
            return [c for ok, c in flagged if ok]
    return [c for c in candidates if keep(c)]


# ---------------------------------------------------------------------------
# Engines


def _models_rule_wise(t: frozenset, rules: Sequence[Rule]) -> bool:
    return all((not _nsat(t, r.body)) or _nsat(t, r.head) for r in rules)


def minimal_models_explicit(p: Program, opts: Optional[SolveOptions] = None) -> List[Interpretation]:
    """Inclusion-minimal models of an explicit program."""
    if not is_explicit(p):
        raise NotExplicit("minimal_models_explicit requires a program without default negation")
    opts = opts or SolveOptions()
    sig = _effective_signature(opts, p)
    rules = tuple(p)
    models = [t for t in enumerate_interpretations(sig, opts.max_atoms)
              if _models_rule_wise(t.literals, rules)]
    model_sets = [m.literals for m in models]
    return [m for m in models
            if not any(other < m.literals for other in model_sets)]


def answer_sets(p: Program, opts: Optional[SolveOptions] = None) -> List[Interpretation]:
    """All literal sets that are minimal models of their own reduct."""
    opts = opts or SolveOptions()
    sig = _effective_signature(opts, p)

    def is_answer_set(t: Interpretation) -> bool:
        rules = tuple(reduct_program(p, t))
        if not _models_rule_wise(t.literals, rules):
            return False
        return not any(_models_rule_wise(s, rules) for s in _strict_subsets(t))

    return _scan(enumerate_interpretations(sig, opts.max_atoms), is_answer_set, opts.parallel)


def equilibrium_models(gamma: Union[Theory, Program],
                       opts: Optional[SolveOptions] = None) -> List[Interpretation]:
    """Total models admitting no strictly smaller here world."""
    opts = opts or SolveOptions()
    sig = _effective_signature(opts, gamma)
    formulas = _theory_formulas(gamma)

    def in_equilibrium(t: Interpretation) -> bool:
        tl = t.literals
        if not all(_sat(tl, tl, f) for f in formulas):
            return False
        return not any(all(_sat(h, tl, f) for f in formulas)
                       for h in _strict_subsets(t))

    return _scan(enumerate_interpretations(sig, opts.max_atoms), in_equilibrium, opts.parallel)


def equilibrium_models_ferraris(gamma: Union[Theory, Program],
                                opts: Optional[SolveOptions] = None) -> List[Interpretation]:
    """Equilibrium models computed as minimal models of the positive reduct."""
    opts = opts or SolveOptions()
    sig = _effective_signature(opts, gamma)
    formulas = _theory_formulas(gamma)

    def in_equilibrium(t: Interpretation) -> bool:
        reduced = [f for f in ferraris_theory(formulas, t)]
        tl = t.literals
        if not all(_sat(tl, tl, f) for f in reduced):
            return False
        return not any(all(_sat(h, h, f) for f in reduced)
                       for h in _strict_subsets(t))

    return _scan(enumerate_interpretations(sig, opts.max_atoms), in_equilibrium, opts.parallel)


def _theory_formulas(gamma: Union[Theory, Program]) -> tuple:
    if isinstance(gamma, Program):
        return tuple(r.as_implication() for r in gamma)
    return tuple(gamma)
