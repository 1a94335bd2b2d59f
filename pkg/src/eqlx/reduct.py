"""Reduct constructions and constant simplification.

Two reducts are provided.  ``reduct_nested`` replaces every default-negated
subexpression of a nested expression by a constant according to the reference
literal set, producing an explicit result.  ``ferraris_plus``/
``ferraris_minus`` are the dual transformations for arbitrary formulas: the
positive one bottoms out unsatisfied subformulas, the negative one tops out
unfalsified ones, and explicit negation swaps between them.
"""

from __future__ import annotations

from .core import (
    BOT,
    TOP,
    And,
    AtomRef,
    Bot,
    DNeg,
    Formula,
    Impl,
    Interpretation,
    NotNested,
    Or,
    Program,
    Rule,
    Top,
    XNeg,
    is_nested,
)
from .semantics import _fals, _nsat, _sat

__all__ = [
    "reduct_nested",
    "reduct_rule",
    "reduct_program",
    "ferraris_plus",
    "ferraris_minus",
    "ferraris_theory",
    "simplify_constants",
]


def reduct_nested(f: Formula, t: Interpretation) -> Formula:
    """Reduct of a nested expression: each ``not G`` becomes ``bot`` or ``top``."""
    if not is_nested(f):
        raise NotNested(f"the reduct is only defined on nested expressions: {f!r}")
    return _reduct(f, t.literals)


def _reduct(f: Formula, t) -> Formula:
    if isinstance(f, (AtomRef, Top, Bot)):
        return f
    if isinstance(f, And):
        return And(_reduct(f.left, t), _reduct(f.right, t))
    if isinstance(f, Or):
        return Or(_reduct(f.left, t), _reduct(f.right, t))
    if isinstance(f, XNeg):
        return XNeg(_reduct(f.child, t))
    if isinstance(f, DNeg):
        return BOT if _nsat(t, f.child) else TOP
    raise NotNested(f"the reduct is only defined on nested expressions: {f!r}")


def reduct_rule(r: Rule, t: Interpretation) -> Rule:
    return Rule(reduct_nested(r.body, t), reduct_nested(r.head, t))


def reduct_program(p: Program, t: Interpretation) -> Program:
    """Rule-wise reduct; the result is an explicit program."""
    return Program(reduct_rule(r, t) for r in p)


# ---------------------------------------------------------------------------
# Dual reduct for arbitrary formulas


def ferraris_plus(phi: Formula, t: Interpretation, rewrite_impl: bool = False) -> Formula:
    """Positive reduct of an arbitrary formula with respect to ``t``.

    With ``rewrite_impl`` every implication ``a -> b`` is first replaced by
    ``not a | b``; the direct implication case is then never exercised.  The
    two routes agree at the total world but not below it (the rewrite is not
    an equivalence away from total worlds), so only the direct route is used
    for equilibrium computation.
    """
    if rewrite_impl:
        phi = _impl_free(phi)
    return _fplus(phi, t.literals)


def ferraris_minus(phi: Formula, t: Interpretation, rewrite_impl: bool = False) -> Formula:
    """Negative reduct, dual to :func:`ferraris_plus`."""
    if rewrite_impl:
        phi = _impl_free(phi)
    return _fminus(phi, t.literals)


def ferraris_theory(gamma, t: Interpretation) -> list:
    """Positive reduct of every member of a theory."""
    return [ferraris_plus(f, t) for f in gamma]


def _impl_free(f: Formula) -> Formula:
    if isinstance(f, Impl):
        return Or(DNeg(_impl_free(f.left)), _impl_free(f.right))
    if isinstance(f, And):
        return And(_impl_free(f.left), _impl_free(f.right))
    if isinstance(f, Or):
        return Or(_impl_free(f.left), _impl_free(f.right))
    if isinstance(f, XNeg):
        return XNeg(_impl_free(f.child))
    if isinstance(f, DNeg):
        return DNeg(_impl_free(f.child))
    return f


def _fplus(f: Formula, t) -> Formula:
    if not _sat(t, t, f):
        return BOT
    if isinstance(f, (AtomRef, Top)):
        return f
    if isinstance(f, And):
        return And(_fplus(f.left, t), _fplus(f.right, t))
    if isinstance(f, Or):
        return Or(_fplus(f.left, t), _fplus(f.right, t))
    if isinstance(f, Impl):
        return Or(DNeg(_fplus(f.left, t)), _fplus(f.right, t))
    if isinstance(f, DNeg):
        return DNeg(_fplus(f.child, t))
    if isinstance(f, XNeg):
        return XNeg(_fminus(f.child, t))
    raise TypeError(f"cannot reduce {type(f).__name__}")


def _fminus(f: Formula, t) -> Formula:
    if not _fals(t, t, f):
        return TOP
    if isinstance(f, (AtomRef, Bot)):
        return f
    if isinstance(f, And):
        return And(_fminus(f.left, t), _fminus(f.right, t))
    if isinstance(f, Or):
        return Or(_fminus(f.left, t), _fminus(f.right, t))
    if isinstance(f, Impl):
        return _fminus(f.right, t)
    if isinstance(f, DNeg):
        return BOT
    if isinstance(f, XNeg):
        return XNeg(_fplus(f.child, t))
    raise TypeError(f"cannot reduce {type(f).__name__}")


# ---------------------------------------------------------------------------
# Constant folding


def simplify_constants(phi: Formula) -> Formula:
    """Fold ``top``/``bot`` through connectives and collapse double ``~``.

    Every rule applied here preserves the five-valued value at every
    interpretation, so results may be substituted for their originals in any
    context.
    """
    if isinstance(phi, And):
        left = simplify_constants(phi.left)
        right = simplify_constants(phi.right)
        if isinstance(left, Bot) or isinstance(right, Bot):
            return BOT
        if isinstance(left, Top):
            return right
        if isinstance(right, Top):
            return left
        return And(left, right)
    if isinstance(phi, Or):
        left = simplify_constants(phi.left)
        right = simplify_constants(phi.right)
        if isinstance(left, Top) or isinstance(right, Top):
            return TOP
        if isinstance(left, Bot):
            return right
        if isinstance(right, Bot):
            return left
        return Or(left, right)
    if isinstance(phi, XNeg):
        child = simplify_constants(phi.child)
        if isinstance(child, Top):
            return BOT
        if isinstance(child, Bot):
            return TOP
        if isinstance(child, XNeg):
            return child.child
        return XNeg(child)
    if isinstance(phi, DNeg):
        child = simplify_constants(phi.child)
        if isinstance(child, Top):
            return BOT
        if isinstance(child, Bot):
            return TOP
        return DNeg(child)
    if isinstance(phi, Impl):
        left = simplify_constants(phi.left)
        right = simplify_constants(phi.right)
        if isinstance(right, Top):
            return TOP
        if isinstance(left, Bot):
            return TOP
        if isinstance(left, Top):
            return right
        return Impl(left, right)
    return phi
