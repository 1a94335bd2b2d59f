"""Evaluation relations for nested expressions and arbitrary formulas.

Three independent routes are implemented on purpose:

* ``sat``/``fals`` — mutually recursive satisfaction and falsification of
  nested expressions on a single literal set;
* ``x5_sat``/``x5_fals`` — satisfaction and falsification of arbitrary
  formulas on a here/there pair;
* ``value5`` — the five-valued valuation, which is also the only place the
  N5 variant (Nelson-style strong negation) is defined.

The relations connecting the three routes are enforced by the test suite,
not by sharing code between them.  A fourth, deliberately defective mode
(``classical_sat``) reads ``~`` as plain non-satisfaction; it exists to
exhibit why that reading is unsuitable.
"""

from __future__ import annotations

from enum import Enum
from typing import FrozenSet, Union

from .core import (
    BOT,
    And,
    AtomRef,
    Bot,
    DNeg,
    ExplicitLiteral,
    FiveValue,
    Formula,
    Impl,
    Interpretation,
    NotNested,
    Or,
    Program,
    Theory,
    Top,
    X5Interpretation,
    XNeg,
    is_nested,
)

__all__ = [
    "EvalMode",
    "sat",
    "fals",
    "x5_sat",
    "x5_fals",
    "value5",
    "classical_sat",
    "is_model",
]

_LitSet = FrozenSet[ExplicitLiteral]


class EvalMode(Enum):
    X5 = "x5"
    N5 = "n5"
    CLASSICAL = "classical"


# ---------------------------------------------------------------------------
# Single-world satisfaction/falsification of nested expressions


def sat(t: Interpretation, f: Formula) -> bool:
    """Does the literal set satisfy the nested expression?"""
    if not is_nested(f):
        raise NotNested(f"sat is only defined on nested expressions: {f!r}")
    return _nsat(t.literals, f)


def fals(t: Interpretation, f: Formula) -> bool:
    """Does the literal set falsify the nested expression?"""
    if not is_nested(f):
        raise NotNested(f"fals is only defined on nested expressions: {f!r}")
    return _nfals(t.literals, f)


def _nsat(t: _LitSet, f: Formula) -> bool:
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, AtomRef):
        return ExplicitLiteral(f.atom) in t
    if isinstance(f, And):
        return _nsat(t, f.left) and _nsat(t, f.right)
    if isinstance(f, Or):
        return _nsat(t, f.left) or _nsat(t, f.right)
    if isinstance(f, XNeg):
        return _nfals(t, f.child)
    if isinstance(f, DNeg):
        return not _nsat(t, f.child)
    raise NotNested(f"sat is only defined on nested expressions: {f!r}")


def _nfals(t: _LitSet, f: Formula) -> bool:
    if isinstance(f, Top):
        return False
    if isinstance(f, Bot):
        return True
    if isinstance(f, AtomRef):
        return ExplicitLiteral(f.atom, negated=True) in t
    if isinstance(f, And):
        return _nfals(t, f.left) or _nfals(t, f.right)
    if isinstance(f, Or):
        return _nfals(t, f.left) and _nfals(t, f.right)
    if isinstance(f, XNeg):
        return _nsat(t, f.child)
    if isinstance(f, DNeg):
        return _nsat(t, f.child)
    raise NotNested(f"fals is only defined on nested expressions: {f!r}")


# ---------------------------------------------------------------------------
# Two-world satisfaction/falsification of arbitrary formulas


def x5_sat(m: X5Interpretation, phi: Formula) -> bool:
    return _sat(m.here.literals, m.there.literals, phi)


def x5_fals(m: X5Interpretation, phi: Formula) -> bool:
    return _fals(m.here.literals, m.there.literals, phi)


def _sat(h: _LitSet, t: _LitSet, f: Formula) -> bool:
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, AtomRef):
        return ExplicitLiteral(f.atom) in h
    if isinstance(f, And):
        return _sat(h, t, f.left) and _sat(h, t, f.right)
    if isinstance(f, Or):
        return _sat(h, t, f.left) or _sat(h, t, f.right)
    if isinstance(f, XNeg):
        return _fals(h, t, f.child)
    if isinstance(f, DNeg):
        # satisfied exactly when the there world never satisfies the child
        return not _sat(t, t, f.child)
    if isinstance(f, Impl):
        here_ok = (not _sat(h, t, f.left)) or _sat(h, t, f.right)
        if h is t or h == t:
            return here_ok
        return here_ok and ((not _sat(t, t, f.left)) or _sat(t, t, f.right))
    raise TypeError(f"cannot evaluate {type(f).__name__}")


def _fals(h: _LitSet, t: _LitSet, f: Formula) -> bool:
    if isinstance(f, Top):
        return False
    if isinstance(f, Bot):
        return True
    if isinstance(f, AtomRef):
        return ExplicitLiteral(f.atom, negated=True) in h
    if isinstance(f, And):
        return _fals(h, t, f.left) or _fals(h, t, f.right)
    if isinstance(f, Or):
        return _fals(h, t, f.left) and _fals(h, t, f.right)
    if isinstance(f, XNeg):
        return _sat(h, t, f.child)
    if isinstance(f, DNeg):
        return _sat(t, t, f.child)
    if isinstance(f, Impl):
        return _sat(t, t, f.left) and _fals(h, t, f.right)
    raise TypeError(f"cannot evaluate {type(f).__name__}")


# ---------------------------------------------------------------------------
# Five-valued valuation (X5 and N5 modes)


def value5(m: X5Interpretation, phi: Formula, mode: EvalMode = EvalMode.X5) -> FiveValue:
    """Fold the five-valued tables over ``phi``.

    Atoms read 2/-2 when proved here, 1/-1 when only the there world commits,
    0 otherwise.  Conjunction is min, disjunction max, explicit negation sign
    flip.  The single table cell distinguishing N5 from X5 lives in
    ``_impl5``; default negation is evaluated as ``child -> bot`` so it picks
    up the mode automatically.
    """
    if mode not in (EvalMode.X5, EvalMode.N5):
        raise ValueError(f"value5 is defined for X5 and N5 modes, not {mode}")
    return FiveValue(_val(m, phi, mode))


def _impl5(a: int, b: int, mode: EvalMode) -> int:
    if a <= max(b, 0):
        return 2
    if mode is EvalMode.N5 and a == 1 and b == -2:
        return -1
    return b


def _val(m: X5Interpretation, f: Formula, mode: EvalMode) -> int:
    if isinstance(f, Bot):
        return -2
    if isinstance(f, Top):
        return 2
    if isinstance(f, AtomRef):
        return m.value_of(f.atom)
    if isinstance(f, And):
        return min(_val(m, f.left, mode), _val(m, f.right, mode))
    if isinstance(f, Or):
        return max(_val(m, f.left, mode), _val(m, f.right, mode))
    if isinstance(f, XNeg):
        return -_val(m, f.child, mode)
    if isinstance(f, DNeg):
        return _impl5(_val(m, f.child, mode), -2, mode)
    if isinstance(f, Impl):
        return _impl5(_val(m, f.left, mode), _val(m, f.right, mode), mode)
    raise TypeError(f"cannot evaluate {type(f).__name__}")


# ---------------------------------------------------------------------------
# Classical reading of the second negation (satisfaction only)


def classical_sat(m: X5Interpretation, phi: Formula) -> bool:
    """Here-and-there satisfaction with ``~`` read as non-satisfaction.

    No falsification relation exists under this reading, persistence fails,
    and ``not p -> ~p`` becomes a tautology; provided for comparison only.
    """
    return _csat(m.here.literals, m.there.literals, phi)


def _csat(h: _LitSet, t: _LitSet, f: Formula) -> bool:
    if isinstance(f, Top):
        return True
    if isinstance(f, Bot):
        return False
    if isinstance(f, AtomRef):
        return ExplicitLiteral(f.atom) in h
    if isinstance(f, And):
        return _csat(h, t, f.left) and _csat(h, t, f.right)
    if isinstance(f, Or):
        return _csat(h, t, f.left) or _csat(h, t, f.right)
    if isinstance(f, XNeg):
        return not _csat(h, t, f.child)
    if isinstance(f, DNeg):
        return _csat_impl(h, t, f.child, BOT)
    if isinstance(f, Impl):
        return _csat_impl(h, t, f.left, f.right)
    raise TypeError(f"cannot evaluate {type(f).__name__}")


def _csat_impl(h: _LitSet, t: _LitSet, left: Formula, right: Formula) -> bool:
    here_ok = (not _csat(h, t, left)) or _csat(h, t, right)
    there_ok = (not _csat(t, t, left)) or _csat(t, t, right)
    return here_ok and there_ok


# ---------------------------------------------------------------------------
# Models


def is_model(m: X5Interpretation, gamma: Union[Theory, Program]) -> bool:
    """Does ``m`` satisfy every member of the theory (rules as implications)?"""
    if isinstance(gamma, Program):
        return all(
            _sat(m.here.literals, m.there.literals, r.as_implication()) for r in gamma
        )
    return all(_sat(m.here.literals, m.there.literals, f) for f in gamma)
