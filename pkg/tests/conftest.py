import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from eqlx import (
    BOT,
    TOP,
    And,
    Atom,
    AtomRef,
    DNeg,
    Impl,
    Interpretation,
    Or,
    Program,
    Rule,
    X5Interpretation,
    XNeg,
)

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
)
settings.load_profile("default")

ATOMS = (Atom("p"), Atom("q"), Atom("r"))

FIVE_VALUES = (-2, -1, 0, 1, 2)


def formula_strategy(allow_impl=True, atom_pool=ATOMS, max_leaves=6):
    leaves = st.sampled_from([AtomRef(a) for a in atom_pool] + [BOT, TOP])
    nodes = [lambda ch: st.builds(XNeg, ch),
             lambda ch: st.builds(DNeg, ch),
             lambda ch: st.builds(And, ch, ch),
             lambda ch: st.builds(Or, ch, ch)]
    if allow_impl:
        nodes.append(lambda ch: st.builds(Impl, ch, ch))
    return st.recursive(leaves, lambda ch: st.one_of(*[n(ch) for n in nodes]),
                        max_leaves=max_leaves)


formulas = formula_strategy()
nested_formulas = formula_strategy(allow_impl=False)


def x5_strategy(atom_pool=ATOMS):
    return st.builds(
        X5Interpretation.from_values,
        st.fixed_dictionaries({a: st.sampled_from(FIVE_VALUES) for a in atom_pool}),
    )


def interpretation_strategy(atom_pool=ATOMS):
    def build(states):
        from eqlx import ExplicitLiteral
        lits = [ExplicitLiteral(a, negated=s < 0)
                for a, s in states.items() if s != 0]
        return Interpretation(lits)

    return st.builds(build, st.fixed_dictionaries(
        {a: st.sampled_from((-1, 0, 1)) for a in atom_pool}))


x5_interps = x5_strategy()
interpretations = interpretation_strategy()

rules = st.builds(Rule, nested_formulas, nested_formulas)
programs = st.builds(Program, st.lists(rules, max_size=3))
