"""Propositional defeasible reasoning, the classical baseline.

Formulas extend the compound-attribute grammar with material implication,
biconditional, and the two constants:

    formula := iff ;
    iff     := impl { "<->" impl } ;
    impl    := disj [ "->" impl ] ;
    disj    := conj { "|" conj } ;
    conj    := neg { "&" neg } ;
    neg     := "!" neg | atom ;
    atom    := IDENT | QUOTED | "TOP" | "BOT" | "(" formula ")" .

``->`` associates to the right, the other binary connectives to the left.
Atoms named TOP or BOT must be quoted. A statement line is either
``phi |~ psi`` (a defeasible conditional) or a bare formula (a classical
assertion; ``phi -> psi`` is one such formula). A classical assertion of
``alpha`` is carried as the conditional ``!alpha |~ BOT``, whose material
form is equivalent to ``alpha``: exceptionality then files it above every
finite rank, which is exactly where non-negotiable knowledge belongs.

Interpretations attach valuations to preference-ordered states. Every
finitely-ranked interpretation turns into a ranked context on the same
skeleton, which is what ties this module to the rest of the package.
"""

import math
from dataclasses import dataclass
from typing import Union

from .context import FormalContext
from .errors import (
    BindingError,
    CapacityError,
    StructureError,
    UnsupportedStateError,
)
from .formula import (
    AMP,
    ARROW,
    BANG,
    DARROW,
    END,
    IDENT,
    LPAREN,
    PIPE,
    QUOTED,
    RPAREN,
    SQUIGGLE,
    TokenStream,
    format_atom_name,
    tokenize,
)
from .limits import enumeration_cap
from .order import PreferentialContext, RankedContext, RankingFunction


@dataclass(frozen=True)
class Top:
    def __str__(self):
        return "TOP"


@dataclass(frozen=True)
class Bot:
    def __str__(self):
        return "BOT"


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return format_prop_formula(self)


@dataclass(frozen=True)
class Not:
    operand: "PropFormula"

    def __str__(self):
        return format_prop_formula(self)


@dataclass(frozen=True)
class And:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self):
        return format_prop_formula(self)


@dataclass(frozen=True)
class Or:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self):
        return format_prop_formula(self)


@dataclass(frozen=True)
class Implies:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self):
        return format_prop_formula(self)


@dataclass(frozen=True)
class Iff:
    left: "PropFormula"
    right: "PropFormula"

    def __str__(self):
        return format_prop_formula(self)


PropFormula = Union[Top, Bot, Atom, Not, And, Or, Implies, Iff]

DEFEASIBLE = "defeasible"
CLASSICAL = "classical"


@dataclass(frozen=True)
class PropConditional:
    """A defeasible ``phi |~ psi`` or an encoded classical assertion."""

    antecedent: PropFormula
    consequent: PropFormula
    kind: str = DEFEASIBLE

    def __post_init__(self):
        if self.kind not in (DEFEASIBLE, CLASSICAL):
            raise ValueError(f"unknown statement kind {self.kind!r}")

    @classmethod
    def defeasible(cls, antecedent, consequent):
        return cls(antecedent, consequent, DEFEASIBLE)

    @classmethod
    def assertion(cls, statement):
        """Encode a classical assertion of ``statement``."""
        return cls(Not(statement), Bot(), CLASSICAL)

    def material(self):
        """The material implication: antecedent -> consequent."""
        return Implies(self.antecedent, self.consequent)

    def asserted(self):
        """The plain formula behind a classical assertion."""
        if self.kind != CLASSICAL:
            raise StructureError("only classical statements assert a formula")
        if isinstance(self.antecedent, Not) and isinstance(self.consequent, Bot):
            return self.antecedent.operand
        return self.material()

    def __str__(self):
        if self.kind == CLASSICAL:
            return format_prop_formula(self.asserted())
        return (
            f"{format_prop_formula(self.antecedent)} |~ "
            f"{format_prop_formula(self.consequent)}"
        )


# --- parsing ----------------------------------------------------------------


def _parse_iff(stream):
    left = _parse_impl(stream)
    while stream.peek().kind == DARROW:
        stream.advance()
        left = Iff(left, _parse_impl(stream))
    return left


def _parse_impl(stream):
    left = _parse_disj(stream)
    if stream.peek().kind == ARROW:
        stream.advance()
        return Implies(left, _parse_impl(stream))
    return left


def _parse_disj(stream):
    left = _parse_conj(stream)
    while stream.peek().kind == PIPE:
        stream.advance()
        left = Or(left, _parse_conj(stream))
    return left


def _parse_conj(stream):
    left = _parse_neg(stream)
    while stream.peek().kind == AMP:
        stream.advance()
        left = And(left, _parse_neg(stream))
    return left


def _parse_neg(stream):
    if stream.peek().kind == BANG:
        stream.advance()
        return Not(_parse_neg(stream))
    return _parse_atom(stream)


def _parse_atom(stream):
    token = stream.peek()
    if token.kind == IDENT:
        stream.advance()
        if token.value == "TOP":
            return Top()
        if token.value == "BOT":
            return Bot()
        return Atom(token.value)
    if token.kind == QUOTED:
        stream.advance()
        return Atom(token.value)
    if token.kind == LPAREN:
        stream.advance()
        inner = _parse_iff(stream)
        stream.expect(RPAREN)
        return inner
    raise stream.error(token, "an atom, constant, '!', or '('")


def parse_prop_formula(text):
    """Parse one propositional formula."""
    stream = TokenStream(tokenize(text))
    result = _parse_iff(stream)
    stream.expect(END)
    return result


def parse_prop_statement(text):
    """Parse ``phi |~ psi`` or a bare formula (a classical assertion)."""
    stream = TokenStream(tokenize(text))
    first = _parse_iff(stream)
    token = stream.peek()
    if token.kind == SQUIGGLE:
        stream.advance()
        second = _parse_iff(stream)
        stream.expect(END)
        return PropConditional.defeasible(first, second)
    if token.kind == END:
        return PropConditional.assertion(first)
    raise stream.error(token, "'|~' or end of statement")


# --- printing ---------------------------------------------------------------

_IFF_PREC = 1
_IMPL_PREC = 2
_OR_PREC = 3
_AND_PREC = 4
_NOT_PREC = 5
_ATOM_PREC = 9

_RESERVED = ("TOP", "BOT")


def format_prop_formula(formula):
    """Canonical text form; parse_prop_formula inverts it."""
    text, _ = _format(formula)
    return text


def _wrap(child, parent_prec, *, strict):
    text, prec = _format(child)
    if prec < parent_prec or (not strict and prec == parent_prec):
        return f"({text})"
    return text


def _format(formula):
    if isinstance(formula, Top):
        return "TOP", _ATOM_PREC
    if isinstance(formula, Bot):
        return "BOT", _ATOM_PREC
    if isinstance(formula, Atom):
        return format_atom_name(formula.name, reserved=_RESERVED), _ATOM_PREC
    if isinstance(formula, Not):
        return "!" + _wrap(formula.operand, _NOT_PREC, strict=False), _NOT_PREC
    if isinstance(formula, And):
        left = _wrap(formula.left, _AND_PREC, strict=True)
        right = _wrap(formula.right, _AND_PREC, strict=False)
        return f"{left} & {right}", _AND_PREC
    if isinstance(formula, Or):
        left = _wrap(formula.left, _OR_PREC, strict=True)
        right = _wrap(formula.right, _OR_PREC, strict=False)
        return f"{left} | {right}", _OR_PREC
    if isinstance(formula, Implies):
        left = _wrap(formula.left, _IMPL_PREC, strict=False)
        right = _wrap(formula.right, _IMPL_PREC, strict=True)
        return f"{left} -> {right}", _IMPL_PREC
    if isinstance(formula, Iff):
        left = _wrap(formula.left, _IFF_PREC, strict=True)
        right = _wrap(formula.right, _IFF_PREC, strict=False)
        return f"{left} <-> {right}", _IFF_PREC
    raise TypeError(f"not a propositional formula: {formula!r}")


# --- semantics --------------------------------------------------------------


def atom_names(formula):
    """Set of atom names the formula mentions."""
    if isinstance(formula, (Top, Bot)):
        return set()
    if isinstance(formula, Atom):
        return {formula.name}
    if isinstance(formula, Not):
        return atom_names(formula.operand)
    if isinstance(formula, (And, Or, Implies, Iff)):
        return atom_names(formula.left) | atom_names(formula.right)
    raise TypeError(f"not a propositional formula: {formula!r}")


def prop_eval(valuation, formula):
    """Truth value under a total valuation (a mapping atom name -> bool)."""
    if isinstance(formula, Top):
        return True
    if isinstance(formula, Bot):
        return False
    if isinstance(formula, Atom):
        try:
            return bool(valuation[formula.name])
        except KeyError:
            raise BindingError(f"valuation has no atom {formula.name!r}") from None
    if isinstance(formula, Not):
        return not prop_eval(valuation, formula.operand)
    if isinstance(formula, And):
        return prop_eval(valuation, formula.left) and prop_eval(
            valuation, formula.right
        )
    if isinstance(formula, Or):
        return prop_eval(valuation, formula.left) or prop_eval(
            valuation, formula.right
        )
    if isinstance(formula, Implies):
        return not prop_eval(valuation, formula.left) or prop_eval(
            valuation, formula.right
        )
    if isinstance(formula, Iff):
        return prop_eval(valuation, formula.left) == prop_eval(
            valuation, formula.right
        )
    raise TypeError(f"not a propositional formula: {formula!r}")


def all_valuations(names):
    """Yield every valuation over the given atom names, counting binary."""
    names = list(names)
    for mask in range(1 << len(names)):
        yield {
            name: bool(mask >> (len(names) - 1 - i) & 1)
            for i, name in enumerate(names)
        }


def prop_entails(premises, conclusion, *, max_atoms=None):
    """Classical entailment by exhausting valuations over the mentioned atoms."""
    premises = list(premises)
    names = set(atom_names(conclusion))
    for p in premises:
        names |= atom_names(p)
    names = sorted(names)
    cap = enumeration_cap(max_atoms)
    if len(names) > cap:
        raise CapacityError(
            f"entailment check enumerates 2**{len(names)} valuations, "
            f"cap is 2**{cap}"
        )
    for valuation in all_valuations(names):
        if all(prop_eval(valuation, p) for p in premises) and not prop_eval(
            valuation, conclusion
        ):
            return False
    return True


# --- interpretations --------------------------------------------------------

INFINITE_RANK = math.inf


def _checked_states(atoms, states, valuations):
    atoms = tuple(atoms)
    if len(set(atoms)) != len(atoms):
        raise StructureError("duplicate atom names")
    states = tuple(states)
    if len(set(states)) != len(states):
        raise StructureError("duplicate state labels")
    valuations = tuple(dict(v) for v in valuations)
    if len(valuations) != len(states):
        raise StructureError(
            f"expected {len(states)} valuations, got {len(valuations)}"
        )
    for label, v in zip(states, valuations):
        if set(v) != set(atoms):
            raise StructureError(
                f"state {label!r} must value exactly the declared atoms"
            )
    return atoms, states, valuations


class PreferentialInterpretation:
    """States labelled with valuations, plus a strict preference order."""

    __slots__ = ("_atoms", "_states", "_valuations", "_order")

    def __init__(self, atoms, states, valuations, order):
        atoms, states, valuations = _checked_states(atoms, states, valuations)
        if order.size != len(states):
            raise StructureError(
                f"order covers {order.size} elements, interpretation has "
                f"{len(states)} states"
            )
        self._atoms = atoms
        self._states = states
        self._valuations = valuations
        self._order = order

    @property
    def atoms(self):
        return self._atoms

    @property
    def states(self):
        return self._states

    @property
    def valuations(self):
        return self._valuations

    @property
    def order(self):
        return self._order

    def state_bits(self, formula):
        """Bitset of states whose valuation satisfies the formula."""
        bits = 0
        for i, v in enumerate(self._valuations):
            if prop_eval(v, formula):
                bits |= 1 << i
        return bits

    def satisfies(self, conditional):
        """Do the most preferred antecedent states all satisfy the consequent?"""
        antecedent_states = self.state_bits(conditional.antecedent)
        minimal = self._order.minimise(antecedent_states)
        consequent_states = self.state_bits(conditional.consequent)
        return minimal & ~consequent_states == 0


class RankedInterpretation:
    """States labelled with valuations, plus ranks from 0 upward or infinite.

    The finite ranks must be convex. A state is strictly preferred to
    another exactly when its rank is smaller; infinite-rank states are the
    least preferred of all.
    """

    __slots__ = ("_atoms", "_states", "_valuations", "_ranks")

    def __init__(self, atoms, states, valuations, ranks):
        atoms, states, valuations = _checked_states(atoms, states, valuations)
        ranks = tuple(ranks)
        if len(ranks) != len(states):
            raise StructureError(f"expected {len(states)} ranks, got {len(ranks)}")
        finite = []
        for r in ranks:
            if r == INFINITE_RANK:
                continue
            if not isinstance(r, int) or r < 0:
                raise StructureError(
                    f"ranks must be non-negative ints or INFINITE_RANK, got {r!r}"
                )
            finite.append(r)
        if finite and set(finite) != set(range(max(finite) + 1)):
            raise StructureError(
                f"finite ranks {sorted(set(finite))} leave gaps"
            )
        self._atoms = atoms
        self._states = states
        self._valuations = valuations
        self._ranks = ranks

    @property
    def atoms(self):
        return self._atoms

    @property
    def states(self):
        return self._states

    @property
    def valuations(self):
        return self._valuations

    @property
    def ranks(self):
        return self._ranks

    def state_bits(self, formula):
        bits = 0
        for i, v in enumerate(self._valuations):
            if prop_eval(v, formula):
                bits |= 1 << i
        return bits

    def satisfies(self, conditional):
        """Do the least-ranked antecedent states all satisfy the consequent?"""
        antecedent_states = self.state_bits(conditional.antecedent)
        if antecedent_states == 0:
            return True
        members = [i for i in range(len(self._states)) if antecedent_states >> i & 1]
        least = min(self._ranks[i] for i in members)
        consequent_states = self.state_bits(conditional.consequent)
        return all(
            consequent_states >> i & 1
            for i in members
            if self._ranks[i] == least
        )


def pref_satisfies(interpretation, conditional):
    """Satisfaction for either interpretation flavour."""
    return interpretation.satisfies(conditional)


# --- base rank and rational closure ------------------------------------------


@dataclass(frozen=True)
class BaseRankResult:
    """Statements stratified by exceptionality, plus the never-recovering ones."""

    strata: tuple
    infinite: tuple

    @property
    def height(self):
        return len(self.strata)


def _unique(statements):
    items = []
    seen = set()
    for s in statements:
        if s not in seen:
            seen.add(s)
            items.append(s)
    return items


def base_rank(statements, *, max_atoms=None):
    """Stratify statements by iterated exceptionality.

    A statement is exceptional for a set when the set's material forms
    entail the negation of its antecedent. Rank 0 keeps the never
    exceptional statements, each next rank those that stop being
    exceptional once earlier ranks are removed; statements exceptional
    forever are reported separately (classical assertions end up there).
    """
    current = _unique(statements)
    strata = []
    while True:
        materials = [s.material() for s in current]
        nxt = [
            s
            for s in current
            if prop_entails(materials, Not(s.antecedent), max_atoms=max_atoms)
        ]
        if len(nxt) == len(current):
            break
        strata.append(tuple(s for s in current if s not in set(nxt)))
        current = nxt
    return BaseRankResult(tuple(strata), tuple(current))


def rc_decision(statements, query, *, max_atoms=None):
    """Rational-closure verdict for a query, with the strata count dropped.

    Removes the lowest remaining stratum while the leftover material forms
    make the query's antecedent impossible, then checks whether they entail
    the query's material form. The second component counts the strata
    removed: the rank where the antecedent stops being exceptional.
    """
    ranked = base_rank(statements, max_atoms=max_atoms)
    fixed = [s.material() for s in ranked.infinite]
    live = [[s.material() for s in level] for level in ranked.strata]
    negated = Not(query.antecedent)
    dropped = 0
    while live and prop_entails(
        fixed + [m for level in live for m in level], negated, max_atoms=max_atoms
    ):
        live.pop(0)
        dropped += 1
    premises = fixed + [m for level in live for m in level]
    verdict = prop_entails(premises, query.material(), max_atoms=max_atoms)
    return verdict, dropped


def rc_entails(statements, query, *, max_atoms=None):
    """Is the query in the rational closure of the statements?"""
    verdict, _ = rc_decision(statements, query, max_atoms=max_atoms)
    return verdict


# --- derived contexts ---------------------------------------------------------


def _derived_parts(interpretation):
    objects = tuple(str(s) for s in interpretation.states)
    if len(set(objects)) != len(objects):
        raise StructureError("state labels collide once written out as names")
    rows = []
    for v in interpretation.valuations:
        row = 0
        for j, atom in enumerate(interpretation.atoms):
            if v[atom]:
                row |= 1 << j
        rows.append(row)
    return FormalContext(objects, interpretation.atoms, rows)


def derive_preferential_context(interpretation):
    """One object per state, one attribute per atom, the order carried over."""
    context = _derived_parts(interpretation)
    return PreferentialContext(context, interpretation.order)


def derive_ranked_context(interpretation):
    """Ranked variant; every state must carry a finite rank."""
    for label, r in zip(interpretation.states, interpretation.ranks):
        if r == INFINITE_RANK:
            raise UnsupportedStateError(
                f"state {label!r} has infinite rank and no place in a "
                "ranked context"
            )
    context = _derived_parts(interpretation)
    return RankedContext(context, RankingFunction(interpretation.ranks))
