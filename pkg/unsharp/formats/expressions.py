"""
Tense expressions over named propositions.

Grammar (binary operators are left-associative with equal precedence):

    expr    := operand ("'")* (BINOP operand ("'")*)*
    operand := name | X "(" expr ")" | phi "(" expr ")" | "(" X "*" Y ")" "(" expr ")" | "(" expr ")"
    BINOP   := ⊗ | & | ⇒ | => | → | -> | ⊙ | . | +
    X, Y    := P | F | H | G

A tense operator takes a family (the result of phi) or a proposition;
compositions (X*Y)(e) mean X(phi(Y(e))).
"""
from abc import ABC, abstractmethod
from collections.abc import Mapping
from dataclasses import dataclass

import pyparsing as pp

from unsharp.exceptions import ExpressionError
from unsharp.models.frame import Proposition, PropositionFamily, SetProposition
from unsharp.models.operators import TenseOperator
from unsharp.services.tense import TenseService

Value = SetProposition | PropositionFamily

SYMBOLS = {"⊗": "⊗", "&": "⊗", "⇒": "⇒", "=>": "⇒", "→": "→", "->": "→", "⊙": "⊙", ".": "⊙", "+": "+"}


class Node(ABC):
    """Base class of expression tree nodes."""

    @abstractmethod
    def evaluate(self, ev: "ExpressionEvaluator") -> Value:
        """Value of the subtree under the evaluator's propositions and tense service."""


@dataclass(frozen=True)
class Name(Node):
    name: str

    def evaluate(self, ev: "ExpressionEvaluator") -> Value:
        if self.name not in ev.props:
            raise ExpressionError(f"Unknown proposition {self.name!r}")
        return tuple((v,) for v in ev.props[self.name])


@dataclass(frozen=True)
class Supplement(Node):
    arg: Node

    def evaluate(self, ev: "ExpressionEvaluator") -> Value:
        value = self.arg.evaluate(ev)
        if isinstance(value, frozenset):
            sup = ev.tense.algebra.supplement
            return frozenset(tuple(sup(v) for v in q) for q in value)
        return ev.tense.supplement(value)


@dataclass(frozen=True)
class Binary(Node):
    op: str
    left: Node
    right: Node

    def evaluate(self, ev: "ExpressionEvaluator") -> Value:
        left, right = self.left.evaluate(ev), self.right.evaluate(ev)
        if isinstance(left, frozenset) or isinstance(right, frozenset):
            raise ExpressionError(f"{self.op} applies to propositions, not to families")
        return ev.tense.pointwise_connective(self.op, left, right)


@dataclass(frozen=True)
class Phi(Node):
    arg: Node

    def evaluate(self, ev: "ExpressionEvaluator") -> Value:
        value = self.arg.evaluate(ev)
        if isinstance(value, frozenset):
            raise ExpressionError("φ applies to set propositions, not to families")
        return ev.tense.phi(value)


def _family(value: Value) -> PropositionFamily:
    if isinstance(value, frozenset):
        return value
    if any(len(v) != 1 for v in value):
        raise ExpressionError("A tense operator needs a proposition or a family; apply φ to set-valued arguments")
    return frozenset({tuple(v[0] for v in value)})


@dataclass(frozen=True)
class Tense(Node):
    which: TenseOperator
    arg: Node

    def evaluate(self, ev: "ExpressionEvaluator") -> Value:
        return ev.tense.tense_apply(self.which, _family(self.arg.evaluate(ev)))


@dataclass(frozen=True)
class Compose(Node):
    outer: TenseOperator
    inner: TenseOperator
    arg: Node

    def evaluate(self, ev: "ExpressionEvaluator") -> Value:
        return ev.tense.compose(self.outer, self.inner, _family(self.arg.evaluate(ev)))


def _fold_postfix(tokens: pp.ParseResults) -> Node:
    node, *marks = tokens[0]
    for _ in marks:
        node = Supplement(node)
    return node


def _fold_binary(tokens: pp.ParseResults) -> Node:
    items = list(tokens[0])
    node = items[0]
    for symbol, right in zip(items[1::2], items[2::2]):
        node = Binary(SYMBOLS[symbol], node, right)
    return node


def _grammar() -> pp.ParserElement:
    expr = pp.Forward()
    lpar, rpar = pp.Suppress("("), pp.Suppress(")")
    tense_op = pp.one_of("P F H G", as_keyword=True)
    phi_kw = pp.one_of(["φ", "phi"], as_keyword=True)
    name = pp.Word(pp.alphas + "_", pp.alphanums + "_").set_parse_action(lambda t: Name(t[0]))

    compose = (lpar + tense_op + pp.Suppress("*") + tense_op + rpar + lpar + expr + rpar).set_parse_action(
        lambda t: Compose(t[0], t[1], t[2])
    )
    tense_call = (tense_op + lpar + expr + rpar).set_parse_action(lambda t: Tense(t[0], t[1]))
    phi_call = (phi_kw + lpar + expr + rpar).set_parse_action(lambda t: Phi(t[1]))
    operand = compose | tense_call | phi_call | name

    expr <<= pp.infix_notation(
        operand,
        [
            (pp.one_of("' ′"), 1, pp.OpAssoc.LEFT, _fold_postfix),
            (pp.one_of(list(SYMBOLS)), 2, pp.OpAssoc.LEFT, _fold_binary),
        ],
    )
    return expr


GRAMMAR = _grammar()


def parse_expression(text: str) -> Node:
    """
    Parse a tense expression.

    Raises:
        ExpressionError: If the text is not a well-formed expression
    """
    try:
        return GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise ExpressionError(f"column {e.col}: cannot parse {text!r}") from e


class ExpressionEvaluator:
    """Evaluates tense expressions over named propositions of one frame."""

    def __init__(self, tense: TenseService, props: Mapping[str, Proposition]):
        """
        Initialize evaluator.

        Args:
            tense: Tense service over the frame the propositions live on
            props: Propositions by name
        """
        self.tense = tense
        self.props = dict(props)

    def evaluate(self, text: str) -> SetProposition:
        """
        Evaluate an expression to a set proposition.

        Raises:
            ExpressionError: If the text is malformed or evaluates to a family
            UndefinedOperationError: If ⊙ or + is undefined at some time point
        """
        value = parse_expression(text).evaluate(self)
        if isinstance(value, frozenset):
            raise ExpressionError(f"{text!r} is a family of propositions; apply a tense operator to it")
        return value

    def rows(self, texts: list[str]) -> list[tuple[str, SetProposition]]:
        """Evaluate several expressions, labelling each row by its text."""
        return [(text, self.evaluate(text)) for text in texts]


def load_expressions(text: str) -> list[str]:
    """Expressions from a file, one per non-blank line; '#' starts a comment line."""
    return [line.strip() for line in text.splitlines() if line.strip() and not line.strip().startswith("#")]
