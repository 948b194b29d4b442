"""Alternative-semantics interpreter over finite models.

Every expression gets two values computed in parallel: the ordinary
denotation, and the set of focus alternatives obtained by substituting
domain members into focus-marked positions and applying functions
pointwise over the cartesian product of child alternative sets.
Denotations stay symbolic (proposition terms), so alternatives remain
distinguishable even when they share a truth value; terms can be
evaluated against the model and rendered through optional per-predicate
templates.

Expression files hold one s-expression per line:

    (left (focus John))
    (not (left (focus John)))
    (left (focus (and John Mary)))
    (squiggle C (left (focus John)))
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Mapping, Union

from .errors import (
    EvaluationError,
    FocusConstraintError,
    FocusSyntaxError,
    FocusTypeError,
)

# ---------------------------------------------------------------- expressions

OPERATORS = frozenset({"focus", "not", "and", "squiggle"})


@dataclass(frozen=True)
class Entity:
    name: str


@dataclass(frozen=True)
class Pred:
    name: str
    args: tuple["Expr", ...]


@dataclass(frozen=True)
class Neg:
    inner: "Expr"


@dataclass(frozen=True)
class And:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Focus:
    inner: "Expr"


@dataclass(frozen=True)
class Squiggle:
    context: str
    inner: "Expr"


Expr = Union[Entity, Pred, Neg, And, Focus, Squiggle]


def _tokenize(source: str) -> list[str]:
    return source.replace("(", " ( ").replace(")", " ) ").split()


def _read_form(tokens: list[str], pos: int) -> tuple[object, int]:
    if pos >= len(tokens):
        raise FocusSyntaxError("unexpected end of expression")
    tok = tokens[pos]
    if tok == "(":
        items = []
        pos += 1
        while pos < len(tokens) and tokens[pos] != ")":
            item, pos = _read_form(tokens, pos)
            items.append(item)
        if pos >= len(tokens):
            raise FocusSyntaxError("missing closing parenthesis")
        return items, pos + 1
    if tok == ")":
        raise FocusSyntaxError("unexpected closing parenthesis")
    return tok, pos + 1


def _build(form: object) -> Expr:
    if isinstance(form, str):
        return Entity(form)
    assert isinstance(form, list)
    if not form:
        raise FocusSyntaxError("empty expression ()")
    head = form[0]
    if not isinstance(head, str):
        raise FocusSyntaxError("expression head must be a symbol")
    rest = form[1:]
    if head == "focus":
        if len(rest) != 1:
            raise FocusSyntaxError("focus takes exactly one argument")
        if isinstance(rest[0], list) and rest[0] and rest[0][0] == "focus":
            raise FocusSyntaxError("focus may not be directly nested")
        return Focus(_build(rest[0]))
    if head == "not":
        if len(rest) != 1:
            raise FocusSyntaxError("not takes exactly one argument")
        return Neg(_build(rest[0]))
    if head == "and":
        if len(rest) != 2:
            raise FocusSyntaxError("and takes exactly two arguments")
        return And(_build(rest[0]), _build(rest[1]))
    if head == "squiggle":
        if len(rest) != 2 or not isinstance(rest[0], str):
            raise FocusSyntaxError("squiggle takes a context name and one expression")
        return Squiggle(rest[0], _build(rest[1]))
    return Pred(head, tuple(_build(arg) for arg in rest))


def parse_expression(source: str) -> Expr:
    tokens = _tokenize(source)
    if not tokens:
        raise FocusSyntaxError("empty expression")
    form, pos = _read_form(tokens, 0)
    if pos != len(tokens):
        raise FocusSyntaxError(f"trailing input after expression: {' '.join(tokens[pos:])}")
    expr = _build(form)
    if isinstance(expr, Entity) and expr.name in OPERATORS:
        raise FocusSyntaxError(f"{expr.name} cannot stand alone")
    return expr


def parse_expressions(text: str) -> list[tuple[str, Expr]]:
    """One (source line, parsed expression) pair per nonempty line."""
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith(";") and not line.startswith("#"):
            out.append((line, parse_expression(line)))
    return out


# ---------------------------------------------------------------- denotations


@dataclass(frozen=True)
class Ind:
    name: str


@dataclass(frozen=True)
class Group:
    members: frozenset[str]


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple[Union[Ind, Group], ...]


@dataclass(frozen=True)
class NotP:
    inner: "Prop"


@dataclass(frozen=True)
class AndP:
    left: "Prop"
    right: "Prop"


Prop = Union[Atom, NotP, AndP]
EntityDen = Union[Ind, Group]
Denotation = Union[Ind, Group, Atom, NotP, AndP]


# --------------------------------------------------------------------- model


@dataclass(frozen=True)
class PredicateDef:
    arity: int
    extension: frozenset[tuple[str, ...]]
    render_pos: str | None = None
    render_neg: str | None = None


@dataclass(frozen=True)
class Model:
    individuals: frozenset[str]
    predicates: Mapping[str, PredicateDef] = field(default_factory=dict)
    contexts: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    entity_alternatives: frozenset[str] | None = None

    def __post_init__(self):
        for name, pred in self.predicates.items():
            for row in pred.extension:
                if len(row) != pred.arity:
                    raise FocusTypeError(
                        f"predicate {name!r}: extension row {row} does not match "
                        f"arity {pred.arity}"
                    )
                for member in row:
                    if member not in self.individuals:
                        raise FocusTypeError(
                            f"predicate {name!r}: {member!r} is not a declared individual"
                        )
        if self.entity_alternatives is not None:
            stray = self.entity_alternatives - self.individuals
            if stray:
                raise FocusTypeError(
                    f"alternative domain contains undeclared individuals: {sorted(stray)}"
                )

    @property
    def entity_domain(self) -> frozenset[str]:
        if self.entity_alternatives is not None:
            return self.entity_alternatives
        return self.individuals


def _parse_predicate(name: str, raw: object) -> PredicateDef:
    render_pos = render_neg = None
    arity = None
    if isinstance(raw, dict):
        render = raw.get("render", {})
        if not isinstance(render, dict):
            raise FocusTypeError(f"predicate {name!r}: render must reside in an object")
        render_pos = render.get("positive")
        render_neg = render.get("negative")
        arity = raw.get("arity")
        rows = raw.get("extension", [])
    else:
        rows = raw
    if not isinstance(rows, list):
        raise FocusTypeError(f"predicate {name!r}: extension must be a list")
    parsed_rows = set()
    for row in rows:
        if isinstance(row, str):
            parsed_rows.add((row,))
        elif isinstance(row, list) and all(isinstance(x, str) for x in row):
            parsed_rows.add(tuple(row))
        else:
            raise FocusTypeError(f"predicate {name!r}: bad extension row {row!r}")
    arities = {len(row) for row in parsed_rows}
    if len(arities) > 1:
        raise FocusTypeError(f"predicate {name!r}: mixed arities in extension")
    if arity is None:
        if not arities:
            raise FocusTypeError(
                f"predicate {name!r}: empty extension needs an explicit arity"
            )
        arity = arities.pop()
    elif arities and arities != {arity}:
        raise FocusTypeError(f"predicate {name!r}: extension does not match arity {arity}")
    if arity not in (1, 2):
        raise FocusTypeError(f"predicate {name!r}: only arity 1 and 2 are supported")
    return PredicateDef(
        arity=arity,
        extension=frozenset(parsed_rows),
        render_pos=render_pos,
        render_neg=render_neg,
    )


def parse_model(text: str, *, name: str = "<model>") -> Model:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FocusSyntaxError(f"{name}: invalid JSON: {exc}") from exc
    if not isinstance(raw, dict) or not isinstance(raw.get("individuals"), list):
        raise FocusTypeError(f"{name}: model needs an 'individuals' list")
    individuals = frozenset(str(x) for x in raw["individuals"])
    predicates = {
        str(pname): _parse_predicate(str(pname), praw)
        for pname, praw in (raw.get("predicates") or {}).items()
    }
    contexts_raw = raw.get("contexts") or {}
    if not isinstance(contexts_raw, dict):
        raise FocusTypeError(f"{name}: contexts must be an object")
    contexts = {
        str(cname): tuple(str(term) for term in terms)
        for cname, terms in contexts_raw.items()
    }
    domains = raw.get("alternative_domains") or {}
    entity_alternatives = None
    if "e" in domains:
        entity_alternatives = frozenset(str(x) for x in domains["e"])
    return Model(
        individuals=individuals,
        predicates=predicates,
        contexts=contexts,
        entity_alternatives=entity_alternatives,
    )


def load_model(path) -> Model:
    with open(path, encoding="utf-8") as handle:
        return parse_model(handle.read(), name=str(path))


# ------------------------------------------------------------- interpretation


@dataclass(frozen=True)
class SemanticValue:
    """Paired ordinary denotation and focus alternative set."""

    ordinary: Denotation
    focus_set: frozenset

    def __post_init__(self):
        assert self.ordinary in self.focus_set, "ordinary value must be an alternative"


def _entity_pairs(domain: frozenset[str]) -> set[Group]:
    return {Group(frozenset(pair)) for pair in itertools.combinations(sorted(domain), 2)}


def interpret(expr: Expr, model: Model) -> SemanticValue:
    """Ordinary and focus values computed in parallel."""
    if isinstance(expr, Entity):
        if expr.name not in model.individuals:
            raise FocusTypeError(f"unknown entity {expr.name!r}")
        value = Ind(expr.name)
        return SemanticValue(value, frozenset({value}))
    if isinstance(expr, Focus):
        inner = interpret(expr.inner, model)
        if isinstance(inner.ordinary, Ind):
            alts = frozenset(Ind(x) for x in model.entity_domain)
        elif isinstance(inner.ordinary, Group):
            alts = frozenset(_entity_pairs(model.entity_domain))
        else:
            raise FocusTypeError("focus applies to an entity or a coordination of entities")
        if inner.ordinary not in alts:
            alts = alts | {inner.ordinary}
        return SemanticValue(inner.ordinary, alts)
    if isinstance(expr, Pred):
        if expr.name not in model.predicates:
            raise FocusTypeError(f"unknown predicate {expr.name!r}")
        pred = model.predicates[expr.name]
        if len(expr.args) != pred.arity:
            raise FocusTypeError(
                f"predicate {expr.name!r} takes {pred.arity} argument(s), "
                f"got {len(expr.args)}"
            )
        arg_values = [interpret(arg, model) for arg in expr.args]
        for value in arg_values:
            if not isinstance(value.ordinary, (Ind, Group)):
                raise FocusTypeError(
                    f"predicate {expr.name!r} expects entity arguments"
                )
        ordinary = Atom(expr.name, tuple(v.ordinary for v in arg_values))
        focus_set = frozenset(
            Atom(expr.name, combo)
            for combo in itertools.product(*(v.focus_set for v in arg_values))
        )
        return SemanticValue(ordinary, focus_set)
    if isinstance(expr, Neg):
        inner = interpret(expr.inner, model)
        if not isinstance(inner.ordinary, (Atom, NotP, AndP)):
            raise FocusTypeError("negation applies to a proposition")
        return SemanticValue(
            NotP(inner.ordinary), frozenset(NotP(p) for p in inner.focus_set)
        )
    if isinstance(expr, And):
        left = interpret(expr.left, model)
        right = interpret(expr.right, model)
        left_entity = isinstance(left.ordinary, (Ind, Group))
        right_entity = isinstance(right.ordinary, (Ind, Group))
        if left_entity and right_entity:
            if not isinstance(left.ordinary, Ind) or not isinstance(right.ordinary, Ind):
                raise FocusTypeError("entity coordination takes two simple entities")
            if left.ordinary == right.ordinary:
                raise FocusTypeError("coordination of identical entities")
            members = frozenset({left.ordinary.name, right.ordinary.name})
            value = Group(members)
            return SemanticValue(value, frozenset({value}))
        if not left_entity and not right_entity:
            focus_set = frozenset(
                AndP(p, q)
                for p, q in itertools.product(left.focus_set, right.focus_set)
            )
            return SemanticValue(AndP(left.ordinary, right.ordinary), focus_set)
        raise FocusTypeError("and cannot mix an entity with a proposition")
    if isinstance(expr, Squiggle):
        return squiggle(expr.context, interpret(expr.inner, model), model)
    raise FocusTypeError(f"unsupported expression node {expr!r}")


def context_set(name: str, model: Model) -> frozenset:
    if name not in model.contexts:
        raise FocusTypeError(f"unknown context {name!r}")
    return frozenset(
        interpret(parse_expression(term), model).ordinary for term in model.contexts[name]
    )


def squiggle(context_name: str, value: SemanticValue, model: Model) -> SemanticValue:
    """Check the context against the alternatives, then reset them.

    The context set must be a subset of the focus set and contain the
    ordinary value; afterwards the focus set collapses to the ordinary
    value alone. A value whose focus set is already the reset singleton
    skips the subset check, which keeps the operator idempotent.
    """
    context = context_set(context_name, model)
    already_reset = value.focus_set == frozenset({value.ordinary})
    if not already_reset and not context <= value.focus_set:
        stray = next(iter(context - value.focus_set))
        raise FocusConstraintError(
            f"context {context_name!r} is not a subset of the focus set "
            f"(e.g. {render(stray, model)!r})"
        )
    if value.ordinary not in context:
        raise FocusConstraintError(
            f"ordinary value {render(value.ordinary, model)!r} is not in "
            f"context {context_name!r}"
        )
    return SemanticValue(value.ordinary, frozenset({value.ordinary}))


def truth(prop: Prop, model: Model) -> bool:
    """Evaluate a proposition term; group arguments distribute."""
    if isinstance(prop, Atom):
        slots = [
            sorted(arg.members) if isinstance(arg, Group) else [arg.name]
            for arg in prop.args
        ]
        extension = model.predicates[prop.pred].extension
        return all(combo in extension for combo in itertools.product(*slots))
    if isinstance(prop, NotP):
        return not truth(prop.inner, model)
    if isinstance(prop, AndP):
        return truth(prop.left, model) and truth(prop.right, model)
    raise FocusTypeError(f"not a proposition: {prop!r}")


def exhaustive_inference(value: SemanticValue, model: Model) -> frozenset:
    """Negations of the non-ordinary alternatives.

    Only licensed when the ordinary value holds in the model.
    """
    if not isinstance(value.ordinary, (Atom, NotP, AndP)):
        raise FocusTypeError("exhaustive inference needs a proposition value")
    if not truth(value.ordinary, model):
        raise EvaluationError("ordinary value is false in the model")
    return frozenset(NotP(p) for p in value.focus_set if p != value.ordinary)


def coordinated_alternatives(expr: Expr, model: Model) -> frozenset:
    """Alternative set of a focused entity coordination."""

    def has_coordinated_focus(node: Expr) -> bool:
        if isinstance(node, Focus):
            return isinstance(node.inner, And)
        if isinstance(node, Pred):
            return any(has_coordinated_focus(a) for a in node.args)
        if isinstance(node, (Neg, Squiggle)):
            return has_coordinated_focus(node.inner)
        if isinstance(node, And):
            return has_coordinated_focus(node.left) or has_coordinated_focus(node.right)
        return False

    if not has_coordinated_focus(expr):
        raise FocusTypeError("expression has no focused coordination of entities")
    return interpret(expr, model).focus_set


# ------------------------------------------------------------------ rendering


def render(denotation: Denotation, model: Model, *, negated: bool = False) -> str:
    """Readable form of a term, using model templates when present."""
    if isinstance(denotation, Ind):
        return denotation.name
    if isinstance(denotation, Group):
        return " and ".join(sorted(denotation.members))
    if isinstance(denotation, Atom):
        pred = model.predicates.get(denotation.pred)
        args = [render(a, model) for a in denotation.args]
        if negated:
            if pred is not None and pred.render_neg:
                return pred.render_neg.format(*args)
            return f"not {render(denotation, model)}"
        if pred is not None and pred.render_pos:
            return pred.render_pos.format(*args)
        return f"{denotation.pred}({', '.join(args)})"
    if isinstance(denotation, NotP):
        if isinstance(denotation.inner, Atom):
            return render(denotation.inner, model, negated=True)
        return f"not ({render(denotation.inner, model)})"
    if isinstance(denotation, AndP):
        return f"{render(denotation.left, model)} and {render(denotation.right, model)}"
    raise FocusTypeError(f"cannot render {denotation!r}")


def render_set(values, model: Model) -> list[str]:
    return sorted(render(v, model) for v in values)
