"""
Text forms of compositions, words, permutations and vincular patterns, plus the
expression language used by `eval`.

    expr   := [sign] term (sign term)*
    term   := [rational '*'] factor
    factor := name '(' expr (',' expr)* ')' | atom | '(' expr ')'
    atom   := vincular | word | composition | permutation

Atoms:
    [2,1]        composition          []        empty composition
    1.3.2        word                 2.   .    one-letter / empty word
    3142         permutation          (10 2 1 3 4 5 6 7 8 9)   long permutation
    ()           empty permutation
    21|3         vincular pattern     12|  single block     |  empty pattern
    10,2|1,3,... comma entries once a pattern has more than nine positions
"""
import logging
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple, Union

import pyparsing as pp

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.combinatorics import Composition, Permutation
from core.errors import EvaluationError, ParseError
from core.freealg import LinComb, bilinear_extend, linear_extend, render, render_scalar
from core import hopf_tools, partition_hopf, perm_hopf, signatures, vincular_hopf, word_iso
from core.vincular_hopf import VincularPattern
from core.word_iso import IntWord

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Atom conversion
# ---------------------------------------------------------------------------

def parse_int_list(text: str) -> Tuple[int, ...]:
    inner = text.strip()
    if not (inner.startswith("[") and inner.endswith("]")):
        raise ParseError(f"Expected a bracketed list, got {text!r}", token=text)
    inner = inner[1:-1].strip()
    if not inner:
        return ()
    try:
        return tuple(int(v) for v in inner.split(","))
    except ValueError:
        raise ParseError(f"Bad integer list {text!r}", token=text)


def parse_composition(text: str) -> Composition:
    try:
        return Composition(parse_int_list(text))
    except ValueError as e:
        raise ParseError(f"Bad composition {text!r}: {e}", token=text)


def parse_word(text: str) -> IntWord:
    text = text.strip()
    if text == ".":
        return IntWord()
    letters = [piece for piece in text.split(".") if piece != ""]
    try:
        return IntWord(tuple(int(v) for v in letters))
    except ValueError as e:
        raise ParseError(f"Bad word {text!r}: {e}", token=text)


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    try:
        if text.startswith("("):
            inner = text[1:-1].split()
            return Permutation(tuple(int(v) for v in inner))
        if not text.isdigit():
            raise ValueError("expected digits")
        return Permutation(tuple(int(ch) for ch in text))
    except ValueError as e:
        raise ParseError(f"Bad permutation {text!r}: {e}", token=text)


def parse_pattern(text: str) -> VincularPattern:
    """Read `21|3`, `12|`, `|` or comma-entry forms like `10,2|1,...`"""
    raw = text.strip()
    if "|" not in raw:
        raise ParseError(f"Vincular pattern {raw!r} needs at least one '|' (use '{raw}|' for a single block)",
                         token=raw)
    if raw == "|":
        return VincularPattern()
    pieces = raw.split("|")
    if pieces[-1] == "":
        pieces = pieces[:-1]
    if any(piece == "" for piece in pieces):
        raise ParseError(f"Empty block in vincular pattern {raw!r}", token=raw)

    try:
        if "," in raw:
            blocks = [[int(v) for v in piece.split(",")] for piece in pieces]
            return _pattern_from_blocks(blocks)
        try:
            return _pattern_from_blocks([[int(ch) for ch in piece] for piece in pieces])
        except ValueError:
            # blocks written as one multi-digit entry each
            return _pattern_from_blocks([[int(piece)] for piece in pieces])
    except ValueError as e:
        raise ParseError(f"Bad vincular pattern {raw!r}: {e}", token=raw)


def _pattern_from_blocks(blocks: List[List[int]]) -> VincularPattern:
    return VincularPattern(Composition(tuple(len(b) for b in blocks)),
                           Permutation(tuple(v for b in blocks for v in b)))


# ---------------------------------------------------------------------------
# Grammar
# ---------------------------------------------------------------------------

@dataclass
class Atom:
    kind: str
    text: str


@dataclass
class Call:
    name: str
    args: list


@dataclass
class Scaled:
    coeff: Fraction
    node: object


@dataclass
class Sum:
    terms: List[Tuple[str, object]]


_BLOCK = r"\d+(?:,\d+)*"


def _build_grammar():
    lpar, rpar, comma, star = map(pp.Suppress, "(),*")
    expr = pp.Forward()

    vincular = pp.Regex(rf"(?:{_BLOCK})?(?:\|(?:{_BLOCK})?)+").set_parse_action(lambda t: Atom("pattern", t[0]))
    word = pp.Regex(r"\d+(?:\.\d+)+\.?|\d+\.|\.").set_parse_action(lambda t: Atom("word", t[0]))
    composition = pp.Regex(r"\[\s*(?:\d+\s*(?:,\s*\d+\s*)*)?\]").set_parse_action(
        lambda t: Atom("composition", t[0]))
    long_perm = pp.Regex(r"\(\s*\d+(?:\s+\d+)+\s*\)").set_parse_action(lambda t: Atom("permutation", t[0]))
    empty_perm = pp.Regex(r"\(\s*\)").set_parse_action(lambda t: Atom("permutation", "()"))
    perm = pp.Regex(r"\d+").set_parse_action(lambda t: Atom("permutation", t[0]))
    atom = vincular | word | composition | long_perm | empty_perm | perm

    name = pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*")
    call = pp.Group(name + lpar + pp.Optional(expr + pp.ZeroOrMore(comma + expr)) + rpar)
    call.set_parse_action(lambda t: Call(t[0][0], list(t[0][1:])))
    group = lpar + expr + rpar
    factor = call | atom | group

    rational = pp.Regex(r"\d+(?:/\d+)?")
    term = pp.Group(pp.Optional(rational + star) + factor)
    term.set_parse_action(lambda t: Scaled(Fraction(t[0][0]), t[0][1]) if len(t[0]) == 2 else t[0][0])

    sign = pp.Regex(r"[+-]")
    signed_sum = pp.Group(pp.Optional(sign, default="+") + term + pp.ZeroOrMore(sign + term))
    signed_sum.set_parse_action(lambda t: Sum([(t[0][i], t[0][i + 1]) for i in range(0, len(t[0]), 2)]))
    expr <<= signed_sum
    return expr


_GRAMMAR = _build_grammar()


def parse_expression(text: str):
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        rest = text[e.loc:].strip()
        token = rest.split()[0] if rest else "<end of input>"
        raise ParseError(f"Cannot parse expression at column {e.col}: unexpected {token!r}", token=token)


# ---------------------------------------------------------------------------
# Evaluation
# ---------------------------------------------------------------------------

Value = Union[LinComb, int, Fraction]

_ATOMS: Dict[str, Callable] = {
    "pattern": parse_pattern,
    "word": parse_word,
    "composition": parse_composition,
    "permutation": parse_permutation,
}

_KIND_NAMES = {Composition: "composition", IntWord: "word", Permutation: "permutation",
               VincularPattern: "vincular pattern"}


def _require(name: str, x: Value, kind: type) -> LinComb:
    if not isinstance(x, LinComb):
        raise EvaluationError(f"{name}: expected an algebra element, got the number {render_scalar(x)}")
    for b in x:
        if type(b) is not kind:
            raise EvaluationError(f"{name}: expected {_KIND_NAMES[kind]} terms, got {b}")
    return x


def _linear(op, kind):
    extended = linear_extend(op)
    return 1, lambda name, x: extended(_require(name, x, kind))


def _bilinear(op, kind):
    extended = bilinear_extend(op)
    return 2, lambda name, x, y: extended(_require(name, x, kind), _require(name, y, kind))


def _single_basis(name: str, x: Value, kind: type):
    x = _require(name, x, kind)
    items = list(x.items())
    if len(items) != 1 or items[0][1] != 1:
        raise EvaluationError(f"{name}: the host must be a single {_KIND_NAMES[kind]}, got {render(x)}")
    return items[0][0]


def _pairing_fn(count, host_kind, pattern_kind):
    def fn(name, host, x):
        h = _single_basis(name, host, host_kind)
        return sum(c * count(h, p) for p, c in _require(name, x, pattern_kind).items())
    return 2, fn


def _antipode(name, x):
    if not isinstance(x, LinComb):
        raise EvaluationError(f"{name}: expected an algebra element")
    return hopf_tools.takeuchi_antipode(x)


FUNCTIONS: Dict[str, Tuple[int, Callable]] = {
    "conc": _bilinear(partition_hopf.conc, Composition),
    "qspart": _bilinear(partition_hopf.qspart, Composition),
    "coqspart": _linear(partition_hopf.coqspart, Composition),
    "deconc": _linear(partition_hopf.deconc, Composition),
    "shufflecop": _linear(partition_hopf.shuffle_coproduct, Composition),
    "qswrd": _bilinear(word_iso.qswrd, IntWord),
    "wordphi": _linear(word_iso.phi, IntWord),
    "wordphiinv": _linear(word_iso.phi_inverse, Composition),
    "superinf": _bilinear(perm_hopf.superinfiltration, Permutation),
    "supershuffle": _bilinear(perm_hopf.supershuffle, Permutation),
    "deltaconc": _linear(perm_hopf.delta_conc, Permutation),
    "deltasuperinf": _linear(perm_hopf.delta_superinfiltration, Permutation),
    "mrstar": _bilinear(perm_hopf.mr_star, Permutation),
    "mrstarp": _bilinear(perm_hopf.mr_star_prime, Permutation),
    "deltastar": _linear(perm_hopf.delta_star, Permutation),
    "pconc": _bilinear(perm_hopf.perm_concat, Permutation),
    "genconc": _bilinear(vincular_hopf.genconc, VincularPattern),
    "qsgen": _bilinear(vincular_hopf.qsgen, VincularPattern),
    "deconcgen": _linear(vincular_hopf.deconcgen, VincularPattern),
    "coqsgen": _linear(vincular_hopf.coqsgen, VincularPattern),
    "psi": _linear(vincular_hopf.embed_psi, Composition),
    "phi": _linear(vincular_hopf.embed_phi, Permutation),
    "antipode": (1, _antipode),
    "ipc": _pairing_fn(signatures.ipc_count, Composition, Composition),
    "pc": _pairing_fn(perm_hopf.pc_count, Permutation, Permutation),
    "gpc": _pairing_fn(signatures.gpc, VincularPattern, VincularPattern),
}


def _delay(node: Call) -> LinComb:
    if len(node.args) != 2:
        raise EvaluationError(f"delay takes 2 arguments, got {len(node.args)}")
    sigma = _single_basis("delay", evaluate(node.args[0]), Permutation)
    gaps_node = node.args[1]
    if isinstance(gaps_node, Sum) and len(gaps_node.terms) == 1 and gaps_node.terms[0][0] == "+":
        gaps_node = gaps_node.terms[0][1]
    if not (isinstance(gaps_node, Atom) and gaps_node.kind == "composition"):
        raise EvaluationError("delay: the gaps must be a bracketed list such as [1,0]")
    return signatures.delay_pattern(sigma, parse_int_list(gaps_node.text))


def evaluate(node) -> Value:
    if isinstance(node, Atom):
        return LinComb.basis(_ATOMS[node.kind](node.text))
    if isinstance(node, Scaled):
        return node.coeff * evaluate(node.node)
    if isinstance(node, Sum):
        total = None
        for sign, term in node.terms:
            value = evaluate(term)
            if sign == "-":
                value = -value
            if total is None:
                total = value
            elif isinstance(total, LinComb) != isinstance(value, LinComb):
                raise EvaluationError("Cannot add a number and an algebra element")
            else:
                total = total + value
        return total
    if isinstance(node, Call):
        if node.name == "delay":
            return _delay(node)
        if node.name not in FUNCTIONS:
            raise EvaluationError(f"Unknown function {node.name!r}")
        arity, fn = FUNCTIONS[node.name]
        if len(node.args) != arity:
            raise EvaluationError(f"{node.name} takes {arity} argument(s), got {len(node.args)}")
        return fn(node.name, *(evaluate(arg) for arg in node.args))
    raise EvaluationError(f"Cannot evaluate {node!r}")


def evaluate_expression(text: str) -> Value:
    value = evaluate(parse_expression(text))
    logger.debug(f"[EVAL] {text}")
    if isinstance(value, Fraction) and value.denominator == 1:
        value = int(value)
    return value


def render_value(value: Value) -> str:
    if isinstance(value, LinComb):
        return render(value)
    return render_scalar(value)


def function_names() -> List[str]:
    return sorted(list(FUNCTIONS) + ["delay"])
