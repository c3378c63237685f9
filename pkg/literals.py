"""
Literal parsing for hopfwords

Grammar of the command-line literals:

    word          [1,2,3]            ([] is the empty word)
    substitution  ([1,2,1] | [2,1])
    descent set   {1,4}              (the ambient m is supplied separately)
    element       2[1,1,2] - [1,2,1]
    tensor        [1] ⊗ [1,2]        (@ is accepted for ⊗)

Printing goes through freemod.format_elem and re-parses to an equal value.
"""
import pyparsing as pp

from dwha import canonicalize
from freemod import Elem, TensorElem, format_elem, format_key
from nsq import DescentSet
from words import make_word


class LiteralParseError(ValueError):
    """Raised for unparseable literals; column is 1-based"""

    def __init__(self, message, column=None):
        super().__init__(message if column is None else f"{message} (at column {column})")
        self.column = column


_grammar = {}


def _build():
    integer = pp.Word(pp.nums)
    integer.set_parse_action(lambda t: [int(t[0])])

    word = pp.Suppress("[") + pp.Optional(pp.DelimitedList(integer)) + pp.Suppress("]")
    word.set_parse_action(lambda t: [('word', make_word(t))])

    subst = pp.Suppress("(") + word + pp.Suppress("|") + word + pp.Suppress(")")
    subst.set_parse_action(lambda t: [('key', canonicalize(t[0][1], t[1][1]))])

    key = subst | word.copy().set_parse_action(lambda t: [('key', make_word(t))])

    otimes = pp.Suppress(pp.Literal("⊗") | pp.Literal("@"))
    factors = pp.Group(key + pp.OneOrMore(otimes + key))
    factors.set_parse_action(lambda t: [('tensor', tuple(k[1] for k in t[0]))])
    body = (pp.Suppress("(") + factors + pp.Suppress(")")) | factors | key

    minus = pp.Literal("-") | pp.Literal(chr(0x2212))
    minus.set_parse_action(lambda t: ["-"])
    coeff = pp.Optional(integer, 1)
    first = pp.Group(pp.Optional(minus, "+") + coeff + body)
    other = pp.Group((pp.Literal("+") | minus) + coeff + body)
    zero = pp.Literal("0")
    _grammar['elem'] = (pp.Suppress(zero) | (first + pp.ZeroOrMore(other))) + pp.StringEnd()

    _grammar['word'] = word + pp.StringEnd()
    _grammar['key'] = key + pp.StringEnd()

    descent = pp.Suppress("{") + pp.Optional(pp.DelimitedList(integer)) + pp.Suppress("}")
    _grammar['descent'] = pp.Group(descent) + pp.StringEnd()


def _parse(kind, text):
    if not _grammar:
        _build()
    try:
        return _grammar[kind].parse_string(text.strip(), parse_all=True)
    except pp.ParseException as err:
        raise LiteralParseError(f"Cannot parse {text!r} as a {kind}", err.col) from err


def parse_word(text):
    return _parse('word', text)[0][1]


def parse_key(text):
    """A word or a substitution"""
    return _parse('key', text)[0][1]


def parse_descent_set(text, m):
    return DescentSet(frozenset(_parse('descent', text)[0]), m)


def parse_elem(text):
    """An Elem, or a TensorElem when the terms are tensors"""
    terms = _parse('elem', text)
    if not terms:
        return Elem.zero()
    kinds = {body[0] for _, _, body in terms}
    if len(kinds) > 1:
        raise LiteralParseError(f"{text!r} mixes tensors with plain terms")
    lengths = {len(body[1]) for _, _, body in terms if body[0] == 'tensor'}
    if len(lengths) > 1:
        raise LiteralParseError(f"{text!r} mixes tensors of different arity")
    kind = TensorElem if kinds == {'tensor'} else Elem
    return kind((body[1], coeff if sign == "+" else -coeff) for sign, coeff, body in terms)


def render(value):
    """Canonical text of an element or a basis key"""
    if isinstance(value, Elem):
        return format_elem(value)
    return format_key(value)
