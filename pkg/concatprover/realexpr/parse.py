"""Prefix syntax for expression trees.

Atoms are integers (optionally negative), ``alpha``, ``beta`` (sugar for ``(sub 1 alpha)``) and ``sqrt5``.
Forms are ``(add a b ...)`` and ``(mul a b ...)``, folded to the left, ``(sub a b)``, ``(div a b)``,
``(pow a n)`` with an integer ``n``, and the unary ``(log a)``, ``(log10 a)``, ``(sqrt a)``, ``(abs a)``,
``(neg a)``.
"""
import re

from concatprover.realexpr.nodes import (Integer, Sqrt, Log, Log10, Abs, Neg, Add, Sub, Mul, Div, Pow, ALPHA,
                                         BETA, SQRT5)

_TOKEN = re.compile(r"\s*(\(|\)|[^\s()]+)")
_INTEGER = re.compile(r"[+-]?\d+$")

_ATOMS = {"alpha": ALPHA, "beta": BETA, "sqrt5": SQRT5}
_UNARY = {"log": Log, "log10": Log10, "sqrt": Sqrt, "abs": Abs, "neg": Neg}
_BINARY = {"sub": Sub, "div": Div}
_VARIADIC = {"add": Add, "mul": Mul}


class ParseError(ValueError):
    pass


def _tokenize(text):
    pos, tokens = 0, []
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError("Unexpected character at offset %d." % pos)
        tokens.append(match.group(1))
        pos = match.end()
    return tokens


def _atom(token):
    if _INTEGER.match(token):
        return Integer(int(token))
    try:
        return _ATOMS[token]
    except KeyError:
        raise ParseError("Unknown atom %r." % token) from None


def _form(tokens, pos):
    if pos >= len(tokens):
        raise ParseError("Unexpected end of input.")
    token = tokens[pos]
    if token == ")":
        raise ParseError("Unexpected ')'.")
    if token != "(":
        return _atom(token), pos + 1

    if pos + 1 >= len(tokens):
        raise ParseError("Unexpected end of input.")
    head = tokens[pos + 1]
    pos += 2
    args = []
    while True:
        if pos >= len(tokens):
            raise ParseError("Missing ')' after %r form." % head)
        if tokens[pos] == ")":
            pos += 1
            break
        if head == "pow" and len(args) == 1:
            if not _INTEGER.match(tokens[pos]):
                raise ParseError("pow needs an integer exponent, got %r." % tokens[pos])
            args.append(int(tokens[pos]))
            pos += 1
            continue
        arg, pos = _form(tokens, pos)
        args.append(arg)

    if head in _UNARY:
        if len(args) != 1:
            raise ParseError("%s takes one argument, got %d." % (head, len(args)))
        return _UNARY[head](args[0]), pos
    if head in _BINARY:
        if len(args) != 2:
            raise ParseError("%s takes two arguments, got %d." % (head, len(args)))
        return _BINARY[head](*args), pos
    if head in _VARIADIC:
        if len(args) < 2:
            raise ParseError("%s takes at least two arguments." % head)
        result = args[0]
        for arg in args[1:]:
            result = _VARIADIC[head](result, arg)
        return result, pos
    if head == "pow":
        if len(args) != 2:
            raise ParseError("pow takes a base and an integer exponent.")
        return Pow(args[0], args[1]), pos
    raise ParseError("Unknown form %r." % head)


def parse(text):
    """Parse the prefix syntax produced by ``str(expr)``.

    Raises:
        ParseError: (a ``ValueError``) on malformed input.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("Empty expression.")
    expr, pos = _form(tokens, 0)
    if pos != len(tokens):
        raise ParseError("Trailing input after expression.")
    return expr
