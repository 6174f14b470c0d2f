"""Text to Polynomial.

Accepted grammar, whitespace-insensitive:

    poly   :=  ['+'|'-'] term (('+'|'-') term)*
    term   :=  factor ('*'? factor)*
    factor :=  INT ['^' INT]  |  VAR ['^' INT]

so ``3*x^2*y + 4`` and ``-2 x y^3`` both parse.  Variable names must be
declared in the ring; exponents are positive integers.  Errors carry the
0-based character position of the offending token.
"""

from __future__ import annotations

from .errors import ParseError, UsageError
from .ring import Polynomial, WeightedRing

_SYMBOLS = set("+-*^")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Return (kind, text, position) triples; kinds: int, ident, sym."""
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("ident", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            toks.append(("sym", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return toks


def parse_poly(ring: WeightedRing, text: str) -> Polynomial:
    if not isinstance(text, str):
        raise UsageError(f"expected a string to parse, got {text!r}")
    toks = _tokenize(text)
    if not toks:
        raise ParseError("empty polynomial", 0)

    pos = 0
    nvars = ring.nvars
    p = ring.p
    terms: dict[tuple[int, ...], int] = {}

    def peek():
        return toks[pos] if pos < len(toks) else (None, None, len(text))

    def parse_exponent(after: int) -> int:
        nonlocal pos
        kind, val, at = peek()
        if kind != "int":
            raise ParseError("expected an integer exponent after '^'", at)
        pos += 1
        e = int(val)
        if e < 1:
            raise ParseError("exponents must be positive integers", at)
        return e

    def parse_term() -> tuple[tuple[int, ...], int]:
        nonlocal pos
        coeff = 1
        exps = [0] * nvars
        saw_factor = False
        while True:
            kind, val, at = peek()
            if kind == "int":
                pos += 1
                base = int(val)
                k2, v2, _ = peek()
                if k2 == "sym" and v2 == "^":
                    pos += 1
                    base = base ** parse_exponent(at)
                coeff = (coeff * base) % p
                saw_factor = True
            elif kind == "ident":
                pos += 1
                try:
                    vi = ring._var_index[val]
                except KeyError:
                    raise ParseError(f"unknown variable {val!r}", at) from None
                e = 1
                k2, v2, _ = peek()
                if k2 == "sym" and v2 == "^":
                    pos += 1
                    e = parse_exponent(at)
                exps[vi] += e
                saw_factor = True
            elif kind == "sym" and val == "*":
                if not saw_factor:
                    raise ParseError("'*' with nothing to multiply", at)
                pos += 1
                k2, v2, a2 = peek()
                if k2 not in ("int", "ident"):
                    raise ParseError("expected a factor after '*'", a2)
            else:
                break
        if not saw_factor:
            _, _, at = peek()
            raise ParseError("expected a term", at)
        return tuple(exps), coeff

    sign = 1
    kind, val, at = peek()
    if kind == "sym" and val in "+-":
        sign = -1 if val == "-" else 1
        pos += 1
    while True:
        mono, coeff = parse_term()
        c = (sign * coeff) % p
        v = (terms.get(mono, 0) + c) % p
        if v:
            terms[mono] = v
        else:
            terms.pop(mono, None)
        kind, val, at = peek()
        if kind is None:
            break
        if kind == "sym" and val in "+-":
            sign = -1 if val == "-" else 1
            pos += 1
        else:
            raise ParseError(f"expected '+' or '-' before {val!r}", at)

    return Polynomial(ring, terms)
