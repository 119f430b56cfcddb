"""The group-spec expression language.

Grammar (whitespace insensitive)::

    spec    := product
    product := cfactor { "x" cfactor }
    cfactor := sfactor { "*" sfactor }
    sfactor := atom [ ":" atom ]
    atom    := base [ "^" INT ] | "(" spec ")" [ "^" INT ]
    base    := "C" INT | "D" INT | "Q" INT | "SD" INT | "Mod" INT
             | "Heis(" INT ")" | "Mp3(" INT ")" | "Ab(" INT ";" INT {"," INT} ")"
             | "ESp(" INT ")" | "ESm(" INT ")" | "AES(" INT ")"

``x`` is the direct product, ``*`` the central product, ``^k`` a k-fold direct
power and ``:`` a semidirect product with a registered standard action (see
``SEMIDIRECT_ACTIONS``).  Powers are expanded and nested products of the same
kind are flattened, so ``"D8 x C2^3"`` parses to a direct product with four
children.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache, reduce

from .constructors import (
    ExtraspecialKind,
    Family,
    SemidirectAction,
    build_2group_family,
    build_abelian,
    build_cyclic,
    build_extraspecial,
    build_p3_nonabelian,
    central_product,
    direct_product,
    semidirect_product,
)
from .group_core import ORDER_CAP, GroupError, GroupTable, OrderCapError, is_prime, prime_power


class SpecParseError(GroupError):
    def __init__(self, offset: int, message: str):
        self.offset = offset
        self.message = message
        super().__init__(f"at offset {offset}: {message}")


class Kind(Enum):
    ATOM = "Atom"
    DIRECT = "DirectProduct"
    CENTRAL = "CentralProduct"
    SEMIDIRECT = "SemidirectProduct"


@dataclass(frozen=True)
class SpecAst:
    kind: Kind
    family: str = ""
    params: tuple[int, ...] = ()
    children: tuple[SpecAst, ...] = ()
    offset: int = field(default=0, compare=False)

    @property
    def prime(self) -> int:
        if self.kind is not Kind.ATOM:
            return self.children[0].prime
        return _atom_prime(self.family, self.params)

    @property
    def order(self) -> int:
        if self.kind is Kind.ATOM:
            return _atom_order(self.family, self.params)
        total = 1
        for c in self.children:
            total *= c.order
        if self.kind is Kind.CENTRAL:
            total //= self.prime ** (len(self.children) - 1)
        return total

    def __str__(self) -> str:
        return format_spec(self)


# (left label, right label) -> action of the right factor on the left one.
# Element numbering follows the constructors: C_n is Z/n, products are
# lexicographic in their factors.
SEMIDIRECT_ACTIONS: dict[tuple[str, str], SemidirectAction] = {
    # inversion: C4 : C4
    ("C4", "C4"): SemidirectAction((1,), (1,), ((3,),)),
    # a -> ab, b -> b on <a> x <b> = C4 x C2
    ("C4 x C2", "C2"): SemidirectAction((2, 1), (1,), ((3, 1),)),
    # a -> a^4: C9 : C9
    ("C9", "C9"): SemidirectAction((1,), (1,), ((4,),)),
    # a -> a^10: modular group of order 81
    ("C27", "C3"): SemidirectAction((1,), (1,), ((10,),)),
    # cyclic shift of coordinates: C3 wr C3
    ("C3^3", "C3"): SemidirectAction((9, 3, 1), (1,), ((3, 1, 9),)),
    # a -> ab, b -> b on <a> x <b> = C9 x C3
    ("C9 x C3", "C3"): SemidirectAction((3, 1), (1,), ((4, 1),)),
}

_KEYWORDS = ("Heis", "Mp3", "Mod", "ESp", "ESm", "AES", "Ab", "SD", "C", "D", "Q", "x")
_PUNCT = "*^:(),;"


def _tokenize(text: str) -> list[tuple[str, str | int, int]]:
    toks: list[tuple[str, str | int, int]] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("INT", int(text[i:j]), i))
            i = j
        elif ch in _PUNCT:
            toks.append((ch, ch, i))
            i += 1
        else:
            for kw in _KEYWORDS:
                if text.startswith(kw, i):
                    toks.append(("x" if kw == "x" else "KW", kw, i))
                    i += len(kw)
                    break
            else:
                raise SpecParseError(i, f"unexpected character {ch!r}")
    toks.append(("EOF", "", len(text)))
    return toks


def _atom_prime(family: str, params: tuple[int, ...]) -> int:
    if family == "C":
        return prime_power(params[0])[0]
    if family in ("Heis", "Mp3", "Ab"):
        return params[0]
    return 2


def _atom_order(family: str, params: tuple[int, ...]) -> int:
    if family in ("C", "D", "Q", "SD", "Mod"):
        return params[0]
    if family in ("Heis", "Mp3"):
        return params[0] ** 3
    if family == "Ab":
        return params[0] ** sum(params[1:])
    r = params[0]
    return 2 ** (2 * r + 2 if family == "AES" else 2 * r + 1)


def _validate_atom(family: str, params: tuple[int, ...], offset: int) -> None:
    if family == "C":
        n = params[0]
        try:
            p, k = prime_power(n)
        except GroupError:
            raise SpecParseError(offset, f"{n} is not a prime power") from None
        if k < 1:
            raise SpecParseError(offset, "C1 is not a p-group of positive order")
    elif family in ("D", "Q", "SD", "Mod"):
        n = params[0]
        k = n.bit_length() - 1
        min_k = 3 if family in ("D", "Q") else 4
        if n < 1 or 1 << k != n:
            raise SpecParseError(offset, f"{family}{n}: {n} is not a power of 2")
        if k < min_k:
            raise SpecParseError(offset, f"{family}{n}: order must be at least {2**min_k}")
    elif family in ("Heis", "Mp3"):
        p = params[0]
        if not is_prime(p) or p == 2:
            raise SpecParseError(offset, f"{family}({p}) needs an odd prime")
    elif family == "Ab":
        p, es = params[0], params[1:]
        if not is_prime(p):
            raise SpecParseError(offset, f"{p} is not prime")
        if any(e < 1 for e in es) or list(es) != sorted(es, reverse=True):
            raise SpecParseError(offset, "Ab exponents must be positive and non-increasing")
    elif params[0] < 1:
        raise SpecParseError(offset, f"{family}({params[0]}) needs r >= 1")


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str | int, int]:
        return self.toks[self.i]

    def take(self, kind: str) -> tuple[str, str | int, int]:
        tok = self.toks[self.i]
        if tok[0] != kind:
            want = "integer" if kind == "INT" else repr(kind)
            got = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise SpecParseError(tok[2], f"expected {want}, got {got}")
        self.i += 1
        return tok

    def spec(self) -> SpecAst:
        node = self.product()
        return node

    def product(self) -> SpecAst:
        parts = [self.cfactor()]
        while self.peek()[0] == "x":
            self.i += 1
            parts.append(self.cfactor())
        return _combine(Kind.DIRECT, parts)

    def cfactor(self) -> SpecAst:
        parts = [self.sfactor()]
        while self.peek()[0] == "*":
            self.i += 1
            parts.append(self.sfactor())
        return _combine(Kind.CENTRAL, parts)

    def sfactor(self) -> SpecAst:
        left = self.atom()
        if self.peek()[0] != ":":
            return left
        off = self.take(":")[2]
        right = self.atom()
        key = (format_spec(left), format_spec(right))
        if key not in SEMIDIRECT_ACTIONS:
            raise SpecParseError(off, f"no registered action for {key[0]} : {key[1]}")
        return SpecAst(Kind.SEMIDIRECT, children=(left, right), offset=left.offset)

    def atom(self) -> SpecAst:
        tok = self.peek()
        if tok[0] == "(":
            self.i += 1
            node = self.spec()
            self.take(")")
        else:
            node = self.base()
        if self.peek()[0] == "^":
            off = self.take("^")[2]
            k = self.take("INT")[1]
            if k < 1:
                raise SpecParseError(off, "power exponent must be at least 1")
            node = _combine(Kind.DIRECT, [node] * k)
        return node

    def base(self) -> SpecAst:
        kind, fam, off = self.peek()
        if kind != "KW":
            got = "end of input" if kind == "EOF" else repr(fam)
            raise SpecParseError(off, f"expected a group name, got {got}")
        self.i += 1
        if fam in ("C", "D", "Q", "SD", "Mod"):
            params: tuple[int, ...] = (self.take("INT")[1],)
        else:
            self.take("(")
            params = (self.take("INT")[1],)
            if fam == "Ab":
                self.take(";")
                params += (self.take("INT")[1],)
                while self.peek()[0] == ",":
                    self.i += 1
                    params += (self.take("INT")[1],)
            self.take(")")
        _validate_atom(fam, params, off)
        return SpecAst(Kind.ATOM, fam, params, offset=off)


def _combine(kind: Kind, parts: list[SpecAst]) -> SpecAst:
    if len(parts) == 1:
        return parts[0]
    flat: list[SpecAst] = []
    for p in parts:
        flat.extend(p.children if p.kind is kind else (p,))
    return SpecAst(kind, children=tuple(flat), offset=parts[0].offset)


def _atoms(node: SpecAst):
    if node.kind is Kind.ATOM:
        yield node
    for c in node.children:
        yield from _atoms(c)


def parse_group_spec(text: str) -> SpecAst:
    p = _Parser(text)
    node = p.spec()
    tok = p.peek()
    if tok[0] != "EOF":
        raise SpecParseError(tok[2], f"unexpected {tok[1]!r}")
    atoms = list(_atoms(node))
    prime = atoms[0].prime
    for a in atoms[1:]:
        if a.prime != prime:
            raise SpecParseError(a.offset, f"mixed primes: {format_spec(a)} is a {a.prime}-group, expected p = {prime}")
    return node


def format_spec(node: SpecAst) -> str:
    if node.kind is Kind.ATOM:
        f, ps = node.family, node.params
        if f in ("C", "D", "Q", "SD", "Mod"):
            return f"{f}{ps[0]}"
        if f == "Ab":
            return f"Ab({ps[0]};{','.join(map(str, ps[1:]))})"
        return f"{f}({ps[0]})"
    if node.kind is Kind.DIRECT:
        pieces = []
        kids = list(node.children)
        i = 0
        while i < len(kids):
            j = i
            while j < len(kids) and kids[j] == kids[i]:
                j += 1
            run = j - i
            text = format_spec(kids[i])
            if run > 1:
                pieces.append((text if kids[i].kind is Kind.ATOM else f"({text})") + f"^{run}")
            else:
                pieces.append(text)
            i = j
        return " x ".join(pieces)
    if node.kind is Kind.CENTRAL:
        return " * ".join(_wrap(c, (Kind.ATOM, Kind.SEMIDIRECT)) for c in node.children)
    left, right = node.children
    return f"{_wrap(left, (Kind.ATOM,))}:{_wrap(right, (Kind.ATOM,))}"


def _wrap(node: SpecAst, bare: tuple[Kind, ...]) -> str:
    text = format_spec(node)
    return text if node.kind in bare else f"({text})"


def build_from_ast(node: SpecAst, cap: int = ORDER_CAP) -> GroupTable:
    if node.order > cap:
        raise OrderCapError(f"{format_spec(node)} has order {node.order}, above the cap {cap}")
    return _build(node, cap).relabel(format_spec(node))


def _build(node: SpecAst, cap: int) -> GroupTable:
    if node.kind is Kind.ATOM:
        f, ps = node.family, node.params
        if f == "C":
            p, k = prime_power(ps[0])
            return build_cyclic(p, k, cap)
        if f in ("D", "Q", "SD", "Mod"):
            return build_2group_family(Family(f), ps[0], cap)
        if f == "Heis":
            return build_p3_nonabelian(ps[0], "p")
        if f == "Mp3":
            return build_p3_nonabelian(ps[0], "p2")
        if f == "Ab":
            return build_abelian(ps[0], ps[1:], cap)
        kind = {"ESp": ExtraspecialKind.PLUS, "ESm": ExtraspecialKind.MINUS, "AES": ExtraspecialKind.ALMOST}[f]
        return build_extraspecial(kind, ps[0], cap)
    kids = [_build(c, cap) for c in node.children]
    if node.kind is Kind.DIRECT:
        return reduce(lambda a, b: direct_product(a, b, cap), kids)
    if node.kind is Kind.CENTRAL:
        return reduce(lambda a, b: central_product(a, b, cap), kids)
    left, right = node.children
    action = SEMIDIRECT_ACTIONS[(format_spec(left), format_spec(right))]
    return semidirect_product(kids[0], kids[1], action, cap)


@lru_cache(maxsize=512)
def build_group(text: str, cap: int = ORDER_CAP) -> GroupTable:
    """Parse and build; the label of the result is the canonical spec string."""
    return build_from_ast(parse_group_spec(text), cap)


def canonical(text: str) -> str:
    return format_spec(parse_group_spec(text))
