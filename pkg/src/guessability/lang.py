"""Syntax of the ellipsis language: AST, signatures, substitution, DSL parser and printer.

Terms are built from variables, decimal numerals, fixed-arity function
applications, applications of the reserved sequence symbol ``f``, and
ellipsis applications ``G[ u : x .. v ]`` which hand a variadic symbol the
tuple of u-values at x = 0..v.  Formulas are the usual first-order
combinations, with ``=`` and the comparison predicates written infix.

Concrete grammar (whitespace-insensitive)::

    formula := 'forall' VAR '.' formula | 'exists' VAR '.' formula | imp
    imp     := disj [ '->' imp ]
    disj    := conj { '|' conj }
    conj    := neg { '&' neg }
    neg     := '!' neg | atom
    atom    := term REL term | IDENT '(' term {',' term} ')' | '(' formula ')'
    REL     := '=' | '<' | '>' | '<=' | '>='
    term    := NAT | VAR | 'f' '(' term ')' | IDENT '(' term {',' term} ')'
             | IDENT '[' term ':' VAR '..' term ']'

``NAT`` is a decimal literal; ``VAR``/``IDENT`` match [a-zA-Z_][a-zA-Z0-9_]*
with ``f``, ``forall`` and ``exists`` reserved.
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass
from typing import Callable

from . import pairing


class LangError(ValueError):
    """Base class for syntax-level failures."""


class ParseError(LangError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class SignatureError(LangError):
    """Unknown symbol, redeclaration, or arity mismatch."""


class CaptureError(LangError):
    """An open replacement would be captured by a binder."""


# ---------------------------------------------------------------------------
# AST


class Term:
    pass


class Formula:
    pass


@dataclass(frozen=True)
class Variable(Term):
    name: str


@dataclass(frozen=True)
class Numeral(Term):
    value: int

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("numerals denote naturals")


@dataclass(frozen=True)
class FixedApp(Term):
    """Application of a fixed-arity function symbol."""

    symbol: str
    args: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class SeqApp(Term):
    """Application of the reserved unary sequence symbol ``f``."""

    arg: Term


@dataclass(frozen=True)
class EllipsisApp(Term):
    """``symbol[ body : binder .. bound ]``.

    The binder scopes only the body; occurrences of the binder inside the
    bound term stay free.
    """

    symbol: str
    body: Term
    binder: str
    bound: Term


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Pred(Formula):
    symbol: str
    args: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


RESERVED = {"f", "forall", "exists"}
_REL_SYMBOLS = ("=", "<=", ">=", "<", ">")


# ---------------------------------------------------------------------------
# Signature

def _monus(a: int, b: int) -> int:
    return a - b if a >= b else 0


#: builtin keys usable in signature files: ``fn <name> <arity> <key>``
FN_BUILTINS: dict[str, tuple[int, Callable[..., int]]] = {
    "+": (2, operator.add),
    "*": (2, operator.mul),
    "monus": (2, _monus),
    "d1": (1, pairing.first),
    "d2": (1, pairing.second),
    "constfam": (2, lambda m, n: m),
}

PRED_BUILTINS: dict[str, tuple[int, Callable[..., bool]]] = {
    "<": (2, operator.lt),
    ">": (2, operator.gt),
    "<=": (2, operator.le),
    ">=": (2, operator.ge),
}

SEQ_BUILTINS: dict[str, Callable[[tuple[int, ...]], int]] = {
    "sum": lambda t: sum(t),
    "max": lambda t: max(t),
    "min": lambda t: min(t),
    "len": lambda t: len(t),
    "last": lambda t: t[-1],
    "contains0": lambda t: 1 if 0 in t else 0,
}


class Signature:
    """Finite registry of interpreted symbols.

    Holds fixed-arity functions, predicates, and variadic sequence-tuple
    functions.  Names are unique across all three kinds and the reserved
    symbol ``f`` can never be declared.
    """

    def __init__(self):
        self.fixed: dict[str, tuple[int, Callable[..., int]]] = {}
        self.predicates: dict[str, tuple[int, Callable[..., bool]]] = {}
        self.seq: dict[str, Callable[[tuple[int, ...]], int]] = {}

    def _check_fresh(self, name: str) -> None:
        if name in RESERVED:
            raise SignatureError(f"{name!r} is reserved")
        if name in self.fixed or name in self.predicates or name in self.seq:
            raise SignatureError(f"symbol {name!r} already declared")

    def register_function(self, name: str, arity: int, host: Callable[..., int]) -> None:
        if arity <= 0:
            raise SignatureError("function arity must be positive")
        self._check_fresh(name)
        self.fixed[name] = (arity, host)

    def register_predicate(self, name: str, arity: int, host: Callable[..., bool]) -> None:
        if arity <= 0:
            raise SignatureError("predicate arity must be positive")
        self._check_fresh(name)
        self.predicates[name] = (arity, host)

    def register_seq_function(self, name: str, host: Callable[[tuple[int, ...]], int]) -> None:
        self._check_fresh(name)
        self.seq[name] = host

    def function(self, name: str) -> tuple[int, Callable[..., int]]:
        try:
            return self.fixed[name]
        except KeyError:
            raise SignatureError(f"unknown function symbol {name!r}") from None

    def predicate(self, name: str) -> tuple[int, Callable[..., bool]]:
        try:
            return self.predicates[name]
        except KeyError:
            raise SignatureError(f"unknown predicate symbol {name!r}") from None

    def seq_function(self, name: str) -> Callable[[tuple[int, ...]], int]:
        try:
            return self.seq[name]
        except KeyError:
            raise SignatureError(f"unknown sequence symbol {name!r}") from None

    def kind_of(self, name: str) -> str | None:
        if name in self.fixed:
            return "function"
        if name in self.predicates:
            return "predicate"
        if name in self.seq:
            return "seq"
        return None

    def copy(self) -> "Signature":
        out = Signature()
        out.fixed = dict(self.fixed)
        out.predicates = dict(self.predicates)
        out.seq = dict(self.seq)
        return out


def default_signature() -> Signature:
    """Signature with the standing builtins.

    Functions ``add``, ``mul``, ``monus`` (truncated subtraction) and the
    pairing projections ``d1``, ``d2``; the four comparison predicates,
    reachable through the infix REL syntax.
    """
    sig = Signature()
    sig.register_function("add", *FN_BUILTINS["+"])
    sig.register_function("mul", *FN_BUILTINS["*"])
    sig.register_function("monus", *FN_BUILTINS["monus"])
    sig.register_function("d1", *FN_BUILTINS["d1"])
    sig.register_function("d2", *FN_BUILTINS["d2"])
    for name in ("<", ">", "<=", ">="):
        sig.register_predicate(name, *PRED_BUILTINS[name])
    return sig


def load_signature(text: str, base: Signature | None = None,
                   seq_registry: dict[str, Callable] | None = None) -> Signature:
    """Extend a signature from file text.

    Lines: ``fn <name> <arity> <builtin>``, ``pred <name> <arity> <builtin>``,
    ``seqfn <name> <builtin|registry-key>``.  Blank lines and lines starting
    with ``#`` are skipped.  seq names resolve against SEQ_BUILTINS first and
    then against the supplied registry of session-defined hosts.
    """
    sig = (base or default_signature()).copy()
    registry = seq_registry or {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "fn" and len(parts) == 4:
                _, name, arity, key = parts
                if key not in FN_BUILTINS:
                    raise SignatureError(f"unknown function builtin {key!r}")
                builtin_arity, host = FN_BUILTINS[key]
                if int(arity) != builtin_arity:
                    raise SignatureError(f"builtin {key!r} has arity {builtin_arity}, not {arity}")
                sig.register_function(name, builtin_arity, host)
            elif parts[0] == "pred" and len(parts) == 4:
                _, name, arity, key = parts
                if key not in PRED_BUILTINS:
                    raise SignatureError(f"unknown predicate builtin {key!r}")
                builtin_arity, host = PRED_BUILTINS[key]
                if int(arity) != builtin_arity:
                    raise SignatureError(f"builtin {key!r} has arity {builtin_arity}, not {arity}")
                sig.register_predicate(name, builtin_arity, host)
            elif parts[0] == "seqfn" and len(parts) == 3:
                _, name, key = parts
                if key in SEQ_BUILTINS:
                    sig.register_seq_function(name, SEQ_BUILTINS[key])
                elif key in registry:
                    sig.register_seq_function(name, registry[key])
                else:
                    raise SignatureError(f"unknown sequence host {key!r}")
            else:
                raise SignatureError(f"unrecognised signature line: {line!r}")
        except SignatureError as exc:
            raise SignatureError(f"line {lineno}: {exc}") from None
    return sig


# ---------------------------------------------------------------------------
# Free variables and substitution


def free_vars(node: Term | Formula) -> frozenset[str]:
    """Free variables of a term or formula.

    The ellipsis binder is removed from the body's contribution but the
    bound term's variables are kept whole.
    """
    if isinstance(node, Variable):
        return frozenset((node.name,))
    if isinstance(node, Numeral):
        return frozenset()
    if isinstance(node, FixedApp):
        return frozenset().union(*(free_vars(a) for a in node.args)) if node.args else frozenset()
    if isinstance(node, SeqApp):
        return free_vars(node.arg)
    if isinstance(node, EllipsisApp):
        return (free_vars(node.body) - {node.binder}) | free_vars(node.bound)
    if isinstance(node, Eq):
        return free_vars(node.left) | free_vars(node.right)
    if isinstance(node, Pred):
        return frozenset().union(*(free_vars(a) for a in node.args)) if node.args else frozenset()
    if isinstance(node, Not):
        return free_vars(node.body)
    if isinstance(node, (And, Or, Implies)):
        return free_vars(node.left) | free_vars(node.right)
    if isinstance(node, (Forall, Exists)):
        return free_vars(node.body) - {node.var}
    raise TypeError(f"not a term or formula: {node!r}")


def substitute(node, var: str, replacement: Term):
    """Replace free occurrences of ``var`` with a term.

    Passing under a binder that the replacement mentions free is rejected
    with CaptureError; numerals and other closed terms are always safe.
    For an ellipsis application, substituting the binder variable itself
    rewrites only the bound term and leaves the body alone.
    """
    if isinstance(node, Variable):
        return replacement if node.name == var else node
    if isinstance(node, Numeral):
        return node
    if isinstance(node, FixedApp):
        return FixedApp(node.symbol, tuple(substitute(a, var, replacement) for a in node.args))
    if isinstance(node, SeqApp):
        return SeqApp(substitute(node.arg, var, replacement))
    if isinstance(node, EllipsisApp):
        new_bound = substitute(node.bound, var, replacement)
        if var == node.binder:
            return EllipsisApp(node.symbol, node.body, node.binder, new_bound)
        new_body = _substitute_under_binder(node.body, node.binder, var, replacement)
        return EllipsisApp(node.symbol, new_body, node.binder, new_bound)
    if isinstance(node, Eq):
        return Eq(substitute(node.left, var, replacement), substitute(node.right, var, replacement))
    if isinstance(node, Pred):
        return Pred(node.symbol, tuple(substitute(a, var, replacement) for a in node.args))
    if isinstance(node, Not):
        return Not(substitute(node.body, var, replacement))
    if isinstance(node, (And, Or, Implies)):
        return type(node)(substitute(node.left, var, replacement),
                          substitute(node.right, var, replacement))
    if isinstance(node, (Forall, Exists)):
        if node.var == var:
            return node
        new_body = _substitute_under_binder(node.body, node.var, var, replacement)
        return type(node)(node.var, new_body)
    raise TypeError(f"not a term or formula: {node!r}")


def _substitute_under_binder(body, binder: str, var: str, replacement: Term):
    if var in free_vars(body) and binder in free_vars(replacement):
        raise CaptureError(
            f"substituting {var!r} under binder {binder!r} would capture the replacement")
    return substitute(body, var, replacement)


# ---------------------------------------------------------------------------
# Tokenizer


@dataclass(frozen=True)
class _Token:
    kind: str  # 'nat' | 'name' | 'op' | 'eof'
    text: str
    line: int
    column: int


_OPERATORS = ("->", "..", "<=", ">=", "(", ")", "[", "]", ",", ":", ".", "|", "&", "!", "=", "<", ">")


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("nat", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        for op in _OPERATORS:
            if text.startswith(op, i):
                tokens.append(_Token("op", op, line, col))
                col += len(op)
                i += len(op)
                break
        else:
            raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, tokens: list[_Token], sig: Signature):
        self.tokens = tokens
        self.pos = 0
        self.sig = sig

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def fail(self, message: str) -> ParseError:
        tok = self.peek()
        return ParseError(message, tok.line, tok.column)

    def expect_op(self, op: str) -> _Token:
        tok = self.peek()
        if tok.kind != "op" or tok.text != op:
            raise self.fail(f"expected {op!r}, found {tok.text or 'end of input'!r}")
        return self.advance()

    def at_op(self, op: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text == op

    def parse_variable_name(self) -> str:
        tok = self.peek()
        if tok.kind != "name" or tok.text in RESERVED:
            raise self.fail("expected a variable name")
        self.advance()
        return tok.text

    # formula levels

    def parse_formula(self) -> Formula:
        tok = self.peek()
        if tok.kind == "name" and tok.text in ("forall", "exists"):
            self.advance()
            var = self.parse_variable_name()
            self.expect_op(".")
            body = self.parse_formula()
            return Forall(var, body) if tok.text == "forall" else Exists(var, body)
        return self.parse_imp()

    def parse_imp(self) -> Formula:
        left = self.parse_disj()
        if self.at_op("->"):
            self.advance()
            return Implies(left, self.parse_imp())
        return left

    def parse_disj(self) -> Formula:
        node = self.parse_conj()
        while self.at_op("|"):
            self.advance()
            node = Or(node, self.parse_conj())
        return node

    def parse_conj(self) -> Formula:
        node = self.parse_neg()
        while self.at_op("&"):
            self.advance()
            node = And(node, self.parse_neg())
        return node

    def parse_neg(self) -> Formula:
        if self.at_op("!"):
            self.advance()
            return Not(self.parse_neg())
        return self.parse_atom()

    def parse_atom(self) -> Formula:
        if self.at_op("("):
            self.advance()
            inner = self.parse_formula()
            self.expect_op(")")
            return inner
        tok = self.peek()
        if (tok.kind == "name" and tok.text not in RESERVED
                and self.sig.kind_of(tok.text) == "predicate"
                and self.peek(1).kind == "op" and self.peek(1).text == "("):
            name = self.advance().text
            args = self.parse_arg_list()
            arity, _ = self.sig.predicate(name)
            if len(args) != arity:
                raise self.fail(f"predicate {name!r} expects {arity} arguments, got {len(args)}")
            return Pred(name, tuple(args))
        left = self.parse_term()
        tok = self.peek()
        if tok.kind == "op" and tok.text in _REL_SYMBOLS:
            self.advance()
            right = self.parse_term()
            if tok.text == "=":
                return Eq(left, right)
            return Pred(tok.text, (left, right))
        raise self.fail("expected a relation after term")

    # terms

    def parse_arg_list(self) -> list[Term]:
        self.expect_op("(")
        args = [self.parse_term()]
        while self.at_op(","):
            self.advance()
            args.append(self.parse_term())
        self.expect_op(")")
        return args

    def parse_term(self) -> Term:
        tok = self.peek()
        if tok.kind == "nat":
            self.advance()
            return Numeral(int(tok.text))
        if tok.kind != "name":
            raise self.fail(f"expected a term, found {tok.text or 'end of input'!r}")
        if tok.text in ("forall", "exists"):
            raise self.fail(f"{tok.text!r} cannot start a term")
        name = self.advance().text
        if name == "f":
            self.expect_op("(")
            arg = self.parse_term()
            self.expect_op(")")
            return SeqApp(arg)
        if self.at_op("("):
            args = self.parse_arg_list()
            kind = self.sig.kind_of(name)
            if kind is None:
                raise self.fail(f"unknown symbol {name!r}")
            if kind != "function":
                raise self.fail(f"{name!r} is a {kind} symbol, not a fixed-arity function")
            arity, _ = self.sig.function(name)
            if len(args) != arity:
                raise self.fail(f"function {name!r} expects {arity} arguments, got {len(args)}")
            return FixedApp(name, tuple(args))
        if self.at_op("["):
            if self.sig.kind_of(name) != "seq":
                raise self.fail(f"{name!r} is not a declared sequence-tuple symbol")
            self.advance()
            body = self.parse_term()
            self.expect_op(":")
            binder = self.parse_variable_name()
            self.expect_op("..")
            bound = self.parse_term()
            self.expect_op("]")
            return EllipsisApp(name, body, binder, bound)
        return Variable(name)


def parse(text: str, sig: Signature | None = None) -> Formula:
    """Parse DSL text into a formula AST, resolving symbols against a signature."""
    sig = sig if sig is not None else default_signature()
    parser = _Parser(_tokenize(text), sig)
    formula = parser.parse_formula()
    tok = parser.peek()
    if tok.kind != "eof":
        raise parser.fail(f"unexpected trailing input {tok.text!r}")
    return formula


def parse_term(text: str, sig: Signature | None = None) -> Term:
    """Parse DSL text as a bare term."""
    sig = sig if sig is not None else default_signature()
    parser = _Parser(_tokenize(text), sig)
    term = parser.parse_term()
    tok = parser.peek()
    if tok.kind != "eof":
        raise parser.fail(f"unexpected trailing input {tok.text!r}")
    return term


# ---------------------------------------------------------------------------
# Printer

_LEVEL_FORMULA = 0
_LEVEL_IMP = 1
_LEVEL_OR = 2
_LEVEL_AND = 3
_LEVEL_NEG = 4


def print_term(term: Term) -> str:
    if isinstance(term, Numeral):
        return str(term.value)
    if isinstance(term, Variable):
        return term.name
    if isinstance(term, SeqApp):
        return f"f({print_term(term.arg)})"
    if isinstance(term, FixedApp):
        return f"{term.symbol}(" + ", ".join(print_term(a) for a in term.args) + ")"
    if isinstance(term, EllipsisApp):
        return (f"{term.symbol}[ {print_term(term.body)} : {term.binder}"
                f" .. {print_term(term.bound)} ]")
    raise TypeError(f"not a term: {term!r}")


def print_formula(formula: Formula) -> str:
    """Canonical text; reparsing yields a structurally equal AST."""
    return _print_at(formula, _LEVEL_FORMULA)


def _print_at(node: Formula, level: int) -> str:
    if isinstance(node, (Forall, Exists)):
        kw = "forall" if isinstance(node, Forall) else "exists"
        text = f"{kw} {node.var}. {_print_at(node.body, _LEVEL_FORMULA)}"
        return f"({text})" if level > _LEVEL_FORMULA else text
    if isinstance(node, Implies):
        text = f"{_print_at(node.left, _LEVEL_OR)} -> {_print_at(node.right, _LEVEL_IMP)}"
        return f"({text})" if level > _LEVEL_IMP else text
    if isinstance(node, Or):
        text = f"{_print_at(node.left, _LEVEL_OR)} | {_print_at(node.right, _LEVEL_AND)}"
        return f"({text})" if level > _LEVEL_OR else text
    if isinstance(node, And):
        text = f"{_print_at(node.left, _LEVEL_AND)} & {_print_at(node.right, _LEVEL_NEG)}"
        return f"({text})" if level > _LEVEL_AND else text
    if isinstance(node, Not):
        return f"!{_print_at(node.body, _LEVEL_NEG)}"
    if isinstance(node, Eq):
        return f"{print_term(node.left)} = {print_term(node.right)}"
    if isinstance(node, Pred):
        if node.symbol in _REL_SYMBOLS and len(node.args) == 2:
            return f"{print_term(node.args[0])} {node.symbol} {print_term(node.args[1])}"
        return f"{node.symbol}(" + ", ".join(print_term(a) for a in node.args) + ")"
    raise TypeError(f"not a formula: {node!r}")


# ---------------------------------------------------------------------------
# Sentence classification and prenex-2 sentence types


class SentenceClass(enum.Enum):
    QUANTIFIER_FREE = "quantifier-free"
    SIGMA2 = "sigma2"
    PI2 = "pi2"
    NESTED_OTHER = "nested-other"


def is_quantifier_free(formula: Formula) -> bool:
    if isinstance(formula, (Eq, Pred)):
        return True
    if isinstance(formula, Not):
        return is_quantifier_free(formula.body)
    if isinstance(formula, (And, Or, Implies)):
        return is_quantifier_free(formula.left) and is_quantifier_free(formula.right)
    if isinstance(formula, (Forall, Exists)):
        return False
    raise TypeError(f"not a formula: {formula!r}")


def classify_sentence(formula: Formula) -> SentenceClass:
    """Syntactic class of a closed formula.

    SIGMA2 and PI2 demand exactly the prenex shapes exists-forall and
    forall-exists over a quantifier-free matrix; anything else with
    quantifiers is NESTED_OTHER.
    """
    if free_vars(formula):
        raise LangError(f"classify_sentence needs a closed formula; free: {sorted(free_vars(formula))}")
    if is_quantifier_free(formula):
        return SentenceClass.QUANTIFIER_FREE
    if isinstance(formula, Exists) and isinstance(formula.body, Forall) \
            and is_quantifier_free(formula.body.body):
        return SentenceClass.SIGMA2
    if isinstance(formula, Forall) and isinstance(formula.body, Exists) \
            and is_quantifier_free(formula.body.body):
        return SentenceClass.PI2
    return SentenceClass.NESTED_OTHER


def _check_matrix(matrix: Formula, outer: str, inner: str, shape: str) -> None:
    if outer == inner:
        raise LangError(f"{shape} sentence needs distinct quantified variables, got {outer!r} twice")
    if not is_quantifier_free(matrix):
        raise LangError(f"{shape} matrix must be quantifier-free")
    extra = free_vars(matrix) - {outer, inner}
    if extra:
        raise LangError(f"{shape} matrix has stray free variables {sorted(extra)}")


@dataclass(frozen=True)
class Sigma2Sentence:
    """``exists outer. forall inner. matrix`` with quantifier-free matrix."""

    outer: str
    inner: str
    matrix: Formula

    def __post_init__(self):
        _check_matrix(self.matrix, self.outer, self.inner, "sigma2")

    def formula(self) -> Formula:
        return Exists(self.outer, Forall(self.inner, self.matrix))

    def text(self) -> str:
        return print_formula(self.formula())

    @classmethod
    def from_formula(cls, formula: Formula) -> "Sigma2Sentence":
        if classify_sentence(formula) is not SentenceClass.SIGMA2:
            raise LangError(f"not an exists-forall sentence: {print_formula(formula)}")
        return cls(formula.var, formula.body.var, formula.body.body)


@dataclass(frozen=True)
class Pi2Sentence:
    """``forall outer. exists inner. matrix`` with quantifier-free matrix."""

    outer: str
    inner: str
    matrix: Formula

    def __post_init__(self):
        _check_matrix(self.matrix, self.outer, self.inner, "pi2")

    def formula(self) -> Formula:
        return Forall(self.outer, Exists(self.inner, self.matrix))

    def text(self) -> str:
        return print_formula(self.formula())

    @classmethod
    def from_formula(cls, formula: Formula) -> "Pi2Sentence":
        if classify_sentence(formula) is not SentenceClass.PI2:
            raise LangError(f"not a forall-exists sentence: {print_formula(formula)}")
        return cls(formula.var, formula.body.var, formula.body.body)
