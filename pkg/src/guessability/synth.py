"""Constructions between sentences, overguessers, and guessers.

The bridge in both directions: an exists-forall sentence yields a bounded
overguesser mu; a matched exists-forall / forall-exists pair yields a guesser
by comparing mu for the set against mu for its complement; a guesser (as a
sequence-tuple symbol) yields the pair of sentences that define the set it
guesses; an overguesser host yields an exists-forall sentence through the
pairing trick; a countable family and a finite topology table each yield
their defining sentences.  Guesser combinators close guessable sets under
boolean operations.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Callable

from . import pairing
from .lang import (
    LangError,
    Not,
    Numeral,
    Pi2Sentence,
    Signature,
    Sigma2Sentence,
    default_signature,
    parse,
    substitute,
)
from .oracle import FinitePrefix
from .semantics import attempt


# ---------------------------------------------------------------------------
# ExtendedNat


@functools.total_ordering
@dataclass(frozen=True)
class ExtendedNat:
    """A natural or the point at infinity, totally ordered."""

    value: int | None  # None encodes infinity

    def __post_init__(self):
        if self.value is not None and self.value < 0:
            raise ValueError("finite values must be naturals")

    @classmethod
    def finite(cls, n: int) -> "ExtendedNat":
        return cls(int(n))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __le__(self, other: "ExtendedNat") -> bool:
        if self.value is None:
            return other.value is None
        if other.value is None:
            return True
        return self.value <= other.value

    def __repr__(self):
        return "ExtendedNat(inf)" if self.value is None else f"ExtendedNat({self.value})"


INFINITY = ExtendedNat(None)


# ---------------------------------------------------------------------------
# Guessers and overguessers


@dataclass(frozen=True)
class Guesser:
    """Total map from nonempty prefixes to {0, 1}."""

    evaluate: Callable[[FinitePrefix], int]
    provenance: str = ""

    def __call__(self, prefix: FinitePrefix) -> int:
        if len(prefix) == 0:
            raise ValueError("guessers need at least one observed entry")
        guess = self.evaluate(prefix)
        if guess not in (0, 1):
            raise ValueError(f"guesser returned {guess!r}; guesses are 0 or 1")
        return guess


@dataclass(frozen=True)
class Overguesser:
    """Total map from nonempty prefixes into the extended naturals."""

    evaluate: Callable[[FinitePrefix], ExtendedNat]
    provenance: str = ""

    def __call__(self, prefix: FinitePrefix) -> ExtendedNat:
        if len(prefix) == 0:
            raise ValueError("overguessers need at least one observed entry")
        return self.evaluate(prefix)


@dataclass(frozen=True)
class Delta2Spec:
    """A forall-exists and an exists-forall sentence claimed to define one set.

    Semantic agreement of the two sentences is an assumption, checked only
    on labelled corpora.
    """

    pi2: Pi2Sentence
    sigma2: Sigma2Sentence


@dataclass(frozen=True)
class PairingCodec:
    """Onto map from naturals to pairs, with its two projections."""

    decode: Callable[[int], tuple[int, int]]
    encode: Callable[[int, int], int]
    provenance: str = ""

    def d1(self, n: int) -> int:
        return self.decode(n)[0]

    def d2(self, n: int) -> int:
        return self.decode(n)[1]


def diagonal_codec() -> PairingCodec:
    return PairingCodec(decode=pairing.decode, encode=pairing.encode, provenance="diagonal")


@dataclass(frozen=True)
class CountableFamily:
    """An enumerated family of sequences, presented as g(m, n) = value of member m at n."""

    g: Callable[[int, int], int]
    provenance: str = ""


def constants_family() -> CountableFamily:
    return CountableFamily(g=lambda m, n: m, provenance="constant sequences")


# ---------------------------------------------------------------------------
# mu from an exists-forall sentence


def mu_from_sigma2(sentence: Sigma2Sentence, prefix: FinitePrefix,
                   sig: Signature | None = None) -> ExtendedNat:
    """Least unrefuted outer witness for the sentence, searched up to len(prefix).

    A pair (a, b) counts as nice when the attempt over the zero-padded
    prefix fails or holds; a is very nice when (a, b) is nice for every
    b <= len(prefix).  A witness past the prefix's last index cannot be
    refuted by what has been observed, so the search never looks beyond it:
    the value is the least genuinely very nice a within the prefix, else
    len(prefix).  Infinity only arises for empty search ranges, which the
    length bound rules out here.
    """
    if len(prefix) == 0:
        raise ValueError("mu needs at least one observed entry")
    sig = sig if sig is not None else default_signature()
    search_bound = len(prefix)
    last_index = prefix.last_index
    for a in range(search_bound + 1):
        if a > last_index:
            # unrefutable beyond the observed horizon; least such a wins
            return ExtendedNat.finite(a)
        if _very_nice(sentence, a, prefix, search_bound, sig):
            return ExtendedNat.finite(a)
    return INFINITY


def _very_nice(sentence: Sigma2Sentence, a: int, prefix: FinitePrefix,
               search_bound: int, sig: Signature | None) -> bool:
    outer_closed = substitute(sentence.matrix, sentence.outer, Numeral(a))
    for b in range(search_bound + 1):
        closed = substitute(outer_closed, sentence.inner, Numeral(b))
        outcome = attempt(closed, prefix, sig)
        if outcome.succeeded and not outcome.truth:
            return False
    return True


def overguesser_from_sigma2(sentence: Sigma2Sentence,
                            sig: Signature | None = None) -> Overguesser:
    """Package mu for a sentence as a prefix-indexed overguesser."""
    return Overguesser(
        evaluate=lambda prefix: mu_from_sigma2(sentence, prefix, sig),
        provenance=sentence.text(),
    )


# ---------------------------------------------------------------------------
# Guesser from a Delta2 pair


def complement_sigma2(spec: Delta2Spec) -> Sigma2Sentence:
    """The exists-forall sentence for the complement set: negate the pi2 matrix."""
    return Sigma2Sentence(spec.pi2.outer, spec.pi2.inner, Not(spec.pi2.matrix))


def guesser_from_delta2(spec: Delta2Spec, sig: Signature | None = None) -> Guesser:
    """Guess 1 exactly when mu for the set stays at or below mu for the complement."""
    sig = sig if sig is not None else default_signature()
    mu_sentence = spec.sigma2
    nu_sentence = complement_sigma2(spec)

    def evaluate(prefix: FinitePrefix) -> int:
        mu = mu_from_sigma2(mu_sentence, prefix, sig)
        nu = mu_from_sigma2(nu_sentence, prefix, sig)
        return 1 if mu <= nu else 0

    return Guesser(
        evaluate=evaluate,
        provenance=f"mu<=nu for sigma2={mu_sentence.text()!r} pi2={spec.pi2.text()!r}",
    )


# ---------------------------------------------------------------------------
# Sentences from a guesser


def guesser_sentence_texts(seq_symbol: str) -> tuple[str, str]:
    """The (sigma2, pi2) sentence texts defining the set a guesser converges on."""
    call = f"{seq_symbol}[ f(z) : z .. y ]"
    sigma2 = f"exists x. forall y. ((y > x) -> {call} = 1)"
    pi2 = f"forall x. exists y. ((y > x) & {call} = 1)"
    return sigma2, pi2


def sentences_from_guesser(seq_symbol: str, sig: Signature) -> Delta2Spec:
    """Defining sentences for the set guessed by a registered {0,1}-valued symbol."""
    if seq_symbol not in sig.seq:
        raise LangError(f"{seq_symbol!r} is not a registered sequence-tuple symbol")
    sigma2_text, pi2_text = guesser_sentence_texts(seq_symbol)
    return Delta2Spec(
        pi2=Pi2Sentence.from_formula(parse(pi2_text, sig)),
        sigma2=Sigma2Sentence.from_formula(parse(sigma2_text, sig)),
    )


def register_guesser(sig: Signature, name: str, guesser: Guesser) -> None:
    """Expose a guesser as a sequence-tuple symbol (tuples become prefixes)."""
    sig.register_seq_function(name, lambda t: guesser(FinitePrefix(t)))


# ---------------------------------------------------------------------------
# Exists-forall sentence from an overguesser


def mu_prime_host(overguesser: Overguesser) -> Callable[[tuple[int, ...]], int]:
    """Shifted encoding of an overguesser: finite v maps to v+1, infinity to 0.

    Memoised per prefix tuple; the overguesser is deterministic so the cache
    is transparent.
    """
    cache: dict[tuple[int, ...], int] = {}

    def host(t: tuple[int, ...]) -> int:
        if t not in cache:
            v = overguesser(FinitePrefix(t))
            cache[t] = 0 if v.is_infinite else v.value + 1
        return cache[t]

    return host


def overguesser_sentence_text(mu_symbol: str, d1: str = "d1", d2: str = "d2") -> str:
    call = f"{mu_symbol}[ f(z) : z .. m3 ]"
    return (f"exists m. forall m3. ((m3 > {d2}(m)) -> "
            f"(0 < {call} & {call} < {d1}(m)))")


def sigma2_from_overguesser(mu_symbol: str, codec: PairingCodec,
                            sig: Signature) -> Sigma2Sentence:
    """Defining sentence for the set an overguesser stays bounded on.

    ``mu_symbol`` must be bound to the shifted host (see mu_prime_host); the
    codec's projections must match the ``d1``/``d2`` functions in the
    signature, which the default signature provides.
    """
    if mu_symbol not in sig.seq:
        raise LangError(f"{mu_symbol!r} is not a registered sequence-tuple symbol")
    for name, proj in (("d1", codec.d1), ("d2", codec.d2)):
        _, host = sig.function(name)
        if any(host(n) != proj(n) for n in range(32)):
            raise LangError(f"signature function {name!r} disagrees with the codec projection")
    return Sigma2Sentence.from_formula(parse(overguesser_sentence_text(mu_symbol), sig))


# ---------------------------------------------------------------------------
# Exists-forall sentence from a countable family


def sigma2_from_countable_family(family: CountableFamily, sig: Signature,
                                 name: str = "g") -> Sigma2Sentence:
    """Defining sentence ``exists x. forall y. name(x, y) = f(y)``.

    Registers the family under ``name`` if absent; an existing binding is
    kept as is.
    """
    if name not in sig.fixed:
        sig.register_function(name, 2, family.g)
    return Sigma2Sentence.from_formula(parse(f"exists x. forall y. {name}(x, y) = f(y)", sig))


# ---------------------------------------------------------------------------
# Delta2 pair from finite topology tables


@dataclass(frozen=True)
class TopologySpec:
    """Finite table of basic open sets indexed by (i, j).

    ``table[(i, j)]`` is the prefix whose extensions form that basic open
    set; the empty prefix stands for the whole space.  Rows (values of i)
    absent from the table fall back to ``default`` for every j; a (i, j)
    hole inside a listed row contributes the empty set.
    """

    table: dict[tuple[int, int], FinitePrefix] = field(default_factory=dict)
    default: FinitePrefix = FinitePrefix(())

    def listed_rows(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.table)

    def lookup(self, i: int, j: int) -> FinitePrefix | None:
        """Prefix for the (i, j) cell, or None for an empty contribution."""
        if (i, j) in self.table:
            return self.table[(i, j)]
        if i in self.listed_rows():
            return None
        return self.default


def _membership_host(spec: TopologySpec) -> Callable[[tuple[int, ...]], int]:
    def host(t: tuple[int, ...]) -> int:
        i, j, observed = t[0], t[1], t[2:]
        cell = spec.lookup(i, j)
        if cell is None:
            return 0
        if len(cell) == 0:
            return 1
        return 1 if observed == cell.entries else 0

    return host


def _length_host(spec: TopologySpec) -> Callable[[int, int], int]:
    def host(i: int, j: int) -> int:
        cell = spec.lookup(i, j)
        if cell is None or len(cell) == 0:
            return 0
        return len(cell) - 1

    return host


def _select_host(m: int, i: int, j: int, w: int) -> int:
    if m == 0:
        return i
    if m == 1:
        return j
    return w


def delta2_from_topology(for_set: TopologySpec, for_complement: TopologySpec,
                         sig: Signature, name_prefix: str = "") -> Delta2Spec:
    """Defining pair for a set given by basic-open tables for it and its complement.

    Registers, under optionally prefixed names: variadic membership tests
    ``tauS``/``tauC`` (1 iff the observed values equal the table prefix for
    the (i, j) carried in the tuple's first two slots), length functions
    ``lenS``/``lenC``, and a shared 4-ary selector ``sel`` used to smuggle
    i, j and the sequence values into one tuple.
    """
    if not for_set.table or not for_complement.table:
        raise ValueError("topology tables must be nonempty")
    tau_s = f"{name_prefix}tauS"
    tau_c = f"{name_prefix}tauC"
    len_s = f"{name_prefix}lenS"
    len_c = f"{name_prefix}lenC"
    sig.register_seq_function(tau_s, _membership_host(for_set))
    sig.register_seq_function(tau_c, _membership_host(for_complement))
    sig.register_function(len_s, 2, _length_host(for_set))
    sig.register_function(len_c, 2, _length_host(for_complement))
    if "sel" not in sig.fixed:
        sig.register_function("sel", 4, _select_host)

    def tuple_term(tau: str, length: str) -> str:
        return (f"{tau}[ sel(z, i, j, f(monus(z, 2))) : z"
                f" .. add({length}(i, j), 2) ]")

    pi2_text = f"forall i. exists j. {tuple_term(tau_s, len_s)} = 1"
    sigma2_text = f"exists i. forall j. {tuple_term(tau_c, len_c)} = 0"
    return Delta2Spec(
        pi2=Pi2Sentence.from_formula(parse(pi2_text, sig)),
        sigma2=Sigma2Sentence.from_formula(parse(sigma2_text, sig)),
    )


# ---------------------------------------------------------------------------
# Combinators and builtin guessers


def guesser_not(g: Guesser) -> Guesser:
    return Guesser(evaluate=lambda p: 1 - g(p), provenance=f"not({g.provenance})")


def guesser_and(g1: Guesser, g2: Guesser) -> Guesser:
    return Guesser(evaluate=lambda p: min(g1(p), g2(p)),
                   provenance=f"and({g1.provenance}, {g2.provenance})")


def guesser_or(g1: Guesser, g2: Guesser) -> Guesser:
    return Guesser(evaluate=lambda p: max(g1(p), g2(p)),
                   provenance=f"or({g1.provenance}, {g2.provenance})")


def contains_zero_guesser() -> Guesser:
    """Guess no until a 0 shows up, then yes forever."""
    return Guesser(evaluate=lambda p: 1 if 0 in p.entries else 0,
                   provenance="contains-zero")


def contains_zero_delta2(sig: Signature | None = None) -> Delta2Spec:
    """The running-example pair for the set of sequences containing a zero."""
    return Delta2Spec(
        pi2=Pi2Sentence.from_formula(parse("forall x. exists y. f(y) = 0", sig)),
        sigma2=Sigma2Sentence.from_formula(parse("exists x. forall y. f(x) = 0", sig)),
    )
