import random

import pytest

from guessability.lang import (
    And,
    CaptureError,
    EllipsisApp,
    Eq,
    Exists,
    Forall,
    Implies,
    LangError,
    Not,
    Numeral,
    Or,
    ParseError,
    Pi2Sentence,
    Pred,
    SentenceClass,
    SeqApp,
    SignatureError,
    Sigma2Sentence,
    Variable,
    classify_sentence,
    default_signature,
    free_vars,
    load_signature,
    parse,
    parse_term,
    print_formula,
    print_term,
    substitute,
)

import formula_gen


@pytest.fixture
def sig():
    base = default_signature()
    base.register_seq_function("G", lambda t: sum(t))
    return base


# ---------------------------------------------------------------------------
# free variables


def test_free_vars_of_a_variable():
    assert free_vars(Variable("x")) == {"x"}


def test_free_vars_ellipsis_removes_binder_keeps_bound(sig):
    term = parse_term("G[ f(x) : x .. y ]", sig)
    assert free_vars(term) == {"y"}


def test_free_vars_ellipsis_bound_reintroduces_binder_name(sig):
    term = parse_term("G[ f(x) : x .. x ]", sig)
    assert free_vars(term) == {"x"}


def test_free_vars_quantifier_removes_bound_variable(sig):
    assert free_vars(parse("forall x. f(x) = y", sig)) == {"y"}


# ---------------------------------------------------------------------------
# substitution


def test_substitute_into_bound_term_only_other_var(sig):
    term = parse_term("G[ f(x) : x .. y ]", sig)
    assert substitute(term, "y", Numeral(7)) == parse_term("G[ f(x) : x .. 7 ]", sig)


def test_substitute_binder_var_rewrites_only_the_bound(sig):
    term = parse_term("G[ f(x) : x .. x ]", sig)
    result = substitute(term, "x", Numeral(3))
    assert result == parse_term("G[ f(x) : x .. 3 ]", sig)
    assert result.body == term.body


def test_substitute_no_free_occurrence_is_identity(sig):
    term = parse_term("f(0)", sig)
    assert substitute(term, "x", Numeral(5)) == term


def test_substitute_passes_into_body_and_bound(sig):
    term = parse_term("G[ add(f(z), y) : z .. y ]", sig)
    result = substitute(term, "y", Numeral(2))
    assert result == parse_term("G[ add(f(z), 2) : z .. 2 ]", sig)


def test_substitute_rejects_capture_under_ellipsis_binder(sig):
    term = parse_term("G[ add(f(z), y) : z .. 0 ]", sig)
    with pytest.raises(CaptureError):
        substitute(term, "y", Variable("z"))


def test_substitute_rejects_capture_under_quantifier(sig):
    formula = parse("forall z. f(z) = y", sig)
    with pytest.raises(CaptureError):
        substitute(formula, "y", Variable("z"))


def test_substitute_closed_terms_always_pass_binders(sig):
    term = parse_term("G[ add(f(z), y) : z .. 0 ]", sig)
    assert substitute(term, "y", parse_term("f(4)", sig)) == \
        parse_term("G[ add(f(z), f(4)) : z .. 0 ]", sig)


def test_substitute_shadowed_quantifier_variable(sig):
    formula = parse("forall x. f(x) = 0", sig)
    assert substitute(formula, "x", Numeral(9)) == formula


def test_closed_substitution_removes_exactly_that_variable():
    rnd = random.Random(77)
    for _ in range(200):
        term = formula_gen.gen_term(rnd, depth=3, vars=("x", "y"))
        closed = Numeral(rnd.randrange(9))
        assert free_vars(substitute(term, "x", closed)) == free_vars(term) - {"x"}


# ---------------------------------------------------------------------------
# parsing


def test_parse_prenex_sentence(sig):
    assert parse("exists x. forall y. f(x) = 0", sig) == Exists(
        "x", Forall("y", Eq(SeqApp(Variable("x")), Numeral(0))))


def test_parse_ellipsis_equation(sig):
    assert parse("G[ f(z) : z .. y ] = 1", sig) == Eq(
        EllipsisApp("G", SeqApp(Variable("z")), "z", Variable("y")), Numeral(1))


def test_parse_reports_line_and_column(sig):
    with pytest.raises(ParseError) as err:
        parse("forall x. (", sig)
    assert err.value.line == 1
    assert err.value.column >= 11


def test_parse_connective_precedence(sig):
    got = parse("f(0) = 0 | f(1) = 1 & f(2) = 2 -> f(3) = 3", sig)
    assert isinstance(got, Implies)
    assert isinstance(got.left, Or)
    assert isinstance(got.left.right, And)


def test_parse_implication_right_associative(sig):
    got = parse("0 = 0 -> 1 = 1 -> 2 = 2", sig)
    assert isinstance(got, Implies)
    assert isinstance(got.right, Implies)


def test_parse_negation_and_parens(sig):
    got = parse("!(0 = 1 & 1 = 1)", sig)
    assert got == Not(And(Eq(Numeral(0), Numeral(1)), Eq(Numeral(1), Numeral(1))))


def test_parse_unknown_applied_symbol(sig):
    with pytest.raises(ParseError):
        parse("h(1) = 0", sig)


def test_parse_arity_mismatch(sig):
    with pytest.raises(ParseError):
        parse("add(1) = 0", sig)


def test_parse_undeclared_ellipsis_symbol(sig):
    with pytest.raises(ParseError):
        parse("H[ f(z) : z .. 3 ] = 0", sig)


def test_parse_rejects_trailing_input(sig):
    with pytest.raises(ParseError):
        parse("0 = 0 )", sig)


def test_parse_comparisons(sig):
    assert parse("1 <= 2", sig) == Pred("<=", (Numeral(1), Numeral(2)))
    assert parse("y > x", sig) == Pred(">", (Variable("y"), Variable("x")))


# ---------------------------------------------------------------------------
# printing


def test_print_trivial_equation():
    assert print_formula(Eq(Numeral(0), Numeral(0))) == "0 = 0"


def test_print_ellipsis_canonical_form(sig):
    term = parse_term("G[f(z):z..y]", sig)
    assert print_term(term) == "G[ f(z) : z .. y ]"


def test_print_parenthesizes_quantifier_under_connective(sig):
    formula = And(Eq(Numeral(0), Numeral(0)), Forall("x", Eq(Numeral(1), Numeral(1))))
    text = print_formula(formula)
    assert parse(text, sig) == formula


def test_print_parse_round_trip_on_generated_asts():
    rnd = random.Random(1729)
    sig = formula_gen.generator_signature()
    for _ in range(300):
        ast = formula_gen.gen_qf(rnd, depth=3, vars=("x", "y"))
        assert parse(print_formula(ast), sig) == ast


def test_print_parse_round_trip_with_quantifiers():
    rnd = random.Random(8)
    sig = formula_gen.generator_signature()
    for _ in range(100):
        matrix = formula_gen.gen_qf(rnd, depth=2, vars=("x", "y"))
        ast = Exists("x", Forall("y", matrix))
        assert parse(print_formula(ast), sig) == ast


# ---------------------------------------------------------------------------
# classification


def test_classify_sigma2(sig):
    got = classify_sentence(parse("exists x. forall y. f(x) = 0", sig))
    assert got is SentenceClass.SIGMA2


def test_classify_quantifier_free(sig):
    assert classify_sentence(parse("0 = 0", sig)) is SentenceClass.QUANTIFIER_FREE


def test_classify_nested_other(sig):
    got = classify_sentence(parse("forall a. forall b. exists n. f(n) = b", sig))
    assert got is SentenceClass.NESTED_OTHER


def test_classify_pi2(sig):
    assert classify_sentence(parse("forall x. exists y. f(y) = 0", sig)) is SentenceClass.PI2


def test_classify_single_quantifier_is_nested_other(sig):
    assert classify_sentence(parse("forall x. f(x) = 0", sig)) is SentenceClass.NESTED_OTHER


def test_classify_rejects_open_formulas(sig):
    with pytest.raises(LangError):
        classify_sentence(parse("f(x) = 0", sig))


def test_sentence_wrappers_validate_shape(sig):
    sigma = Sigma2Sentence.from_formula(parse("exists x. forall y. f(x) = y", sig))
    assert sigma.outer == "x" and sigma.inner == "y"
    assert parse(sigma.text(), sig) == sigma.formula()
    with pytest.raises(LangError):
        Pi2Sentence.from_formula(parse("exists x. forall y. f(x) = y", sig))
    with pytest.raises(LangError):
        Sigma2Sentence("x", "y", Eq(Variable("q"), Numeral(0)))


# ---------------------------------------------------------------------------
# signatures


def test_reserved_symbol_not_redeclarable():
    sig = default_signature()
    with pytest.raises(SignatureError):
        sig.register_function("f", 1, lambda a: a)
    with pytest.raises(SignatureError):
        sig.register_seq_function("forall", lambda t: 0)


def test_names_unique_across_kinds():
    sig = default_signature()
    sig.register_seq_function("G", lambda t: 0)
    with pytest.raises(SignatureError):
        sig.register_function("G", 2, lambda a, b: a)


def test_load_signature_lines():
    sig = load_signature("# comment\nfn g 2 constfam\nseqfn Gz contains0\npred below 2 <\n")
    assert sig.function("g")[0] == 2
    assert sig.seq_function("Gz")((3, 0, 2)) == 1
    assert sig.predicate("below")[1](1, 2)


def test_load_signature_registry_keys():
    sig = load_signature("seqfn T mine\n", seq_registry={"mine": lambda t: 42})
    assert sig.seq_function("T")(()) == 42


@pytest.mark.parametrize("line", ["fn g 3 constfam", "fn g 2 nosuch", "seqfn T nosuch",
                                  "pred p 2 nosuch", "wat", "fn g constfam"])
def test_load_signature_rejects_bad_lines(line):
    with pytest.raises(SignatureError):
        load_signature(line)


def test_default_signature_builtins():
    sig = default_signature()
    assert sig.function("monus")[1](3, 5) == 0
    assert sig.function("add")[1](2, 3) == 5
    assert sig.function("mul")[1](2, 3) == 6
    assert sig.predicate(">")[1](2, 1)


def test_sentence_wrappers_reject_shadowed_variables(sig):
    with pytest.raises(LangError):
        Sigma2Sentence.from_formula(parse("exists x. forall x. f(x) = 0", sig))
    with pytest.raises(LangError):
        Pi2Sentence("x", "x", Eq(Variable("x"), Numeral(0)))
