import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from respoly.fo import (
    And,
    Const,
    Equal,
    Exists,
    Forall,
    FormulaSyntaxError,
    Implies,
    Less,
    Letter,
    Mod,
    Not,
    Or,
    count_models,
    parse_formula,
)

VARS = ("x", "y")
words_ab = st.text(alphabet="ab", max_size=7)


def formulas():
    leaves = st.one_of(
        st.builds(Letter, st.sampled_from("ab"), st.sampled_from(VARS)),
        st.builds(Less, st.sampled_from(VARS), st.sampled_from(VARS)),
        st.builds(Equal, st.sampled_from(VARS), st.sampled_from(VARS)),
        st.builds(Mod, st.sampled_from(VARS), st.integers(0, 3), st.integers(1, 3)),
        st.builds(Const, st.booleans()),
    )

    def extend(children):
        return st.one_of(
            st.builds(Not, children),
            st.builds(And, st.lists(children, min_size=1, max_size=3).map(tuple)),
            st.builds(Or, st.lists(children, min_size=1, max_size=3).map(tuple)),
            st.builds(Implies, children, children),
            st.builds(Exists, st.sampled_from(VARS), children),
            st.builds(Forall, st.sampled_from(VARS), children),
        )

    return st.recursive(leaves, extend, max_leaves=6)


@given(formulas())
def test_printing_round_trips(phi):
    assert parse_formula(str(phi)) == phi


@settings(max_examples=60)
@given(formulas(), words_ab)
def test_count_is_a_direct_enumeration(phi, w):
    n = len(w)
    expected = sum(phi.holds(w, {"x": i, "y": j}) for i in range(n) for j in range(n))
    assert count_models(phi, VARS, w) == expected


@given(words_ab)
def test_letter_product(w):
    phi = parse_formula("and(atom(a,x), atom(b,y))")
    assert count_models(phi, VARS, w) == w.count("a") * w.count("b")


@given(words_ab)
def test_ordered_pairs(w):
    phi = parse_formula("and(atom(a,x), atom(b,y), lt(x,y))")
    expected = sum(1 for i, c in enumerate(w) if c == "a" for d in w[i + 1:] if d == "b")
    assert count_models(phi, VARS, w) == expected


def test_mod_counts_from_zero():
    phi = parse_formula("and(atom(a,x), mod(x,0,2))")
    assert count_models(phi, ("x",), "aaaaa") == 3
    assert count_models(parse_formula("mod(x,1,2)"), ("x",), "aaaaa") == 2


def test_quantifiers():
    last_a = parse_formula("and(atom(a,x), forall(y, not(lt(x,y))))")
    assert count_models(last_a, ("x",), "bba") == 1
    assert count_models(last_a, ("x",), "aab") == 0
    some_b_after = parse_formula("exists(y, and(lt(x,y), atom(b,y)))")
    assert count_models(some_b_after, ("x",), "abab") == 3


def test_sentences_count_as_zero_or_one():
    has_b = parse_formula("exists(x, atom(b,x))")
    assert count_models(has_b, (), "aab") == 1
    assert count_models(has_b, (), "aaa") == 0
    assert count_models(parse_formula("true"), (), "") == 1


def test_empty_word_has_no_assignments():
    assert count_models(parse_formula("true"), ("x",), "") == 0


def test_free_vars():
    phi = parse_formula("and(atom(a,x), exists(y, lt(x,y)))")
    assert phi.free_vars() == {"x"}


def test_whitespace_is_ignored():
    assert parse_formula(" and( atom(a , x),lt(x,y) ) ") == parse_formula("and(atom(a,x),lt(x,y))")


@pytest.mark.parametrize(
    "text",
    ["", "atom(a,x", "atom(a,x))", "foo(x)", "mod(x,1,0)", "mod(x,y,2)", "lt(x,1)", "and()", "exists(x)"],
)
def test_syntax_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text)
