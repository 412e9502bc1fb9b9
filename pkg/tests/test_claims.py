import pytest
from hypothesis import given, strategies as st

from moricensus.audit import default_claims_text
from moricensus.claims import (
    EVAL_GUARD,
    BinOp,
    Claim,
    IntLit,
    Neg,
    evaluate,
    evaluate_claims,
    format_claims,
    parse_claims,
)
from moricensus.errors import ParseError


def parse_one(line):
    (claim,) = parse_claims(line)
    return claim


def test_parse_basic_claim():
    claim = parse_one("claim t_total: 83+1+45 == 129 expect=holds")
    assert claim.name == "t_total"
    assert claim.lhs == BinOp("+", BinOp("+", IntLit(83), IntLit(1)), IntLit(45))
    assert claim.rhs == IntLit(129)
    assert claim.expect_holds
    assert claim.cite == ""


def test_parse_with_cite_and_spacing():
    claim = parse_one(
        'claim   x :  1 *  2+3 ==   5   expect=holds   cite="someplace"'
    )
    assert claim.cite == "someplace"
    verdict = evaluate(claim)
    assert verdict.holds


def test_parse_rejects_empty_expressions():
    with pytest.raises(ParseError):
        parse_claims("claim empty: == expect=holds")


def test_parse_rejects_missing_equality():
    with pytest.raises(ParseError):
        parse_claims("claim x: 1 + 1 expect=holds")


def test_parse_rejects_garbage_token_with_position():
    with pytest.raises(ParseError) as exc_info:
        parse_claims("claim x: 1 + $ == 2 expect=holds")
    assert exc_info.value.line == 1
    assert exc_info.value.column > 1


def test_parse_rejects_duplicate_names():
    with pytest.raises(ParseError):
        parse_claims(
            "claim x: 1 == 1 expect=holds\nclaim x: 2 == 2 expect=holds\n"
        )


def test_parse_rejects_variables():
    with pytest.raises(ParseError):
        parse_claims("claim x: n + 1 == 2 expect=holds")


def test_parse_line_numbers_in_errors():
    with pytest.raises(ParseError) as exc_info:
        parse_claims("# ok\nclaim a: 1 == 1 expect=holds\nclaim b: ) == 1 expect=holds")
    assert exc_info.value.line == 3


def test_expected_failure_claim_parses_and_fails():
    claim = parse_one(
        'claim t_cones_proof: 118*6+11*3 == 747 expect=fails cite="proof display"'
    )
    verdict = evaluate(claim)
    assert verdict.lhs_value == 741
    assert verdict.rhs_value == 747
    assert not verdict.holds
    assert verdict.as_expected


@pytest.mark.parametrize(
    "expr,value",
    [
        ("1*1 + 2*2 + 10*3 + 437*6", 2657),
        ("7+10+15+12+57+45+34+24+15", 219),
        ("0", 0),
        ("-1 - (-3) + 1", 3),
        ("2 * (3 + 4)", 14),
        ("-(2 * 3)", -6),
        ("--5", 5),
        ("10 - 2 - 3", 5),
    ],
)
def test_exact_evaluation(expr, value):
    claim = parse_one(f"claim x: {expr} == {value} expect=holds")
    verdict = evaluate(claim)
    assert verdict.lhs_value == value
    assert verdict.holds


def test_evaluation_overflow_guard():
    big = EVAL_GUARD
    claim = parse_one(f"claim x: {big} * 2 == 0 expect=fails")
    with pytest.raises(OverflowError):
        evaluate(claim)


def test_format_parse_round_trip_on_shipped_file():
    claims = parse_claims(default_claims_text())
    assert parse_claims(format_claims(claims)) == claims


exprs = st.recursive(
    st.builds(IntLit, st.integers(0, 99)),
    lambda children: st.one_of(
        st.builds(Neg, children),
        st.builds(BinOp, st.sampled_from("+-*"), children, children),
    ),
    max_leaves=12,
)


@given(exprs, exprs)
def test_format_parse_round_trip_property(lhs, rhs):
    claims = [Claim(name="x", lhs=lhs, rhs=rhs, expect_holds=True, cite="q")]
    assert parse_claims(format_claims(claims)) == claims


def test_empty_claims_file():
    report = evaluate_claims(parse_claims(""))
    assert report.verdicts == ()
    assert report.exit_status == 0


def test_exit_status_contract():
    text = (
        "claim good: 1 + 1 == 2 expect=holds\n"
        "claim bad_on_purpose: 2 + 2 == 5 expect=fails\n"
    )
    report = evaluate_claims(parse_claims(text))
    assert report.exit_status == 0
    # flip a single expectation and the report must go red
    mutated = text.replace("expect=fails", "expect=holds")
    assert evaluate_claims(parse_claims(mutated)).exit_status == 1
    mutated = text.replace("claim good: 1 + 1 == 2", "claim good: 1 + 1 == 3")
    assert evaluate_claims(parse_claims(mutated)).exit_status == 1


def test_expected_failures_become_findings():
    report = evaluate_claims(
        parse_claims('claim off: 36 == 45 expect=fails cite="subcount"')
    )
    assert len(report.findings) == 1
    assert "36 != 45" in report.findings[0]


def test_shipped_claims_all_as_expected():
    report = evaluate_claims(parse_claims(default_claims_text()))
    assert report.exit_status == 0
    names = {v.name for v in report.verdicts}
    assert "t_cones_proof_display" in names
    assert "t_low_low_subcount" in names
    by_name = {v.name: v for v in report.verdicts}
    assert not by_name["t_cones_proof_display"].holds
    assert by_name["t_cones_proof_display"].lhs_value == 741
    assert not by_name["t_low_low_subcount"].holds
    assert by_name["t_cones"].holds
    every_cited = all(v.cite for v in report.verdicts)
    assert every_cited
