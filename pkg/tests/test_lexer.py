from __future__ import annotations

from aometrics.diagnostics import Severity
from aometrics.lexer import TokenKind, tokenize
from helpers import TEST_FIXTURES


def kinds_and_texts(tokens):
    return [(t.kind, t.text) for t in tokens if t.kind is not TokenKind.END]


def test_line_comment_elided():
    tokens, diags = tokenize("// class Fake\nclass Real {}")
    words = [t.text for t in tokens if t.kind is TokenKind.KEYWORD]
    assert words == ["class"]
    assert not diags


def test_string_elided():
    tokens, _ = tokenize('String s = "aspect";')
    assert all(t.text != "aspect" for t in tokens)


def test_block_comment_spanning_lines():
    tokens, diags = tokenize("/* aspect A {\n pointcut p(); } */ class B {}")
    keywords = [t.text for t in tokens if t.kind is TokenKind.KEYWORD]
    assert keywords == ["class"]
    assert not diags


def test_char_literal_elided():
    tokens, _ = tokenize("char c = 'x';")
    assert "x" not in [t.text for t in tokens]


def test_line_numbers_non_decreasing():
    tokens, _ = tokenize("class A {\n  int x;\n}\n")
    lines = [t.line for t in tokens]
    assert lines == sorted(lines)
    assert tokens[0].line == 1
    assert any(t.text == "x" and t.line == 2 for t in tokens)


def test_unterminated_string_reports_and_continues():
    tokens, diags = tokenize('class A { String s = "oops\n int x; }')
    assert any(d.severity is Severity.ERROR and "string" in d.message for d in diags)
    # Tokenization resumed on the next line.
    assert any(t.text == "x" for t in tokens)


def test_unterminated_block_comment_reports():
    _, diags = tokenize("class A {} /* never closed")
    assert any("comment" in d.message for d in diags)


def test_offsets_slice_source():
    src = "pointcut p(): call(void A.g());"
    tokens, _ = tokenize(src)
    for tok in tokens:
        if tok.kind is not TokenKind.END:
            assert src[tok.start : tok.end] == tok.text


def test_fixture_token_count_matches_hand_count():
    # Hand-tokenized once: 41 tokens before the end-of-stream marker.
    text = (TEST_FIXTURES / "one_aspect" / "V1" / "Logging.aj").read_text(encoding="utf-8")
    tokens, diags = tokenize(text)
    assert not diags
    assert len(tokens) == 42  # 41 + END
    assert tokens[-1].kind is TokenKind.END
