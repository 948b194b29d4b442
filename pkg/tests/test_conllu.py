"""Reader, tree validation, serialization, and branch ordering."""

from __future__ import annotations

import pytest

from treesent import (
    HeadChildMap,
    Sentence,
    Token,
    branch_order,
    build_head_child_map,
    parse_conllu,
    serialize,
    token_depths,
)
from treesent.conllu import serialize_sentence
from treesent.errors import ConlluParseError, ConlluStructureError

SIMPLE = """\
# sent_id = demo1
1\tNo\tno\tADV\t_\tPolarity=Neg\t3\tadvmod\t_\t_
2\tes\tser\tAUX\t_\t_\t3\tcop\t_\t_
3\texcelente\texcelente\tADJ\t_\t_\t0\troot\t_\t_
"""


def _line(token_id: int, head: int, form: str = "w", deprel: str = "dep") -> str:
    return f"{token_id}\t{form}\t{form}\tX\t_\t_\t{head}\t{deprel}\t_\t_"


def _block(*lines: str, sent_id: str | None = None) -> str:
    comment = [f"# sent_id = {sent_id}"] if sent_id else []
    return "\n".join(comment + list(lines)) + "\n"


def test_parse_simple_sentence():
    sentences = parse_conllu(SIMPLE)
    assert len(sentences) == 1
    sent = sentences[0]
    assert sent.source_id == "demo1"
    assert len(sent) == 3
    assert sent.root.form == "excelente"
    assert sent.token(1).feats == {"Polarity": "Neg"}
    assert sent.token(2).base_deprel == "cop"


def test_multiple_sentences_and_default_ids():
    text = _block(_line(1, 0)) + "\n" + _block(_line(1, 0))
    sentences = parse_conllu(text)
    assert [s.source_id for s in sentences] == ["s1", "s2"]


def test_multiword_and_empty_node_lines_are_skipped():
    text = "\n".join(
        [
            "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_",
            _line(1, 2, form="de", deprel="case"),
            _line(2, 0, form="sol", deprel="root"),
            "2.1\tghost\t_\t_\t_\t_\t_\t_\t_\t_",
        ]
    )
    sent = parse_conllu(text)[0]
    assert [tok.form for tok in sent] == ["de", "sol"]


def test_wrong_column_count_reports_line_number():
    text = "1\tsolo\tsolo\tADV\t_\t3\tadvmod\t_\t_\n"
    with pytest.raises(ConlluParseError, match="line 1"):
        parse_conllu(text)


def test_malformed_feature_rejected():
    bad = "1\tw\tw\tX\t_\tPolarity\t0\troot\t_\t_\n"
    with pytest.raises(ConlluParseError, match="feature"):
        parse_conllu(bad)


def test_duplicate_feature_rejected():
    bad = "1\tw\tw\tX\t_\tA=1|A=2\t0\troot\t_\t_\n"
    with pytest.raises(ConlluParseError):
        parse_conllu(bad)


def test_two_roots_rejected():
    with pytest.raises(ConlluStructureError, match="root"):
        parse_conllu(_block(_line(1, 0), _line(2, 0)))


def test_unreachable_cycle_rejected():
    with pytest.raises(ConlluStructureError):
        parse_conllu(_block(_line(1, 0), _line(2, 3), _line(3, 2)))


def test_head_out_of_range_rejected():
    with pytest.raises(ConlluStructureError):
        parse_conllu(_block(_line(1, 0), _line(2, 9)))


def test_nonconsecutive_ids_rejected():
    text = _block(_line(1, 0), _line(3, 1))
    with pytest.raises(ConlluStructureError):
        parse_conllu(text)


def test_structure_error_names_offending_sentence():
    text = _block(_line(1, 0), sent_id="ok") + "\n" + _block(
        _line(1, 0), _line(2, 0), sent_id="broken"
    )
    with pytest.raises(ConlluStructureError, match="broken"):
        parse_conllu(text)


def test_token_invariants():
    with pytest.raises(ValueError):
        Token(id=0, form="w", lemma="w", upos="X", feats={}, head=0, deprel="root")
    with pytest.raises(ValueError):
        Token(id=2, form="w", lemma="w", upos="X", feats={}, head=2, deprel="dep")


def test_serialize_round_trip():
    original = parse_conllu(SIMPLE)
    again = parse_conllu(serialize(original))
    assert again == original


def test_serialize_sorts_features_and_emits_sent_id():
    sent = Sentence(
        tokens=(
            Token(
                id=1,
                form="w",
                lemma="w",
                upos="X",
                feats={"b": "2", "A": "1"},
                head=0,
                deprel="root",
            ),
        ),
        source_id="x9",
    )
    text = serialize_sentence(sent)
    assert text.startswith("# sent_id = x9\n")
    assert "A=1|b=2" in text


def test_head_child_map_orders_children():
    sent = parse_conllu(SIMPLE)[0]
    head_map = build_head_child_map(sent)
    assert head_map.root_id == 3
    assert head_map.children(3) == (1, 2)
    assert head_map.children(0) == (3,)


def test_head_child_map_requires_virtual_root():
    with pytest.raises(ConlluStructureError):
        HeadChildMap(entries={1: (2,)})


def test_token_depths():
    sent = parse_conllu(_block(_line(1, 2), _line(2, 0), _line(3, 1)))[0]
    assert token_depths(build_head_child_map(sent)) == {0: 0, 2: 1, 1: 2, 3: 3}


def test_branch_order_deepest_first_root_last():
    # 4 <- 2 <- 1, 2 <- 3; root branch (virtual head 0) comes last
    sent = parse_conllu(_block(_line(1, 4), _line(2, 1), _line(3, 2), _line(4, 0)))[0]
    head_map = build_head_child_map(sent)
    assert [head for head, _ in branch_order(head_map)] == [2, 1, 4, 0]
