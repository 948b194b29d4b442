"""CoNLL-U parsing, validation, and head-child tree structures.

Only basic word lines are kept: multiword-token ranges (``3-4``) and
empty nodes (``5.1``) are skipped, since scoring operates on syntactic
words. Sentences are validated as trees on construction and immutable
afterwards, so they are safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import ConlluParseError, ConlluStructureError

N_COLUMNS = 10


@dataclass(frozen=True)
class Token:
    """One syntactic word from a CoNLL-U word line."""

    id: int
    form: str
    lemma: str
    upos: str
    feats: Mapping[str, str]
    head: int
    deprel: str

    def __post_init__(self):
        if self.id < 1:
            raise ValueError(f"token id must be >= 1, got {self.id}")
        if self.head < 0:
            raise ValueError(f"token head must be >= 0, got {self.head}")
        if self.head == self.id:
            raise ValueError(f"token {self.id} is its own head")

    @property
    def base_deprel(self) -> str:
        """Relation without subtype, e.g. ``conj`` for ``conj:and``."""
        return self.deprel.split(":", 1)[0]

    def has_feat(self, key: str, value: str) -> bool:
        return self.feats.get(key) == value


@dataclass(frozen=True)
class Sentence:
    """An ordered, tree-validated sequence of tokens."""

    tokens: tuple[Token, ...]
    source_id: str = ""
    comments: tuple[str, ...] = ()

    def __post_init__(self):
        _validate_tree(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[Token]:
        return iter(self.tokens)

    def token(self, token_id: int) -> Token:
        return self.tokens[token_id - 1]

    @property
    def root(self) -> Token:
        for tok in self.tokens:
            if tok.head == 0:
                return tok
        raise ConlluStructureError("sentence has no root")  # unreachable


def _validate_tree(tokens: tuple[Token, ...]) -> None:
    n = len(tokens)
    if n == 0:
        raise ConlluStructureError("sentence has no tokens")
    for i, tok in enumerate(tokens, start=1):
        if tok.id != i:
            raise ConlluStructureError(
                f"token ids must be 1..{n} in order; position {i} has id {tok.id}"
            )
        if tok.head > n:
            raise ConlluStructureError(
                f"token {tok.id} has head {tok.head} outside 1..{n}"
            )
    roots = [tok.id for tok in tokens if tok.head == 0]
    if len(roots) != 1:
        raise ConlluStructureError(
            f"expected exactly one root token, found {len(roots)}"
        )
    # Reachability from the root catches cycles among non-root tokens.
    children: dict[int, list[int]] = {}
    for tok in tokens:
        children.setdefault(tok.head, []).append(tok.id)
    seen: set[int] = set()
    stack = [roots[0]]
    while stack:
        node = stack.pop()
        seen.add(node)
        stack.extend(children.get(node, ()))
    if len(seen) != n:
        missing = sorted(set(range(1, n + 1)) - seen)
        raise ConlluStructureError(
            f"tokens {missing} are unreachable from the root (cycle)"
        )


def _parse_feats(raw: str) -> dict[str, str]:
    if raw in ("", "_"):
        return {}
    feats: dict[str, str] = {}
    for pair in raw.split("|"):
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ValueError(f"malformed feature {pair!r}")
        if key in feats:
            raise ValueError(f"duplicate feature key {key!r}")
        feats[key] = value
    return feats


def _blank(raw: str) -> str:
    return "" if raw == "_" else raw


def parse_conllu(document: str) -> list[Sentence]:
    """Parse a CoNLL-U document into validated sentences.

    Blank lines separate sentences; ``#`` lines are kept as comments and
    a ``# sent_id = ...`` comment becomes the sentence's source_id.
    """
    sentences: list[Sentence] = []
    comments: list[str] = []
    source_id = ""
    tokens: list[Token] = []

    def flush(line_no: int) -> None:
        nonlocal comments, source_id, tokens
        if tokens:
            sid = source_id or f"s{len(sentences) + 1}"
            try:
                sentences.append(
                    Sentence(tuple(tokens), source_id=sid, comments=tuple(comments))
                )
            except ConlluStructureError as exc:
                raise ConlluStructureError(f"sentence {sid!r}: {exc}") from exc
        elif comments:
            # Comment-only block: nothing to keep.
            pass
        comments = []
        source_id = ""
        tokens = []

    for line_no, line in enumerate(document.splitlines(), start=1):
        line = line.rstrip("\n")
        if not line.strip():
            flush(line_no)
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            key, sep, value = body.partition("=")
            if sep and key.strip() == "sent_id":
                source_id = value.strip()
            else:
                comments.append(line)
            continue
        cols = line.split("\t")
        if len(cols) != N_COLUMNS:
            raise ConlluParseError(
                f"expected {N_COLUMNS} tab-separated columns, got {len(cols)}",
                line_no,
            )
        raw_id = cols[0]
        if "-" in raw_id or "." in raw_id:
            continue  # multiword-token range or empty node
        try:
            tok = Token(
                id=int(raw_id),
                form=cols[1],
                lemma=_blank(cols[2]),
                upos=_blank(cols[3]),
                feats=_parse_feats(cols[5]),
                head=int(cols[6]),
                deprel=_blank(cols[7]),
            )
        except ValueError as exc:
            raise ConlluParseError(str(exc), line_no) from exc
        tokens.append(tok)
    flush(-1)
    return sentences


def parse_conllu_file(path) -> list[Sentence]:
    with open(path, encoding="utf-8") as handle:
        return parse_conllu(handle.read())


def serialize_sentence(sentence: Sentence) -> str:
    """Render one sentence back to CoNLL-U text (no trailing blank line)."""
    lines = [f"# sent_id = {sentence.source_id}"]
    lines.extend(sentence.comments)
    for tok in sentence.tokens:
        feats = (
            "|".join(
                f"{k}={v}" for k, v in sorted(tok.feats.items(), key=lambda kv: kv[0].lower())
            )
            or "_"
        )
        lines.append(
            "\t".join(
                [
                    str(tok.id),
                    tok.form or "_",
                    tok.lemma or "_",
                    tok.upos or "_",
                    "_",
                    feats,
                    str(tok.head),
                    tok.deprel or "_",
                    "_",
                    "_",
                ]
            )
        )
    return "\n".join(lines)


def serialize(sentences: list[Sentence]) -> str:
    return "\n\n".join(serialize_sentence(s) for s in sentences) + "\n"


@dataclass(frozen=True)
class HeadChildMap:
    """Head id (0 for the virtual root) to its ordered child ids."""

    entries: Mapping[int, tuple[int, ...]]

    def __post_init__(self):
        if 0 not in self.entries or len(self.entries[0]) != 1:
            raise ConlluStructureError("head 0 must map to exactly one child")

    def children(self, head_id: int) -> tuple[int, ...]:
        return self.entries.get(head_id, ())

    @property
    def root_id(self) -> int:
        return self.entries[0][0]


def build_head_child_map(sentence: Sentence) -> HeadChildMap:
    """Group token ids under their heads, child lists ascending."""
    grouped: dict[int, list[int]] = {}
    for tok in sentence.tokens:
        grouped.setdefault(tok.head, []).append(tok.id)
    return HeadChildMap({head: tuple(sorted(kids)) for head, kids in grouped.items()})


def token_depths(head_map: HeadChildMap) -> dict[int, int]:
    """Distance of every node from the virtual root (depth of 0 is 0)."""
    depths = {0: 0}
    stack = [0]
    while stack:
        head = stack.pop()
        for child in head_map.children(head):
            depths[child] = depths[head] + 1
            stack.append(child)
    return depths


def branch_order(head_map: HeadChildMap) -> list[tuple[int, tuple[int, ...]]]:
    """Branches ordered lowest-first: by decreasing head depth, then head id.

    The virtual-root branch (head 0) is always last, and every head
    appears after all branches headed by its descendants.
    """
    depths = token_depths(head_map)
    branches = [(head, kids) for head, kids in head_map.entries.items()]
    branches.sort(key=lambda item: (-depths[item[0]], item[0]))
    return branches
