"""Text formats for matchings and triples.

Three interchangeable matching encodings:

* pair-list (canonical): line 1 is n, then n lines "left right" with
  0-based positions. '#' starts a comment; blank lines are ignored.
* partner-array: one line of 2n space-separated integers forming a
  self-inverse permutation without fixed points.
* dot-bracket: one line over the bracket families "()", "[]", "{}", "<>",
  then the letter families "Aa".."Zz". Brackets balance within each family;
  families may interleave to encode crossings. No unpaired symbols.

A noncrossing matching with a chosen nested pair serializes as a pair-list
followed by one line "nesting a b", with "nesting 0 0" when no pair is
chosen.
"""

from dataclasses import dataclass
from typing import Optional

from .core import InvalidMatchingError, Matching, edges, from_pairs
from .bijections import NCNTriple

__all__ = [
    "ParseError",
    "DotBracketString",
    "parse_input",
    "parse_pairs",
    "parse_partner",
    "parse_dotbracket",
    "parse_ncn",
    "emit_pairs",
    "emit_partner",
    "emit_dotbracket",
    "emit_matching",
    "emit_ncn",
    "FORMATS",
]

_OPEN = "([{<ABCDEFGHIJKLMNOPQRSTUVWXYZ"
_CLOSE = ")]}>abcdefghijklmnopqrstuvwxyz"
_FAMILY_LIMIT = len(_OPEN)

FORMATS = ("pairs", "partner", "dotbracket")


class ParseError(ValueError):
    """Input text that does not encode a matching, with location info."""

    def __init__(self, message: str, line: Optional[int] = None,
                 column: Optional[int] = None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class DotBracketString:
    """A validated dot-bracket encoding of a complete matching."""

    text: str

    def __post_init__(self):
        _decode_dotbracket(self.text, line=1)

    def __str__(self):
        return self.text


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank lines with comments stripped, tagged with 1-based numbers."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body))
    return out


def parse_pairs(text: str) -> Matching:
    """Parse the pair-list format."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input")
    lineno, head = lines[0]
    if len(head.split()) != 1:
        raise ParseError("expected a single integer edge count", line=lineno)
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"invalid edge count {head!r}", line=lineno) from None
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} pair lines, found {len(body)}",
                         line=lineno)
    pairs = []
    seen: dict[int, int] = {}
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two positions, got {line!r}", line=lineno)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer position in {line!r}", line=lineno) from None
        for v in (a, b):
            if not 0 <= v < 2 * n:
                raise ParseError(f"position {v} out of range 0..{2 * n - 1}",
                                 line=lineno)
            if v in seen:
                raise ParseError(
                    f"duplicate position {v} (first used on line {seen[v]})",
                    line=lineno)
            seen[v] = lineno
        pairs.append((a, b))
    try:
        return from_pairs(pairs, n)
    except InvalidMatchingError as exc:  # anything the scan above missed
        raise ParseError(str(exc)) from None


def parse_partner(text: str) -> Matching:
    """Parse the one-line partner-array format."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input")
    if len(lines) != 1:
        raise ParseError("partner-array input must be a single line",
                         line=lines[1][0])
    lineno, line = lines[0]
    tokens = line.split()
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ParseError("partner-array entries must be integers", line=lineno) from None
    if len(values) % 2 != 0 or not values:
        raise ParseError(f"partner-array needs a positive even number of "
                         f"entries, got {len(values)}", line=lineno)
    try:
        return Matching(len(values) // 2, tuple(values))
    except InvalidMatchingError as exc:
        raise ParseError(str(exc), line=lineno) from None


def _decode_dotbracket(body: str, line: int) -> list[tuple[int, int]]:
    stacks: dict[int, list[int]] = {}
    pairs = []
    for i, c in enumerate(body):
        fam = _OPEN.find(c)
        if fam >= 0:
            stacks.setdefault(fam, []).append(i)
            continue
        fam = _CLOSE.find(c)
        if fam < 0:
            raise ParseError(f"unexpected character {c!r}", line=line, column=i + 1)
        stack = stacks.get(fam)
        if not stack:
            raise ParseError(f"unbalanced {c!r} with no matching {_OPEN[fam]!r}",
                             line=line, column=i + 1)
        pairs.append((stack.pop(), i))
    for fam, stack in stacks.items():
        if stack:
            raise ParseError(
                f"unclosed {_OPEN[fam]!r}", line=line, column=stack[-1] + 1)
    return pairs


def parse_dotbracket(text: str) -> Matching:
    """Parse the dot-bracket format."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input")
    if len(lines) != 1:
        raise ParseError("dot-bracket input must be a single line",
                         line=lines[1][0])
    lineno, body = lines[0]
    pairs = _decode_dotbracket(body, line=lineno)
    if len(body) % 2 != 0:
        raise ParseError("odd number of positions", line=lineno)
    return from_pairs(pairs, len(body) // 2)


_PARSERS = {
    "pairs": parse_pairs,
    "partner": parse_partner,
    "dotbracket": parse_dotbracket,
}


def parse_input(text: str, fmt: str = "auto") -> Matching:
    """Parse a matching in the named format, or auto-detect.

    Auto-detection tries partner-array, then pair-list, then dot-bracket.
    """
    if fmt != "auto":
        try:
            parser = _PARSERS[fmt]
        except KeyError:
            raise ValueError(f"unknown format {fmt!r}; expected one of "
                             f"{', '.join(FORMATS)} or auto") from None
        return parser(text)
    failures = []
    for name in ("partner", "pairs", "dotbracket"):
        try:
            return _PARSERS[name](text)
        except ParseError as exc:
            failures.append(f"{name}: {exc}")
    raise ParseError("input matches no known format (" + "; ".join(failures) + ")")


def parse_ncn(text: str) -> NCNTriple:
    """Parse a matching plus its trailing "nesting a b" line."""
    lines = text.splitlines()
    nesting_at = None
    for lineno, raw in enumerate(lines, start=1):
        body = raw.split("#", 1)[0].strip()
        if body and body.split()[0] == "nesting":
            nesting_at = (lineno, body)
    if nesting_at is None:
        raise ParseError('missing "nesting a b" line')
    lineno, body = nesting_at
    tokens = body.split()
    if len(tokens) != 3:
        raise ParseError(f'expected "nesting a b", got {body!r}', line=lineno)
    try:
        a, b = int(tokens[1]), int(tokens[2])
    except ValueError:
        raise ParseError(f"non-integer labels in {body!r}", line=lineno) from None
    base_text = "\n".join(lines[:lineno - 1] + lines[lineno:])
    base = parse_input(base_text)
    pair = None if (a, b) == (0, 0) else (a, b)
    try:
        return NCNTriple(base, pair)
    except ValueError as exc:
        raise ParseError(str(exc), line=lineno) from None


def emit_pairs(m: Matching) -> str:
    """Serialize in the canonical pair-list format."""
    lines = [str(m.n)]
    lines += [f"{l} {r}" for l, r in m.pairs()]
    return "\n".join(lines) + "\n"


def emit_partner(m: Matching) -> str:
    """Serialize as a one-line partner array."""
    return " ".join(str(w) for w in m.partner) + "\n"


def emit_dotbracket(m: Matching) -> DotBracketString:
    """Serialize as dot-bracket with greedy family assignment.

    Edges are scanned by left endpoint; each takes the lowest-index family
    in which it crosses no previously assigned edge.
    """
    es = edges(m)
    family: dict[int, int] = {}
    for e in es:
        taken = set()
        for g in es:
            if g.left >= e.left:
                break
            # g starts earlier; they cross iff g closes inside e.
            if e.left < g.right < e.right:
                taken.add(family[g.label])
        f = 0
        while f in taken:
            f += 1
        if f >= _FAMILY_LIMIT:
            raise ValueError(
                f"matching needs more than {_FAMILY_LIMIT} bracket families")
        family[e.label] = f
    symbols = [""] * (2 * m.n)
    for e in es:
        symbols[e.left] = _OPEN[family[e.label]]
        symbols[e.right] = _CLOSE[family[e.label]]
    return DotBracketString("".join(symbols))


def emit_matching(m: Matching, fmt: str) -> str:
    if fmt == "pairs":
        return emit_pairs(m)
    if fmt == "partner":
        return emit_partner(m)
    if fmt == "dotbracket":
        return str(emit_dotbracket(m)) + "\n"
    raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def emit_ncn(t: NCNTriple) -> str:
    """Serialize a triple: pair-list plus the sentinel-bearing nesting line."""
    a, b = t.pair if t.pair is not None else (0, 0)
    return emit_pairs(t.base) + f"nesting {a} {b}\n"
