"""Parsers for the line-oriented algebra, frame, proposition and operator files."""
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

from unsharp.exceptions import ParseError
from unsharp.models.algebra import EffectAlgebra, RawAlgebra
from unsharp.models.frame import Proposition, TimeFrame
from unsharp.models.operators import OPERATORS, TableOperators, TenseOperator
from unsharp.models.poset import ElementSet
from unsharp.services.axioms import verify_axioms

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"^\s*\[([^\]]*)\](.*)$")
_TOKEN = re.compile(r"\S+")

Token = tuple[int, str]


@dataclass
class Section:
    """
    One bracketed section of an input file.

    Attributes:
        words: Header words, e.g. ["op", "P", "p"] for "[op P p]"
        line: Line number of the header
        rest: Tokens following the header on the same line
        body: (line number, tokens) of the following non-blank lines
    """
    words: list[str]
    line: int
    rest: list[Token]
    body: list[tuple[int, list[Token]]] = field(default_factory=list)

    @property
    def name(self) -> str:
        return self.words[0] if self.words else ""

    def rows(self) -> list[tuple[int, list[Token]]]:
        """Rows of the section, counting tokens after the header as a first row."""
        if self.rest:
            return [(self.line, self.rest), *self.body]
        return list(self.body)

    def tokens(self) -> list[tuple[int, int, str]]:
        """All tokens of the section (header rest, then body) with their line numbers."""
        found = [(self.line, col, tok) for col, tok in self.rest]
        for line, toks in self.body:
            found.extend((line, col, tok) for col, tok in toks)
        return found


def _tokenize(text: str, offset: int = 0) -> list[Token]:
    return [(m.start() + offset + 1, m.group()) for m in _TOKEN.finditer(text)]


def split_sections(text: str) -> list[Section]:
    """
    Split file text into sections.

    Blank lines and lines starting with '#' are ignored.

    Raises:
        ParseError: If content appears before the first section header
    """
    sections: list[Section] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        header = _HEADER.match(raw)
        if header:
            words = header.group(1).split()
            sections.append(Section(words=words, line=number, rest=_tokenize(header.group(2), header.start(2))))
            continue
        if not sections:
            raise ParseError("content before the first section header", number, len(raw) - len(raw.lstrip()) + 1)
        sections[-1].body.append((number, _tokenize(raw)))
    return sections


def _single(sections: list[Section], name: str, line: int = 1) -> Section:
    matches = [s for s in sections if s.name == name]
    if not matches:
        raise ParseError(f"missing [{name}] section", line)
    if len(matches) > 1:
        raise ParseError(f"duplicate [{name}] section", matches[1].line)
    return matches[0]


def _one_token(section: Section) -> tuple[int, int, str]:
    tokens = section.tokens()
    if len(tokens) != 1:
        raise ParseError(f"[{section.name}] takes exactly one id", section.line)
    return tokens[0]


def parse_raw_algebra(text: str) -> RawAlgebra:
    """
    Parse an algebra file without validating the axioms.

    Format:
        [elements]  ids in canonical order
        [zero] / [one]  one id each
        [plus]  one row per element, "x: v v - v", '-' for undefined
        [supplement]  optional "x x'" pairs, one per line, cross-checked on validation

    Raises:
        ParseError: On syntax errors, unknown ids or a non-square table
    """
    sections = split_sections(text)
    for s in sections:
        if s.name not in ("elements", "zero", "one", "plus", "supplement"):
            raise ParseError(f"unknown section [{' '.join(s.words)}]", s.line)

    elements_section = _single(sections, "elements")
    elements = [tok for _, _, tok in elements_section.tokens()]
    if not elements:
        raise ParseError("empty [elements] section", elements_section.line)
    declared = set(elements)
    for line, col, tok in elements_section.tokens():
        if tok == "-":
            raise ParseError("'-' is reserved for undefined cells", line, col)
    if len(declared) != len(elements):
        raise ParseError("duplicate element id", elements_section.line)

    def known(line: int, col: int, tok: str) -> str:
        if tok not in declared:
            raise ParseError(f"unknown element {tok!r}", line, col)
        return tok

    zero = known(*_one_token(_single(sections, "zero")))
    one = known(*_one_token(_single(sections, "one")))

    plus_section = _single(sections, "plus")
    if plus_section.rest or not plus_section.body:
        raise ParseError("empty [plus] section", plus_section.line)
    plus: dict[str, dict[str, str | None]] = {}
    for line, toks in plus_section.body:
        col, head = toks[0]
        if not head.endswith(":"):
            raise ParseError("a [plus] row starts with 'x:'", line, col)
        row = known(line, col, head[:-1])
        if row in plus:
            raise ParseError(f"duplicate row {row!r}", line, col)
        cells = toks[1:]
        if len(cells) != len(elements):
            raise ParseError(f"row {row!r} has {len(cells)} cells, expected {len(elements)}", line)
        plus[row] = {b: (None if tok == "-" else known(line, c, tok)) for b, (c, tok) in zip(elements, cells)}
    missing = [e for e in elements if e not in plus]
    if missing:
        raise ParseError(f"[plus] has no row for {missing[0]!r}", plus_section.line)

    supplement = None
    sup_sections = [s for s in sections if s.name == "supplement"]
    if sup_sections:
        supplement = {}
        for line, toks in _single(sections, "supplement").rows():
            if len(toks) != 2:
                raise ParseError("a [supplement] row is 'x y'", line)
            (ca, a), (cb, b) = toks
            supplement[known(line, ca, a)] = known(line, cb, b)

    return RawAlgebra(elements=elements, zero=zero, one=one, plus=plus, supplement=supplement)


def parse_algebra(text: str) -> EffectAlgebra:
    """
    Parse and validate an algebra file.

    Raises:
        ParseError: On syntax errors
        AxiomViolation: If the table is not an effect algebra
    """
    algebra = verify_axioms(parse_raw_algebra(text))
    logger.info(f"Loaded effect algebra with {len(algebra)} elements")
    return algebra


def _parse_times(section: Section) -> list[str]:
    times = [tok for _, _, tok in section.tokens()]
    if not times:
        raise ParseError("empty [times] section", section.line)
    if len(set(times)) != len(times):
        raise ParseError("duplicate time point", section.line)
    return times


def parse_frame(text: str) -> TimeFrame:
    """
    Parse a frame file: [times] ids, then [rel] with one "s t" pair per line
    (the first pair may follow the header).

    Raises:
        ParseError: On syntax errors or unknown time points
    """
    sections = split_sections(text)
    for s in sections:
        if s.name not in ("times", "rel"):
            raise ParseError(f"unknown section [{' '.join(s.words)}]", s.line)
    times = _parse_times(_single(sections, "times"))
    rel_section = _single(sections, "rel")
    pairs = []
    for line, toks in rel_section.rows():
        if len(toks) != 2:
            raise ParseError("a [rel] row is 's t'", line)
        for col, tok in toks:
            if tok not in times:
                raise ParseError(f"unknown time point {tok!r}", line, col)
        pairs.append((toks[0][1], toks[1][1]))
    if not pairs:
        raise ParseError("empty [rel] section", rel_section.line)
    return TimeFrame(times, pairs)


def _parse_values(section: Section, algebra: EffectAlgebra, width: int) -> Proposition:
    tokens = section.tokens()
    if len(tokens) != width:
        raise ParseError(f"proposition {section.words[1]!r} has {len(tokens)} values, expected {width}", section.line)
    for line, col, tok in tokens:
        if tok not in algebra.order.elements:
            raise ParseError(f"unknown element {tok!r}", line, col)
    return tuple(tok for _, _, tok in tokens)


def parse_props(text: str, algebra: EffectAlgebra, times: tuple[str, ...]) -> dict[str, Proposition]:
    """
    Parse a propositions file of "[prop name] v v v" sections.

    Args:
        text: File text
        algebra: Algebra the values belong to
        times: Time points, in the order the values are listed

    Returns:
        Propositions by name, in file order

    Raises:
        ParseError: On syntax errors, unknown elements or a wrong number of values
    """
    props: dict[str, Proposition] = {}
    for s in split_sections(text):
        if s.name != "prop" or len(s.words) != 2:
            raise ParseError("expected a [prop <name>] section", s.line)
        if s.words[1] in props:
            raise ParseError(f"duplicate proposition {s.words[1]!r}", s.line)
        props[s.words[1]] = _parse_values(s, algebra, len(times))
    return props


def parse_set(tok: str, algebra: EffectAlgebra, line: int, col: int) -> ElementSet:
    """
    Parse "x" or "{x,y,...}" into an element set.

    Raises:
        ParseError: On malformed sets or unknown elements
    """
    if tok.startswith("{"):
        if not tok.endswith("}") or len(tok) < 3:
            raise ParseError(f"malformed set {tok!r}", line, col)
        members = tok[1:-1].split(",")
    else:
        members = [tok]
    for m in members:
        if m not in algebra.order.elements:
            raise ParseError(f"unknown element {m!r}", line, col)
    return algebra.order.canonical(members)


def _operator(word: str, line: int) -> TenseOperator:
    if word not in OPERATORS:
        raise ParseError(f"unknown tense operator {word!r}", line)
    return word


def parse_ops(text: str, algebra: EffectAlgebra) -> TableOperators:
    """
    Parse an operator table file.

    Sections:
        [times]  time point ids
        [prop name] v v v  propositions referenced by [op] sections
        [op X name] s -> value  one "s -> value" row per line, the first may follow the header
        [constant X] value  value of X wherever no row is given
    Values are "x" or "{x,y}".

    Raises:
        ParseError: On syntax errors, unknown ids or duplicate entries
        InputError: If some operator value is missing
    """
    sections = split_sections(text)
    times = tuple(_parse_times(_single(sections, "times")))
    props: dict[str, Proposition] = {}
    for s in sections:
        if s.name == "prop":
            if len(s.words) != 2 or s.words[1] in props:
                raise ParseError("expected a [prop <name>] section with a new name", s.line)
            props[s.words[1]] = _parse_values(s, algebra, len(times))

    entries: dict[tuple[TenseOperator, Proposition, str], ElementSet] = {}
    constants: dict[TenseOperator, ElementSet] = {}
    for s in sections:
        if s.name in ("times", "prop"):
            continue
        if s.name == "constant":
            if len(s.words) != 2:
                raise ParseError("expected [constant X]", s.line)
            which = _operator(s.words[1], s.line)
            if which in constants:
                raise ParseError(f"duplicate constant for {which}", s.line)
            line, col, tok = _one_token(s)
            constants[which] = parse_set(tok, algebra, line, col)
        elif s.name == "op":
            if len(s.words) != 3:
                raise ParseError("expected [op X <prop>]", s.line)
            which = _operator(s.words[1], s.line)
            if s.words[2] not in props:
                raise ParseError(f"unknown proposition {s.words[2]!r}", s.line)
            p = props[s.words[2]]
            for line, toks in s.rows():
                if len(toks) != 3 or toks[1][1] != "->":
                    raise ParseError("an [op] row is 's -> value'", line)
                (ct, t), _, (cv, value) = toks
                if t not in times:
                    raise ParseError(f"unknown time point {t!r}", line, ct)
                key = (which, p, t)
                if key in entries:
                    raise ParseError(f"duplicate value of {which}({s.words[2]}) at {t}", line, ct)
                entries[key] = parse_set(value, algebra, line, cv)
        else:
            raise ParseError(f"unknown section [{' '.join(s.words)}]", s.line)

    ops = TableOperators(algebra, times, entries, constants)
    ops.check_total()
    return ops


def is_ops_text(text: str) -> bool:
    """True if the text looks like an operator table rather than a frame."""
    return any(s.name in ("op", "constant") for s in split_sections(text))


def read_text(file_path: str | Path) -> str:
    """
    Read an input file as UTF-8.

    Raises:
        FileNotFoundError: If the file doesn't exist
    """
    return Path(file_path).read_text(encoding="utf-8")


def load_algebra(file_path: str | Path) -> EffectAlgebra:
    """Read, parse and validate an algebra file."""
    return parse_algebra(read_text(file_path))


def load_frame(file_path: str | Path) -> TimeFrame:
    """Read and parse a frame file."""
    return parse_frame(read_text(file_path))
