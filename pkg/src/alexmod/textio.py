"""Parsers and formatters for the plain-text input formats.

Presentation::

    gens: x, y
    rels: x*y*x*y^-1*x^-1*y^-1; ...

Homomorphism (coordinates are given in the declared product, then normalized)::

    target: Z^1 x Z/2
    x -> (1; 0)
    y -> (1; 1)

Matrix: ``rows cols`` on the first line, then the entries in row-major order.
Lines starting with ``#`` are ignored everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .abelian import AbelianElement, AbelianGroup, Cokernel, IntMatrix
from .errors import ParseError
from .presentations import AbelianHom, GroupPresentation
from .words import Word

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_INT = re.compile(r"[+-]?\d+")


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield no, line


class _Cursor:
    def __init__(self, text: str, line: int | None, offset: int):
        self.text, self.pos, self.line, self.offset = text, 0, line, offset

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def error(self, msg: str) -> ParseError:
        return ParseError(msg, self.line, self.offset + self.pos + 1)

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            got = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {got}")
        self.pos += 1

    def match(self, pattern: re.Pattern, what: str) -> str:
        self.skip_ws()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what}")
        self.pos = m.end()
        return m.group(0)


def _parse_word_at(cur: _Cursor, names: dict[str, int], extend: bool) -> Word:
    if cur.text[cur.pos:].strip() == "1":
        return Word.identity()
    syll = []
    while True:
        cur.skip_ws()
        col = cur.pos
        name = cur.match(_IDENT, "a generator name")
        if name not in names:
            if not extend:
                cur.pos = col
                raise cur.error(f"unknown generator {name!r}")
            names[name] = len(names) + 1
        exp = 1
        if cur.peek() == "^":
            cur.pos += 1
            cur.skip_ws()
            ecol = cur.pos
            exp = int(cur.match(_INT, "an integer exponent"))
            if exp == 0:
                cur.pos = ecol
                raise cur.error("zero exponent")
        syll.append((names[name], exp))
        if cur.at_end():
            break
        cur.expect("*")
    return Word(syll)


def parse_word(text: str, names: Sequence[str] | dict | None = None, line: int | None = None,
               offset: int = 0) -> Word:
    """Parse ``1`` or ``TERM (* TERM)*`` with ``TERM = IDENT (^ INT)?``.

    ``names`` lists the allowed generators.  If it is a ``dict`` (name to
    1-based index) and not a list, unknown names are appended to it.
    """
    cur = _Cursor(text, line, offset)
    if cur.at_end():
        raise cur.error("empty word")
    if isinstance(names, dict):
        return _parse_word_at(cur, names, extend=True)
    table = {n: k for k, n in enumerate(names or (), start=1)}
    return _parse_word_at(cur, table, extend=False)


def _key_value(line: str, no: int) -> tuple[str, str, int]:
    if ":" not in line:
        raise ParseError("expected 'key: value'", no, 1)
    key, value = line.split(":", 1)
    return key.strip(), value, len(key) + 1


def parse_presentation(text: str) -> GroupPresentation:
    gens = rels = None
    for no, line in _lines(text):
        key, value, off = _key_value(line, no)
        if key == "gens":
            if gens is not None:
                raise ParseError("duplicate 'gens' line", no, 1)
            gens = []
            pos = off
            for piece in value.split(","):
                name = piece.strip()
                col = pos + len(piece) - len(piece.lstrip()) + 1
                if not _IDENT.fullmatch(name):
                    raise ParseError(f"invalid generator name {name!r}", no, col)
                if name in gens:
                    raise ParseError(f"duplicate generator {name!r}", no, col)
                gens.append(name)
                pos += len(piece) + 1
        elif key == "rels":
            if gens is None:
                raise ParseError("'rels' must come after 'gens'", no, 1)
            if rels is not None:
                raise ParseError("duplicate 'rels' line", no, 1)
            rels = []
            pos = off
            pieces = value.split(";")
            for k, piece in enumerate(pieces):
                if piece.strip():
                    rels.append(parse_word(piece, gens, no, pos))
                elif 0 < k < len(pieces) - 1:
                    raise ParseError("empty relator", no, pos + 1)
                pos += len(piece) + 1
        else:
            raise ParseError(f"unknown key {key!r}", no, 1)
    if gens is None:
        raise ParseError("missing 'gens' line")
    return GroupPresentation(len(gens), tuple(rels or ()), tuple(gens))


def format_presentation(P: GroupPresentation) -> str:
    return P.format()


@dataclass(frozen=True)
class TargetSpec:
    """A declared product ``Z^a x Z/d_1 x ...`` and its normal form."""

    free: int
    moduli: tuple[int, ...]
    coker: Cokernel

    @property
    def group(self) -> AbelianGroup:
        return self.coker.group

    def element(self, free: Sequence[int], torsion: Sequence[int]) -> AbelianElement:
        return self.coker.project(list(free) + list(torsion))


def parse_group(text: str, line: int | None = None, offset: int = 0) -> TargetSpec:
    """``0``, ``1`` or factors ``Z``, ``Z^a``, ``Z/d`` joined by ``x``."""
    body = text.strip()
    free, moduli = 0, []
    if body not in ("0", "1"):
        pos = offset + len(text) - len(text.lstrip())
        for piece in body.split(" x "):
            f = piece.strip()
            col = pos + 1
            m = re.fullmatch(r"Z(?:\^(\d+))?|Z/(\d+)", f)
            if not m:
                raise ParseError(f"cannot read group factor {f!r}", line, col)
            if m.group(2) is not None:
                d = int(m.group(2))
                if d < 1:
                    raise ParseError("cyclic factor must have positive order", line, col)
                moduli.append(d)
            else:
                free += int(m.group(1)) if m.group(1) is not None else 1
            pos += len(piece) + 3
    diag = IntMatrix.diagonal([0] * free + moduli)
    return TargetSpec(free, tuple(moduli), Cokernel(diag))


def parse_element(text: str, spec: TargetSpec, line: int | None = None,
                  offset: int = 0) -> AbelianElement:
    """``(a, b; c, d)``: free coordinates, then one residue per cyclic factor."""
    s = text.strip()
    col = offset + len(text) - len(text.lstrip()) + 1
    m = re.fullmatch(r"\(([^;]*);([^;]*)\)", s)
    if not m:
        raise ParseError(f"expected an element '(free; torsion)', got {s!r}", line, col)

    def ints(part, what):
        part = part.strip()
        if not part:
            return []
        out = []
        for x in part.split(","):
            x = x.strip()
            if not _INT.fullmatch(x):
                raise ParseError(f"non-integer {what} coordinate {x!r}", line, col)
            out.append(int(x))
        return out

    free, tors = ints(m.group(1), "free"), ints(m.group(2), "torsion")
    if len(free) != spec.free or len(tors) != len(spec.moduli):
        raise ParseError(f"element has {len(free)} free and {len(tors)} torsion coordinates; "
                         f"the target needs {spec.free} and {len(spec.moduli)}", line, col)
    return spec.element(free, tors)


def parse_hom(text: str, P: GroupPresentation) -> tuple[AbelianHom, TargetSpec]:
    spec = None
    images: dict[str, AbelianElement] = {}
    for no, line in _lines(text):
        if spec is None:
            if ":" not in line:
                raise ParseError("the first line must be 'target: ...'", no, 1)
            key, value, off = _key_value(line, no)
            if key != "target":
                raise ParseError("the first line must be 'target: ...'", no, 1)
            spec = parse_group(value, no, off)
            continue
        if "->" not in line:
            raise ParseError("expected 'generator -> (free; torsion)'", no, 1)
        lhs, rhs = line.split("->", 1)
        name = lhs.strip()
        if name not in P.generator_names:
            raise ParseError(f"unknown generator {name!r}", no, len(lhs) - len(lhs.lstrip()) + 1)
        if name in images:
            raise ParseError(f"generator {name!r} given twice", no, 1)
        images[name] = parse_element(rhs, spec, no, len(lhs) + 2)
    if spec is None:
        raise ParseError("missing 'target' line")
    missing = [n for n in P.generator_names if n not in images]
    if missing:
        raise ParseError(f"no image for generator(s) {', '.join(missing)}")
    return AbelianHom(P, spec.group, [images[n] for n in P.generator_names]), spec


def format_hom(psi: AbelianHom) -> str:
    G = psi.target
    lines = [f"target: {G if G.ngens else '0'}"]
    for name, e in zip(psi.presentation.generator_names, psi.images):
        lines.append(f"{name} -> {e}")
    return "\n".join(lines) + "\n"


def parse_elements(text: str, spec: TargetSpec) -> list[AbelianElement]:
    """One element per line."""
    return [parse_element(line, spec, no) for no, line in _lines(text)]


def parse_matrix(text: str) -> IntMatrix:
    tokens = []
    for no, line in _lines(text):
        for m in re.finditer(r"\S+", line):
            tokens.append((m.group(0), no, m.start() + 1))
    if len(tokens) < 2:
        raise ParseError("expected 'rows cols' on the first line")
    for tok, no, col in tokens:
        if not _INT.fullmatch(tok):
            raise ParseError(f"non-integer entry {tok!r}", no, col)
    rows, cols = int(tokens[0][0]), int(tokens[1][0])
    if rows < 0 or cols < 0:
        raise ParseError("negative dimension", tokens[0][1], tokens[0][2])
    body = [int(t) for t, _, _ in tokens[2:]]
    if len(body) != rows * cols:
        raise ParseError(f"expected {rows * cols} entries, found {len(body)}")
    return IntMatrix([body[i * cols:(i + 1) * cols] for i in range(rows)], rows, cols)


def format_matrix(M: IntMatrix) -> str:
    return M.format()
