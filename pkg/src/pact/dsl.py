"""
A line-oriented description language for fields, groups, algebras, ideals,
partial actions and commands. One statement per line; a statement may run
over several lines inside braces. ``#`` starts a comment.

    field rationals | field gf <p>
    group G = cyclic <n> | klein | sym <n> | table [(<labels>)] [<row>; <row>; ...]
    algebra A = matrix <n> [over <group>] | upper <n> | product <n>
              | group_algebra <group> | counter
              | constants <dim> [basis (<names>)] { <i> <j> -> <value>; ... } [unit <elem>]
    ideal I = span(<alg>; <elem>, ...) | generated(<alg>; <elem>, ...)
    global b on <alg> by <group> { <g>: map=[<x> -> <y>, ...] ; ... }
    action a on <alg> by <group> { <g>: ideal=<ideal>, map=[<x> -> <y>, ...] | map=id ; ... }
    action a = restrict <global> to <ideal>
    action a = global <global>
    cmd <verb> <args> [expect <key>=<value> ...]

Elements are sums of terms ``name`` or ``c*name`` with c an integer or
fraction; a bare token is always read as a basis name. In ``constants``
the indices may be 1-based integers or basis names, and a product value is
either an element or a list ``k:c, k:c`` of (index, coefficient) pairs.
Without explicit labels a table's first row names the elements, so the
identity must come first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

VERBS = ("verify", "crossed", "assoc", "multipliers", "lr_assoc", "semiprime", "envelope",
         "morita", "kpar", "elementary", "grading", "condition_x")


class SpecError(ValueError):
    """A diagnostic with a source position (1-based line and column)."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


# -- syntax tree -------------------------------------------------------------

@dataclass
class Node:
    line: int = field(default=0, compare=False, kw_only=True)
    col: int = field(default=0, compare=False, kw_only=True)


@dataclass
class FieldDecl(Node):
    p: int | None


@dataclass
class GroupDecl(Node):
    name: str
    kind: str                       # cyclic, klein, sym, table
    n: int | None = None
    labels: tuple = ()
    rows: tuple = ()


@dataclass
class AlgebraDecl(Node):
    name: str
    kind: str                       # matrix, upper, product, group_algebra, counter, constants
    n: int | None = None
    over: str | None = None
    basis: tuple = ()
    products: tuple = ()            # ((i, j, elem), ...), i and j as written
    unit: str | None = None


@dataclass
class IdealDecl(Node):
    name: str
    kind: str                       # span, generated
    algebra: str
    elements: tuple


@dataclass
class Entry(Node):
    element: str
    ideal: str | None = None
    pairs: tuple = ()               # ((x, y), ...)
    identity: bool = False


@dataclass
class GlobalDecl(Node):
    name: str
    algebra: str
    group: str
    entries: tuple


@dataclass
class ActionDecl(Node):
    name: str
    kind: str                       # explicit, restrict, global
    algebra: str | None = None
    group: str | None = None
    entries: tuple = ()
    source: str | None = None       # the global action
    ideal: str | None = None


@dataclass
class Command(Node):
    verb: str
    args: tuple
    expects: tuple = ()             # ((key, literal), ...)


@dataclass
class SpecDocument:
    statements: list

    def of(self, cls):
        return [s for s in self.statements if isinstance(s, cls)]

    @property
    def field(self) -> FieldDecl:
        return self.of(FieldDecl)[0]

    @property
    def commands(self) -> list[Command]:
        return self.of(Command)


# -- scanning ----------------------------------------------------------------

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_INT = re.compile(r"-?\d+")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self._line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def where(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        lo, hi = 0, len(self._line_starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._line_starts[mid] <= pos:
                lo = mid
            else:
                hi = mid - 1
        return lo + 1, pos - self._line_starts[lo] + 1

    def error(self, msg: str, pos: int | None = None):
        line, col = self.where(pos)
        raise SpecError(msg, line, col)

    def skip_inline(self):
        """Spaces, tabs and comments, but not newlines."""
        t = self.text
        while self.pos < len(t):
            c = t[self.pos]
            if c in " \t\r":
                self.pos += 1
            elif c == "#":
                while self.pos < len(t) and t[self.pos] != "\n":
                    self.pos += 1
            else:
                break

    def skip_all(self):
        while True:
            self.skip_inline()
            if self.pos < len(self.text) and self.text[self.pos] == "\n":
                self.pos += 1
            else:
                return

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def at_eol(self) -> bool:
        self.skip_inline()
        return self.at_end() or self.text[self.pos] == "\n"

    def peek(self, s: str) -> bool:
        self.skip_inline()
        return self.text.startswith(s, self.pos)

    def peek_word(self, w: str) -> bool:
        self.skip_inline()
        m = _NAME.match(self.text, self.pos)
        return bool(m) and m.group() == w

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.accept(s):
            self.error(f"expected '{s}'{self._found()}")

    def _found(self) -> str:
        if self.at_eol():
            return " before end of line"
        tok = re.match(r"\S+", self.text[self.pos:])
        return f", found '{tok.group()}'"

    def name(self, what: str = "a name") -> str:
        self.skip_inline()
        m = _NAME.match(self.text, self.pos)
        if not m:
            self.error(f"expected {what}{self._found()}")
        self.pos = m.end()
        return m.group()

    def word(self, *options: str) -> str:
        start = self.pos
        w = self.name(" or ".join(f"'{o}'" for o in options) if options else "a keyword")
        if options and w not in options:
            self.error(f"expected {' or '.join(repr(o) for o in options)}, found '{w}'", start)
        return w

    def integer(self, what: str = "an integer") -> int:
        self.skip_inline()
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error(f"expected {what}{self._found()}")
        self.pos = m.end()
        return int(m.group())

    def raw_until(self, stops: str, allow_newline: bool = False) -> str:
        """Text up to a stop character at bracket depth 0, whitespace-normalized."""
        self.skip_inline()
        t = self.text
        start = self.pos
        depth = 0
        while self.pos < len(t):
            c = t[self.pos]
            if depth == 0 and c in stops:
                break
            if c == "\n" and not allow_newline and depth == 0:
                break
            if c == "#":
                break
            if c in "([{":
                depth += 1
            elif c in ")]}":
                if depth == 0:
                    break
                depth -= 1
            self.pos += 1
        return " ".join(t[start: self.pos].split())

    def end_statement(self):
        if not self.at_eol():
            self.error(f"unexpected text{self._found()}")


# -- parser ------------------------------------------------------------------

def parse_spec(text: str) -> SpecDocument:
    """Parse and check that every name is defined before use."""
    sc = _Scanner(text)
    stmts = []
    while True:
        sc.skip_all()
        if sc.at_end():
            break
        start = sc.pos
        line, col = sc.where()
        kw = sc.word("field", "group", "algebra", "ideal", "global", "action", "cmd")
        parser = _PARSERS[kw]
        node = parser(sc)
        node.line, node.col = line, col
        sc.end_statement()
        stmts.append(node)
    doc = SpecDocument(stmts)
    _check_names(doc)
    return doc


def _p_field(sc: _Scanner) -> FieldDecl:
    kind = sc.word("rationals", "gf")
    if kind == "rationals":
        return FieldDecl(None)
    pos = sc.pos
    p = sc.integer("a prime after 'gf'")
    from .exactfield import _is_prime
    if not _is_prime(p) or p >= 2 ** 31:
        sc.error(f"{p} is not a prime below 2^31", pos)
    return FieldDecl(p)


def _p_group(sc: _Scanner) -> GroupDecl:
    name = sc.name("a group name")
    sc.expect("=")
    kind = sc.word("cyclic", "klein", "sym", "table")
    if kind == "cyclic":
        pos = sc.pos
        n = sc.integer("an order after 'cyclic'")
        if n < 1:
            sc.error("group order must be positive", pos)
        return GroupDecl(name, kind, n)
    if kind == "sym":
        pos = sc.pos
        n = sc.integer("a degree after 'sym'")
        if not 1 <= n <= 4:
            sc.error("symmetric groups are supported for 1 <= n <= 4", pos)
        return GroupDecl(name, kind, n)
    if kind == "klein":
        return GroupDecl(name, kind)
    labels = ()
    if sc.accept("("):
        labels = tuple(sc.raw_until(")").split())
        sc.expect(")")
    sc.expect("[")
    body = sc.raw_until("]", allow_newline=True)
    sc.expect("]")
    rows = tuple(tuple(r.split()) for r in body.split(";") if r.strip())
    return GroupDecl(name, kind, labels=labels, rows=rows)


def _p_algebra(sc: _Scanner) -> AlgebraDecl:
    name = sc.name("an algebra name")
    sc.expect("=")
    kind = sc.word("matrix", "upper", "product", "group_algebra", "counter", "constants")
    if kind in ("matrix", "upper", "product"):
        pos = sc.pos
        n = sc.integer(f"a size after '{kind}'")
        if n < 1:
            sc.error("size must be positive", pos)
        over = None
        if kind == "matrix" and sc.peek_word("over"):
            sc.word("over")
            over = sc.name("a group name")
        return AlgebraDecl(name, kind, n, over)
    if kind == "group_algebra":
        return AlgebraDecl(name, kind, over=sc.name("a group name"))
    if kind == "counter":
        return AlgebraDecl(name, kind)
    pos = sc.pos
    n = sc.integer("a dimension after 'constants'")
    if n < 1:
        sc.error("dimension must be positive", pos)
    basis = ()
    if sc.peek_word("basis"):
        sc.word("basis")
        sc.expect("(")
        basis = tuple(sc.raw_until(")").split())
        sc.expect(")")
    sc.expect("{")
    products = []
    while True:
        sc.skip_all()
        if sc.accept("}"):
            break
        i = sc.raw_until(" \t")
        j = sc.raw_until(" \t-")
        sc.expect("->")
        v = sc.raw_until(";}", allow_newline=False)
        if not i or not j or not v:
            sc.error("expected '<i> <j> -> <element>'")
        products.append((i, j, v))
        sc.skip_all()
        sc.accept(";")
    unit = None
    if sc.peek_word("unit"):
        sc.word("unit")
        unit = sc.raw_until("\n")
    return AlgebraDecl(name, kind, n, basis=basis, products=tuple(products), unit=unit)


def _elements(sc: _Scanner, close: str) -> tuple:
    out = []
    while not sc.peek(close):
        e = sc.raw_until("," + close)
        if not e:
            sc.error("expected an element")
        out.append(e)
        if not sc.accept(","):
            break
    return tuple(out)


def _p_ideal(sc: _Scanner) -> IdealDecl:
    name = sc.name("an ideal name")
    sc.expect("=")
    kind = sc.word("span", "generated")
    sc.expect("(")
    alg = sc.name("an algebra name")
    sc.expect(";")
    elems = _elements(sc, ")")
    sc.expect(")")
    return IdealDecl(name, kind, alg, elems)


def _entries(sc: _Scanner, with_ideal: bool) -> tuple:
    sc.expect("{")
    out = []
    while True:
        sc.skip_all()
        if sc.accept("}"):
            break
        line, col = sc.where()
        g = sc.raw_until(":")
        sc.expect(":")
        e = Entry(g, line=line, col=col)
        while True:
            key = sc.word("ideal", "map")
            sc.expect("=")
            if key == "ideal":
                if not with_ideal:
                    sc.error("a global action takes no ideals")
                e.ideal = sc.name("an ideal name")
            elif sc.peek_word("id"):
                sc.word("id")
                e.identity = True
            else:
                sc.expect("[")
                pairs = []
                while True:
                    sc.skip_all()
                    if sc.peek("]"):
                        break
                    x = sc.raw_until("-,]")
                    sc.expect("->")
                    y = sc.raw_until(",]")
                    pairs.append((x, y))
                    sc.skip_all()
                    if not sc.accept(","):
                        break
                sc.skip_all()
                sc.expect("]")
                e.pairs = tuple(pairs)
            if not sc.accept(","):
                break
        out.append(e)
        sc.skip_inline()
        sc.accept(";")
    return tuple(out)


def _p_global(sc: _Scanner) -> GlobalDecl:
    name = sc.name("an action name")
    sc.word("on")
    alg = sc.name("an algebra name")
    sc.word("by")
    grp = sc.name("a group name")
    return GlobalDecl(name, alg, grp, _entries(sc, with_ideal=False))


def _p_action(sc: _Scanner) -> ActionDecl:
    name = sc.name("an action name")
    if sc.accept("="):
        how = sc.word("restrict", "global")
        if how == "restrict":
            src = sc.name("a global action name")
            sc.word("to")
            return ActionDecl(name, "restrict", source=src, ideal=sc.name("an ideal name"))
        return ActionDecl(name, "global", source=sc.name("a global action name"))
    sc.word("on")
    alg = sc.name("an algebra name")
    sc.word("by")
    grp = sc.name("a group name")
    return ActionDecl(name, "explicit", alg, grp, _entries(sc, with_ideal=True))


def _p_cmd(sc: _Scanner) -> Command:
    pos = sc.pos
    verb = sc.name("a command verb")
    if verb not in VERBS:
        sc.error(f"unknown command '{verb}' (known: {', '.join(VERBS)})", pos + 1)
    args = []
    expects = []
    while not sc.at_eol():
        if sc.peek_word("expect"):
            sc.word("expect")
            while not sc.at_eol():
                key = sc.raw_until("=")
                if not key:
                    sc.error("expected 'key=value' after 'expect'")
                sc.expect("=")
                val = sc.raw_until(" \t")
                if not val:
                    sc.error(f"missing value for '{key}'")
                expects.append((key, val))
            break
        if sc.peek("{"):
            sc.expect("{")
            body = sc.raw_until("}")
            sc.expect("}")
            args.append("{" + ",".join(x.strip() for x in body.split(",") if x.strip()) + "}")
        else:
            args.append(sc.raw_until(" \t"))
    return Command(verb, tuple(args), tuple(expects))


_PARSERS = {"field": _p_field, "group": _p_group, "algebra": _p_algebra, "ideal": _p_ideal,
            "global": _p_global, "action": _p_action, "cmd": _p_cmd}


# -- name resolution ---------------------------------------------------------

_ARITY = {
    "verify": ("action",), "crossed": ("action",), "assoc": ("action",),
    "multipliers": ("ideal|algebra",), "lr_assoc": ("ideal|algebra",), "semiprime": ("algebra",),
    "envelope": ("action",), "morita": ("action",), "kpar": ("group",),
    "elementary": ("group", "subset"), "grading": ("group", "subset"), "condition_x": ("action",),
}


def _check_names(doc: SpecDocument):
    kinds: dict[str, str] = {}
    fields = doc.of(FieldDecl)
    if not fields:
        raise SpecError("missing 'field' declaration", 1, 1)
    if len(fields) > 1:
        raise SpecError("more than one 'field' declaration", fields[1].line, fields[1].col)

    def need(node, name, *want):
        k = kinds.get(name)
        if k is None:
            raise SpecError(f"undefined name '{name}'", node.line, node.col)
        if k not in want:
            raise SpecError(f"'{name}' is a {k}, expected {' or '.join(want)}", node.line, node.col)

    def define(node, name, kind):
        if name in kinds:
            raise SpecError(f"'{name}' is already defined", node.line, node.col)
        kinds[name] = kind

    for s in doc.statements:
        if isinstance(s, GroupDecl):
            define(s, s.name, "group")
        elif isinstance(s, AlgebraDecl):
            if s.over:
                need(s, s.over, "group")
            define(s, s.name, "algebra")
        elif isinstance(s, IdealDecl):
            need(s, s.algebra, "algebra")
            define(s, s.name, "ideal")
        elif isinstance(s, GlobalDecl):
            need(s, s.algebra, "algebra")
            need(s, s.group, "group")
            define(s, s.name, "global action")
        elif isinstance(s, ActionDecl):
            if s.kind == "explicit":
                need(s, s.algebra, "algebra")
                need(s, s.group, "group")
                for e in s.entries:
                    if e.ideal:
                        need(e, e.ideal, "ideal")
            else:
                need(s, s.source, "global action")
                if s.ideal:
                    need(s, s.ideal, "ideal")
            define(s, s.name, "action")
        elif isinstance(s, Command):
            _check_command(s, need)


def _check_command(c: Command, need):
    args = list(c.args)
    if c.verb == "assoc" and len(args) >= 2 and args[1] == "cube":
        args = args[:1]
    if c.verb == "condition_x":
        if args and args[0] == "triangular":
            if len(args) != 2 or not args[1].isdigit() or int(args[1]) < 3:
                raise SpecError("usage: cmd condition_x triangular <n >= 3>", c.line, c.col)
            return
        if len(args) == 2:
            args = args[:1]
    want = _ARITY[c.verb]
    if len(args) != len(want):
        raise SpecError(f"'{c.verb}' takes {len(want)} argument(s): {' '.join(want)}", c.line, c.col)
    for a, w in zip(args, want):
        if w == "subset":
            if not (a.startswith("{") and a.endswith("}")):
                raise SpecError(f"expected a subset like {{1, g}}, found '{a}'", c.line, c.col)
        else:
            need(c, a, *w.replace("algebra", "algebra").split("|"))


# -- printer -----------------------------------------------------------------

def print_spec(doc: SpecDocument) -> str:
    """Canonical text; parse_spec(print_spec(d)) == d."""
    out = []
    for s in doc.statements:
        out.append(_print(s))
    return "\n".join(out) + "\n"


def _print_entries(entries) -> str:
    lines = []
    for e in entries:
        parts = []
        if e.ideal:
            parts.append(f"ideal={e.ideal}")
        if e.identity:
            parts.append("map=id")
        elif e.pairs or not e.ideal:
            parts.append("map=[" + ", ".join(f"{x} -> {y}" for x, y in e.pairs) + "]")
        lines.append(f"  {e.element}: " + ", ".join(parts))
    return "{\n" + "\n".join(lines) + "\n}"


def _print(s) -> str:
    if isinstance(s, FieldDecl):
        return "field rationals" if s.p is None else f"field gf {s.p}"
    if isinstance(s, GroupDecl):
        if s.kind in ("cyclic", "sym"):
            return f"group {s.name} = {s.kind} {s.n}"
        if s.kind == "klein":
            return f"group {s.name} = klein"
        head = f"({' '.join(s.labels)}) " if s.labels else ""
        return (f"group {s.name} = table {head}["
                + "; ".join(" ".join(r) for r in s.rows) + "]")
    if isinstance(s, AlgebraDecl):
        head = f"algebra {s.name} = {s.kind}"
        if s.kind in ("matrix", "upper", "product"):
            return head + f" {s.n}" + (f" over {s.over}" if s.over else "")
        if s.kind == "group_algebra":
            return head + f" {s.over}"
        if s.kind == "counter":
            return head
        text = head + f" {s.n}"
        if s.basis:
            text += f" basis ({' '.join(s.basis)})"
        text += " {\n" + "\n".join(f"  {i} {j} -> {v}" for i, j, v in s.products) + "\n}"
        if s.unit:
            text += f" unit {s.unit}"
        return text
    if isinstance(s, IdealDecl):
        return f"ideal {s.name} = {s.kind}({s.algebra}; {', '.join(s.elements)})"
    if isinstance(s, GlobalDecl):
        return f"global {s.name} on {s.algebra} by {s.group} " + _print_entries(s.entries)
    if isinstance(s, ActionDecl):
        if s.kind == "restrict":
            return f"action {s.name} = restrict {s.source} to {s.ideal}"
        if s.kind == "global":
            return f"action {s.name} = global {s.source}"
        return f"action {s.name} on {s.algebra} by {s.group} " + _print_entries(s.entries)
    if isinstance(s, Command):
        text = f"cmd {s.verb}"
        if s.args:
            text += " " + " ".join(s.args)
        if s.expects:
            text += " expect " + " ".join(f"{k}={v}" for k, v in s.expects)
        return text
    raise TypeError(f"cannot print {s!r}")


# -- element expressions -----------------------------------------------------

_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?([^\s+*]+(?:\s*\*\s*[^\s+*]+)*)?")


def parse_element(text: str, names, field) -> tuple:
    """A linear combination of basis names, e.g. ``2*u - 1/2*v + t``."""
    index = {n: k for k, n in enumerate(names)}
    coeffs = [field.zero] * len(names)
    s = text.strip()
    if s == "0":
        return tuple(coeffs)
    pos = 0
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos] == " ":
            pos += 1
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ValueError(f"expected '+' or '-' in '{text}'")
        while pos < len(s) and s[pos] == " ":
            pos += 1
        m = re.match(r"(\d+(?:/\d+)?)\s*\*\s*", s[pos:])
        c = Fraction(1)
        if m:
            c = Fraction(m.group(1))
            pos += m.end()
        name_start = pos
        depth = 0
        while pos < len(s):
            ch = s[pos]
            if ch in "([{":
                depth += 1
            elif ch in ")]}":
                depth -= 1
            elif depth == 0 and ch in " +-":
                break
            pos += 1
        name = s[name_start:pos]
        if name not in index:
            raise ValueError(f"unknown basis element '{name}'")
        coeffs[index[name]] += field(sign * c)
        first = False
    return tuple(coeffs)
