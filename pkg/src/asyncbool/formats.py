"""Text formats: networks (truth table or Boolean expressions), schedules,
state-set literals, and the DOT state portrait exporter.

The truth table is the ground-truth network format; the expression DSL is
sugar that compiles down to a table.  All renderers round-trip bit-exactly
through their parsers and produce byte-stable output.
"""

from __future__ import annotations

from fractions import Fraction

from .core import DimensionError, Network, format_bits, full_mask, parse_bits, unstable_set
from .graph import CapExceededError, _check_graph_cap, proper_successors
from .schedule import NotProgressiveError, Schedule, ScheduleError, is_progressive, missing_coordinates


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif column is not None:
            where = f"column {column}: "
        super().__init__(where + message)
        self.line = line
        self.column = column


# --- networks: truth table ------------------------------------------------


def parse_network_table(text: str) -> Network:
    lines = [
        (i + 1, line.strip())
        for i, line in enumerate(text.splitlines())
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty network file")
    lineno, header = lines[0]
    if not header.startswith("n=") or not header[2:].strip().isdigit():
        raise ParseError(f"expected 'n=<int>', got {header!r}", lineno)
    n = int(header[2:])
    if n < 1:
        raise ParseError("dimension must be positive", lineno)
    rows = []
    for lineno, line in lines[1:]:
        parts = line.split("->")
        if len(parts) != 2:
            raise ParseError(f"expected '<bits> -> <bits>', got {line!r}", lineno)
        try:
            mu = parse_bits(parts[0].strip(), n)
            image = parse_bits(parts[1].strip(), n)
        except DimensionError as exc:
            raise ParseError(str(exc), lineno) from exc
        rows.append((mu, image))
    try:
        return Network.from_rows(n, rows)
    except DimensionError as exc:
        raise ParseError(str(exc)) from exc


def render_network_table(net: Network) -> str:
    out = [f"n={net.n}"]
    for mu in net.states():
        out.append(f"{format_bits(mu, net.n)} -> {format_bits(net.table[mu], net.n)}")
    return "\n".join(out) + "\n"


# --- networks: expression DSL ---------------------------------------------
#
# grammar (loosest binding first):
#   expr   := xor ('|' xor)*
#   xor    := and ('^' and)*
#   and    := unary ('&' unary)*
#   unary  := '!' unary | atom
#   atom   := '0' | '1' | x<i> | '(' expr ')'


class _ExprParser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.pos = 0
        self.n = n

    def error(self, message: str):
        raise ParseError(message, column=self.pos + 1)

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        node = self.expr()
        if self.peek():
            self.error(f"unexpected {self.text[self.pos]!r}")
        return node

    def expr(self):
        node = self.xor()
        while self.peek() == "|":
            self.pos += 1
            node = ("or", node, self.xor())
        return node

    def xor(self):
        node = self.and_()
        while self.peek() == "^":
            self.pos += 1
            node = ("xor", node, self.and_())
        return node

    def and_(self):
        node = self.unary()
        while self.peek() == "&":
            self.pos += 1
            node = ("and", node, self.unary())
        return node

    def unary(self):
        if self.peek() == "!":
            self.pos += 1
            return ("not", self.unary())
        return self.atom()

    def atom(self):
        c = self.peek()
        if not c:
            self.error("syntax error at end of input")
        if c == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return node
        if c in "01":
            self.pos += 1
            return ("const", int(c))
        if c == "x":
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("expected variable index after 'x'")
            idx = int(self.text[start : self.pos])
            if not 1 <= idx <= self.n:
                self.error(f"variable x{idx} outside 1..{self.n}")
            return ("var", idx)
        self.error(f"unexpected {c!r}")


def _eval_expr(node, mu: int, n: int) -> int:
    kind = node[0]
    if kind == "const":
        return node[1]
    if kind == "var":
        return (mu >> (n - node[1])) & 1
    if kind == "not":
        return 1 - _eval_expr(node[1], mu, n)
    a = _eval_expr(node[1], mu, n)
    b = _eval_expr(node[2], mu, n)
    if kind == "and":
        return a & b
    if kind == "or":
        return a | b
    return a ^ b


def parse_network_exprs(text: str) -> Network:
    """Lines `y<i> = <expr>`, one per coordinate, compiled to a truth table."""
    defs: dict[int, object] = {}
    lines = [
        (i + 1, line.strip())
        for i, line in enumerate(text.splitlines())
        if line.strip() and not line.strip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty expression file")
    n = len(lines)
    for lineno, line in lines:
        lhs, sep, rhs = line.partition("=")
        lhs = lhs.strip()
        if not sep or not lhs.startswith("y") or not lhs[1:].isdigit():
            raise ParseError(f"expected 'y<i> = <expr>', got {line!r}", lineno)
        idx = int(lhs[1:])
        if not 1 <= idx <= n:
            raise ParseError(f"coordinate y{idx} outside 1..{n}", lineno)
        if idx in defs:
            raise ParseError(f"coordinate y{idx} defined twice", lineno)
        try:
            defs[idx] = _ExprParser(rhs, n).parse()
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from exc
    missing = [i for i in range(1, n + 1) if i not in defs]
    if missing:
        raise ParseError(f"coordinate y{missing[0]} undefined")
    table = []
    for mu in range(1 << n):
        value = 0
        for i in range(1, n + 1):
            value = (value << 1) | _eval_expr(defs[i], mu, n)
        table.append(value)
    return Network(n, tuple(table))


# --- schedules and state sets ---------------------------------------------


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad time value {text.strip()!r}") from exc


def _parse_timed_events(body: str, n: int) -> list[tuple[Fraction, int]]:
    events = []
    for item in body.split():
        time_text, sep, bits = item.partition(":")
        if not sep:
            raise ParseError(f"expected '<time>:<bits>', got {item!r}")
        try:
            fire = parse_bits(bits, n)
        except DimensionError as exc:
            raise ParseError(str(exc)) from exc
        events.append((_parse_rational(time_text), fire))
    return events


def parse_schedule(text: str, n: int) -> Schedule:
    """`prefix <t>:<bits> ... ; cycle <o>:<bits> ... ; period <P> ; start <s>`

    The prefix section is optional; times are decimals or `a/b` rationals.
    Non-progressive schedules are rejected with the missing coordinates."""
    prefix: list[tuple[Fraction, int]] = []
    cycle: list[tuple[Fraction, int]] = []
    period: Fraction | None = None
    start: Fraction | None = None
    for section in text.split(";"):
        section = section.strip()
        if not section:
            continue
        keyword, _, body = section.partition(" ")
        if keyword == "prefix":
            prefix = _parse_timed_events(body, n)
        elif keyword == "cycle":
            cycle = _parse_timed_events(body, n)
        elif keyword == "period":
            period = _parse_rational(body)
        elif keyword == "start":
            start = _parse_rational(body)
        else:
            raise ParseError(f"unknown schedule section {keyword!r}")
    if not cycle:
        raise ParseError("schedule needs a nonempty cycle section")
    if period is None:
        raise ParseError("schedule needs a period")
    if start is None:
        raise ParseError("schedule needs a start")
    try:
        rho = Schedule(n, tuple(prefix), tuple(cycle), period, start)
    except ScheduleError as exc:
        raise ParseError(str(exc)) from exc
    if not is_progressive(rho):
        missing = ", ".join(str(i) for i in missing_coordinates(rho))
        raise ParseError(f"coordinate {missing} never fires")
    return rho


def _render_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def render_schedule(rho: Schedule) -> str:
    parts = []
    if rho.prefix:
        parts.append(
            "prefix "
            + " ".join(f"{_render_rational(t)}:{format_bits(f, rho.n)}" for t, f in rho.prefix)
        )
    parts.append(
        "cycle "
        + " ".join(f"{_render_rational(t)}:{format_bits(f, rho.n)}" for t, f in rho.cycle)
    )
    parts.append(f"period {_render_rational(rho.period)}")
    parts.append(f"start {_render_rational(rho.cycle_start)}")
    return " ; ".join(parts)


def parse_state_set(text: str, n: int) -> frozenset[int]:
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not items:
        raise ParseError("empty state set literal")
    try:
        return frozenset(parse_bits(item, n) for item in items)
    except DimensionError as exc:
        raise ParseError(str(exc)) from exc


def render_state_set(states: frozenset[int], n: int) -> str:
    return ",".join(sorted(format_bits(s, n) for s in states))


# --- DOT export -----------------------------------------------------------


def export_dot(net: Network) -> str:
    """Deterministic DOT state portrait.

    Node labels underline the unstable coordinates; one edge per nonempty
    fire subset of the unstable coordinates, labeled by the fire set.  The
    empty-fire self-loops are not drawn, so fixed points have no outgoing
    edges, matching hand-drawn portraits.
    """
    _check_graph_cap(net)
    lines = ["digraph portrait {", "  rankdir=LR;", '  node [shape=ellipse, fontname="monospace"];']
    for mu in net.states():
        unstable = unstable_set(net, mu)
        label = "".join(
            f"<u>{bit}</u>" if unstable & (1 << (net.n - 1 - i)) else bit
            for i, bit in enumerate(format_bits(mu, net.n))
        )
        lines.append(f'  s{format_bits(mu, net.n)} [label=<{label}>];')
    for mu in net.states():
        for fire, target in sorted(proper_successors(net, mu)):
            lines.append(
                f'  s{format_bits(mu, net.n)} -> s{format_bits(target, net.n)}'
                f' [label="{format_bits(fire, net.n)}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
