"""Line-oriented ring-spec text format.

::

    # the row ring over Z_2 and the subring {[a a; 0 0]}
    name row2
    ring mat_row 2
    subring S gen e1+e2

    ring custom 2,2
    mult 1 1 = 1,0
    mult 1 2 = 0,1
    subring T gen e2

A ``ring`` line is ``ring <builtin> <params>`` or ``ring custom <d1,...,dk>``;
``mult i j = c1,...,ck`` lines (1-based, custom rings only) give e_i e_j, and
missing products are 0. ``subring <name> gen <expr>, ...`` closes the listed
elements to a subring; expressions are integer combinations of e1..ek such
as ``2e1-e3`` or ``3*e2`` (a bare integer n means n*e1). ``subring <name> hint
<hint>`` uses a subring the builtin provides (``scalars`` for the
upper-triangular rings).

Builtins can also be written as calls, ``zn(8)`` or
``direct_sum(mat_row(2),zn(2))``, both on the command line and as
``direct_sum`` parameters.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import RingProbError, RingSpecError
from .ring import BUILTINS, FiniteRing, Subring, builtin, ring_from_structure, subring_closure


@dataclass
class RingSpecDocument:
    name: str | None
    ring: FiniteRing
    subrings: dict[str, Subring] = field(default_factory=dict)
    builtin: tuple | None = None
    orders: list[int] | None = None
    mult: dict | None = None
    source: str = ""

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.source.encode()).hexdigest()

    def subring(self, name: str | None = None) -> Subring:
        """Named subring; with no name the first declared one, else the whole ring."""
        if name is None:
            return next(iter(self.subrings.values()), self.ring.whole())
        try:
            return self.subrings[name]
        except KeyError:
            raise RingSpecError(f"no subring named {name!r}") from None


_CALL = re.compile(r"^\s*([A-Za-z_]\w*)\s*\((.*)\)\s*$")
_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*\*?\s*(?:e(\d+))?\s*")


def _split_args(text: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    if cur.strip():
        out.append(cur)
    return [a.strip() for a in out]


def parse_builtin_call(text: str) -> FiniteRing:
    """``zn(8)``, ``zero_ring(2,2)``, ``direct_sum(mat_row(2),zn(2))`` ..."""
    m = _CALL.match(text)
    if not m:
        raise RingSpecError(f"expected a builtin call like zn(8), got {text!r}")
    name, inner = m.group(1), m.group(2)
    if name not in BUILTINS:
        raise RingSpecError(f"unknown builtin ring {name!r}")
    args = _split_args(inner)
    try:
        if name == "direct_sum":
            return builtin(name, *(parse_builtin_call(a) for a in args))
        return builtin(name, *(int(a) for a in args))
    except ValueError as exc:
        raise RingSpecError(str(exc)) from None


def parse_element(ring: FiniteRing, expr: str, line=None, column=None) -> int:
    k = ring.additive.rank
    text = expr.replace(" ", "")
    if not text:
        raise RingSpecError("empty element expression", line, column)
    coords = [0] * k
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        sign, coef, basis = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (not coef and basis is None):
            raise RingSpecError(f"cannot parse element expression {expr!r}", line, column)
        if pos > 0 and not sign:
            raise RingSpecError(f"missing + or - in {expr!r}", line, column)
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        if basis is None:
            if k == 0:
                if c:
                    raise RingSpecError("the trivial ring has only 0", line, column)
            elif c and k > 1:
                raise RingSpecError(f"bare integer {c} is ambiguous for rank {k}; use e1..e{k}",
                                    line, column)
            elif k:
                coords[0] += c
        else:
            i = int(basis)
            if not 1 <= i <= k:
                raise RingSpecError(f"basis symbol e{i} out of range 1..{k}", line, column)
            coords[i - 1] += c
        pos = m.end()
    return ring.element(coords)


def _ints(text: str, line: int, column: int) -> list[int]:
    try:
        return [int(x) for x in re.split(r"[,\s]+", text.strip()) if x]
    except ValueError:
        raise RingSpecError(f"expected integers, got {text!r}", line, column) from None


def parse_ringspec(text: str) -> RingSpecDocument:
    """Parse and validate a ring-spec document.

    Raises RingSpecError carrying line (and column where meaningful) for both
    syntax errors and rings that fail validation.
    """
    name = None
    ring_line = None
    kind = None
    mult: dict[tuple[int, int], list[int]] = {}
    mult_lines = {}
    subs: list[tuple[str, str, str, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        words = line.split(None, 1)
        head, rest = words[0], (words[1] if len(words) > 1 else "")
        col = indent + len(head) + 2
        if head == "name":
            name = rest.strip()
        elif head == "ring":
            if ring_line is not None:
                raise RingSpecError("only one ring line is allowed", lineno, indent + 1)
            parts = rest.split(None, 1)
            if not parts:
                raise RingSpecError("ring line needs a constructor", lineno, col)
            ring_line = (lineno, col, parts[0], parts[1] if len(parts) > 1 else "")
            kind = parts[0]
        elif head == "mult":
            m = re.match(r"^\s*(\d+)\s+(\d+)\s*=\s*(.+)$", rest)
            if not m:
                raise RingSpecError("expected 'mult i j = c1,...,ck'", lineno, col)
            key = (int(m.group(1)), int(m.group(2)))
            mult[key] = _ints(m.group(3), lineno, col)
            mult_lines[key] = lineno
        elif head == "subring":
            m = re.match(r"^\s*(\w+)\s+(gen|hint)\b\s*(.*)$", rest)
            if not m:
                raise RingSpecError("expected 'subring <name> gen <expr>, ...'", lineno, col)
            subs.append((m.group(1), m.group(2), m.group(3), lineno, col))
        else:
            raise RingSpecError(f"unknown directive {head!r}", lineno, indent + 1)
    if ring_line is None:
        raise RingSpecError("missing ring line")
    lineno, col, kind, params = ring_line
    orders = None
    bspec = None
    try:
        if kind == "custom":
            orders = _ints(params, lineno, col)
            k = len(orders)
            table = [[[0] * k for _ in range(k)] for _ in range(k)]
            for (i, j), c in mult.items():
                if not (1 <= i <= k and 1 <= j <= k) or len(c) != k:
                    raise RingSpecError(f"mult entry ({i},{j}) does not fit rank {k}",
                                        mult_lines[(i, j)])
                table[i - 1][j - 1] = c
            ring = ring_from_structure(orders, table, name=name)
        else:
            if mult:
                raise RingSpecError("mult lines are only allowed for custom rings",
                                    min(mult_lines.values()))
            if kind not in BUILTINS:
                raise RingSpecError(f"unknown builtin ring {kind!r}", lineno, col)
            if kind == "direct_sum":
                args = _split_args(params.replace(" ", ",")) if "(" not in params \
                    else [a for a in re.split(r"\s+(?![^(]*\))", params.strip()) if a]
                args = [a for piece in args for a in _split_args(piece)]
                ring = builtin(kind, *(parse_builtin_call(a) for a in args))
                bspec = (kind, tuple(args))
            else:
                vals = _ints(params, lineno, col)
                ring = builtin(kind, *vals)
                bspec = (kind, tuple(vals))
    except RingSpecError as exc:
        if exc.line is None:
            raise RingSpecError(str(exc), lineno, col) from None
        raise
    except (RingProbError, ValueError) as exc:
        raise RingSpecError(f"invalid ring: {exc}", lineno, col) from None
    if name:
        ring.name = name
    subrings = {}
    for sname, how, body, sl, sc in subs:
        if how == "hint":
            hint = body.strip()
            if hint not in ring.subring_hints:
                raise RingSpecError(f"ring has no subring hint {hint!r}", sl, sc)
            gens = [ring.element(c) for c in ring.subring_hints[hint]]
        else:
            exprs = [e for e in _split_args(body)] if body.strip() else []
            gens = [parse_element(ring, e, sl, sc) for e in exprs]
        subrings[sname] = subring_closure(ring, gens)
    return RingSpecDocument(name, ring, subrings, bspec, orders,
                            mult if kind == "custom" else None, text)


def load_ring_argument(value: str) -> RingSpecDocument:
    """Resolve a ``--ring`` value: a spec file, a builtin call, or inline
    spec text with ``;`` separating lines."""
    path = Path(value)
    if "\n" not in value and path.is_file():
        return parse_ringspec(path.read_text())
    if _CALL.match(value):
        ring = parse_builtin_call(value)
        return RingSpecDocument(None, ring, {}, (value,), source=value)
    return parse_ringspec(value.replace(";", "\n"))
