"""Problem files: one ``key = value`` per line, lists separated by commas.

Example::

    # forward order
    characteristic = 32003
    variables = x1, x2, x3
    ideal = x1^2, x1*x2*x3, x1*x3^2
    sequence = x2, x3^2

Polynomials never contain commas, so every list splits on ``,``.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Optional, Tuple

from .errors import ParseError
from .ideals import Ideal
from .modules import PresentedModule, Submodule, submodule
from .polyring import MonomialOrder, Ring
from .sequences import SequenceContext

_LIST_KEYS = ("variables", "ideal", "sequence", "a", "N")
_INT_KEYS = ("characteristic", "n_max", "d_max", "seed")
_PAIR_KEYS = ("bounds", "window")


@dataclass(frozen=True)
class ProblemSpec:
    variables: Tuple[str, ...]
    ideal: Tuple[str, ...] = ()
    sequence: Tuple[str, ...] = ()
    characteristic: int = 32003
    order: str = "grevlex"
    a: Optional[Tuple[str, ...]] = None
    N: Optional[Tuple[str, ...]] = None
    n_max: Optional[int] = None
    d_max: Optional[int] = None
    bounds: Optional[Tuple[int, int]] = None
    window: Optional[Tuple[int, int]] = None
    seed: Optional[int] = None

    # building ----------------------------------------------------------------
    def ring(self) -> Ring:
        try:
            return Ring(self.variables, self.characteristic, MonomialOrder.parse(self.order))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def module(self, ring: Optional[Ring] = None) -> PresentedModule:
        ring = ring or self.ring()
        return PresentedModule(ring, Ideal.parse(ring, self.ideal))

    def context(self) -> SequenceContext:
        ring = self.ring()
        module = self.module(ring)
        return SequenceContext(module, [ring.parse(t) for t in self.sequence])

    def ideal_a(self, ring: Ring) -> Optional[Ideal]:
        return None if self.a is None else Ideal.parse(ring, self.a)

    def submodule_N(self, module: PresentedModule) -> Optional[Submodule]:
        if self.N is None:
            return None
        return submodule(module, [module.ring.parse(t) for t in self.N])


def _split(value: str) -> Tuple[str, ...]:
    parts = [p.strip() for p in value.split(",")]
    if parts == [""]:
        return ()
    if any(not p for p in parts):
        raise ParseError("empty list entry")
    return tuple(parts)


def parse_problem(text: str) -> ProblemSpec:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in values:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        try:
            if key in _LIST_KEYS:
                values[key] = _split(value)
            elif key in _INT_KEYS:
                values[key] = int(value)
            elif key in _PAIR_KEYS:
                pair = tuple(int(v) for v in _split(value))
                if len(pair) != 2:
                    raise ValueError("expected two integers")
                values[key] = pair
            elif key == "order":
                values[key] = value
            else:
                raise ParseError(f"line {lineno}: unknown key {key!r}")
        except ValueError as exc:
            raise ParseError(f"line {lineno}: bad value for {key!r}: {exc}") from exc
    if "variables" not in values or not values["variables"]:
        raise ParseError("missing 'variables'")
    return ProblemSpec(**values)


def render_problem(spec: ProblemSpec) -> str:
    lines = []
    for f in fields(spec):
        value = getattr(spec, f.name)
        if value is None:
            continue
        if isinstance(value, tuple):
            value = ", ".join(str(v) for v in value)
        lines.append(f"{f.name} = {value}")
    return "\n".join(lines) + "\n"


def load_problem(path: str) -> ProblemSpec:
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())
