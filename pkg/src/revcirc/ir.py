"""Core circuit IR: gates, circuits, line-role declarations, structural algebra.

Everything here is immutable after construction and safe to share across
threads. A Circuit is just an ordered gate list over `width` lines; an
InterfaceSpec assigns roles to those lines (input/preset at the start,
output/garbage/restored at the end); a Machine bundles the two.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence


class InvalidCircuitError(ValueError):
    """A gate, circuit, or interface declaration breaks a structural invariant."""


class GateKind(Enum):
    X = "x"
    CX = "cx"
    CCX = "ccx"

    @property
    def n_controls(self) -> int:
        return _CONTROL_COUNT[self]


_CONTROL_COUNT = {GateKind.X: 0, GateKind.CX: 1, GateKind.CCX: 2}


@dataclass(frozen=True)
class Gate:
    """One reversible primitive: the target line flips iff every control is 1.

    With two controls this is the Toffoli gate; with one, controlled-NOT;
    with none, plain NOT. Every kind is its own inverse.
    """

    kind: GateKind
    controls: tuple[int, ...]
    target: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "controls", tuple(self.controls))
        if len(self.controls) != self.kind.n_controls:
            raise InvalidCircuitError(
                f"gate kind {self.kind.value!r} takes {self.kind.n_controls} "
                f"control(s), got {len(self.controls)}"
            )
        lines = self.lines
        if any(line < 0 for line in lines):
            raise InvalidCircuitError(f"negative line index in gate: {lines}")
        if len(set(lines)) != len(lines):
            raise InvalidCircuitError(f"duplicate line in gate: {lines}")

    @property
    def lines(self) -> tuple[int, ...]:
        """All line indices the gate touches, controls first."""
        return self.controls + (self.target,)


def make_gate(kind: GateKind | str, controls: Sequence[int], target: int) -> Gate:
    """Build a validated Gate; `kind` may be given as 'x'/'cx'/'ccx'."""
    if isinstance(kind, str):
        try:
            kind = GateKind(kind.lower())
        except ValueError:
            raise InvalidCircuitError(f"unknown gate kind {kind!r}") from None
    return Gate(kind, tuple(controls), target)


@dataclass(frozen=True)
class Circuit:
    """An ordered gate sequence over `width` lines."""

    width: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        if self.width < 1:
            raise InvalidCircuitError("circuit width must be positive")
        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            if max(gate.lines) >= self.width:
                raise InvalidCircuitError(
                    f"gate on lines {gate.lines} exceeds circuit width {self.width}"
                )

    def __len__(self) -> int:
        return len(self.gates)


def inverse(circuit: Circuit) -> Circuit:
    """The circuit undoing `circuit`: gates in reverse order.

    Each primitive is self-inverse, so reversing the order is enough.
    """
    return Circuit(circuit.width, tuple(reversed(circuit.gates)))


def remap(circuit: Circuit, line_map: Mapping[int, int], new_width: int) -> Circuit:
    """Relabel every line of `circuit` through `line_map` onto `new_width` lines.

    `line_map` must cover [0, circuit.width), be injective, and land inside
    [0, new_width). Gate order, count, and kinds are preserved.
    """
    missing = [line for line in range(circuit.width) if line not in line_map]
    if missing:
        raise InvalidCircuitError(f"line map is not defined on lines {missing}")
    image = [line_map[line] for line in range(circuit.width)]
    if len(set(image)) != len(image):
        raise InvalidCircuitError("non-injective line map")
    bad = [i for i in image if not 0 <= i < new_width]
    if bad:
        raise InvalidCircuitError(f"line map image out of range [0, {new_width}): {bad}")
    gates = tuple(
        Gate(g.kind, tuple(line_map[c] for c in g.controls), line_map[g.target])
        for g in circuit.gates
    )
    return Circuit(new_width, gates)


def concat(a: Circuit, b: Circuit) -> Circuit:
    """Sequence two equal-width circuits: run `a`, then `b`."""
    if a.width != b.width:
        raise InvalidCircuitError(f"width mismatch: {a.width} vs {b.width}")
    return Circuit(a.width, a.gates + b.gates)


@dataclass(frozen=True)
class InterfaceSpec:
    """Role declaration for a circuit's lines.

    Initially every line is either an input line or a preset line (held at a
    declared constant). Finally every line is an output line, a garbage line
    (data-dependent leftover), or a restored line (a preset that must return
    to its constant). Line order within input/output/garbage regions fixes
    the numeric encoding: the first listed line is bit 0.
    """

    width: int
    input_lines: tuple[int, ...] = ()
    preset_lines: tuple[tuple[int, int], ...] = ()
    output_lines: tuple[int, ...] = ()
    garbage_lines: tuple[int, ...] = ()
    restored_lines: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "input_lines", tuple(self.input_lines))
        object.__setattr__(self, "preset_lines", tuple((int(l), int(c)) for l, c in self.preset_lines))
        object.__setattr__(self, "output_lines", tuple(self.output_lines))
        object.__setattr__(self, "garbage_lines", tuple(self.garbage_lines))
        object.__setattr__(self, "restored_lines", tuple((int(l), int(c)) for l, c in self.restored_lines))

        for line, const in self.preset_lines + self.restored_lines:
            if const not in (0, 1):
                raise InvalidCircuitError(f"constant for line {line} must be 0 or 1, got {const}")

        all_lines = range(self.width)
        self._check_partition(
            "initial", (self.input_lines, tuple(l for l, _ in self.preset_lines)), all_lines
        )
        self._check_partition(
            "final",
            (self.output_lines, self.garbage_lines, tuple(l for l, _ in self.restored_lines)),
            all_lines,
        )
        presets = dict(self.preset_lines)
        for line, const in self.restored_lines:
            if line not in presets:
                raise InvalidCircuitError(f"restored line {line} is not a preset line")
            if presets[line] != const:
                raise InvalidCircuitError(
                    f"restored line {line} declares constant {const}, preset says {presets[line]}"
                )

    @staticmethod
    def _check_partition(which: str, groups: tuple[tuple[int, ...], ...], expected: Iterable[int]) -> None:
        seen: list[int] = []
        for group in groups:
            seen.extend(group)
        if len(seen) != len(set(seen)):
            raise InvalidCircuitError(f"{which} role declaration lists a line twice")
        if set(seen) != set(expected):
            raise InvalidCircuitError(
                f"{which} role declaration does not cover every line exactly once"
            )

    @property
    def input_width(self) -> int:
        return len(self.input_lines)

    @property
    def output_width(self) -> int:
        return len(self.output_lines)

    @property
    def garbage_width(self) -> int:
        return len(self.garbage_lines)

    @property
    def preset_constants(self) -> dict[int, int]:
        return dict(self.preset_lines)

    @property
    def restored_constants(self) -> dict[int, int]:
        return dict(self.restored_lines)


@dataclass(frozen=True)
class Machine:
    """A circuit plus the interface declaring what its lines mean."""

    circuit: Circuit
    iface: InterfaceSpec

    def __post_init__(self) -> None:
        if self.circuit.width != self.iface.width:
            raise InvalidCircuitError(
                f"circuit width {self.circuit.width} != interface width {self.iface.width}"
            )

    @property
    def width(self) -> int:
        return self.circuit.width


def inverse_machine(machine: Machine) -> Machine:
    """The machine running `machine` backward, with roles swapped to match.

    The old final partition becomes the new initial one: outputs and garbage
    become inputs (in that order), restored presets stay presets. The old
    initial partition becomes the new final one: inputs become outputs, and
    presets that were not declared restored end at their constants but are
    listed as garbage, since the role vocabulary has no better slot for them.
    """
    iface = machine.iface
    restored = set(iface.restored_constants)
    unrestored_presets = tuple(l for l, _ in iface.preset_lines if l not in restored)
    new_iface = InterfaceSpec(
        width=iface.width,
        input_lines=iface.output_lines + iface.garbage_lines,
        preset_lines=iface.restored_lines,
        output_lines=iface.input_lines,
        garbage_lines=unrestored_presets,
        restored_lines=iface.restored_lines,
    )
    return Machine(inverse(machine.circuit), new_iface)
