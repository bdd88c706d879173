"""Machine transformations that trade circuit size for garbage control.

Two constructions, both classical and exact:

* `bennett` — compute, reversibly copy the output to fresh zeroed lines,
  uncompute. The result leaves only a copy of the input behind, so the
  garbage-line count equals the input-line count no matter how messy the
  original machine was.

* `zero_garbage_compose` — given machines for a bijection and its inverse,
  build a machine computing the bijection with no garbage at all: every
  non-output line returns to its preset constant.

Both rely on the same copy gadget: a bank of controlled-NOTs writes a copy
onto zeroed lines, and (being self-inverse) erases one of two equal copies.
"""
from __future__ import annotations

from typing import Sequence

from .ir import (
    Circuit,
    Gate,
    GateKind,
    InterfaceSpec,
    InvalidCircuitError,
    Machine,
    concat,
    inverse,
    remap,
)
from .sim import EXHAUSTIVE_BOUND, truth_table


class NotInversePairError(InvalidCircuitError):
    """The two machines' truth tables are not mutually inverse bijections."""


def copy_fanout(src: Sequence[int], dst: Sequence[int], width: int | None = None) -> Circuit:
    """Bank of controlled-NOTs: control src[i], target dst[i].

    On zeroed destination lines this writes a copy of the source; applied
    again on equal values it erases the destination back to zero.
    """
    src = tuple(src)
    dst = tuple(dst)
    if len(src) != len(dst):
        raise InvalidCircuitError(f"source has {len(src)} lines, destination {len(dst)}")
    if set(src) & set(dst):
        raise InvalidCircuitError(f"source and destination overlap on {sorted(set(src) & set(dst))}")
    if width is None:
        width = max(src + dst, default=0) + 1
    gates = tuple(Gate(GateKind.CX, (s,), d) for s, d in zip(src, dst))
    return Circuit(width, gates)


def bennett(machine: Machine) -> Machine:
    """Compute-copy-uncompute. Garbage-line count becomes the input-line count.

    The new machine appends one fresh zeroed line per output bit, runs the
    original circuit, copies the output region onto the fresh lines, then
    runs the original circuit backward. At the end the fresh lines hold the
    output, every original preset is back at its constant, and the original
    input lines still hold the input, which is all the garbage there is.
    """
    iface = machine.iface
    k = iface.output_width
    old_width = iface.width
    new_width = old_width + k
    fresh = tuple(range(old_width, new_width))

    widened = remap(machine.circuit, {i: i for i in range(old_width)}, new_width)
    copy = copy_fanout(iface.output_lines, fresh, width=new_width)
    circuit = concat(concat(widened, copy), inverse(widened))

    new_iface = InterfaceSpec(
        width=new_width,
        input_lines=iface.input_lines,
        preset_lines=iface.preset_lines + tuple((f, 0) for f in fresh),
        output_lines=fresh,
        garbage_lines=iface.input_lines,
        restored_lines=iface.preset_lines,
    )
    return Machine(circuit, new_iface)


def _check_inverse_pair(mf: Machine, mfinv: Machine, max_input_bits: int) -> None:
    """Desk-scale check that the two tables are mutually inverse bijections."""
    tf = truth_table(mf, max_input_bits)
    tg = truth_table(mfinv, max_input_bits)
    for x in range(1 << tf.input_width):
        y = tf.output_of(x)
        if tg.output_of(y) != x:
            raise NotInversePairError(
                f"second machine maps {y} to {tg.output_of(y)}, expected {x}"
            )
    for y in range(1 << tg.input_width):
        x = tg.output_of(y)
        if tf.output_of(x) != y:
            raise NotInversePairError(
                f"first machine maps {x} to {tf.output_of(x)}, expected {y}"
            )


def zero_garbage_compose(
    mf: Machine, mfinv: Machine, max_input_bits: int = EXHAUSTIVE_BOUND
) -> Machine:
    """Build a garbage-free machine for the bijection computed by `mf`.

    `mfinv` must compute the inverse bijection, with its output landing on
    its own input lines (in the same order); that is what lets the final
    backward run consume the surviving input copy in place. The two machines
    are verified to be mutually inverse by exhaustive table comparison when
    the input region is within `max_input_bits`, and trusted above it.

    Line layout of the result (width 2n + s):

    * lines 0..n-1          input, and the output at the end
    * lines n..n+s-1        shared scratch, sized for the larger machine
    * lines n+s..2n+s-1     fresh copy lines, zeroed and restored

    Stages: run `mf` forward, copy its output onto the fresh lines, run `mf`
    backward; flip any scratch constants the second machine disagrees on;
    run `mfinv` forward reading the fresh lines, erase the recovered input
    copy on the fresh lines against the original, run `mfinv` backward
    re-aimed at the original input lines (turning the input into the
    output); flip the scratch constants back.
    """
    f_if, g_if = mf.iface, mfinv.iface
    n = f_if.input_width
    if g_if.output_width != n or f_if.output_width != g_if.input_width:
        raise InvalidCircuitError(
            "machines are not width-compatible: "
            f"{n}->{f_if.output_width} vs {g_if.input_width}->{g_if.output_width}"
        )
    if g_if.output_lines != g_if.input_lines:
        raise InvalidCircuitError(
            "inverse machine must produce its output on its own input lines, in order"
        )
    if n <= max_input_bits:
        _check_inverse_pair(mf, mfinv, max_input_bits)

    f_scratch = tuple(c for _, c in f_if.preset_lines)
    g_scratch = tuple(c for _, c in g_if.preset_lines)
    s = max(len(f_scratch), len(g_scratch))
    f_consts = f_scratch + (0,) * (s - len(f_scratch))
    g_consts = g_scratch + (0,) * (s - len(g_scratch))

    width = 2 * n + s
    r1 = tuple(range(n))
    r2 = tuple(range(n, n + s))
    r3 = tuple(range(n + s, 2 * n + s))

    def embedding(m: Machine, input_region: tuple[int, ...]) -> dict[int, int]:
        line_map = dict(zip(m.iface.input_lines, input_region))
        line_map.update(zip((l for l, _ in m.iface.preset_lines), r2))
        return line_map

    f_map = embedding(mf, r1)
    f_fwd = remap(mf.circuit, f_map, width)
    f_output = tuple(f_map[line] for line in f_if.output_lines)
    g_on_copy = remap(mfinv.circuit, embedding(mfinv, r3), width)
    g_on_input = remap(mfinv.circuit, embedding(mfinv, r1), width)
    const_fix = Circuit(
        width,
        tuple(Gate(GateKind.X, (), r2[j]) for j in range(s) if f_consts[j] != g_consts[j]),
    )

    stages = [
        f_fwd,
        copy_fanout(f_output, r3, width),
        inverse(f_fwd),
        const_fix,
        g_on_copy,
        copy_fanout(r1, r3, width),
        inverse(g_on_input),
        const_fix,
    ]
    circuit = stages[0]
    for stage in stages[1:]:
        circuit = concat(circuit, stage)

    iface = InterfaceSpec(
        width=width,
        input_lines=r1,
        preset_lines=tuple(zip(r2, f_consts)) + tuple((l, 0) for l in r3),
        output_lines=r1,
        garbage_lines=(),
        restored_lines=tuple(zip(r2, f_consts)) + tuple((l, 0) for l in r3),
    )
    return Machine(circuit, iface)
