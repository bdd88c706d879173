"""Command-line surface tying simulation, transforms, profiling, and inversion together.

Every command reads/writes the .rvc format, prints a human-readable report by
default, and a single JSON object with `--json`. Bitstrings on the command
line are little-endian with respect to the region's declared line order: the
leftmost character is the region's first listed line, which is bit 0 of the
integer encoding.

Exit codes: 0 success, 1 usage error, 2 invalid circuit or document,
3 inversion failure, 4 exhaustive bound exceeded.
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import library
from .analysis import conformance, garbage_profile, growth_report
from .fileformat import parse_circuit, serialize
from .invert import InversionError, invert_blind, invert_with_profile
from .ir import InvalidCircuitError, Machine, inverse_machine
from .sim import BitState, ExhaustiveBoundError, initial_state, is_injective, run, truth_table
from .transforms import bennett, zero_garbage_compose


def _load(path: str) -> Machine:
    return parse_circuit(Path(path).read_text())


def _save(machine: Machine, path: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(serialize(machine))


def _bits_to_int(bits: str, region: str, expected_len: int) -> int:
    if len(bits) != expected_len or any(ch not in "01" for ch in bits):
        raise click.UsageError(
            f"expected {expected_len} characters of 0/1 for the {region} region, got {bits!r}"
        )
    return sum(int(ch) << i for i, ch in enumerate(bits))


def _int_to_bits(value: int, width: int) -> str:
    return "".join(str((value >> i) & 1) for i in range(width))


def _emit(report: dict, as_json: bool, human: list[str]) -> None:
    if as_json:
        click.echo(json.dumps(report, indent=2))
    else:
        for line in human:
            click.echo(line)


@click.group()
def cli() -> None:
    """Reversible-logic circuit toolkit."""


@cli.command()
@click.option("-c", "--circuit", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-x", "bits", default=None, help="Region bits (input region forward, full state backward).")
@click.option("--int", "value", type=int, default=None, help="Input region value (forward only).")
@click.option("--backward", is_flag=True, help="Run the gate list in reverse from a full state.")
@click.option("--json", "as_json", is_flag=True)
def sim(path: str, bits: str | None, value: int | None, backward: bool, as_json: bool) -> None:
    """Simulate a machine on one input."""
    machine = _load(path)
    iface = machine.iface
    if (bits is None) == (value is None):
        raise click.UsageError("give exactly one of -x or --int")

    if backward:
        if value is not None:
            raise click.UsageError("--backward needs the full final state via -x, not --int")
        state = BitState(iface.width, tuple(int(ch) for ch in _validate_bits(bits, iface.width)))
        start = run(machine.circuit, state, "backward")
        presets_ok = all(start.bits[l] == c for l, c in iface.preset_lines)
        report = {
            "command": "sim",
            "direction": "backward",
            "final_state": str(state),
            "initial_state": str(start),
            "input_value": start.value_of(iface.input_lines),
            "presets_consistent": presets_ok,
        }
        human = [
            f"initial state: {start}",
            f"input region: {report['input_value']} "
            f"(bits {_int_to_bits(report['input_value'], iface.input_width)})",
            f"presets consistent: {'yes' if presets_ok else 'no'}",
        ]
        _emit(report, as_json, human)
        return

    x = value if value is not None else _bits_to_int(bits, "input", iface.input_width)
    if not 0 <= x < (1 << iface.input_width):
        raise click.UsageError(f"input value {x} does not fit {iface.input_width} bits")
    final = run(machine.circuit, initial_state(machine, x))
    out = final.value_of(iface.output_lines)
    garbage = final.value_of(iface.garbage_lines)
    report = {
        "command": "sim",
        "direction": "forward",
        "input_value": x,
        "input_bits": _int_to_bits(x, iface.input_width),
        "final_state": str(final),
        "output_value": out,
        "output_bits": _int_to_bits(out, iface.output_width),
        "garbage_value": garbage,
        "garbage_bits": _int_to_bits(garbage, iface.garbage_width),
    }
    human = [
        f"input: {x} (bits {report['input_bits']})",
        f"output: {out} (bits {report['output_bits']})",
        f"garbage: {report['garbage_bits'] or '(none)'}",
        f"final state: {final}",
    ]
    _emit(report, as_json, human)


def _validate_bits(bits: str, width: int) -> str:
    if len(bits) != width or any(ch not in "01" for ch in bits):
        raise click.UsageError(f"expected {width} characters of 0/1, got {bits!r}")
    return bits


@cli.command()
@click.option("-c", "--circuit", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def table(path: str, as_json: bool) -> None:
    """Print the machine's exhaustive truth table."""
    machine = _load(path)
    t = truth_table(machine)
    injective = is_injective(t)
    rows = [
        {"input": x, "output": out, "garbage": garbage}
        for x, (out, garbage) in sorted(t.rows.items())
    ]
    report = {
        "command": "table",
        "input_bits": t.input_width,
        "output_bits": t.output_width,
        "injective": injective,
        "rows": rows,
    }
    human = [f"{'x':>6}  {'f(x)':>6}  garbage"]
    human += [f"{r['input']:>6}  {r['output']:>6}  {_int_to_bits(r['garbage'], machine.iface.garbage_width) or '-'}" for r in rows]
    human.append(f"injective: {'yes' if injective else 'no'}")
    _emit(report, as_json, human)


def _report_written(machine: Machine, out: str, command: str, as_json: bool) -> None:
    report = {
        "command": command,
        "path": out,
        "width": machine.width,
        "gates": len(machine.circuit),
        "garbage_lines": machine.iface.garbage_width,
    }
    _emit(report, as_json, [
        f"wrote {out}: width {machine.width}, {len(machine.circuit)} gates, "
        f"{machine.iface.garbage_width} garbage line(s)"
    ])


@cli.command()
@click.option("-c", "--circuit", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", "out", required=True, type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def inverse(path: str, out: str, as_json: bool) -> None:
    """Write the machine that runs the given one backward."""
    machine = inverse_machine(_load(path))
    _save(machine, out)
    _report_written(machine, out, "inverse", as_json)


@cli.command(name="bennett")
@click.option("-c", "--circuit", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", "out", required=True, type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def bennett_cmd(path: str, out: str, as_json: bool) -> None:
    """Apply the compute-copy-uncompute transform and write the result."""
    machine = bennett(_load(path))
    _save(machine, out)
    _report_written(machine, out, "bennett", as_json)


@cli.command(name="zg-compose")
@click.option("--forward", "fwd_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--inverse", "inv_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", "out", required=True, type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def zg_compose(fwd_path: str, inv_path: str, out: str, as_json: bool) -> None:
    """Compose machines for f and its inverse into a garbage-free machine for f."""
    machine = zero_garbage_compose(_load(fwd_path), _load(inv_path))
    _save(machine, out)
    _report_written(machine, out, "zg-compose", as_json)


@cli.command()
@click.option("-c", "--circuit", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def profile(path: str, as_json: bool) -> None:
    """Enumerate the reachable garbage configurations."""
    machine = _load(path)
    prof = garbage_profile(machine)
    conf = conformance(machine)
    report = {"command": "profile", **prof.as_dict(), "conformance": conf.as_dict()}
    k = prof.garbage_bits
    human = [
        f"machine: {prof.machine_id}",
        f"input bits: {prof.input_bits}, garbage bits: {k}",
        f"reachable configurations: {prof.config_count}",
    ]
    human += [f"  {_int_to_bits(cfg, k) or '(empty)'}" for cfg in prof.configs]
    human.append(f"conformance: {'pass' if conf.passed else 'FAIL'}")
    _emit(report, as_json, human)


@cli.command()
@click.option("--family", type=click.Choice(["incr", "adder"]), required=True)
@click.option("--from", "start", type=int, required=True)
@click.option("--to", "stop", type=int, required=True)
@click.option("--json", "as_json", is_flag=True)
def growth(family: str, start: int, stop: int, as_json: bool) -> None:
    """Profile a circuit family across sizes and classify the growth."""
    constructors = {"incr": library.incrementer, "adder": library.ripple_adder}
    if stop - start < 2:
        raise click.UsageError("need at least 3 sizes: --to must be at least --from + 2")
    rep = growth_report(constructors[family], range(start, stop + 1), family_name=family)
    report = {"command": "growth", **rep.as_dict()}
    human = [f"{'n':>4}  configs"]
    human += [f"{n:>4}  {c}" for n, c in rep.points]
    human.append(f"classification: {rep.classification} (empirical at desk scale)")
    _emit(report, as_json, human)


@cli.command()
@click.option("-c", "--circuit", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("-y", "bits", default=None, help="Output region bits.")
@click.option("--int", "value", type=int, default=None, help="Output region value.")
@click.option("--blind", is_flag=True, help="Guess garbage strings at random instead of using the profile.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--max-trials", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
def invert(
    path: str,
    bits: str | None,
    value: int | None,
    blind: bool,
    seed: int,
    max_trials: int | None,
    as_json: bool,
) -> None:
    """Recover the input that produced an output value."""
    machine = _load(path)
    iface = machine.iface
    if (bits is None) == (value is None):
        raise click.UsageError("give exactly one of -y or --int")
    y = value if value is not None else _bits_to_int(bits, "output", iface.output_width)
    if not 0 <= y < (1 << iface.output_width):
        raise click.UsageError(f"output value {y} does not fit {iface.output_width} bits")

    if max_trials is not None and max_trials < 1:
        raise click.UsageError("--max-trials must be at least 1")
    k = iface.garbage_width
    report: dict = {"command": "invert", "output_value": y}
    human: list[str] = []
    if blind:
        result = invert_blind(machine, y, seed=seed, max_trials=max_trials)
        report.update(result.as_dict())
        report["seed"] = seed
        human.append(f"method: blind (seed {seed}, {k} garbage bits)")
        human.append(f"trials: {result.trials}")
    else:
        prof = garbage_profile(machine)
        result = invert_with_profile(machine, y, prof)
        report.update(result.as_dict())
        report["attempts"] = [
            {"config": cfg, "accepted": i == result.trials - 1}
            for i, cfg in enumerate(prof.configs[: result.trials])
        ]
        report["profile"] = prof.as_dict()
        human.append(
            f"method: table (profile built from {1 << prof.input_bits} forward runs, "
            f"{prof.config_count} configurations)"
        )
        for i, cfg in enumerate(prof.configs[: result.trials]):
            verdict = "accept" if i == result.trials - 1 else "reject"
            human.append(f"trial {i + 1}: garbage {_int_to_bits(cfg, k) or '(empty)'} -> {verdict}")
    report["matched_config_bits"] = _int_to_bits(result.matched_config, k)
    report["input_bits"] = _int_to_bits(result.input_value, iface.input_width)
    human.append(
        f"input: {result.input_value} (bits {report['input_bits']}), "
        f"matched garbage {report['matched_config_bits'] or '(empty)'}"
    )
    _emit(report, as_json, human)


@cli.command()
@click.argument("kind", type=click.Choice(["incr", "decr", "add"]))
@click.option("--bits", "n", type=int, required=True)
@click.option("-o", "--output", "out", required=True, type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def gen(kind: str, n: int, out: str, as_json: bool) -> None:
    """Write a library machine: incr, decr, or add on N bits."""
    constructors = {
        "incr": library.incrementer,
        "decr": library.decrementer,
        "add": library.ripple_adder,
    }
    machine = constructors[kind](n)
    _save(machine, out)
    _report_written(machine, out, "gen", as_json)


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)


def main(argv: list[str] | None = None) -> int:
    """Run the CLI, mapping domain errors to documented exit codes."""
    try:
        cli.main(args=argv, prog_name="revcirc", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return 1
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except ExhaustiveBoundError as exc:
        _fail(exc)
        return 4
    except InversionError as exc:
        _fail(exc)
        return 3
    except InvalidCircuitError as exc:
        _fail(exc)
        return 2
    except OSError as exc:
        _fail(exc)
        return 1
    return 0


def entry() -> None:
    sys.exit(main())
