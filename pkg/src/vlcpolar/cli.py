"""Command-line harness: ``vlcpolar {encode,decode,ber,dist,runlen,hwreport}``.

Options may also come from a flat ``key=value`` file given with ``--config``;
keys are the long option names (``ebn0-list=1,2,3``). Flags on the command
line override the file.
"""
import argparse
import sys
from pathlib import Path

import numpy as np

from . import bits, metrics, polar, sim
from .scrambler import ScramblerConfig


def _floats(text):
    return tuple(float(v) for v in str(text).split(",") if v.strip())


def read_config_file(path):
    values = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        values[key.replace("-", "_")] = value
    return values


def _common(p):
    p.add_argument("--config", help="key=value file of option defaults")
    p.add_argument("--N", type=int, default=256, help="code length")
    p.add_argument("--K", type=int, default=158, help="message length")
    p.add_argument("--code-file", help="code profile to load instead of constructing one")
    p.add_argument("--encoder", choices=sim.ENCODERS, default="nonsystematic")
    p.add_argument("--scrambler", choices=("on", "off"), default="on")
    p.add_argument("--scrambler-taps", help="comma-separated tap exponents, e.g. 15,14")
    p.add_argument("--scrambler-seed", help="register seed in hex, e.g. 7FFF")
    p.add_argument("--quantizer", choices=sim.QUANTIZERS, default="soft3")
    p.add_argument("--thresholds", type=_floats, help="seven comma-separated soft3 thresholds")
    p.add_argument("--kernel", choices=tuple(polar.KERNELS), default="minsum")
    p.add_argument("--mu0", type=float, default=-1.0)
    p.add_argument("--mu1", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--output", help="write CSV here instead of stdout")


def build_parser(file_defaults=None, command=None):
    """Argument parser; ``file_defaults`` seed the options of ``command``."""
    parser = argparse.ArgumentParser(prog="vlcpolar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {}

    p = commands["encode"] = sub.add_parser("encode", help="payload hex -> transmitted codeword hex")
    _common(p)
    p.add_argument("--payload", required=True, help="payload as hex (first K bits are used)")

    p = commands["decode"] = sub.add_parser("decode", help="codeword hex or received samples -> payload hex")
    _common(p)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--codeword", help="hard codeword as hex (sent through a noiseless channel)")
    src.add_argument("--samples", help="file of N received sample values, '-' for stdin")
    p.add_argument("--sigma", type=float, default=0.0, help="noise std for the ideal LLR stage")

    p = commands["ber"] = sub.add_parser("ber", help="Monte-Carlo BER/FER sweep -> CSV")
    _common(p)
    p.add_argument("--ebn0-list", type=_floats, default="0,1,2,3,4")
    p.add_argument("--min-frame-errors", type=int, default=100)
    p.add_argument("--max-frames", type=int, default=10 ** 6)
    p.add_argument("--batch-size", type=int, default=1000)
    p.add_argument("--p-one", type=float, default=0.5)

    p = commands["dist"] = sub.add_parser("dist", help="ones-fraction distribution of transmitted codewords -> CSV")
    _common(p)
    p.add_argument("--frames", type=int, default=10000)
    p.add_argument("--p-one", type=float, default=0.9)

    p = commands["runlen"] = sub.add_parser("runlen", help="maximum run length, plain vs scrambled -> CSV")
    _common(p)
    p.add_argument("--frames", type=int, default=10000)

    p = commands["hwreport"] = sub.add_parser("hwreport", help="throughput, energy per bit and area efficiency")
    p.add_argument("--config", help="key=value file of option defaults")
    p.add_argument("--n", type=int, required=True, help="bits per decoded block")
    p.add_argument("--latency", type=float, required=True, help="decoding latency in clock cycles")
    p.add_argument("--fclk", type=float, required=True, help="clock frequency in Hz")
    p.add_argument("--power", type=float, required=True, help="power in W")
    p.add_argument("--area", type=float, required=True, help="area in m^2")

    if file_defaults and command in commands:
        _apply_file_defaults(commands[command], file_defaults)
    return parser


def _apply_file_defaults(parser, values):
    dests = {a.dest: a for a in parser._actions}
    unknown = set(values) - set(dests)
    if unknown:
        raise ValueError(f"unknown config keys for {parser.prog}: {', '.join(sorted(unknown))}")
    for key in values:
        dests[key].required = False
    parser.set_defaults(**values)


def _parse(argv):
    argv = sys.argv[1:] if argv is None else list(argv)
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    config_path = pre.parse_known_args(argv)[0].config
    if not config_path:
        return build_parser().parse_args(argv)
    values = read_config_file(config_path)
    values.pop("config", None)
    command = next((a for a in argv if not a.startswith("-")), None)
    return build_parser(values, command).parse_args(argv)


def config_from_args(args):
    if args.code_file:
        code = polar.load_code(args.code_file)
    else:
        code = polar.construct_code(args.N, args.K)
    if args.scrambler not in ("on", "off"):
        raise ValueError(f"scrambler must be 'on' or 'off', got {args.scrambler!r}")
    scrambler = None
    if args.scrambler == "on":
        scrambler = ScramblerConfig.parse(args.scrambler_taps, args.scrambler_seed)
    extra = {}
    for name in ("min_frame_errors", "max_frames", "batch_size", "p_one", "frames"):
        if hasattr(args, name):
            extra[name] = getattr(args, name)
    if hasattr(args, "ebn0_list"):
        extra["ebn0_points"] = args.ebn0_list
    return sim.SimConfig(code=code, encoder=args.encoder, scrambler=scrambler,
                         quantizer=args.quantizer, thresholds=args.thresholds,
                         kernel=args.kernel, mu0=args.mu0, mu1=args.mu1,
                         seed=args.seed, workers=args.workers, **extra)


def _emit(text, args):
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _read_samples(source):
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    return np.array(text.replace(",", " ").split(), dtype=float)


def run(args):
    if args.command == "hwreport":
        report = metrics.hardware_report(args.n, args.latency, args.fclk, args.power, args.area)
        print(report.describe())
        return 0

    config = config_from_args(args)
    if args.command == "encode":
        payload = bits.frame_from_hex(args.payload, config.code.K)
        print(bits.frame_to_hex(sim.tx_pipeline(payload, config)))
    elif args.command == "decode":
        if args.codeword is not None:
            codeword = bits.frame_from_hex(args.codeword, config.code.N)
            samples = np.where(codeword == 1, config.mu1, config.mu0)
        else:
            samples = _read_samples(args.samples)
        print(bits.frame_to_hex(sim.rx_pipeline(samples, config, args.sigma)))
    elif args.command == "ber":
        _emit(sim.ber_csv(sim.run_ber_sweep(config)), args)
    elif args.command == "dist":
        sweeps = sim.analyze_distribution(config)
        for name, sweep in sweeps.items():
            print(f"{name}: ones fraction in [{sweep.min_fraction:.4f}, {sweep.max_fraction:.4f}]",
                  file=sys.stderr)
        _emit(sim.distribution_csv(sweeps), args)
    elif args.command == "runlen":
        _emit(sim.runlength_csv(sim.analyze_runlength(config)), args)
    return 0


def main(argv=None):
    try:
        return run(_parse(argv))
    except SystemExit as exc:  # argparse usage errors
        return exc.code if isinstance(exc.code, int) else 2
    except (ValueError, IndexError, OSError) as exc:
        print(f"vlcpolar: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
