"""
Command-line front end: each subcommand composes library operations and
writes CSV/JSON/OBJ artifacts. Exit codes: 0 success, 1 invalid input,
2 numerical or file failure.
"""
import argparse
import logging
import sys
import numpy as np
from _cli.run_config import RunConfig
from _enums.artifact_format import ArtifactFormat
from _errors.errors import (EmptyRange, InvalidParameter, IoFailure, NumericalFailure,
                            ValidationError)
from _export.artifacts import read_profile_csv, render, write_artifact
from _export.geometry_export import residual_curve_data, revolve, to_ball_model
from _functionals.functionals import evaluate_energies, hemisphere_oracle
from _profile.profile_ode import integrate_profile
from _shooting.scan_config import ScanConfig
from _shooting.shooting import find_equilibria, scan_brackets
from _surfaces.hemisphere_surface import HemisphereSurface
from _surfaces.profile_surface import ProfileSurface
from _surfaces.sampled_surface import SampledSurface
from _verify.verify import verify_profile

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NUMERICAL = 2


class UsageError(Exception):
    """ Malformed command line """


class Parser(argparse.ArgumentParser):
    """ ArgumentParser that reports usage errors with exit code 1 """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


class Run:
    """
    One subcommand invocation, tracking the stage currently executing
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.stage = "setup"

    def enter(self, stage: str):
        """ Record the stage about to run """
        self.stage = stage
        logger.debug("%s: %s", self.config.command, stage)

    def emit(self, payload_name: str, payload, out: str | None, fmt: ArtifactFormat | None = None,
             wrap: bool = True):
        """
        Write a payload to a file or standard output

        JSON payloads are wrapped as {"config": ..., payload_name: ...} unless
        wrap is False.
        """
        fmt = fmt or (ArtifactFormat.from_path(out) if out else ArtifactFormat.JSON)
        if fmt == ArtifactFormat.JSON:
            data = payload.to_dict() if hasattr(payload, "to_dict") else payload
            payload = {"config": self.config.to_dict(), payload_name: data} if wrap else data
        self.enter("write")
        if out:
            write_artifact(payload, fmt, out)
        else:
            sys.stdout.write(render(payload, fmt))


def _integrate(run: Run):
    run.enter("integrate")
    sol = integrate_profile(run.config.params, run.config.flags["z0"], strict=True)
    run.emit("profile", sol, run.config.flags["out"], ArtifactFormat.CSV)


def _scan(run: Run):
    flags, params = run.config.flags, run.config.params
    if params.c0 == 0:
        run.enter("scan")
        result = scan_brackets(params, flags["zmin"], flags["zmax"], flags["samples"])
        run.emit("residuals", result, flags["out"], ArtifactFormat.JSON)
        return
    if flags["zmin"] >= flags["zmax"]:
        raise EmptyRange(f"empty scan window [{flags['zmin']}, {flags['zmax']}]")
    if not flags["zmin"] > 0:
        raise InvalidParameter("--zmin must be positive")
    run.enter("residual table")
    grid = np.geomspace(flags["zmin"], flags["zmax"], flags["samples"])
    table = residual_curve_data(params, grid, n_jobs=flags["jobs"])
    fmt = ArtifactFormat.from_path(flags["out"]) if flags["out"] else ArtifactFormat.CSV
    if fmt == ArtifactFormat.JSON:
        table = {"rows": [list(row) for row in table.rows],
                 "failures": [{"z0": z, "reason": why} for z, why in table.failures]}
    run.emit("residuals", table, flags["out"], fmt)


def _find(run: Run):
    flags = run.config.flags
    config = ScanConfig(z_start=flags["z_start"], ratio=flags["ratio"], n_jobs=flags["jobs"])
    run.config.flags["scan"] = config.to_dict()
    run.enter("find")
    branch = find_equilibria(run.config.params, flags["count"], config)
    run.emit("branch", [entry.to_dict() for entry in branch], flags["out"], wrap=False)


def _energy(run: Run):
    flags = run.config.flags
    if flags.get("target") == "hemisphere":
        surface = HemisphereSurface(flags["R"], flags["c0"])
    elif flags["profile"]:
        run.enter("read profile")
        surface = SampledSurface.from_columns(read_profile_csv(flags["profile"]), flags["c0"])
    else:
        if flags["z0"] is None:
            raise UsageError("energy needs --profile, --z0 or the hemisphere target")
        run.enter("integrate")
        surface = ProfileSurface(integrate_profile(run.config.params, flags["z0"], strict=True))
    run.enter("energies")
    report = evaluate_energies(surface, both_methods=flags["both_methods"])
    run.emit("energies", report, flags["out"])


def _verify(run: Run):
    run.enter("integrate")
    sol = integrate_profile(run.config.params, run.config.flags["z0"], strict=True)
    run.enter("verify")
    run.emit("verification", verify_profile(sol), run.config.flags["out"])


def _export(run: Run):
    flags = run.config.flags
    if not flags["out"]:
        raise UsageError("export needs --out")
    run.enter("integrate")
    sol = integrate_profile(run.config.params, flags["z0"], strict=True)
    run.enter("mesh")
    mesh = revolve(sol, flags["ntheta"], flags["nsigma"], reflect=flags["reflect"])
    if flags["ball"]:
        mesh = to_ball_model(mesh)
    run.emit("mesh", mesh, flags["out"], ArtifactFormat.OBJ)


def _oracle(run: Run):
    run.enter("oracle")
    run.emit("energies", hemisphere_oracle(run.config.flags["R"], run.config.flags["c0"]),
             run.config.flags["out"])


def build_parser() -> Parser:
    """
    Parser with one subcommand per operation

    Returns:
        Configured Parser
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--c0", type=float, default=0.0, help="spontaneous curvature (>= 0)")
    common.add_argument("--abs-tol", type=float, default=1e-10, help="integrator absolute tolerance")
    common.add_argument("--rel-tol", type=float, default=1e-10, help="integrator relative tolerance")
    common.add_argument("--sigma0", type=float, default=None,
                        help="pole start offset (default 1e-4 * max(|z0|, 1))")
    common.add_argument("--z-cutoff", type=float, default=1e-6,
                        help="boundary event height as a fraction of z0")
    common.add_argument("--sigma-max", type=float, default=200.0, help="arc-length cap")
    common.add_argument("--root-tol", type=float, default=1e-8, help="root residual tolerance")
    common.add_argument("--out", default=None, help="output file (standard output if omitted)")
    common.add_argument("--verbose", action="store_true", help="debug logging on standard error")

    parser = Parser(prog="membrane", description="Reduced membrane profiles, equilibria and "
                    "regularized energies")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=Parser)
    parser.subcommands = commands.choices

    integrate = commands.add_parser("integrate", parents=[common], help="integrate one profile")
    integrate.add_argument("--z0", type=float, required=True, help="initial height (nonzero)")
    integrate.set_defaults(func=_integrate)

    scan = commands.add_parser("scan", parents=[common], help="tabulate residuals over z0")
    scan.add_argument("--zmin", type=float, required=True, help="smallest initial height")
    scan.add_argument("--zmax", type=float, required=True, help="largest initial height")
    scan.add_argument("--samples", type=int, required=True, help="geometric grid size (>= 2)")
    scan.add_argument("--jobs", type=int, default=1, help="parallel workers")
    scan.set_defaults(func=_scan)

    find = commands.add_parser("find", parents=[common], help="first equilibria in z0")
    find.add_argument("--count", type=int, required=True, help="number of equilibria (>= 1)")
    find.add_argument("--z-start", type=float, default=ScanConfig.z_start,
                      help="first height of the expanding grid")
    find.add_argument("--ratio", type=float, default=ScanConfig.ratio,
                      help="geometric growth factor of the grid")
    find.add_argument("--jobs", type=int, default=1, help="parallel workers")
    find.set_defaults(func=_find)

    energy = commands.add_parser("energy", parents=[common], help="functionals of one surface")
    energy.add_argument("target", nargs="?", choices=["hemisphere"], default=None,
                        help="closed-form hemisphere instead of a profile")
    energy.add_argument("--profile", default=None, help="profile CSV written by integrate")
    energy.add_argument("--z0", type=float, default=None, help="initial height to integrate")
    energy.add_argument("--R", type=float, default=1.0, help="hemisphere radius")
    energy.add_argument("--both-methods", action=argparse.BooleanOptionalAction, default=True,
                        help="also compute A_R by the counterterm limit")
    energy.set_defaults(func=_energy)

    verify = commands.add_parser("verify", parents=[common], help="certify one profile")
    verify.add_argument("--z0", type=float, required=True, help="initial height (nonzero)")
    verify.set_defaults(func=_verify)

    export = commands.add_parser("export", parents=[common], help="mesh of one profile")
    export.add_argument("--z0", type=float, required=True, help="initial height (nonzero)")
    export.add_argument("--reflect", action="store_true", help="double by reflection in z = 0")
    export.add_argument("--ball", action="store_true", help="map to the ball model")
    export.add_argument("--ntheta", type=int, default=64, help="angular samples")
    export.add_argument("--nsigma", type=int, default=64, help="rings from pole to boundary")
    export.set_defaults(func=_export)

    oracle = commands.add_parser("oracle", parents=[common], help="closed-form hemisphere energies")
    oracle.add_argument("target", choices=["hemisphere"], help="oracle family")
    oracle.add_argument("--R", type=float, required=True, help="hemisphere radius")
    oracle.set_defaults(func=_oracle)
    return parser


def dispatch(argv) -> int:
    """
    Run one command line

    Args:
        argv: Arguments without the program name
    Returns:
        Exit code: 0 success, 1 invalid input, 2 numerical or file failure
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", force=True)
    run = None
    try:
        run = Run(RunConfig.from_args(args))
        args.func(run)
    except UsageError as err:
        parser.subcommands[args.command].print_usage(sys.stderr)
        print(f"{args.command}: invalid input: {err}", file=sys.stderr)
        return EXIT_INVALID
    except ValidationError as err:
        print(f"{args.command}: invalid input: {err}", file=sys.stderr)
        return EXIT_INVALID
    except (NumericalFailure, IoFailure) as err:
        stage = run.stage if run else "setup"
        print(f"{args.command}: {stage} failed: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK
