"""
Command line for clearlab.

    clearlab <command> --ring <descriptor> [--element ..] [--matrix ..] [--property ..]
             [--bound N] [--seed N] [--samples N] [--n-max N] [--format json|text]

Exit status: 0 yes / verified, 1 no / counterexample / other failure, 2 unknown, 64 usage.
"""
import argparse
import sys

from dotenv import load_dotenv

from .classify.predicates import PROPERTIES
from .config import LabSettings, load_settings
from .lab_orchestrator import EXIT_NEGATIVE, EXIT_USAGE, OPEN_QUESTIONS, LabOrchestrator
from .reporting.run_log import RunLog
from .ring_core.errors import ClearLabError, ConfigError, DescriptorError, UsageError
from .survey.propositions import PROPOSITION_ALIASES, PROPOSITIONS

COMMANDS = ("classify", "decompose", "snf", "survey", "check", "oracle")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="clearlab", description="Clean, clear and unit-regular elements of finite rings and 2x2 integer matrices.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--ring", type=str, help='Ring descriptor, e.g. "Z/4", "Z/2 x Z/3", "M2(Z)".')
    parser.add_argument("--element", type=str, help="Element literal: an integer or a (a,b) tuple.")
    parser.add_argument("--matrix", type=str, help='Matrix literal, e.g. "[[1,0],[0,5]]".')
    parser.add_argument("--property", type=str,
                        help=f"classify: one of {', '.join(PROPERTIES)}. check: a proposition name, its catalog id (e.g. P8-2clean) or {OPEN_QUESTIONS}.")
    parser.add_argument("--bound", type=int, default=None, help="Search radius (classify), entry bound (survey) or oracle bound.")
    parser.add_argument("--seed", type=int, default=None, help="Seed for randomized surveys. Required there.")
    parser.add_argument("--samples", type=int, default=None, help="Number of random samples for the M2(Z) survey.")
    parser.add_argument("--n-max", dest="n_max", type=int, default=None, help="Largest n for the Z/n survey.")
    parser.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    parser.add_argument("--config", type=str, default=None, help="Settings file (default: clearlab_config.json).")
    return parser


def _dispatch(orchestrator: LabOrchestrator, args):
    if args.command == "classify":
        if not args.property:
            raise UsageError("classify needs --property")
        if args.property not in PROPERTIES:
            raise UsageError(f"unknown property {args.property!r}; choose from {', '.join(PROPERTIES)}")
        return orchestrator.classify(args.ring, args.element, args.matrix, args.property, args.bound)
    if args.command == "decompose":
        return orchestrator.decompose(args.ring, args.matrix)
    if args.command == "snf":
        return orchestrator.snf(args.ring, args.matrix)
    if args.command == "survey":
        return orchestrator.survey(args.ring, args.n_max, args.samples, args.seed, args.bound)
    if args.command == "check":
        if args.property and args.property != OPEN_QUESTIONS and args.property not in PROPOSITIONS \
                and args.property not in PROPOSITION_ALIASES:
            choices = ", ".join([*PROPOSITIONS, *PROPOSITION_ALIASES])
            raise UsageError(f"unknown proposition {args.property!r}; choose from {choices}")
        return orchestrator.check(args.property, args.ring)
    return orchestrator.oracle(args.ring, args.matrix, args.bound)


def run(argv, settings: LabSettings | None = None, run_log: RunLog | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"Error: {e}", file=stderr)
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return 0 if e.code in (0, None) else EXIT_USAGE

    try:
        settings = settings or load_settings(args.config)
    except ConfigError as e:
        print(f"Error: {e}", file=stderr)
        return EXIT_USAGE
    run_log = run_log or RunLog(settings.log_file, settings.log_dir)
    run_log.record("invocation", command=args.command, argv=list(argv))

    try:
        outcome = _dispatch(LabOrchestrator(settings, run_log), args)
    except (DescriptorError, UsageError) as e:
        print(f"Error: {e}", file=stderr)
        status = EXIT_USAGE
    except ClearLabError as e:
        print(f"Error: {e}", file=stderr)
        status = EXIT_NEGATIVE
    else:
        print(outcome.render(args.fmt), file=stdout)
        status = outcome.exit_code
    run_log.record("exit", command=args.command, status=status)
    return status


def main():
    load_dotenv()
    sys.exit(run(sys.argv[1:]))
