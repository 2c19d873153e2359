import argparse
import io
import json
import sys
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from tendonplan.ahp import (
    DEFAULT_IMPORTANCE,
    GROUP_PRIORITIES,
    consistency,
    group_for_priorities,
    group_weights,
    matrix_from_priorities,
)
from tendonplan.bench import (
    ALL_GROUPS,
    PlanRequest,
    criteria_analysis,
    emit_criteria,
    emit_report,
    plan,
    run_bench,
)
from tendonplan.config import Settings, load_settings
from tendonplan.env import DUMP_COLUMNS, build_global_env, build_section_env
from tendonplan.errors import TendonPlanError, UsageError
from tendonplan.planner.ga import GaConfig
from tendonplan.planner.tuning import tune_ga
from tendonplan.types import ALGOS, CRITERIA
from tendonplan.types.plan import PlanResult
from tendonplan.utils import format_path, logger, parse_id_list, write_text
from tendonplan.utils.logging import configure_logging
from tendonplan.wear import WearState, apply_path, dumps, open_store

Command = Literal["env", "weights", "wear", "plan", "bench", "tune"]

EXIT_OK, EXIT_USAGE, EXIT_RUNTIME = 0, 1, 2


class CliConfig(BaseModel):
    """
    Parsed command line.

    Attributes:
        command (Command): The subcommand.
        options (Dict[str, Any]): Subcommand flags, with node pairs and priorities already parsed.
        wear_file (Optional[str]): Wear store locator; falls back to settings.
        seed (Optional[int]): Base seed; falls back to ``TENDONPLAN_SEED`` and settings.
        output (str): Output file, ``-`` for standard output.
        config_file (Optional[str]): YAML settings file.
        log_level (Optional[str]): Log level; falls back to settings.
    """

    command: Command
    options: Dict[str, Any] = Field(default_factory=dict)
    wear_file: Optional[str] = None
    seed: Optional[int] = None
    output: str = "-"
    config_file: Optional[str] = None
    log_level: Optional[str] = None

    model_config = ConfigDict(frozen=True)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _node_pair(text: str) -> Tuple[int, int]:
    start, sep, goal = text.partition(":")
    try:
        if not sep:
            raise ValueError
        pair = (int(start), int(goal))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected START:GOAL node ids, got {text!r}")
    size = len(build_section_env())
    for node_id in pair:
        if not 0 <= node_id < size:
            raise argparse.ArgumentTypeError(f"node id {node_id} out of range 0..{size - 1}")
    return pair


def _group(text: str) -> int:
    try:
        group = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer group, got {text!r}")
    if group not in GROUP_PRIORITIES:
        raise argparse.ArgumentTypeError(f"group must be in 1..15, got {group}")
    return group


def _priorities(text: str) -> Tuple[bool, ...]:
    """``d,m,w,a`` flags, e.g. ``1,0,0,1`` prioritizes distance and accuracy."""
    try:
        values = parse_id_list(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))
    if len(values) != len(CRITERIA) or any(v not in (0, 1) for v in values):
        raise argparse.ArgumentTypeError(
            f"expected {len(CRITERIA)} comma-separated 0/1 flags, got {text!r}"
        )
    return tuple(bool(v) for v in values)


def _count(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _groups(text: str) -> List[int]:
    try:
        groups = parse_id_list(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))
    if not groups:
        raise argparse.ArgumentTypeError("expected at least one group")
    for group in groups:
        if group not in GROUP_PRIORITIES:
            raise argparse.ArgumentTypeError(f"group must be in 1..15, got {group}")
    return groups


def _add_weight_flags(parser: argparse.ArgumentParser) -> None:
    choice = parser.add_mutually_exclusive_group()
    choice.add_argument("--group", type=_group, help="criteria group 1..15")
    choice.add_argument(
        "--priorities",
        type=_priorities,
        help="prioritized criteria as d,m,w,a 0/1 flags (distance, motor, mechanical, accuracy)",
    )
    parser.add_argument(
        "--raw-equal-weights",
        action="store_true",
        help="group 15 as unit weights (1,1,1,1) instead of 0.25 each",
    )
    parser.add_argument(
        "--importance",
        type=int,
        default=DEFAULT_IMPORTANCE,
        help="Saaty intensity of a prioritized criterion (default: %(default)s)",
    )


def _add_request_flags(parser: argparse.ArgumentParser) -> None:
    _add_weight_flags(parser)
    parser.add_argument("--lower", type=_node_pair, default=(50, 3), help="lower START:GOAL")
    parser.add_argument("--upper", type=_node_pair, default=(47, 14), help="upper START:GOAL")
    parser.add_argument(
        "--alternatives",
        action="store_true",
        help="also plan to the 3 nodes nearest each goal and keep the cheapest",
    )
    parser.add_argument("--population", type=int, help="GA population size")
    parser.add_argument("--generations", type=int, help="GA generations")
    parser.add_argument("--mutation-rate", type=float, help="GA mutation probability")
    parser.add_argument("--max-len", type=int, help="GA longest initial walk in edges")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="tendonplan",
        description="Resilient path planning for a two-section tendon-driven continuum robot.",
    )
    parser.add_argument("--wear-file", help="wear store: JSON path, sqlite path or database URL")
    parser.add_argument("--seed", type=int, help="base seed (fallback: TENDONPLAN_SEED)")
    parser.add_argument("--output", default="-", help="output file (default: standard output)")
    parser.add_argument("--config", dest="config_file", help="YAML settings file")
    parser.add_argument("--log-level", help="debug, info, warning or error")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    env = commands.add_parser("env", help="describe the section environment")
    env.add_argument("--dump", action="store_true", help="CSV of all nodes and their neighbors")

    weights = commands.add_parser("weights", help="criteria weights of a group")
    _add_weight_flags(weights)

    wear = commands.add_parser("wear", help="inspect or update the wear store")
    wear_commands = wear.add_subparsers(dest="action", required=True, metavar="ACTION")
    wear_commands.add_parser("show", help="print the wear state")
    wear_commands.add_parser("reset", help="reset the store to a pristine robot")
    wear_apply = wear_commands.add_parser("apply", help="record a traversed path")
    wear_apply.add_argument("--section", type=int, choices=(0, 1), required=True)
    wear_apply.add_argument("--path", required=True, help="comma-separated node ids")

    plan_parser = commands.add_parser("plan", help="plan both sections")
    plan_parser.add_argument("--algo", choices=ALGOS, default="astar")
    plan_parser.add_argument("--format", choices=("json", "text"), default="json")
    _add_request_flags(plan_parser)

    bench = commands.add_parser("bench", help="compare the planners over criteria groups")
    bench.add_argument("--groups", type=_groups, help="comma-separated groups (default: all)")
    bench.add_argument("--runs", type=_count, help="repetitions per group")
    bench.add_argument("--algos", help=f"comma-separated subset of {','.join(ALGOS)}")
    bench.add_argument("--format", choices=("csv", "json"), default="csv")
    bench.add_argument("--workers", type=_count, help="worker threads")
    bench.add_argument("--progress", action="store_true", help="progress bar on stderr")
    bench.add_argument(
        "--criteria",
        action="store_true",
        help="path table per criteria group instead of timing statistics",
    )
    _add_request_flags(bench)

    tune = commands.add_parser("tune", help="search GA settings with optuna")
    tune.add_argument("--trials", type=_count, default=20)
    tune.add_argument("--runs", type=_count, default=5, help="repetitions per trial")
    _add_request_flags(tune)
    return parser


def parse_args(argv: Sequence[str]) -> CliConfig:
    """
    Parse the command line.

    Raises:
        UsageError: On unknown flags, missing arguments or out-of-range values.
    """
    namespace = vars(build_parser().parse_args(list(argv)))
    command = namespace.pop("command")
    common = {
        key: namespace.pop(key)
        for key in ("wear_file", "seed", "output", "config_file", "log_level")
    }
    if namespace.get("algos") is not None:
        algos = [a.strip() for a in namespace["algos"].split(",") if a.strip()]
        unknown = [a for a in algos if a not in ALGOS]
        if unknown or not algos:
            raise UsageError(f"tendonplan bench: --algos must be a subset of {','.join(ALGOS)}")
        namespace["algos"] = algos
    return CliConfig(command=command, options=namespace, **common)


def _weights_group(options: Dict[str, Any]) -> int:
    if options.get("priorities") is not None:
        return group_for_priorities(options["priorities"])
    if options.get("group") is not None:
        return options["group"]
    return 15


def _request(options: Dict[str, Any], settings: Settings, seed: Optional[int], algo: str) -> PlanRequest:
    overrides = {
        "population_size": options.get("population"),
        "generations": options.get("generations"),
        "mutation_rate": options.get("mutation_rate"),
        "max_len": options.get("max_len"),
    }
    ga = GaConfig.model_validate(
        {**settings.ga.model_dump(), **{k: v for k, v in overrides.items() if v is not None}}
    )
    return PlanRequest(
        lower_start=options["lower"][0],
        lower_goal=options["lower"][1],
        upper_start=options["upper"][0],
        upper_goal=options["upper"][1],
        group_index=_weights_group(options),
        raw_equal_weights=options["raw_equal_weights"],
        importance=options["importance"],
        algo=algo,
        use_alternatives=options["alternatives"],
        rng_seed=seed,
        ga=ga,
    )


def _cmd_env(config: CliConfig, settings: Settings) -> None:
    env = build_global_env()
    if config.options["dump"]:
        frame = pd.DataFrame(env.lower.dump_rows(), columns=list(DUMP_COLUMNS))
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, lineterminator="\n")
        write_text(buffer.getvalue(), config.output)
        return
    summary = {
        "nodes": len(env.lower),
        "edges": env.lower.num_edges,
        "sections": 2,
        "composite_states": env.composite_count,
    }
    write_text(json.dumps(summary, indent=2) + "\n", config.output)


def _cmd_weights(config: CliConfig, settings: Settings) -> None:
    options = config.options
    group = _weights_group(options)
    importance = options["importance"]
    weights = group_weights(group, options["raw_equal_weights"], importance)
    check = consistency(matrix_from_priorities(GROUP_PRIORITIES[group], importance))
    document = {
        "group": group,
        "weights": weights.as_dict(),
        "ci": check.ci,
        "cr": check.cr,
        "lambda_max": check.lambda_max,
    }
    write_text(json.dumps(document, indent=2) + "\n", config.output)


def _cmd_wear(config: CliConfig, settings: Settings, wear_file: str) -> None:
    store = open_store(wear_file)
    action = config.options["action"]
    if action == "reset":
        state = WearState.zero()
        store.save(state)
    elif action == "apply":
        state = apply_path(
            store.load(), config.options["section"], parse_id_list(config.options["path"])
        )
        store.save(state)
    else:
        state = store.load()
    write_text(dumps(state), config.output)


def _format_plan(result: PlanResult) -> str:
    lines = [
        f"algo: {result.algo}",
        f"lower: {format_path(result.lower_path.nodes)} (goal {result.lower.target_goal})",
        f"upper: {format_path(result.upper_path.nodes)} (goal {result.upper.target_goal})",
    ]
    for name in ("f_distance", "f_motor", "f_mech", "f_accuracy", "total"):
        lines.append(f"{name}: {getattr(result.breakdown, name):.6f}")
    return "\n".join(lines) + "\n"


def _cmd_plan(config: CliConfig, settings: Settings, wear_file: str, seed: Optional[int]) -> None:
    options = config.options
    request = _request(options, settings, seed, options["algo"])
    wear = open_store(wear_file).load()
    result = plan(request, wear)
    logger.info("plan.elapsed", algo=result.algo, elapsed=result.elapsed)
    if options["format"] == "text":
        text = _format_plan(result)
    else:
        text = json.dumps(result.to_output(), indent=2) + "\n"
    write_text(text, config.output)


def _cmd_bench(config: CliConfig, settings: Settings, wear_file: str, seed: Optional[int]) -> None:
    options = config.options
    template = _request(options, settings, seed, "astar")
    groups = list(ALL_GROUPS) if options["groups"] is None else options["groups"]
    algos = options["algos"] or list(ALGOS)
    wear = open_store(wear_file).load()
    if options["criteria"]:
        analysis = criteria_analysis(template, groups, algos, wear)
        emit_criteria(analysis, options["format"], config.output)
        return
    report = run_bench(
        groups,
        template,
        settings.runs if options["runs"] is None else options["runs"],
        algos=algos,
        wear=wear,
        workers=settings.workers if options["workers"] is None else options["workers"],
        progress=options["progress"],
    )
    emit_report(report, options["format"], config.output)


def _cmd_tune(config: CliConfig, settings: Settings, wear_file: str, seed: Optional[int]) -> None:
    options = config.options
    request = _request(options, settings, seed, "ga")
    wear = open_store(wear_file).load()
    result = tune_ga(request, options["trials"], options["runs"], seed, wear)
    write_text(result.model_dump_json(indent=2) + "\n", config.output)


def main(config: CliConfig) -> int:
    """
    Run a parsed command.

    Returns:
        int: 0 on success, 1 on user errors, 2 on runtime and I/O errors.
    """
    try:
        settings = load_settings(config.config_file)
        configure_logging(
            config.log_level or settings.log_level, settings.log_format, settings.log_file
        )
        wear_file = config.wear_file or settings.wear_file
        seed = config.seed if config.seed is not None else settings.seed
        logger.debug("cli.start", command=config.command, seed=seed, wear_file=wear_file)

        if config.command == "env":
            _cmd_env(config, settings)
        elif config.command == "weights":
            _cmd_weights(config, settings)
        elif config.command == "wear":
            _cmd_wear(config, settings, wear_file)
        elif config.command == "plan":
            _cmd_plan(config, settings, wear_file, seed)
        elif config.command == "bench":
            _cmd_bench(config, settings, wear_file, seed)
        else:
            _cmd_tune(config, settings, wear_file, seed)
    except (ValueError, ValidationError) as e:
        print(f"tendonplan: error: {_one_line(e)}", file=sys.stderr)
        return EXIT_USAGE
    except (RuntimeError, OSError, TendonPlanError) as e:
        print(f"tendonplan: error: {_one_line(e)}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


def _one_line(error: Exception) -> str:
    return " ".join(str(error).split()) or type(error).__name__


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        config = parse_args(argv)
    except UsageError as e:
        print(f"{e}", file=sys.stderr)
        return EXIT_USAGE
    return main(config)
