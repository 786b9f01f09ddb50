"""Command-line entry point: JSON in, deterministic JSON or text out."""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any

import sympy
from pydantic import BaseModel, ValidationError

from .arrangements.building import BuildingSet, arrangement, factors
from .arrangements.documents import BuildingSetDocument
from .arrangements.nests import Nest, check_weighted_building_set, enumerate_nests
from .arrangements.tableau import tableau_render
from .blowup.building import (
    building_blow_down,
    building_chart_fwd,
    building_chart_inv,
    building_transition,
    control_set,
    weak_singularity,
)
from .blowup.perspective import GoodPerspective, PerspectiveDocument, enumerate_perspectives
from .blowup.points import BlowupPoint
from .blowup.projective import projective_canonicalize, projective_is_singular
from .bundlejet.jets import (
    JetBlown2,
    JetPair2,
    holonomic_predicate,
    jet_blow_down,
    jet_chart,
    jet_limit,
    jet_offsets,
)
from .common.hashing import file_hash
from .common.numbers import format_exact, format_float, format_rational, to_sympy
from .config import DEFAULT_SETTINGS
from .documents import (
    CommandOutput,
    ConfigurationDocument,
    CurvesDocument,
    ErrorOutput,
    ForestDocument,
    JetLimitDocument,
    PointDocument,
)
from .enums import HolonomicMode, OutputFormat, SuiteKind
from .errors import DomainError, SchemaVersionError
from .fm.forest import Forest, controls, covering_forest
from .fm.indices import fm_building_set, index_label, names_to_nest
from .fm.limits import curve_limit
from .fm.model import FMModelPoint, fm_blow_down, fm_chart
from .fm.screens import screens_render
from .jets.weights import WeightVector
from .verify.suite import run_suite
from .versioning import SCHEMA_VERSION, VersionedSchema

logger: logging.Logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3


class Failed(Exception):
    """A verification command ran but its checks failed."""

    def __init__(self, result: Any):
        super().__init__("verification failed")
        self.result = result


def jsonable(value: Any) -> Any:
    """Plain JSON data with rationals as 'p/q' and floats at 17 significant digits."""
    if isinstance(value, BaseModel):
        return jsonable(value.model_dump(mode="json"))
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, sympy.Basic):
        return format_exact(value)
    if isinstance(value, dict):
        return {("null" if k is None else str(k)): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in value]
    return str(value)


def render_text(value: Any) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return "\n".join(f"{k}: {v if isinstance(v, str) else _dumps(v)}" for k, v in value.items())
    if isinstance(value, list):
        return "\n".join(v if isinstance(v, str) else _dumps(v) for v in value)
    return _dumps(value)


def _dumps(value: Any) -> str:
    return json.dumps(value, ensure_ascii=False)


class Inputs:
    """Reads input files once and remembers their hashes."""

    def __init__(self) -> None:
        self.hashes: dict[str, str] = {}

    def text(self, path: str) -> str:
        p = Path(path)
        self.hashes[path] = file_hash(p)
        return p.read_text(encoding="utf-8")

    def model(self, cls: type[BaseModel], path: str) -> Any:
        doc = cls.model_validate_json(self.text(path))
        if isinstance(doc, VersionedSchema) and not doc.is_compatible(SCHEMA_VERSION):
            raise SchemaVersionError(
                f"{path} has schema version {doc.schema_version}; this tool reads {SCHEMA_VERSION}."
            )
        return doc

    def building_set(self, path: str) -> BuildingSet:
        return self.model(BuildingSetDocument, path).to_building_set()

    def perspective(self, bs: BuildingSet, path: str) -> GoodPerspective:
        return self.model(PerspectiveDocument, path).to_perspective(bs)


def _weights(values: Sequence[int]) -> WeightVector:
    return WeightVector(weights=tuple(values))


def name_index(item: str) -> tuple[str, int]:
    key, _, value = item.partition("=")
    if not key or not value.lstrip("-").isdigit():
        raise argparse.ArgumentTypeError(f"Expected NAME=INDEX, got {item!r}.")
    return key, int(value)


def _pairs(items: Sequence[tuple[str, int]] | None) -> dict[str, int]:
    return dict(items or [])


def _components(point: BlowupPoint) -> dict[str, Any]:
    return {name: jsonable(c) for name, c in point.components.items()}


# building sets and charts


def cmd_check(args: argparse.Namespace, inputs: Inputs) -> Any:
    bs = inputs.building_set(args.building_set)
    report = check_weighted_building_set(bs)
    result = {
        "separated": report.separated,
        "separation_witness": report.separation_witness,
        "uniformly_aligned": report.uniformly_aligned,
        "weighted_valid": report.passed,
        "report": jsonable(report),
    }
    if not (report.separated and report.passed):
        raise Failed(result)
    return result


def cmd_nests(args: argparse.Namespace, inputs: Inputs) -> Any:
    bs = inputs.building_set(args.building_set)
    return [list(n.members) for n in enumerate_nests(bs, cap=args.cap)]


def cmd_factors(args: argparse.Namespace, inputs: Inputs) -> Any:
    bs = inputs.building_set(args.building_set)
    return list(factors(bs, arrangement(bs).get(args.element)))


def cmd_tableau(args: argparse.Namespace, inputs: Inputs) -> Any:
    bs = inputs.building_set(args.building_set)
    return tableau_render(bs, Nest.of(bs, args.nest), _pairs(args.h) or None)


def cmd_perspectives(args: argparse.Namespace, inputs: Inputs) -> Any:
    bs = inputs.building_set(args.building_set)
    nest = Nest.of(bs, args.nest)
    return [jsonable(PerspectiveDocument.from_perspective(p)) for p in enumerate_perspectives(bs, nest)]


def _chart_inputs(args: argparse.Namespace, inputs: Inputs) -> tuple[BuildingSet, GoodPerspective]:
    bs = inputs.building_set(args.building_set)
    return bs, inputs.perspective(bs, args.perspective)


def _corner(args: argparse.Namespace, inputs: Inputs) -> list[sympy.Expr]:
    return inputs.model(PointDocument, args.point).coords


def cmd_chart(args: argparse.Namespace, inputs: Inputs) -> Any:
    _, persp = _chart_inputs(args, inputs)
    if args.inverse:
        return _components(building_chart_inv(persp, _corner(args, inputs)))
    return jsonable(building_chart_fwd(persp, inputs.model(BlowupPoint, args.point)))


def cmd_blowdown(args: argparse.Namespace, inputs: Inputs) -> Any:
    _, persp = _chart_inputs(args, inputs)
    return jsonable(building_blow_down(persp, _corner(args, inputs)))


def cmd_transition(args: argparse.Namespace, inputs: Inputs) -> Any:
    bs, persp = _chart_inputs(args, inputs)
    return jsonable(building_transition(persp, _corner(args, inputs), inputs.perspective(bs, args.to)))


def cmd_control_set(args: argparse.Namespace, inputs: Inputs) -> Any:
    _, persp = _chart_inputs(args, inputs)
    return list(control_set(persp, _corner(args, inputs)))


def cmd_weak_singular(args: argparse.Namespace, inputs: Inputs) -> Any:
    _, persp = _chart_inputs(args, inputs)
    return weak_singularity(persp, _corner(args, inputs))


# FM


def _forest(args: argparse.Namespace, inputs: Inputs, nest: Any) -> Forest:
    if getattr(args, "forest", None):
        doc = inputs.model(ForestDocument, args.forest)
        return Forest(s=doc.s, parent=doc.parent)
    return covering_forest(nest, _pairs(getattr(args, "prefer", None)))


def cmd_fm_building_set(args: argparse.Namespace, inputs: Inputs) -> Any:
    return jsonable(BuildingSetDocument.from_building_set(fm_building_set(args.s, args.m)))


def cmd_fm_forest(args: argparse.Namespace, inputs: Inputs) -> Any:
    nest = names_to_nest(args.s, args.nest)
    forest = _forest(args, inputs, nest)
    ct = controls(forest, nest)
    return {
        "parent": {str(k): v for k, v in sorted(forest.parent.items())},
        "roots": forest.roots(),
        "controls": {index_label(m): list(c) for m, c in ct.items()},
    }


def cmd_fm_chart(args: argparse.Namespace, inputs: Inputs) -> Any:
    config = inputs.model(ConfigurationDocument, args.config)
    nest = names_to_nest(len(config.points), args.nest)
    return jsonable(fm_chart(_weights(args.weights), nest, config.points, _forest(args, inputs, nest)))


def cmd_fm_blowdown(args: argparse.Namespace, inputs: Inputs) -> Any:
    return jsonable(fm_blow_down(inputs.model(FMModelPoint, args.point)))


def cmd_fm_limit(args: argparse.Namespace, inputs: Inputs) -> Any:
    curves = inputs.model(CurvesDocument, args.curves).curves
    return jsonable(curve_limit(_weights(args.weights), curves))


def cmd_fm_screens(args: argparse.Namespace, inputs: Inputs) -> Any:
    return screens_render(inputs.model(FMModelPoint, args.point))


# projective and jets


def cmd_proj(args: argparse.Namespace, inputs: Inputs) -> Any:
    w = _weights(args.weights)
    normal = [to_sympy(x) for x in args.normal]
    if args.action == "canonicalize":
        return jsonable(projective_canonicalize(w, normal))
    return projective_is_singular(w, projective_canonicalize(w, normal))


def cmd_jet(args: argparse.Namespace, inputs: Inputs) -> Any:
    if args.action == "offsets":
        return jsonable(jet_offsets(inputs.model(JetPair2, args.input)))
    if args.action == "chart":
        return jsonable(jet_chart(inputs.model(JetPair2, args.input)))
    if args.action == "blowdown":
        return jsonable(jet_blow_down(inputs.model(JetBlown2, args.input)))
    if args.action == "limit":
        doc = inputs.model(JetLimitDocument, args.input)
        return jsonable(jet_limit(doc.function, *doc.curves))
    mode = HolonomicMode(args.mode)
    if mode == HolonomicMode.LITERAL:
        logger.warning(
            "Literal holonomicity uses dy = dy'(dx); limits of prolonged sections satisfy dy = %s dy'(dx)",
            format_rational(DEFAULT_SETTINGS.holonomic_constant),
        )
    return holonomic_predicate(inputs.model(JetBlown2, args.input), mode)


def cmd_verify(args: argparse.Namespace, inputs: Inputs) -> Any:
    report = run_suite(SuiteKind(args.suite), args.seed)
    if not report.passed:
        raise Failed(jsonable(report))
    return jsonable(report)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weighted-blowups",
        description="Weighted blow-ups of building sets and the weighted Fulton-MacPherson space",
    )
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value)
    parser.add_argument("--seed", type=int, default=DEFAULT_SETTINGS.seed)
    parser.add_argument("--log-level", default="WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[..., Any], parent: Any = sub, **kwargs: Any) -> argparse.ArgumentParser:
        p = parent.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        return p

    p = command("check", cmd_check, help="Separation, uniform alignment and weighted validity")
    p.add_argument("building_set")
    p = command("nests", cmd_nests, help="All nests of a building set")
    p.add_argument("building_set")
    p.add_argument("--cap", type=int, default=None)
    p = command("factors", cmd_factors, help="Factors of an arrangement element")
    p.add_argument("building_set")
    p.add_argument("--element", required=True)
    p = command("tableau", cmd_tableau, help="Tableau of a nest")
    p.add_argument("building_set")
    p.add_argument("--nest", nargs="+", required=True)
    p.add_argument("--h", nargs="*", metavar="NAME=INDEX", type=name_index)
    p = command("perspectives", cmd_perspectives, help="Good perspectives of a nest")
    p.add_argument("building_set")
    p.add_argument("--nest", nargs="+", required=True)

    for name, handler in (
        ("chart", cmd_chart),
        ("blowdown", cmd_blowdown),
        ("transition", cmd_transition),
        ("control-set", cmd_control_set),
        ("weak-singular", cmd_weak_singular),
    ):
        p = command(name, handler)
        p.add_argument("building_set")
        p.add_argument("perspective")
        p.add_argument("--point", required=True)
        if name == "chart":
            p.add_argument("--inverse", action="store_true")
        if name == "transition":
            p.add_argument("--to", required=True, help="Target perspective file")

    fm = sub.add_parser("fm", help="Weighted Fulton-MacPherson model").add_subparsers(dest="action", required=True)
    p = command("building-set", cmd_fm_building_set, fm)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p = command("forest", cmd_fm_forest, fm)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--nest", nargs="*", default=[])
    p.add_argument("--prefer", nargs="*", metavar="LABEL=ROOT", type=name_index)
    p.add_argument("--forest")
    p = command("chart", cmd_fm_chart, fm)
    p.add_argument("--weights", type=int, nargs="+", required=True)
    p.add_argument("--nest", nargs="*", default=[])
    p.add_argument("--config", required=True)
    p.add_argument("--prefer", nargs="*", metavar="LABEL=ROOT", type=name_index)
    p.add_argument("--forest")
    p = command("blowdown", cmd_fm_blowdown, fm)
    p.add_argument("--point", required=True)
    p = command("limit", cmd_fm_limit, fm)
    p.add_argument("--weights", type=int, nargs="+", required=True)
    p.add_argument("--curves", required=True)
    p = command("screens", cmd_fm_screens, fm)
    p.add_argument("--point", required=True)

    proj = sub.add_parser("proj", help="Projective blow-up classes").add_subparsers(dest="action", required=True)
    for action in ("canonicalize", "singular"):
        p = command(action, cmd_proj, proj)
        p.add_argument("--weights", type=int, nargs="+", required=True)
        p.add_argument("--normal", nargs="+", required=True)

    jet = sub.add_parser("jet", help="Blow-up of 2-jet pairs").add_subparsers(dest="action", required=True)
    for action in ("offsets", "chart", "blowdown", "limit", "holonomic"):
        p = command(action, cmd_jet, jet)
        p.add_argument("input")
        if action == "holonomic":
            p.add_argument("--mode", choices=[m.value for m in HolonomicMode], default=HolonomicMode.LITERAL.value)

    p = command("verify", cmd_verify, help="Seeded verification suites")
    p.add_argument("suite", choices=[k.value for k in SuiteKind])
    return parser


def _emit(payload: Any, fmt: str) -> None:
    if fmt == OutputFormat.TEXT and isinstance(payload, CommandOutput):
        sys.stdout.write(render_text(payload.result) + "\n")
        return
    data = payload.model_dump(mode="json") if isinstance(payload, BaseModel) else payload
    sys.stdout.write(json.dumps(data, ensure_ascii=False, indent=2) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    inputs = Inputs()
    command = " ".join(filter(None, (args.command, getattr(args, "action", None), getattr(args, "suite", None))))
    try:
        result = args.handler(args, inputs)
        code = EXIT_OK
    except Failed as failure:
        result, code = failure.result, EXIT_VERIFICATION
    except ValidationError as exc:
        details = [{"loc": [str(x) for x in e["loc"]], "msg": e["msg"]} for e in exc.errors()]
        _emit(ErrorOutput(error="ValidationError", message=str(exc.title), details=details), args.format)
        return EXIT_PARSE
    except (json.JSONDecodeError, OSError, SchemaVersionError) as exc:
        _emit(ErrorOutput(error=type(exc).__name__, message=str(exc)), args.format)
        return EXIT_PARSE
    except DomainError as exc:
        _emit(ErrorOutput(**exc.to_dict()), args.format)
        return EXIT_DOMAIN
    seed = args.seed if args.command == "verify" else None
    _emit(CommandOutput(command=command, input_hashes=inputs.hashes, seed=seed, result=jsonable(result)), args.format)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
