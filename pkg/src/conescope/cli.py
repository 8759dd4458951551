"""Config-driven experiment runner.

    conescope --config cfg.json --command ray --out reports/

Every diagnostic is a command; the config is a strict JSON document (unknown
keys are rejected) naming the group, the order, the automaton and the
numeric parameters. Reports are written as JSON plus a text summary and are
byte-identical across repeated runs.

Exit codes: 0 pass/certified, 1 fail/not-separating, 2 unknown/evidence,
3 usage or configuration error.

Environment: CONESCOPE_CAP overrides the enumeration cap, CONESCOPE_TRAVERSAL
("forward" or "reverse") flips the internal traversal order; outputs must
not change with it.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import __version__
from .automata import (
    ConeDfa,
    connectivity_radius,
    quasigeodesic_check,
    regular_interpolation,
    verify_cone_dfa,
)
from .dot import export_dot
from .errors import (
    ConescopeError,
    ConfigError,
    FactorNotConnectedAtScale,
    NoDeclaredCofinalCenter,
    NotAccepted,
    PathNotFound,
    WitnessNotFound,
)
from .geometry import (
    SurveyClass,
    Verdict,
    cofinal_positive_path,
    connectivity_survey,
    product_column_swamp,
    r_components,
    tree_swamp_certificate,
    verify_maxima_ray,
    verify_separation,
)
from .groups import DEFAULT_CAP, DirectProduct, FreeGroup, model_from_descriptor
from .orders import order_from_descriptor, verify_order_axioms
from .words import parse_word

COMMANDS = ("axioms", "ray", "components", "swamp", "survey", "cofinal-path",
            "dfa-verify", "dfa-path", "dfa-qg", "export-dot")

# one config document serves every command; commands read what they need
KNOWN_KEYS = {"group", "order", "name", "dfa", "radius", "width", "radii",
              "search_radius", "lmax", "lambda", "c", "word", "pair",
              "pairs", "seed"}

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3


def _require(config: dict, key: str):
    if key not in config:
        raise ConfigError(f"config key {key!r} is required for this command")
    return config[key]


def _load_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    return data


def _load_dfa(spec, config_dir: Path) -> ConeDfa:
    if isinstance(spec, str):
        try:
            with open(config_dir / spec, "r", encoding="utf-8") as fh:
                spec = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read DFA file {spec}: {exc}") from exc
    if not isinstance(spec, dict):
        raise ConfigError("dfa must be an inline object or a file path")
    try:
        return ConeDfa.from_json(spec)
    except (KeyError, ValueError, TypeError) as exc:
        raise ConfigError(f"bad DFA description: {exc}") from exc


class Runner:
    def __init__(self, config: dict, command: str, overrides: dict,
                 config_dir: Path):
        if command not in COMMANDS:
            raise ConfigError(f"unknown command {command!r}")
        unknown = set(config) - KNOWN_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        self.command = command
        self.config = dict(config)
        for key, value in overrides.items():
            if value is not None:
                self.config[key] = value
        self.config_dir = config_dir
        self.cap = int(os.environ.get("CONESCOPE_CAP", DEFAULT_CAP))
        self.traversal = os.environ.get("CONESCOPE_TRAVERSAL", "forward")
        if self.traversal not in ("forward", "reverse"):
            raise ConfigError("CONESCOPE_TRAVERSAL must be forward or reverse")

    # -- config pieces ------------------------------------------------------

    def model(self):
        try:
            return model_from_descriptor(_require(self.config, "group"))
        except (ValueError, TypeError, KeyError) as exc:
            raise ConfigError(f"bad group descriptor: {exc}") from exc

    def oracle(self):
        model = self.model()
        try:
            return order_from_descriptor(_require(self.config, "order"), model)
        except (ValueError, TypeError, KeyError, ConescopeError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"bad order descriptor: {exc}") from exc

    def int_param(self, key: str, default=None) -> int:
        if key not in self.config:
            if default is None:
                raise ConfigError(f"config key {key!r} is required")
            return default
        try:
            return int(self.config[key])
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"config key {key!r} must be an integer") from exc

    # -- dispatch ------------------------------------------------------------

    def run(self) -> tuple[int, dict, str]:
        handler = getattr(self, "cmd_" + self.command.replace("-", "_"))
        return handler()

    def cmd_axioms(self):
        oracle = self.oracle()
        radius = self.int_param("radius")
        report = verify_order_axioms(oracle, radius, cap=self.cap,
                                     traversal=self.traversal)
        code = EXIT_PASS if report.passed else EXIT_FAIL
        payload = {
            "passed": report.passed,
            "checked": report.checked,
            "partition_failures": list(report.partition_failures),
            "identity_failures": list(report.identity_failures),
            "closure_failures": list(report.closure_failures),
        }
        return code, payload, report.summary()

    def cmd_ray(self):
        oracle = self.oracle()
        depth = self.int_param("radius")
        report = verify_maxima_ray(oracle, depth, cap=self.cap)
        code = EXIT_PASS if report.passed else EXIT_FAIL
        payload = {
            "passed": report.passed,
            "maxima": [str(g) for g in report.maxima],
            "length_failures": list(report.length_failures),
            "successor_failures": list(report.successor_failures),
            "geodesic_failures": list(report.geodesic_failures),
            "negativity_failures": list(report.negativity_failures),
        }
        return code, payload, report.summary()

    def cmd_components(self):
        oracle = self.oracle()
        radius = self.int_param("radius")
        width = self.int_param("width", 1)
        report = r_components(oracle, width, radius, cap=self.cap,
                              traversal=self.traversal)
        payload = {
            "count": report.count,
            "sizes": [len(c) for c in report.components],
            "representatives": [str(g) for g in report.representatives],
        }
        return EXIT_PASS, payload, report.summary()

    def cmd_swamp(self):
        oracle = self.oracle()
        width = self.int_param("width", 1)
        model = oracle.model
        try:
            if isinstance(model, FreeGroup):
                search = self.int_param("search_radius", width + 8)
                cert = tree_swamp_certificate(oracle, width,
                                              search_radius=search,
                                              cap=self.cap)
                result = verify_separation(cert, model, cap=self.cap)
            elif isinstance(model, DirectProduct):
                radius = self.int_param("radius", width + 4)
                cert = product_column_swamp(oracle, width, radius, cap=self.cap)
                result = verify_separation(cert, model, radius=radius,
                                           cap=self.cap)
            else:
                raise ConfigError(
                    "swamp construction needs a free group or a product model")
        except WitnessNotFound as exc:
            return EXIT_UNKNOWN, {"error": str(exc)}, f"swamp: {exc}"
        codes = {Verdict.CERTIFIED_TREE: EXIT_PASS,
                 Verdict.CERTIFIED_EXHAUSTIVE: EXIT_PASS,
                 Verdict.EVIDENCE: EXIT_UNKNOWN,
                 Verdict.NOT_SEPARATING: EXIT_FAIL}
        payload = cert.to_json()
        payload["separation"] = result.verdict.value
        if result.avoiding_path is not None:
            payload["avoiding_path"] = result.avoiding_path.words()
        summary = cert.summary() + "; " + result.summary()
        return codes[result.verdict], payload, summary

    def cmd_survey(self):
        oracle = self.oracle()
        width = self.int_param("width", 1)
        radii = self.config.get("radii")
        if not isinstance(radii, list) or not radii:
            raise ConfigError("survey needs a non-empty list of radii")
        report = connectivity_survey(oracle, width, [int(R) for R in radii],
                                     cap=self.cap, traversal=self.traversal)
        codes = {SurveyClass.PRIETO_CONSISTENT: EXIT_PASS,
                 SurveyClass.HUCHA_CERTIFIED: EXIT_PASS,
                 SurveyClass.DISCONNECTION_EVIDENCE: EXIT_UNKNOWN}
        payload = {
            "radii": list(report.radii),
            "counts": list(report.counts),
            "stable": report.stable,
            "classification": report.classification.value,
            "verdict": report.verdict,
        }
        if report.certificate is not None:
            payload["certificate"] = report.certificate.to_json()
        return codes[report.classification], payload, report.summary()

    def cmd_cofinal_path(self):
        oracle = self.oracle()
        model = oracle.model
        pairs = []
        if "pair" in self.config:
            raw = self.config["pair"]
            if not isinstance(raw, list) or len(raw) != 2:
                raise ConfigError("pair must be a two-element list of words")
            pairs.append((model.element(str(raw[0])), model.element(str(raw[1]))))
        elif "pairs" in self.config:
            count = int(self.config["pairs"])
            radius = self.int_param("radius", 4)
            seed = self.int_param("seed", 2026)
            rng = random.Random(seed)
            positives = oracle.positives(model.ball(radius, cap=self.cap))
            if len(positives) < 2:
                raise ConfigError("not enough positive elements to sample")
            for _ in range(count):
                pairs.append((rng.choice(positives), rng.choice(positives)))
        else:
            raise ConfigError("cofinal-path needs 'pair' or 'pairs'")
        results = []
        try:
            for g, h in pairs:
                path = cofinal_positive_path(oracle, g, h)
                results.append({"from": str(g), "to": str(h),
                                "points": path.words()})
        except (NoDeclaredCofinalCenter, PathNotFound, ValueError) as exc:
            return EXIT_UNKNOWN, {"error": str(exc)}, f"cofinal-path: {exc}"
        summary = f"cofinal-path: {len(results)} positive path(s) constructed"
        return EXIT_PASS, {"paths": results}, summary

    def cmd_dfa_verify(self):
        model = self.model()
        dfa = _load_dfa(_require(self.config, "dfa"), self.config_dir)
        radius = self.int_param("radius")
        lmax = self.int_param("lmax", 4 * radius)
        report = verify_cone_dfa(dfa, model, radius, lmax, cap=self.cap,
                                 traversal=self.traversal)
        codes = {"PASS": EXIT_PASS, "FAIL": EXIT_FAIL, "UNKNOWN": EXIT_UNKNOWN}
        payload = {
            "verdict": report.verdict,
            "in_ball": [str(g) for g in report.in_ball],
            "unresolved": [str(g) for g in report.unresolved],
            "counterexamples": list(report.counterexamples),
        }
        return codes[report.verdict], payload, report.summary()

    def cmd_dfa_path(self):
        model = self.model()
        dfa = _load_dfa(_require(self.config, "dfa"), self.config_dir)
        word = parse_word(str(_require(self.config, "word")), model.alphabet)
        try:
            path = regular_interpolation(dfa, model, word)
        except NotAccepted as exc:
            return EXIT_FAIL, {"error": str(exc)}, f"dfa-path: {exc}"
        payload = {
            "points": path.words(),
            "gaps": path.gaps(),
            "bound": connectivity_radius(dfa),
        }
        summary = (f"dfa-path: {len(path.points)} points, max gap "
                   f"{max(path.gaps(), default=0)} <= {connectivity_radius(dfa)}")
        return EXIT_PASS, payload, summary

    def cmd_dfa_qg(self):
        model = self.model()
        dfa = _load_dfa(_require(self.config, "dfa"), self.config_dir)
        lam = self.config.get("lambda", 1)
        c = self.config.get("c", 0)
        lmax = self.int_param("lmax", 8)
        report = quasigeodesic_check(dfa, model, lam, c, lmax, cap=self.cap)
        code = EXIT_PASS if report.verdict == "PASS" else EXIT_FAIL
        payload = {"verdict": report.verdict, "lambda": str(report.lam),
                   "c": str(report.c)}
        if report.violation is not None:
            payload["violation"] = list(report.violation)
        return code, payload, report.summary()

    def cmd_export_dot(self):
        oracle = self.oracle()
        radius = self.int_param("radius")
        width = self.int_param("width", 1)
        dot = export_dot(oracle, width, radius, cap=self.cap,
                         traversal=self.traversal)
        payload = {"dot": dot, "radius": radius, "width": width}
        nodes = dot.count("[label=")
        edges = dot.count(" -- ")
        return EXIT_PASS, payload, f"export-dot: {nodes} nodes, {edges} edges"


def _write_reports(out_dir: Path, command: str, code: int, payload: dict,
                   summary: str, config: dict, timings) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    report = {
        "command": command,
        "tool_version": __version__,
        "inputs": config,
        "exit_code": code,
        "result": payload,
        "timings": timings,
    }
    json_path = out_dir / f"{command}.report.json"
    with open(json_path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    text_path = out_dir / f"{command}.report.txt"
    with open(text_path, "w", encoding="utf-8") as fh:
        fh.write(f"conescope {__version__} :: {command}\n{summary}\n"
                 f"exit code {code}\n")
    if command == "export-dot":
        with open(out_dir / "ball.dot", "w", encoding="utf-8") as fh:
            fh.write(payload["dot"])
    if command == "swamp":
        cert = {k: v for k, v in payload.items()
                if k not in ("separation", "avoiding_path")}
        with open(out_dir / "certificate.json", "w", encoding="utf-8") as fh:
            json.dump(cert, fh, indent=2, sort_keys=True)
            fh.write("\n")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="conescope",
        description="run positive-cone experiments from a JSON config")
    parser.add_argument("--config", required=True, help="path to the JSON config")
    parser.add_argument("--command", required=True,
                        help="one of: " + ", ".join(COMMANDS))
    parser.add_argument("--out", default=".", help="report directory")
    parser.add_argument("--radius", type=int, default=None,
                        help="override the config radius (R or N)")
    parser.add_argument("--width", type=int, default=None,
                        help="override the config width (r)")
    parser.add_argument("--lmax", type=int, default=None,
                        help="override the language length cutoff")
    parser.add_argument("--timings", action="store_true",
                        help="record wall-clock timings in the report "
                             "(breaks byte-for-byte determinism)")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else EXIT_USAGE

    try:
        config = _load_config(args.config)
        runner = Runner(config, args.command,
                        overrides={"radius": args.radius, "width": args.width,
                                   "lmax": args.lmax},
                        config_dir=Path(args.config).resolve().parent)
        if args.timings:
            import time
            started = time.monotonic()
            code, payload, summary = runner.run()
            timings = {"seconds": round(time.monotonic() - started, 3)}
        else:
            code, payload, summary = runner.run()
            timings = None
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConescopeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    _write_reports(Path(args.out), args.command, code, payload, summary,
                   runner.config, timings)
    print(summary)
    return code


if __name__ == "__main__":
    sys.exit(main())
