"""Command-line front end: analyze, curvature, spectral, paper-suite, dump-roots.

Conventions: simple-root nodes are 1-based Bourbaki indices on the command
line (0-based internally); weights are full-rank coordinate vectors over
the fundamental weights; every rational in a report is rendered as a
"p/q" string; reports carry a schema_version and are byte-stable for
identical requests.  Exit codes: 0 success, 1 input error, 2 fixture
mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import __version__, linalg
from .bundle import (
    BundleSpec,
    canonical_weight,
    line_bundle_weight,
    splitting_report,
)
from .curvature import KahlerClass, einstein_class, endo_eigenvalues, hym_constant, omega_trace
from .parabolic import (
    FullSetNotParabolicError,
    NotDominantError,
    ParabolicData,
    build_parabolic,
    decompose_weight,
)
from .rootsys import InvalidTypeError, Weight, build_root_system
from .spectral import (
    FlatTorus,
    SingularProfile,
    compatibility_constant,
    distance_profile_coefficients,
    h2_cauchy_gap,
    integrability_check,
    solve_weight,
    spectral_h2_gap,
)

SCHEMA_VERSION = "1"


class ParseError(ValueError):
    """Malformed request tokens; the message names the offending piece."""


class FixtureMismatchError(AssertionError):
    """A reference fixture deviated from its pinned value."""


@dataclass(frozen=True)
class SpectralRequest:
    dim: int
    modes: int
    exponent: float
    codim: int | None = None
    hym: float = 1.0

    def profile(self) -> SingularProfile:
        codim = self.codim if self.codim is not None else self.dim
        return SingularProfile(ambient_dim=self.dim, codim=codim, exponent=self.exponent)


@dataclass(frozen=True)
class AnalysisRequest:
    lie_type: str
    parabolic: tuple[int, ...]
    weight: tuple[int, ...]
    kahler: tuple[Fraction, ...] | None = None
    line: tuple[int, ...] | None = None
    spectral: SpectralRequest | None = None


def _split_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ParseError(f"{what}: expected comma-separated integers, got {text!r}") from exc


def _split_fractions(text: str, what: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(tok) for tok in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{what}: expected comma-separated rationals, got {text!r}") from exc


def _parse_spectral_spec(text: str) -> SpectralRequest:
    fields: dict[str, str] = {}
    for chunk in text.split(","):
        if "=" not in chunk:
            raise ParseError(f"spectral spec: expected key=value, got {chunk!r}")
        key, value = chunk.split("=", 1)
        fields[key.strip()] = value.strip()
    try:
        return SpectralRequest(
            dim=int(fields.get("dim", "1")),
            modes=int(fields.get("modes", "128")),
            exponent=float(fields["s"]),
            codim=int(fields["codim"]) if "codim" in fields else None,
            hym=float(fields.get("hym", "1")),
        )
    except KeyError as exc:
        raise ParseError(f"spectral spec: missing required field {exc.args[0]!r}") from exc
    except ValueError as exc:
        raise ParseError(f"spectral spec: {exc}") from exc


def parse_request(tokens: Sequence[str]) -> AnalysisRequest:
    """Validate analyze-style tokens into a request, or raise ParseError."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(list(tokens))
    except SystemExit as exc:  # argparse reports the bad token itself
        raise ParseError("unrecognized or malformed arguments") from exc
    if ns.command != "analyze":
        raise ParseError(f"expected an analyze request, got {ns.command!r}")
    return _request_from_namespace(ns)


def _request_from_namespace(ns: argparse.Namespace) -> AnalysisRequest:
    try:
        lie_type = str(build_root_system(ns.type).lie_type)
    except InvalidTypeError as exc:
        raise ParseError(str(exc)) from exc
    rank = int(lie_type[1:])
    nodes = _split_ints(ns.parabolic, "--parabolic")
    if len(set(nodes)) != len(nodes):
        raise ParseError("--parabolic: duplicate node indices")
    for node in nodes:
        if not 1 <= node <= rank:
            raise ParseError(f"--parabolic: node {node} outside 1..{rank}")
    if len(nodes) == rank:
        raise ParseError("--parabolic: the full node set is not a parabolic (the variety would be a point)")
    weight = _split_ints(ns.weight, "--weight")
    if len(weight) != rank:
        raise ParseError(f"--weight: expected {rank} coordinates, got {len(weight)}")
    kahler = _split_fractions(ns.kahler, "--kahler") if ns.kahler else None
    line = _split_ints(ns.line, "--line") if ns.line else None
    spectral = _parse_spectral_spec(ns.spectral) if ns.spectral else None
    return AnalysisRequest(
        lie_type=lie_type,
        parabolic=tuple(sorted(nodes)),
        weight=weight,
        kahler=kahler,
        line=line,
        spectral=spectral,
    )


def render_request(req: AnalysisRequest) -> list[str]:
    """Inverse of parse_request; parse_request(render_request(r)) == r."""
    tokens = [
        "analyze",
        "--type",
        req.lie_type,
        "--parabolic",
        ",".join(str(n) for n in req.parabolic),
        "--weight",
        ",".join(str(c) for c in req.weight),
    ]
    if req.kahler is not None:
        tokens += ["--kahler", ",".join(str(c) for c in req.kahler)]
    if req.line is not None:
        tokens += ["--line", ",".join(str(c) for c in req.line)]
    if req.spectral is not None:
        s = req.spectral
        spec = f"dim={s.dim},modes={s.modes},s={s.exponent}"
        if s.codim is not None:
            spec += f",codim={s.codim}"
        if s.hym != 1.0:
            spec += f",hym={s.hym}"
        tokens += ["--spectral", spec]
    return tokens


def _frac(value: Fraction) -> str:
    return str(Fraction(value))


def _weight_json(w: Weight) -> list[str]:
    return [_frac(c) for c in w.coords]


def _parabolic_block(p: ParabolicData) -> dict:
    return {
        "levi_nodes": [i + 1 for i in p.levi_nodes],
        "picard_nodes": [i + 1 for i in p.picard_nodes],
        "levi_cartan": [list(row) for row in p.levi_cartan],
        "det_levi_cartan": _frac(linalg.det(p.levi_cartan)),
        "phi_I_plus": [list(r) for r in p.complement_roots],
        "delta": _weight_json(p.delta),
    }


def _splitting_block(spec: BundleSpec) -> dict:
    report = splitting_report(spec)
    split = decompose_weight(spec.highest_weight, spec.parabolic)
    block = {
        "lambda_s": _weight_json(split.lambda_s),
        "lambda_c": _weight_json(split.lambda_c),
        "rank": report.chern.rank,
        "cramer_a": [_frac(a) for a in report.chern.cramer_a],
        "lambda_E": _weight_json(report.chern.lambda_E),
        "criterion": {str(beta + 1): _frac(v) for beta, v in sorted(report.criterion_values.items())},
        "splits": report.splits,
    }
    block["lambda_L0"] = _weight_json(report.lambda_L0) if report.lambda_L0 is not None else None
    block["lambda_E0_check"] = (
        _weight_json(report.lambda_E0_check) if report.lambda_E0_check is not None else None
    )
    return block


def _curvature_block(p: ParabolicData, kahler: KahlerClass, line: Weight | None) -> dict:
    psi = line if line is not None else einstein_class(p).as_weight(p)
    spectrum = endo_eigenvalues(psi, kahler, p)
    block = {
        "kahler_class": [_frac(c) for c in kahler.coeffs],
        "einstein_class": [_frac(c) for c in einstein_class(p).coeffs],
        "normalization": "curvature forms carry a further 2*pi factor at report time",
        "omega_traces": {
            str(alpha + 1): _frac(omega_trace(alpha, kahler, p)) for alpha in p.picard_nodes
        },
        "psi": _weight_json(psi),
        "eigenvalues": {_root_label(root): _frac(q) for root, q in spectrum.eigenvalues.items()},
        "trace": _frac(spectrum.trace()),
    }
    if line is not None:
        block["hym_constant"] = _frac(hym_constant(line, kahler, p))
    return block


def _root_label(root: tuple[int, ...]) -> str:
    parts = []
    for i, m in enumerate(root):
        if m == 1:
            parts.append(f"a{i + 1}")
        elif m:
            parts.append(f"{m}a{i + 1}")
    return "+".join(parts)


def _spectral_block(req: SpectralRequest, hym_target: float | None = None) -> dict:
    torus = FlatTorus((1.0,) * req.dim)
    profile = req.profile()
    check = integrability_check(profile)
    target = req.hym if hym_target is None else hym_target
    block: dict = {
        "torus_sides": list(torus.side_lengths),
        "profile": {"codim": profile.codim, "exponent": profile.exponent},
        "integrable": {
            "finite": check.finite,
            "certificate": check.certificate,
            "tube_integral": check.tube_integral if check.certificate == "convergent" else "divergent",
        },
    }
    if not check.finite:
        return block
    f = distance_profile_coefficients(profile, torus, req.modes)
    truncations = _truncation_ladder(req.modes)
    residuals = []
    for n in truncations:
        sol = solve_weight(f, n, torus)
        residuals.append({"n": n, "residual": sol.residual_l2, "h2_norm": sol.h2_norm})
    gaps = []
    for m, n in zip(truncations, truncations[1:]):
        gaps.append(
            {
                "m": m,
                "n": n,
                "bound": h2_cauchy_gap(f, n, m, torus, kappa=0.0),
                "gap": spectral_h2_gap(f, m, n, torus),
            }
        )
    mean = f.coefficient(0) / torus.volume ** 0.5
    block.update(
        {
            "coeffs_head": [f.coefficient(j) for j in range(8)],
            "residuals": residuals,
            "h2_gaps": gaps,
            "hym_target": target,
            "c0": compatibility_constant(mean, target, torus),
        }
    )
    return block


def _truncation_ladder(modes: int) -> list[int]:
    ladder = []
    n = 2
    while n < modes:
        ladder.append(n)
        n *= 2
    ladder.append(modes)
    return ladder


def build_analysis_report(req: AnalysisRequest) -> dict:
    rs = build_root_system(req.lie_type)
    p = build_parabolic(rs, [n - 1 for n in req.parabolic])
    weight = Weight.of(*req.weight)
    spec = BundleSpec(parabolic=p, highest_weight=weight)
    report = {
        "schema_version": SCHEMA_VERSION,
        "request": {
            "lie_type": req.lie_type,
            "parabolic": list(req.parabolic),
            "weight": list(req.weight),
        },
        "root_system": {
            "type": str(rs.lie_type),
            "rank": rs.rank,
            "positive_roots": len(rs.positive_roots),
        },
        "parabolic": _parabolic_block(p),
        "splitting": _splitting_block(spec),
    }
    kahler = KahlerClass(req.kahler) if req.kahler is not None else None
    if kahler is not None:
        line = line_bundle_weight(req.line, p) if req.line is not None else None
        report["curvature"] = _curvature_block(p, kahler, line)
    if req.spectral is not None:
        # when the bundle splits and a Kahler class is fixed, the demo's
        # target mean is the constant mean curvature of the split-off L0
        hym_target = None
        full = splitting_report(spec)
        if kahler is not None and full.splits:
            hym_target = float(hym_constant(full.lambda_L0, kahler, p))
        report["spectral"] = _spectral_block(req.spectral, hym_target)
    return report


# ---------------------------------------------------------------------------
# Reference fixtures: the worked examples with pinned exact values.
# ---------------------------------------------------------------------------

_REFERENCE_FIXTURES: tuple[dict, ...] = (
    {
        "name": "universal-bundle-gr2c4",
        "type": "A3",
        "parabolic": (1, 3),
        "weight": (1, 0, 0),
        "expected": {
            "rank": 2,
            "cramer_a": ["1", "0"],
            "lambda_E": ["0", "-1", "0"],
            "criterion": {"2": "-1/2"},
            "splits": False,
            "lambda_L0": None,
        },
    },
    {
        "name": "spinor-bundle-q5",
        "type": "B3",
        "parabolic": (2, 3),
        "weight": (0, 0, 1),
        "expected": {
            "rank": 4,
            "cramer_a": ["2", "4"],
            "lambda_E": ["-2", "0", "0"],
            "criterion": {"1": "-1/2"},
            "splits": False,
            "lambda_L0": None,
            "levi_cartan": [[2, -2], [-1, 2]],
        },
    },
    {
        "name": "sym2-spinor-q5",
        "type": "B3",
        "parabolic": (2, 3),
        "weight": (0, 0, 2),
        "expected": {
            "rank": 10,
            "cramer_a": ["10", "20"],
            "lambda_E": ["-10", "0", "0"],
            "criterion": {"1": "-1"},
            "splits": True,
            "lambda_L0": ["-1", "0", "0"],
        },
    },
    {
        "name": "spin8-fundamental",
        "type": "D4",
        "parabolic": (1, 2),
        "weight": (1, 0, 0, 0),
        "expected": {
            "rank": 3,
            "criterion": {"3": "-1/3", "4": "-1/3"},
            "splits": False,
            "lambda_L0": None,
            "det_levi_cartan": "3",
        },
    },
    {
        "name": "spin8-adjoint-levi",
        "type": "D4",
        "parabolic": (1, 2),
        "weight": (1, 1, 0, 0),
        "expected": {
            "rank": 8,
            "criterion": {"3": "-1", "4": "-1"},
            "splits": True,
            "lambda_L0": ["0", "0", "-1", "-1"],
            "det_levi_cartan": "3",
        },
    },
)

_TANGENT_FIXTURE = {
    "name": "tangent-gr2c4",
    "type": "A3",
    "parabolic": (1, 3),
    "expected": {
        "delta": ["0", "4", "0"],
        "delta_in_simple_roots": ["2", "4", "2"],
        "degree_over_rank": "1",
        "splits": True,
    },
}


def _tangent_report() -> dict:
    rs = build_root_system(_TANGENT_FIXTURE["type"])
    p = build_parabolic(rs, [n - 1 for n in _TANGENT_FIXTURE["parabolic"]])
    delta = canonical_weight(p)
    in_simple = rs.weight_in_simple_roots(delta)
    dim = len(p.complement_roots)  # rank of the tangent bundle
    degrees = [delta[i] / dim for i in p.picard_nodes]
    return {
        "schema_version": SCHEMA_VERSION,
        "name": _TANGENT_FIXTURE["name"],
        "parabolic": _parabolic_block(p),
        "delta": _weight_json(delta),
        "delta_in_simple_roots": [_frac(x) for x in in_simple],
        "degree_over_rank": _frac(degrees[0]),
        "splits": all(d.denominator == 1 for d in degrees),
    }


def run_reference_suite() -> list[dict]:
    """Run every pinned example; raise FixtureMismatchError on any deviation."""
    reports = []
    for fixture in _REFERENCE_FIXTURES:
        req = AnalysisRequest(
            lie_type=fixture["type"],
            parabolic=fixture["parabolic"],
            weight=fixture["weight"],
        )
        report = build_analysis_report(req)
        combined = dict(report["splitting"])
        combined["levi_cartan"] = report["parabolic"]["levi_cartan"]
        combined["det_levi_cartan"] = report["parabolic"]["det_levi_cartan"]
        _check_fixture(fixture["name"], fixture["expected"], combined)
        reports.append({"name": fixture["name"], "report": report})
    tangent = _tangent_report()
    _check_fixture(
        _TANGENT_FIXTURE["name"],
        _TANGENT_FIXTURE["expected"],
        tangent,
    )
    reports.append({"name": _TANGENT_FIXTURE["name"], "report": tangent})
    return reports


def _check_fixture(name: str, expected: dict, actual: dict) -> None:
    for key, value in expected.items():
        if key not in actual:
            raise FixtureMismatchError(f"{name}: missing field {key!r}")
        if actual[key] != value:
            raise FixtureMismatchError(
                f"{name}: field {key!r} differs (expected {value!r}, got {actual[key]!r})"
            )


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parabolica",
        description="Exact splitting analysis of homogeneous vector bundles on flag varieties.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, weighted: bool) -> None:
        p.add_argument("--type", required=True, help="Dynkin type, e.g. A3, B3, D4 (case-insensitive)")
        p.add_argument("--parabolic", required=True, help="Levi nodes, 1-based, e.g. 2,3")
        if weighted:
            p.add_argument("--weight", required=True, help="highest weight coordinates, e.g. 0,0,2")
        p.add_argument("--json", action="store_true", help="force JSON output (the default)")
        p.add_argument("--csv", action="store_true", help="CSV output where supported")
        p.add_argument("--quiet", action="store_true", help="suppress summary lines")

    analyze = sub.add_parser("analyze", help="splitting report for a bundle")
    common(analyze, weighted=True)
    analyze.add_argument("--kahler", help="Kahler coefficients over the Picard nodes, e.g. 1 or 1,2")
    analyze.add_argument("--line", help="line bundle degrees over the Picard nodes")
    analyze.add_argument("--spectral", help="spectral demo spec, e.g. dim=1,modes=128,s=0.25")

    curv = sub.add_parser("curvature", help="invariant curvature constants")
    common(curv, weighted=False)
    curv.add_argument("--kahler", help="Kahler coefficients (default: the Einstein class)")
    curv.add_argument("--line", help="line bundle degrees over the Picard nodes")

    spec = sub.add_parser("spectral", help="Galerkin demo for a singular profile")
    spec.add_argument("--dim", type=int, default=1, help="torus dimension")
    spec.add_argument("--modes", type=int, default=128, help="eigenmodes to materialize")
    spec.add_argument("--profile", required=True, help="e.g. point:s=0.25 or subtorus:s=0.4,codim=1")
    spec.add_argument("--hym", type=float, default=1.0, help="target mean-curvature constant")
    spec.add_argument("--report", choices=("json", "csv"), default="json")
    spec.add_argument("--json", action="store_true")
    spec.add_argument("--csv", action="store_true")
    spec.add_argument("--quiet", action="store_true")

    suite = sub.add_parser("paper-suite", help="run the pinned example battery")
    suite.add_argument("--json", action="store_true")
    suite.add_argument("--csv", action="store_true")
    suite.add_argument("--quiet", action="store_true")

    dump = sub.add_parser("dump-roots", help="emit a root-system dump as JSON")
    dump.add_argument("--type", required=True)
    dump.add_argument("--json", action="store_true")
    dump.add_argument("--csv", action="store_true")
    dump.add_argument("--quiet", action="store_true")
    return parser


def _parse_profile(text: str) -> tuple[str, dict[str, str]]:
    if ":" not in text:
        raise ParseError(f"--profile: expected kind:key=value[,...], got {text!r}")
    kind, rest = text.split(":", 1)
    fields: dict[str, str] = {}
    for chunk in rest.split(","):
        if "=" not in chunk:
            raise ParseError(f"--profile: expected key=value, got {chunk!r}")
        key, value = chunk.split("=", 1)
        fields[key.strip()] = value.strip()
    if kind not in ("point", "subtorus"):
        raise ParseError(f"--profile: unknown singular-set kind {kind!r}")
    return kind, fields


def _spectral_request_from_args(ns: argparse.Namespace) -> SpectralRequest:
    kind, fields = _parse_profile(ns.profile)
    if "s" not in fields:
        raise ParseError("--profile: missing exponent s")
    codim = None
    if kind == "subtorus":
        if "codim" not in fields:
            raise ParseError("--profile: subtorus profiles need codim=")
        codim = int(fields["codim"])
    return SpectralRequest(
        dim=ns.dim,
        modes=ns.modes,
        exponent=float(fields["s"]),
        codim=codim,
        hym=ns.hym,
    )


def _emit(payload: dict | list) -> None:
    sys.stdout.write(json.dumps(payload, indent=2))
    sys.stdout.write("\n")


def main(argv: Sequence[str] | None = None) -> int:
    tokens = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        ns = parser.parse_args(tokens)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        if ns.command == "analyze":
            req = _request_from_namespace(ns)
            _emit(build_analysis_report(req))
        elif ns.command == "curvature":
            rs = build_root_system(ns.type)
            nodes = _split_ints(ns.parabolic, "--parabolic")
            p = build_parabolic(rs, [n - 1 for n in nodes])
            kahler = (
                KahlerClass(_split_fractions(ns.kahler, "--kahler"))
                if ns.kahler
                else einstein_class(p)
            )
            line = (
                line_bundle_weight(_split_ints(ns.line, "--line"), p) if ns.line else None
            )
            _emit(_curvature_block(p, kahler, line))
        elif ns.command == "spectral":
            req = _spectral_request_from_args(ns)
            block = _spectral_block(req)
            if ns.csv or ns.report == "csv":
                sys.stdout.write("n,residual\n")
                for row in block.get("residuals", ()):
                    sys.stdout.write(f"{row['n']},{row['residual']!r}\n")
            else:
                _emit(block)
        elif ns.command == "paper-suite":
            try:
                reports = run_reference_suite()
            except FixtureMismatchError as exc:
                sys.stderr.write(f"fixture mismatch: {exc}\n")
                return 2
            if not ns.quiet:
                for entry in reports:
                    sys.stdout.write(f"ok {entry['name']}\n")
            _emit(reports)
        elif ns.command == "dump-roots":
            rs = build_root_system(ns.type)
            _emit(rs.to_dict())
    except (
        ParseError,
        InvalidTypeError,
        FullSetNotParabolicError,
        NotDominantError,
        ValueError,
        IndexError,
    ) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
