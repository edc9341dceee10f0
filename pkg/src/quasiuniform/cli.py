"""Command-line front end.

Subcommands: ``construct`` (coset table plus labeled code), ``analyze``
(entropy profile, weight enumerator by two methods, minimum distance,
almost-affine check), ``verify`` (quasi-uniformity), ``represent``
(abelian representability) and ``regen-paper-examples`` (write the two
bundled reference constructions as golden files).

Exit codes: 0 ok, 1 usage, 2 parse/input, 3 cap exceeded, 4 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .analysis import (
    distance_profile,
    entropy_profile,
    is_almost_affine,
    min_distance,
    min_distance_group,
    polynomial_string,
    verify_quasi_uniform,
    weight_enumerator_formula,
)
from .construction import (
    CosetTable,
    QuasiUniformCode,
    build_code,
    build_coset_table,
    code_from_json_dict,
    code_to_json_dict,
    parse_subgroup_selection,
)
from .errors import CapExceededError, InvariantError
from .groups import (
    DEFAULT_ENUM_CAP,
    DEFAULT_ORDER_CAP,
    build_named_group,
    is_normal,
)
from .representability import DEFAULT_SEARCH_CAP, representation_search

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_INTERNAL = 4

COMMANDS = ("construct", "analyze", "represent", "verify", "regen-paper-examples")


@dataclass
class Caps:
    order: int = DEFAULT_ORDER_CAP
    enum: int = DEFAULT_ENUM_CAP
    search: int = DEFAULT_SEARCH_CAP

    def __post_init__(self):
        if min(self.order, self.enum, self.search) < 1:
            raise ValueError("caps must be positive")


@dataclass
class RunConfig:
    command: str
    group_spec: str | None = None
    subgroup_spec: str | None = None
    output: str = "table"
    caps: Caps = field(default_factory=Caps)
    center: int = 0
    input_path: str | None = None
    out_dir: str = "golden"


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _pad_columns(rows: list[list[str]]) -> list[str]:
    widths = [max(len(row[j]) for row in rows) for j in range(len(rows[0]))]
    out = []
    for row in rows:
        head = row[0].rjust(widths[0])
        rest = "  ".join(cell.ljust(w) for cell, w in zip(row[1:], widths[1:])).rstrip()
        out.append(f"{head} | {rest}")
    return out


def render_coset_table(table: CosetTable) -> str:
    G = table.group
    lines = [f"group {G.name} (order {G.order})"]
    for i, H in enumerate(table.subgroups):
        normal = "normal" if is_normal(G, H) else "not normal"
        lines.append(
            f"column {i}: {H.describe()} order {H.order} index {H.index} ({normal})"
        )
    lines.append("coset table (rows: group elements; columns: subgroups):")
    grid = []
    for g in G.elements():
        cells = []
        for i in range(table.n):
            coset = table.cosets[i][int(table.cells[g, i])]
            cells.append("{" + ",".join(G.names[x] for x in coset) + "}")
        grid.append([G.names[g]] + cells)
    lines.extend(_pad_columns(grid))
    return "\n".join(lines) + "\n"


def render_labeled_code(code: QuasiUniformCode) -> str:
    lines = [f"code: length {code.n}, {code.size} codewords"]
    for i, alphabet in enumerate(code.alphabets):
        extra = ""
        if alphabet.kind == "canonical-abelian":
            extra = f", invariant factors {list(alphabet.factors)}"
        elif alphabet.kind == "quotient-group":
            group = alphabet.quotient
            flavor = "abelian" if group.is_abelian else "nonabelian"
            extra = f", {flavor} group of order {group.order}"
        lines.append(f"alphabet {i}: {alphabet.kind} size {alphabet.size}{extra}")
    grid = []
    for k, word in enumerate(code.codewords):
        row_name = (
            code.group.names[code.representatives[k]]
            if code.group is not None and code.representatives is not None
            else str(k)
        )
        grid.append([row_name] + [code.alphabets[i].label_names[s] for i, s in enumerate(word)])
    lines.extend(_pad_columns(grid))
    return "\n".join(lines) + "\n"


def _subset_text(subset) -> str:
    return "{" + ",".join(map(str, subset)) + "}"


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------

def _load_instance(config: RunConfig) -> tuple[QuasiUniformCode, CosetTable | None]:
    if config.input_path:
        data = json.loads(Path(config.input_path).read_text(encoding="utf-8"))
        code = code_from_json_dict(
            data, order_cap=config.caps.order, enum_cap=config.caps.enum
        )
        return code, None
    if not config.group_spec or not config.subgroup_spec:
        raise ValueError("need a group spec and a subgroup selection (or an input file)")
    G = build_named_group(config.group_spec, order_cap=config.caps.order)
    subs = parse_subgroup_selection(G, config.subgroup_spec, enum_cap=config.caps.enum)
    table = build_coset_table(G, subs)
    code = build_code(G, subs, enum_cap=config.caps.enum)
    return code, table


def _cmd_construct(config: RunConfig) -> tuple[int, str]:
    code, table = _load_instance(config)
    if config.output == "json":
        return EXIT_OK, json.dumps(code_to_json_dict(code), indent=2, sort_keys=True)
    parts = []
    if table is not None:
        parts.append(render_coset_table(table))
    parts.append(render_labeled_code(code))
    return EXIT_OK, "\n".join(parts)


def _analysis_payload(code: QuasiUniformCode, center: int) -> dict:
    report = verify_quasi_uniform(code)
    if not report.ok:
        raise InvariantError("group-built code failed the quasi-uniformity check")
    profile = entropy_profile(code)
    enum = weight_enumerator_formula(profile)
    census = distance_profile(code, center)
    payload: dict = {
        "group": code.group.name if code.group else None,
        "n": code.n,
        "codewords": code.size,
        "group_structured": code.group_structured,
        "quasi_uniform": True,
        "entropy_profile": profile.to_json_dict()["support_sizes"],
        "weight_enumerator": {
            "coeffs": list(enum.coeffs),
            "polynomial": polynomial_string(enum),
            "census_center": center,
            "census_counts": list(census.counts),
            "methods_agree": enum.coeffs == census.counts,
        },
    }
    if code.size >= 2:
        brute = min_distance(code)
        payload["min_distance"] = {"brute_force": brute}
        if code.group_structured and code.group is not None:
            payload["min_distance"]["group_formula"] = min_distance_group(
                code.group, code.subgroups
            )
    else:
        payload["min_distance"] = None
    sizes = {a.size for a in code.alphabets}
    if len(sizes) == 1 and min(sizes) >= 2:
        payload["almost_affine"] = is_almost_affine(code).to_json_dict()
    elif len(sizes) == 1:
        payload["almost_affine"] = {"skipped": "single-symbol alphabets have no base q"}
    else:
        payload["almost_affine"] = {
            "skipped": "coordinates use mixed alphabet sizes; supply q via the API"
        }
    return payload


def _render_analysis(payload: dict) -> str:
    lines = [
        f"group {payload['group']}: code length {payload['n']}, "
        f"{payload['codewords']} codewords, "
        f"group-structured: {'yes' if payload['group_structured'] else 'no'}",
        "quasi-uniform: ok",
        "entropy profile (projection support sizes):",
    ]
    for key, value in payload["entropy_profile"].items():
        lines.append(f"  {{{key}}}: {value}")
    enum = payload["weight_enumerator"]
    lines.append(f"weight enumerator: {enum['polynomial']}")
    lines.append(f"  coefficients: {enum['coeffs']}")
    agree = "yes" if enum["methods_agree"] else "NO"
    lines.append(
        f"  matches distance census at center {enum['census_center']}: {agree}"
    )
    md = payload["min_distance"]
    if md is None:
        lines.append("min distance: undefined (single codeword)")
    else:
        text = f"min distance: {md['brute_force']} (pairwise census)"
        if "group_formula" in md:
            text += f", {md['group_formula']} (subgroup-intersection formula)"
        lines.append(text)
    aa = payload["almost_affine"]
    if "skipped" in aa:
        lines.append(f"almost affine: skipped ({aa['skipped']})")
    elif aa["ok"]:
        lines.append(f"almost affine: yes (q={aa['q']})")
    else:
        lines.append(
            f"almost affine: no (q={aa['q']}, subset {_subset_text(aa['witness'])} "
            f"projects to {aa['projection_size']} tuples)"
        )
    return "\n".join(lines) + "\n"


def _cmd_analyze(config: RunConfig) -> tuple[int, str]:
    code, _ = _load_instance(config)
    payload = _analysis_payload(code, config.center)
    status = EXIT_OK if payload["weight_enumerator"]["methods_agree"] else EXIT_INTERNAL
    if config.output == "json":
        return status, json.dumps(payload, indent=2, sort_keys=True)
    return status, _render_analysis(payload)


def _cmd_verify(config: RunConfig) -> tuple[int, str]:
    code, _ = _load_instance(config)
    report = verify_quasi_uniform(code)
    if config.output == "json":
        return EXIT_OK, json.dumps(report.to_json_dict(), indent=2, sort_keys=True)
    if report.ok:
        return EXIT_OK, "quasi-uniform: ok\n"
    w = report.witness
    return EXIT_OK, (
        f"quasi-uniform: FAILED on subset {_subset_text(w.subset)}: "
        f"{w.tuple_a} appears {w.count_a} times but {w.tuple_b} appears {w.count_b}\n"
    )


def _cmd_represent(config: RunConfig) -> tuple[int, str]:
    if not config.group_spec or not config.subgroup_spec:
        raise ValueError("represent needs a group spec and a subgroup selection")
    G = build_named_group(config.group_spec, order_cap=config.caps.order)
    subs = parse_subgroup_selection(G, config.subgroup_spec, enum_cap=config.caps.enum)
    outcome = representation_search(
        G, subs, search_cap=config.caps.search, enum_cap=config.caps.enum
    )
    payload: dict = {
        "representable": outcome.representation is not None,
        "checked_candidates": outcome.checked_candidates,
        "orders_searched": list(outcome.orders_searched),
    }
    if outcome.representation is not None:
        rep = outcome.representation
        payload["witness"] = {
            "group_spec": rep.group.name,
            "subgroups": [
                [rep.group.names[x] for x in H.members] for H in rep.subgroups
            ],
        }
    elif outcome.restricted:
        payload["note"] = (
            "search was restricted to abelian groups of the same order; "
            "a larger abelian group could in principle still represent the instance"
        )
    if config.output == "json":
        return EXIT_OK, json.dumps(payload, indent=2, sort_keys=True)
    lines = [f"representable: {'yes' if payload['representable'] else 'no'}"]
    if "witness" in payload:
        lines.append(f"witness group: {payload['witness']['group_spec']}")
        for members in payload["witness"]["subgroups"]:
            lines.append("  subgroup {" + ",".join(members) + "}")
    lines.append(f"checked candidates: {payload['checked_candidates']}")
    if "note" in payload:
        lines.append(f"note: {payload['note']}")
    return EXIT_OK, "\n".join(lines) + "\n"


def _golden_files(caps: Caps) -> dict[str, str]:
    ternary = build_named_group("C3xC3", order_cap=caps.order)
    ternary_subs = parse_subgroup_selection(
        ternary, "gens:(1,0)|gens:(0,1)|gens:(1,1)|gens:(1,2)", enum_cap=caps.enum
    )
    ternary_table = build_coset_table(ternary, ternary_subs)
    ternary_code = build_code(ternary, ternary_subs, enum_cap=caps.enum)
    enum = weight_enumerator_formula(entropy_profile(ternary_code))

    sym = build_named_group("S3", order_cap=caps.order)
    sym_subs = parse_subgroup_selection(
        sym, "gens:(12)|gens:(13)|gens:(23)", enum_cap=caps.enum
    )
    sym_table = build_coset_table(sym, sym_subs)

    return {
        "c3xc3_coset_table.txt": render_coset_table(ternary_table),
        "c3xc3_labeled_code.txt": render_labeled_code(ternary_code),
        "c3xc3_weight_enumerator.txt": (
            polynomial_string(enum) + "\ncoeffs: " + " ".join(map(str, enum.coeffs)) + "\n"
        ),
        "s3_coset_table.txt": render_coset_table(sym_table),
    }


def _cmd_regen(config: RunConfig) -> tuple[int, str]:
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    lines = []
    for name, content in sorted(_golden_files(config.caps).items()):
        path = out_dir / name
        path.write_text(content, encoding="utf-8")
        lines.append(f"wrote {path}")
    return EXIT_OK, "\n".join(lines) + "\n"


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, output text)."""
    handlers = {
        "construct": _cmd_construct,
        "analyze": _cmd_analyze,
        "verify": _cmd_verify,
        "represent": _cmd_represent,
        "regen-paper-examples": _cmd_regen,
    }
    if config.command not in handlers:
        return EXIT_USAGE, f"error: unknown command {config.command!r}"
    try:
        return handlers[config.command](config)
    except CapExceededError as exc:
        return EXIT_CAP, f"error: {exc}"
    except InvariantError as exc:
        return EXIT_INTERNAL, f"internal error: {exc}"
    except (ValueError, TypeError, KeyError, IndexError, AttributeError, OSError) as exc:
        return EXIT_PARSE, f"error: {exc}"


# ---------------------------------------------------------------------------
# argparse wiring
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage problems, not argparse's default 2
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quasiuniform", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("-g", "--group", help="group spec, e.g. C3xC3, D12, S3")
        p.add_argument(
            "-s",
            "--subgroups",
            help="subgroup selection: 'gens:...|gens:...' or a selector "
            "(all-nontrivial, all-normal-proper, all-index:<k>)",
        )
        p.add_argument("-o", "--output", choices=("table", "json"), default="table")
        p.add_argument("-i", "--input", help="a construct JSON file to re-analyze")
        p.add_argument("--center", type=int, default=0, help="distance census center row")
        p.add_argument("--cap-order", type=int, default=DEFAULT_ORDER_CAP)
        p.add_argument("--cap-enum", type=int, default=DEFAULT_ENUM_CAP)
        p.add_argument("--cap-search", type=int, default=DEFAULT_SEARCH_CAP)
        p.add_argument("--out-dir", default="golden", help="golden file directory")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        caps = Caps(order=args.cap_order, enum=args.cap_enum, search=args.cap_search)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    config = RunConfig(
        command=args.command,
        group_spec=args.group,
        subgroup_spec=args.subgroups,
        output=args.output,
        caps=caps,
        center=args.center,
        input_path=args.input,
        out_dir=args.out_dir,
    )
    status, text = run(config)
    stream = sys.stdout if status == EXIT_OK else sys.stderr
    print(text, end="" if text.endswith("\n") else "\n", file=stream)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
