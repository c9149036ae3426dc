"""Command-line front end: classify games, tabulate values, run the
verification suites, and analyze disjunctive sums."""

from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile

import click

from .core import GameError
from .core import enumerate_subgame
from .fixtures import FIXTURE_NAMES, fixture_roots, load_fixture
from .grundy import sg_labels, to_csv, to_json
from .classify import classify
from .suites import SUITES, run_suite
from .sums import check_closure, sum_graph
from . import zoo

CACHE_FORMAT_VERSION = 1


def _fail(message: str, code: int = 2):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _parse_root(text: str):
    parts = [p.strip() for p in text.split(",")]
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError:
        # fixture node ids stay strings
        return text if len(parts) == 1 else tuple(parts)
    return coords


def _merge_params(params_json, a, b, n, k, shape, subtraction_set):
    params = dict(json.loads(params_json)) if params_json else {}
    for key, value in (("a", a), ("b", b), ("n", n), ("k", k),
                       ("shape", shape)):
        if value is not None:
            params[key] = value
    if subtraction_set:
        params["x"] = tuple(int(v) for v in subtraction_set.split(","))
    return params


def _build_game(family, fixture, params, use_symmetry):
    if (family is None) == (fixture is None):
        raise click.UsageError("give exactly one of --family / --fixture")
    if fixture is not None:
        return load_fixture(fixture), None
    return zoo.make_family(family, params, use_symmetry=use_symmetry), params


def _resolve_roots(roots, fixture, box, family, params):
    if roots:
        return [_parse_root(r) for r in roots]
    if fixture is not None:
        return fixture_roots(fixture)
    if box is not None:
        dims = _family_dims(family, params)
        return zoo.box_roots(dims, box)
    raise click.UsageError("no positions given: use --roots/--piles or --box")


_TWO_PILE = {"euclid_cd", "euclid_grossman", "wythoff", "wyt_a", "wyt_ab"}
_ONE_PILE = {"subtraction", "mark"}


def _family_dims(family, params):
    if family in _TWO_PILE:
        return 2
    if family in _ONE_PILE:
        return 1
    if family == "ho_nim":
        return zoo.ho_nim_block_count(params.get("shape"), params.get("n"))
    n = params.get("n")
    if n is None:
        raise click.UsageError(f"--box needs a pile count for family {family}")
    return n + 1 if family == "extended_nim" else n


@click.group()
def main():
    """Sprague-Grundy analysis of impartial games under both play
    conventions."""


_game_options = [
    click.option("--family", type=click.Choice(zoo.FAMILIES), default=None),
    click.option("--fixture", type=click.Choice(FIXTURE_NAMES), default=None),
    click.option("--params", "params_json", default=None,
                 help="family parameters as a JSON object"),
    click.option("--a", type=int, default=None),
    click.option("--b", type=int, default=None),
    click.option("--n", "n_param", type=int, default=None),
    click.option("--k", type=int, default=None),
    click.option("--shape", default=None),
    click.option("--set", "subtraction_set", default=None,
                 help="subtraction set, comma separated"),
    click.option("--roots", "--piles", "roots", multiple=True,
                 help="starting positions, comma-separated coordinates"),
    click.option("--box", type=int, default=None,
                 help="enumerate from every position with coordinates <= BOX"),
    click.option("--symmetry/--no-symmetry", default=False,
                 help="canonicalize positions under the family's symmetry"),
]


def _with_game_options(cmd):
    for opt in reversed(_game_options):
        cmd = opt(cmd)
    return cmd


@main.command()
@_with_game_options
@click.option("--format", "fmt", type=click.Choice(["json", "text"]),
              default="text")
def analyze(family, fixture, params_json, a, b, n_param, k, shape,
            subtraction_set, roots, box, symmetry, fmt):
    """Classify the game reachable from the given positions."""
    try:
        params = _merge_params(params_json, a, b, n_param, k, shape,
                               subtraction_set)
        game, params = _build_game(family, fixture, params, symmetry)
        root_list = _resolve_roots(roots, fixture, box, family, params or {})
        lg = sg_labels(enumerate_subgame(game, root_list))
        report = classify(lg)
    except GameError as exc:
        _fail(str(exc))
    if fmt == "json":
        click.echo(json.dumps(report.to_dict(), indent=2))
    else:
        click.echo(f"game: {game.family}  ({report.enumerated_bound})")
        for pred, verdict in report.verdicts.items():
            line = f"  {pred:20s} {'yes' if verdict else 'no'}"
            if not verdict:
                pos, lab, reason = report.witnesses[pred]
                line += f"   witness {pos!r} {tuple(lab)}: {reason}"
            click.echo(line)
    sys.exit(0)


def _cache_dir(override):
    return override or os.environ.get("GRUNDY_CACHE_DIR")


def _cache_fetch(directory, key):
    path = os.path.join(directory, key)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError:
        return None


def _cache_store(directory, key, text):
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, os.path.join(directory, key))
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass


def _cache_key(payload: dict) -> str:
    payload = dict(payload, version=CACHE_FORMAT_VERSION)
    digest = hashlib.sha256(
        json.dumps(payload, sort_keys=True, default=str).encode()
    ).hexdigest()
    return f"{digest}.cache"


def _p_sequence_text(family, params, upto, convention, fmt):
    if family == "wythoff":
        pairs = [zoo.wythoff_p(i, convention) for i in range(upto + 1)]
    elif family == "wyt_a":
        if params.get("a") is None:
            raise click.UsageError("wyt_a needs --a")
        pairs = zoo.wyt_a_sequence(params["a"], upto, convention)
    elif family == "wyt_ab":
        if params.get("a") is None or params.get("b") is None:
            raise click.UsageError("wyt_ab needs --a and --b")
        pairs = zoo.wyt_ab_sequence(params["a"], params["b"], upto, convention)
    else:
        raise click.UsageError(
            f"--p-sequence supports wythoff, wyt_a, wyt_ab, not {family}")
    rows = [(i, x, y, convention) for i, (x, y) in enumerate(pairs)]
    if fmt == "json":
        return json.dumps([{"n": i, "x": x, "y": y, "convention": c}
                           for i, x, y, c in rows], indent=2) + "\n"
    lines = ["n,x,y,convention"]
    lines.extend(f"{i},{x},{y},{c}" for i, x, y, c in rows)
    return "\n".join(lines) + "\n"


@main.command()
@_with_game_options
@click.option("--sg", "want_sg", is_flag=True, help="emit the value table")
@click.option("--p-sequence", "want_pseq", is_flag=True,
              help="emit the P-position sequence")
@click.option("--upto", "--n-max", "upto", type=int, default=None,
              help="largest sequence index for --p-sequence")
@click.option("--convention", type=click.Choice(["normal", "misere"]),
              default="normal")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv")
@click.option("--cache-dir", default=None,
              help="cache directory (defaults to $GRUNDY_CACHE_DIR)")
def table(family, fixture, params_json, a, b, n_param, k, shape,
          subtraction_set, roots, box, symmetry, want_sg, want_pseq,
          upto, convention, fmt, cache_dir):
    """Emit an SG-value table or a P-position sequence."""
    if want_sg == want_pseq:
        raise click.UsageError("give exactly one of --sg / --p-sequence")
    try:
        params = _merge_params(params_json, a, b, n_param, k, shape,
                               subtraction_set)
        directory = _cache_dir(cache_dir)

        if want_pseq:
            if family is None:
                raise click.UsageError("--p-sequence needs --family")
            # historical flag spelling: --n doubles as the sequence length
            # when it is not a family parameter
            if upto is None and family != "ho_nim":
                upto = params.pop("n", None)
            if upto is None:
                raise click.UsageError("--p-sequence needs --upto")
            payload = {"kind": "pseq", "family": family, "params": params,
                       "upto": upto, "convention": convention, "format": fmt}
            text = _cached_text(
                directory, payload,
                lambda: _p_sequence_text(family, params, upto, convention, fmt))
        else:
            game, params = _build_game(family, fixture, params, symmetry)
            root_list = _resolve_roots(roots, fixture, box, family,
                                       params or {})
            payload = {"kind": "sg", "family": game.family,
                       "params": params or {}, "roots": root_list,
                       "symmetry": symmetry, "format": fmt}

            def render():
                lg = sg_labels(enumerate_subgame(game, root_list))
                if fmt == "json":
                    return to_json(lg)
                header = (f"family={game.family} params={params or {}} "
                          f"roots={root_list} v{CACHE_FORMAT_VERSION}")
                return to_csv(lg, header_comment=header)

            text = _cached_text(directory, payload, render)
    except GameError as exc:
        _fail(str(exc))
    click.echo(text, nl=False)
    sys.exit(0)


def _cached_text(directory, payload, render):
    if directory is None:
        return render()
    key = _cache_key(payload)
    cached = _cache_fetch(directory, key)
    if cached is not None:
        return cached
    text = render()
    _cache_store(directory, key, text)
    return text


@main.command()
@click.argument("suite", type=click.Choice(SUITES + ("all",)))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--samples", type=int, default=1000, show_default=True,
              help="random-graph sample count for property suites")
@click.option("--max-nodes", type=int, default=12, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]),
              default="text")
def verify(suite, seed, samples, max_nodes, fmt):
    """Run a named verification battery; exit 1 on any failed check."""
    try:
        results = run_suite(suite, seed=seed, samples=samples,
                            max_nodes=max_nodes)
    except GameError as exc:
        _fail(str(exc))
    all_ok = all(r.ok for r in results)
    if fmt == "json":
        click.echo(json.dumps({"seed": seed, "ok": all_ok,
                               "suites": [r.to_dict() for r in results]},
                              indent=2))
    else:
        click.echo(f"seed {seed}")
        for res in results:
            passed = sum(1 for _, ok, _ in res.checks if ok)
            click.echo(f"suite {res.suite}: {passed}/{len(res.checks)} checks "
                       f"{'pass' if res.ok else 'FAIL'}")
            for name, ok, detail in res.checks:
                if not ok:
                    click.echo(f"  FAIL {name}: {detail}")
    sys.exit(0 if all_ok else 1)


def _load_game_spec(path):
    with open(path, "r", encoding="utf-8") as fh:
        spec = json.load(fh)
    if "fixture" in spec:
        game = load_fixture(spec["fixture"])
        roots = spec.get("roots") or fixture_roots(spec["fixture"])
        roots = [tuple(r) if isinstance(r, list) else r for r in roots]
    else:
        game = zoo.make_family(spec["family"], spec.get("params", {}),
                               use_symmetry=bool(spec.get("symmetry")))
        roots = [tuple(r) if isinstance(r, list) else (r,)
                 for r in spec["roots"]]
    return game, [game.canon(r) for r in roots]


@main.command(name="sum")
@click.option("--game", "game_specs", multiple=True, required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="JSON game spec; repeat for each summand")
@click.option("--target", type=click.Choice(
    ["domestic", "tame", "pet", "miserable", "forced", "returnable"]),
    default=None, help="class whose closure under the sum to check")
@click.option("--table", "table_path", type=click.Path(dir_okay=False),
              default=None, help="also write the product SG table as CSV")
def sum_cmd(game_specs, target, table_path):
    """Analyze the disjunctive sum of two or more games."""
    if len(game_specs) < 2:
        raise click.UsageError("a sum needs at least two --game specs")
    try:
        games, rootsets = [], []
        for path in game_specs:
            game, roots = _load_game_spec(path)
            games.append(game)
            rootsets.append(roots)
        product_roots = [tuple(combo) for combo
                         in _cartesian(rootsets)]
        lg = sg_labels(sum_graph(games, product_roots))
        report = classify(lg)
        out = {"summands": [g.family for g in games],
               "report": report.to_dict()}
        if target is not None:
            closure = check_closure(target, games, product_roots)
            out["closure"] = {
                "target": target,
                "summands_in_class": [r.verdicts.get(target, False)
                                      for r in closure.summand_reports],
                "sum_in_class": closure.holds,
                "label_mismatches": [
                    [list(map(str, pos)), list(got), list(want)]
                    for pos, got, want in closure.label_mismatches[:10]],
            }
        if table_path is not None:
            with open(table_path, "w", encoding="utf-8") as fh:
                fh.write(to_csv(lg))
    except GameError as exc:
        _fail(str(exc))
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        _fail(f"bad game spec: {exc!r}")
    click.echo(json.dumps(out, indent=2))
    sys.exit(0)


def _cartesian(rootsets):
    combos = [()]
    for roots in rootsets:
        combos = [c + (r,) for c in combos for r in roots]
    return combos


@main.command(name="fixtures")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]),
              default="text")
def fixtures_cmd(fmt):
    """List the bundled example games with their class verdicts."""
    rows = []
    for name in FIXTURE_NAMES:
        game = load_fixture(name)
        lg = sg_labels(enumerate_subgame(game, fixture_roots(name)))
        report = classify(lg)
        rows.append({"name": name, "nodes": len(lg.graph),
                     "verdicts": report.verdicts})
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2))
    else:
        for row in rows:
            held = [p for p, v in row["verdicts"].items() if v]
            click.echo(f"{row['name']:22s} {row['nodes']:3d} nodes  "
                       f"{', '.join(held) if held else '(none)'}")
    sys.exit(0)


if __name__ == "__main__":
    main()
