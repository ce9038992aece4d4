"""Command-line front end.

Subcommands: det (determinants vs. closed forms for one tree), verify
(identity sweeps over exhaustive or random tree corpora), perm-table
(signed permutation statistics), wiener, gen-tree, and enumerate.

Exit status contract: 0 all checks passed, 1 a mathematical identity
failed, 2 invalid input or usage.  All randomness flows from --seed, so
any reported failure is replayable.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass

import click

from . import closedforms, permlab, wiener
from ._kernels import BACKEND
from .exactdet import check_dodgson_identity, det_bareiss
from .polyring import Poly, qbracket
from .qmatrix import build_d, build_d_plus_xJ, build_dq, build_dq_star, minor
from .treekit import (
    MAX_EXHAUSTIVE_N,
    InvalidTreeError,
    WeightedTree,
    enumerate_trees,
    load_tree,
    path_tree,
    pendant_first_last,
    prufer_decode,
    random_tree,
    random_trees,
    star_tree,
    tree_to_json_dict,
    tree_to_text,
)

DEFAULT_EXHAUSTIVE_CAP = 7

EXIT_IDENTITY_FAILURE = 1
EXIT_USAGE = 2


def _fail_usage(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_USAGE)


# -- tree sources ----------------------------------------------------------


def tree_source_options(f):
    opts = [
        click.option("--tree", "tree_file", metavar="FILE", default=None,
                     help="Read the tree from FILE (text or JSON format)."),
        click.option("--prufer", "prufer_seq", metavar='"A B ..."', default=None,
                     help="Decode a Prufer sequence (n = length + 2)."),
        click.option("--random", "random_n", type=int, default=None, metavar="N",
                     help="Random labeled tree on N vertices."),
        click.option("--path", "path_n", type=int, default=None, metavar="N",
                     help="Path on N vertices."),
        click.option("--star", "star_n", type=int, default=None, metavar="N",
                     help="Star on N vertices (center is the last vertex)."),
        click.option("--weights", "weights_text", metavar='"W1 W2 ..."', default=None,
                     help="Edge weights for --prufer/--path/--star (default all 1)."),
        click.option("--max-weight", type=int, default=1, show_default=True,
                     help="Weight bound for --random."),
        click.option("--seed", type=int, default=0, show_default=True,
                     help="Seed for --random."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise click.UsageError(f"{what} must be whitespace-separated integers, got {text!r}")


def resolve_tree(tree_file, prufer_seq, random_n, path_n, star_n,
                 weights_text, max_weight, seed) -> WeightedTree:
    chosen = [x for x in (tree_file, prufer_seq, random_n, path_n, star_n) if x is not None]
    if len(chosen) != 1:
        raise click.UsageError(
            "exactly one tree source is required: --tree, --prufer, --random, --path or --star"
        )
    weights = _parse_ints(weights_text, "--weights") if weights_text is not None else None
    if tree_file is not None:
        if weights is not None:
            raise click.UsageError("--weights does not apply to --tree")
        try:
            return load_tree(tree_file)
        except OSError as exc:
            raise click.UsageError(f"cannot read {tree_file}: {exc}")
    if prufer_seq is not None:
        seq = _parse_ints(prufer_seq, "--prufer") if prufer_seq.strip() else []
        n = len(seq) + 2
        return prufer_decode(seq, n, weights if weights is not None else [1] * (n - 1))
    if random_n is not None:
        if weights is not None:
            raise click.UsageError("--weights does not apply to --random (use --max-weight)")
        return random_tree(random_n, max_weight, seed)
    if path_n is not None:
        return path_tree(path_n, weights if weights is not None else [1] * (path_n - 1))
    return star_tree(star_n, weights if weights is not None else [1] * (star_n - 1))


def format_tree_line(t: WeightedTree) -> str:
    edges = " ".join(f"({u},{v},{w})" for u, v, w in t.edges)
    return f"tree: n={t.n} edges={edges}"


# -- output plumbing -------------------------------------------------------

output_option = click.option(
    "--output", "fmt", type=click.Choice(["plain", "json", "csv"]),
    default="plain", show_default=True, help="Output format.",
)


def emit_json(payload: dict):
    click.echo(json.dumps(payload, indent=2))


def emit_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    click.echo(buf.getvalue().rstrip("\n"))


# -- det -------------------------------------------------------------------


@dataclass(frozen=True)
class DetCheck:
    name: str
    determinant: Poly
    closed: Poly

    @property
    def passed(self) -> bool:
        return self.determinant == self.closed


def det_checks(t: WeightedTree) -> list[DetCheck]:
    ws = t.weights
    return [
        DetCheck("D", det_bareiss(build_d(t)), Poly([closedforms.bkn_det(ws)])),
        DetCheck("D+xJ", det_bareiss(build_d_plus_xJ(t)), closedforms.bkn_det_xj(ws)),
        DetCheck("Dq*", det_bareiss(build_dq_star(t)), closedforms.dq_star_closed(ws)),
        DetCheck("Dq", det_bareiss(build_dq(t)), closedforms.dq_closed(ws)),
    ]


@click.group()
@click.version_option(package_name="qdistmat")
def main():
    """Exact q-distance matrices of weighted trees."""


@main.command("det")
@tree_source_options
@output_option
def cmd_det(tree_file, prufer_seq, random_n, path_n, star_n,
            weights_text, max_weight, seed, fmt):
    """Determinants of all four matrix constructions vs. closed forms."""
    try:
        t = resolve_tree(tree_file, prufer_seq, random_n, path_n, star_n,
                         weights_text, max_weight, seed)
    except InvalidTreeError as exc:
        _fail_usage(str(exc))
    if t.n < 2:
        raise click.UsageError("det needs a tree with at least 2 vertices")
    checks = det_checks(t)
    ok = all(c.passed for c in checks)
    if fmt == "json":
        emit_json({
            "command": "det",
            "tree": tree_to_json_dict(t),
            "checks": [
                {"name": c.name, "determinant": str(c.determinant),
                 "closed": str(c.closed), "pass": c.passed}
                for c in checks
            ],
            "pass": ok,
        })
    elif fmt == "csv":
        emit_csv(["name", "determinant", "closed", "pass"],
                 [(c.name, str(c.determinant), str(c.closed), c.passed) for c in checks])
    else:
        click.echo(format_tree_line(t))
        for c in checks:
            click.echo(f"det({c.name}) = {c.determinant}")
            click.echo(f"closed({c.name}) = {c.closed}")
            click.echo(f"check({c.name}): {'PASS' if c.passed else 'FAIL'}")
        passed = sum(c.passed for c in checks)
        click.echo(f"result: {'PASS' if ok else 'FAIL'} ({passed}/{len(checks)})")
    if not ok:
        sys.exit(EXIT_IDENTITY_FAILURE)


# -- verify ----------------------------------------------------------------


def identity_suite(t: WeightedTree) -> list[tuple[str, bool]]:
    """Every executable identity for one tree; (name, passed) pairs."""
    ws = t.weights
    n = t.n
    results = [(f"det({c.name})==closed", c.passed) for c in det_checks(t)]
    if t.is_simple():
        results.append(
            ("graham_pollak", det_bareiss(build_d(t)) == Poly([closedforms.graham_pollak(n)]))
        )
        results.append(
            ("dq_simple", det_bareiss(build_dq(t)) == closedforms.dq_simple(n))
        )
        results.append(
            ("dq_star_simple", det_bareiss(build_dq_star(t)) == closedforms.dq_star_simple(n))
        )
    if n >= 3:
        results.append(("dodgson_identity", check_dodgson_identity(build_dq(t))))
        tt = pendant_first_last(t, seed=n)
        dq = build_dq(tt)
        first = next(w for (u, v, w) in tt.edges if 1 in (u, v))
        last = next(w for (u, v, w) in tt.edges if n in (u, v))
        rest = [w for (u, v, w) in tt.edges if 1 not in (u, v) and n not in (u, v)]
        corner = det_bareiss(minor(dq, {1}, {n}))
        results.append(
            ("corner_minor", corner == closedforms.corner_minor_closed(first, last, rest))
        )
        if n >= 4:
            lhs = (
                det_bareiss(dq)
                + qbracket(2 * first) * det_bareiss(minor(dq, {1}, {1}))
                + qbracket(2 * last) * det_bareiss(minor(dq, {n}, {n}))
                + qbracket(2 * first) * qbracket(2 * last) * det_bareiss(minor(dq, {1, n}, {1, n}))
            )
            results.append(("recurrence16", not lhs))
    if n <= 8:
        report = permlab.generating_function_check(t)
        results.append(("genfun_N", report.n_ok))
        results.append(("genfun_M", report.m_ok))
    return results


def _run_verify_corpus(trees, check_structure_independence):
    checks = 0
    failures = []
    det_profiles = {}
    count = 0
    for t in trees:
        count += 1
        for name, ok in identity_suite(t):
            checks += 1
            if not ok:
                failures.append({"tree": tree_to_json_dict(t), "check": name})
        if check_structure_independence:
            key = (t.n, tuple(sorted(t.weights)))
            profile = tuple(
                det_bareiss(b(t)).coeffs
                for b in (build_d, build_dq, build_dq_star, build_d_plus_xJ)
            )
            det_profiles.setdefault(key, set()).add(profile)
    indep_ok = all(len(v) == 1 for v in det_profiles.values())
    if check_structure_independence:
        checks += len(det_profiles)
        if not indep_ok:
            failures.append({"tree": None, "check": "structure_independence"})
    return count, checks, failures


@main.command("verify")
@click.option("--exhaustive", "exhaustive_n", type=int, default=None, metavar="N",
              help="Check every labeled tree on N vertices (unit weights).")
@click.option("--random", "trials", type=int, default=None, metavar="T",
              help="Check T random weighted trees.")
@click.option("--trials", "trials_alias", type=int, default=None, metavar="T",
              help="Alias for --random T.")
@click.option("--n-max", type=int, default=7, show_default=True,
              help="Largest vertex count for random trees (min 2).")
@click.option("--max-weight", type=int, default=4, show_default=True,
              help="Largest edge weight for random trees.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--weight", type=int, default=1, show_default=True,
              help="Uniform edge weight for --exhaustive.")
@click.option("--allow-n8", is_flag=True,
              help="Raise the exhaustive cap from 7 to 8 (slow: 262144 trees).")
@output_option
def cmd_verify(exhaustive_n, trials, trials_alias, n_max, max_weight, seed,
               weight, allow_n8, fmt):
    """Run the full identity suite over a corpus of trees."""
    if trials is None:
        trials = trials_alias
    if (exhaustive_n is None) == (trials is None):
        raise click.UsageError("choose exactly one of --exhaustive N or --random T")
    if exhaustive_n is not None:
        cap = MAX_EXHAUSTIVE_N if allow_n8 else DEFAULT_EXHAUSTIVE_CAP
        if not 2 <= exhaustive_n <= cap:
            raise click.UsageError(
                f"--exhaustive supports 2..{cap}"
                + ("" if allow_n8 else " (use --allow-n8 to raise the cap)")
            )
        if exhaustive_n == MAX_EXHAUSTIVE_N:
            click.echo("warning: exhaustive n=8 sweeps 262144 trees through the "
                       "full identity suite; expect on the order of an hour",
                       err=True)
        trees = enumerate_trees(exhaustive_n, weight)
        mode = {"mode": "exhaustive", "n": exhaustive_n, "weight": weight}
        count, checks, failures = _run_verify_corpus(trees, True)
    else:
        if trials < 1:
            raise click.UsageError("--random needs at least 1 trial")
        if n_max < 2:
            raise click.UsageError("--n-max must be at least 2")
        trees = random_trees(trials, 2, n_max, max_weight, seed)
        mode = {"mode": "random", "trials": trials, "n_max": n_max,
                "max_weight": max_weight, "seed": seed}
        count, checks, failures = _run_verify_corpus(trees, False)
    ok = not failures
    if fmt == "json":
        emit_json({
            "command": "verify", **mode, "trees": count, "checks": checks,
            "failures": failures, "pass": ok,
        })
    elif fmt == "csv":
        emit_csv(["trees", "checks", "failures", "pass"],
                 [(count, checks, len(failures), ok)])
    else:
        desc = (f"exhaustive n={mode['n']} weight={mode['weight']}"
                if mode["mode"] == "exhaustive"
                else f"random trials={mode['trials']} n_max={mode['n_max']} "
                     f"max_weight={mode['max_weight']} seed={mode['seed']}")
        click.echo(f"verify: {desc}")
        click.echo(f"trees: {count}")
        click.echo(f"checks: {checks}")
        click.echo(f"failures: {len(failures)}")
        for f in failures:
            click.echo(f"FAIL {f['check']} on {f['tree']}")
        click.echo(f"result: {'PASS' if ok else 'FAIL'}")
    if not ok:
        sys.exit(EXIT_IDENTITY_FAILURE)


# -- perm-table --------------------------------------------------------------


@main.command("perm-table")
@tree_source_options
@click.option("--k-max", type=int, default=None,
              help="Largest k to report (default: largest nonzero entry).")
@output_option
def cmd_perm_table(tree_file, prufer_seq, random_n, path_n, star_n,
                   weights_text, max_weight, seed, k_max, fmt):
    """Signed permutation statistics: oracle, determinant, and closed forms."""
    try:
        t = resolve_tree(tree_file, prufer_seq, random_n, path_n, star_n,
                         weights_text, max_weight, seed)
    except InvalidTreeError as exc:
        _fail_usage(str(exc))
    if t.n < 2 or t.n > permlab.PERM_MAX_N:
        raise click.UsageError(f"perm-table supports 2 <= n <= {permlab.PERM_MAX_N}")
    simple = t.is_simple()
    tables = {
        "N": (permlab.n_table_oracle(t), permlab.n_table_from_det(t),
              permlab.n_closed_table(t.n) if simple else None),
        "M": (permlab.m_table_oracle(t), permlab.m_table_from_det(t),
              permlab.m_closed_table(t.n) if simple else None),
    }
    ok = True
    payload_tables = {}
    plain = [format_tree_line(t)]
    csv_rows = []
    for kind, (oracle, fromdet, closed) in tables.items():
        top = max(oracle.max_k(), fromdet.max_k(), max(closed, default=0) if closed else 0)
        if k_max is not None:
            top = min(top, k_max)
        det_ok = oracle.same_table(fromdet)
        closed_ok = (
            None if closed is None
            else all(oracle.coeff(k) == closed.get(k, 0) for k in range(top + 1))
        )
        ok = ok and det_ok and closed_ok is not False
        payload_tables[kind] = {
            "oracle": oracle.to_json_dict(),
            "determinant": fromdet.to_json_dict(),
            "closed": ({str(k): v for k, v in sorted(closed.items()) if k <= top}
                       if closed is not None else None),
            "oracle_vs_determinant": det_ok,
            "oracle_vs_closed": closed_ok,
        }
        plain.append(f"{kind}-table (k: oracle / determinant / closed):")
        for k in range(top + 1):
            cval = "n/a (weighted)" if closed is None else str(closed.get(k, 0))
            plain.append(f"  {k}: {oracle.coeff(k)} / {fromdet.coeff(k)} / {cval}")
            csv_rows.append((kind, k, oracle.coeff(k), fromdet.coeff(k),
                             "" if closed is None else closed.get(k, 0)))
        closed_desc = "n/a (weighted)" if closed_ok is None else ("PASS" if closed_ok else "FAIL")
        plain.append(f"agreement({kind}): determinant {'PASS' if det_ok else 'FAIL'}, "
                     f"closed {closed_desc}")
    plain.append(f"result: {'PASS' if ok else 'FAIL'}")
    if fmt == "json":
        emit_json({"command": "perm-table", "tree": tree_to_json_dict(t),
                   "simple": simple, "tables": payload_tables, "pass": ok})
    elif fmt == "csv":
        emit_csv(["kind", "k", "oracle", "determinant", "closed"], csv_rows)
    else:
        for line in plain:
            click.echo(line)
    if not ok:
        sys.exit(EXIT_IDENTITY_FAILURE)


# -- wiener ------------------------------------------------------------------


@main.command("wiener")
@tree_source_options
@output_option
def cmd_wiener(tree_file, prufer_seq, random_n, path_n, star_n,
               weights_text, max_weight, seed, fmt):
    """Wiener polynomial and Wiener index."""
    try:
        t = resolve_tree(tree_file, prufer_seq, random_n, path_n, star_n,
                         weights_text, max_weight, seed)
    except InvalidTreeError as exc:
        _fail_usage(str(exc))
    poly = wiener.wiener_poly(t)
    index = poly.derivative_at_one()
    if fmt == "json":
        emit_json({"command": "wiener", "tree": tree_to_json_dict(t),
                   "polynomial": str(poly), "coeffs": poly.json_coeffs(),
                   "index": index})
    elif fmt == "csv":
        emit_csv(["k", "coefficient"],
                 [(k, c) for k, c in enumerate(poly.coeffs)])
    else:
        click.echo(format_tree_line(t))
        click.echo(f"wiener polynomial: {poly}")
        click.echo(f"wiener index: {index}")


# -- gen-tree ----------------------------------------------------------------


@main.command("gen-tree")
@tree_source_options
@click.option("-o", "--out", "out_file", metavar="FILE", default=None,
              help="Write to FILE instead of stdout.")
@click.option("--output", "fmt", type=click.Choice(["plain", "json"]),
              default="plain", show_default=True,
              help="plain = text tree format, json = JSON tree format.")
def cmd_gen_tree(tree_file, prufer_seq, random_n, path_n, star_n,
                 weights_text, max_weight, seed, out_file, fmt):
    """Generate a tree and write it in the tree file format."""
    try:
        t = resolve_tree(tree_file, prufer_seq, random_n, path_n, star_n,
                         weights_text, max_weight, seed)
    except InvalidTreeError as exc:
        _fail_usage(str(exc))
    text = (json.dumps(tree_to_json_dict(t), indent=2) + "\n") if fmt == "json" \
        else tree_to_text(t)
    if out_file:
        with open(out_file, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


# -- enumerate ---------------------------------------------------------------


@main.command("enumerate")
@click.option("--exhaustive", "exhaustive_n", type=int, required=True, metavar="N",
              help="Vertex count (all labeled trees).")
@click.option("--weight", type=int, default=1, show_default=True,
              help="Uniform edge weight.")
@click.option("--allow-n8", is_flag=True,
              help="Raise the cap from 7 to 8 (262144 trees).")
@output_option
def cmd_enumerate(exhaustive_n, weight, allow_n8, fmt):
    """Stream every labeled tree on N vertices."""
    cap = MAX_EXHAUSTIVE_N if allow_n8 else DEFAULT_EXHAUSTIVE_CAP
    if not 2 <= exhaustive_n <= cap:
        raise click.UsageError(
            f"--exhaustive supports 2..{cap}"
            + ("" if allow_n8 else " (use --allow-n8 to raise the cap)")
        )
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["tree", "u", "v", "w"])
        for idx, t in enumerate(enumerate_trees(exhaustive_n, weight)):
            for u, v, w in t.edges:
                writer.writerow([idx, u, v, w])
        click.echo(buf.getvalue().rstrip("\n"))
    elif fmt == "json":
        for t in enumerate_trees(exhaustive_n, weight):
            click.echo(json.dumps(tree_to_json_dict(t)))
    else:
        for t in enumerate_trees(exhaustive_n, weight):
            click.echo(" ".join([str(t.n)] + [f"{u},{v},{w}" for u, v, w in t.edges]))


@main.command("backend")
def cmd_backend():
    """Report which kernel backend is active."""
    click.echo(BACKEND)


if __name__ == "__main__":
    main()
