"""
A_n commands: an tree / quiver / perversity, and the monodromy check.
"""

from typing import Any, Dict

import click

from cli.common import an_options, artifact_options, build_config, deliver, numeric_overrides
from cli.emitters import to_json
from services.an import (
    canonical_insertions,
    circuits,
    degeneration,
    is_strong,
    perversity as perversity_of,
    quiver_from_J,
    quiver_to_dot,
    tree_to_dot,
    tree_yoneda_dimensions,
    vanishing_tree,
    yoneda_dimensions,
)
from services.an.yoneda import MAX_YONEDA_N
from services.monodromy import surjectivity_sweep, verify_theorem
from utils.errors import NumericError
from utils.logger import setup_logger

logger = setup_logger(__name__)


@click.group("an")
def an():
    """Combinatorics of maximal degenerations of the A_n interval."""


@an.command("tree")
@an_options
@click.option("--layout", type=click.Choice(["shuffle", "blocks"]), default="shuffle", show_default=True,
              help="shuffle: fundamental radar screen; blocks: the written order of R(J).")
@artifact_options(["json", "dot"], default="dot")
def tree(n, J, layout, output_format, output_path, golden):
    """Vanishing tree built from the canonical stage insertions."""
    run_config = build_config(command="an-tree", n=n, J=J, layout=layout, output_format=output_format,
                              output_path=output_path, golden=golden)
    insertions = canonical_insertions(n, run_config.J, layout=layout)
    result = vanishing_tree(n, run_config.J, insertions)
    logger.info("an tree n=%d J=%s: stage edge counts %s", n, run_config.J, result.stage_counts())
    if output_format == "dot":
        deliver(run_config, tree_to_dot(result))
        return
    payload = {
        "degeneration": degeneration(n, run_config.J).to_dict(),
        "circuits": [list(c) for c in circuits(n, run_config.J)],
        "insertions": [ins.to_dict() for ins in insertions],
        "tree": result.to_dict(),
        "stage_counts": result.stage_counts(),
        "thimble_hom": tree_yoneda_dimensions(result).tolist(),
    }
    deliver(run_config, to_json(payload))


@an.command("quiver")
@an_options
@artifact_options(["json", "dot"], default="dot")
def quiver(n, J, output_format, output_path, golden):
    """The directed A_n quiver of a degeneration."""
    run_config = build_config(command="an-quiver", n=n, J=J, output_format=output_format,
                              output_path=output_path, golden=golden)
    result = quiver_from_J(n, run_config.J)
    if output_format == "dot":
        deliver(run_config, quiver_to_dot(result))
        return
    deliver(run_config, to_json(result.to_dict()))


@an.command("perversity")
@an_options
@artifact_options(["json"])
def perversity(n, J, output_format, output_path, golden):
    """Perversity function, and Ext data of the exceptional collection for small n."""
    run_config = build_config(command="an-perversity", n=n, J=J, output_format=output_format,
                              output_path=output_path, golden=golden)
    payload: Dict[str, Any] = {
        "degeneration": degeneration(n, run_config.J).to_dict(),
        "perversity": list(perversity_of(n, run_config.J)),
        "quiver": quiver_from_J(n, run_config.J).to_dict(),
    }
    if n <= MAX_YONEDA_N:
        payload["yoneda"] = yoneda_dimensions(n, run_config.J).tolist()
        payload["strong"] = is_strong(n, run_config.J)
    deliver(run_config, to_json(payload))


@click.command("monodromy")
@an_options
@click.option("--s", "s", type=float, default=None, help="Regeneration parameter (adaptive when omitted).")
@click.option("--seed", type=int, default=None, help="First coefficient seed.")
@click.option("--trials", type=int, default=1, show_default=True)
@click.option("--epsilon", type=float, default=None, help="Radar screen offset.")
@click.option("--gap-ratio", "gap_ratio", type=float, default=None)
@click.option("--residual", type=float, default=None)
@click.option("--sweep", is_flag=True, help="Branch-choice surjectivity sweep for the single circuit.")
@artifact_options(["json"])
def monodromy(n, J, s, seed, trials, epsilon, gap_ratio, residual, sweep, output_format, output_path, golden):
    """Numeric vanishing trees of regenerated pencils against the combinatorial prediction."""
    run_config = build_config(command="monodromy", n=n, J=J, s=s, seed=seed, trials=trials, epsilon=epsilon,
                              gap_ratio=gap_ratio, residual=residual, sweep=sweep,
                              output_format=output_format, output_path=output_path, golden=golden)
    with numeric_overrides(run_config):
        if sweep:
            report = surjectivity_sweep(n, s=s, seed=seed, epsilon=epsilon)
            deliver(run_config, to_json(report.to_dict()))
            if not report.complete:
                raise NumericError(f"sweep realized {len(report.realized)} of {report.expected} classes",
                                   report.to_dict())
            return
        report = verify_theorem(n, run_config.J, s=s, trials=trials, seed=seed, epsilon=epsilon)
    deliver(run_config, to_json(report.to_dict()))
    if not report.all_match:
        raise NumericError(f"{report.mismatches} of {trials} trials disagree with the predicted tree",
                           {"mismatched_seeds": [t.seed for t in report.trials if not t.match]})
