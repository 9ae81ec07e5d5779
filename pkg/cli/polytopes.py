"""
Commands over point configurations: secondary, triangulations, lafforgue, mpp, paths.
"""

from typing import Any, Dict, Optional

import click

from cli.common import artifact_options, build_config, deliver, parse_int_list
from cli.emitters import graph_to_dot, polytope_to_off, to_json
from models.configuration import PointConfiguration
from models.rational import format_vector
from services.lafforgue import an_xi_matrix, lafforgue_polytope, match_xi_columns, pointed_subdivision
from services.geometry.fans import inner_normal
from services.monotone_paths import monotone_path_polytope, sharpening_functional
from services.subdivisions import (
    enumerate_regular_triangulations,
    flip_graph,
    gkz_vector,
    load_configuration,
    secondary_polytope,
)
from utils.logger import setup_logger

logger = setup_logger(__name__)


def _interval_n(config: PointConfiguration) -> Optional[int]:
    """n when the configuration is {0, ..., n+1} in Z^1."""
    if config.lattice_rank != 1:
        return None
    if sorted(p[0] for p in config.points) != list(range(config.size)):
        return None
    return config.size - 2


@click.command("secondary")
@click.argument("config_path")
@artifact_options(["json", "off"])
def secondary(config_path, output_format, output_path, golden):
    """Secondary polytope with its vertex -> triangulation map."""
    run_config = build_config(command="secondary", config_path=config_path, output_format=output_format,
                              output_path=output_path, golden=golden)
    config = load_configuration(config_path)
    polytope, triangulations = secondary_polytope(config)
    if output_format == "off":
        deliver(run_config, polytope_to_off(polytope))
        return
    payload: Dict[str, Any] = {
        "configuration": config.to_dict(),
        "polytope": polytope.to_dict(),
        "f_vector": list(polytope.f_vector()),
        "vertices": [
            {"gkz": format_vector(polytope.vertices[i]), "triangulation": triangulations[i].to_dict()}
            for i in sorted(triangulations)
        ],
    }
    deliver(run_config, to_json(payload))


@click.command("triangulations")
@click.argument("config_path")
@artifact_options(["json", "dot"])
def triangulations(config_path, output_format, output_path, golden):
    """Regular triangulations and their flip graph."""
    run_config = build_config(command="triangulations", config_path=config_path, output_format=output_format,
                              output_path=output_path, golden=golden)
    config = load_configuration(config_path)
    graph = flip_graph(config)
    if output_format == "dot":
        deliver(run_config, graph_to_dot(graph, "flips"))
        return
    found = enumerate_regular_triangulations(config)
    payload = {
        "configuration": config.to_dict(),
        "triangulations": [
            {"index": i, "gkz": format_vector(gkz_vector(config, t)), "cells": t.to_dict()["cells"]}
            for i, t in enumerate(found)
        ],
        "flips": sorted([sorted(e) for e in graph.edges]),
    }
    deliver(run_config, to_json(payload))


@click.command("lafforgue")
@click.argument("config_path")
@artifact_options(["json", "off"])
def lafforgue(config_path, output_format, output_path, golden):
    """Lafforgue polytope and the pointed coarse subdivision of every facet."""
    run_config = build_config(command="lafforgue", config_path=config_path, output_format=output_format,
                              output_path=output_path, golden=golden)
    config = load_configuration(config_path)
    polytope = lafforgue_polytope(config)
    if output_format == "off":
        deliver(run_config, polytope_to_off(polytope))
        return
    facets = []
    for j in range(len(polytope.facets)):
        entry = {"index": j, "inner_normal": format_vector(inner_normal(polytope, j))}
        entry.update(pointed_subdivision(config, polytope, j).to_dict())
        facets.append(entry)
    payload: Dict[str, Any] = {
        "configuration": config.to_dict(),
        "polytope": polytope.to_dict(),
        "facets": facets,
    }
    n = _interval_n(config)
    if n is not None and n >= 1:
        payload["xi"] = an_xi_matrix(n).to_dict()
        payload["xi_columns"] = {str(k): v for k, v in sorted(match_xi_columns(n).items())}
    deliver(run_config, to_json(payload))


def _monotone_paths(command, config_path, sharpen, output_format, output_path, golden):
    run_config = build_config(command=command, config_path=config_path, sharpen=sharpen,
                              output_format=output_format, output_path=output_path, golden=golden)
    config = load_configuration(config_path)
    gamma = sharpening_functional(config, run_config.sharpen)
    polytope, _ = secondary_polytope(config)
    return run_config, gamma, monotone_path_polytope(polytope, gamma)


_SHARPEN = click.option("--sharpen", callback=parse_int_list, required=True,
                        help="Indices of the sharpening set, comma separated.")


@click.command("mpp")
@click.argument("config_path")
@_SHARPEN
@artifact_options(["json", "off"])
def mpp(config_path, sharpen, output_format, output_path, golden):
    """Monotone path polytope of the secondary polytope for a sharpening set."""
    run_config, gamma, result = _monotone_paths("mpp", config_path, sharpen, output_format, output_path, golden)
    if output_format == "off":
        deliver(run_config, polytope_to_off(result.polytope))
        return
    payload = {
        "gamma": gamma.to_dict(),
        "paths": [result.vertex_paths[i].to_dict() for i in sorted(result.vertex_paths)],
        "mpp": result.polytope.to_dict(),
    }
    deliver(run_config, to_json(payload))


@click.command("paths")
@click.argument("config_path")
@_SHARPEN
@artifact_options(["json"])
def paths(config_path, sharpen, output_format, output_path, golden):
    """Every monotone edge path, flagged coherent or not."""
    run_config, gamma, result = _monotone_paths("paths", config_path, sharpen, output_format, output_path, golden)
    payload = {
        "gamma": gamma.to_dict(),
        "paths": [p.to_dict() for p in result.paths],
        "coherent": len(result.coherent_paths()),
    }
    deliver(run_config, to_json(payload))
