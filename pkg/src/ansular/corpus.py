"""Bundled datasets shipped under ``ansular/data``."""

from __future__ import annotations

import json
from importlib import resources

from .gv_data import FusionDatum, PointedDatum, load_dataset

# group name -> dataset whose fusion rules are those of Rep(G)
GROUP_DATASETS = {"s3": "rep_s3", "d4": "rep_d4", "z2": "z2_trivial", "z3": "z3_quadratic", "z4": "z4"}


def dataset_names() -> list[str]:
    files = resources.files("ansular") / "data"
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def raw(name: str) -> str:
    return (resources.files("ansular") / "data" / f"{name}.json").read_text()


def load(name: str) -> FusionDatum | PointedDatum:
    return load_dataset(json.loads(raw(name)))


def corpus() -> dict[str, FusionDatum | PointedDatum]:
    return {name: load(name) for name in dataset_names()}
