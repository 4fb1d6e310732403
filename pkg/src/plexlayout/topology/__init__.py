"""Mesh topology: stratified point DAG and labels."""

from plexlayout.topology.label import Label
from plexlayout.topology.plex import Plex, Stratum, build_from_cones, euler_characteristic

__all__ = [
    "Label",
    "Plex",
    "Stratum",
    "build_from_cones",
    "euler_characteristic",
]
