"""DoF layout: element tables, sections, closure numbering and maps."""

from plexlayout.layout.dofs import DofLayout, lagrange_dof_layout
from plexlayout.layout.section import Section, create_section, renumber_dof_values
from plexlayout.layout.closure import local_facet_number, ordered_cell_closure
from plexlayout.layout.maps import CellMap, FacetMaps, cell_node_map, facet_maps
from plexlayout.layout.numbering import global_numbering, owned_dof_counts, owned_dof_mask

__all__ = [
    "CellMap",
    "DofLayout",
    "FacetMaps",
    "Section",
    "cell_node_map",
    "create_section",
    "facet_maps",
    "global_numbering",
    "lagrange_dof_layout",
    "local_facet_number",
    "ordered_cell_closure",
    "owned_dof_counts",
    "owned_dof_mask",
    "renumber_dof_values",
]
