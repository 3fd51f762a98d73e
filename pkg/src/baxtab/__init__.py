"""Tableaux, Weyl-chamber walks, open arc diagrams and Baxter numbers."""

from baxtab.arcs import (
    DiagramKind,
    Flavor,
    OpenArcDiagram,
    PatternQuery,
    avoids,
    contains_pattern,
    generate_diagrams,
    max_nesting,
    nesting_level,
)
from baxtab.bijections import (
    FilledTableau,
    diagram_to_tableau,
    format_walk,
    tableau_to_diagram,
    tableau_to_walk,
    walk_to_tableau,
)
from baxtab.errors import BaxtabError
from baxtab.tableaux import (
    EMPTY,
    Partition,
    TableauKind,
    TableauSequence,
    count_syt_bounded_height,
    enumerate_tableaux,
    validate_sequence,
)
from baxtab.trees import builtin_rule, expand_levels, level_sizes, sibling_profile
from baxtab.walks import (
    BOUNDARY,
    Chamber,
    LatticeWalk,
    Model,
    StepRule,
    count_walks,
    delta,
    enumerate_walks,
    quadrant_count,
    reflection_count,
)

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY",
    "EMPTY",
    "BaxtabError",
    "Chamber",
    "DiagramKind",
    "FilledTableau",
    "Flavor",
    "LatticeWalk",
    "Model",
    "OpenArcDiagram",
    "Partition",
    "PatternQuery",
    "StepRule",
    "TableauKind",
    "TableauSequence",
    "avoids",
    "builtin_rule",
    "contains_pattern",
    "count_syt_bounded_height",
    "count_walks",
    "delta",
    "diagram_to_tableau",
    "enumerate_tableaux",
    "enumerate_walks",
    "expand_levels",
    "format_walk",
    "generate_diagrams",
    "level_sizes",
    "max_nesting",
    "nesting_level",
    "quadrant_count",
    "reflection_count",
    "sibling_profile",
    "tableau_to_diagram",
    "tableau_to_walk",
    "validate_sequence",
    "walk_to_tableau",
]
