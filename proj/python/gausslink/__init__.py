"""Gauss paragraph planarity and virtual link group toolkit."""

from ._core import (
    DomainError,
    GaussCode,
    GaussDiagram,
    GaussParagraph,
    ParseError,
    WirtingerPresentation,
    abelianization_rank,
    alpha,
    beta,
    count_homomorphisms,
    diagram_to_paragraph,
    genus_report,
    graph_summary,
    group,
    group_of_diagram,
    invariant_table,
    is_planar_carter,
    is_planar_code,
    is_planar_criterion,
    is_realizable,
    paragraph_to_code,
    paragraph_to_diagram,
    parse_code,
    parse_paragraph,
    parse_presentation,
    realize,
    realize_paragraph,
    split_components,
    to_cyclic_form,
    to_simple_form,
)

__all__ = [
    "DomainError",
    "GaussCode",
    "GaussDiagram",
    "GaussParagraph",
    "ParseError",
    "WirtingerPresentation",
    "abelianization_rank",
    "alpha",
    "beta",
    "count_homomorphisms",
    "diagram_to_paragraph",
    "genus_report",
    "graph_summary",
    "group",
    "group_of_diagram",
    "invariant_table",
    "is_planar_carter",
    "is_planar_code",
    "is_planar_criterion",
    "is_realizable",
    "paragraph_to_code",
    "paragraph_to_diagram",
    "parse_code",
    "parse_paragraph",
    "parse_presentation",
    "realize",
    "realize_paragraph",
    "split_components",
    "to_cyclic_form",
    "to_simple_form",
]
