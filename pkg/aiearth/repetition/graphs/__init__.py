from .structures import (
    CaterpillarSpec,
    TreeSpec,
    EmbeddedBinaryTree,
    Ball,
    ColoredGraph,
    ball_size,
    build_caterpillar,
    build_tree,
    build_structure,
)
from .check import (
    PathWitness,
    check_colored,
    check_extension,
    distance,
    same_color_within,
    close_vertex_set,
    pigeonhole_colors,
    pigeonhole_certificate,
)
from .formats import graph_to_dict, graph_from_dict, dumps_graph, loads_graph, load_graph, to_dot
