from dataclasses import dataclass

from ..graphs.structures import ColoredGraph, EmbeddedBinaryTree, build_tree
from ..utils.misc import ceil_div
from ..words.generators import dejean_word


@dataclass(frozen=True)
class TreeColoringParams:
    t: int
    depth: int

    def __post_init__(self):
        if self.t < 4:
            raise ValueError("t must be at least 4")
        if self.depth < 1:
            raise ValueError("depth must be at least 1")

    @property
    def lambda_length(self):
        return (self.t - 1) // 2

    @property
    def gamma_count(self):
        return 2 * self.t + 2

    @property
    def color_count(self):
        return (self.t + 1) * 2 ** ((self.t + 1) // 2)

    def encode(self, gamma, lam):
        if not 0 <= gamma < self.gamma_count or not 0 <= lam < 2 ** self.lambda_length:
            raise ValueError("color component out of range: (%d, %d)" % (gamma, lam))
        return gamma * 2 ** self.lambda_length + lam

    def decode(self, color):
        return divmod(color, 2 ** self.lambda_length)


def tree_color_count(t, delta=3):
    """Colors used by the (1+1/t)+-free coloring of trees of maximum degree delta."""
    return 2 * (t + 1) * (delta - 1) ** ((t - 1) // 2)


def split_gamma(gamma):
    """gamma = 2*letter + subscript."""
    return divmod(gamma, 2)


def color_tree3(params: TreeColoringParams, word=None, node_budget=None) -> ColoredGraph:
    """(gamma, lambda) coloring of the binary tree truncated at ``params.depth``.

    gamma is the level's letter of the doubled Dejean word, with subscript
    level mod 2; lambda records the last left(0)/right(1) steps, zero padded
    near the root.
    """
    t, depth, lam_len = params.t, params.depth, params.lambda_length
    needed = ceil_div(depth + 1, 2) + 1
    if word is None:
        word = dejean_word(t + 1, needed, node_budget=node_budget)
    g = build_tree(EmbeddedBinaryTree(depth), k=params.color_count)
    steps = [()] * g.vertex_count
    colors = []
    for v in range(g.vertex_count):
        tags = g.tags[v]
        level = tags["level"]
        if v != g.root:
            steps[v] = (steps[g.parent[v]] + (tags["side"],))[-lam_len:]
        bits = (0,) * (lam_len - len(steps[v])) + steps[v]
        lam = int("".join(map(str, bits)), 2)
        gamma = 2 * word[level // 2] + level % 2
        tags["gamma"] = [word[level // 2], level % 2]
        tags["lambda"] = "".join(map(str, bits))
        colors.append(params.encode(gamma, lam))
    return g.with_colors(colors)


def father_from_gamma(gamma_a, gamma_b):
    """Index (0 or 1) of the father among two adjacent vertices given their
    gamma components as (letter, subscript) pairs.

    Equal letters: the father carries subscript 0. Different letters: the
    father carries subscript 1.
    """
    (letter_a, sub_a), (letter_b, sub_b) = gamma_a, gamma_b
    if {sub_a, sub_b} != {0, 1}:
        raise ValueError("gamma components %r and %r cannot be on adjacent levels" % (gamma_a, gamma_b))
    wanted = 0 if letter_a == letter_b else 1
    return 0 if sub_a == wanted else 1


def father_rule_violations(g: ColoredGraph):
    """Edges (father, son) of a tree from :func:`color_tree3` where the gamma
    components do not point at the father."""
    bad = []
    for p, v in g.edges():
        a, b = tuple(g.tags[p]["gamma"]), tuple(g.tags[v]["gamma"])
        if father_from_gamma(a, b) != 0:
            bad.append((p, v))
    return bad
