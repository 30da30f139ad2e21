from typing import Optional, Sequence

from ..exception import PreconditionError
from ..graphs.structures import CaterpillarSpec, ColoredGraph, build_caterpillar
from ..utils.logger import get_logger
from ..utils.misc import ceil_div
from ..words.exponent import RationalExponent
from ..words.generators import dejean_word, pansiot_code, thue_morse
from .vars import BLOCK_LENGTH, H_TABLES

_logger = get_logger("constructions.caterpillar")


def _caterpillar_spec(n, pendant_counts):
    if n < 1:
        raise ValueError("backbone length must be at least 1")
    if pendant_counts is None:
        return CaterpillarSpec.full(n)
    return CaterpillarSpec(n, tuple(pendant_counts))


def _paint(spec, k, backbone, pendant_color):
    g = build_caterpillar(spec, k)
    colors = list(backbone)
    for v in range(spec.backbone_length, g.vertex_count):
        colors.append(pendant_color(g.tags[v]["of"]))
    return g.with_colors(colors)


def color_cp2(n, pendant_counts: Optional[Sequence[int]] = None) -> ColoredGraph:
    """3+-free 2-coloring: Thue-Morse backbone, pendants get the other color."""
    spec = _caterpillar_spec(n, pendant_counts)
    tm = thue_morse(n)
    return _paint(spec, 2, tm, lambda i: 1 - tm[i])


def color_cp3_ternary(n, pendant_counts: Optional[Sequence[int]] = None) -> ColoredGraph:
    """2+-free 3-coloring: Thue-Morse backbone, every pendant gets color 2."""
    spec = _caterpillar_spec(n, pendant_counts)
    return _paint(spec, 3, thue_morse(n), lambda i: 2)


def color_cp3_5letters(blocks, word=None, node_budget=None) -> ColoredGraph:
    """4/3+-free 5-coloring built block by block from a 5/4+-free word w.

    Position 18i+j on the backbone gets w[i + h[p_i][0][j]] and its pendant
    gets w[i + h[p_i][1][j]], p being the Pansiot code of w.
    """
    if blocks < 1:
        raise ValueError("need at least one block")
    # the last block reads up to w[blocks - 1 + 5]
    needed = blocks + 6
    if word is None:
        word = dejean_word(5, needed, node_budget=node_budget)
    if len(word) < needed:
        raise PreconditionError("need a word of length >= %d, got %d" % (needed, len(word)))
    p = pansiot_code(word)
    backbone, pendants = [], []
    for i in range(blocks):
        for j in range(BLOCK_LENGTH):
            backbone.append(word[i + int(H_TABLES[(p[i], 0)][j])])
            pendants.append(word[i + int(H_TABLES[(p[i], 1)][j])])
    spec = CaterpillarSpec.full(blocks * BLOCK_LENGTH)
    _logger.debug("cp35 coloring with %d blocks from a word of length %d", blocks, len(word))
    return _paint(spec, 5, backbone, lambda i: pendants[i])


def color_cp3_odd_k(k, n, node_budget=None) -> ColoredGraph:
    """(1+1/eta)+-free k-coloring for odd k >= 7, eta = ceil(k/2).

    The backbone is a Dejean word over eta+1 letters and the pendants cycle
    through the eta-2 colors left over.
    """
    if k < 7 or k % 2 == 0:
        raise ValueError("k must be odd and at least 7, got %d" % k)
    eta = (k + 1) // 2
    backbone = dejean_word(eta + 1, n, node_budget=node_budget)
    return _paint(CaterpillarSpec.full(n), k, backbone, lambda i: eta + 1 + i % (eta - 2))


def cp3_threshold(k) -> RationalExponent:
    if k < 2:
        raise ValueError("need at least 2 colors")
    small = {2: RationalExponent(3), 3: RationalExponent(2), 4: RationalExponent(3, 2)}
    if k in small:
        return small[k]
    eta = (k + 1) // 2
    return RationalExponent(eta + 1, eta)


def color_cp3(k, n, node_budget=None) -> ColoredGraph:
    """Coloring of the full caterpillar with at least n backbone vertices
    attaining the maximum-degree-3 threshold for k colors."""
    if k == 2:
        return color_cp2(n)
    if k == 3:
        return color_cp3_ternary(n)
    if k == 4:
        raise PreconditionError("the 4-color construction is not provided here")
    if k in (5, 6):
        g = color_cp3_5letters(ceil_div(n, BLOCK_LENGTH), node_budget=node_budget)
        return g if k == 5 else g.with_colors(g.colors, k=k)
    if k % 2 == 0:
        g = color_cp3_odd_k(k - 1, n, node_budget=node_budget)
        return g.with_colors(g.colors, k=k)
    return color_cp3_odd_k(k, n, node_budget=node_budget)
