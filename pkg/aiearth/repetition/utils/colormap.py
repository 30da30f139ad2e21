import numpy as np


def create_pascal_label_colormap():
    colormap = np.zeros((256, 3), dtype=int)
    ind = np.arange(256, dtype=int)
    for shift in reversed(list(range(8))):
        for channel in range(3):
            colormap[:, channel] |= ((ind >> channel) & 1) << shift
        ind >>= 3
    return colormap


def generate_color_code_list(color_count):
    """Fill colours for vertex colours 0..color_count-1; index 0 of the
    colormap (black) is skipped and the palette wraps after 255 entries."""
    color_code_list = []
    colormap = create_pascal_label_colormap()
    for i in range(color_count):
        rgb = tuple(colormap[i % 255 + 1])
        color_code_list.append(rgb2color_code(rgb))
    return color_code_list


def rgb2color_code(rgb_tuple):
    return "#" + "".join(int_to_color_string(int(c)) for c in rgb_tuple)


def int_to_color_string(i: int):
    assert 0 <= i < 256
    return "%02X" % i
