import random

import numpy as np


def fix_random_seeds(seed=0):
    """
    Fix random seeds.
    """
    random.seed(seed)
    np.random.seed(seed)


def ceil_div(a, b):
    return -(-a // b)
