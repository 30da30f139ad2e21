import abc
import random


class ColorOrdering(metaclass=abc.ABCMeta):
    @abc.abstractmethod
    def order(self, allowed: int) -> list:
        """Order in which colors 0..allowed-1 are tried."""


class SequentialColorOrdering(ColorOrdering):
    def order(self, allowed):
        return list(range(allowed))


class RandomColorOrdering(ColorOrdering):
    def __init__(self, seed=None) -> None:
        self.rng = random.Random(seed)

    def order(self, allowed):
        return self.rng.sample(range(allowed), allowed)
