import os

from ordered_values import LexTuple, AlgebraicReal
from tower import Tower

SCENARIO_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data", "scenarios")


def scenario_path(file_name: str) -> str:
    return os.path.join(SCENARIO_DIR, file_name)


def principal_tower() -> Tower:
    """x infinitely smaller than y and z: the center is x forever."""
    return Tower(3, [LexTuple([0, 1]), LexTuple([1, 0]), LexTuple([1, 1])])


def archimedean_tower() -> Tower:
    """Weights 1, √2, 2+√3: x and y alternate as centers and z never is one."""
    basis = [1, 2, 3]
    return Tower(3, [AlgebraicReal(basis, [1, 0, 0]), AlgebraicReal(basis, [0, 1, 0]), AlgebraicReal(basis, [2, 0, 1])])


def plane_irrational_tower() -> Tower:
    return Tower(2, [AlgebraicReal([1, 2], [1, 0]), AlgebraicReal([1, 2], [0, 1])])


def plane_tie_tower() -> Tower:
    return Tower(2, [LexTuple([2]), LexTuple([3])])
