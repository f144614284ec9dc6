import platform
from dataclasses import asdict, is_dataclass
from typing import Iterator, List, Optional

import numpy as np

from arcperm.perm_core import Permutation


class DisjointSet:
    """Union-find over the vertices 1..count."""

    def __init__(self, count: int):
        self.parent = list(range(count + 1))
        self.rank = [0] * (count + 1)

    def find(self, element: int) -> int:
        if self.parent[element] != element:
            self.parent[element] = self.find(self.parent[element])
        return self.parent[element]

    def unite(self, first: int, second: int) -> bool:
        rep_first, rep_second = self.find(first), self.find(second)
        if rep_first == rep_second:
            return False
        if self.rank[rep_first] < self.rank[rep_second]:
            rep_first, rep_second = rep_second, rep_first
        self.parent[rep_second] = rep_first
        if self.rank[rep_first] == self.rank[rep_second]:
            self.rank[rep_first] += 1
        return True

    def to_list(self) -> List[List[int]]:
        """Groups as sorted lists, ordered by their smallest element."""
        groups = {}
        for element in range(1, len(self.parent)):
            groups.setdefault(self.find(element), []).append(element)
        return sorted(groups.values())


def random_permutations(samples: int, max_n: int, seed: int, min_n: int = 1) -> Iterator[Permutation]:
    """`samples` uniform permutations with sizes drawn uniformly from min_n..max_n."""
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        n = int(rng.integers(min_n, max_n + 1))
        yield Permutation(tuple(int(v) for v in rng.permutation(n) + 1))


def collect_run_configuration(args, extra: Optional[dict] = None) -> dict:
    args_dict = asdict(args) if is_dataclass(args) else dict(vars(args))
    args_dict['MACHINE'] = platform.node()
    args_dict['PYTHON'] = platform.python_version()
    if extra:
        args_dict.update(extra)
    return args_dict
