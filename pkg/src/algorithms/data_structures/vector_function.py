from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from ..errors import InputError
from .hypergraph import Hypergraph, sort_names


class VectorFunction(Mapping[str, tuple[int, ...]]):
    """A map v -> (f_1(v), ..., f_p(v)) of non-negative integers.

    Coordinates are 1-based in the public helpers (`value`, `scalar`) and
    0-based when indexing the stored tuples directly.
    """

    def __init__(self, values: Mapping[str, Iterable[int]], p: int | None = None) -> None:
        data: dict[str, tuple[int, ...]] = {}
        for vertex in sort_names(values):
            vector = tuple(int(x) for x in values[vertex])
            if any(x < 0 for x in vector):
                raise InputError(f"negative value in f({vertex})")
            if p is None:
                p = len(vector)
            if len(vector) != p:
                raise InputError(f"f({vertex}) has {len(vector)} coordinates, expected {p}")
            data[vertex] = vector
        if p is None or p < 1:
            raise InputError("a vector function needs p >= 1 coordinates")
        self._data = data
        self._p = p

    @classmethod
    def constant(cls, vertices: Iterable[str], vector: Iterable[int]) -> VectorFunction:
        vector = tuple(vector)
        return cls({v: vector for v in vertices}, p=len(vector))

    @property
    def p(self) -> int:
        return self._p

    def __getitem__(self, vertex: str) -> tuple[int, ...]:
        try:
            return self._data[vertex]
        except KeyError:
            raise InputError(f"f is not defined at {vertex!r}") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __hash__(self) -> int:
        return hash((self._p, tuple(self._data.items())))

    def __repr__(self) -> str:
        return f"VectorFunction(p={self._p}, {self._data!r})"

    def value(self, vertex: str, i: int) -> int:
        return self[vertex][i - 1]

    def total(self, vertex: str) -> int:
        return sum(self[vertex])

    def scalar(self, i: int) -> dict[str, int]:
        """The coordinate function f_i."""
        return {v: vector[i - 1] for v, vector in self._data.items()}

    def restrict(self, vertices: Iterable[str]) -> VectorFunction:
        return VectorFunction({v: self[v] for v in vertices}, p=self._p)

    def replace(self, updates: Mapping[str, Iterable[int]]) -> VectorFunction:
        data = dict(self._data)
        data.update({v: tuple(vec) for v, vec in updates.items()})
        return VectorFunction(data, p=self._p)

    def check_domain(self, graph: Hypergraph) -> None:
        missing = graph.vertex_set - self._data.keys()
        if missing:
            raise InputError(f"f is not defined at {sort_names(missing)[0]!r}")
        extra = self._data.keys() - graph.vertex_set
        if extra:
            raise InputError(f"f is defined at {sort_names(extra)[0]!r}, which is not a vertex")
