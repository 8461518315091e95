from __future__ import annotations

import heapq
from typing import Hashable, Optional


class BucketQueue:
    """Priority queue over small integer keys with decrease-key.

    Items sharing a key leave in increasing `rank` order. Entries made stale by
    `decrease_key` are skipped lazily on extraction.
    """

    def __init__(self) -> None:
        self.buckets: dict[int, list[tuple[int, Hashable]]] = {}
        self.bucket_keys: list[int] = []
        self.keys: dict[Hashable, int] = {}
        self.ranks: dict[Hashable, int] = {}
        self.total_nodes: int = 0

    def __len__(self) -> int:
        return self.total_nodes

    def __contains__(self, value: Hashable) -> bool:
        return value in self.keys

    def insert(self, key: int, value: Hashable, rank: int = 0) -> None:
        if value in self.keys:
            raise ValueError("Value is already queued.")
        self.keys[value] = key
        self.ranks[value] = rank
        self._push(key, value)
        self.total_nodes += 1

    def min_key(self) -> Optional[int]:
        while self.bucket_keys:
            key = self.bucket_keys[0]
            bucket = self.buckets[key]
            while bucket and self.keys.get(bucket[0][1]) != key:
                heapq.heappop(bucket)
            if bucket:
                return key
            heapq.heappop(self.bucket_keys)
            del self.buckets[key]
        return None

    def extract_min(self) -> Optional[tuple[int, Hashable]]:
        key = self.min_key()
        if key is None:
            return None
        _, value = heapq.heappop(self.buckets[key])
        del self.keys[value]
        self.total_nodes -= 1
        return key, value

    def decrease_key(self, value: Hashable, new_key: int) -> None:
        current = self.keys[value]
        if new_key > current:
            raise ValueError("New key is greater than the current key.")
        if new_key == current:
            return
        self.keys[value] = new_key
        self._push(new_key, value)

    def _push(self, key: int, value: Hashable) -> None:
        bucket = self.buckets.get(key)
        if bucket is None:
            bucket = self.buckets[key] = []
            heapq.heappush(self.bucket_keys, key)
        heapq.heappush(bucket, (self.ranks[value], value))
