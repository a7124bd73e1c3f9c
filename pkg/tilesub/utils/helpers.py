"""
Helper functions shared across tilesub.
"""

import json
from collections import deque
from typing import Any, Iterable, List, Sequence


def orbit(start: int, involutions: Iterable[Sequence[int]]) -> List[int]:
    """Darts reachable from start under the given involutions, sorted."""
    perms = list(involutions)
    seen = {start}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for perm in perms:
            e = perm[d]
            if e not in seen:
                seen.add(e)
                queue.append(e)
    return sorted(seen)


def canonical_json(data: Any) -> str:
    """Sorted keys, no insignificant whitespace."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def string_keys(mapping: dict) -> dict:
    return {str(k): v for k, v in mapping.items()}
