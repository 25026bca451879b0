__all__ = [
    "Colors",
    "Edge",
    "Json",
    "Jsons",
    "Labels",
    "TensorWord",
]

from typing import Any, Dict, FrozenSet, List, Tuple

Json = Dict[str, Any]
Jsons = List[Json]
TensorWord = Tuple[int, ...]
Edge = Tuple[int, int, int]
Colors = FrozenSet[int]
Labels = Tuple[Tuple[int, int], ...]
