"""
Mapping group exceptions.

Errors raised while composing permutations or closing permutation groups.
"""


class MappingGroupError(Exception):
    """Base exception for permutation and mapping group errors."""


class NotAPermutationError(MappingGroupError):
    """Raised when an image array is not a bijection of {0..n-1}."""

    def __init__(self, images: tuple[int, ...]) -> None:
        self.images = images
        super().__init__(f"Images {list(images)} do not form a permutation")


class DegreeMismatchError(MappingGroupError):
    """Raised when permutations of different degrees are combined."""

    def __init__(self, left: int, right: int) -> None:
        self.left = left
        self.right = right
        super().__init__(f"Cannot compose permutations of degree {left} and {right}")


class ClosureLimitError(MappingGroupError):
    """Raised when a group closure grows beyond the configured cap."""

    def __init__(self, cap: int) -> None:
        self.cap = cap
        super().__init__(f"Permutation group closure exceeded {cap} elements")


class InnerMapError(MappingGroupError):
    """Raised when a supposedly inner mapping moves the identity element."""

    def __init__(self, label: str, image: int) -> None:
        self.label = label
        self.image = image
        super().__init__(f"{label} maps the identity element 0 to {image}")
