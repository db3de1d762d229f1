"""Exception types shared across the library."""


class ResourceCapExceeded(RuntimeError):
    """A search hit its configured resource cap.

    Raised instead of silently truncating; callers may retry with a
    larger cap.
    """
