"""Object spaces: a distance plus a weighted-mean interpolation each."""

from . import clusterings, rankings, strings

__all__ = ["strings", "clusterings", "rankings"]
